#!/usr/bin/python3
# -*- coding: utf-8 -*-

from unittest import TestCase

from hertzsprung import BFile
from hertzsprung import EmptyOverlapError
from hertzsprung import MarkerRegistry
from hertzsprung import Permutation
from hertzsprung import TruncatedSeries
from hertzsprung import avoider_series
from hertzsprung import check_antichain
from hertzsprung import oeis_compare


class OeisCompareTest(TestCase):

    def setUp(self):
        """
            Prepare the series 1, 1, 2, 6, 24.
        """

        self.registry = MarkerRegistry()
        self.series = TruncatedSeries(self.registry, [self.registry.constant(value) for value in (1, 1, 2, 6, 24)])

    # oeis_compare()
    # ==============

    def test_oeis_compare_match(self):
        """
            Test comparing a series with a b-file that has the same terms.

            Expected Result: The comparison matches on the common indices.
        """

        report = oeis_compare(self.series, BFile([(0, 1), (1, 1), (2, 2), (3, 6), (4, 24), (5, 120)]))

        self.assertTrue(report.matches)
        self.assertIsNone(report.first_mismatch)
        self.assertEqual((0, 4), report.indices)
        self.assertEqual(5, len(report.comparisons))

    def test_oeis_compare_offset(self):
        """
            Test comparing a series with a b-file starting at index 2.

            Expected Result: Only the indices 2 to 4 are compared.
        """

        report = oeis_compare(self.series, BFile([(2, 2), (3, 6), (4, 24)]))

        self.assertTrue(report.matches)
        self.assertEqual((2, 4), report.indices)

    def test_oeis_compare_mismatch(self):
        """
            Test comparing a series with a b-file that differs in two terms.

            Expected Result: The comparison fails and names the first differing term.
        """

        report = oeis_compare(self.series, BFile([(1, 1), (2, 3), (3, 7)]))

        self.assertFalse(report.matches)
        mismatch = report.first_mismatch
        self.assertEqual(2, mismatch.index)
        self.assertEqual(3, mismatch.expected)
        self.assertEqual(2, mismatch.actual)

    def test_oeis_compare_no_overlap(self):
        """
            Test comparing a series with a b-file whose indices are all beyond the order of the series.

            Expected Result: An error is raised.
        """

        with self.assertRaises(EmptyOverlapError):
            oeis_compare(self.series, BFile([(5, 120), (6, 720)]))

        with self.assertRaises(EmptyOverlapError):
            oeis_compare(self.series, BFile([]))

    def test_oeis_compare_markers(self):
        """
            Test comparing a series whose coefficients depend on markers.

            Expected Result: An error is raised.
        """

        registry = MarkerRegistry([Permutation([1, 2])])
        series = TruncatedSeries(registry, [registry.one, registry.marker(Permutation([1, 2]))])

        with self.assertRaises(ValueError):
            oeis_compare(series, BFile([(0, 1)]))

    def test_oeis_compare_avoiders(self):
        """
            Test comparing the avoiders of ``12`` with their known terms.

            Expected Result: The comparison matches.
        """

        series = avoider_series(check_antichain([Permutation([1, 2])]), 7)
        report = oeis_compare(series, BFile([(0, 1), (1, 1), (2, 1), (3, 3), (4, 11), (5, 53), (6, 309), (7, 2119)]))

        self.assertTrue(report.matches)
        self.assertEqual((0, 7), report.indices)
