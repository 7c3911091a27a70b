#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Comparison of computed series against integer sequences given as OEIS b-files.
"""

from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Tuple

from logging import getLogger

from .algebra import TruncatedSeries
from .errors import EmptyOverlapError
from .errors import ParseError

logger = getLogger(__name__)


class BFile(object):
    """
        The terms ``(n, a(n))`` of an integer sequence with strictly increasing indices.
    """

    def __init__(self, terms: Iterable[Tuple[int, int]]) -> None:
        """
            :param terms: The terms.
            :raise ParseError: If the indices are not strictly increasing. The line is the position of the term.
        """

        self.terms: Tuple[Tuple[int, int], ...] = tuple(terms)
        for position in range(1, len(self.terms)):
            if self.terms[position][0] <= self.terms[position - 1][0]:
                raise ParseError('The indices of a b-file must be strictly increasing', position + 1)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BFile):
            return NotImplemented

        return self.terms == other.terms

    def __repr__(self) -> str:
        return f'BFile({len(self.terms)} terms)'


class TermComparison(object):
    """
        The comparison of one term.
    """

    __slots__ = ('index', 'expected', 'actual')

    def __init__(self, index: int, expected: int, actual: int) -> None:
        self.index = index
        self.expected = expected
        self.actual = actual

    @property
    def matches(self) -> bool:
        return self.expected == self.actual


class ComparisonReport(object):
    """
        The term-wise comparison of a series and a b-file on their common indices.
    """

    def __init__(self, comparisons: List[TermComparison]) -> None:
        self.comparisons = comparisons

    @property
    def matches(self) -> bool:
        """
            `True` if every common term agrees.
        """
        return all(comparison.matches for comparison in self.comparisons)

    @property
    def first_mismatch(self) -> Optional[TermComparison]:
        return next((comparison for comparison in self.comparisons if not comparison.matches), None)

    @property
    def indices(self) -> Tuple[int, int]:
        """
            The first and the last common index.
        """
        return self.comparisons[0].index, self.comparisons[-1].index

    def __repr__(self) -> str:
        return f'ComparisonReport(matches={self.matches}, {len(self.comparisons)} terms)'


def oeis_compare(series: TruncatedSeries, bfile: BFile) -> ComparisonReport:
    """
        Compare the coefficients of a series with the terms of a b-file.

        The coefficient of ``x^n`` is compared with the term of index ``n`` for every ``n`` in both.

        :param series: A marker-free series with integer coefficients.
        :param bfile: The expected terms.
        :return: The comparison on all common indices.
        :raise EmptyOverlapError: If no index of the b-file is within the order of the series.
        :raise ValueError: If a coefficient of the series is not an integer.
    """

    values = series.integers()
    comparisons = [TermComparison(index, expected, values[index])
                   for index, expected in bfile if 0 <= index < len(values)]
    if not comparisons:
        raise EmptyOverlapError()

    report = ComparisonReport(comparisons)
    logger.debug('Compared %d terms: %s', len(comparisons), 'match' if report.matches else 'mismatch')
    return report
