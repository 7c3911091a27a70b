#!/usr/bin/python3
# -*- coding: utf-8 -*-

from unittest import TestCase

from math import factorial
from random import Random

from sympy import Matrix
from sympy import QQ

from hertzsprung import DimensionError
from hertzsprung import DuplicatePatternError
from hertzsprung import Limits
from hertzsprung import MarkerRegistry
from hertzsprung import PatternNotInSetError
from hertzsprung import Permutation
from hertzsprung import PolyMatrix
from hertzsprung import RationalFunction
from hertzsprung import RegistryMismatchError
from hertzsprung import TruncatedSeries
from hertzsprung import ZeroConstantTermError
from hertzsprung import det_bareiss
from hertzsprung import factorial_tail_series
from hertzsprung import fsum_series
from hertzsprung import matrix_minor
from hertzsprung import render_poly
from hertzsprung import series_from_rational
from hertzsprung.algebra import x_coefficients
from hertzsprung.algebra import x_valuation
from hertzsprung.errors import IndexOutOfRangeError

ASCENT = Permutation([1, 2])
DESCENT = Permutation([2, 1])


class MarkerRegistryTest(TestCase):

    # region Instantiation

    def test_init(self):
        """
            Test creating a registry.

            Expected Result: One marker per pattern followed by `x`, in the given order.
        """

        registry = MarkerRegistry([ASCENT, DESCENT])
        self.assertTupleEqual((ASCENT, DESCENT), registry.patterns)
        self.assertListEqual(['u_12', 'u_21', 'x'], [symbol.name for symbol in registry.ring.symbols])
        self.assertEqual(ASCENT, registry.pattern_of(registry.ring.symbols[0]))

    def test_init_duplicate(self):
        """
            Test registering a pattern twice.

            Expected Result: An error is raised.
        """

        with self.assertRaises(DuplicatePatternError):
            MarkerRegistry([ASCENT, ASCENT])

    def test_equality(self):
        """
            Test comparing registries.

            Expected Result: Registries of the same patterns in the same order are equal and share their ring.
        """

        self.assertEqual(MarkerRegistry([ASCENT, DESCENT]), MarkerRegistry([ASCENT, DESCENT]))
        self.assertNotEqual(MarkerRegistry([ASCENT, DESCENT]), MarkerRegistry([DESCENT, ASCENT]))
        self.assertEqual(MarkerRegistry([ASCENT]).ring, MarkerRegistry([ASCENT]).ring)

    # endregion

    # region Markers

    # marker()
    # ========

    def test_marker_unknown(self):
        """
            Test getting the marker of a pattern that is not registered.

            Expected Result: An error is raised.
        """

        registry = MarkerRegistry([ASCENT])
        with self.assertRaises(PatternNotInSetError):
            registry.marker(DESCENT)

    # check()
    # =======

    def test_check_foreign(self):
        """
            Test checking a polynomial of another registry.

            Expected Result: An error is raised.
        """

        with self.assertRaises(RegistryMismatchError):
            MarkerRegistry([ASCENT]).check(MarkerRegistry([DESCENT]).x)

    # endregion

    # region Substitution

    def test_shift(self):
        """
            Test shifting all markers by a constant.

            Expected Result: `u` is replaced by `u - 1`.
        """

        registry = MarkerRegistry([ASCENT, DESCENT])
        u, v = registry.markers()
        x = registry.x

        self.assertEqual((u - 1) * x + (v - 1) ** 2, registry.shift(u * x + v ** 2, -1))
        self.assertEqual(u * x, registry.shift(u * x, 0))

    def test_specialize(self):
        """
            Test substituting constants for markers.

            Expected Result: All markers or only the selected ones are substituted; the ring does not change.
        """

        registry = MarkerRegistry([ASCENT, DESCENT])
        u, v = registry.markers()
        x = registry.x

        self.assertEqual(-x + 1, registry.specialize(u * x + v ** 2, -1))
        self.assertEqual(v ** 2, registry.specialize(u * x + v ** 2, 0, [ASCENT]))
        self.assertEqual(registry.ring, registry.specialize(u, 2).ring)

    def test_translate(self):
        """
            Test moving a polynomial into another registry with renamed markers.

            Expected Result: The markers are renamed, `x` is kept.
        """

        source = MarkerRegistry([DESCENT, Permutation([2, 3, 1])])
        target = MarkerRegistry([DESCENT, Permutation([3, 1, 2])])
        renaming = {Permutation([2, 3, 1]): Permutation([3, 1, 2])}

        u, v = source.markers()
        poly = u * v * source.x ** 3 + 2 * v

        translated = target.translate(poly, source, renaming)
        a, b = target.markers()
        self.assertEqual(a * b * target.x ** 3 + 2 * b, translated)

    def test_translate_missing(self):
        """
            Test moving a polynomial into a registry that lacks one of its markers.

            Expected Result: An error is raised.
        """

        source = MarkerRegistry([ASCENT])
        with self.assertRaises(PatternNotInSetError):
            MarkerRegistry([DESCENT]).translate(source.markers()[0], source)

    # endregion


class RenderingTest(TestCase):

    # render_poly()
    # =============

    def test_render_poly(self):
        """
            Test rendering polynomials.

            Expected Result: Terms in descending graded lexicographic order with `^` and `*`.
        """

        registry = MarkerRegistry([Permutation([1, 2, 3])])
        u = registry.markers()[0]
        x = registry.x

        self.assertEqual('x^4 + x^2', render_poly(x ** 4 + x ** 2))
        self.assertEqual('u_123*x^2 + u_123*x - 1', render_poly(u * x ** 2 + u * x - 1))
        self.assertEqual('-x^3', render_poly(-x ** 3))
        self.assertEqual('0', render_poly(registry.zero))
        self.assertEqual('2/3*x - 5', render_poly(registry.constant(QQ(2, 3)) * x - 5))

    # x_coefficients(), x_valuation()
    # ===============================

    def test_x_coefficients(self):
        """
            Test splitting a polynomial by powers of `x`.

            Expected Result: The marker polynomials of `x^0, x^1, ...`; missing powers are zero.
        """

        registry = MarkerRegistry([ASCENT])
        u = registry.markers()[0]
        x = registry.x

        self.assertListEqual([registry.zero, u + 1, registry.zero, registry.constant(3)],
                             x_coefficients(u * x + x + 3 * x ** 3))
        self.assertListEqual([], x_coefficients(registry.zero))
        self.assertEqual(1, x_valuation(u * x + x ** 2))
        self.assertIsNone(x_valuation(registry.zero))


class RationalFunctionTest(TestCase):

    def setUp(self):
        """
            Prepare the test cases.
        """

        self.registry = MarkerRegistry([ASCENT])
        self.u = self.registry.markers()[0]
        self.x = self.registry.x

    # __init__()
    # ==========

    def test_init_normalized(self):
        """
            Test creating a rational function with a denominator whose leading coefficient is negative.

            Expected Result: Both parts are negated.
        """

        function = RationalFunction(self.registry, self.x, 1 - self.x)
        self.assertEqual(-self.x, function.numerator)
        self.assertEqual(self.x - 1, function.denominator)
        self.assertEqual('(-x) / (x - 1)', str(function))

    def test_init_zero_denominator(self):
        """
            Test creating a rational function with a zero denominator.

            Expected Result: An error is raised.
        """

        with self.assertRaises(ZeroDivisionError):
            RationalFunction(self.registry, self.x, self.registry.zero)

    def test_init_foreign(self):
        """
            Test creating a rational function from polynomials of another registry.

            Expected Result: An error is raised.
        """

        with self.assertRaises(RegistryMismatchError):
            RationalFunction(self.registry, MarkerRegistry().x)

    # Arithmetic
    # ==========

    def test_arithmetic(self):
        """
            Test the field operations.

            Expected Result: The results agree with the usual fraction rules.
        """

        x = self.x
        a = RationalFunction(self.registry, x, 1 - x)
        b = RationalFunction(self.registry, self.registry.one, 1 + x)

        self.assertEqual(RationalFunction(self.registry, x + x ** 2 + 1 - x, 1 - x ** 2), a + b)
        self.assertEqual(RationalFunction(self.registry, x, 1 - x ** 2), a * b)
        self.assertEqual(RationalFunction(self.registry, x + x ** 2, 1 - x), a / b)
        self.assertEqual(RationalFunction(self.registry, self.registry.zero), a - a)
        self.assertEqual(RationalFunction(self.registry, 1 - 2 * x, 1 - x), 1 - a)
        self.assertTrue((a - a).is_zero())

    def test_equality_unreduced(self):
        """
            Test comparing rational functions that are not reduced.

            Expected Result: Equality is decided by cross-multiplication.
        """

        x = self.x
        self.assertEqual(RationalFunction(self.registry, x), RationalFunction(self.registry, x ** 2, x))
        self.assertEqual(RationalFunction(self.registry, x ** 2, x), x)
        self.assertNotEqual(RationalFunction(self.registry, x ** 2, x), self.registry.one)

    def test_shift_specialize(self):
        """
            Test substituting markers in a rational function.

            Expected Result: The substitution is applied to both parts.
        """

        function = RationalFunction(self.registry, self.u * self.x, 1 - self.u * self.x)
        self.assertEqual(RationalFunction(self.registry, (self.u - 1) * self.x, 1 - (self.u - 1) * self.x),
                         function.shift(-1))
        self.assertEqual(RationalFunction(self.registry, -self.x, 1 + self.x), function.specialize(-1))


class PolyMatrixTest(TestCase):

    def setUp(self):
        """
            Prepare the test cases.
        """

        self.registry = MarkerRegistry([ASCENT])
        self.u = self.registry.markers()[0]
        self.x = self.registry.x

    def _matrix(self, rows):
        return PolyMatrix(self.registry, [[self.registry.constant(entry) if isinstance(entry, int) else entry
                                           for entry in row] for row in rows])

    # __init__()
    # ==========

    def test_init_not_square(self):
        """
            Test creating a matrix that is not square.

            Expected Result: An error is raised.
        """

        with self.assertRaises(DimensionError):
            self._matrix([[1, 2]])

    # minor()
    # =======

    def test_minor(self):
        """
            Test removing a row and a column.

            Expected Result: The remaining entries in their original order.
        """

        matrix = self._matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        self.assertEqual(self._matrix([[4, 6], [7, 9]]), matrix.minor(1, 2))
        self.assertEqual(self._matrix([[2, 3], [5, 6]]), matrix_minor(matrix, 3, 1))
        self.assertEqual(self.registry.constant(8), matrix.entry(3, 2))

    def test_minor_out_of_range(self):
        """
            Test removing a row that does not exist.

            Expected Result: An error is raised.
        """

        with self.assertRaises(IndexOutOfRangeError):
            self._matrix([[1]]).minor(2, 1)

    # det()
    # =====

    def test_det_small(self):
        """
            Test the determinant of small matrices.

            Expected Result: The empty matrix has determinant 1; the others their usual determinants.
        """

        self.assertEqual(self.registry.one, PolyMatrix(self.registry, []).det())
        self.assertEqual(self.registry.constant(-2), self._matrix([[1, 2], [3, 4]]).det())
        self.assertEqual(1 - self.u * self.x, self._matrix([[1, self.u], [self.x, 1]]).det())

    def test_det_pivot_swap(self):
        """
            Test the determinant of a matrix with a zero pivot.

            Expected Result: Rows are swapped and the sign is flipped.
        """

        self.assertEqual(self.registry.constant(-1), self._matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]).det())
        self.assertEqual(self.registry.zero, self._matrix([[0, 1], [0, 2]]).det())

    def test_det_random(self):
        """
            Test the determinant of random polynomial matrices against cofactor expansion.

            Expected Result: The fraction-free elimination agrees with the reference determinant.
        """

        random = Random(20210101)
        u, x = self.u, self.x
        monomials = [self.registry.one, x, u, u * x, x ** 2]
        for dimension in range(1, 6):
            rows = [[sum((random.randint(-2, 2) * monomial for monomial in monomials), self.registry.zero)
                     for _ in range(dimension)] for _ in range(dimension)]
            matrix = PolyMatrix(self.registry, rows)

            reference = Matrix([[entry.as_expr() for entry in row] for row in rows]).det(method='berkowitz')
            self.assertEqual(0, (reference - det_bareiss(matrix).as_expr()).expand(), msg=f'Dimension {dimension}')

    def test_det_dimension_limit(self):
        """
            Test the determinant of a matrix larger than allowed.

            Expected Result: An error is raised.
        """

        matrix = PolyMatrix.identity(self.registry, Limits.max_dimension + 1)
        with self.assertRaises(DimensionError):
            det_bareiss(matrix)


class TruncatedSeriesTest(TestCase):

    def setUp(self):
        """
            Prepare the test cases.
        """

        self.registry = MarkerRegistry()
        self.x = self.registry.x

    # __init__()
    # ==========

    def test_init_x_dependent(self):
        """
            Test creating a series with a coefficient depending on `x`.

            Expected Result: An error is raised.
        """

        with self.assertRaises(ValueError):
            TruncatedSeries(self.registry, [self.x])

    # Arithmetic
    # ==========

    def test_multiplication(self):
        """
            Test multiplying series.

            Expected Result: The product is truncated at the smaller order.
        """

        series = TruncatedSeries.from_poly(1 + self.x, self.registry, 4)
        self.assertListEqual([1, 2, 1, 0, 0], (series * series).integers())
        self.assertListEqual([1, 3, 3, 1], (series.truncate(3) * series * series).integers())
        self.assertListEqual([3, 3, 0, 0, 0], (series * 3).integers())

    def test_integers_markers(self):
        """
            Test converting a series with markers to integers.

            Expected Result: An error is raised.
        """

        registry = MarkerRegistry([ASCENT])
        series = TruncatedSeries(registry, [registry.one, registry.markers()[0]])
        with self.assertRaises(ValueError):
            series.integers()

        self.assertListEqual([1, 'u_12'], series.rendered())
        self.assertFalse(series.is_marker_free())

    # series_from_rational()
    # ======================

    def test_series_from_rational(self):
        """
            Test expanding rational functions.

            Expected Result: The Taylor coefficients.
        """

        geometric = RationalFunction(self.registry, self.registry.one, 1 - self.x)
        self.assertListEqual([1] * 6, series_from_rational(geometric, 5).integers())

        fibonacci = RationalFunction(self.registry, self.x, 1 - self.x - self.x ** 2)
        self.assertListEqual([0, 1, 1, 2, 3, 5, 8, 13], series_from_rational(fibonacci, 7).integers())

        alternating = RationalFunction(self.registry, self.x, 1 + self.x ** 2)
        self.assertListEqual([0, 1, 0, -1, 0, 1], series_from_rational(alternating, 5).integers())

    def test_series_from_rational_negative_constant(self):
        """
            Test expanding a rational function whose denominator has the constant term -1.

            Expected Result: The expansion divides by -1.
        """

        function = RationalFunction(self.registry, -self.x, self.x - 1)
        self.assertListEqual([0, 1, 1, 1], series_from_rational(function, 3).integers())

    def test_series_from_rational_zero_constant(self):
        """
            Test expanding a rational function whose denominator vanishes at `x = 0`.

            Expected Result: An error is raised.
        """

        with self.assertRaises(ZeroConstantTermError):
            series_from_rational(RationalFunction(self.registry, self.registry.one, self.x), 3)

    # fsum_series(), factorial_tail_series()
    # ======================================

    def test_fsum_series(self):
        """
            Test summing the factorial series of `x`.

            Expected Result: `n!` at `x^n`.
        """

        y = TruncatedSeries.variable(self.registry, 8)
        self.assertListEqual([factorial(n) for n in range(9)], fsum_series(y).integers())
        self.assertListEqual([1, 1, 2], fsum_series(y, 2).integers())

    def test_factorial_tail_series(self):
        """
            Test summing the shifted factorial series of `x`.

            Expected Result: `(n+1)!` at `x^n`.
        """

        y = TruncatedSeries.variable(self.registry, 6)
        self.assertListEqual([factorial(n + 1) for n in range(7)], factorial_tail_series(y).integers())

    def test_fsum_series_constant_term(self):
        """
            Test summing the factorial series of a series with a nonzero constant term.

            Expected Result: An error is raised.
        """

        with self.assertRaises(ZeroConstantTermError):
            fsum_series(TruncatedSeries.one(self.registry, 3))
