#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Exact algebra over the rationals: marker polynomials, rational functions, polynomial matrices and truncated power
    series.

    Polynomials are elements of a sparse polynomial ring from :mod:`sympy.polys.rings` over the rational field
    :data:`sympy.QQ`. The generators of the ring are one marker ``u_τ`` per registered pattern ``τ`` (in registration
    order) followed by the variable ``x``. Terms are ordered graded lexicographically.
"""

from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union

from logging import getLogger

from bidict import bidict
from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing

from .config import Limits
from .errors import DimensionError
from .errors import DuplicatePatternError
from .errors import IndexOutOfRangeError
from .errors import PatternNotInSetError
from .errors import RegistryMismatchError
from .errors import ZeroConstantTermError
from .permutation import Permutation

logger = getLogger(__name__)

MultiPoly = PolyElement
"""
    A polynomial in ``x`` and the markers of a :class:`MarkerRegistry` with rational coefficients.
"""

ExactRational = QQ.dtype
"""
    An exact rational number with a positive denominator, always kept in lowest terms.
"""

Scalar = Union[int, ExactRational]
"""
    A value that can be substituted for a marker.
"""

# region Marker Registry


class MarkerRegistry(object):
    """
        The ordered set of patterns whose occurrences are marked, with one marker variable per pattern.

        Two registries registering the same patterns in the same order are interchangeable.
    """

    def __init__(self, patterns: Iterable[Permutation] = ()) -> None:
        """
            :param patterns: The patterns to register, in the order of their markers.
            :raise DuplicatePatternError: If a pattern is given twice.
        """

        self._patterns: Tuple[Permutation, ...] = tuple(patterns)
        if len(set(self._patterns)) != len(self._patterns):
            raise DuplicatePatternError(next(pattern for pattern in self._patterns
                                             if self._patterns.count(pattern) > 1))

        self._markers: bidict = bidict(
            (pattern, Symbol(f'u_{pattern}')) for pattern in self._patterns
        )
        """
            The bidirectional mapping between a pattern and the symbol of its marker.
        """

        symbols = [self._markers[pattern] for pattern in self._patterns] + [Symbol('x')]
        self._ring = PolyRing(symbols, QQ, grlex)

    # region Properties

    @property
    def patterns(self) -> Tuple[Permutation, ...]:
        """
            The registered patterns in marker order.
        """
        return self._patterns

    @property
    def ring(self) -> PolyRing:
        """
            The polynomial ring of all values belonging to this registry.
        """
        return self._ring

    @property
    def x(self) -> MultiPoly:
        """
            The variable ``x``.
        """
        return self._ring.gens[-1]

    @property
    def zero(self) -> MultiPoly:
        return self._ring.zero

    @property
    def one(self) -> MultiPoly:
        return self._ring.one

    def marker(self, pattern: Permutation) -> MultiPoly:
        """
            Get the marker variable of a pattern.

            :param pattern: A registered pattern.
            :return: The generator ``u_pattern``.
            :raise PatternNotInSetError: If `pattern` is not registered.
        """

        if pattern not in self._markers:
            raise PatternNotInSetError(pattern)

        return self._ring.gens[self._patterns.index(pattern)]

    def pattern_of(self, symbol: Symbol) -> Permutation:
        """
            Get the pattern marked by a marker symbol.

            :param symbol: The marker symbol.
            :return: The pattern.
        """
        return self._markers.inverse[symbol]

    def markers(self) -> List[MultiPoly]:
        """
            :return: All marker variables in registration order.
        """
        return list(self._ring.gens[:-1])

    def constant(self, value: Scalar) -> MultiPoly:
        """
            :return: The constant polynomial `value`.
        """
        return self._ring.ground_new(QQ.convert(value))

    # endregion

    # region Comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MarkerRegistry):
            return NotImplemented

        return self._patterns == other._patterns

    def __hash__(self) -> int:
        return hash(self._patterns)

    def __repr__(self) -> str:
        return f'MarkerRegistry([{", ".join(str(pattern) for pattern in self._patterns)}])'

    # endregion

    # region Ring Operations

    def check(self, *polys: MultiPoly) -> None:
        """
            Ensure that all given polynomials belong to this registry.

            :param polys: The polynomials to check.
            :raise RegistryMismatchError: If a polynomial belongs to another ring.
        """

        for poly in polys:
            if not isinstance(poly, PolyElement) or poly.ring != self._ring:
                raise RegistryMismatchError()

    def shift(self, poly: MultiPoly, offset: Scalar) -> MultiPoly:
        """
            Substitute ``u_τ + offset`` for every marker ``u_τ``.

            :param poly: The polynomial.
            :param offset: The shift, e.g. ``-1`` for passing from cluster to distribution markers.
            :return: The substituted polynomial.
        """

        self.check(poly)
        if not self._patterns or offset == 0:
            return poly

        constant = self.constant(offset)
        return poly.compose([(marker, marker + constant) for marker in self.markers()])

    def specialize(self, poly: MultiPoly, value: Scalar, patterns: Optional[Iterable[Permutation]] = None) -> MultiPoly:
        """
            Substitute a constant for markers.

            :param poly: The polynomial.
            :param value: The value to substitute.
            :param patterns: The patterns whose markers are substituted. Defaults to all registered patterns.
            :return: The substituted polynomial, still in this registry's ring.
        """

        self.check(poly)
        if patterns is None:
            targets = self.markers()
        else:
            targets = [self.marker(pattern) for pattern in patterns]

        if not targets:
            return poly

        constant = QQ.convert(value)
        return poly.subs([(marker, constant) for marker in targets])

    def translate(self, poly: MultiPoly, source: 'MarkerRegistry',
                  renaming: Optional[Mapping[Permutation, Permutation]] = None) -> MultiPoly:
        """
            Move a polynomial from another registry into this one.

            :param poly: A polynomial of the `source` registry.
            :param source: The registry `poly` belongs to.
            :param renaming: Maps patterns of `source` to patterns of this registry. Patterns not mentioned keep their
                             name.
            :return: The polynomial with every marker ``u_σ`` replaced by ``u_renaming(σ)``.
            :raise PatternNotInSetError: If a renamed marker is not registered here.
            :raise RegistryMismatchError: If `poly` does not belong to `source`.
        """

        source.check(poly)
        renaming = dict(renaming or {})
        target_indices = [self._patterns.index(renaming.get(pattern, pattern))
                          if renaming.get(pattern, pattern) in self._patterns else None
                          for pattern in source.patterns]

        terms: Dict[Tuple[int, ...], ExactRational] = {}
        for monomial, coefficient in poly.terms():
            exponents = [0] * (len(self._patterns) + 1)
            for source_index, exponent in enumerate(monomial[:-1]):
                if exponent == 0:
                    continue

                target_index = target_indices[source_index]
                if target_index is None:
                    pattern = source.patterns[source_index]
                    raise PatternNotInSetError(renaming.get(pattern, pattern))

                exponents[target_index] += exponent

            exponents[-1] = monomial[-1]
            key = tuple(exponents)
            terms[key] = terms.get(key, QQ.zero) + coefficient

        return self._ring.from_dict({monomial: c for monomial, c in terms.items() if c})

    # endregion


def x_coefficients(poly: MultiPoly) -> List[MultiPoly]:
    """
        View a polynomial as a polynomial in ``x`` with marker-polynomial coefficients.

        :param poly: The polynomial.
        :return: The coefficients of ``x^0, x^1, ..., x^d`` where ``d`` is the degree in ``x`` (empty for zero).
    """

    ring = poly.ring
    grouped: Dict[int, Dict[Tuple[int, ...], ExactRational]] = {}
    for monomial, coefficient in poly.items():
        grouped.setdefault(monomial[-1], {})[monomial[:-1] + (0,)] = coefficient

    if not grouped:
        return []

    return [ring.from_dict(grouped.get(degree, {})) for degree in range(max(grouped) + 1)]


def x_valuation(poly: MultiPoly) -> Optional[int]:
    """
        :return: The smallest exponent of ``x`` in `poly`, `None` for the zero polynomial.
    """

    if not poly:
        return None

    return min(monomial[-1] for monomial in poly.keys())

# endregion

# region Rendering


def _render_monomial(symbols: Sequence[Symbol], monomial: Tuple[int, ...]) -> str:
    factors = []
    for symbol, exponent in zip(symbols, monomial):
        if exponent == 1:
            factors.append(symbol.name)
        elif exponent > 1:
            factors.append(f'{symbol.name}^{exponent}')

    return '*'.join(factors)


def render_rational(value: ExactRational) -> str:
    """
        :return: An integer as a decimal string, any other rational as ``p/q``.
    """

    if value.denominator == 1:
        return str(value.numerator)

    return f'{value.numerator}/{value.denominator}'


def render_poly(poly: MultiPoly) -> str:
    """
        Render a polynomial canonically: terms in descending graded lexicographic order, ``^`` for powers and ``*``
        for products. The zero polynomial is rendered as ``0``.

        :param poly: The polynomial.
        :return: The canonical text, e.g. ``u_123*x^2 + u_123*x - 1``.
    """

    if not poly:
        return '0'

    symbols = poly.ring.symbols
    text = ''
    for index, (monomial, coefficient) in enumerate(poly.terms()):
        negative = coefficient < 0
        magnitude = -coefficient if negative else coefficient
        factors = _render_monomial(symbols, monomial)

        if not factors:
            term = render_rational(magnitude)
        elif magnitude == 1:
            term = factors
        else:
            term = f'{render_rational(magnitude)}*{factors}'

        if index == 0:
            text = f'-{term}' if negative else term
        else:
            text += f' - {term}' if negative else f' + {term}'

    return text

# endregion

# region Rational Functions


class RationalFunction(object):
    """
        A quotient of two polynomials of the same registry.

        The pair is not reduced; it is only normalized such that the coefficient of the greatest monomial of the
        denominator is positive. Equality is decided by cross-multiplication.
    """

    __hash__ = None  # type: ignore

    def __init__(self, registry: MarkerRegistry, numerator: MultiPoly, denominator: Optional[MultiPoly] = None) -> None:
        """
            :param registry: The registry both polynomials belong to.
            :param numerator: The numerator.
            :param denominator: The nonzero denominator. Defaults to ``1``.
            :raise RegistryMismatchError: If a polynomial does not belong to `registry`.
            :raise ZeroDivisionError: If the denominator is zero.
        """

        if denominator is None:
            denominator = registry.one

        registry.check(numerator, denominator)
        if not denominator:
            raise ZeroDivisionError('The denominator of a rational function must not be zero')

        if denominator.LC < 0:
            numerator, denominator = -numerator, -denominator

        self.registry = registry
        self.numerator = numerator
        self.denominator = denominator

    # region Arithmetic

    def _coerce(self, other: object) -> 'RationalFunction':
        if isinstance(other, RationalFunction):
            if other.registry != self.registry:
                raise RegistryMismatchError()

            return other

        if isinstance(other, PolyElement):
            return RationalFunction(self.registry, other)

        if isinstance(other, int):
            return RationalFunction(self.registry, self.registry.constant(other))

        raise RegistryMismatchError()

    def __add__(self, other: object) -> 'RationalFunction':
        other = self._coerce(other)
        if self.denominator == other.denominator:
            return RationalFunction(self.registry, self.numerator + other.numerator, self.denominator)

        return RationalFunction(self.registry,
                                self.numerator * other.denominator + other.numerator * self.denominator,
                                self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self) -> 'RationalFunction':
        return RationalFunction(self.registry, -self.numerator, self.denominator)

    def __sub__(self, other: object) -> 'RationalFunction':
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> 'RationalFunction':
        return self._coerce(other) - self

    def __mul__(self, other: object) -> 'RationalFunction':
        other = self._coerce(other)
        return RationalFunction(self.registry, self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> 'RationalFunction':
        other = self._coerce(other)
        return RationalFunction(self.registry, self.numerator * other.denominator, self.denominator * other.numerator)

    # endregion

    # region Substitution

    def shift(self, offset: Scalar) -> 'RationalFunction':
        """
            :return: The rational function with every marker ``u`` replaced by ``u + offset``.
        """
        return RationalFunction(self.registry,
                                self.registry.shift(self.numerator, offset),
                                self.registry.shift(self.denominator, offset))

    def specialize(self, value: Scalar) -> 'RationalFunction':
        """
            :return: The rational function with every marker replaced by `value`.
            :raise ZeroDivisionError: If the denominator vanishes under the substitution.
        """
        return RationalFunction(self.registry,
                                self.registry.specialize(self.numerator, value),
                                self.registry.specialize(self.denominator, value))

    def translate(self, registry: MarkerRegistry,
                  renaming: Optional[Mapping[Permutation, Permutation]] = None) -> 'RationalFunction':
        """
            :return: The rational function moved into `registry` with the markers renamed per `renaming`.
        """
        return RationalFunction(registry,
                                registry.translate(self.numerator, self.registry, renaming),
                                registry.translate(self.denominator, self.registry, renaming))

    # endregion

    # region Comparison

    def is_zero(self) -> bool:
        return not self.numerator

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (PolyElement, int)) or isinstance(other, RationalFunction):
            other = self._coerce(other)
            return self.numerator * other.denominator == other.numerator * self.denominator

        return NotImplemented

    def __str__(self) -> str:
        """
            The canonical text ``(numerator) / (denominator)``, or just the numerator if the denominator is ``1``.
        """

        if self.denominator == 1:
            return render_poly(self.numerator)

        return f'({render_poly(self.numerator)}) / ({render_poly(self.denominator)})'

    def __repr__(self) -> str:
        return f'RationalFunction({str(self)!r})'

    # endregion

# endregion

# region Matrices


class PolyMatrix(object):
    """
        A square matrix of polynomials of one registry. The empty ``0 x 0`` matrix is allowed and has determinant 1.
    """

    def __init__(self, registry: MarkerRegistry, rows: Sequence[Sequence[MultiPoly]]) -> None:
        """
            :param registry: The registry all entries belong to.
            :param rows: The rows of the matrix.
            :raise DimensionError: If the matrix is not square.
            :raise RegistryMismatchError: If an entry does not belong to `registry`.
        """

        dimension = len(rows)
        if any(len(row) != dimension for row in rows):
            raise DimensionError(f'A {dimension}-row matrix must have {dimension} columns')

        for row in rows:
            registry.check(*row)

        self.registry = registry
        self.rows: Tuple[Tuple[MultiPoly, ...], ...] = tuple(tuple(row) for row in rows)

    @classmethod
    def identity(cls, registry: MarkerRegistry, dimension: int) -> 'PolyMatrix':
        one = registry.one
        zero = registry.zero
        return cls(registry, [[one if i == j else zero for j in range(dimension)] for i in range(dimension)])

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> MultiPoly:
        """
            :param i: The 1-based row.
            :param j: The 1-based column.
            :return: The entry in row `i` and column `j`.
        """

        self._check_index(i)
        self._check_index(j)
        return self.rows[i - 1][j - 1]

    def _check_index(self, index: int) -> None:
        if not 1 <= index <= self.dimension:
            raise IndexOutOfRangeError(index, 1, self.dimension)

    def __sub__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        if other.registry != self.registry:
            raise RegistryMismatchError()

        if other.dimension != self.dimension:
            raise DimensionError('Matrices of different dimensions cannot be subtracted')

        return PolyMatrix(self.registry, [[a - b for a, b in zip(row, other_row)]
                                          for row, other_row in zip(self.rows, other.rows)])

    def map(self, function) -> 'PolyMatrix':
        """
            :param function: A function mapping a polynomial to a polynomial of the same registry.
            :return: The matrix with `function` applied to every entry.
        """
        return PolyMatrix(self.registry, [[function(entry) for entry in row] for row in self.rows])

    def one_minus(self) -> 'PolyMatrix':
        """
            :return: ``1 - M``.
        """
        return PolyMatrix.identity(self.registry, self.dimension) - self

    def minor(self, i: int, j: int) -> 'PolyMatrix':
        """
            Remove a row and a column.

            :param i: The 1-based row to remove.
            :param j: The 1-based column to remove.
            :return: The matrix of dimension ``d - 1`` with the remaining rows and columns in their original order.
            :raise IndexOutOfRangeError: If `i` or `j` is not within ``[1, d]``.
        """

        self._check_index(i)
        self._check_index(j)
        return PolyMatrix(self.registry, [[entry for column, entry in enumerate(row, start=1) if column != j]
                                          for r, row in enumerate(self.rows, start=1) if r != i])

    def det(self) -> MultiPoly:
        """
            :return: The determinant, see :func:`det_bareiss`.
        """
        return det_bareiss(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented

        return self.registry == other.registry and self.rows == other.rows

    __hash__ = None  # type: ignore

    def __iter__(self) -> Iterator[Tuple[MultiPoly, ...]]:
        return iter(self.rows)


def matrix_minor(matrix: PolyMatrix, i: int, j: int) -> PolyMatrix:
    """
        Remove row `i` and column `j` (1-based) of a matrix. See :meth:`PolyMatrix.minor`.
    """
    return matrix.minor(i, j)


def det_bareiss(matrix: PolyMatrix) -> MultiPoly:
    """
        Compute the determinant with fraction-free Gaussian elimination.

        Every elimination step divides exactly by the previous pivot; a zero pivot is replaced by swapping in a row
        below it with a nonzero entry in the pivot column.

        :param matrix: A square matrix of dimension at most :attr:`.Limits.max_dimension`.
        :return: The exact determinant. The empty matrix has determinant ``1``.
        :raise DimensionError: If the dimension exceeds the limit.
    """

    registry = matrix.registry
    n = matrix.dimension
    if n > Limits.max_dimension:
        raise DimensionError(f'Dimension {n} exceeds the limit {Limits.max_dimension}')

    if n == 0:
        return registry.one

    logger.debug('Bareiss elimination of dimension %d', n)

    entries = [list(row) for row in matrix.rows]
    sign = 1
    previous = registry.one
    for k in range(n - 1):
        if not entries[k][k]:
            for r in range(k + 1, n):
                if entries[r][k]:
                    entries[k], entries[r] = entries[r], entries[k]
                    sign = -sign
                    break
            else:
                return registry.zero

        pivot = entries[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = entries[i][j] * pivot - entries[i][k] * entries[k][j]
                try:
                    entries[i][j] = value.exquo(previous)
                except ExactQuotientFailed:  # pragma: no cover
                    raise ArithmeticError('Bareiss division is not exact') from None

            entries[i][k] = registry.zero

        previous = pivot

    determinant = entries[n - 1][n - 1]
    return determinant if sign > 0 else -determinant

# endregion

# region Truncated Series


class TruncatedSeries(object):
    """
        A power series in ``x`` truncated after ``x^N`` whose coefficients are polynomials in the markers.
    """

    def __init__(self, registry: MarkerRegistry, coefficients: Sequence[MultiPoly]) -> None:
        """
            :param registry: The registry the coefficients belong to.
            :param coefficients: The coefficients ``c_0, ..., c_N``, each free of ``x``.
            :raise RegistryMismatchError: If a coefficient does not belong to `registry`.
            :raise ValueError: If a coefficient depends on ``x`` or no coefficient is given.
        """

        registry.check(*coefficients)
        if not coefficients:
            raise ValueError('A truncated series needs at least the constant coefficient')

        if any(monomial[-1] != 0 for coefficient in coefficients for monomial in coefficient.keys()):
            raise ValueError('Series coefficients must not depend on x')

        self.registry = registry
        self.coefficients: Tuple[MultiPoly, ...] = tuple(coefficients)

    # region Construction

    @classmethod
    def zero(cls, registry: MarkerRegistry, order: int) -> 'TruncatedSeries':
        return cls(registry, [registry.zero] * (order + 1))

    @classmethod
    def one(cls, registry: MarkerRegistry, order: int) -> 'TruncatedSeries':
        return cls(registry, [registry.one] + [registry.zero] * order)

    @classmethod
    def variable(cls, registry: MarkerRegistry, order: int) -> 'TruncatedSeries':
        """
            :return: The series ``x`` truncated at `order`.
        """

        coefficients = [registry.zero] * (order + 1)
        if order >= 1:
            coefficients[1] = registry.one

        return cls(registry, coefficients)

    @classmethod
    def from_poly(cls, poly: MultiPoly, registry: MarkerRegistry, order: int) -> 'TruncatedSeries':
        """
            :param poly: A polynomial of `registry`.
            :return: The polynomial as a series, truncated at `order`.
        """

        registry.check(poly)
        coefficients = x_coefficients(poly)[:order + 1]
        coefficients += [registry.zero] * (order + 1 - len(coefficients))
        return cls(registry, coefficients)

    # endregion

    # region Properties

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.coefficients)

    def is_marker_free(self) -> bool:
        return all(coefficient.is_ground for coefficient in self.coefficients)

    def integers(self) -> List[int]:
        """
            :return: The coefficients as integers.
            :raise ValueError: If a coefficient is not an integer constant.
        """

        values = []
        for coefficient in self.coefficients:
            if not coefficient.is_ground:
                raise ValueError(f'Coefficient {render_poly(coefficient)} depends on markers')

            constant = QQ.convert(coefficient.LC) if coefficient else QQ.zero
            if constant.denominator != 1:
                raise ValueError(f'Coefficient {render_rational(constant)} is not an integer')

            values.append(int(constant.numerator))

        return values

    # endregion

    # region Arithmetic

    def _check(self, other: 'TruncatedSeries') -> None:
        if not isinstance(other, TruncatedSeries) or other.registry != self.registry:
            raise RegistryMismatchError()

    def truncate(self, order: int) -> 'TruncatedSeries':
        """
            :return: The series truncated at `order` (which must not exceed the current order).
        """

        if order > self.order:
            raise ValueError(f'Cannot extend a series of order {self.order} to order {order}')

        return TruncatedSeries(self.registry, self.coefficients[:order + 1])

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        self._check(other)
        order = min(self.order, other.order)
        return TruncatedSeries(self.registry, [a + b for a, b in zip(self.coefficients[:order + 1],
                                                                     other.coefficients[:order + 1])])

    def __neg__(self) -> 'TruncatedSeries':
        return TruncatedSeries(self.registry, [-coefficient for coefficient in self.coefficients])

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return self + (-other)

    def __mul__(self, other: Union['TruncatedSeries', int]) -> 'TruncatedSeries':
        if isinstance(other, int):
            return TruncatedSeries(self.registry, [coefficient * other for coefficient in self.coefficients])

        self._check(other)
        order = min(self.order, other.order)
        zero = self.registry.zero
        product = [zero] * (order + 1)
        for i, a in enumerate(self.coefficients[:order + 1]):
            if not a:
                continue

            for j in range(order + 1 - i):
                b = other.coefficients[j]
                if b:
                    product[i + j] += a * b

        return TruncatedSeries(self.registry, product)

    __rmul__ = __mul__

    def specialize(self, value: Scalar) -> 'TruncatedSeries':
        """
            :return: The series with every marker replaced by `value`.
        """
        return TruncatedSeries(self.registry, [self.registry.specialize(c, value) for c in self.coefficients])

    def translate(self, registry: MarkerRegistry,
                  renaming: Optional[Mapping[Permutation, Permutation]] = None) -> 'TruncatedSeries':
        """
            :return: The series moved into `registry` with the markers renamed per `renaming`.
        """
        return TruncatedSeries(registry, [registry.translate(c, self.registry, renaming) for c in self.coefficients])

    # endregion

    # region Comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented

        return self.registry == other.registry and self.coefficients == other.coefficients

    __hash__ = None  # type: ignore

    def rendered(self) -> List[Union[int, str]]:
        """
            :return: Each coefficient as an integer if it is an integer constant, as canonical text otherwise.
        """

        rendered: List[Union[int, str]] = []
        for coefficient in self.coefficients:
            if not coefficient:
                rendered.append(0)
            elif coefficient.is_ground and QQ.convert(coefficient.LC).denominator == 1:
                rendered.append(int(QQ.convert(coefficient.LC).numerator))
            else:
                rendered.append(render_poly(coefficient))

        return rendered

    def __str__(self) -> str:
        return ' '.join(str(coefficient) for coefficient in self.rendered())

    def __repr__(self) -> str:
        return f'TruncatedSeries(order={self.order}, [{", ".join(map(str, self.rendered()))}])'

    # endregion


def series_from_rational(function: RationalFunction, order: int) -> TruncatedSeries:
    """
        Expand a rational function into a power series in ``x`` by forward substitution.

        The coefficients ``c_n`` solve ``numerator = denominator * (c_0 + c_1 x + ...)`` modulo ``x^(order+1)``.

        :param function: The rational function. The ``x^0`` part of its denominator must be a nonzero constant.
        :param order: The truncation order ``N``.
        :return: The coefficients ``c_0, ..., c_N``.
        :raise ZeroConstantTermError: If the denominator's ``x^0`` part is not a nonzero constant.
    """

    registry = function.registry
    numerator = x_coefficients(function.numerator)
    denominator = x_coefficients(function.denominator)

    if not denominator or not denominator[0] or not denominator[0].is_ground:
        raise ZeroConstantTermError('The denominator must have a nonzero constant term in x')

    leading = QQ.convert(denominator[0].LC)
    zero = registry.zero
    coefficients: List[MultiPoly] = []
    for n in range(order + 1):
        value = numerator[n] if n < len(numerator) else zero
        for j in range(1, min(n, len(denominator) - 1) + 1):
            if denominator[j]:
                value = value - denominator[j] * coefficients[n - j]

        coefficients.append(value.quo_ground(leading) if value else zero)

    return TruncatedSeries(registry, coefficients)


def _factorial_horner(y: TruncatedSeries, order: int, smallest: int) -> TruncatedSeries:
    """
        Evaluate ``1 + s*y*(1 + (s+1)*y*(1 + ...))`` up to ``x^order`` with ``s = smallest``.
    """

    one = TruncatedSeries.one(y.registry, order)
    accumulated = one
    for m in range(order + smallest - 1, smallest - 1, -1):
        accumulated = one + (y * accumulated) * m

    return accumulated


def _check_vanishing_constant(y: TruncatedSeries) -> None:
    if y[0]:
        raise ZeroConstantTermError(f'The series must have a zero constant term, got {render_poly(y[0])}')


def fsum_series(y: TruncatedSeries, order: Optional[int] = None) -> TruncatedSeries:
    """
        Compute ``sum(m! * y^m for m >= 0)`` truncated at ``x^N``.

        :param y: A series with zero constant term.
        :param order: The truncation order ``N``. Defaults to the order of `y` and must not exceed it.
        :return: The truncated series.
        :raise ZeroConstantTermError: If `y` has a nonzero constant term.
    """

    _check_vanishing_constant(y)
    if order is None:
        order = y.order

    y = y.truncate(order)
    return _factorial_horner(y, order, 1)


def factorial_tail_series(y: TruncatedSeries, order: Optional[int] = None) -> TruncatedSeries:
    """
        Compute ``sum(m! * y^(m-1) for m >= 1)`` truncated at ``x^N``.

        :param y: A series with zero constant term.
        :param order: The truncation order ``N``. Defaults to the order of `y` and must not exceed it.
        :return: The truncated series.
        :raise ZeroConstantTermError: If `y` has a nonzero constant term.
    """

    _check_vanishing_constant(y)
    if order is None:
        order = y.order

    y = y.truncate(order)
    return _factorial_horner(y, order, 2)

# endregion
