#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Bounded machine checks of open questions about Hertzsprung patterns:

    * the number ``a_k`` of Wilf classes of patterns of length ``k`` (distinct autocorrelation polynomials) against
      the number ``b_(k+1)`` of distinct prefix-palindrome sets of binary palindromes of length ``k + 1``;
    * the inequality ``|S_n(τ)| <= |S_n(12...k)|`` for every pattern ``τ`` of length ``k``;
    * the avoiders of the mesh pattern ``p`` (the classical pattern ``132`` with ten shaded boxes) against the series
      ``fsum(x / (1 + x^2))``.
"""

from typing import Dict
from typing import FrozenSet
from typing import List
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

from itertools import combinations
from itertools import product
from logging import getLogger

from .algebra import MarkerRegistry
from .algebra import MultiPoly
from .algebra import RationalFunction
from .algebra import fsum_series
from .algebra import series_from_rational
from .clusters import check_antichain
from .clusters import correlation_exponents
from .config import Limits
from .config import check_ceiling
from .distribution import avoider_series
from .errors import IndexOutOfRangeError
from .errors import InvalidPatternError
from .permutation import Permutation
from .permutation import enumerate_permutations

logger = getLogger(__name__)

RECORDED_WILF_CLASS_COUNTS: Tuple[int, ...] = (1, 1, 2, 4, 4, 7, 7, 11, 12, 18, 17, 25, 27, 38, 38)
"""
    Published numbers of Wilf classes for ``k = 1, ..., 15``. Values beyond :attr:`.Limits.max_wilf` are not
    recomputed by default.
"""

RECORDED_MESH_P_COUNTS: Tuple[int, ...] = (1, 1, 2, 5, 20, 103, 630, 4475, 36232, 329341, 3320890, 36787889,
                                           444125628, 5803850515, 81625106990)
"""
    Published numbers of avoiders of the mesh pattern ``p`` for ``n = 0, ..., 14``.
"""

# region Wilf Classes


class WilfClasses(object):
    """
        The distinct autocorrelation polynomials of the patterns of one length.
    """

    def __init__(self, k: int, polynomials: List[MultiPoly]) -> None:
        """
            :param k: The pattern length.
            :param polynomials: The distinct polynomials, sorted by their exponents.
        """

        self.k = k
        self.polynomials = polynomials

    @property
    def count(self) -> int:
        """
            The number ``a_k`` of Wilf classes.
        """
        return len(self.polynomials)

    def __repr__(self) -> str:
        return f'WilfClasses(k={self.k}, count={self.count})'


def wilf_autocorrelation_classes(k: int) -> WilfClasses:
    """
        Collect the distinct autocorrelation polynomials ``Ω(σ, σ)`` over all ``σ`` of length `k`.

        Two patterns have the same number of avoiders at every length if and only if their autocorrelation polynomials
        agree, so the number of distinct polynomials is the number of Wilf classes.

        :param k: The pattern length, at most :attr:`.Limits.max_wilf`.
        :return: The distinct polynomials in ``x``.
        :raise CeilingExceededError: If `k` exceeds the ceiling.
    """

    check_ceiling('pattern length', k, Limits.max_wilf)

    exponents: Set[Tuple[int, ...]] = set()
    for sigma in enumerate_permutations(k, Limits.max_wilf):
        exponents.add(correlation_exponents(sigma, sigma))

    registry = MarkerRegistry()
    x = registry.x
    polynomials = [sum((x ** exponent for exponent in key), registry.zero) for key in sorted(exponents)]
    logger.debug('%d autocorrelation classes of length %d', len(polynomials), k)
    return WilfClasses(k, polynomials)

# endregion

# region Palindromes


def palindrome_prefix_set(word: Sequence) -> FrozenSet[int]:
    """
        Get the lengths of all prefixes of a word that are palindromes.

        :param word: The word, e.g. a string over ``{0, 1}``.
        :return: The set of all ``i`` such that the first ``i`` letters of `word` form a palindrome.
    """

    letters = list(word)
    return frozenset(i for i in range(1, len(letters) + 1) if letters[:i] == letters[i - 1::-1])


def palindrome_prefix_count(k: int) -> int:
    """
        Count the distinct prefix-palindrome sets of binary palindromes.

        Only the first ``ceil(k / 2)`` letters of a palindrome are free, so ``2^ceil(k / 2)`` words are scanned.

        :param k: The length of the palindromes, at most :attr:`.Limits.max_palindrome`.
        :return: The number ``b_k``.
        :raise CeilingExceededError: If `k` exceeds the ceiling.
    """

    check_ceiling('palindrome length', k, Limits.max_palindrome, enumerates=False)

    half = (k + 1) // 2
    sets: Set[FrozenSet[int]] = set()
    for bits in product('01', repeat=half):
        mirrored = bits[:k // 2][::-1]
        sets.add(palindrome_prefix_set(bits + mirrored))

    return len(sets)


class ConjectureOneRow(object):
    """
        The comparison of ``a_k`` and ``b_(k+1)`` for one ``k``.
    """

    __slots__ = ('k', 'wilf_classes', 'palindrome_sets')

    def __init__(self, k: int, wilf_classes: int, palindrome_sets: int) -> None:
        self.k = k
        self.wilf_classes = wilf_classes
        self.palindrome_sets = palindrome_sets

    @property
    def holds(self) -> bool:
        return self.wilf_classes == self.palindrome_sets


def check_conjecture_one(kmax: int) -> List[ConjectureOneRow]:
    """
        Compare the number of Wilf classes ``a_k`` with the number of prefix-palindrome sets ``b_(k+1)``.

        :param kmax: The largest pattern length, at most :attr:`.Limits.max_wilf`.
        :return: One row for each ``k`` from 3 to `kmax`.
        :raise CeilingExceededError: If `kmax` exceeds the ceiling.
    """

    check_ceiling('pattern length', kmax, Limits.max_wilf)

    rows = [ConjectureOneRow(k, wilf_autocorrelation_classes(k).count, palindrome_prefix_count(k + 1))
            for k in range(3, kmax + 1)]

    for row in rows:
        if not row.holds:
            logger.warning('a_%d = %d differs from b_%d = %d', row.k, row.wilf_classes, row.k + 1,
                           row.palindrome_sets)

    return rows

# endregion

# region Avoidance Inequality


class BonaViolation(object):
    """
        A length at which a pattern has more avoiders than the increasing pattern of the same length.
    """

    __slots__ = ('pattern', 'n', 'avoiders', 'identity_avoiders')

    def __init__(self, pattern: Permutation, n: int, avoiders: int, identity_avoiders: int) -> None:
        self.pattern = pattern
        self.n = n
        self.avoiders = avoiders
        self.identity_avoiders = identity_avoiders

    def __repr__(self) -> str:
        return f'BonaViolation({self.pattern}, n={self.n}, {self.avoiders} > {self.identity_avoiders})'


class BonaReport(object):
    """
        The avoider counts of every pattern of one length compared with those of the increasing pattern.
    """

    def __init__(self, k: int, nmax: int, counts: Dict[Permutation, List[int]], violations: List[BonaViolation]):
        """
            :param k: The pattern length.
            :param nmax: The largest compared length.
            :param counts: The avoider counts ``|S_n(τ)|`` for ``n = 0, ..., nmax`` per pattern.
            :param violations: All violations of the inequality, by pattern and length.
        """

        self.k = k
        self.nmax = nmax
        self.counts = counts
        self.violations = violations

    @property
    def holds(self) -> bool:
        return not self.violations

    def __repr__(self) -> str:
        return f'BonaReport(k={self.k}, nmax={self.nmax}, {len(self.violations)} violations)'


def check_bona(k: int, nmax: int) -> BonaReport:
    """
        Check ``|S_n(τ)| <= |S_n(12...k)|`` for every pattern ``τ`` of length `k` and every ``n <= nmax``.

        :param k: The pattern length, from 2 to :attr:`.Limits.max_bona_length`.
        :param nmax: The largest length, at most :attr:`.Limits.max_bona_order`.
        :return: The report with all violations.
        :raise CeilingExceededError: If `k` or `nmax` exceeds its ceiling.
        :raise InvalidPatternError: If `k` is smaller than 2.
    """

    check_ceiling('pattern length', k, Limits.max_bona_length)
    check_ceiling('order', nmax, Limits.max_bona_order, enumerates=False)
    if k < 2:
        raise InvalidPatternError('Patterns must have length at least 2')

    identity = Permutation.identity(k)
    bound = avoider_series(check_antichain([identity]), nmax).integers()

    counts: Dict[Permutation, List[int]] = {}
    violations: List[BonaViolation] = []
    for tau in enumerate_permutations(k, Limits.max_bona_length):
        values = bound if tau == identity else avoider_series(check_antichain([tau]), nmax).integers()
        counts[tau] = values
        violations.extend(BonaViolation(tau, n, value, bound[n])
                          for n, value in enumerate(values) if value > bound[n])

    logger.debug('Avoidance inequality for k = %d up to %d: %d violations', k, nmax, len(violations))
    return BonaReport(k, nmax, counts, violations)

# endregion

# region Mesh Pattern


_MESH_P_SHADING: FrozenSet[Tuple[int, int]] = frozenset({(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2),
                                                         (2, 3), (3, 1), (3, 2)})
"""
    The shaded boxes ``(column, row)`` of the mesh pattern ``p`` on top of ``132``.
"""


def contains_mesh_p(permutation: Permutation) -> bool:
    """
        Decide by definition if a permutation contains the mesh pattern ``p``.

        An occurrence is a triple of positions whose values are order-isomorphic to ``132`` such that no other point
        lies strictly inside a shaded box. Box ``(a, b)`` spans the positions strictly between the ``a``-th and the
        ``(a+1)``-th chosen position and the values strictly between the ``b``-th and the ``(b+1)``-th smallest chosen
        value, with ``0`` and ``n + 1`` as outer boundaries.

        :param permutation: The permutation.
        :return: `True` if `permutation` contains ``p``.
    """

    values = permutation.values
    n = len(values)
    for positions in combinations(range(1, n + 1), 3):
        first, second, third = (values[position - 1] for position in positions)
        if not first < third < second:
            continue

        columns = (0,) + positions + (n + 1,)
        rows = (0, first, third, second, n + 1)
        if not any(columns[a] < position < columns[a + 1] and rows[b] < values[position - 1] < rows[b + 1]
                   for position in range(1, n + 1) for a, b in _MESH_P_SHADING):
            return True

    return False


def _contains_mesh_p_reduced(values: Tuple[int, ...]) -> bool:
    """
        Decide containment of ``p`` in linear time: some ``j >= 2`` has ``π(j) = π(j+1) + 1 = c + 1`` and the largest
        value before ``j`` is ``c - 1``.
    """

    prefix_maximum = 0
    for j in range(1, len(values) - 1):
        prefix_maximum = max(prefix_maximum, values[j - 1])
        if values[j] == values[j + 1] + 1 and prefix_maximum == values[j + 1] - 1:
            return True

    return False


def mesh_p_count(n: int) -> int:
    """
        Count the permutations of length `n` avoiding the mesh pattern ``p``.

        :param n: The length, at most :attr:`.Limits.max_mesh`.
        :return: ``|S_n(p)|``.
        :raise CeilingExceededError: If `n` exceeds the ceiling.
    """

    check_ceiling('permutation length', n, Limits.max_mesh)
    return sum(1 for permutation in enumerate_permutations(n, Limits.max_mesh)
               if not _contains_mesh_p_reduced(permutation.values))


class MeshSeriesRow(object):
    """
        The comparison of the count and the series coefficient at one length.
    """

    __slots__ = ('n', 'count', 'coefficient')

    def __init__(self, n: int, count: int, coefficient: int) -> None:
        self.n = n
        self.count = count
        self.coefficient = coefficient

    @property
    def holds(self) -> bool:
        return self.count == self.coefficient


def mesh_p_series(order: int) -> List[int]:
    """
        :return: The coefficients of ``fsum(x / (1 + x^2))`` up to ``x^order``.
    """

    registry = MarkerRegistry()
    x = registry.x
    y = series_from_rational(RationalFunction(registry, x, 1 + x ** 2), order)
    return fsum_series(y, order).integers()


def mesh_p_series_check(nmax: int, counts: Optional[Sequence[int]] = None) -> List[MeshSeriesRow]:
    """
        Compare the avoiders of ``p`` with the coefficients of ``fsum(x / (1 + x^2))``.

        :param nmax: The largest length. At most :attr:`.Limits.max_mesh` if the counts are computed.
        :param counts: Known counts for ``n = 0, ..., nmax``, e.g. :data:`RECORDED_MESH_P_COUNTS`. Computed if not
                       given.
        :return: One row for each ``n`` from 0 to `nmax`.
        :raise CeilingExceededError: If the counts are computed and `nmax` exceeds the ceiling.
        :raise IndexOutOfRangeError: If fewer than ``nmax + 1`` counts are given.
    """

    if counts is None:
        check_ceiling('permutation length', nmax, Limits.max_mesh)
        counts = [mesh_p_count(n) for n in range(nmax + 1)]
    elif len(counts) <= nmax:
        raise IndexOutOfRangeError(nmax, 0, len(counts) - 1)

    coefficients = mesh_p_series(nmax)

    return [MeshSeriesRow(n, counts[n], coefficients[n]) for n in range(nmax + 1)]

# endregion
