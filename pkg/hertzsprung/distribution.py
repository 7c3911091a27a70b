#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Distributions of Hertzsprung patterns over all permutations, computed with the cluster method, together with
    closed forms and brute-force oracles to check them against.

    For an antichain ``T`` with cluster generating function ``C(u; x)``, the joint distribution of the patterns of ``T``
    is ``fsum(x + C(u - 1; x))`` where ``fsum(y) = sum(m! * y^m)``. Substituting ``u = 0`` counts the avoiders.
"""

from typing import Dict
from typing import Iterable
from typing import Optional
from typing import Tuple
from typing import Union

from logging import getLogger
from math import comb
from math import factorial

from .algebra import MarkerRegistry
from .algebra import MultiPoly
from .algebra import RationalFunction
from .algebra import TruncatedSeries
from .algebra import factorial_tail_series
from .algebra import fsum_series
from .algebra import series_from_rational
from .clusters import PatternSet
from .clusters import build_end_in_digraph
from .clusters import build_transfer_digraph
from .clusters import correlation_poly
from .clusters import is_self_overlapping
from .config import Limits
from .config import check_ceiling
from .enums import JacksonReadVariant
from .errors import InvalidPatternError
from .errors import PatternNotInSetError
from .errors import SelfOverlappingPatternError
from .permutation import Permutation
from .permutation import enumerate_permutations
from .permutation import occurrence_count

logger = getLogger(__name__)

# region Cluster Method


def _permutation_series(cluster: RationalFunction, order: int) -> TruncatedSeries:
    """
        :return: ``fsum(x + cluster)`` truncated at `order`.
    """

    registry = cluster.registry
    y = TruncatedSeries.variable(registry, order) + series_from_rational(cluster, order)
    return fsum_series(y, order)


def joint_distribution_series(patterns: PatternSet, order: Optional[int] = None) -> TruncatedSeries:
    """
        Compute the joint distribution of the patterns of an antichain.

        :param patterns: The pattern set.
        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :return: The series whose coefficient of ``x^n`` is ``sum(prod(u_τ^τ(π)) for π in S_n)`` where ``τ(π)`` is the
                 number of occurrences of ``τ`` in ``π``.
    """

    if order is None:
        order = Limits.order()

    cluster = build_transfer_digraph(patterns).shift(-1).cluster_gf()
    return _permutation_series(cluster, order)


def avoider_series(patterns: PatternSet, order: Optional[int] = None) -> TruncatedSeries:
    """
        Count the permutations avoiding every pattern of an antichain.

        The markers are specialized before the determinants are taken, so only polynomials in ``x`` are involved.

        :param patterns: The pattern set.
        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :return: The marker-free series ``sum(|S_n(T)| x^n)``.
    """

    if order is None:
        order = Limits.order()

    cluster = build_transfer_digraph(patterns).specialize(-1).cluster_gf()
    logger.debug('Avoider cluster function of %s: %s', patterns, cluster)
    return _permutation_series(cluster, order)


def end_pattern_series(patterns: PatternSet, alpha: Permutation, order: Optional[int] = None) -> TruncatedSeries:
    """
        Count the permutations that avoid an antichain except for a single occurrence of one of its patterns at the end.

        The series is ``C^α(-1; x) * sum(m! * (x + C(-1; x))^(m-1) for m >= 1)``.

        :param patterns: The pattern set.
        :param alpha: The pattern allowed once, as a suffix.
        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :return: The marker-free series of the counts.
        :raise PatternNotInSetError: If `alpha` is not in `patterns`.
    """

    if order is None:
        order = Limits.order()

    if alpha not in patterns:
        raise PatternNotInSetError(alpha)

    registry = patterns.registry
    cluster = build_transfer_digraph(patterns).specialize(-1).cluster_gf()
    ending = build_end_in_digraph(patterns, alpha).specialize(-1).cluster_gf()

    y = TruncatedSeries.variable(registry, order) + series_from_rational(cluster, order)
    return series_from_rational(ending, order) * factorial_tail_series(y, order)


def single_pattern_series(tau: Permutation, order: Optional[int] = None) -> TruncatedSeries:
    """
        Compute the distribution of a single pattern from its autocorrelation alone:
        ``fsum(x + (u - 1) x^k / (1 - (u - 1) Ω(τ, τ)))``.

        :param tau: A pattern of length ``k >= 2``.
        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :return: The distribution series with the marker of `tau`.
        :raise InvalidPatternError: If `tau` is shorter than 2.
    """

    if order is None:
        order = Limits.order()

    if len(tau) < 2:
        raise InvalidPatternError(f'Pattern {tau} is shorter than 2')

    registry = MarkerRegistry([tau])
    marker = registry.marker(tau) - 1
    cluster = RationalFunction(registry,
                               marker * registry.x ** len(tau),
                               1 - marker * correlation_poly(tau, tau, registry))
    return _permutation_series(cluster, order)


def monotone_runs_series(k: int, l: int, order: Optional[int] = None) -> TruncatedSeries:
    """
        Compute the joint distribution of the increasing pattern of length `k` and the decreasing pattern of length `l`
        in closed form: ``fsum(x + (u-1) x^k / (1 - (u-1)([k]-1)) + (v-1) x^l / (1 - (v-1)([l]-1)))`` with
        ``[k] = 1 + x + ... + x^(k-1)``.

        :param k: The length of the increasing pattern, at least 2.
        :param l: The length of the decreasing pattern, at least 2.
        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :return: The series with the markers of ``12...k`` and ``l...21``, in this order.
    """

    if order is None:
        order = Limits.order()

    if k < 2 or l < 2:
        raise InvalidPatternError('Monotone patterns must have length at least 2')

    increasing = Permutation.identity(k)
    decreasing = Permutation.reverse_identity(l)
    registry = MarkerRegistry([increasing, decreasing])
    x = registry.x

    cluster = RationalFunction(registry, registry.zero)
    for pattern, length in ((increasing, k), (decreasing, l)):
        marker = registry.marker(pattern) - 1
        bracket = sum((x ** i for i in range(1, length)), registry.zero)
        cluster = cluster + RationalFunction(registry, marker * x ** length, 1 - marker * bracket)

    return _permutation_series(cluster, order)


def ascent_distribution_series(order: Optional[int] = None) -> TruncatedSeries:
    """
        Compute the distribution of the pattern ``12`` in closed form: ``fsum(x / (1 - (u - 1) x))``.

        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :return: The series with the marker of ``12``.
    """

    if order is None:
        order = Limits.order()

    ascent = Permutation.identity(2)
    registry = MarkerRegistry([ascent])
    x = registry.x
    cluster = RationalFunction(registry, x, 1 - (registry.marker(ascent) - 1) * x) - x
    return _permutation_series(cluster, order)


def salient_series(order: Optional[int] = None) -> TruncatedSeries:
    """
        Count the permutations avoiding ``21`` and ``312`` in closed form: ``fsum(x (1 - x))``.
    """

    if order is None:
        order = Limits.order()

    registry = MarkerRegistry()
    x = registry.x
    return fsum_series(TruncatedSeries.from_poly(x - x ** 2, registry, order), order)

# endregion

# region Brute Force


def brute_force_distribution(patterns: Union[PatternSet, Iterable[Permutation]], n: int) -> MultiPoly:
    """
        Compute the joint distribution of a set of patterns over the permutations of one length by enumeration.

        :param patterns: The patterns. Need not be an antichain.
        :param n: The length, at most :attr:`.Limits.max_brute`.
        :return: ``sum(prod(u_τ^τ(π)) for π in S_n)`` in the registry of the patterns.
        :raise CeilingExceededError: If `n` exceeds the brute-force ceiling.
    """

    check_ceiling('permutation length', n, Limits.max_brute)
    if isinstance(patterns, PatternSet):
        registry = patterns.registry
    else:
        registry = MarkerRegistry(patterns)

    counts: Dict[Tuple[int, ...], int] = {}
    for permutation in enumerate_permutations(n, Limits.max_brute):
        key = tuple(occurrence_count(pattern, permutation) for pattern in registry.patterns) + (0,)
        counts[key] = counts.get(key, 0) + 1

    return registry.ring.from_dict(counts)

# endregion

# region Closed Forms


def _binomial(n: int, k: int) -> int:
    """
        :return: The binomial coefficient, 0 if `n` or `k` is negative or `k` exceeds `n`.
    """

    if n < 0 or k < 0 or k > n:
        return 0

    return comb(n, k)


def hertzsprung_closed_form(n: int) -> int:
    """
        Count the permutations of length `n` without two adjacent letters of adjacent value:
        ``n! + sum((-1)^k sum(C(k-1, i-1) C(n-k, i) 2^i (n-k)! for 1 <= i <= k) for 1 <= k <= n)``.

        :param n: The length.
        :return: The count.
    """

    total = factorial(n)
    for k in range(1, n + 1):
        inner = sum(_binomial(k - 1, i - 1) * _binomial(n - k, i) * 2 ** i for i in range(1, k + 1))
        total += (-1) ** k * inner * factorial(n - k)

    return total


def myers_count(tau: Permutation, n: int, m: int) -> int:
    """
        Count the permutations of length `n` with exactly `m` occurrences of a non-self-overlapping pattern:
        ``sum((-1)^(i-m) C(i, m) C(n-(k-1)i, i) (n-(k-1)i)!)`` over all ``i`` keeping the factorial defined.

        :param tau: A pattern of length ``k`` that does not overlap itself.
        :param n: The length of the permutations.
        :param m: The number of occurrences.
        :return: The count.
        :raise SelfOverlappingPatternError: If `tau` overlaps itself.
    """

    if is_self_overlapping(tau):
        raise SelfOverlappingPatternError(tau)

    k = len(tau)
    total = 0
    i = m
    while n - (k - 1) * i >= 0:
        rest = n - (k - 1) * i
        total += (-1) ** (i - m) * _binomial(i, m) * _binomial(rest, i) * factorial(rest)
        i += 1

    return total


def jackson_read_gf(k: int, variant: JacksonReadVariant, order: Optional[int] = None) -> TruncatedSeries:
    """
        Count the avoiders of monotone patterns in closed form.

        The variant :attr:`.JacksonReadVariant.SINGLE` counts the avoiders of ``12...k`` as
        ``fsum((x - x^k) / (1 - x^k))``; :attr:`.JacksonReadVariant.PAIR` counts the avoiders of ``12...k`` and
        ``k...21`` as ``fsum((x - 2x^k + x^(k+1)) / (1 - x^k))``.

        :param k: The pattern length, at least 2.
        :param variant: Which patterns to avoid.
        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :return: The marker-free series of the counts.
        :raise InvalidPatternError: If `k` is smaller than 2.
    """

    if order is None:
        order = Limits.order()

    if k < 2:
        raise InvalidPatternError('Monotone patterns must have length at least 2')

    registry = MarkerRegistry()
    x = registry.x
    if variant is JacksonReadVariant.SINGLE:
        numerator = x - x ** k
    else:
        numerator = x - 2 * x ** k + x ** (k + 1)

    y = series_from_rational(RationalFunction(registry, numerator, 1 - x ** k), order)
    return fsum_series(y, order)


def jackson_id_distribution(k: int, order: Optional[int] = None) -> TruncatedSeries:
    """
        Compute the distribution of the increasing pattern of length `k` in closed form:
        ``fsum(x (1 - ux - (1-u) x^(k-1)) / (1 - ux - (1-u) x^k))``.

        :param k: The pattern length, at least 2.
        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :return: The series with the marker of ``12...k``.
        :raise InvalidPatternError: If `k` is smaller than 2.
    """

    if order is None:
        order = Limits.order()

    if k < 2:
        raise InvalidPatternError('Monotone patterns must have length at least 2')

    registry = MarkerRegistry([Permutation.identity(k)])
    x = registry.x
    u = registry.marker(Permutation.identity(k))
    numerator = x * (1 - u * x - (1 - u) * x ** (k - 1))
    denominator = 1 - u * x - (1 - u) * x ** k

    y = series_from_rational(RationalFunction(registry, numerator, denominator), order)
    return fsum_series(y, order)

# endregion
