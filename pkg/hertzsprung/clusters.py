#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Overlaps of Hertzsprung patterns, their correlation polynomials, the weighted transfer digraph of a pattern set and
    the resulting cluster generating functions.

    A cluster is a permutation together with a set of marked pattern occurrences that cover every position and whose
    overlap graph is connected. The cluster generating function counts clusters by length (``x``) and by the number of
    marked occurrences of each pattern (one marker ``u_τ`` per pattern).
"""

from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

from logging import getLogger

from .algebra import MarkerRegistry
from .algebra import MultiPoly
from .algebra import PolyMatrix
from .algebra import RationalFunction
from .algebra import Scalar
from .algebra import render_poly
from .config import Limits
from .config import check_ceiling
from .errors import DuplicatePatternError
from .errors import IndexOutOfRangeError
from .errors import InvalidPatternError
from .errors import NotAnAntichainError
from .errors import PatternNotInSetError
from .permutation import Permutation
from .permutation import contains
from .permutation import enumerate_permutations
from .permutation import find_occurrences

logger = getLogger(__name__)

_PLAIN = MarkerRegistry()
"""
    The registry without markers, the ring of polynomials in ``x`` alone.
"""

# region Pattern Sets


class PatternSet(object):
    """
        An ordered antichain of Hertzsprung patterns, each of length at least 2, together with its marker registry.

        Use :func:`check_antichain` to create pattern sets.
    """

    def __init__(self, patterns: Sequence[Permutation]) -> None:
        """
            :param patterns: The patterns in their fixed order. Must be a duplicate-free antichain.
            :raise DuplicatePatternError: If a pattern is given twice.
            :raise InvalidPatternError: If a pattern is shorter than 2.
            :raise NotAnAntichainError: If a pattern occurs in another one.
        """

        _validate(patterns)
        for contained, container in _containments(patterns):
            raise NotAnAntichainError(contained, container)

        self._patterns: Tuple[Permutation, ...] = tuple(patterns)
        self._registry = MarkerRegistry(self._patterns)

    @property
    def patterns(self) -> Tuple[Permutation, ...]:
        return self._patterns

    @property
    def registry(self) -> MarkerRegistry:
        """
            The registry with one marker per pattern, in the order of the patterns.
        """
        return self._registry

    def __len__(self) -> int:
        return len(self._patterns)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._patterns)

    def __contains__(self, pattern: object) -> bool:
        return pattern in self._patterns

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PatternSet):
            return NotImplemented

        return self._patterns == other._patterns

    def __hash__(self) -> int:
        return hash(self._patterns)

    def __str__(self) -> str:
        return '{' + ', '.join(str(pattern) for pattern in self._patterns) + '}'

    def __repr__(self) -> str:
        return f'PatternSet({str(self)})'


def _validate(patterns: Sequence[Permutation]) -> None:
    seen: Set[Permutation] = set()
    for pattern in patterns:
        if len(pattern) < 2:
            raise InvalidPatternError(f'Pattern {pattern} is shorter than 2')

        if pattern in seen:
            raise DuplicatePatternError(pattern)

        seen.add(pattern)


def _containments(patterns: Sequence[Permutation]) -> Iterator[Tuple[Permutation, Permutation]]:
    for container in patterns:
        for contained in patterns:
            if contained != container and contains(container, contained):
                yield contained, container


def check_antichain(patterns: Iterable[Permutation], reduce: bool = False) -> PatternSet:
    """
        Check that no pattern of a set is a Hertzsprung factor of another and create the pattern set.

        :param patterns: The patterns, each of length at least 2.
        :param reduce: If `True`, patterns containing another member are dropped instead of rejected. Such patterns
                       do not change the set of avoiders.
        :return: The pattern set, in the given order.
        :raise DuplicatePatternError: If a pattern is given twice.
        :raise InvalidPatternError: If a pattern is shorter than 2.
        :raise NotAnAntichainError: If `reduce` is `False` and a pattern occurs in another one. The error names the
                                    offending pair.
    """

    patterns = list(patterns)
    _validate(patterns)

    if reduce:
        redundant = {container for _, container in _containments(patterns)}
        if redundant:
            logger.debug('Dropping redundant patterns %s', ', '.join(str(pattern) for pattern in sorted(redundant)))

        patterns = [pattern for pattern in patterns if pattern not in redundant]

    return PatternSet(patterns)

# endregion

# region Overlaps


def _overlap_difference(sigma: Permutation, tau: Permutation, i: int) -> Optional[int]:
    """
        :return: The constant difference of the last `i` letters of `sigma` and the first `i` letters of `tau` if they
                 form an admissible overlap, `None` otherwise.
    """

    suffix = sigma.values[len(sigma) - i:]
    prefix = tau.values[:i]
    difference = suffix[0] - prefix[0]
    if any(a - b != difference for a, b in zip(suffix, prefix)):
        return None

    if difference == len(sigma) - i or difference == -(len(tau) - i):
        return difference

    return None


def chi(sigma: Permutation, tau: Permutation, i: int) -> int:
    """
        Determine if `sigma` and `tau` overlap in exactly `i` letters.

        :param sigma: The left pattern.
        :param tau: The right pattern.
        :param i: The overlap amount, ``1 <= i <= min(|σ|, |τ|) - 1``.
        :return: 1 if the last `i` letters of `sigma` minus the first `i` letters of `tau` are constant and that
                 constant is ``|σ| - i`` or ``-(|τ| - i)``; 0 otherwise.
        :raise IndexOutOfRangeError: If `i` is out of range.
    """

    upper = min(len(sigma), len(tau)) - 1
    if not 1 <= i <= upper:
        raise IndexOutOfRangeError(i, 1, upper)

    return 0 if _overlap_difference(sigma, tau, i) is None else 1


def overlap_set(sigma: Permutation, tau: Permutation) -> Set[Permutation]:
    """
        Get all permutations with `sigma` as a proper Hertzsprung prefix and `tau` as a proper Hertzsprung suffix that
        are shorter than ``|σ| + |τ|``.

        The permutations are constructed from the admissible overlap amounts: if the overlap difference is ``|σ| - i``,
        `tau` continues above `sigma`; if it is ``-(|τ| - i)``, `sigma` is lifted above `tau`.

        :param sigma: The prefix pattern, of length at least 2.
        :param tau: The suffix pattern, of length at least 2.
        :return: The overlap set (possibly empty).
        :raise InvalidPatternError: If a pattern is shorter than 2.
    """

    if len(sigma) < 2 or len(tau) < 2:
        raise InvalidPatternError('Overlaps are defined for patterns of length at least 2')

    overlaps = set()
    for i in range(1, min(len(sigma), len(tau))):
        difference = _overlap_difference(sigma, tau, i)
        if difference is None:
            continue

        if difference == len(sigma) - i:
            values = sigma.values + tuple(value + difference for value in tau.values[i:])
        else:
            lift = len(tau) - i
            values = tuple(value + lift for value in sigma.values[:len(sigma) - i]) + tau.values

        overlaps.add(Permutation(values))

    return overlaps


def correlation_exponents(sigma: Permutation, tau: Permutation) -> Tuple[int, ...]:
    """
        :return: The exponents ``|τ| - i`` of the nonzero terms of ``Ω(σ, τ)``, in descending order.
    """
    return tuple(len(tau) - i for i in range(1, min(len(sigma), len(tau)))
                 if _overlap_difference(sigma, tau, i) is not None)


def correlation_poly(sigma: Permutation, tau: Permutation, registry: Optional[MarkerRegistry] = None) -> MultiPoly:
    """
        Compute the correlation polynomial ``Ω(σ, τ) = sum(chi(σ, τ, i) * x^(|τ| - i))``.

        :param sigma: The left pattern.
        :param tau: The right pattern.
        :param registry: The registry of the result. Defaults to the registry without markers.
        :return: The polynomial in ``x``. Zero if a pattern has length 1.
    """

    if registry is None:
        registry = _PLAIN

    x = registry.x
    return sum((x ** exponent for exponent in correlation_exponents(sigma, tau)), registry.zero)


def is_self_overlapping(tau: Permutation) -> bool:
    """
        :param tau: A pattern of length at least 2.
        :return: `True` if `tau` overlaps itself, i.e. ``Ω(τ, τ) != 0``.
        :raise InvalidPatternError: If `tau` is shorter than 2.
    """

    if len(tau) < 2:
        raise InvalidPatternError(f'Pattern {tau} is shorter than 2')

    return bool(correlation_poly(tau, tau))

# endregion

# region Transfer Digraph


class TransferDigraph(object):
    """
        The weighted digraph on the vertices ``ε, τ_1, ..., τ_t`` (optionally followed by an unmarked copy ``α̂`` of a
        pattern ``α``) whose adjacency matrix determines the cluster generating function.
    """

    def __init__(self, patterns: PatternSet, matrix: PolyMatrix, end_pattern: Optional[Permutation] = None) -> None:
        """
            :param patterns: The pattern set.
            :param matrix: The adjacency matrix, in vertex order.
            :param end_pattern: The pattern ``α`` of the extra vertex ``α̂``, if any.
        """

        self.patterns = patterns
        self.matrix = matrix
        self.end_pattern = end_pattern

    @property
    def registry(self) -> MarkerRegistry:
        return self.patterns.registry

    @property
    def vertices(self) -> List[str]:
        """
            The vertex labels in matrix order: ``ε``, the patterns, and ``α̂`` for the extended digraph.
        """

        labels = ['ε'] + [str(pattern) for pattern in self.patterns]
        if self.end_pattern is not None:
            labels.append(f'{self.end_pattern}^')

        return labels

    def edges(self) -> List[Tuple[str, str, MultiPoly]]:
        """
            :return: All edges with nonzero weight as ``(source, target, weight)``, in matrix order.
        """

        labels = self.vertices
        return [(labels[i], labels[j], weight)
                for i, row in enumerate(self.matrix.rows)
                for j, weight in enumerate(row)
                if weight]

    def specialize(self, value: Scalar) -> 'TransferDigraph':
        """
            :return: The digraph with every marker of every weight replaced by `value`.
        """

        registry = self.registry
        return TransferDigraph(self.patterns,
                               self.matrix.map(lambda weight: registry.specialize(weight, value)),
                               self.end_pattern)

    def shift(self, offset: Scalar) -> 'TransferDigraph':
        """
            :return: The digraph with every marker ``u`` of every weight replaced by ``u + offset``.
        """

        registry = self.registry
        return TransferDigraph(self.patterns,
                               self.matrix.map(lambda weight: registry.shift(weight, offset)),
                               self.end_pattern)

    def cluster_gf(self) -> RationalFunction:
        """
            Compute the cluster generating function from the adjacency matrix ``A``.

            Without an end vertex, this is ``(1/det(1-A)) * sum((-1)^i * det(1-A : i+1, 1) for 1 <= i <= t)``. With
            the end vertex ``α̂``, it is ``(-1)^(t+1) * det(1-A : t+2, 1) / det(1-A)``. Minor indices are 1-based.

            :return: The cluster generating function.
        """

        t = len(self.patterns)
        unit = self.matrix.one_minus()
        denominator = unit.det()

        if self.end_pattern is None:
            numerator = self.registry.zero
            for i in range(1, t + 1):
                minor = unit.minor(i + 1, 1).det()
                numerator += minor if i % 2 == 0 else -minor
        else:
            minor = unit.minor(t + 2, 1).det()
            numerator = minor if (t + 1) % 2 == 0 else -minor

        return RationalFunction(self.registry, numerator, denominator)

    def render(self) -> List[str]:
        """
            :return: One line ``source -> target : weight`` per edge.
        """
        return [f'{source} -> {target} : {render_poly(weight)}' for source, target, weight in self.edges()]


def build_transfer_digraph(patterns: PatternSet) -> TransferDigraph:
    """
        Build the weighted digraph of a pattern set.

        The weight of an edge ``σ -> τ`` is 0 if ``τ = ε``, ``u_τ x^|τ|`` if ``σ = ε`` and ``u_τ Ω(σ, τ)`` otherwise.

        :param patterns: The pattern set.
        :return: The digraph with vertex order ``[ε, τ_1, ..., τ_t]``.
    """

    registry = patterns.registry
    x = registry.x
    zero = registry.zero

    rows = [[zero] + [registry.marker(tau) * x ** len(tau) for tau in patterns]]
    for sigma in patterns:
        rows.append([zero] + [registry.marker(tau) * correlation_poly(sigma, tau, registry) for tau in patterns])

    logger.debug('Built transfer digraph with %d vertices for %s', len(rows), patterns)
    return TransferDigraph(patterns, PolyMatrix(registry, rows))


def build_end_in_digraph(patterns: PatternSet, alpha: Permutation) -> TransferDigraph:
    """
        Extend the digraph of a pattern set with an unmarked copy ``α̂`` of one of its patterns.

        The edge ``ε -> α̂`` weighs ``x^|α|``, an edge ``σ -> α̂`` weighs ``Ω(σ, α)``. No edge leaves ``α̂``.

        :param patterns: The pattern set.
        :param alpha: The pattern the clusters have to end in.
        :return: The extended digraph with vertex order ``[ε, τ_1, ..., τ_t, α̂]``.
        :raise PatternNotInSetError: If `alpha` is not in `patterns`.
    """

    if alpha not in patterns:
        raise PatternNotInSetError(alpha)

    registry = patterns.registry
    x = registry.x
    zero = registry.zero
    base = build_transfer_digraph(patterns).matrix.rows

    rows = [list(base[0]) + [x ** len(alpha)]]
    for sigma, row in zip(patterns, base[1:]):
        rows.append(list(row) + [correlation_poly(sigma, alpha, registry)])

    rows.append([zero] * (len(patterns) + 2))
    return TransferDigraph(patterns, PolyMatrix(registry, rows), alpha)


def cluster_gf(patterns: PatternSet) -> RationalFunction:
    """
        :param patterns: The pattern set.
        :return: The cluster generating function ``C(u; x)`` of the pattern set.
    """
    return build_transfer_digraph(patterns).cluster_gf()


def cluster_gf_end_in(patterns: PatternSet, alpha: Permutation) -> RationalFunction:
    """
        :param patterns: The pattern set.
        :param alpha: A pattern of the set.
        :return: The generating function ``C^α(u; x)`` of clusters ending in an unmarked occurrence of `alpha`.
        :raise PatternNotInSetError: If `alpha` is not in `patterns`.
    """
    return build_end_in_digraph(patterns, alpha).cluster_gf()

# endregion

# region Brute Force


def _is_cluster(intervals: Sequence[Tuple[int, int]], n: int) -> bool:
    """
        Determine if sorted position intervals cover ``1..n`` with a connected overlap graph.
    """

    reach = 0
    for start, end in intervals:
        if reach == 0 and start != 1:
            return False

        if reach > 0 and start > reach:
            return False

        reach = max(reach, end)

    return reach == n


def _marks(occurrences: Sequence[Tuple[int, int, int]]) -> Iterator[List[Tuple[int, int, int]]]:
    count = len(occurrences)
    for subset in range(1, 1 << count):
        yield [occurrences[i] for i in range(count) if subset >> i & 1]


def brute_force_clusters(patterns: PatternSet, n: int) -> MultiPoly:
    """
        Count the clusters of length `n` by their definition.

        Every permutation of length `n` is enumerated together with every nonempty subset of its pattern occurrences;
        the subset is a cluster if its occurrences cover all positions and overlap in a connected way.

        :param patterns: The pattern set.
        :param n: The length, at most :attr:`.Limits.max_brute`.
        :return: The sum of ``prod(u_τ^(number of marked occurrences of τ))`` over all clusters of length `n`.
        :raise CeilingExceededError: If `n` exceeds the brute-force ceiling.
    """

    check_ceiling('cluster length', n, Limits.max_brute)
    registry = patterns.registry
    t = len(patterns)

    counts: Dict[Tuple[int, ...], int] = {}
    for permutation in enumerate_permutations(n, Limits.max_brute):
        occurrences = [(start, start + len(pattern) - 1, index)
                       for index, pattern in enumerate(patterns)
                       for start in find_occurrences(pattern, permutation)]
        if not occurrences:
            continue

        covered = set()
        for start, end, _ in occurrences:
            covered.update(range(start, end + 1))

        if len(covered) < n:
            continue

        occurrences.sort()
        for marks in _marks(occurrences):
            if not _is_cluster([(start, end) for start, end, _ in marks], n):
                continue

            exponents = [0] * (t + 1)
            for _, _, index in marks:
                exponents[index] += 1

            key = tuple(exponents)
            counts[key] = counts.get(key, 0) + 1

    return registry.ring.from_dict({monomial: count for monomial, count in counts.items()})

# endregion
