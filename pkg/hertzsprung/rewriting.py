#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Pattern-rewriting systems: length-preserving rules ``α -> β`` applied to Hertzsprung occurrences.

    A rule rewrites an occurrence of ``α`` at some position, with values shifted by some ``c``, into ``β`` shifted by the
    same ``c``. If the rewrite relation is terminating and confluent, every equivalence class of its equivalence closure
    contains exactly one normal form, and the normal forms are exactly the permutations avoiding the left-hand sides.
"""

from typing import Callable
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

from functools import lru_cache
from logging import getLogger

from .algebra import TruncatedSeries
from .clusters import PatternSet
from .clusters import check_antichain
from .clusters import overlap_set
from .config import Limits
from .config import check_ceiling
from .disjoint_set import DisjointSet
from .distribution import avoider_series
from .enums import TerminationMethod
from .enums import Verdict
from .errors import InvalidRuleError
from .errors import NonConfluentSystemError
from .errors import TerminationNotVerifiedError
from .errors import UnknownSystemError
from .permutation import Permutation
from .permutation import enumerate_permutations
from .permutation import find_occurrences
from .permutation import occurrence_count

logger = getLogger(__name__)

# region Rules and Systems


class RewriteRule(object):
    """
        A length-preserving rule ``lhs -> rhs``.
    """

    __slots__ = ('lhs', 'rhs')

    def __init__(self, lhs: Permutation, rhs: Permutation) -> None:
        """
            :param lhs: The pattern to replace.
            :param rhs: The replacement, of the same length.
            :raise InvalidRuleError: If the sides differ in length or are equal.
        """

        if len(lhs) != len(rhs):
            raise InvalidRuleError(f'Rule {lhs} -> {rhs} does not preserve the length')

        if lhs == rhs:
            raise InvalidRuleError(f'Rule {lhs} -> {rhs} does not change anything')

        self.lhs = lhs
        self.rhs = rhs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RewriteRule):
            return NotImplemented

        return (self.lhs, self.rhs) == (other.lhs, other.rhs)

    def __hash__(self) -> int:
        return hash((self.lhs, self.rhs))

    def __str__(self) -> str:
        return f'{self.lhs} -> {self.rhs}'

    def __repr__(self) -> str:
        return f'RewriteRule({str(self)!r})'


class Statistic(object):
    """
        A named permutation statistic, used to certify termination.
    """

    def __init__(self, name: str, function: Callable[[Permutation], int]) -> None:
        """
            :param name: The name shown in reports.
            :param function: The statistic.
        """

        self.name = name
        self._function = function

    def __call__(self, permutation: Permutation) -> int:
        return self._function(permutation)

    def __repr__(self) -> str:
        return f'Statistic({self.name!r})'

    @classmethod
    def sigma(cls, tau: Permutation) -> 'Statistic':
        """
            :return: The sum of the start positions of the occurrences of `tau`.
        """
        return cls(f'Sigma_{tau}', lambda permutation: statistic_sigma(tau, permutation))

    @classmethod
    def occurrences(cls, tau: Permutation) -> 'Statistic':
        """
            :return: The number of occurrences of `tau`.
        """
        return cls(f'occurrences of {tau}', lambda permutation: occurrence_count(tau, permutation))


class RewriteSystem(object):
    """
        An ordered list of distinct rewrite rules.

        Rule order determines the deterministic rewriting strategy of :func:`normal_form`.
    """

    def __init__(self, rules: Iterable[RewriteRule], name: Optional[str] = None,
                 statistic: Optional[Statistic] = None) -> None:
        """
            :param rules: The rules.
            :param name: An optional name of the system.
            :param statistic: An optional statistic expected to increase along every rewrite step.
            :raise InvalidRuleError: If a rule is repeated.
        """

        self.rules: Tuple[RewriteRule, ...] = tuple(rules)
        if len(set(self.rules)) != len(self.rules):
            raise InvalidRuleError('A rewriting system must not repeat a rule')

        self.name = name
        self.statistic = statistic

    def domain(self) -> List[Permutation]:
        """
            :return: The distinct left-hand sides, in rule order.
        """

        domain: List[Permutation] = []
        for rule in self.rules:
            if rule.lhs not in domain:
                domain.append(rule.lhs)

        return domain

    @property
    def max_length(self) -> int:
        """
            The length of the longest rule, 0 for the empty system.
        """
        return max((len(rule.lhs) for rule in self.rules), default=0)

    def text(self) -> str:
        """
            :return: The system in the rule-file format, one rule per line.
        """
        return ''.join(f'{rule}\n' for rule in self.rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RewriteSystem):
            return NotImplemented

        return self.rules == other.rules

    def __hash__(self) -> int:
        return hash(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        label = f'{self.name} ' if self.name else ''
        return label + '{' + ', '.join(str(rule) for rule in self.rules) + '}'

# endregion

# region Rewriting


def rewrite_successors(permutation: Permutation, system: RewriteSystem) -> Set[Permutation]:
    """
        Get all permutations reachable in one rewrite step.

        :param permutation: The permutation to rewrite.
        :param system: The rewriting system.
        :return: The distinct results of rewriting a single occurrence of some left-hand side.
    """

    successors = set()
    values = permutation.values
    for rule in system.rules:
        for start in find_occurrences(rule.lhs, permutation):
            successors.add(_apply(values, rule, start))

    return successors


def _apply(values: Tuple[int, ...], rule: RewriteRule, start: int) -> Permutation:
    """
        Rewrite the occurrence of the rule's left-hand side at the 1-based position `start`.
    """

    offset = values[start - 1] - rule.lhs[0]
    end = start - 1 + len(rule.lhs)
    replaced = values[:start - 1] + tuple(value + offset for value in rule.rhs) + values[end:]
    return Permutation._trusted(replaced)


def _first_step(permutation: Permutation, system: RewriteSystem) -> Optional[Permutation]:
    for rule in system.rules:
        positions = find_occurrences(rule.lhs, permutation)
        if positions:
            return _apply(permutation.values, rule, positions[0])

    return None


def statistic_sigma(tau: Permutation, permutation: Permutation) -> int:
    """
        :return: The sum of the 1-based start positions of the occurrences of `tau` in `permutation`.
    """
    return sum(find_occurrences(tau, permutation))


class NormalForm(object):
    """
        The result of rewriting a permutation until no rule applies.
    """

    def __init__(self, permutation: Permutation, unique: bool, steps: int) -> None:
        """
            :param permutation: The normal form reached.
            :param unique: `True` if the system is confluent, so that every strategy reaches this normal form.
            :param steps: The number of rewrite steps taken.
        """

        self.permutation = permutation
        self.unique = unique
        self.steps = steps

    def __repr__(self) -> str:
        return f'NormalForm({self.permutation}, unique={self.unique}, steps={self.steps})'


def normal_form(permutation: Permutation, system: RewriteSystem,
                termination: Optional['TerminationReport'] = None,
                confluence: Optional['ConfluenceReport'] = None) -> NormalForm:
    """
        Rewrite a permutation with the first applicable rule (in system order) at its leftmost occurrence until no
        rule applies.

        :param permutation: The permutation.
        :param system: The rewriting system.
        :param termination: A termination report covering the length of `permutation`. Computed if not given.
        :param confluence: The confluence report of the system. Computed if not given.
        :return: The normal form and whether it is unique.
        :raise TerminationNotVerifiedError: If termination is not verified for the length of `permutation`.
    """

    n = len(permutation)
    if termination is None:
        if n > Limits.max_brute:
            raise TerminationNotVerifiedError(n)

        termination = certify_termination(system, max(n, system.max_length))

    if not termination.covers(n):
        raise TerminationNotVerifiedError(n, termination.verified_up_to)

    if confluence is None:
        confluence = confluence_of(system)

    steps = 0
    current = permutation
    while True:
        following = _first_step(current, system)
        if following is None:
            break

        current = following
        steps += 1

    return NormalForm(current, confluence.verdict is Verdict.CONFLUENT, steps)

# endregion

# region Termination


class TerminationReport(object):
    """
        A bounded certificate of termination: the rewrite relation has been checked on all permutations up to a length.
    """

    def __init__(self, method: TerminationMethod, verified_up_to: int, statistic: Optional[str] = None,
                 cycle: Optional[List[Permutation]] = None,
                 violation: Optional[Tuple[Permutation, Permutation]] = None) -> None:
        """
            :param method: How termination has been checked.
            :param verified_up_to: The largest length for which the check passed.
            :param statistic: The name of the statistic, for the statistic certificate.
            :param cycle: A cycle of the rewrite relation, if one has been found.
            :param violation: A rewrite step along which the statistic does not increase, if one has been found.
        """

        self.method = method
        self.verified_up_to = verified_up_to
        self.statistic = statistic
        self.cycle = cycle
        self.violation = violation

    @property
    def certified(self) -> bool:
        """
            `True` if the check found neither a cycle nor a violating step.
        """
        return self.cycle is None and self.violation is None

    def covers(self, n: int) -> bool:
        """
            :return: `True` if termination has been verified for permutations of length `n`.
        """
        return n <= self.verified_up_to

    def __repr__(self) -> str:
        return f'TerminationReport({self.method.value}, verified_up_to={self.verified_up_to})'


def _find_cycle(roots: Iterable[Permutation], system: RewriteSystem,
                visited: Optional[Dict[Permutation, int]] = None) -> Optional[List[Permutation]]:
    """
        Search the rewrite graph reachable from the roots for a cycle with an iterative depth-first search.

        :return: The permutations of a cycle, starting and ending with the same one, or `None`.
    """

    # 1: on the current path, 2: finished.
    state: Dict[Permutation, int] = {} if visited is None else visited
    for root in roots:
        if root in state:
            continue

        state[root] = 1
        path = [root]
        pending = [iter(sorted(rewrite_successors(root, system)))]
        while pending:
            successor = next(pending[-1], None)
            if successor is None:
                state[path.pop()] = 2
                pending.pop()
                continue

            mark = state.get(successor)
            if mark == 1:
                return path[path.index(successor):] + [successor]

            if mark is None:
                state[successor] = 1
                path.append(successor)
                pending.append(iter(sorted(rewrite_successors(successor, system))))

    return None


def check_termination(system: RewriteSystem, nmax: Optional[int] = None,
                      statistic: Optional[Statistic] = None) -> TerminationReport:
    """
        Verify termination on all permutations up to a length.

        Without a statistic, the rewrite graph on each ``S_n`` is searched for cycles. With a statistic, every rewrite
        step ``π -> σ`` is checked to satisfy ``statistic(π) < statistic(σ)``. Both are bounded certificates, never a
        proof for all lengths.

        :param system: The rewriting system.
        :param nmax: The largest length to check. Defaults to :attr:`.Limits.termination_depth`.
        :param statistic: The statistic to check, if any.
        :return: The report. On failure, ``verified_up_to`` is the last length that passed and the witness is set.
        :raise CeilingExceededError: If `nmax` exceeds :attr:`.Limits.max_brute`.
    """

    if nmax is None:
        nmax = Limits.termination_depth

    check_ceiling('termination length', nmax, Limits.max_brute)

    if statistic is None:
        for n in range(1, nmax + 1):
            cycle = _find_cycle(enumerate_permutations(n, Limits.max_brute), system)
            if cycle is not None:
                logger.debug('Cycle of %s at length %d: %s', system, n, cycle)
                return TerminationReport(TerminationMethod.ACYCLICITY_SCAN, n - 1, cycle=cycle)

        return TerminationReport(TerminationMethod.ACYCLICITY_SCAN, nmax)

    for n in range(1, nmax + 1):
        for permutation in enumerate_permutations(n, Limits.max_brute):
            value = statistic(permutation)
            for successor in sorted(rewrite_successors(permutation, system)):
                if statistic(successor) <= value:
                    logger.debug('%s does not increase along %s -> %s', statistic.name, permutation, successor)
                    return TerminationReport(TerminationMethod.STATISTIC_CERTIFICATE, n - 1, statistic.name,
                                             violation=(permutation, successor))

    return TerminationReport(TerminationMethod.STATISTIC_CERTIFICATE, nmax, statistic.name)


@lru_cache(maxsize=64)
def certify_termination(system: RewriteSystem, nmax: int) -> TerminationReport:
    """
        Check termination with the system's own statistic if it has one, by a cycle search otherwise.

        Results are cached per system and length.
    """
    return check_termination(system, nmax, system.statistic)

# endregion

# region Confluence


class JoinabilityTrace(object):
    """
        The joinability check of two one-step successors of a permutation.
    """

    def __init__(self, permutation: Permutation, left: Permutation, right: Permutation,
                 common: Optional[Permutation], cycle: Optional[List[Permutation]] = None) -> None:
        """
            :param permutation: The permutation that has been rewritten.
            :param left: The first successor.
            :param right: The second successor.
            :param common: The smallest permutation reachable from both successors, `None` if there is none.
            :param cycle: A cycle met while exploring, which makes the result inconclusive.
        """

        self.permutation = permutation
        self.left = left
        self.right = right
        self.common = common
        self.cycle = cycle

    @property
    def joinable(self) -> bool:
        return self.common is not None

    def __repr__(self) -> str:
        return f'JoinabilityTrace({self.left} <- {self.permutation} -> {self.right}, common={self.common})'


class ConfluenceReport(object):
    """
        The outcome of checking local confluence on all overlaps of a rewriting system.
    """

    def __init__(self, verdict: Verdict, overlaps: List[Permutation], traces: List[JoinabilityTrace]) -> None:
        """
            :param verdict: The verdict.
            :param overlaps: The overlaps of the system's left-hand sides, sorted.
            :param traces: The joinability checks, in the order they have been made.
        """

        self.verdict = verdict
        self.overlaps = overlaps
        self.traces = traces

    @property
    def counterexample(self) -> Optional[JoinabilityTrace]:
        """
            The first pair of successors that are not joinable, if any.
        """
        return next((trace for trace in self.traces if not trace.joinable and trace.cycle is None), None)

    def __repr__(self) -> str:
        return f'ConfluenceReport({self.verdict.value}, {len(self.overlaps)} overlaps)'


def olap_of_system(system: RewriteSystem) -> Set[Permutation]:
    """
        :return: The union of the overlap sets of all ordered pairs (including equal pairs) of left-hand sides.
    """

    domain = system.domain()
    overlaps: Set[Permutation] = set()
    for first in domain:
        for second in domain:
            overlaps |= overlap_set(first, second)

    return overlaps


def _reachable(start: Permutation, system: RewriteSystem) -> Tuple[Set[Permutation], Optional[List[Permutation]]]:
    """
        :return: All permutations reachable from `start` (including itself) and a cycle if one has been met.
    """

    state: Dict[Permutation, int] = {}
    cycle = _find_cycle([start], system, state)
    if cycle is not None:
        return set(state), cycle

    return set(state), None


def check_local_confluence(system: RewriteSystem, termination: Optional[TerminationReport] = None) -> ConfluenceReport:
    """
        Check that the two successors of every one-step fork on an overlap of the system are joinable.

        Joinability is decided by intersecting the full sets of permutations reachable from both successors, which are
        finite since rules preserve length. By Newman's lemma, local confluence and termination imply confluence.

        :param system: The rewriting system.
        :param termination: A termination report covering at least the longest rule. Computed if not given.
                            Overlaps longer than the report covers are explored with a cycle check.
        :return: The report with one trace per fork.
        :raise TerminationNotVerifiedError: If the report shows a cycle or does not cover the longest rule.
    """

    if termination is None:
        termination = certify_termination(system, min(max(system.max_length, 1), Limits.max_brute))

    if not termination.certified or not termination.covers(system.max_length):
        raise TerminationNotVerifiedError(system.max_length, termination.verified_up_to)

    overlaps = sorted(olap_of_system(system))
    traces: List[JoinabilityTrace] = []
    reachable: Dict[Permutation, Tuple[Set[Permutation], Optional[List[Permutation]]]] = {}

    for permutation in overlaps:
        successors = sorted(rewrite_successors(permutation, system))
        for i, left in enumerate(successors):
            for right in successors[i + 1:]:
                for successor in (left, right):
                    if successor not in reachable:
                        reachable[successor] = _reachable(successor, system)

                left_set, left_cycle = reachable[left]
                right_set, right_cycle = reachable[right]
                cycle = left_cycle or right_cycle
                common = min(left_set & right_set, default=None)
                traces.append(JoinabilityTrace(permutation, left, right, common, cycle))

    if any(not trace.joinable and trace.cycle is None for trace in traces):
        verdict = Verdict.NOT_CONFLUENT
    elif any(trace.cycle is not None for trace in traces):
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.CONFLUENT

    logger.debug('%s: %s after %d forks on %d overlaps', system, verdict.value, len(traces), len(overlaps))
    return ConfluenceReport(verdict, overlaps, traces)


@lru_cache(maxsize=64)
def confluence_of(system: RewriteSystem) -> ConfluenceReport:
    """
        :return: The cached confluence report of a system.
    """
    return check_local_confluence(system)

# endregion

# region Equivalence Classes


class EquivalenceClasses(object):
    """
        The classes of the equivalence closure of a rewrite relation on ``S_n``.
    """

    def __init__(self, n: int, classes: List[List[Permutation]]) -> None:
        self.n = n
        self.classes = classes

    @property
    def count(self) -> int:
        return len(self.classes)

    def __repr__(self) -> str:
        return f'EquivalenceClasses(n={self.n}, count={self.count})'


def equivalence_classes_bruteforce(system: RewriteSystem, n: int) -> EquivalenceClasses:
    """
        Group ``S_n`` into the classes of the equivalence closure of the rewrite relation.

        :param system: The rewriting system.
        :param n: The length, at most :attr:`.Limits.max_classes`.
        :return: The classes, each sorted, ordered by their smallest members.
        :raise CeilingExceededError: If `n` exceeds the ceiling.
    """

    check_ceiling('class length', n, Limits.max_classes)

    classes: DisjointSet[Permutation] = DisjointSet()
    for permutation in enumerate_permutations(n, Limits.max_classes):
        classes.make_set(permutation)
        for successor in rewrite_successors(permutation, system):
            classes.union(permutation, successor)

    logger.debug('%s has %d classes on S_%d', system, classes.count(), n)
    return EquivalenceClasses(n, classes.sorted())


def class_count_series(system: RewriteSystem, order: Optional[int] = None,
                       confluence: Optional[ConfluenceReport] = None,
                       termination: Optional[TerminationReport] = None) -> TruncatedSeries:
    """
        Count the equivalence classes of a confluent and terminating system by counting the avoiders of its left-hand
        sides.

        :param system: The rewriting system.
        :param order: The truncation order ``N``. Defaults to :meth:`.Limits.order`.
        :param confluence: The confluence report. Computed if not given.
        :param termination: The termination report. Computed if not given.
        :return: The marker-free series of the class counts.
        :raise NonConfluentSystemError: If the system is not known to be confluent.
        :raise TerminationNotVerifiedError: If termination has not been certified.
    """

    if termination is None:
        termination = certify_termination(system, min(max(system.max_length, 1), Limits.max_brute))

    if not termination.certified:
        raise TerminationNotVerifiedError(system.max_length, termination.verified_up_to)

    if confluence is None:
        confluence = check_local_confluence(system, termination)

    if confluence.verdict is not Verdict.CONFLUENT:
        raise NonConfluentSystemError(confluence.verdict.value)

    return avoider_series(dom_pattern_set(system), order)


def dom_pattern_set(system: RewriteSystem) -> PatternSet:
    """
        :return: The left-hand sides of the system with redundant (containing) patterns dropped.
    """
    return check_antichain(system.domain(), reduce=True)

# endregion

# region Builtin Systems


def _rules(pairs: Sequence[Tuple[str, str]]) -> List[RewriteRule]:
    return [RewriteRule(Permutation(int(digit) for digit in lhs), Permutation(int(digit) for digit in rhs))
            for lhs, rhs in pairs]


_IDENTITY_3 = '123'

_BUILTIN: Dict[str, Tuple[List[Tuple[str, str]], Callable[[], Statistic]]] = {
    'EQ1': ([('21', '12'), ('231', '312')],
            lambda: Statistic.sigma(Permutation.identity(2))),
    'EQ2': ([('132', _IDENTITY_3)],
            lambda: Statistic.occurrences(Permutation.identity(3))),
    'EQ3': ([('321', _IDENTITY_3), ('2341', '4123')],
            lambda: Statistic.sigma(Permutation.identity(3))),
    'EQ4': ([('132', _IDENTITY_3), ('213', _IDENTITY_3)],
            lambda: Statistic.sigma(Permutation.identity(3))),
    'EQ5': ([('132', _IDENTITY_3), ('321', _IDENTITY_3), ('2341', '4123')],
            lambda: Statistic.sigma(Permutation.identity(3))),
    'EQ6': ([('132', _IDENTITY_3), ('213', _IDENTITY_3), ('321', _IDENTITY_3), ('2341', '4123')],
            lambda: Statistic.sigma(Permutation.identity(3))),
    'EQ7': ([('132', _IDENTITY_3), ('213', _IDENTITY_3), ('231', _IDENTITY_3), ('312', _IDENTITY_3),
             ('321', _IDENTITY_3), ('2341', '4123'), ('34512', '45123'), ('54123', '45123'),
             ('6745123', '7456123')],
            lambda: Statistic.sigma(Permutation.identity(2))),
}
"""
    The rules of the builtin systems together with the statistic certifying their termination.
"""

BUILTIN_NAMES: Tuple[str, ...] = tuple(_BUILTIN)
"""
    The names of the builtin systems.
"""


@lru_cache(maxsize=None)
def builtin_system(name: str) -> RewriteSystem:
    """
        Get one of the builtin systems ``EQ1`` to ``EQ7``.

        :param name: The name, case-insensitive.
        :return: The system with its termination statistic.
        :raise UnknownSystemError: If there is no such system.
    """

    try:
        pairs, statistic = _BUILTIN[name.upper()]
    except KeyError:
        raise UnknownSystemError(name) from None

    return RewriteSystem(_rules(pairs), name.upper(), statistic())

# endregion
