#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Permutations in one-line notation and their Hertzsprung occurrences.

    A Hertzsprung occurrence of a pattern ``τ`` of length ``k`` in a permutation ``π`` is a factor
    ``π(d)π(d+1)...π(d+k-1)`` such that ``τ(i) - π(d+i-1)`` is the same for all ``i``: the factor is the pattern shifted
    by a constant value. Positions are 1-based throughout.
"""

from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union

from itertools import permutations as _permutations
from logging import getLogger

from .config import Limits
from .config import check_ceiling
from .errors import ArityError
from .errors import InvalidPatternError
from .errors import InvalidPermutationError
from .errors import InvalidWordError

logger = getLogger(__name__)

Word = Sequence[int]
"""
    A sequence of distinct positive integers.
"""


class Permutation(object):
    """
        An immutable permutation of ``{1, ..., n}`` in one-line notation.

        Permutations compare equal if their values are equal, are hashable, and sort first by length and then
        lexicographically.
    """

    __slots__ = ('_values',)

    _values: Tuple[int, ...]
    """
        The one-line notation of the permutation.
    """

    # region Instantiation

    def __init__(self, values: Iterable[int]) -> None:
        """
            :param values: The one-line notation, a bijection onto ``{1, ..., n}``.
            :raise InvalidPermutationError: If `values` is not a permutation.
        """

        values = tuple(values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidPermutationError(values)

        self._values = values

    @classmethod
    def _trusted(cls, values: Tuple[int, ...]) -> 'Permutation':
        """
            Create a permutation without validating the values.

            :param values: Values that are known to form a permutation.
            :return: The permutation.
        """

        permutation = object.__new__(cls)
        permutation._values = values
        return permutation

    @classmethod
    def identity(cls, k: int) -> 'Permutation':
        """
            Get the increasing permutation ``12...k``.

            :param k: The length.
            :return: The identity of length `k`.
        """
        return cls(range(1, k + 1))

    @classmethod
    def reverse_identity(cls, k: int) -> 'Permutation':
        """
            Get the decreasing permutation ``k...21``.

            :param k: The length.
            :return: The reverse of the identity of length `k`.
        """
        return cls(range(k, 0, -1))

    # endregion

    # region Symmetries

    def complement(self) -> 'Permutation':
        """
            :return: The permutation with every value ``i`` replaced by ``n + 1 - i``.
        """

        n = len(self._values)
        return Permutation(n + 1 - value for value in self._values)

    def reverse(self) -> 'Permutation':
        """
            :return: The permutation read from right to left.
        """
        return Permutation(reversed(self._values))

    def inverse(self) -> 'Permutation':
        """
            :return: The inverse permutation.
        """

        inverse = [0] * len(self._values)
        for position, value in enumerate(self._values, start=1):
            inverse[value - 1] = position

        return Permutation(inverse)

    # endregion

    # region Container Protocol

    @property
    def values(self) -> Tuple[int, ...]:
        """
            The one-line notation as a tuple.
        """
        return self._values

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __getitem__(self, index: Union[int, slice]) -> Union[int, Tuple[int, ...]]:
        return self._values[index]

    # endregion

    # region Comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented

        return self._values == other._values

    def __hash__(self) -> int:
        return hash(self._values)

    def __lt__(self, other: 'Permutation') -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented

        return (len(self._values), self._values) < (len(other._values), other._values)

    # endregion

    # region Text

    def __str__(self) -> str:
        """
            Get the text form: a digit string if the length is at most nine, comma-separated values otherwise.
        """

        if len(self._values) <= 9:
            return ''.join(str(value) for value in self._values)

        return ','.join(str(value) for value in self._values)

    def __repr__(self) -> str:
        return f'Permutation({str(self)!r})'

    # endregion


# region Words

def standardize(word: Word) -> Permutation:
    """
        Replace the smallest letter of a word by 1, the second smallest by 2, and so on.

        :param word: A word of distinct positive integers (may be empty).
        :return: The permutation order-isomorphic to `word`.
        :raise InvalidWordError: If `word` has repeated or non-positive letters.
    """

    letters = tuple(word)
    if len(set(letters)) != len(letters) or any(letter < 1 for letter in letters):
        raise InvalidWordError(letters)

    ranks = {letter: rank for rank, letter in enumerate(sorted(letters), start=1)}
    return Permutation(ranks[letter] for letter in letters)


def is_occurrence(factor: Word, pattern: Permutation) -> bool:
    """
        Determine if a factor is a Hertzsprung occurrence of a pattern, i.e. the pattern shifted by a constant.

        :param factor: The factor.
        :param pattern: The pattern.
        :return: `True` if `factor` and `pattern` have the same length and a constant difference.
    """

    if len(factor) != len(pattern):
        return False

    if len(pattern) == 0:
        return True

    offset = factor[0] - pattern[0]
    return all(letter - value == offset for letter, value in zip(factor, pattern))

# endregion

# region Occurrences


def find_occurrences(pattern: Permutation, host: Permutation) -> List[int]:
    """
        Find all Hertzsprung occurrences of a pattern in a permutation.

        :param pattern: The pattern, of length at least 1.
        :param host: The permutation to search.
        :return: The ascending 1-based start positions of all occurrences. Empty if `pattern` is longer than `host`.
        :raise InvalidPatternError: If `pattern` is empty.
    """

    k = len(pattern)
    if k == 0:
        raise InvalidPatternError('The empty pattern has no occurrences')

    values = host.values
    first = pattern[0]
    positions = []
    for start in range(len(values) - k + 1):
        offset = values[start] - first
        if all(values[start + i] - pattern[i] == offset for i in range(1, k)):
            positions.append(start + 1)

    return positions


def occurrence_count(pattern: Permutation, host: Permutation) -> int:
    """
        :return: The number of Hertzsprung occurrences of `pattern` in `host`.
    """
    return len(find_occurrences(pattern, host))


def contains(host: Permutation, pattern: Permutation) -> bool:
    """
        :return: `True` if `pattern` is a Hertzsprung factor of `host`.
    """
    return len(find_occurrences(pattern, host)) > 0


def avoids(host: Permutation, patterns: Iterable[Permutation]) -> bool:
    """
        Determine if a permutation avoids all given patterns.

        :param host: The permutation.
        :param patterns: The patterns, each of length at least 2.
        :return: `True` if no pattern occurs in `host`.
        :raise InvalidPatternError: If a pattern is shorter than 2.
    """

    for pattern in patterns:
        if len(pattern) < 2:
            raise InvalidPatternError(f'Pattern {pattern} is shorter than 2')

        if contains(host, pattern):
            return False

    return True

# endregion

# region Construction


def inflate(outer: Permutation, parts: Sequence[Permutation]) -> Permutation:
    """
        Substitute permutations into the positions of an outer permutation.

        The part at position ``i`` is shifted by the total length of the parts whose outer value is smaller than
        ``outer(i)``. For example, ``231[1, 213, 21] = 354621``.

        :param outer: The outer permutation.
        :param parts: One nonempty permutation per position of `outer`.
        :return: The inflation.
        :raise ArityError: If the number of parts differs from the length of `outer`.
        :raise InvalidPatternError: If a part is empty.
    """

    if len(parts) != len(outer):
        raise ArityError(len(outer), len(parts))

    if any(len(part) == 0 for part in parts):
        raise InvalidPatternError('Inflation parts must be nonempty')

    # The offset of a part is the accumulated length of the parts with smaller outer values.
    offsets = [0] * len(outer)
    accumulated = 0
    for position in outer.inverse():
        offsets[position - 1] = accumulated
        accumulated += len(parts[position - 1])

    values: List[int] = []
    for offset, part in zip(offsets, parts):
        values.extend(value + offset for value in part)

    return Permutation(values)


def enumerate_permutations(n: int, ceiling: Optional[int] = None) -> Iterator[Permutation]:
    """
        Enumerate all permutations of a given length in lexicographic order.

        :param n: The length.
        :param ceiling: The largest admissible length. Defaults to :attr:`.Limits.max_enumeration`.
        :return: A generator of all ``n!`` permutations of length `n`.
        :raise CeilingExceededError: If `n` exceeds the ceiling.
    """

    if ceiling is None:
        ceiling = Limits.max_enumeration

    check_ceiling('permutation length', n, ceiling)
    logger.debug('Enumerating S_%d', n)

    return (Permutation._trusted(values) for values in _permutations(range(1, n + 1)))

# endregion
