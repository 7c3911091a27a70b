#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Error class definitions.
"""

from typing import Any
from typing import Iterable
from typing import Optional

# region Base Error


class HertzsprungError(Exception):
    """
        A base class for all errors raised by :mod:`hertzsprung`.
    """

    def __init__(self, message: str) -> None:
        """
            :param message: A user-readable description of this error.
        """

        self._message = message

    def __str__(self) -> str:
        """
            Get a user-readable description of the error.

            :return: A string describing the error.
        """
        return self._message

# endregion

# region Input Errors


class InvalidPermutationError(HertzsprungError):
    """
        Raised if a sequence of values is not a bijection onto ``{1, ..., n}``.
    """

    values: tuple
    """
        The offending values.
    """

    def __init__(self, values: Iterable[Any]) -> None:
        """
            :param values: The values that do not form a permutation.
        """

        self.values = tuple(values)
        super().__init__(f'Not a permutation of 1..{len(self.values)}: {list(self.values)}')


class InvalidWordError(HertzsprungError):
    """
        Raised if a word contains repeated or non-positive letters.
    """

    letters: tuple
    """
        The offending letters.
    """

    def __init__(self, letters: Iterable[Any]) -> None:
        """
            :param letters: The letters that do not form a word of distinct positive integers.
        """

        self.letters = tuple(letters)
        super().__init__(f'Not a word of distinct positive integers: {list(self.letters)}')


class InvalidPatternError(HertzsprungError):
    """
        Raised if a pattern is not admissible for an operation, e.g. because it is too short.
    """
    pass


class ArityError(HertzsprungError):
    """
        Raised if the number of parts given to an inflation does not match the length of the outer permutation.
    """

    def __init__(self, expected: int, actual: int) -> None:
        """
            :param expected: The length of the outer permutation.
            :param actual: The number of given parts.
        """

        self.expected = expected
        self.actual = actual
        super().__init__(f'Expected {expected} parts, got {actual}')


class ParseError(HertzsprungError):
    """
        Raised if a text input (permutation, rule file, b-file) cannot be parsed.
    """

    line: int
    """
        The (1-based) line of the input at which parsing failed.
    """

    column: int
    """
        The (1-based) column of the input at which parsing failed.
    """

    def __init__(self, reason: str, line: int = 1, column: int = 1) -> None:
        """
            :param reason: A description of what is wrong with the input.
            :param line: The line at which parsing failed.
            :param column: The column at which parsing failed.
        """

        self.line = line
        self.column = column
        super().__init__(f'Line {line}, column {column}: {reason}')


class IndexOutOfRangeError(HertzsprungError):
    """
        Raised if an index (overlap amount, matrix row or column) is outside its admissible range.
    """

    def __init__(self, index: int, lower: int, upper: int) -> None:
        """
            :param index: The given index.
            :param lower: The smallest admissible index.
            :param upper: The largest admissible index.
        """

        self.index = index
        self.lower = lower
        self.upper = upper
        super().__init__(f'Index {index} is not within [{lower}, {upper}]')


class UsageError(HertzsprungError):
    """
        Raised if the command line is invalid or an input file cannot be read.
    """

# endregion

# region Limit Errors


class CeilingExceededError(HertzsprungError):
    """
        Raised if an exhaustive computation is requested beyond its configured ceiling.
    """

    what: str
    """
        The name of the limited quantity.
    """

    value: int
    """
        The requested value.
    """

    ceiling: int
    """
        The configured ceiling.
    """

    def __init__(self, what: str, value: int, ceiling: int) -> None:
        """
            :param what: The name of the limited quantity.
            :param value: The requested value.
            :param ceiling: The configured ceiling that has been exceeded.
        """

        self.what = what
        self.value = value
        self.ceiling = ceiling
        super().__init__(f'{what} = {value} exceeds the ceiling {ceiling}')


class DimensionError(HertzsprungError):
    """
        Raised if a matrix is too large for exact elimination or not square.
    """
    pass

# endregion

# region Algebra Errors


class RegistryMismatchError(HertzsprungError):
    """
        Raised if two algebraic values belonging to different marker registries are combined.
    """

    def __init__(self) -> None:
        super().__init__('The operands belong to different marker registries')


class ZeroConstantTermError(HertzsprungError):
    """
        Raised if a series expansion needs an invertible constant term (or a vanishing one) that it does not have.
    """
    pass

# endregion

# region Pattern Set Errors


class DuplicatePatternError(HertzsprungError):
    """
        Raised if a pattern set lists the same pattern twice.
    """

    def __init__(self, pattern: Any) -> None:
        """
            :param pattern: The repeated pattern.
        """

        self.pattern = pattern
        super().__init__(f'Duplicate pattern: {pattern}')


class NotAnAntichainError(HertzsprungError):
    """
        Raised if a pattern of a set is a Hertzsprung factor of another pattern of the set.
    """

    contained: Any
    """
        The pattern that occurs in :attr:`container`.
    """

    container: Any
    """
        The pattern containing :attr:`contained`.
    """

    def __init__(self, contained: Any, container: Any) -> None:
        """
            :param contained: The pattern occurring in the other one.
            :param container: The pattern in which the first one occurs.
        """

        self.contained = contained
        self.container = container
        super().__init__(f'Not an antichain: {contained} occurs in {container}')


class PatternNotInSetError(HertzsprungError):
    """
        Raised if a pattern is expected to be a member of a pattern set but is not.
    """

    def __init__(self, pattern: Any) -> None:
        """
            :param pattern: The missing pattern.
        """

        self.pattern = pattern
        super().__init__(f'Pattern {pattern} is not in the pattern set')


class SelfOverlappingPatternError(HertzsprungError):
    """
        Raised if a formula that only holds for non-self-overlapping patterns is applied to a self-overlapping one.
    """

    def __init__(self, pattern: Any) -> None:
        """
            :param pattern: The self-overlapping pattern.
        """

        self.pattern = pattern
        super().__init__(f'Pattern {pattern} is self-overlapping')

# endregion

# region Rewriting Errors


class InvalidRuleError(HertzsprungError):
    """
        Raised if a rewrite rule is not length-preserving, is trivial, or is repeated in a system.
    """
    pass


class UnknownSystemError(HertzsprungError):
    """
        Raised if a builtin rewriting system is requested that does not exist.
    """

    def __init__(self, name: str) -> None:
        """
            :param name: The requested name.
        """

        self.name = name
        super().__init__(f'Unknown rewriting system: {name}')


class TerminationNotVerifiedError(HertzsprungError):
    """
        Raised if an operation needs termination of a rewriting system at a length that has not been verified.
    """

    def __init__(self, length: int, verified_up_to: Optional[int] = None) -> None:
        """
            :param length: The length at which termination is needed.
            :param verified_up_to: The length up to which termination has been verified, if any.
        """

        self.length = length
        self.verified_up_to = verified_up_to
        if verified_up_to is None:
            message = f'Termination has not been verified for length {length}'
        else:
            message = f'Termination is verified up to length {verified_up_to} only, but length {length} is needed'

        super().__init__(message)


class NonConfluentSystemError(HertzsprungError):
    """
        Raised if an operation needs a confluent rewriting system but the confluence check did not confirm it.
    """

    def __init__(self, verdict: Any) -> None:
        """
            :param verdict: The verdict of the confluence check.
        """

        self.verdict = verdict
        super().__init__(f'The rewriting system is not known to be confluent (verdict: {verdict})')

# endregion

# region Comparison Errors


class EmptyOverlapError(HertzsprungError):
    """
        Raised if a series and a b-file share no index.
    """

    def __init__(self) -> None:
        super().__init__('The series and the b-file have no index in common')

# endregion
