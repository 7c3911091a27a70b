#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Collection of functions converting text into permutations, rewriting systems and b-files.

    All functions report malformed input with a :class:`.ParseError` naming the line and column of the problem. Columns
    and lines are 1-based.

    Permutations are written in one-line notation: as a string of digits (``53412``) if every value is a single digit,
    as comma-separated values (``8,9,10,6,7,4,5,1,2,3``) otherwise. Rule files hold one rule ``LHS -> RHS`` per line;
    b-files hold one term ``n a(n)`` per line. In both, blank lines and text after ``#`` are ignored.
"""

from typing import List
from typing import Optional
from typing import Tuple

from .errors import InvalidPermutationError
from .errors import InvalidRuleError
from .errors import ParseError
from .oeis import BFile
from .permutation import Permutation
from .rewriting import RewriteRule
from .rewriting import RewriteSystem

ARROW = '->'
"""
    The separator of the two sides of a rule.
"""


def _strip_comment(text: str) -> str:
    position = text.find('#')
    if position < 0:
        return text

    return text[:position]


def _leading_blanks(text: str) -> int:
    return len(text) - len(text.lstrip())


def parse_permutation(text: str, line: int = 1, column: int = 1) -> Permutation:
    """
        Convert the one-line notation of a permutation into a :class:`.Permutation`.

        :param text: The text. Surrounding white space is ignored.
        :param line: The line of `text` in its input, for error messages.
        :param column: The column at which `text` starts in its input, for error messages.
        :return: The permutation.
        :raise ParseError: If `text` is not the one-line notation of a permutation.
    """

    column += _leading_blanks(text)
    text = text.strip()

    if ',' in text:
        values: List[int] = []
        offset = 0
        for part in text.split(','):
            stripped = part.strip()
            if not stripped.isdigit():
                raise ParseError(f'Expected a positive integer, got {stripped!r}', line,
                                 column + offset + _leading_blanks(part))

            values.append(int(stripped))
            offset += len(part) + 1
    else:
        for offset, character in enumerate(text):
            if not character.isdigit():
                raise ParseError(f'Unexpected character {character!r} in a permutation', line, column + offset)

        values = [int(character) for character in text]

    try:
        return Permutation(values)
    except InvalidPermutationError as error:
        raise ParseError(str(error), line, column) from None


def parse_rule(text: str, line: int = 1) -> RewriteRule:
    """
        Convert a rule ``LHS -> RHS`` into a :class:`.RewriteRule`.

        :param text: The rule, without comments.
        :param line: The line of the rule in its input, for error messages.
        :return: The rule.
        :raise ParseError: If the text is not a rule or the rule is invalid.
    """

    position = text.find(ARROW)
    if position < 0:
        raise ParseError(f'Expected a rule "LHS {ARROW} RHS"', line, _leading_blanks(text) + 1)

    lhs = parse_permutation(text[:position], line, 1)
    rhs = parse_permutation(text[position + len(ARROW):], line, position + len(ARROW) + 1)

    try:
        return RewriteRule(lhs, rhs)
    except InvalidRuleError as error:
        raise ParseError(str(error), line, _leading_blanks(text) + 1) from None


def parse_rules(text: str, name: Optional[str] = None) -> RewriteSystem:
    """
        Convert the content of a rule file into a :class:`.RewriteSystem`.

        :param text: The content of the file.
        :param name: An optional name of the system.
        :return: The system, with the rules in file order.
        :raise ParseError: If a line is not a valid rule or a rule is repeated.
    """

    rules: List[RewriteRule] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = _strip_comment(raw)
        if not content.strip():
            continue

        rule = parse_rule(content, number)
        if rule in rules:
            raise ParseError(f'Rule {rule} is repeated', number, _leading_blanks(content) + 1)

        rules.append(rule)

    return RewriteSystem(rules, name)


def parse_bfile(text: str) -> BFile:
    """
        Convert the content of a b-file into a :class:`.BFile`.

        :param text: The content of the file.
        :return: The terms, in file order.
        :raise ParseError: If a line is not a pair of integers or the indices are not strictly increasing.
    """

    terms: List[Tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = _strip_comment(raw)
        fields = content.split()
        if not fields:
            continue

        if len(fields) != 2:
            raise ParseError(f'Expected "n a(n)", got {content.strip()!r}', number, _leading_blanks(content) + 1)

        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f'Expected two integers, got {content.strip()!r}', number,
                             _leading_blanks(content) + 1) from None

        if terms and index <= terms[-1][0]:
            raise ParseError(f'Index {index} does not follow {terms[-1][0]}', number, _leading_blanks(content) + 1)

        terms.append((index, value))

    return BFile(terms)


def format_bfile(values: List[int], offset: int = 0, comment: Optional[str] = None) -> str:
    """
        Convert a list of terms into the content of a b-file.

        :param values: The terms ``a(offset), a(offset + 1), ...``.
        :param offset: The index of the first term.
        :param comment: An optional comment written as the first line.
        :return: The content of the file.
    """

    header = f'# {comment}\n' if comment else ''
    return header + ''.join(f'{index} {value}\n' for index, value in enumerate(values, start=offset))
