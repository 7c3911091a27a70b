#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Tunable limits guarding the exhaustive computations.

    All limits are class variables of :class:`Limits` and may be changed by assigning to them, e.g.
    ``Limits.max_brute = 9``. Changes take effect for all subsequent calls.
"""

from typing import ClassVar

from os import environ

from .errors import CeilingExceededError
from .errors import ParseError

ORDER_VARIABLE = 'HERTZSPRUNG_ORDER'
"""
    The name of the environment variable overriding the default truncation order.
"""


class Limits(object):
    """
        The ceilings of all brute-force computations and the default truncation order.
    """

    max_brute: ClassVar[int] = 8
    """
        The largest permutation length for brute-force oracles (distributions, clusters, termination scans).
    """

    max_classes: ClassVar[int] = 9
    """
        The largest permutation length for counting equivalence classes with a union-find over ``S_n``.
    """

    max_enumeration: ClassVar[int] = 11
    """
        The absolute ceiling for enumerating ``S_n``. No other limit may allow more.
    """

    max_dimension: ClassVar[int] = 16
    """
        The largest matrix dimension accepted by the fraction-free determinant.
    """

    max_wilf: ClassVar[int] = 9
    """
        The largest pattern length for which all autocorrelation polynomials are collected.
    """

    max_palindrome: ClassVar[int] = 25
    """
        The largest length of binary palindromes scanned for prefix-palindrome sets.
    """

    max_mesh: ClassVar[int] = 11
    """
        The largest permutation length for counting avoiders of the mesh pattern.
    """

    max_bona_length: ClassVar[int] = 5
    """
        The largest pattern length for the avoidance inequality check against the identity.
    """

    max_bona_order: ClassVar[int] = 20
    """
        The largest order up to which the avoidance inequality is compared.
    """

    termination_depth: ClassVar[int] = 7
    """
        The length up to which termination is certified when no length is given explicitly.
    """

    default_order: ClassVar[int] = 20
    """
        The truncation order of series if none is given. Overridden by the environment variable ``HERTZSPRUNG_ORDER``.
    """

    @classmethod
    def order(cls) -> int:
        """
            Get the default truncation order.

            :return: The value of ``HERTZSPRUNG_ORDER`` if it is set, :attr:`default_order` otherwise.
            :raise ParseError: If the environment variable is not a non-negative integer.
        """

        value = environ.get(ORDER_VARIABLE)
        if value is None or value.strip() == '':
            return cls.default_order

        try:
            order = int(value)
        except ValueError:
            raise ParseError(f'{ORDER_VARIABLE} must be a non-negative integer, got {value!r}') from None

        if order < 0:
            raise ParseError(f'{ORDER_VARIABLE} must be a non-negative integer, got {value!r}')

        return order


def check_ceiling(what: str, value: int, ceiling: int, enumerates: bool = True) -> None:
    """
        Ensure that a requested size does not exceed its ceiling.

        :param what: The name of the limited quantity, used in the error message.
        :param value: The requested size.
        :param ceiling: The ceiling.
        :param enumerates: If `True`, `value` is a permutation length and is also capped by
                           :attr:`Limits.max_enumeration`.
        :raise CeilingExceededError: If `value` is larger than `ceiling` (or than :attr:`Limits.max_enumeration`).
    """

    if enumerates:
        ceiling = min(ceiling, Limits.max_enumeration)

    if value > ceiling:
        raise CeilingExceededError(what, value, ceiling)
