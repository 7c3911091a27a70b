#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Enum definitions.
"""

from enum import Enum


class Verdict(Enum):
    """
        The outcome of a confluence check.
    """

    CONFLUENT = 'confluent'
    """
        Every critical pair has been found joinable.
    """

    NOT_CONFLUENT = 'not-confluent'
    """
        A permutation with two non-joinable successors has been found.
    """

    INCONCLUSIVE = 'inconclusive'
    """
        The check could not decide, e.g. because a cycle was found while exploring a critical pair.
    """


class TerminationMethod(Enum):
    """
        The methods of certifying termination of a rewriting system up to a given length.
    """

    ACYCLICITY_SCAN = 'acyclicity-scan'
    """
        A depth-first search over the rewrite graph on each ``S_n`` looking for cycles.
    """

    STATISTIC_CERTIFICATE = 'statistic-certificate'
    """
        A check that a statistic strictly increases along every rewrite step.
    """


class JacksonReadVariant(Enum):
    """
        The two monotone avoidance generating functions for a pattern length ``k``.
    """

    SINGLE = 'single'
    """
        Avoid the identity pattern of length ``k``.
    """

    PAIR = 'pair'
    """
        Avoid both the identity pattern of length ``k`` and its reverse.
    """
