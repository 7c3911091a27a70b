#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Hertzsprung computes exact joint distributions and avoidance counts of Hertzsprung patterns (consecutive patterns
    whose occurrences are adjacent in both positions and values) with the cluster method and the transfer-matrix
    method, and analyzes pattern-rewriting systems: rewrite steps, normal forms, bounded termination certificates,
    local confluence and the number of equivalence classes. Every symbolic result can be checked against brute-force
    enumeration.

    See the included README file or the documentation for details on how to use Hertzsprung.
"""

from .algebra import MarkerRegistry
from .algebra import PolyMatrix
from .algebra import RationalFunction
from .algebra import TruncatedSeries
from .algebra import det_bareiss
from .algebra import factorial_tail_series
from .algebra import fsum_series
from .algebra import matrix_minor
from .algebra import render_poly
from .algebra import series_from_rational
from .clusters import PatternSet
from .clusters import TransferDigraph
from .clusters import brute_force_clusters
from .clusters import build_end_in_digraph
from .clusters import build_transfer_digraph
from .clusters import check_antichain
from .clusters import chi
from .clusters import cluster_gf
from .clusters import cluster_gf_end_in
from .clusters import correlation_poly
from .clusters import overlap_set
from .config import Limits
from .conjectures import check_bona
from .conjectures import check_conjecture_one
from .conjectures import contains_mesh_p
from .conjectures import mesh_p_count
from .conjectures import mesh_p_series_check
from .conjectures import palindrome_prefix_count
from .conjectures import palindrome_prefix_set
from .conjectures import wilf_autocorrelation_classes
from .distribution import avoider_series
from .distribution import brute_force_distribution
from .distribution import end_pattern_series
from .distribution import hertzsprung_closed_form
from .distribution import jackson_id_distribution
from .distribution import jackson_read_gf
from .distribution import joint_distribution_series
from .distribution import myers_count
from .distribution import single_pattern_series
from .enums import JacksonReadVariant
from .enums import TerminationMethod
from .enums import Verdict
from .errors import ArityError
from .errors import CeilingExceededError
from .errors import DimensionError
from .errors import DuplicatePatternError
from .errors import EmptyOverlapError
from .errors import HertzsprungError
from .errors import IndexOutOfRangeError
from .errors import InvalidPatternError
from .errors import InvalidPermutationError
from .errors import InvalidRuleError
from .errors import InvalidWordError
from .errors import NonConfluentSystemError
from .errors import NotAnAntichainError
from .errors import ParseError
from .errors import PatternNotInSetError
from .errors import RegistryMismatchError
from .errors import SelfOverlappingPatternError
from .errors import TerminationNotVerifiedError
from .errors import UnknownSystemError
from .errors import UsageError
from .errors import ZeroConstantTermError
from .oeis import BFile
from .oeis import oeis_compare
from .parsing import parse_bfile
from .parsing import parse_permutation
from .parsing import parse_rules
from .permutation import Permutation
from .permutation import avoids
from .permutation import enumerate_permutations
from .permutation import find_occurrences
from .permutation import inflate
from .permutation import standardize
from .rewriting import RewriteRule
from .rewriting import RewriteSystem
from .rewriting import Statistic
from .rewriting import builtin_system
from .rewriting import check_local_confluence
from .rewriting import check_termination
from .rewriting import class_count_series
from .rewriting import equivalence_classes_bruteforce
from .rewriting import normal_form
from .rewriting import olap_of_system
from .rewriting import rewrite_successors
from .rewriting import statistic_sigma

__all__ = [
    'ArityError',
    'BFile',
    'CeilingExceededError',
    'DimensionError',
    'DuplicatePatternError',
    'EmptyOverlapError',
    'HertzsprungError',
    'IndexOutOfRangeError',
    'InvalidPatternError',
    'InvalidPermutationError',
    'InvalidRuleError',
    'InvalidWordError',
    'JacksonReadVariant',
    'Limits',
    'MarkerRegistry',
    'NonConfluentSystemError',
    'NotAnAntichainError',
    'ParseError',
    'PatternNotInSetError',
    'PatternSet',
    'Permutation',
    'PolyMatrix',
    'RationalFunction',
    'RegistryMismatchError',
    'RewriteRule',
    'RewriteSystem',
    'SelfOverlappingPatternError',
    'Statistic',
    'TerminationMethod',
    'TerminationNotVerifiedError',
    'TransferDigraph',
    'TruncatedSeries',
    'UnknownSystemError',
    'UsageError',
    'Verdict',
    'ZeroConstantTermError',
    'avoider_series',
    'avoids',
    'brute_force_clusters',
    'brute_force_distribution',
    'build_end_in_digraph',
    'build_transfer_digraph',
    'builtin_system',
    'check_antichain',
    'check_bona',
    'check_conjecture_one',
    'check_local_confluence',
    'check_termination',
    'chi',
    'class_count_series',
    'cluster_gf',
    'cluster_gf_end_in',
    'contains_mesh_p',
    'correlation_poly',
    'det_bareiss',
    'end_pattern_series',
    'enumerate_permutations',
    'equivalence_classes_bruteforce',
    'factorial_tail_series',
    'find_occurrences',
    'fsum_series',
    'hertzsprung_closed_form',
    'inflate',
    'jackson_id_distribution',
    'jackson_read_gf',
    'joint_distribution_series',
    'matrix_minor',
    'mesh_p_count',
    'mesh_p_series_check',
    'myers_count',
    'normal_form',
    'oeis_compare',
    'olap_of_system',
    'overlap_set',
    'palindrome_prefix_count',
    'palindrome_prefix_set',
    'parse_bfile',
    'parse_permutation',
    'parse_rules',
    'render_poly',
    'rewrite_successors',
    'series_from_rational',
    'single_pattern_series',
    'standardize',
    'statistic_sigma',
    'wilf_autocorrelation_classes',
]
