#!/usr/bin/python3
# -*- coding: utf-8 -*-

from unittest import TestCase

from random import Random

from hertzsprung import CeilingExceededError
from hertzsprung import InvalidRuleError
from hertzsprung import Limits
from hertzsprung import NonConfluentSystemError
from hertzsprung import Permutation
from hertzsprung import RewriteRule
from hertzsprung import RewriteSystem
from hertzsprung import Statistic
from hertzsprung import TerminationMethod
from hertzsprung import TerminationNotVerifiedError
from hertzsprung import UnknownSystemError
from hertzsprung import Verdict
from hertzsprung import avoids
from hertzsprung import builtin_system
from hertzsprung import check_local_confluence
from hertzsprung import check_termination
from hertzsprung import class_count_series
from hertzsprung import enumerate_permutations
from hertzsprung import equivalence_classes_bruteforce
from hertzsprung import normal_form
from hertzsprung import olap_of_system
from hertzsprung import rewrite_successors
from hertzsprung import statistic_sigma
from hertzsprung.rewriting import BUILTIN_NAMES
from hertzsprung.rewriting import dom_pattern_set


def _p(text: str) -> Permutation:
    return Permutation(int(digit) for digit in text)


def _system(*rules: str) -> RewriteSystem:
    pairs = (rule.split('->') for rule in rules)
    return RewriteSystem(RewriteRule(_p(lhs.strip()), _p(rhs.strip())) for lhs, rhs in pairs)


class RewriteSystemTest(TestCase):

    # region Instantiation

    def test_rule_invalid(self):
        """
            Test creating rules that change the length or nothing at all.

            Expected Result: An error is raised.
        """

        with self.assertRaises(InvalidRuleError):
            RewriteRule(_p('12'), _p('132'))

        with self.assertRaises(InvalidRuleError):
            RewriteRule(_p('12'), _p('12'))

    def test_system_repeated_rule(self):
        """
            Test creating a system that repeats a rule.

            Expected Result: An error is raised.
        """

        with self.assertRaises(InvalidRuleError):
            _system('21 -> 12', '21 -> 12')

    # endregion

    # region Properties

    def test_domain(self):
        """
            Test getting the left-hand sides.

            Expected Result: Each left-hand side once, in rule order.
        """

        system = _system('321 -> 123', '321 -> 132', '2341 -> 4123')
        self.assertListEqual([_p('321'), _p('2341')], system.domain())
        self.assertEqual(4, system.max_length)
        self.assertEqual(0, RewriteSystem([]).max_length)

    def test_text(self):
        """
            Test rendering a system in the rule-file format.

            Expected Result: One rule per line.
        """

        self.assertEqual('21 -> 12\n231 -> 312\n', builtin_system('EQ1').text())
        self.assertEqual('EQ1 {21 -> 12, 231 -> 312}', str(builtin_system('EQ1')))

    def test_equality(self):
        """
            Test comparing systems.

            Expected Result: Systems with the same rules in the same order are equal, regardless of their names.
        """

        self.assertEqual(_system('21 -> 12', '231 -> 312'), builtin_system('EQ1'))
        self.assertNotEqual(_system('231 -> 312', '21 -> 12'), builtin_system('EQ1'))

    # endregion


class RewritingTest(TestCase):

    # rewrite_successors()
    # ====================

    def test_rewrite_successors(self):
        """
            Test rewriting single occurrences.

            Expected Result: One successor per occurrence, with the values of the right-hand side shifted like the
            occurrence.
        """

        self.assertSetEqual({_p('1243'), _p('1324')}, rewrite_successors(_p('1234'), _system('123 -> 132')))
        self.assertSetEqual({_p('2341'), _p('4123')}, rewrite_successors(_p('4321'), _system('321 -> 123')))
        self.assertSetEqual({_p('231'), _p('312')}, rewrite_successors(_p('321'), _system('21 -> 12')))
        self.assertSetEqual({_p('52341')}, rewrite_successors(_p('34521'), builtin_system('EQ3')))
        self.assertSetEqual(set(), rewrite_successors(_p('2413'), builtin_system('EQ3')))

    def test_rewrite_successors_preserve_length(self):
        """
            Test that successors are permutations of the same length.

            Expected Result: Every successor of every permutation of length 6 under EQ6 is a permutation of length 6.
        """

        system = builtin_system('EQ6')
        for permutation in enumerate_permutations(6):
            for successor in rewrite_successors(permutation, system):
                self.assertEqual(6, len(successor))
                self.assertListEqual(list(range(1, 7)), sorted(successor.values))

    # statistic_sigma()
    # =================

    def test_statistic_sigma(self):
        """
            Test summing the positions of occurrences.

            Expected Result: The sum of the start positions.
        """

        self.assertEqual(6, statistic_sigma(_p('12'), _p('1234')))
        self.assertEqual(0, statistic_sigma(_p('12'), _p('4321')))
        self.assertEqual(3, statistic_sigma(_p('123'), _p('54123')))
        self.assertEqual(3, Statistic.sigma(_p('123'))(_p('54123')))
        self.assertEqual('Sigma_123', Statistic.sigma(_p('123')).name)

    # normal_form()
    # =============

    def test_normal_form(self):
        """
            Test rewriting to normal forms with the builtin systems.

            Expected Result: The known normal forms, marked as unique.
        """

        result = normal_form(_p('54321'), builtin_system('EQ3'))
        self.assertEqual(_p('54123'), result.permutation)
        self.assertTrue(result.unique)
        self.assertEqual(3, result.steps)

        result = normal_form(_p('1324'), builtin_system('EQ4'))
        self.assertEqual(_p('1234'), result.permutation)
        self.assertEqual(1, result.steps)

        result = normal_form(_p('2413'), builtin_system('EQ4'))
        self.assertEqual(_p('2413'), result.permutation)
        self.assertEqual(0, result.steps)

    def test_normal_form_not_confluent(self):
        """
            Test rewriting with a system that is not confluent.

            Expected Result: A normal form is reached but not marked as unique.
        """

        result = normal_form(_p('1234'), _system('123 -> 132'))
        self.assertEqual(_p('1324'), result.permutation)
        self.assertFalse(result.unique)

    def test_normal_form_unverified(self):
        """
            Test rewriting a permutation longer than the termination certificate.

            Expected Result: An error is raised.
        """

        system = builtin_system('EQ1')
        with self.assertRaises(TerminationNotVerifiedError) as exception_cm:
            normal_form(_p('54321'), system, termination=check_termination(system, 4))

        self.assertEqual(4, exception_cm.exception.verified_up_to)

        with self.assertRaises(TerminationNotVerifiedError):
            normal_form(Permutation.reverse_identity(Limits.max_brute + 1), system)

    def test_normal_form_any_strategy(self):
        """
            Test rewriting with random choices of the next step.

            Expected Result: Every strategy reaches the normal form of the deterministic strategy.
        """

        random = Random(1766)
        for name in ('EQ1', 'EQ3', 'EQ5', 'EQ6'):
            system = builtin_system(name)
            for permutation in enumerate_permutations(6):
                current = permutation
                successors = sorted(rewrite_successors(current, system))
                while successors:
                    current = random.choice(successors)
                    successors = sorted(rewrite_successors(current, system))

                self.assertEqual(normal_form(permutation, system).permutation, current, msg=f'{name}: {permutation}')


class TerminationTest(TestCase):

    # check_termination()
    # ===================

    def test_acyclic(self):
        """
            Test the cycle search on a terminating system.

            Expected Result: Termination is certified up to the requested length.
        """

        report = check_termination(builtin_system('EQ3'), 6)
        self.assertEqual(TerminationMethod.ACYCLICITY_SCAN, report.method)
        self.assertEqual(6, report.verified_up_to)
        self.assertTrue(report.certified)
        self.assertTrue(report.covers(6))
        self.assertFalse(report.covers(7))

    def test_cycle(self):
        """
            Test the cycle search on a system that rewrites 123 and 132 into each other.

            Expected Result: The cycle is found among the permutations of length 3.
        """

        report = check_termination(_system('123 -> 132', '132 -> 123'), 5)
        self.assertFalse(report.certified)
        self.assertEqual(2, report.verified_up_to)
        self.assertListEqual([_p('123'), _p('132'), _p('123')], report.cycle)

    def test_statistic(self):
        """
            Test certifying termination of the builtin systems with their statistics.

            Expected Result: Each statistic increases along every rewrite step.
        """

        for name in BUILTIN_NAMES:
            system = builtin_system(name)
            report = check_termination(system, 6, system.statistic)
            self.assertEqual(TerminationMethod.STATISTIC_CERTIFICATE, report.method)
            self.assertTrue(report.certified, msg=name)
            self.assertEqual(system.statistic.name, report.statistic)

    def test_statistic_violation(self):
        """
            Test certifying termination with a statistic that decreases.

            Expected Result: The first violating step is reported.
        """

        report = check_termination(_system('12 -> 21'), 4, Statistic.sigma(_p('12')))
        self.assertFalse(report.certified)
        self.assertEqual(1, report.verified_up_to)
        self.assertTupleEqual((_p('12'), _p('21')), report.violation)

    def test_ceiling(self):
        """
            Test certifying termination beyond the brute-force ceiling.

            Expected Result: An error is raised.
        """

        with self.assertRaises(CeilingExceededError):
            check_termination(builtin_system('EQ1'), Limits.max_brute + 1)


class ConfluenceTest(TestCase):

    # olap_of_system()
    # ================

    def test_olap_of_system(self):
        """
            Test collecting the overlaps of the left-hand sides.

            Expected Result: The known overlap sets of the builtin systems.
        """

        self.assertSetEqual({_p('321'), _p('3421')}, olap_of_system(builtin_system('EQ1')))
        self.assertSetEqual({_p('4321'), _p('54321'), _p('456321')}, olap_of_system(builtin_system('EQ3')))
        self.assertSetEqual({_p('1324'), _p('21354')}, olap_of_system(builtin_system('EQ4')))
        self.assertSetEqual({_p('1324'), _p('4321'), _p('21354'), _p('54321'), _p('456321')},
                            olap_of_system(builtin_system('EQ6')))
        self.assertEqual(21, len(olap_of_system(builtin_system('EQ7'))))
        self.assertSetEqual(set(), olap_of_system(builtin_system('EQ2')))

    # check_local_confluence()
    # ========================

    def test_confluent(self):
        """
            Test the builtin systems.

            Expected Result: Every fork on an overlap is joinable.
        """

        for name in BUILTIN_NAMES:
            report = check_local_confluence(builtin_system(name))
            self.assertEqual(Verdict.CONFLUENT, report.verdict, msg=name)
            self.assertIsNone(report.counterexample)
            self.assertTrue(all(trace.joinable for trace in report.traces), msg=name)

    def test_confluent_largest_system(self):
        """
            Test the builtin system with the longest rules.

            Expected Result: All 21 overlaps of EQ7 are checked and every fork on them is joinable.
        """

        system = builtin_system('EQ7')
        report = check_local_confluence(system)
        self.assertEqual(Verdict.CONFLUENT, report.verdict)
        self.assertListEqual(sorted(olap_of_system(system)), report.overlaps)
        self.assertEqual(21, len(report.overlaps))
        self.assertEqual(24, len(report.traces))
        self.assertTrue(all(trace.common is not None and trace.cycle is None for trace in report.traces))

    def test_not_confluent(self):
        """
            Test systems with forks that cannot be joined.

            Expected Result: The first fork is reported with both successors.
        """

        cases = [
            ('123 -> 132', '1234', '1243', '1324'),
            ('321 -> 123', '4321', '2341', '4123'),
            ('21 -> 12', '321', '231', '312'),
        ]

        for rule, permutation, left, right in cases:
            report = check_local_confluence(_system(rule))
            self.assertEqual(Verdict.NOT_CONFLUENT, report.verdict, msg=rule)

            counterexample = report.counterexample
            self.assertEqual(_p(permutation), counterexample.permutation)
            self.assertEqual(_p(left), counterexample.left)
            self.assertEqual(_p(right), counterexample.right)
            self.assertIsNone(counterexample.common)

    def test_joinability_trace(self):
        """
            Test the trace of a fork of EQ1.

            Expected Result: Both successors of 321 reach 312.
        """

        report = check_local_confluence(builtin_system('EQ1'))
        trace = next(trace for trace in report.traces if trace.permutation == _p('321'))
        self.assertSetEqual({_p('231'), _p('312')}, {trace.left, trace.right})
        self.assertEqual(_p('312'), trace.common)

    def test_not_terminating(self):
        """
            Test checking confluence of a system with a cycle.

            Expected Result: An error is raised.
        """

        with self.assertRaises(TerminationNotVerifiedError):
            check_local_confluence(_system('123 -> 132', '132 -> 123'))


class EquivalenceClassTest(TestCase):

    # equivalence_classes_bruteforce()
    # ================================

    def test_equivalence_classes_bruteforce(self):
        """
            Test grouping permutations into classes.

            Expected Result: The known class counts.
        """

        self.assertEqual(102, equivalence_classes_bruteforce(builtin_system('EQ2'), 5).count)
        self.assertEqual(1, equivalence_classes_bruteforce(builtin_system('EQ7'), 3).count)
        self.assertEqual(17, equivalence_classes_bruteforce(builtin_system('EQ4'), 4).count)

        classes = equivalence_classes_bruteforce(builtin_system('EQ1'), 3)
        self.assertListEqual([[_p('123'), _p('132'), _p('213')], [_p('231'), _p('312'), _p('321')]], classes.classes)

    def test_ceiling(self):
        """
            Test grouping permutations beyond the ceiling.

            Expected Result: An error is raised.
        """

        with self.assertRaises(CeilingExceededError):
            equivalence_classes_bruteforce(builtin_system('EQ1'), Limits.max_classes + 1)

    # class_count_series()
    # ====================

    def test_class_count_series(self):
        """
            Test counting classes through the avoiders of the left-hand sides.

            Expected Result: The known counts.
        """

        self.assertListEqual([1, 1, 1, 2, 8], class_count_series(builtin_system('EQ1'), 4).integers())
        self.assertEqual(84, class_count_series(builtin_system('EQ5'), 5).integers()[5])
        self.assertListEqual([1, 1, 2, 1, 6], class_count_series(builtin_system('EQ7'), 4).integers())

    def test_class_count_series_agreement(self):
        """
            Test the three ways of counting classes.

            Expected Result: Union-find classes, the series, avoiders of the left-hand sides found by enumeration and
                             distinct normal forms agree for every builtin system up to length 8.
        """

        for name in BUILTIN_NAMES:
            system = builtin_system(name)
            termination = check_termination(system, 8, system.statistic)
            confluence = check_local_confluence(system, termination)
            patterns = dom_pattern_set(system).patterns
            counts = class_count_series(system, 8, confluence, termination).integers()
            for n in range(1, 9):
                normal_forms = {normal_form(permutation, system, termination, confluence).permutation
                                for permutation in enumerate_permutations(n)}
                self.assertEqual(equivalence_classes_bruteforce(system, n).count, counts[n], msg=f'{name}, {n}')
                self.assertEqual(len(normal_forms), counts[n], msg=f'{name}, {n}')
                self.assertEqual(sum(1 for permutation in enumerate_permutations(n) if avoids(permutation, patterns)),
                                 counts[n], msg=f'{name}, {n}')

    def test_class_count_series_longer(self):
        """
            Test the class counts of the systems with the fewest and the most rules at lengths 7 and 8.

            Expected Result: The published counts.
        """

        self.assertListEqual([1824, 14664], class_count_series(builtin_system('EQ1'), 8).integers()[7:])
        self.assertListEqual([2664, 23258], class_count_series(builtin_system('EQ7'), 8).integers()[7:])

    def test_class_count_series_not_confluent(self):
        """
            Test counting classes of a system that is not confluent.

            Expected Result: An error is raised.
        """

        with self.assertRaises(NonConfluentSystemError):
            class_count_series(_system('123 -> 132'), 5)

    def test_class_count_series_not_terminating(self):
        """
            Test counting classes of a system with a cycle.

            Expected Result: An error is raised.
        """

        with self.assertRaises(TerminationNotVerifiedError):
            class_count_series(_system('123 -> 132', '132 -> 123'), 5)

    # dom_pattern_set()
    # =================

    def test_dom_pattern_set(self):
        """
            Test the antichain of the left-hand sides.

            Expected Result: Left-hand sides containing another one are dropped.
        """

        self.assertTupleEqual((_p('21'), _p('231')), dom_pattern_set(builtin_system('EQ1')).patterns)
        self.assertTupleEqual((_p('21'),), dom_pattern_set(_system('21 -> 12', '321 -> 123')).patterns)


class BuiltinSystemTest(TestCase):

    # builtin_system()
    # ================

    def test_builtin_system(self):
        """
            Test getting builtin systems.

            Expected Result: The names are case-insensitive; every system has a statistic.
        """

        self.assertEqual(builtin_system('EQ5'), builtin_system('eq5'))
        self.assertEqual('EQ5', builtin_system('eq5').name)
        self.assertEqual(3, len(builtin_system('EQ5')))
        self.assertEqual(9, len(builtin_system('EQ7')))
        self.assertTupleEqual(('EQ1', 'EQ2', 'EQ3', 'EQ4', 'EQ5', 'EQ6', 'EQ7'), BUILTIN_NAMES)
        self.assertTrue(all(builtin_system(name).statistic is not None for name in BUILTIN_NAMES))

    def test_builtin_system_unknown(self):
        """
            Test getting a system that does not exist.

            Expected Result: An error is raised.
        """

        with self.assertRaises(UnknownSystemError):
            builtin_system('EQ8')
