import unittest

from fractions import Fraction

from toruslab.diophantine import continued
from toruslab.errors import ConfigError
from toruslab.reals import certified


class TestConvergents(unittest.TestCase):

    def test_recurrence(self):
        self.assertEqual(
            continued.convergents([1, 2, 2, 2]),
            [(1, 1), (3, 2), (7, 5), (17, 12)])
        self.assertEqual(continued.convergents([0, 8, 9]), [
            (0, 1), (1, 8), (9, 73)])


class TestCfExpand(unittest.TestCase):

    def test_sqrt_two(self):
        cf = continued.cf_expand(certified.sqrt(Fraction(2)), 20)
        self.assertEqual(cf['partial_quotients'], [1] + [2] * 20)
        self.assertEqual(cf['status'], continued.DEPTH_REACHED)
        self.assertEqual(cf['certified_depth'], 20)
        self.assertEqual(cf['precision_bits'], 0)
        self.assertEqual(cf['convergents'][3], (17, 12))
        self.assertTrue(continued.determinant_holds(cf))

    def test_periodic_surds(self):
        three = continued.cf_expand(certified.sqrt(Fraction(3)), 8)
        self.assertEqual(
            three['partial_quotients'], [1, 1, 2, 1, 2, 1, 2, 1, 2])
        five = continued.cf_expand(certified.sqrt(Fraction(5)), 5)
        self.assertEqual(five['partial_quotients'], [2, 4, 4, 4, 4, 4])
        self.assertTrue(continued.determinant_holds(five))

    def test_rational_terminates(self):
        cf = continued.cf_expand(certified.rational(7, 3), 5)
        self.assertEqual(cf['partial_quotients'], [2, 3])
        self.assertEqual(cf['status'], continued.COMPLETE)
        self.assertEqual(cf['convergents'][-1], (7, 3))

    def test_e_from_enclosures(self):
        cf = continued.cf_expand(certified.euler_e(), 10)
        self.assertEqual(
            cf['partial_quotients'], [2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1])
        self.assertEqual(cf['status'], continued.DEPTH_REACHED)
        self.assertEqual(cf['precision_bits'], 64)
        self.assertTrue(continued.determinant_holds(cf))
        self.assertTrue(
            continued.best_approximation_holds(certified.euler_e(), cf))

    def test_precision_cap_truncates(self):
        cf = continued.cf_expand(certified.euler_e(), 60, precision_cap=64)
        self.assertEqual(cf['status'], continued.TRUNCATION_LIMITED)
        self.assertLess(cf['certified_depth'], 60)
        self.assertEqual(
            cf['certified_depth'], len(cf['partial_quotients']) - 1)
        self.assertEqual(cf['partial_quotients'][:6], [2, 1, 2, 1, 1, 4])

    def test_decimal_is_cut_by_its_digits(self):
        cf = continued.cf_expand(certified.decimal('3.14159'), 10)
        self.assertEqual(cf['partial_quotients'][:5], [3, 7, 15, 1, 25])
        self.assertEqual(cf['status'], continued.COMPLETE)
        # 10 q^2 < 10^5 keeps q_0 = 1 and q_1 = 7 only
        self.assertEqual(cf['certified_depth'], 1)

    def test_depth_must_be_positive(self):
        with self.assertRaises(ConfigError):
            continued.cf_expand(certified.sqrt(Fraction(2)), 0)


class TestIdentities(unittest.TestCase):

    def test_determinant_detects_bad_convergents(self):
        cf = continued.cf_expand(certified.sqrt(Fraction(2)), 3)
        cf['convergents'] = [(1, 1), (3, 2), (7, 4)]
        self.assertFalse(continued.determinant_holds(cf))

    def test_best_approximation(self):
        root2 = certified.sqrt(Fraction(2))
        cf = continued.cf_expand(root2, 20)
        self.assertTrue(continued.best_approximation_holds(root2, cf))
        wrong = continued.cf_expand(certified.sqrt(Fraction(3)), 6)
        self.assertFalse(continued.best_approximation_holds(root2, wrong))
