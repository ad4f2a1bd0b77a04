import math
import unittest
from unittest import mock

from fractions import Fraction

from toruslab import precision
from toruslab.diophantine import measure
from toruslab.errors import ConfigError, InvalidCoefficient
from toruslab.reals import certified


class TestExponents(unittest.TestCase):

    def test_exponents(self):
        conv = [(1, 1), (1, 1), (3, 2), (7, 5), (17, 12)]
        mu = measure.exponents(conv, 4)
        self.assertEqual(len(mu), 2)
        self.assertAlmostEqual(mu[0], 1 + math.log(5) / math.log(2))
        self.assertAlmostEqual(mu[1], 1 + math.log(12) / math.log(5))

    def test_exceeds_threshold(self):
        self.assertTrue(measure.exceeds_threshold([2.0, 150.0], 100))
        self.assertFalse(measure.exceeds_threshold([3.0, 16.2, 4.0], 100))
        self.assertTrue(measure.exceeds_threshold([3.0, 16.2, 4.0], 10))

    def test_records_climbing(self):
        self.assertTrue(measure.records_climbing([3.0, 2.0, 4.0, 5.0]))
        self.assertFalse(measure.records_climbing([3.0, 2.0, 4.0, 4.2]))
        self.assertFalse(measure.records_climbing([2.5, 2.2, 2.1]))


class TestMuEstimate(unittest.TestCase):

    def test_quadratic_irrationals_sit_near_two(self):
        for d in (2, 3, 5):
            est = measure.mu_estimate(certified.sqrt(Fraction(d)), 40)
            self.assertGreaterEqual(est['mu_hat'], 1.9, d)
            self.assertLessEqual(est['mu_hat'], 2.1, d)
            self.assertEqual(est['status'], measure.CONVERGED)
            self.assertEqual(est['certified_depth'], 40)
            self.assertEqual(est['registry']['mu_lo'], '2')
            self.assertEqual(len(est['mu_k']), 38)

    def test_e(self):
        est = measure.mu_estimate(certified.euler_e(), 20)
        self.assertEqual(est['status'], measure.CONVERGED)
        self.assertLess(est['mu_hat'], 2.5)
        self.assertEqual(est['registry']['mu_hi'], '2')

    def test_liouville_records_stay_below_threshold(self):
        est = measure.mu_estimate(certified.liouville(10), 18)
        # the 10^-6 term already leaves q_7 near 10^18 after q_6 near 10^6
        self.assertTrue(any(3.9 < v < 4.1 for v in est['mu_k']))
        self.assertTrue(est['records_climbing'])
        self.assertLess(max(est['mu_k']), 100)
        self.assertNotEqual(est['status'], measure.GROWING_UNBOUNDED)
        self.assertEqual(est['registry']['mu_lo'], 'inf')

    @mock.patch.object(precision, 'LIOUVILLE_THRESHOLD', 5.5)
    def test_liouville_grows(self):
        # q jumps from about 10^24 to 10^120 in the tail half
        est = measure.mu_estimate(certified.liouville(10), 40)
        self.assertGreater(est['mu_hat'], 5)
        self.assertEqual(est['status'], measure.GROWING_UNBOUNDED)

    def test_champernowne_first_jump(self):
        est = measure.mu_estimate(certified.champernowne(10), 8)
        # a_4 = 149083 after q_3 = 81
        self.assertAlmostEqual(
            est['mu_k'][1],
            1 + math.log(149083 * 81 + 73) / math.log(81), places=9)
        self.assertEqual(est['registry']['mu_lo'], '10')

    def test_champernowne_reaches_six(self):
        est = measure.mu_estimate(certified.champernowne(10), 18)
        self.assertGreaterEqual(max(est['mu_k']), 6)
        self.assertLess(max(est['mu_k']), 100)
        self.assertNotEqual(est['status'], measure.GROWING_UNBOUNDED)

        digits = ''.join(str(k) for k in range(1, 400))[:1000]
        est = measure.mu_estimate(certified.decimal('0.' + digits), 18)
        self.assertGreaterEqual(max(est['mu_k']), 6)

    def test_decimal_is_truncation_limited(self):
        est = measure.mu_estimate(certified.decimal('3.14159'), 10)
        self.assertEqual(est['status'], measure.TRUNCATION_LIMITED)
        self.assertEqual(est['mu_k'], [])
        self.assertIsNone(est['mu_hat'])
        self.assertEqual(est['registry']['mu_lo'], '1')

    def test_rejects_rationals_and_shallow_depth(self):
        with self.assertRaises(InvalidCoefficient):
            measure.mu_estimate(certified.rational(3, 2), 10)
        with self.assertRaises(ConfigError):
            measure.mu_estimate(certified.sqrt(Fraction(2)), 2)


class TestSampleMu(unittest.TestCase):

    def test_sample_is_reproducible(self):
        a = measure.sample_mu(4, digits=40, depth=30, seed=5)
        b = measure.sample_mu(4, digits=40, depth=30, seed=5)
        self.assertEqual(a, b)
        self.assertEqual(a['count'], 4)
        self.assertEqual(len(a['samples']), 4)
        self.assertTrue(0 <= a['near_two'] <= 4)
        self.assertEqual(a['fraction_near_two'], a['near_two'] / 4)
        for row in a['samples']:
            self.assertTrue(row['alpha'].startswith('dec:0.'))
            self.assertEqual(len(row['alpha']), len('dec:0.') + 40)

    def test_needs_a_sample(self):
        with self.assertRaises(ConfigError):
            measure.sample_mu(0)
