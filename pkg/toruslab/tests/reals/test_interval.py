import math
import unittest

from fractions import Fraction

from toruslab.reals import interval
from toruslab.reals.interval import Interval


class TestInterval(unittest.TestCase):

    def test_construction(self):
        x = Interval(1, 3)
        self.assertEqual(x.width(), 2)
        self.assertEqual(x.mid(), 2)
        self.assertTrue(Interval(5).is_point())
        with self.assertRaises(ValueError):
            Interval(3, 1)

    def test_arithmetic(self):
        a = Interval(1, 2)
        b = Interval(-1, 3)
        self.assertEqual(a + b, Interval(0, 5))
        self.assertEqual(a - b, Interval(-2, 3))
        self.assertEqual(a * b, Interval(-2, 6))
        self.assertEqual(2 * a, Interval(2, 4))
        self.assertEqual(1 - a, Interval(-1, 0))
        self.assertEqual(a / 2, Interval(Fraction(1, 2), 1))
        self.assertEqual(1 / a, Interval(Fraction(1, 2), 1))
        with self.assertRaises(ZeroDivisionError):
            a / b

    def test_square_and_abs(self):
        self.assertEqual(Interval(-2, 1).square(), Interval(0, 4))
        self.assertEqual(Interval(-3, -2).square(), Interval(4, 9))
        self.assertEqual(abs(Interval(-3, 1)), Interval(0, 3))
        self.assertEqual(abs(Interval(-3, -1)), Interval(1, 3))

    def test_sqrt(self):
        root = Interval(2).sqrt(40)
        self.assertTrue(root.lo * root.lo <= 2 <= root.hi * root.hi)
        self.assertLessEqual(root.width(), Fraction(1, 2 ** 40))
        self.assertEqual(Interval(4).sqrt(10), Interval(2))
        with self.assertRaises(ValueError):
            Interval(-1, 1).sqrt(10)

    def test_sqrt_interval(self):
        r = interval.sqrt_interval(2, 64)
        self.assertTrue(r.lo ** 2 <= 2 <= r.hi ** 2)
        self.assertEqual(interval.sqrt_interval(9, 64), Interval(3))

    def test_log_exp(self):
        lg = interval.log(Interval(2), 64)
        self.assertLessEqual(float(lg.lo), math.log(2))
        self.assertGreaterEqual(float(lg.hi), math.log(2))
        ex = interval.exp(Interval(1), 64)
        self.assertLessEqual(float(ex.lo), math.e)
        self.assertGreaterEqual(float(ex.hi), math.e)
        with self.assertRaises(ValueError):
            interval.log(Interval(0, 1))

    def test_outward_floats(self):
        x = Interval(Fraction(1, 3), Fraction(2, 3))
        lo, hi = interval.outward_floats(x)
        self.assertLessEqual(Fraction(lo), x.lo)
        self.assertGreaterEqual(Fraction(hi), x.hi)
