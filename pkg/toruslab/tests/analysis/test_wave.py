import math
import unittest

from fractions import Fraction

from toruslab.analysis import wave
from toruslab.errors import ConfigError, InvalidCoefficient
from toruslab.symbols.builtins import Wave


def _is_zero(n, eta2, xi):
    return not Wave(n, eta2=Fraction(eta2)).exact_value(tuple(xi))


class TestWaveClassify(unittest.TestCase):

    def test_one_dimension(self):
        wc = wave.wave_classify(1, Fraction(2))
        self.assertEqual(wc['verdict'], wave.NO_NONZERO_ZEROS)
        self.assertEqual((wc['ind_gh'], wc['ind_gs']), ('2', '2'))
        self.assertEqual(wc['zeros'], [])
        self.assertIsNotNone(wc['obstruction'])

    def test_rational_eta(self):
        wc = wave.wave_classify(1, Fraction(1, 4))
        self.assertEqual(wc['verdict'], wave.RATIONAL_ETA)
        self.assertEqual((wc['ind_gh'], wc['ind_gs']), ('inf', '1'))
        self.assertEqual(wc['zeros'][0], [1, 2])
        self.assertEqual(len(wc['zeros']), 5)
        self.assertEqual(len(wc['notes']), 1)

        wc = wave.wave_classify(3, Fraction(4, 9), count=2)
        self.assertEqual(wc['verdict'], wave.RATIONAL_ETA)
        self.assertEqual(wc['ind_gs'], '[1, 2]')
        self.assertEqual(wc['zeros'], [[2, 3, 0, 0], [4, 6, 0, 0]])

    def test_two_dimensions(self):
        wc = wave.wave_classify(2, Fraction(3))
        self.assertEqual(wc['verdict'], wave.NO_NONZERO_ZEROS)
        self.assertIn('prime 3', wc['obstruction'])

        wc = wave.wave_classify(2, Fraction(5, 7))
        self.assertEqual(wc['verdict'], wave.NO_NONZERO_ZEROS)
        self.assertIn('prime 7', wc['obstruction'])

        wc = wave.wave_classify(2, Fraction(2))
        self.assertEqual(wc['verdict'], wave.INFINITE_ZEROS)
        self.assertEqual((wc['ind_gh'], wc['ind_gs']), ('inf', '2'))
        self.assertEqual(len(wc['zeros']), 5)
        for xi in wc['zeros']:
            self.assertTrue(_is_zero(2, 2, xi), xi)

    def test_three_dimensions(self):
        for eta2 in (7, 15, 28, Fraction(7, 4)):
            wc = wave.wave_classify(3, Fraction(eta2))
            self.assertEqual(wc['verdict'], wave.NO_NONZERO_ZEROS, eta2)
            self.assertEqual(wc['ind_gh'], '2')

        wc = wave.wave_classify(3, Fraction(2))
        self.assertEqual(wc['verdict'], wave.INFINITE_ZEROS)
        for xi in wc['zeros']:
            self.assertEqual(len(xi), 4)
            self.assertTrue(_is_zero(3, 2, xi), xi)

    def test_four_and_more(self):
        wc = wave.wave_classify(4, Fraction(2))
        self.assertEqual(wc['verdict'], wave.INFINITE_ZEROS)
        self.assertEqual(wc['zeros'][2], [6, 0, 0, 3, 3])

        wc = wave.wave_classify(5, Fraction(7), count=3)
        self.assertEqual(wc['verdict'], wave.INFINITE_ZEROS)
        self.assertEqual(len(wc['zeros']), 3)
        for xi in wc['zeros']:
            self.assertEqual(len(xi), 6)
            self.assertTrue(_is_zero(5, 7, xi), xi)

    def test_bad_arguments(self):
        with self.assertRaises(ConfigError):
            wave.wave_classify(0, Fraction(2))
        with self.assertRaises(InvalidCoefficient):
            wave.wave_classify(2, Fraction(0))
        with self.assertRaises(InvalidCoefficient):
            wave.wave_classify(2, Fraction(-3))


class TestBruteForce(unittest.TestCase):

    def test_agrees_in_two_dimensions(self):
        for a in range(1, 51):
            for b in range(1, 51):
                if math.gcd(a, b) != 1:
                    continue
                eta2 = Fraction(a, b)
                wc = wave.wave_classify(2, eta2, count=1)
                found = wave.brute_force_zero(2, eta2, 200)
                if wc['verdict'] == wave.NO_NONZERO_ZEROS:
                    self.assertIsNone(found, eta2)
                else:
                    self.assertIsNotNone(found, eta2)
                    self.assertTrue(_is_zero(2, eta2, found), eta2)

    def test_agrees_in_three_dimensions(self):
        for a in range(1, 13):
            for b in range(1, 13):
                if math.gcd(a, b) != 1:
                    continue
                eta2 = Fraction(a, b)
                wc = wave.wave_classify(3, eta2, count=1)
                found = wave.brute_force_zero(3, eta2, 80)
                self.assertEqual(
                    found is None,
                    wc['verdict'] == wave.NO_NONZERO_ZEROS, eta2)

    def test_obstructed_cases_have_no_small_zero(self):
        self.assertIsNone(wave.brute_force_zero(3, Fraction(7), 80))
        self.assertIsNone(wave.brute_force_zero(3, Fraction(15), 80))
        self.assertIsNone(wave.brute_force_zero(2, Fraction(3), 200))
