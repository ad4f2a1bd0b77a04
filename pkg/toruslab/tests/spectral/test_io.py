import io
import json
import os
import tempfile
import unittest

from fractions import Fraction

from toruslab.errors import DimensionMismatch, ParseError
from toruslab.reals.surd import ExactComplex, Surd
from toruslab.spectral import distribution
from toruslab.spectral import io as spectral_io
from toruslab.spectral.distribution import SpectralDistribution


class TestLoad(unittest.TestCase):

    def test_exact(self):
        u = spectral_io.load_distribution({
            'n': 2,
            'coeffs': [
                {'xi': [2, 0], 're': '1/2'},
                {'xi': [0, 1], 're': 3, 'im': '0+1*sqrt(8)'},
            ]})
        self.assertEqual(u.support(), [(0, 1), (2, 0)])
        self.assertEqual(u[(2, 0)], ExactComplex(Fraction(1, 2)))
        self.assertEqual(u[(0, 1)], ExactComplex(3, Surd(0, 2, 2)))
        self.assertTrue(u.is_exact)

    def test_float(self):
        u = spectral_io.load_distribution({
            'n': 1, 'exact': False,
            'coeffs': [{'xi': [4], 're': 0.25, 'im': '-1.5'}]})
        self.assertFalse(u.is_exact)
        self.assertEqual(u[(4,)], complex(0.25, -1.5))

    def test_errors(self):
        cases = [
            ([], 0),
            ({'coeffs': []}, 0),
            ({'n': 2}, 0),
            ({'n': 2, 'coeffs': [], 'exact': 'yes'}, 0),
            ({'n': 2, 'coeffs': [{'re': '1'}]}, 0),
            ({'n': 2, 'coeffs': [{'xi': [1, 0]}, {'xi': [1, 0]}]}, 1),
            ({'n': 2, 'coeffs': [{'xi': [1, 0]}, {'xi': ['a', 0]}]}, 1),
            ({'n': 1, 'coeffs': [{'xi': [1], 're': 'abc'}]}, 0),
            ({'n': 1, 'coeffs': [{'xi': [1], 're': True}]}, 0),
            ({'n': 1, 'exact': False,
              'coeffs': [{'xi': [1]}, {'xi': [2], 'im': 'x'}]}, 1),
        ]
        for data, position in cases:
            with self.assertRaises(ParseError) as ctx:
                spectral_io.load_distribution(data)
            self.assertEqual(ctx.exception.position, position, data)

    def test_dimension_errors(self):
        with self.assertRaises(DimensionMismatch):
            spectral_io.load_distribution(
                {'n': 2, 'coeffs': [{'xi': [1, 0, 0]}]})
        with self.assertRaises(DimensionMismatch):
            spectral_io.load_distribution({'n': 2, 'coeffs': []}, expect=3)

    def test_bad_json(self):
        with self.assertRaises(ParseError) as ctx:
            spectral_io.read_distribution(io.StringIO('{"n": 2,'))
        self.assertEqual(ctx.exception.position, 8)


class TestDump(unittest.TestCase):

    def test_exact_dump(self):
        u = SpectralDistribution(
            2, {(1, 1): ExactComplex(Fraction(-1, 3), 2), (0, 1): 1})
        self.assertEqual(spectral_io.dump_distribution(u), {
            'n': 2,
            'coeffs': [
                {'xi': [0, 1], 're': '1', 'im': '0'},
                {'xi': [1, 1], 're': '-1/3', 'im': '2'},
            ]})

    def test_float_dump(self):
        u = distribution.monomial((3,), complex(0.5, 0.1))
        out = spectral_io.dump_distribution(u)
        self.assertIs(out['exact'], False)
        self.assertEqual(out['coeffs'][0]['re'], '0.5')
        self.assertEqual(out['coeffs'][0]['im'], '0.10000000000000001')

    def test_file_round_trip(self):
        u = SpectralDistribution(
            3, {(1, 0, -2): ExactComplex(0, Surd(1, 1, 5)), (0, 0, 1): 7})
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'u.json')
            spectral_io.write_distribution(u, path)
            with open(path) as f:
                self.assertEqual(json.load(f)['n'], 3)
            self.assertEqual(spectral_io.read_distribution(path, 3), u)
