import math
import random
import unittest

from fractions import Fraction

from toruslab.errors import DimensionMismatch
from toruslab.reals import certified
from toruslab.reals.surd import ExactComplex, Surd
from toruslab.spectral import distribution
from toruslab.spectral.distribution import SpectralDistribution
from toruslab.symbols import base
from toruslab.symbols.builtins import Heat, Laplacian, VectorField


class TestSpectralDistribution(unittest.TestCase):

    def test_construction(self):
        u = SpectralDistribution(
            2, {(2, 0): 1, (0, 1): Fraction(1, 2), (-1, 0): 3, (1, 1): 0})
        self.assertEqual(len(u), 3)
        self.assertEqual(u.support(), [(-1, 0), (0, 1), (2, 0)])
        self.assertEqual(u[(0, 1)], ExactComplex(Fraction(1, 2)))
        self.assertEqual(u[(5, 5)], 0)
        self.assertNotIn((1, 1), u)
        self.assertTrue(u.is_exact)
        self.assertEqual(u.origin, distribution.USER)

        with self.assertRaises(DimensionMismatch):
            SpectralDistribution(0)
        with self.assertRaises(DimensionMismatch):
            SpectralDistribution(2, {(1, 2, 3): 1})
        with self.assertRaises(TypeError):
            SpectralDistribution(1, {(1,): 'one'})

    def test_arithmetic(self):
        u = SpectralDistribution(2, {(1, 0): 1, (0, 1): 2})
        v = SpectralDistribution(2, {(1, 0): -1, (3, 0): 5})
        w = u + v
        self.assertEqual(w.support(), [(0, 1), (3, 0)])
        self.assertEqual(len(u - u), 0)
        self.assertEqual(u - v + v, u)
        scaled = u.scale(ExactComplex(0, 1))
        self.assertEqual(scaled[(0, 1)], ExactComplex(0, 2))
        self.assertFalse(u.scale(0.5).is_exact)
        self.assertEqual(u.restrict([(0, 1), (7, 7)]).support(), [(0, 1)])
        with self.assertRaises(DimensionMismatch):
            u + distribution.monomial((1, 0, 0))

    def test_sobolev_norms(self):
        u = SpectralDistribution(2, {(1, 0): 1, (1, 1): ExactComplex(0, 2)})
        self.assertEqual(distribution.sobolev_norm_sq(u, 0), 5)
        self.assertEqual(distribution.sobolev_norm_sq(u, 1), 14)
        self.assertEqual(
            distribution.sobolev_norm_sq(u, -1), Fraction(11, 6))
        half = distribution.sobolev_norm_sq(u, 0.5)
        self.assertIsInstance(half, float)
        self.assertAlmostEqual(half, math.sqrt(2) + 4 * math.sqrt(3))
        self.assertAlmostEqual(
            distribution.sobolev_norm(u, 1), math.sqrt(14))

        root = distribution.monomial((1,), Surd(1, 1, 2))
        norm = distribution.sobolev_norm_sq(root, 0)
        self.assertEqual(norm, Surd(3, 2, 2))
        self.assertEqual(str(norm), '3+2*sqrt(2)')

    def test_apply_drops_zeros(self):
        u = SpectralDistribution(2, {(0, 0): 5, (1, 2): 1})
        self.assertEqual(
            distribution.apply(Laplacian(2), u),
            distribution.monomial((1, 2), -5))

        vf = VectorField(certified.rational(3, 2))
        u = SpectralDistribution(2, {(3, 2): 1, (1, 1): 2})
        pu = distribution.apply(vf, u)
        self.assertEqual(pu.support(), [(1, 1)])
        self.assertEqual(pu[(1, 1)], ExactComplex(0, -1))

        with self.assertRaises(DimensionMismatch):
            distribution.apply(Laplacian(3), u)

    def test_bessel(self):
        u = distribution.monomial((1, 2), 3)
        self.assertEqual(
            distribution.bessel(u, 2)[(1, 2)], ExactComplex(Fraction(1, 2)))
        self.assertEqual(distribution.bessel(u, -2)[(1, 2)], 18)
        odd = distribution.bessel(u, 1)[(1, 2)]
        self.assertAlmostEqual(complex(odd).real, 3 / math.sqrt(6))

    def test_pairing(self):
        u = SpectralDistribution(1, {(1,): 2, (2,): 1})
        phi = SpectralDistribution(1, {(-1,): 3, (2,): 7})
        self.assertEqual(distribution.pairing(u, phi), 6)
        self.assertEqual(distribution.pairing(phi, phi), 0)

    def test_transpose_duality(self):
        rng = random.Random(4)
        for sym in (VectorField(certified.rational(3, 2)), Heat(1),
                    Laplacian(2)):
            u = distribution.random_distribution(rng, 2, 25, 8)
            phi = distribution.random_distribution(rng, 2, 25, 8)
            lhs = distribution.pairing(distribution.apply(sym, u), phi)
            rhs = distribution.pairing(
                u, distribution.apply(base.transpose(sym), phi))
            self.assertEqual(lhs, rhs, sym.text)

    def test_bessel_commutes_and_inverts(self):
        rng = random.Random(9)
        sym = Heat(1)
        u = distribution.random_distribution(rng, 2, 20, 10)
        for s in (2, 4, -2):
            self.assertEqual(
                distribution.bessel(distribution.apply(sym, u), s),
                distribution.apply(sym, distribution.bessel(u, s)))
            self.assertEqual(
                distribution.bessel(distribution.bessel(u, s), -s), u)
            # (I - Laplacian)^(-s/2) maps H^k isometrically onto H^(k+s)
            self.assertEqual(
                distribution.sobolev_norm_sq(distribution.bessel(u, s), 1),
                distribution.sobolev_norm_sq(u, 1 - s))


class TestRandom(unittest.TestCase):

    def test_random_compatible_avoids_zeros(self):
        vf = VectorField(certified.rational(3, 2))
        f = distribution.random_compatible(vf, random.Random(1), 40, 12)
        self.assertGreater(len(f), 0)
        self.assertTrue(f.is_exact)
        for xi in f:
            self.assertFalse(vf.is_zero(xi), xi)
            self.assertLessEqual(sum(abs(c) for c in xi), 12)

    def test_random_is_seeded(self):
        a = distribution.random_distribution(random.Random(7), 3, 10, 5)
        b = distribution.random_distribution(random.Random(7), 3, 10, 5)
        self.assertEqual(a, b)
        lap = Laplacian(2)
        f = distribution.random_compatible(lap, random.Random(3), 30, 1)
        self.assertNotIn((0, 0), f)
