import io
import math
import unittest
from unittest import mock

from fractions import Fraction

from toruslab import lattice, precision
from toruslab.analysis import census, indices
from toruslab.errors import ConfigError
from toruslab.reals import certified
from toruslab.symbols.builtins import (
    Heat, Laplacian, LogDamped, PartialDerivative, VectorField, Wave)


class TestEstimateIndices(unittest.TestCase):

    def test_laplacian_is_elliptic(self):
        report = indices.estimate_indices(
            Laplacian(2), lattice.make_window(2, 512))
        self.assertLessEqual(report['r_gs'], 0.2)
        self.assertEqual(report['r_gh'], report['r_gs'])
        self.assertEqual(report['gh_verdict'], 'finite')
        self.assertEqual(report['zero_census']['verdict'], census.ONLY_ORIGIN)
        self.assertEqual(len(report['shells']), 9)
        self.assertFalse(report['precision_dominated'])
        self.assertEqual(report['prediction']['ind_gs'], '0')
        for _, ratio in report['ellipticity']:
            self.assertAlmostEqual(ratio, 1.0)

    def test_heat_loses_one_derivative(self):
        report = indices.estimate_indices(
            Heat(1), lattice.make_window(2, 512))
        self.assertGreaterEqual(report['r_gs'], 0.9)
        self.assertLessEqual(report['r_gs'], 1.05)
        # |p(10^k e_1)| / |10^k e_1|^2 = 10^-k
        ratios = dict(report['ellipticity'])
        self.assertAlmostEqual(ratios[3], 1e-3)

    def test_rational_vector_field(self):
        vf = VectorField(certified.rational(3, 2))
        report = indices.estimate_indices(
            vf, lattice.make_window(2, 64), r=1.0)
        self.assertIsNone(report['r_gh'])
        self.assertEqual(report['gh_verdict'], 'infinite-heuristic')
        cert = report['certificate']
        self.assertEqual(cert['K_exact'], '1/2')
        self.assertEqual(cert['K'], 0.5)
        self.assertEqual(cert['violator'], [-3, -2])
        self.assertEqual(len(report['notes']), 2)

    @mock.patch.object(precision, 'TAIL_SHELLS', 1)
    def test_rational_vector_field_gs_index(self):
        vf = VectorField(certified.rational(3, 2))
        report = indices.estimate_indices(vf, lattice.make_window(2, 2048))
        # min |p| = 1/2 at (1229, 819) on the last shell
        self.assertAlmostEqual(report['r_gs'], 1 + 1 / 11)
        self.assertEqual(report['shells'][-1]['witness']['l1'], 2048)

    def test_sqrt_two_vector_field_on_large_window(self):
        vf = VectorField(certified.sqrt(Fraction(2)))
        report = indices.estimate_indices(vf, lattice.make_window(2, 10000))
        self.assertGreaterEqual(report['r_gh'], 1.8)
        self.assertLessEqual(report['r_gh'], 2.2)
        found = {
            tuple(abs(c) for c in sh['witness']['xi'])
            for sh in report['shells'] if sh['witness'] is not None}
        # Pell solutions x^2 - 2y^2 = +-1
        self.assertIn((1393, 985), found)
        self.assertIn((3363, 2378), found)

    def test_pell_frequency(self):
        vf = VectorField(certified.sqrt(Fraction(2)))
        pt = indices.envelope_point(vf, (8119, 5741))
        self.assertEqual(8119 ** 2 - 2 * 5741 ** 2, -1)
        expected = 1 / (8119 + 5741 * math.sqrt(2))
        self.assertLess(abs(pt['abs_p'] / expected - 1), 1e-9)

    def test_small_window_rejected(self):
        with self.assertRaises(ConfigError):
            indices.estimate_indices(
                Laplacian(2), lattice.make_window(2, indices.MIN_RADIUS - 1))


class TestEllipticity(unittest.TestCase):

    def test_logdamp_is_not_elliptic(self):
        ratios = indices.ellipticity_ratio(LogDamped())
        self.assertEqual([k for k, _ in ratios], list(range(7)))
        for k, ratio in ratios:
            self.assertAlmostEqual(
                ratio, 1 / math.log(math.e + 10 ** k), places=9)
        values = [ratio for _, ratio in ratios]
        self.assertEqual(values, sorted(values, reverse=True))

    def test_zero_along_the_axis(self):
        ratios = indices.ellipticity_ratio(PartialDerivative(2), kmax=2)
        self.assertEqual(ratios, [(0, 0.0), (1, 0.0), (2, 0.0)])


class TestCertifyLowerBound(unittest.TestCase):

    def test_laplacian(self):
        cert = indices.certify_lower_bound(
            Laplacian(2), lattice.make_window(2, 32), 0.0)
        # |xi|^2 >= |xi|_1^2 / 2 with equality on the diagonal
        self.assertEqual(cert['K_exact'], '1/2')
        self.assertIsNone(cert['violator'])
        self.assertFalse(cert['degenerate'])
        self.assertFalse(cert['asymptotic'])

    def test_vector_field_three_halves(self):
        vf = VectorField(certified.rational(3, 2))
        cert = indices.certify_lower_bound(vf, lattice.make_window(2, 32), 1)
        self.assertEqual(cert['K_exact'], '1/2')
        self.assertIn(cert['argmin'], ([-1, -1], [1, 1]))
        self.assertEqual(cert['zeros_excluded'], 12)
        self.assertEqual(cert['violator'], [-3, -2])

    def test_heat(self):
        cert = indices.certify_lower_bound(
            Heat(1), lattice.make_window(2, 32), 1)
        self.assertEqual(cert['K_exact'], '0+1/2*sqrt(2)')
        self.assertAlmostEqual(cert['K'], math.sqrt(0.5))
        self.assertIn(cert['argmin'], ([-1, -1], [-1, 1], [1, -1], [1, 1]))

    def test_heat_wider_window(self):
        # t^2 + u^4 >= (t + u)^2 / 2 with equality only at t = u = 1
        cert = indices.certify_lower_bound(
            Heat(1), lattice.make_window(2, 100), 1)
        self.assertEqual(cert['K_exact'], '0+1/2*sqrt(2)')
        self.assertGreaterEqual(cert['K'], 2 ** -0.5 - 1e-12)

    def test_wave_sqrt_two(self):
        w = Wave(1, eta=certified.sqrt(Fraction(2)))
        cert = indices.certify_lower_bound(w, lattice.make_window(2, 40), 2)
        self.assertEqual(cert['K'], 1.0)
        self.assertEqual(cert['K_exact'], '1')

    def test_irrational_alpha_uses_enclosures(self):
        vf = VectorField(certified.euler_e())
        cert = indices.certify_lower_bound(vf, lattice.make_window(2, 8), 1)
        self.assertIsNone(cert['K_exact'])
        self.assertGreater(cert['K'], 0)
        # 3 - e = 0.2817... at (3, 1)
        self.assertLessEqual(cert['K'], 3 - math.e + 1e-9)

    def test_empty_window(self):
        with self.assertRaises(ConfigError):
            indices.certify_lower_bound(
                Laplacian(2), lattice.make_window(2, 0), 0.0)


class TestEnvelope(unittest.TestCase):

    def test_csv(self):
        report = indices.estimate_indices(
            Laplacian(2), lattice.make_window(2, 64))
        out = io.StringIO()
        indices.write_envelope(report, out)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], 'l1xi,log_l1xi,abs_p,log_abs_p,loss')
        self.assertEqual(len(lines), 1 + len(report['witnesses']))
        first = lines[1].split(',')
        self.assertEqual(first[0], '2')
        self.assertAlmostEqual(float(first[2]), 2.0, places=12)

    def test_envelope_point(self):
        pt = indices.envelope_point(Laplacian(2), (4, 4))
        self.assertEqual(pt['l1'], 8)
        self.assertAlmostEqual(pt['abs_p'], 32.0)
        self.assertAlmostEqual(pt['loss'], 2 - math.log(32) / math.log(8))
