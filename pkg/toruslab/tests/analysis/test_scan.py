import unittest

from fractions import Fraction

from toruslab import lattice
from toruslab.analysis import census, scan
from toruslab.errors import ConfigError
from toruslab.reals import certified
from toruslab.symbols.builtins import Laplacian, PartialDerivative, VectorField


class TestScanShell(unittest.TestCase):

    def test_origin_shell(self):
        st = scan.scan_shell(Laplacian(2), 0)
        self.assertEqual(st.points, 1)
        self.assertEqual(st.zero_count, 1)
        self.assertEqual(st.zeros, [(0, 0)])
        self.assertEqual(st.nonzero, 0)
        self.assertIsNone(st.min_abs)

    def test_laplacian_shell_minimum(self):
        st = scan.scan_shell(Laplacian(2), 3)
        self.assertEqual(st.points, 12)
        self.assertEqual(st.nonzero, 12)
        self.assertEqual(st.zero_count, 0)
        self.assertEqual(st.min_abs, 5.0)
        self.assertEqual(
            [xi for _, xi in st.near], [(-2, -1), (-2, 1), (-1, -2), (-1, 2)])

    def test_rational_vector_field_zeros(self):
        vf = VectorField(certified.rational(3, 2))
        st = scan.scan_shell(vf, 5)
        self.assertEqual(st.zero_count, 2)
        self.assertEqual(st.zeros, [(-3, -2), (3, 2)])
        self.assertEqual(st.nonzero, st.points - 2)
        # |2 xi_1 - 3 xi_2| is at least 5 on this shell
        self.assertEqual(st.min_abs, 2.5)


class TestScanWindow(unittest.TestCase):

    def test_window_checks(self):
        with self.assertRaises(ConfigError):
            scan.scan_window(Laplacian(2), lattice.make_window(3, 4))
        with self.assertRaises(ConfigError):
            scan.scan_window(Laplacian(2), lattice.make_window(2, 4, 'L2'))

    def test_one_entry_per_shell(self):
        stats = scan.scan_window(Laplacian(2), lattice.make_window(2, 10))
        self.assertEqual([st.shell for st in stats], list(range(11)))
        self.assertEqual(
            sum(st.points for st in stats),
            lattice.window_size(lattice.make_window(2, 10)))

    def test_parallel_matches_serial(self):
        vf = VectorField(certified.sqrt(Fraction(2)))
        w = lattice.make_window(2, 2 * scan.BLOCK + 3)
        serial = scan.scan_window(vf, w, threads=1)
        parallel = scan.scan_window(vf, w, threads=2)
        self.assertEqual(serial, parallel)


class TestCensus(unittest.TestCase):

    def test_only_origin(self):
        zc = census.zero_scan(Laplacian(2), lattice.make_window(2, 20))
        self.assertEqual(zc['verdict'], census.ONLY_ORIGIN)
        self.assertEqual(zc['total'], 0)
        self.assertEqual(zc['zeros'], [[0, 0]])
        self.assertEqual(zc['radii'], [5, 10, 20])
        self.assertFalse(zc['capped'])

    def test_rational_line_grows(self):
        vf = VectorField(certified.rational(3, 2))
        zc = census.zero_scan(vf, lattice.make_window(2, 40))
        self.assertEqual(zc['verdict'], census.GROWING_SUSPECTED)
        self.assertEqual(zc['counts'], [4, 8, 16])
        self.assertEqual(zc['total'], 16)
        self.assertEqual(len(zc['zeros']), 17)
        self.assertEqual(zc['undecided'], [])

    def test_hyperplane_of_zeros(self):
        zc = census.zero_scan(
            PartialDerivative(2), lattice.make_window(2, 16))
        self.assertEqual(zc['counts'], [8, 16, 32])
        self.assertEqual(zc['verdict'], census.GROWING_SUSPECTED)

    def test_finite_zero_set(self):
        w = lattice.make_window(2, 8)
        stats = [
            scan.ShellStats(
                shell=s, points=0, nonzero=0,
                zero_count=2 if s == 1 else 0,
                zeros=[(0, -1), (0, 1)] if s == 1 else [],
                undecided_count=0, undecided=[], near=[])
            for s in range(0, 9)]
        zc = census.census_from_stats(Laplacian(2), w, stats)
        self.assertEqual(zc['counts'], [2, 2, 2])
        self.assertEqual(zc['verdict'], census.FINITE_SUSPECTED)
