import unittest
from k3invariants.curves import CurveInvariants, SpinDatum, HyperellipticTheta, k3_curve_genus, ci_curve_genus, \
    castelnuovo_genus, clifford_restriction, clifford_general, exceptional_low, max_k_for_genus, \
    clifford_h0_bound, rr_h0, serre_h1, h0_nonspecial, theta_degree, expected_theta_codim, same_parity, \
    hyperelliptic_theta_h0, hyperelliptic_theta_loci


class GenusTest(unittest.TestCase):

    def test_k3_curve_genus(self):
        self.assertEqual(9, k3_curve_genus(3, 2))
        self.assertEqual(19, k3_curve_genus(3, 3))
        self.assertEqual(37, k3_curve_genus(2, 6))
        self.assertEqual(3, k3_curve_genus(3, 1))
        self.assertRaises(ValueError, k3_curve_genus, 1, 2)
        self.assertRaises(ValueError, k3_curve_genus, 3, 0)

    def test_ci_curve_genus(self):
        self.assertEqual(9, ci_curve_genus(3, [4, 2]))
        self.assertEqual(28, ci_curve_genus(4, [2, 3, 3]))
        self.assertEqual(17, ci_curve_genus(5, [2, 2, 2, 2]))
        # plane curves
        self.assertEqual(3, ci_curve_genus(2, [4]))
        self.assertRaises(ValueError, ci_curve_genus, 3, [4])

    def test_ci_genus_agrees_with_k3_genus(self):
        for k in range(1, 7):
            self.assertEqual(k3_curve_genus(3, k), ci_curve_genus(3, [4, k]))
            self.assertEqual(k3_curve_genus(4, k), ci_curve_genus(4, [2, 3, k]))
            self.assertEqual(k3_curve_genus(5, k), ci_curve_genus(5, [2, 2, 2, k]))

    def test_castelnuovo_genus(self):
        self.assertEqual(9, castelnuovo_genus(8, 3))
        self.assertEqual(6, castelnuovo_genus(7, 3))
        self.assertEqual(28, castelnuovo_genus(18, 5))
        self.assertEqual(15, castelnuovo_genus(14, 5))
        self.assertEqual(21, castelnuovo_genus(18, 6))
        self.assertEqual(15, castelnuovo_genus(12, 4))

    def test_castelnuovo_plane_curves(self):
        for d in range(2, 15):
            self.assertEqual((d - 1) * (d - 2) // 2, castelnuovo_genus(d, 2))

    def test_castelnuovo_error(self):
        self.assertRaises(ValueError, castelnuovo_genus, 2, 3)
        self.assertRaises(ValueError, castelnuovo_genus, 5, 1)

    def test_castelnuovo_nondecreasing_in_degree(self):
        for r in range(2, 12):
            self.assertEqual(0, castelnuovo_genus(r, r))
            for d in range(r, 40):
                self.assertLessEqual(castelnuovo_genus(d, r), castelnuovo_genus(d + 1, r))


class CliffordTest(unittest.TestCase):

    def test_clifford_restriction(self):
        self.assertEqual(14, clifford_restriction(3, 4, 2))
        self.assertRaises(ValueError, clifford_restriction, 3, 4, 4)
        self.assertRaises(ValueError, clifford_restriction, 3, 4, 0)

    def test_clifford_general(self):
        self.assertEqual(2, clifford_general(3, 2))
        self.assertEqual(10, clifford_general(4, 3))
        self.assertEqual(6, clifford_general(3, 3))
        self.assertRaises(ValueError, clifford_general, 3, 1)

    def test_clifford_general_is_minimum_over_restrictions(self):
        for g1 in range(2, 8):
            for k in range(2, 7):
                self.assertEqual((2 * g1 - 2) * (k - 1) - 2, clifford_general(g1, k))

    def test_exceptional_low(self):
        self.assertTrue(exceptional_low(2, 2))
        self.assertTrue(exceptional_low(2, 3))
        self.assertTrue(exceptional_low(3, 2))
        self.assertFalse(exceptional_low(3, 3))
        self.assertFalse(exceptional_low(4, 2))

    def test_max_k_for_genus(self):
        self.assertEqual([6, 4, 3, 3, 2, 2, 2, 2, 2], [max_k_for_genus(g1, 37) for g1 in range(2, 11)])
        self.assertEqual(0, max_k_for_genus(5, 4))

    def test_clifford_h0_bound(self):
        self.assertEqual(7, clifford_h0_bound(12))
        self.assertEqual(9, clifford_h0_bound(16))
        self.assertEqual(1, clifford_h0_bound(0))
        self.assertRaises(ValueError, clifford_h0_bound, -2)


class RiemannRochTest(unittest.TestCase):

    def test_rr_h0(self):
        self.assertEqual(24, rr_h0(36, 13, 0))
        self.assertEqual(14, rr_h0(36, 28, 5))
        self.assertEqual(15, rr_h0(30, 17, 1))
        self.assertRaises(ValueError, rr_h0, 10, -1, 0)
        self.assertRaises(ValueError, rr_h0, 10, 3, -1)

    def test_serre_h1(self):
        self.assertEqual(10, serre_h1(12, 19, 4))
        self.assertEqual(5, serre_h1(36, 28, 14))
        self.assertRaises(ValueError, serre_h1, 30, 5, 0)

    def test_rr_serre_round_trip(self):
        self.assertEqual(3, serre_h1(20, 15, rr_h0(20, 15, 3)))
        for deg in range(0, 40):
            for g in range(0, 25):
                for h1 in range(0, 6):
                    h0 = rr_h0(deg, g, h1)
                    if h0 >= 0:
                        self.assertEqual(h1, serre_h1(deg, g, h0))

    def test_h0_nonspecial(self):
        self.assertEqual(59, h0_nonspecial(75, 17))
        self.assertEqual(81, h0_nonspecial(108, 28))
        with self.assertRaises(ValueError) as cm:
            h0_nonspecial(3, 10)
        self.assertEqual("bundle cannot be nonspecial", str(cm.exception))


class ThetaTest(unittest.TestCase):

    def test_theta_degree(self):
        self.assertEqual(12, theta_degree(19, 3))
        self.assertEqual(18, theta_degree(28, 3))
        self.assertRaises(ValueError, theta_degree, 19, 5)

    def test_expected_theta_codim(self):
        self.assertEqual([6, 10, 15, 21], [expected_theta_codim(g1) for g1 in range(3, 7)])

    def test_same_parity(self):
        self.assertTrue(same_parity(5, 3))
        self.assertFalse(same_parity(5, 4))

    def test_hyperelliptic_theta_h0(self):
        self.assertEqual(5, hyperelliptic_theta_h0(9, 2))
        self.assertEqual(7, hyperelliptic_theta_h0(13, 2))
        self.assertRaises(ValueError, hyperelliptic_theta_h0, 10, 2)

    def test_hyperelliptic_theta_loci(self):
        loci = hyperelliptic_theta_loci(17, 2, 5)
        self.assertEqual([HyperellipticTheta(8, 0), HyperellipticTheta(7, 2), HyperellipticTheta(6, 4),
                          HyperellipticTheta(5, 6)], loci)
        self.assertEqual([9, 8, 7, 6], [theta.h0 for theta in loci])

    def test_hyperelliptic_theta_loci_all(self):
        loci = hyperelliptic_theta_loci(5, 2)
        self.assertEqual([(2, 0), (1, 2), (0, 4)], [(t.a, t.h) for t in loci])
        for theta in loci:
            self.assertEqual(4, 2 * theta.a + theta.h)

    def test_hyperelliptic_theta_loci_higher_order(self):
        self.assertEqual([(4, 0), (3, 2), (2, 4)], [(t.a, t.h) for t in hyperelliptic_theta_loci(17, 4, 2)])
        self.assertEqual([], hyperelliptic_theta_loci(6, 4))

    def test_hyperelliptic_theta_loci_error(self):
        self.assertRaises(ValueError, hyperelliptic_theta_loci, 17, 3)
        self.assertRaises(ValueError, hyperelliptic_theta_loci, 1, 2)


class CurveInvariantsTest(unittest.TestCase):

    def test_curve_invariants(self):
        curve = CurveInvariants(19, 12, 3)
        self.assertEqual(19, curve.genus)
        self.assertRaises(ValueError, CurveInvariants, -1, 4)
        self.assertRaises(ValueError, CurveInvariants, 3, 0)
        self.assertRaises(ValueError, CurveInvariants, 3, 4, 0)

    def test_curve_invariants_riemann_roch(self):
        self.assertEqual(24, CurveInvariants(13, 36).h0())
        self.assertEqual(14, CurveInvariants(28, 36).h0(5))
        self.assertEqual(5, CurveInvariants(28, 36).h1(14))
        self.assertEqual(59, CurveInvariants(17, 75).nonspecial_h0())
        self.assertRaises(ValueError, CurveInvariants(10, 3).nonspecial_h0)

    def test_curve_invariants_castelnuovo(self):
        self.assertEqual(6, CurveInvariants(6, 7, 3).castelnuovo_bound())
        self.assertTrue(CurveInvariants(6, 7, 3).within_castelnuovo())
        self.assertFalse(CurveInvariants(7, 7, 3).within_castelnuovo())
        self.assertEqual(28, CurveInvariants(28, 18, 5).castelnuovo_bound())
        self.assertRaises(ValueError, CurveInvariants(2, 5).castelnuovo_bound)

    def test_spin_datum(self):
        self.assertEqual(18, SpinDatum(28, 3, 5).degree)
        self.assertRaises(ValueError, SpinDatum, 28, 1, 5)
        self.assertRaises(ValueError, SpinDatum, 28, 5, 5)
        self.assertRaises(ValueError, SpinDatum, 28, 3, -1)

    def test_spin_datum_h1(self):
        self.assertEqual(5, SpinDatum(28, 2, 5).h1)
        self.assertEqual(14, SpinDatum(28, 3, 5).h1)
        self.assertEqual(9, SpinDatum(28, 3, 0).h1)

    def test_spin_datum_hyperelliptic(self):
        theta = SpinDatum.hyperelliptic(9, 2)
        self.assertEqual(SpinDatum(9, 4, 5), theta)
        self.assertEqual(4, theta.degree)
        self.assertEqual(hyperelliptic_theta_h0(13, 2), SpinDatum.hyperelliptic(13, 2).h0)
        self.assertRaises(ValueError, SpinDatum.hyperelliptic, 10, 2)
