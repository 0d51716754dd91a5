import unittest
from k3invariants.surfaces import HirzebruchDivisor, QuadricDivisor, Singularity, SingularityBudget, \
    hirzebruch_intersect, hirzebruch_canonical, hirzebruch_h0, hirzebruch_pa, hirzebruch_adjoint, \
    as_hirzebruch_divisor, quadric_h0, quadric_pa, quadric_canonical, quadric_adjoint, delpezzo_h0, \
    delpezzo_pa, geometric_genus, plane_model_genus, plane_model_degree, aut_dim


class HirzebruchDivisorTest(unittest.TestCase):

    @staticmethod
    def get_sample_lattice_count(a, b, n):
        # monomials of the Cox ring of F_n in the class a C0 + b f
        if a < 0:
            return 0
        return sum(1 for i in range(a + 1) for j in range(b + 1) if j + i * n <= b)

    def test_validation(self):
        self.assertRaises(ValueError, HirzebruchDivisor, 1, 1, -1)

    def test_intersection_form(self):
        c0, f = HirzebruchDivisor.section(5), HirzebruchDivisor.fibre(5)
        self.assertEqual(-5, c0.self_intersection())
        self.assertEqual(1, c0.intersect(f))
        self.assertEqual(0, f.self_intersection())

    def test_intersect_symmetric(self):
        d1, d2 = HirzebruchDivisor(3, 7, 2), HirzebruchDivisor(1, 4, 2)
        self.assertEqual(hirzebruch_intersect(d1, d2), hirzebruch_intersect(d2, d1))

    def test_intersect_error(self):
        self.assertRaises(ValueError, hirzebruch_intersect, HirzebruchDivisor(1, 0, 1), HirzebruchDivisor(1, 0, 2))

    def test_scroll_degrees(self):
        self.assertEqual(3, HirzebruchDivisor(1, 2, 1).self_intersection())
        self.assertEqual(4, HirzebruchDivisor(1, 2, 0).self_intersection())
        self.assertEqual(4, HirzebruchDivisor(1, 3, 2).self_intersection())
        self.assertEqual(11, HirzebruchDivisor(1, 8, 5).self_intersection())

    def test_canonical(self):
        k = hirzebruch_canonical(1)
        self.assertEqual(HirzebruchDivisor(-2, -3, 1), k)
        self.assertEqual(8, k.self_intersection())
        for n in range(6):
            self.assertEqual(8, hirzebruch_canonical(n).self_intersection())

    def test_h0(self):
        self.assertEqual(35, hirzebruch_h0(HirzebruchDivisor(4, 8, 1)))
        self.assertEqual(33, hirzebruch_h0(HirzebruchDivisor(5, 7, 1)))
        self.assertEqual(51, hirzebruch_h0(HirzebruchDivisor(5, 10, 1)))
        self.assertEqual(34, hirzebruch_h0(HirzebruchDivisor(3, 15, 5)))
        self.assertEqual(66, hirzebruch_h0(HirzebruchDivisor(5, 10, 0)))
        self.assertEqual(66, hirzebruch_h0(HirzebruchDivisor(5, 15, 2)))
        self.assertEqual(0, hirzebruch_h0(HirzebruchDivisor(-1, 4, 1)))

    def test_h0_lattice_oracle(self):
        for n in range(6):
            for a in range(9):
                for b in range(9):
                    self.assertEqual(self.get_sample_lattice_count(a, b, n), HirzebruchDivisor(a, b, n).h0())

    def test_h0_riemann_roch_on_nef_classes(self):
        for n in range(6):
            for a in range(6):
                for b in range(n * a, n * a + 6):
                    d = HirzebruchDivisor(a, b, n)
                    k = HirzebruchDivisor.canonical(n)
                    self.assertEqual(1 + (d.self_intersection() - d.intersect(k)) // 2, d.h0())

    def test_pa(self):
        self.assertEqual(15, hirzebruch_pa(HirzebruchDivisor(4, 8, 1)))
        self.assertEqual(14, hirzebruch_pa(HirzebruchDivisor(5, 7, 1)))
        self.assertEqual(13, hirzebruch_pa(HirzebruchDivisor(3, 9, 1)))
        self.assertEqual(33, hirzebruch_pa(HirzebruchDivisor(7, 10, 1)))

    def test_pa_two_paths(self):
        for n in range(6):
            for a in range(9):
                for b in range(9):
                    self.assertEqual((a - 1) * (b - 1) - n * a * (a - 1) // 2, HirzebruchDivisor(a, b, n).pa())

    def test_pa_agrees_with_quadric(self):
        for a in range(9):
            for b in range(9):
                self.assertEqual(quadric_pa(a, b), HirzebruchDivisor(a, b, 0).pa())
                self.assertEqual(quadric_h0(a, b), HirzebruchDivisor(a, b, 0).h0())

    def test_adjoint(self):
        self.assertEqual(HirzebruchDivisor(2, 5, 1), hirzebruch_adjoint(HirzebruchDivisor(4, 8, 1)))
        self.assertEqual(HirzebruchDivisor(3, 4, 1), HirzebruchDivisor(5, 7, 1).adjoint())
        self.assertEqual(HirzebruchDivisor(1, 6, 1), HirzebruchDivisor(3, 9, 1).adjoint())

    def test_arithmetic(self):
        h, f = HirzebruchDivisor(1, 2, 1), HirzebruchDivisor.fibre(1)
        self.assertEqual(HirzebruchDivisor(4, 8, 1), h * 4)
        self.assertEqual(HirzebruchDivisor(4, 8, 1), 4 * h)
        self.assertEqual(HirzebruchDivisor(2, 5, 1), 2 * h + f)
        self.assertEqual(HirzebruchDivisor(1, 1, 1), h - f)
        self.assertEqual(HirzebruchDivisor(-1, -2, 1), -h)

    def test_as_hirzebruch_divisor(self):
        self.assertEqual(HirzebruchDivisor(5, 10, 1), as_hirzebruch_divisor([5, 10, 1]))
        self.assertEqual(HirzebruchDivisor(5, 10, 1), as_hirzebruch_divisor((5, 10, 1)))
        self.assertRaises(ValueError, as_hirzebruch_divisor, [5, 10])


class QuadricAndDelPezzoTest(unittest.TestCase):

    def test_quadric(self):
        self.assertEqual(49, quadric_h0(6, 6))
        self.assertEqual(0, quadric_h0(-1, 3))
        self.assertEqual(25, quadric_pa(6, 6))
        self.assertEqual(20, quadric_pa(5, 6))
        self.assertEqual(28, quadric_pa(5, 8))

    def test_quadric_adjunction(self):
        self.assertEqual(QuadricDivisor(-2, -2), quadric_canonical())
        self.assertEqual(QuadricDivisor(4, 4), quadric_adjoint(6, 6))
        for a in range(8):
            for b in range(8):
                d = QuadricDivisor(a, b)
                self.assertEqual(1 + d.intersect(d.adjoint()) // 2, d.pa())

    def test_delpezzo(self):
        self.assertEqual(85, delpezzo_h0(4, 6))
        self.assertEqual(6, delpezzo_h0(5, 1))
        self.assertEqual(10, delpezzo_h0(9, 1))
        self.assertEqual(6, delpezzo_pa(5, 2))
        self.assertEqual(1, delpezzo_pa(3, 1))
        self.assertRaises(ValueError, delpezzo_h0, 10, 1)
        self.assertRaises(ValueError, delpezzo_pa, 4, -1)


class SingularCurvesTest(unittest.TestCase):

    def test_delta(self):
        self.assertEqual(1, Singularity.NODE.delta)
        self.assertEqual(1, Singularity.CUSP.delta)
        self.assertEqual(3, Singularity.TRIPLE_POINT.delta)
        self.assertEqual(5, SingularityBudget.of(triple_point=1, node=2).delta())

    def test_budget_from_mapping(self):
        self.assertEqual(SingularityBudget({Singularity.NODE: 6}), SingularityBudget.from_mapping({'node': 6}))
        self.assertRaises(ValueError, SingularityBudget.from_mapping, {'tacnode': 1})
        self.assertRaises(ValueError, SingularityBudget.of, node=-1)

    def test_geometric_genus(self):
        self.assertEqual(19, geometric_genus(25, SingularityBudget.of(node=6)))
        self.assertEqual(19, geometric_genus(20, SingularityBudget.of(node=1)))
        self.assertEqual(28, geometric_genus(33, SingularityBudget.of(triple_point=1, node=2)))
        self.assertEqual(7, geometric_genus(7, SingularityBudget()))
        self.assertRaises(ValueError, geometric_genus, 2, SingularityBudget.of(node=3))

    def test_plane_models(self):
        self.assertEqual(28, plane_model_genus(9))
        self.assertEqual(28, plane_model_genus(13, [5, 4, 4, 4, 4], 4))
        self.assertEqual(18, plane_model_degree(9, [], 2))
        self.assertEqual(18, plane_model_degree(13, [5, 4, 4, 4, 4], 3))
        self.assertRaises(ValueError, plane_model_genus, 0)
        self.assertRaises(ValueError, plane_model_genus, 4, [3], 2)

    def test_aut_dim(self):
        self.assertEqual(6, aut_dim('hirzebruch', 0))
        self.assertEqual(6, aut_dim('hirzebruch', 1))
        self.assertEqual(10, aut_dim('hirzebruch', 5))
        self.assertEqual(8, aut_dim('plane'))
        self.assertEqual(6, aut_dim('quadric'))
        self.assertEqual(35, aut_dim('pgl', 6))
        self.assertEqual(3, aut_dim('pgl', 2))
        self.assertRaises(ValueError, aut_dim, 'cone')
