from .. import freering
from .. import liebasis
from .. import zlinalg
from ..ideals import bracket
import math
import unittest


class TestVnBasis(unittest.TestCase):

    def test_sizes(self):
        for n in range(2, 6):
            self.assertEqual(len(liebasis.vn_basis(n)), math.factorial(n - 1))

    def test_range(self):
        self.assertRaises(ValueError, liebasis.vn_basis, 1)
        self.assertRaises(ValueError, liebasis.vn_basis, 8)
        self.assertRaises(ValueError, liebasis.vn_basis, 5, 4)

    def test_verify(self):
        for n in range(2, 6):
            report = liebasis.verify_vn_basis(n)
            self.assertTrue(report['holds'], report)
            self.assertEqual(report['rank'], math.factorial(n - 1))
            self.assertTrue(all(d == 1 for d in report['invariant_factors']))

    def test_leading_word(self):
        e = liebasis.vn_basis(4).elements[0]
        self.assertEqual(freering.leading_monomial(e), (4, 1, 2, 3))


class TestDegreeFiveLattices(unittest.TestCase):

    def setUp(self):
        self.s3 = liebasis.build_section3()

    def test_ranks(self):
        self.assertEqual(self.s3.p5.dim, 120)
        self.assertEqual(self.s3.W1.rank, 30)
        self.assertEqual([part.rank for part in self.s3.W1_parts], [6] * 5)
        self.assertEqual(self.s3.W2.rank, 44)
        self.assertEqual([len(self.s3.B1), len(self.s3.B2), len(self.s3.B3)], [24, 8, 12])
        self.assertEqual(self.s3.quotient_rank, 20)

    def test_w_is_t4_component(self):
        W = zlinalg.lattice_sum(self.s3.W1, self.s3.W2)
        self.assertEqual(W, liebasis.t4_degree5().lattice)

    def test_disjoint(self):
        report = liebasis.verify_w1_w2_disjoint()
        self.assertTrue(report['holds'])
        self.assertEqual(report['intersection_rank'], 0)
        self.assertTrue(report['nu_kills_w2'])

    def test_direct_sum(self):
        report = liebasis.verify_w1_direct_sum()
        self.assertTrue(report['holds'], report)
        self.assertEqual(report['part_ranks'], [6] * 5)
        self.assertEqual(report['w1_rank'], 30)

    def test_b_basis(self):
        report = liebasis.verify_b_basis()
        self.assertTrue(report['holds'], report)
        self.assertEqual(report['sizes'], [24, 8, 12])
        self.assertTrue(report['leading_terms_distinct'])

    def test_corollaries(self):
        report = liebasis.verify_corollaries()
        self.assertTrue(report['holds'], report)
        self.assertEqual(report['u2prime_rank'], 24)
        self.assertEqual(report['u2_over_u2prime'], {'free_rank': 20, 'torsion': []})

    def test_quotient_coordinates(self):
        self.assertEqual(self.s3.quotient_coordinates(bracket(1, 2, 3, 4, 5)), [0] * 20)
        # outside W
        self.assertIsNone(self.s3.quotient_coordinates(freering.monomial((1, 2, 3, 4, 5))))
        b2 = self.s3.B2[0]
        expected = [1] + [0] * 19
        self.assertEqual(self.s3.quotient_coordinates(b2), expected)

    def test_generator_reduction(self):
        report = liebasis.verify_generator_reduction()
        self.assertTrue(report['holds'], report)
        self.assertEqual(report['rank'], 74)


class TestPresentation(unittest.TestCase):

    def test_mu(self):
        self.assertEqual(liebasis.mu((1, 2, 3, 4, 5)), 1)
        self.assertEqual(liebasis.mu((2, 1, 3, 4, 5)), -1)
        self.assertEqual(liebasis.mu((2, 3, 1, 4, 5)), 1)
        self.assertRaises(ValueError, liebasis.mu, (1, 2, 3, 4, 4))

    def test_relations(self):
        pres = liebasis.build_presentation()
        self.assertEqual(pres.rank, 120)
        for r in pres.q_relations:
            self.assertEqual(liebasis.mu_vector(r) % 3, 0)
        self.assertEqual(pres.p_lattice.rank, 120)

    def test_psi(self):
        M = liebasis.psi_matrix()
        self.assertEqual((M.rows, M.cols), (120, 20))
        report = liebasis.verify_ker_psi()
        self.assertTrue(report['holds'], report)
        self.assertEqual(report['kernel_rank'], 100)
        self.assertEqual(report['q_rank'], 100)

    def test_c_generates(self):
        report = liebasis.verify_c_generates()
        self.assertTrue(report['holds'])
        self.assertEqual(report['c_size'], 20)

    def test_p_from_psi(self):
        report = liebasis.p_from_psi()
        self.assertTrue(report['holds'], report)
        self.assertEqual(report['p_rank'], 120)

    def test_h_not_in_p(self):
        report = liebasis.verify_h_not_in_P()
        self.assertTrue(report['holds'], report)
        self.assertFalse(report['member'])
        self.assertEqual(report['mu_h12345'], 1)
        self.assertEqual(report['order'], 3)
        self.assertTrue(all(m % 3 == 0 for m in report['mu_values']))

    def test_pipeline(self):
        report = liebasis.pipeline_order_of_v()
        self.assertEqual(report['via_presentation'], 3)
        self.assertEqual(report['direct'], 3)
        self.assertTrue(report['holds'])


if __name__ == '__main__':
    unittest.main()
