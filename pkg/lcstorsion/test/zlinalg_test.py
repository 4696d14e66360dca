from .. import zlinalg
from ..zlinalg import IntMatrix, Lattice, lattice_from_rows, INFINITE
import itertools
import random
import unittest

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors


def random_matrix(rng, rows, cols, bound=6):
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(cols)]
                      for _ in range(rows)], cols)


def box(n, radius):
    return itertools.product(range(-radius, radius + 1), repeat=n)


def times(vec, M):
    return [sum(a * M[i, j] for i, a in enumerate(vec)) for j in range(M.cols)]


class TestIntMatrix(unittest.TestCase):

    def test_shape_checks(self):
        self.assertRaises(zlinalg.DimensionError, IntMatrix, [[1, 2], [3]])
        self.assertRaises(zlinalg.DimensionError, IntMatrix, [])
        self.assertEqual(IntMatrix([], 3).cols, 3)
        A = IntMatrix([[1, 2, 3]])
        self.assertRaises(zlinalg.DimensionError, lambda: A * A)

    def test_product_and_transpose(self):
        A = IntMatrix([[1, 2], [3, 4]])
        self.assertEqual(A * IntMatrix.identity(2), A)
        self.assertEqual(A.transpose(), IntMatrix([[1, 3], [2, 4]]))
        self.assertEqual((A * A).to_lists(), [[7, 10], [15, 22]])

    def test_determinant(self):
        rng = random.Random(3)
        for _ in range(10):
            A = random_matrix(rng, 4, 4)
            self.assertEqual(A.determinant(), Matrix(A.to_lists()).det())
        self.assertEqual(IntMatrix([[0, 1], [1, 0]]).determinant(), -1)
        self.assertEqual(IntMatrix([[1, 2], [2, 4]]).determinant(), 0)

    def test_text_format(self):
        A = IntMatrix([[1, -2], [30, 4]])
        self.assertEqual(zlinalg.write_matrix(A), '2 2\n1 -2\n30 4')
        self.assertEqual(zlinalg.read_matrix(zlinalg.write_matrix(A)), A)
        self.assertRaises(zlinalg.DimensionError, zlinalg.read_matrix, '2 2\n1 2\n')
        self.assertRaises(ValueError, zlinalg.read_matrix, '')

    def test_json_format(self):
        big = 3 ** 90
        A = IntMatrix([[big, -1]])
        self.assertEqual(zlinalg.matrix_to_json(A), [[str(big), '-1']])
        self.assertEqual(zlinalg.matrix_from_json(zlinalg.matrix_to_json(A)), A)


class TestHermite(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(2024)

    def test_transform(self):
        for _ in range(20):
            M = random_matrix(self.rng, 5, 4)
            H, U = zlinalg.hnf(M)
            self.assertEqual(abs(U.determinant()), 1)
            UM = U * M
            self.assertEqual(UM.to_lists()[:H.rows], H.to_lists())
            self.assertTrue(all(not any(r) for r in UM.to_lists()[H.rows:]))

    def test_echelon_shape(self):
        for _ in range(20):
            M = random_matrix(self.rng, 4, 5)
            L = lattice_from_rows(M)
            rows = L.rows()
            for (r, c) in zip(rows, L.pivots):
                self.assertGreater(r[c], 0)
                self.assertFalse(any(r[:c]))
            # entries above a pivot are reduced
            for i, c in enumerate(L.pivots):
                for k in range(i):
                    self.assertTrue(0 <= rows[k][c] < rows[i][c])

    def test_canonical(self):
        for _ in range(10):
            M = random_matrix(self.rng, 3, 4)
            shuffled = list(M)
            self.rng.shuffle(shuffled)
            extra = [a + b for a, b in zip(shuffled[0], shuffled[1])]
            self.assertEqual(lattice_from_rows(M), lattice_from_rows(shuffled + [extra], 4))

    def test_empty(self):
        L = lattice_from_rows([], 3)
        self.assertEqual(L, Lattice.zero(3))
        self.assertRaises(zlinalg.DimensionError, lattice_from_rows, [])
        self.assertRaises(zlinalg.DimensionError, lattice_from_rows, [[1, 2]], 3)


class TestMembership(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(11)

    def test_generators_are_members(self):
        for _ in range(20):
            M = random_matrix(self.rng, 3, 4)
            L = lattice_from_rows(M)
            for row in M:
                self.assertIn(row, L)
                coords = zlinalg.solve(row, L)
                self.assertEqual(times(coords, L.basis_matrix), list(row))

    def test_against_enumeration(self):
        L = lattice_from_rows([[2, 1], [0, 3]])
        members = set()
        for a, b in box(2, 12):
            members.add((2 * a, a + 3 * b))
        for v in box(2, 5):
            self.assertEqual(zlinalg.member(v, L), v in members)

    def test_order_in_quotient(self):
        L = lattice_from_rows([[3, 0], [0, 0]], 2)
        self.assertEqual(zlinalg.order_in_quotient([1, 0], L), 3)
        self.assertEqual(zlinalg.order_in_quotient([3, 0], L), 1)
        self.assertIs(zlinalg.order_in_quotient([0, 1], L), INFINITE)
        self.assertEqual(str(INFINITE), 'infinite')

    def test_order_matches_multiples(self):
        for _ in range(20):
            M = random_matrix(self.rng, 3, 3, bound=4)
            L = lattice_from_rows(M)
            v = [self.rng.randint(-3, 3) for _ in range(3)]
            k = zlinalg.order_in_quotient(v, L)
            if k is INFINITE:
                self.assertLess(L.rank, 3)
                continue
            self.assertTrue(zlinalg.member([k * x for x in v], L))
            for j in range(1, k):
                self.assertFalse(zlinalg.member([j * x for x in v], L))

    def test_dimension_mismatch(self):
        L = Lattice.full(2)
        self.assertRaises(zlinalg.DimensionError, zlinalg.member, [1, 2, 3], L)
        self.assertRaises(zlinalg.DimensionError, zlinalg.lattice_sum, L, Lattice.full(3))


class TestLatticeOperations(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(5)

    def test_sum(self):
        A = lattice_from_rows([[2, 0]])
        B = lattice_from_rows([[0, 2], [1, 1]])
        S = zlinalg.lattice_sum(A, B)
        self.assertEqual(S, lattice_from_rows([[1, 1], [0, 2]]))
        self.assertTrue(zlinalg.lattice_equal(S, zlinalg.lattice_sum(B, A)))

    def test_intersect_against_enumeration(self):
        for _ in range(5):
            A = lattice_from_rows(random_matrix(self.rng, 3, 3, bound=3))
            B = lattice_from_rows(random_matrix(self.rng, 2, 3, bound=3))
            C = zlinalg.lattice_intersect(A, B)
            for v in box(3, 3):
                self.assertEqual(v in C, v in A and v in B)

    def test_kernel(self):
        for _ in range(10):
            M = random_matrix(self.rng, 5, 3)
            K = zlinalg.kernel(M)
            rank = lattice_from_rows(M).rank
            self.assertEqual(K.rank, 5 - rank)
            for y in K.rows():
                self.assertEqual(times(y, M), [0, 0, 0])
            self.assertTrue(zlinalg.is_saturated(K))

    def test_preimage_against_enumeration(self):
        M = IntMatrix([[1, 2], [0, 3], [2, 1]])
        L = lattice_from_rows([[2, 0], [0, 3]])
        P = zlinalg.preimage(M, L)
        for y in box(3, 3):
            self.assertEqual(y in P, times(y, M) in L)

    def test_coordinate_system(self):
        rows = [[1, 1, 0], [0, 2, 1]]
        cs = zlinalg.CoordinateSystem(rows)
        self.assertEqual(cs.coordinates([2, 0, -1]), [2, -1])
        self.assertIsNone(cs.coordinates([1, 0, 0]))
        self.assertRaises(ValueError, zlinalg.CoordinateSystem, [[1, 2], [2, 4]])


class TestSmith(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(99)

    def oracle(self, M):
        d = invariant_factors(Matrix(M.to_lists()), domain=ZZ)
        return sorted(abs(int(x)) for x in d if x)

    def test_against_sympy(self):
        for shape in [(3, 3), (4, 2), (2, 5), (5, 5)]:
            for _ in range(8):
                M = random_matrix(self.rng, *shape)
                res = zlinalg.snf(M)
                self.assertEqual(sorted(res.d), self.oracle(M))
                for a, b in zip(res.d, res.d[1:]):
                    self.assertEqual(b % a, 0)

    def test_transforms(self):
        for _ in range(8):
            M = random_matrix(self.rng, 4, 3)
            res = zlinalg.snf(M, transforms=True)
            U, V = res.transforms
            D = U * M * V
            for i in range(D.rows):
                for j in range(D.cols):
                    expected = res.d[i] if i == j and i < res.rank else 0
                    self.assertEqual(D[i, j], expected)
            self.assertEqual(abs(U.determinant()), 1)
            self.assertEqual(abs(V.determinant()), 1)

    def test_transforms_random_shapes(self):
        for _ in range(30):
            rows, cols = self.rng.randint(1, 12), self.rng.randint(1, 12)
            M = random_matrix(self.rng, rows, cols, bound=50)
            res = zlinalg.snf(M, transforms=True)
            U, V = res.transforms
            D = U * M * V
            for i in range(rows):
                for j in range(cols):
                    expected = res.d[i] if i == j and i < res.rank else 0
                    self.assertEqual(D[i, j], expected, (rows, cols))
            self.assertEqual(abs(U.determinant()), 1)
            self.assertEqual(abs(V.determinant()), 1)
            self.assertTrue(all(x > 0 for x in res.d))
            for a, b in zip(res.d, res.d[1:]):
                self.assertEqual(b % a, 0)

    def test_large_against_sympy(self):
        for shape in [(12, 12), (12, 7), (6, 11)]:
            M = random_matrix(self.rng, *shape, bound=50)
            self.assertEqual(zlinalg.snf(M).d, self.oracle(M))

    def test_quotient_invariants(self):
        L = lattice_from_rows([[2, 0, 0], [0, 6, 0]])
        q = zlinalg.quotient_invariants(L)
        self.assertEqual(q.free_rank, 1)
        self.assertEqual(q.torsion, [2, 6])
        big = lattice_from_rows([[1, 0, 0], [0, 2, 0]])
        self.assertEqual(zlinalg.quotient_invariants(L, big).torsion, [3])
        self.assertFalse(zlinalg.is_saturated(L))
        self.assertTrue(zlinalg.is_saturated(big))

    def test_containment_error(self):
        small = lattice_from_rows([[1, 0]])
        big = lattice_from_rows([[2, 0]])
        with self.assertRaises(zlinalg.ContainmentError) as cm:
            zlinalg.quotient_invariants(small, big)
        self.assertEqual(cm.exception.row, (1, 0))


if __name__ == '__main__':
    unittest.main()
