from itertools import combinations

import numpy as np

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from gf.fields import element_order_key, make_field
from matgf.matrices import (
    block_assemble,
    embed,
    from_elements,
    identity,
    kernel,
    moore_matrix,
    rank,
    vandermonde,
    vstack,
    zeros,
)
from matgf.rest.serializers import MatrixSerializer


class RankTestCase(SimpleTestCase):
    def setUp(self):
        self.gf2 = make_field(2)

    def test_trivial(self):
        self.assertEqual(rank(zeros(self.gf2, 3, 4)), 0)
        self.assertEqual(rank(identity(self.gf2, 3)), 3)
        self.assertEqual(rank(zeros(self.gf2, 0, 4)), 0)

    def test_dependent_rows_over_gf2(self):
        matrix = from_elements(self.gf2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        self.assertEqual(rank(matrix), 2)

    def test_transpose_on_random_matrices(self):
        spec = make_field(5, 2)
        rng = np.random.default_rng(11)
        for _ in range(25):
            rows, cols = rng.integers(1, 7, size=2)
            values = rng.integers(0, spec.order, size=(rows, cols)).tolist()
            matrix = from_elements(spec, values)
            self.assertEqual(rank(matrix), rank(matrix.transpose()))
            self.assertLessEqual(rank(matrix), min(rows, cols))


class KernelTestCase(SimpleTestCase):
    def test_identity(self):
        self.assertEqual(kernel(identity(make_field(7), 4)).rows, 0)

    def test_single_parity(self):
        gf2 = make_field(2)
        basis = kernel(from_elements(gf2, [[1, 1]]))
        self.assertEqual(basis.to_integers(), [[1, 1]])

    def test_kernel_properties_on_random_matrices(self):
        spec = make_field(3, 2)
        rng = np.random.default_rng(3)
        for _ in range(25):
            rows, cols = rng.integers(1, 7, size=2)
            matrix = from_elements(spec, rng.integers(0, spec.order, size=(rows, cols)).tolist())
            basis = kernel(matrix)
            self.assertEqual(basis.rows, cols - rank(matrix))
            self.assertEqual(rank(basis), basis.rows)
            if basis.rows:
                self.assertTrue((matrix @ basis.transpose()).is_zero())

    def test_duality(self):
        spec = make_field(7)
        rng = np.random.default_rng(5)
        generator = from_elements(spec, rng.integers(0, 7, size=(3, 6)).tolist())
        while rank(generator) < 3:
            generator = from_elements(spec, rng.integers(0, 7, size=(3, 6)).tolist())
        dual = kernel(kernel(generator))
        self.assertEqual(rank(dual), 3)
        self.assertEqual(rank(vstack([generator, dual])), 3)


class MooreMatrixTestCase(SimpleTestCase):
    def setUp(self):
        self.gf4 = make_field(2, 2)

    def test_one_is_frobenius_fixed(self):
        spec = make_field(37, 3)
        self.assertEqual(moore_matrix([spec.one()], 3, 37).to_integers(), [[1], [1], [1]])

    def test_single_row(self):
        points = [self.gf4.element(v) for v in (1, 2, 3)]
        self.assertEqual(moore_matrix(points, 1, 2).to_integers(), [[1, 2, 3]])

    def test_gf4(self):
        alpha, alpha_plus_one = self.gf4.element((0, 1)), self.gf4.element((1, 1))
        matrix = moore_matrix([alpha, alpha_plus_one], 2, 2)
        self.assertEqual(
            matrix.to_elements(), [[alpha, alpha_plus_one], [alpha_plus_one, alpha]]
        )

    def test_unsorted_points(self):
        with self.assertRaises(ValidationError):
            moore_matrix([self.gf4.element(3), self.gf4.element(2)], 2, 2)

    def test_invalid_q(self):
        with self.assertRaises(ValidationError):
            moore_matrix([self.gf4.one()], 2, 3)

    def test_full_rank_on_independent_points(self):
        spec = make_field(5, 4)
        prime = spec.prime_field
        rng = np.random.default_rng(17)
        trials = 0
        while trials < 60:
            size = int(rng.integers(1, spec.e + 1))
            values = rng.integers(1, spec.order, size=size).tolist()
            points = sorted({spec.element(v) for v in values}, key=element_order_key)
            coordinates = prime([list(x.coeffs) for x in points])
            if int(np.linalg.matrix_rank(coordinates)) != len(points):
                continue
            trials += 1
            h = int(rng.integers(len(points), spec.e + 2))
            self.assertEqual(rank(moore_matrix(points, h, 5)), len(points))


class VandermondeTestCase(SimpleTestCase):
    def test_single_row(self):
        spec = make_field(7)
        points = [spec.element(v) for v in (2, 3, 5)]
        self.assertEqual(vandermonde(points, 1).to_integers(), [[1, 1, 1]])

    def test_gf3(self):
        spec = make_field(3)
        points = [spec.element(v) for v in (0, 1, 2)]
        self.assertEqual(vandermonde(points, 2).to_integers(), [[1, 1, 1], [0, 1, 2]])

    def test_duplicates(self):
        spec = make_field(3)
        with self.assertRaises(ValidationError):
            vandermonde([spec.one(), spec.one()], 2)

    def test_every_square_minor_is_nonsingular(self):
        spec = make_field(11)
        points = [spec.element(v) for v in range(8)]
        for rows in range(1, 5):
            matrix = vandermonde(points, rows)
            for subset in combinations(range(8), rows):
                self.assertEqual(rank(matrix.columns(subset)), rows)


class BlockAssembleTestCase(SimpleTestCase):
    def setUp(self):
        self.spec = make_field(7)
        self.a = from_elements(self.spec, [[1, 2], [3, 4]])
        self.b = from_elements(self.spec, [[1, 1, 1]])

    def test_single_block(self):
        self.assertEqual(block_assemble([[self.a]]), self.a)

    def test_block_diagonal(self):
        matrix = block_assemble([[self.a, None], [None, self.b]])
        self.assertEqual(matrix.shape, (3, 5))
        self.assertEqual(rank(matrix), rank(self.a) + rank(self.b))

    def test_parity_layout_shape(self):
        bottom = from_elements(self.spec, [[1, 2, 3, 4, 5]])
        matrix = block_assemble(
            [
                [self.a, None],
                [None, self.b],
                [bottom.columns([0, 1]), bottom.columns([2, 3, 4])],
            ]
        )
        self.assertEqual(matrix.shape, (4, 5))
        self.assertEqual(matrix.to_integers()[3], [1, 2, 3, 4, 5])

    def test_inconsistent_dimensions(self):
        with self.assertRaises(ValidationError):
            block_assemble([[self.a, self.b]])

    def test_embedding_keeps_integers(self):
        extension = make_field(7, 2)
        embedded = embed(self.a, extension)
        self.assertEqual(embedded.spec, extension)
        self.assertEqual(embedded.to_integers(), self.a.to_integers())


class MatrixSerializerTestCase(SimpleTestCase):
    def test_round_trip(self):
        spec = make_field(2, 2)
        matrix = from_elements(spec, [[0, 1, 2], [3, 2, 1]])
        data = MatrixSerializer(matrix).data
        self.assertEqual(data["data"][1][0], [1, 1])
        serializer = MatrixSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), matrix)

    def test_shape_mismatch(self):
        field = {"p": 2, "e": 1, "modulus": [0, 1]}
        serializer = MatrixSerializer(data={"field": field, "rows": 2, "cols": 1, "data": [[[1]]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn("data", serializer.errors)
