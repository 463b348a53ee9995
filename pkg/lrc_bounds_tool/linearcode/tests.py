from itertools import combinations

import numpy as np

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, override_settings, tag

from gf.fields import make_field
from linearcode.codes import DistanceAboveCap, DistanceMethod, LinearCode, distance_method
from linearcode.rest.serializers import LinearCodeSerializer
from matgf.matrices import from_elements, rank, vandermonde
from utils.exceptions import SearchLimitExceeded


def repetition_code(n: int = 3) -> LinearCode:
    return LinearCode.from_generator(from_elements(make_field(2), [[1] * n]))


def hamming_code() -> LinearCode:
    columns = [[(j >> i) & 1 for j in range(1, 8)] for i in range(3)]
    return LinearCode.from_parity(from_elements(make_field(2), columns))


def two_block_code() -> LinearCode:
    """
    The [6, 4] code over GF(7) with one parity per block {1,2,3} and {4,5,6}.
    """
    H = from_elements(make_field(7), [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]])
    return LinearCode.from_parity(H)


def reed_solomon_code(p: int, e: int, length: int, redundancy: int) -> LinearCode:
    spec = make_field(p, e)
    points = [spec.element(i) for i in range(length)]
    return LinearCode.from_parity(vandermonde(points, redundancy))


def random_code(rng: np.random.Generator, q: int, n: int, k: int) -> LinearCode:
    spec = make_field(q)
    while True:
        G = from_elements(spec, rng.integers(0, q, size=(k, n)).tolist())
        if rank(G) == k:
            return LinearCode.from_generator(G)


class ParityTestCase(SimpleTestCase):
    def test_even_weight_code(self):
        code = LinearCode.from_parity(from_elements(make_field(2), [[1, 1, 1]]))
        self.assertEqual((code.n, code.k), (3, 2))

    def test_zero_code(self):
        spec = make_field(5)
        code = LinearCode.from_parity(from_elements(spec, np.eye(4, dtype=int).tolist()))
        self.assertEqual(code.k, 0)
        with self.assertRaises(ValidationError):
            code.min_distance()

    def test_rank_deficient_parity(self):
        spec = make_field(3)
        code = LinearCode.from_parity(from_elements(spec, [[1, 1, 0], [2, 2, 0]]))
        self.assertEqual(code.k, 2)
        self.assertEqual(code.H.rows, 1)

    def test_inconsistent_matrices(self):
        spec = make_field(2)
        with self.assertRaises(ValidationError):
            LinearCode(spec, from_elements(spec, [[1, 0]]), from_elements(spec, [[1, 0]]))


class CoordinateRankTestCase(SimpleTestCase):
    def setUp(self):
        self.code = two_block_code()

    def test_rank(self):
        self.assertEqual(self.code.coord_rank([]), 0)
        self.assertEqual(self.code.coord_rank(range(6)), 4)
        self.assertEqual(self.code.coord_rank([0, 1, 2]), 2)

    def test_out_of_range(self):
        with self.assertRaises(ValidationError):
            self.code.coord_rank([6])

    def test_span(self):
        self.assertTrue(self.code.span_contains([0, 1], 1))
        self.assertTrue(self.code.span_contains([0, 1], 2))
        self.assertFalse(self.code.span_contains([], 2))
        self.assertFalse(self.code.span_contains([0, 1], 3))

    def test_monotone_and_submodular(self):
        rng = np.random.default_rng(23)
        code = random_code(rng, 3, 8, 4)
        for _ in range(40):
            a = set(rng.choice(8, size=rng.integers(0, 8), replace=False).tolist())
            b = set(rng.choice(8, size=rng.integers(0, 8), replace=False).tolist())
            self.assertLessEqual(code.coord_rank(a & b), code.coord_rank(a))
            self.assertLessEqual(
                code.coord_rank(a | b) + code.coord_rank(a & b),
                code.coord_rank(a) + code.coord_rank(b),
            )


class PunctureTestCase(SimpleTestCase):
    def test_whole_support(self):
        code = two_block_code()
        punctured = code.puncture(range(6))
        self.assertEqual(punctured.identifier, code.identifier)

    def test_repetition(self):
        punctured = repetition_code().puncture([0, 1])
        self.assertEqual((punctured.n, punctured.k), (2, 1))
        self.assertEqual(punctured.min_distance(), 2)

    def test_local_block(self):
        punctured = two_block_code().puncture([0, 1, 2])
        self.assertEqual((punctured.n, punctured.k), (3, 2))
        self.assertEqual(punctured.min_distance(DistanceMethod.CODEWORDS), 2)

    def test_dimension_is_the_coordinate_rank(self):
        rng = np.random.default_rng(29)
        code = random_code(rng, 5, 7, 3)
        for size in range(1, 8):
            coordinates = rng.choice(7, size=size, replace=False).tolist()
            punctured = code.puncture(coordinates)
            self.assertEqual((punctured.n, punctured.k), (size, code.coord_rank(coordinates)))

    def test_empty(self):
        with self.assertRaises(ValidationError):
            two_block_code().puncture([])


class MinimumDistanceTestCase(SimpleTestCase):
    def test_repetition(self):
        for method in DistanceMethod:
            self.assertEqual(repetition_code().min_distance(method), 3)

    def test_hamming(self):
        for method in DistanceMethod:
            self.assertEqual(hamming_code().min_distance(method), 3)

    def test_codewords_over_larger_fields(self):
        for p, e in ((7, 1), (2, 3), (3, 2)):
            code = reed_solomon_code(p, e, 7, 3)
            self.assertEqual((code.n, code.k), (7, 4))
            self.assertEqual(code.min_distance(DistanceMethod.CODEWORDS), 4)

    def test_method_alias(self):
        self.assertEqual(distance_method("subset-rank"), DistanceMethod.SUBSET_RANK)
        self.assertEqual(distance_method("lemma1"), DistanceMethod.SUBSET_RANK)
        self.assertEqual(hamming_code().min_distance("subset-rank"), 3)
        with self.assertRaises(ValueError):
            distance_method("weights")

    def test_cap(self):
        self.assertEqual(hamming_code().min_distance(DistanceMethod.COLUMNS, cap=3), 3)
        with self.assertRaises(DistanceAboveCap) as context:
            hamming_code().min_distance(DistanceMethod.COLUMNS, cap=2)
        self.assertEqual(context.exception.cap, 2)

    @override_settings(CODEWORD_ENUMERATION_LIMIT=8)
    def test_codeword_guard(self):
        with self.assertRaises(SearchLimitExceeded):
            hamming_code().min_distance(DistanceMethod.CODEWORDS)

    @override_settings(SUBSET_RANK_MAX_LENGTH=6)
    def test_subset_rank_guard(self):
        with self.assertRaises(SearchLimitExceeded):
            hamming_code().min_distance(DistanceMethod.SUBSET_RANK)

    @tag("slow")
    def test_oracles_agree_on_random_codes(self):
        rng = np.random.default_rng(2024)
        for trial in range(500):
            q = int(rng.choice([2, 3, 5]))
            n = int(rng.integers(2, 13))
            k = int(rng.integers(1, min(n, 6) + 1))
            code = random_code(rng, q, n, k)
            distances = {code.min_distance(method) for method in DistanceMethod}
            self.assertEqual(len(distances), 1, f"trial {trial}: {code} gives {distances}")
            self.assertLessEqual(distances.pop(), n - k + 1)

    def test_dependent_columns(self):
        code = hamming_code()
        self.assertIsNone(code.dependent_columns(2))
        subset = code.dependent_columns(3)
        self.assertLess(rank(code.parity_check.columns(subset)), 3)
        self.assertIn(subset, list(combinations(range(7), 3)))


class LinearCodeSerializerTestCase(SimpleTestCase):
    def test_round_trip(self):
        code = two_block_code()
        data = LinearCodeSerializer(code).data
        self.assertEqual(data["identifier"], code.identifier)
        serializer = LinearCodeSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertFalse(serializer.validated_data["identifier_mismatch"])
        self.assertEqual(serializer.save().identifier, code.identifier)

    def test_identifier_mismatch_is_reported(self):
        data = LinearCodeSerializer(two_block_code()).data
        data["identifier"] = "0" * 16
        serializer = LinearCodeSerializer(data=data)
        with self.assertLogs("linearcode", level="WARNING"):
            self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertTrue(serializer.validated_data["identifier_mismatch"])

    def test_wrong_shape(self):
        data = LinearCodeSerializer(two_block_code()).data
        data["k"] = 3
        serializer = LinearCodeSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn("G", serializer.errors)
