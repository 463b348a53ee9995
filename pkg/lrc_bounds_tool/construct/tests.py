from itertools import combinations

import numpy as np

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from construct.builders import (
    construct,
    construct_variant_a,
    construct_variant_b,
    is_twise_independent,
    mds_parity,
    random_independent_set,
    split_local_parity,
    twise_independent_set,
    variant_a_parity,
    variant_b_parity,
)
from construct.plans import (
    INDEPENDENCE_LEVEL_NOTE,
    RANDOM_SET_NOTE,
    ConstructionPlan,
    Variant,
)
from construct.rest.serializers import (
    ConstructionPlanSerializer,
    OptimalityReportSerializer,
    code_document,
)
from construct.verification import verify_generic, verify_optimal
from gf.fields import as_subfield_vector, element_order_key, make_field
from linearcode.codes import LinearCode
from linearcode.rest.serializers import LinearCodeSerializer
from linearcode.tests import two_block_code
from matgf.matrices import MatrixGF, from_elements, hstack, rank

LARGE_REMAINDER_PLAN = dict(variant="A", r=4, delta=2, m=2, u=6, v=3, w=7, q=37, e=3)
SMALL_REMAINDER_PLAN = dict(variant="B", r=3, delta=2, m=1, u=7, v=2, w=8, q=37, e=3)


def subfield_rank(elements, q: int) -> int:
    rows = list(zip(*(as_subfield_vector(x, q).tolist() for x in elements)))
    return rank(from_elements(make_field(q), rows))


def tampered(R: MatrixGF) -> LinearCode:
    """
    The code of ``R`` with its last row zeroed.
    """
    data = R.data.copy()
    data[-1] = 0
    return LinearCode.from_parity(MatrixGF(R.spec, data))


class MdsParityTestCase(SimpleTestCase):
    def test_pairs_independent(self):
        H = mds_parity(5, 3, 37)
        self.assertEqual(H.shape, (2, 5))
        for pair in combinations(range(5), 2):
            self.assertEqual(rank(H.columns(pair)), 2)

    def test_single_parity(self):
        self.assertEqual(mds_parity(4, 2, 37), from_elements(make_field(37), [[1, 1, 1, 1]]))

    def test_distance_one(self):
        self.assertEqual(mds_parity(4, 1, 37).shape, (0, 4))

    def test_errors(self):
        with self.assertRaises(ValidationError):
            mds_parity(8, 2, 7)
        with self.assertRaises(ValidationError):
            mds_parity(4, 5, 37)
        with self.assertRaises(ValidationError):
            mds_parity(4, 0, 37)

    def test_every_check_subset_full_rank(self):
        for q in (7, 37):
            for length in range(2, 8):
                for distance in range(2, length + 1):
                    H = mds_parity(length, distance, q)
                    for subset in combinations(range(length), distance - 1):
                        self.assertEqual(rank(H.columns(subset)), distance - 1)
                    self.assertLess(rank(H.columns(range(distance))), distance)

    def test_split(self):
        A = mds_parity(5, 2, 37)
        A1, A2 = split_local_parity(A)
        self.assertEqual((A1.shape, A2.shape), ((1, 4), (1, 1)))
        self.assertEqual(hstack([A1, A2]), A)
        A1, A2 = split_local_parity(mds_parity(2, 2, 37))
        self.assertEqual((A1.shape, A2.shape), ((1, 1), (1, 1)))
        with self.assertRaises(ValidationError):
            split_local_parity(mds_parity(1, 1, 37))


class IndependentSetTestCase(SimpleTestCase):
    def test_pairs_over_gf5(self):
        elements = twise_independent_set(4, 2, 5, 2)
        self.assertEqual(len(set(elements)), 4)
        self.assertEqual(elements, sorted(elements, key=element_order_key))
        for pair in combinations(elements, 2):
            self.assertEqual(subfield_rank(pair, 5), 2)

    def test_single_level(self):
        elements = twise_independent_set(3, 1, 5, 1)
        self.assertEqual([x.value for x in elements], [1, 2, 3])

    def test_desk_scale(self):
        elements = twise_independent_set(37, 3, 37, 3)
        self.assertEqual(len(set(elements)), 37)
        self.assertTrue(is_twise_independent(elements, 3, 37))

    def test_subsets_inherit_independence(self):
        elements = twise_independent_set(10, 3, 11, 3)
        rng = np.random.default_rng(5)
        for _ in range(20):
            size = int(rng.integers(2, 10))
            subset = [elements[i] for i in sorted(rng.choice(10, size=size, replace=False))]
            for t in (1, 2, 3):
                self.assertTrue(is_twise_independent(subset, t, 11))

    def test_dependent_pair(self):
        spec = make_field(5, 2)
        self.assertFalse(is_twise_independent([spec.element(1), spec.element(2)], 2, 5))
        self.assertTrue(is_twise_independent([spec.element(1), spec.element(2)], 1, 5))

    def test_errors(self):
        with self.assertRaises(ValidationError):
            twise_independent_set(6, 2, 5, 2)
        with self.assertRaises(ValidationError):
            twise_independent_set(4, 3, 5, 2)
        with self.assertRaises(ValidationError):
            twise_independent_set(4, 0, 5, 2)

    def test_spot_checks(self):
        elements = twise_independent_set(6, 2, 7, 2)
        with self.settings(INDEPENDENCE_EXHAUSTIVE_LIMIT=5, INDEPENDENCE_SPOT_CHECKS=20):
            with self.assertLogs("construct.builders", "WARNING"):
                self.assertTrue(is_twise_independent(elements, 2, 7))

    def test_random_set(self):
        with self.assertLogs("construct.builders", "WARNING"):
            elements = random_independent_set(8, 2, 5, 3, seed=3)
        self.assertEqual(len(set(elements)), 8)
        self.assertTrue(all(elements))
        self.assertTrue(is_twise_independent(elements, 2, 5))
        self.assertEqual(elements, random_independent_set(8, 2, 5, 3, seed=3))

    def test_random_set_errors(self):
        with self.assertRaises(ValidationError):
            random_independent_set(30, 2, 5, 2)
        with self.assertRaises(ValidationError):
            random_independent_set(8, 3, 5, 2)


class ConstructionPlanTestCase(SimpleTestCase):
    def test_large_remainder_plan(self):
        plan = ConstructionPlan(**LARGE_REMAINDER_PLAN)
        self.assertIs(plan.variant, Variant.A)
        self.assertEqual((plan.n, plan.k, plan.h, plan.t), (37, 27, 2, 3))
        self.assertEqual(plan.predicted_distance, 4)
        self.assertEqual(plan.local_widths, [4, 4, 4, 5, 5, 5, 5, 5])
        self.assertEqual(plan.repair_sets()[0], range(0, 4))
        self.assertEqual(plan.repair_sets()[-1], range(32, 37))
        self.assertEqual(plan.notes, [])

    def test_small_remainder_plan(self):
        plan = ConstructionPlan(**SMALL_REMAINDER_PLAN)
        self.assertEqual((plan.n, plan.k, plan.h, plan.t), (33, 23, 1, 3))
        self.assertEqual(plan.predicted_distance, 3)
        self.assertEqual(plan.local_widths, [5] + [4] * 7)
        self.assertEqual(plan.repair_sets()[:2], [range(0, 4), range(1, 5)])
        self.assertEqual(len(plan.repair_sets()), 9)
        self.assertEqual(plan.notes, [INDEPENDENCE_LEVEL_NOTE])

    def test_rejects_small_m(self):
        with self.assertRaises(ValidationError) as context:
            ConstructionPlan(**{**LARGE_REMAINDER_PLAN, "m": 1})
        self.assertTrue(any("m >= delta violated" in m for m in context.exception.messages))

    def test_collects_every_violation(self):
        with self.assertRaises(ValidationError) as context:
            ConstructionPlan(**{**SMALL_REMAINDER_PLAN, "v": 1, "u": 6})
        messages = context.exception.messages
        self.assertTrue(any("r > v > floor(r/2)" in m for m in messages))
        self.assertTrue(any("u >= 2r+delta-1" in m for m in messages))

    def test_basic_violations(self):
        with self.assertRaises(ValidationError) as context:
            ConstructionPlan(**{**LARGE_REMAINDER_PLAN, "q": 36})
        self.assertEqual(context.exception.messages, ["q prime violated (q=36)"])
        with self.assertRaises(ValueError):
            ConstructionPlan(**{**LARGE_REMAINDER_PLAN, "variant": "C"})

    def test_field_size(self):
        with self.assertRaises(ValidationError) as context:
            ConstructionPlan(**{**LARGE_REMAINDER_PLAN, "e": 2})
        self.assertTrue(any("e >= t violated" in m for m in context.exception.messages))
        plan = ConstructionPlan(**{**LARGE_REMAINDER_PLAN, "q": 5})
        self.assertTrue(plan.uses_random_set)
        self.assertIn(RANDOM_SET_NOTE, plan.notes)

    def test_identifier(self):
        self.assertEqual(
            ConstructionPlan(**LARGE_REMAINDER_PLAN).identifier,
            ConstructionPlan(**LARGE_REMAINDER_PLAN).identifier,
        )
        self.assertNotEqual(
            ConstructionPlan(**LARGE_REMAINDER_PLAN).identifier,
            ConstructionPlan(**SMALL_REMAINDER_PLAN).identifier,
        )

    def test_wrong_builder(self):
        with self.assertRaises(ValidationError):
            construct_variant_b(ConstructionPlan(**LARGE_REMAINDER_PLAN))
        with self.assertRaises(ValidationError):
            construct_variant_a(ConstructionPlan(**SMALL_REMAINDER_PLAN))


class LargeRemainderConstructionTestCase(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.plan = ConstructionPlan(**LARGE_REMAINDER_PLAN)
        cls.R = variant_a_parity(cls.plan)
        cls.code = construct(cls.plan)

    def test_parity_check(self):
        self.assertEqual(self.R.shape, (10, 37))
        self.assertEqual(rank(self.R), 10)
        self.assertEqual((self.code.n, self.code.k), (37, 27))
        self.assertEqual(self.code.spec, make_field(37, 3))

    def test_block_layout(self):
        rows = self.R.to_integers()
        self.assertEqual(rows[0], [1] * 4 + [0] * 33)
        self.assertEqual(rows[3], [0] * 12 + [1] * 5 + [0] * 20)
        self.assertEqual(rows[7], [0] * 32 + [1] * 5)
        self.assertTrue(all(rows[8]))

    def test_optimal(self):
        report = verify_optimal(self.code, self.plan)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.distance, 4)
        names = [check.name for check in report.checks]
        self.assertEqual(names[:4], ["length", "dimension", "repair-sets", "coverage"])
        self.assertEqual(names[4:], ["distance", "optimality", "singleton"])

    def test_tampered(self):
        code = tampered(self.R)
        report = verify_optimal(code, self.plan)
        self.assertFalse(report.passed)
        self.assertEqual(report.distance, 3)
        failed = {check.name for check in report.failures}
        self.assertIn("dimension", failed)
        self.assertIn("distance", failed)

    def test_length_mismatch(self):
        report = verify_optimal(two_block_code(), self.plan)
        self.assertFalse(report.passed)
        self.assertEqual([check.name for check in report.checks], ["length"])
        self.assertEqual((report.checks[0].expected, report.checks[0].observed), (37, 6))
        self.assertIsNone(report.distance)

    def test_document(self):
        data = code_document(self.code, self.plan)
        self.assertEqual(data["plan"]["predicted_distance"], 4)
        serializer = LinearCodeSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save().identifier, self.code.identifier)
        plan = ConstructionPlanSerializer(data=serializer.validated_data["plan"])
        self.assertTrue(plan.is_valid(), plan.errors)
        self.assertEqual(plan.save(), self.plan)


class SmallRemainderConstructionTestCase(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.plan = ConstructionPlan(**SMALL_REMAINDER_PLAN)
        cls.R = variant_b_parity(cls.plan)
        cls.code = construct(cls.plan)

    def test_parity_check(self):
        self.assertEqual(self.R.shape, (10, 33))
        self.assertEqual(rank(self.R), 10)
        self.assertEqual((self.code.n, self.code.k), (33, 23))

    def test_wide_block(self):
        rows = self.R.to_integers()
        self.assertEqual(rows[0], [1] * 5 + [0] * 28)
        self.assertEqual(rows[1], [0, 1, 2, 3, 4] + [0] * 28)
        self.assertEqual(rows[2], [0] * 5 + [1] * 4 + [0] * 24)

    def test_optimal(self):
        report = verify_optimal(self.code, self.plan)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.distance, 3)

    def test_report_serializer(self):
        data = OptimalityReportSerializer(verify_optimal(self.code, self.plan)).data
        self.assertTrue(data["passed"])
        self.assertEqual(data["distance"], 3)
        self.assertEqual(data["plan"]["variant"], "B")
        self.assertEqual(data["checks"][0]["name"], "length")
        self.assertEqual(data["code"], self.code.identifier)


class RandomSetConstructionTestCase(SimpleTestCase):
    def test_optimal(self):
        plan = ConstructionPlan(variant="A", r=3, delta=2, m=2, u=4, v=2, w=5, q=5, e=6)
        self.assertEqual((plan.n, plan.k, plan.predicted_distance), (22, 14, 4))
        self.assertTrue(plan.uses_random_set)
        with self.assertLogs("construct.builders", "WARNING"):
            code = construct(plan, seed=1)
        report = verify_optimal(code, plan)
        self.assertTrue(report.passed, report.failures)


class GenericVerificationTestCase(SimpleTestCase):
    def test_two_blocks(self):
        report = verify_generic(two_block_code(), 2, 2, expect_d=2)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.distance, 2)
        self.assertEqual(
            [check.name for check in report.checks],
            ["locality", "witness", "improved", "singleton", "expected-distance"],
        )

    def test_wrong_expectation(self):
        report = verify_generic(two_block_code(), 2, 2, expect_d=3)
        self.assertEqual([check.name for check in report.failures], ["expected-distance"])

    def test_no_locality(self):
        report = verify_generic(two_block_code(), 1, 2)
        self.assertFalse(report.passed)
        self.assertIsNone(report.distance)
        self.assertIn("No repair set covers coordinate 1", report.checks[0].detail)

    def test_invalid_parameters(self):
        with self.assertRaises(ValidationError):
            verify_generic(two_block_code(), 5, 2)


class ConstructionPlanSerializerTestCase(SimpleTestCase):
    def test_valid(self):
        serializer = ConstructionPlanSerializer(data=LARGE_REMAINDER_PLAN)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        plan = serializer.save()
        data = ConstructionPlanSerializer(plan).data
        self.assertEqual((data["n"], data["k"], data["h"], data["t"]), (37, 27, 2, 3))
        self.assertEqual(data["variant"], "A")
        self.assertEqual(data["identifier"], plan.identifier)

    def test_invalid(self):
        serializer = ConstructionPlanSerializer(data={**LARGE_REMAINDER_PLAN, "m": 1})
        self.assertFalse(serializer.is_valid())
        errors = [str(error) for error in serializer.errors["non_field_errors"]]
        self.assertTrue(any("m >= delta violated" in error for error in errors))

    def test_unknown_variant(self):
        serializer = ConstructionPlanSerializer(data={**LARGE_REMAINDER_PLAN, "variant": "C"})
        self.assertFalse(serializer.is_valid())
        self.assertIn("variant", serializer.errors)
