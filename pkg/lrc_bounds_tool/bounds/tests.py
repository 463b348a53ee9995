from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, tag

from bounds.formulas import (
    SlackUndefined,
    disjoint_repair_bound,
    dmax_formula,
    generalized_singleton_bound,
    improved_bound,
    large_remainder_applicable,
    large_remainder_bound,
    overlap_slack,
    singleton_bound,
    singleton_unachievable,
    singleton_unachievable_specialized,
    small_remainder_applicable,
    small_remainder_bound,
)
from bounds.regimes import OPEN_LABELS, RegimeLabel, classify
from bounds.reports import EXCLUSIVE_COUNT_QUESTION, OPEN_LEAF_QUESTION, build_report
from bounds.rest.serializers import BoundReportSerializer
from locality.params import ceil_div, decompose


def feasible_params(largest_n: int = 40, deltas: range = range(2, 5)):
    for n in range(2, largest_n + 1):
        for k in range(1, n):
            for r in range(1, k + 1):
                for delta in deltas:
                    params = decompose(n, k, r, delta)
                    if params.is_feasible:
                        yield params


def swept_params(largest_n: int = 200, largest_block: int = 20):
    """
    Every feasible (n, k, r, delta) with u >= 1, n <= largest_n and
    r+delta-1 <= largest_block.
    """
    for n in range(3, largest_n + 1):
        for block_size in range(2, min(largest_block, n) + 1):
            w = n // block_size
            for r in range(1, block_size):
                for k in range(r + 1, min(n - 1, r * (w + 1)) + 1):
                    yield decompose(n, k, r, block_size - r + 1)


class OverlapSlackTestCase(SimpleTestCase):
    def test_divisible(self):
        self.assertEqual(overlap_slack(4, 2, 40, 5), 0)

    def test_values(self):
        self.assertEqual(overlap_slack(4, 2, 37, 6), 3)
        self.assertEqual(overlap_slack(4, 2, 37, 2), 1)
        self.assertEqual(overlap_slack(4, 2, 37, 0), 0)
        self.assertEqual(overlap_slack(4, 2, 37, 1), 0)

    def test_undefined(self):
        with self.assertRaises(SlackUndefined) as context:
            overlap_slack(4, 2, 4, 1)
        self.assertEqual(context.exception.block_size, 5)

    def test_invalid(self):
        with self.assertRaises(ValidationError):
            overlap_slack(4, 2, 37, -1)
        with self.assertRaises(ValidationError):
            overlap_slack(4, 1, 37, 2)

    def test_capped_and_monotone(self):
        for r in range(1, 6):
            for delta in range(2, 5):
                s = r + delta - 1
                for a in range(s, 4 * s):
                    values = [overlap_slack(r, delta, a, b) for b in range(0, a // s + 3)]
                    self.assertTrue(all(value <= (s - a % s) % s for value in values))
                    self.assertEqual(values, sorted(values))


class ClosedFormTestCase(SimpleTestCase):
    def test_singleton(self):
        self.assertEqual(singleton_bound(decompose(37, 27, 4, 2)), 11)
        params = decompose(10, 4, 4, 3)
        self.assertEqual(generalized_singleton_bound(params), singleton_bound(params))

    def test_generalized(self):
        self.assertEqual(generalized_singleton_bound(decompose(37, 27, 4, 2)), 5)
        self.assertEqual(generalized_singleton_bound(decompose(45, 33, 5, 2)), 7)

    def test_improved(self):
        self.assertEqual(improved_bound(decompose(37, 27, 4, 2), 0), 4)
        self.assertEqual(improved_bound(decompose(25, 5, 2, 2), 1), 19)
        self.assertEqual(improved_bound(decompose(24, 5, 2, 2), 3), 16)

    def test_improved_errors(self):
        with self.assertRaises(ValidationError):
            improved_bound(decompose(37, 27, 4, 2), -1)
        with self.assertRaises(SlackUndefined):
            improved_bound(decompose(4, 3, 1, 4), 1)

    def test_disjoint(self):
        self.assertEqual(disjoint_repair_bound(decompose(37, 27, 4, 2)), 4)
        self.assertEqual(disjoint_repair_bound(decompose(45, 33, 5, 2)), 6)
        params = decompose(12, 4, 2, 2)
        self.assertEqual(disjoint_repair_bound(params), generalized_singleton_bound(params))

    def test_large_remainder(self):
        for args, value in [((37, 27, 4, 2), 4), ((45, 33, 5, 2), 6)]:
            params = decompose(*args)
            self.assertTrue(large_remainder_applicable(params))
            self.assertEqual(large_remainder_bound(params), value)
        params = decompose(33, 23, 3, 2)
        self.assertFalse(large_remainder_applicable(params))
        with self.assertRaises(ValidationError):
            large_remainder_bound(params)

    def test_small_remainder(self):
        params = decompose(33, 23, 3, 2)
        self.assertTrue(small_remainder_applicable(params))
        self.assertEqual(small_remainder_bound(params), 3)
        # v = floor(r/2)
        self.assertFalse(small_remainder_applicable(decompose(36, 30, 4, 2)))
        with self.assertRaises(ValidationError):
            small_remainder_bound(decompose(37, 27, 4, 2))

    def test_dmax(self):
        self.assertEqual(dmax_formula(decompose(37, 27, 4, 2)), 4)
        self.assertEqual(dmax_formula(decompose(33, 23, 3, 2)), 3)
        self.assertIsNone(dmax_formula(decompose(12, 4, 2, 2)))

    def test_singleton_unachievable(self):
        params = decompose(20, 19, 5, 2)
        self.assertEqual((params.w, params.m, params.u, params.v), (3, 2, 3, 4))
        self.assertTrue(singleton_unachievable(params))
        self.assertTrue(singleton_unachievable_specialized(params))
        # r divides k
        self.assertTrue(singleton_unachievable(decompose(14, 6, 2, 2)))
        self.assertFalse(singleton_unachievable(decompose(13, 4, 2, 2)))


class SweepTestCase(SimpleTestCase):
    def test_generalized_never_above_singleton(self):
        for params in feasible_params():
            self.assertLessEqual(generalized_singleton_bound(params), singleton_bound(params))

    def test_improved_against_generalized(self):
        for params in feasible_params():
            if params.u < 1 or params.n < params.block_size:
                continue
            improved = improved_bound(params, 0)
            generalized = generalized_singleton_bound(params)
            slack = overlap_slack(params.r, params.delta, params.n, params.u)
            tighter = min(ceil_div(params.r, 2), slack) > params.r - params.v
            self.assertLessEqual(improved, generalized, params)
            self.assertEqual(improved < generalized, tighter, params)

    def test_dmax_matches_remainder_bounds(self):
        for params in feasible_params():
            dmax = dmax_formula(params)
            if dmax is None:
                continue
            if params.m >= params.delta:
                self.assertTrue(large_remainder_applicable(params), params)
                self.assertEqual(dmax, large_remainder_bound(params), params)
            else:
                self.assertTrue(small_remainder_applicable(params), params)
                self.assertEqual(dmax, small_remainder_bound(params), params)

    def test_specialized_form_agrees(self):
        for params in feasible_params():
            if 2 * params.v > params.r and 0 < params.m < params.v + params.delta - 1:
                self.assertEqual(
                    singleton_unachievable(params),
                    singleton_unachievable_specialized(params),
                    params,
                )

    def test_classify_is_total(self):
        for params in feasible_params():
            if params.u < 1:
                continue
            regime = classify(params)
            self.assertIn(regime.label, RegimeLabel.values)
            self.assertTrue(regime.chain, params)

    @tag("slow")
    def test_full_sweep(self):
        swept = 0
        for params in swept_params():
            self.assertTrue(params.is_feasible, params)
            regime = classify(params)
            self.assertIn(regime.label, RegimeLabel.values)
            self.assertEqual(regime.is_open, regime.label in OPEN_LABELS)
            self.assertLessEqual(
                improved_bound(params, 0), generalized_singleton_bound(params), params
            )
            swept += 1
        self.assertEqual(swept, 1775024)


class ClassifyTestCase(SimpleTestCase):
    def assertRegime(self, args, label):
        self.assertEqual(classify(decompose(*args)).label, label, args)

    def test_leaves(self):
        self.assertRegime((12, 4, 2, 2), RegimeLabel.DIVISIBLE_OPTIMAL)
        self.assertRegime((13, 4, 2, 2), RegimeLabel.R_DIVIDES_K_UNACHIEVABLE)
        self.assertRegime((17, 9, 4, 2), RegimeLabel.M_LARGE_OPTIMAL)
        self.assertRegime((37, 27, 4, 2), RegimeLabel.LARGE_REMAINDER_TIGHT)
        self.assertRegime((33, 23, 3, 2), RegimeLabel.SMALL_REMAINDER_TIGHT)
        self.assertRegime((36, 29, 4, 2), RegimeLabel.GENERIC_UNACHIEVABLE)
        self.assertRegime((21, 5, 4, 2), RegimeLabel.SONGETAL_OPTIMAL_A)
        self.assertRegime((41, 14, 4, 2), RegimeLabel.SONGETAL_OPTIMAL_B)
        self.assertRegime((26, 14, 4, 2), RegimeLabel.WESTERBACK_UNACHIEVABLE_A)
        self.assertRegime((16, 14, 4, 2), RegimeLabel.WESTERBACK_UNACHIEVABLE_B)
        self.assertRegime((40, 37, 10, 4), RegimeLabel.OVERLAP_UNACHIEVABLE)
        self.assertRegime((11, 5, 4, 2), RegimeLabel.OPEN_SMALL_V)
        self.assertRegime((46, 37, 10, 4), RegimeLabel.OPEN_LARGE_V)
        self.assertRegime((36, 14, 4, 2), RegimeLabel.OPEN_BOUNDARY)

    def test_chain(self):
        regime = classify(decompose(37, 27, 4, 2))
        self.assertEqual(
            regime.chain,
            (
                ("m = 0", False),
                ("r | k", False),
                ("m >= v+delta-1", False),
                ("u >= 2(r-v)+1", True),
                ("2v > r", True),
                ("m >= delta", True),
                ("u >= r+delta-1", True),
                ("u >= 2(r+delta-1-m)", True),
            ),
        )
        self.assertFalse(regime.is_open)
        self.assertTrue(regime.citations)

    def test_overlap_leaf_agrees_with_unachievability(self):
        self.assertTrue(singleton_unachievable(decompose(40, 37, 10, 4)))
        self.assertFalse(singleton_unachievable(decompose(46, 37, 10, 4)))

    def test_label_values(self):
        self.assertEqual(classify(decompose(37, 27, 4, 2)).label, "corollary7-tight")
        self.assertEqual(classify(decompose(40, 37, 10, 4)).label, "corollary10-unachievable")
        self.assertEqual(classify(decompose(11, 5, 4, 2)).label, "open-RI")
        regime = classify(decompose(46, 37, 10, 4))
        self.assertEqual((regime.label, regime.alias), ("open-RII", "open-large-v"))
        self.assertIsNone(classify(decompose(12, 4, 2, 2)).alias)

    def test_trivial_dimension(self):
        with self.assertRaises(ValidationError):
            classify(decompose(9, 3, 3, 2))

    def test_open_leaves(self):
        self.assertEqual(
            OPEN_LABELS,
            {RegimeLabel.OPEN_SMALL_V, RegimeLabel.OPEN_LARGE_V, RegimeLabel.OPEN_BOUNDARY},
        )
        self.assertEqual(classify(decompose(11, 5, 4, 2)).citations, [])


class ReportTestCase(SimpleTestCase):
    def test_full_report(self):
        report = build_report(decompose(37, 27, 4, 2), exclusive_count=0)
        self.assertEqual((report.singleton, report.generalized), (11, 5))
        self.assertEqual((report.disjoint, report.improved), (4, 4))
        self.assertEqual(report.large_remainder, 4)
        self.assertIsNone(report.small_remainder)
        self.assertEqual(report.dmax, 4)
        self.assertEqual(report.best, 4)
        self.assertEqual(report.regime.label, RegimeLabel.LARGE_REMAINDER_TIGHT)
        self.assertEqual(report.open_questions, [EXCLUSIVE_COUNT_QUESTION])

    def test_without_exclusive_count(self):
        report = build_report(decompose(11, 5, 4, 2))
        self.assertIsNone(report.improved)
        self.assertEqual(report.open_questions, [OPEN_LEAF_QUESTION])

    def test_trivial_dimension(self):
        report = build_report(decompose(4, 3, 3, 3))
        self.assertIsNone(report.regime)
        self.assertIsNone(report.disjoint)
        self.assertEqual(report.citations, [])
        self.assertEqual(report.best, 2)

    def test_undefined_slack(self):
        with self.assertRaises(SlackUndefined):
            build_report(decompose(4, 3, 1, 4), exclusive_count=1)

    def test_serializer(self):
        data = BoundReportSerializer(build_report(decompose(33, 23, 3, 2))).data
        self.assertEqual(data["params"]["u"], 7)
        self.assertEqual(data["small_remainder"], 3)
        self.assertIsNone(data["improved"])
        self.assertEqual(data["regime"]["label"], "corollary8-tight")
        self.assertEqual(data["regime"]["alias"], "small-remainder-tight")
        self.assertEqual(data["regime"]["chain"][0], {"condition": "m = 0", "holds": False})
        self.assertEqual(data["citations"], data["regime"]["citations"])
