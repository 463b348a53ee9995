from itertools import combinations

import numpy as np

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, override_settings, tag

from bounds.formulas import generalized_singleton_bound, improved_bound, overlap_slack
from gf.fields import make_field
from linearcode.codes import DistanceMethod, LinearCode
from linearcode.tests import random_code, repetition_code, two_block_code
from locality.families import (
    RepairFamily,
    extract_essential_cover,
    find_overlap_subset,
    has_heavy_overlap,
    has_small_pairwise_overlaps,
    is_nearly_disjoint,
    nearly_disjoint_subfamily,
    overlap,
    padded_slack,
)
from locality.overlaps import (
    break_heavy_overlaps,
    enumerate_break_outcomes,
    exclusive_count_landscape,
    extend_redundant,
)
from locality.params import LrcParams, ceil_div, decompose
from locality.repair import all_repair_sets, is_repair_set, is_repair_set_by_rank, locality_cover
from locality.rest.serializers import (
    BoundWitnessSerializer,
    LrcParamsSerializer,
    OverlapBreakSerializer,
    RepairFamilySerializer,
)
from locality.witness import WitnessCase, bound_witness, find_low_rank_set
from matgf.matrices import from_elements, vandermonde
from utils.exceptions import SearchLimitExceeded


def family(n: int, *blocks) -> RepairFamily:
    """
    A family from 1-based blocks.
    """
    return RepairFamily(n, tuple(frozenset(i - 1 for i in block) for block in blocks))


def nested_code() -> LinearCode:
    """
    The [4, 3] code over GF(5) with the single parity x1 + x2 + x3 + x4 = 0.
    """
    return LinearCode.from_parity(from_elements(make_field(5), [[1, 1, 1, 1]]))


def random_cover(rng: np.random.Generator, n: int, block_size: int) -> RepairFamily:
    """
    Random blocks of at most ``block_size`` coordinates until [n] is covered.
    """
    blocks = []
    covered = set()
    while len(covered) < n:
        size = int(rng.integers(1, block_size + 1))
        block = frozenset(rng.choice(n, size=size, replace=False).tolist())
        blocks.append(block)
        covered |= block
    return RepairFamily(n, tuple(blocks))


def local_code(rng: np.random.Generator, q: int, sizes: list[int], extra: int) -> LinearCode:
    """
    A code whose coordinates are split in consecutive blocks of ``sizes``,
    each with one local parity with nonzero weights, plus ``extra`` random
    global parities.
    """
    n = sum(sizes)
    rows = []
    start = 0
    for size in sizes:
        row = [0] * n
        for i in range(start, start + size):
            row[i] = int(rng.integers(1, q))
        rows.append(row)
        start += size
    rows += rng.integers(0, q, size=(extra, n)).tolist()
    return LinearCode.from_parity(from_elements(make_field(q), rows))


FIELDS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1)}

# Longest code per block size r+delta-1 the repair set enumeration stays quick on
LONGEST = {2: 14, 3: 14, 4: 12, 5: 10}


def overlapping_local_code(
    rng: np.random.Generator, q: int, n: int, r: int, delta: int, extra: int
) -> LinearCode:
    """
    A code over GF(q) whose coordinates are covered by random, possibly
    overlapping, blocks of delta to r+delta-1 coordinates, each with delta-1
    local parities any delta-1 columns of which are independent, plus
    ``extra`` random global parities. With delta > 2 the blocks have at most
    q coordinates.
    """
    spec = make_field(*FIELDS[q])
    largest = min(r + delta - 1, n) if delta == 2 else min(r + delta - 1, n, q)
    rows, covered = [], set()
    while len(covered) < n:
        size = int(rng.integers(delta, largest + 1))
        block = rng.choice(n, size=size, replace=False).tolist()
        if delta == 2:
            local = [rng.integers(1, q, size=size).tolist()]
        else:
            points = [spec.element(int(x)) for x in rng.choice(q, size=size, replace=False)]
            local = vandermonde(points, delta - 1).to_integers()
        for values in local:
            row = [0] * n
            for i, value in zip(block, values):
                row[i] = int(value)
            rows.append(row)
        covered |= set(block)
    rows += rng.integers(0, q, size=(extra, n)).tolist()
    return LinearCode.from_parity(from_elements(spec, rows))


def exclusive_code() -> LinearCode:
    """
    The [7, 4] code over GF(5) with x1+x2+x3 = 0, x1 = x4 and x5+x6+x7 = 0.
    Its (2, 2)-repair sets are {1,2,3}, {1,4}, {2,3,4} and {5,6,7}.
    """
    rows = [[1, 1, 1, 0, 0, 0, 0], [1, 0, 0, 4, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1]]
    return LinearCode.from_parity(from_elements(make_field(5), rows))


def triangle_code() -> LinearCode:
    """
    The [12, 7] code over GF(5) with one parity on each of {1,2,3}, {3,4,5},
    {1,5,6}, {7,8,9} and {10,11,12}.
    """
    blocks = [(0, 1, 2), (2, 3, 4), (0, 4, 5), (6, 7, 8), (9, 10, 11)]
    rows = [[int(i in block) for i in range(12)] for block in blocks]
    return LinearCode.from_parity(from_elements(make_field(5), rows))


class ParamsTestCase(SimpleTestCase):
    def test_decompose(self):
        params = decompose(37, 27, 4, 2)
        self.assertEqual((params.w, params.m, params.u, params.v), (7, 2, 6, 3))
        self.assertEqual(params.block_size, 5)

    def test_r_divides_k(self):
        params = decompose(12, 4, 2, 2)
        self.assertEqual((params.w, params.m, params.u, params.v), (4, 0, 1, 2))

    def test_k_equals_r(self):
        params = decompose(9, 3, 3, 2)
        self.assertEqual((params.u, params.v), (0, 3))

    def test_decomposition_identity(self):
        for n in range(3, 20):
            for k in range(1, n):
                for r in range(1, k + 1):
                    for delta in range(2, 5):
                        p = decompose(n, k, r, delta)
                        self.assertEqual(n, p.w * p.block_size + p.m)
                        self.assertEqual(k, p.u * r + p.v)
                        self.assertTrue(0 <= p.m < p.block_size)
                        self.assertTrue(0 < p.v <= r)

    def test_invalid(self):
        for args in [(10, 10, 2, 2), (10, 4, 5, 2), (10, 4, 2, 1), (10, 4, 0, 2)]:
            with self.subTest(args=args), self.assertRaises(ValidationError):
                decompose(*args)

    def test_every_error_is_reported(self):
        with self.assertRaises(ValidationError) as context:
            LrcParams(4, 5, 6, 1)
        self.assertEqual(len(context.exception.messages), 3)

    def test_feasibility(self):
        self.assertTrue(decompose(12, 4, 2, 2).is_feasible)
        infeasible = decompose(5, 4, 1, 2)
        self.assertFalse(infeasible.feasibility["w_at_least_u"])
        self.assertFalse(infeasible.is_feasible)

    def test_identifier(self):
        self.assertEqual(decompose(37, 27, 4, 2).identifier, LrcParams(37, 27, 4, 2).identifier)
        self.assertNotEqual(decompose(37, 27, 4, 2).identifier, decompose(37, 27, 4, 3).identifier)


class RepairSetTestCase(SimpleTestCase):
    def test_local_block(self):
        code = two_block_code()
        self.assertTrue(is_repair_set(code, [0, 1, 2], 2, 2))
        self.assertFalse(is_repair_set(code, [0, 1], 2, 2))
        self.assertFalse(is_repair_set(code, [4], 2, 2))

    def test_too_large(self):
        self.assertFalse(is_repair_set(two_block_code(), range(6), 2, 2))

    def test_range(self):
        with self.assertRaises(ValidationError):
            is_repair_set(two_block_code(), [6], 2, 2)
        with self.assertRaises(ValidationError):
            is_repair_set(two_block_code(), [], 2, 2)

    def test_all_repair_sets(self):
        found = all_repair_sets(two_block_code(), 2, 2)
        self.assertEqual(found.blocks, (frozenset({0, 1, 2}), frozenset({3, 4, 5})))

    def test_repetition(self):
        found = all_repair_sets(repetition_code(), 1, 2)
        self.assertEqual(found, family(3, {1, 2}, {1, 3}, {2, 3}))

    def test_no_locality(self):
        G = from_elements(make_field(5), [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
        code = LinearCode.from_generator(G)
        self.assertEqual(len(all_repair_sets(code, 1, 2)), 0)
        with self.assertRaisesMessage(ValidationError, "coordinate 1"):
            locality_cover(code, 1, 2)

    @override_settings(REPAIR_SET_ENUMERATION_LIMIT=5)
    def test_guard(self):
        with self.assertRaises(SearchLimitExceeded):
            all_repair_sets(two_block_code(), 2, 2)

    def test_rank_criterion_agrees(self):
        rng = np.random.default_rng(31)
        codes = [two_block_code(), repetition_code(4), random_code(rng, 3, 6, 3)]
        codes.append(local_code(rng, 5, [3, 3], 1))
        for code in codes:
            for r, delta in [(1, 2), (2, 2), (2, 3)]:
                for size in range(1, r + delta):
                    for subset in combinations(range(code.n), size):
                        with self.subTest(code=code, subset=subset, r=r, delta=delta):
                            self.assertEqual(
                                is_repair_set(code, subset, r, delta),
                                is_repair_set_by_rank(code, subset, r, delta),
                            )


class FamilyTestCase(SimpleTestCase):
    def test_invalid_blocks(self):
        with self.assertRaises(ValidationError):
            RepairFamily(3, (frozenset(),))
        with self.assertRaises(ValidationError):
            RepairFamily(3, (frozenset({0, 3}),))

    def test_overlap(self):
        self.assertEqual(overlap([frozenset({0, 1}), frozenset({2})]), 0)
        self.assertEqual(overlap([frozenset({0, 1}), frozenset({1, 2})]), 1)
        self.assertEqual(overlap([frozenset({0, 1, 2}), frozenset({0, 1, 2})]), 3)

    def test_conditions(self):
        disjoint = family(6, {1, 2, 3}, {4, 5, 6})
        self.assertEqual(
            disjoint.conditions(2),
            {"nearly_disjoint": True, "small_pairwise_overlaps": True, "heavy_overlap": False},
        )
        heavy = family(4, {1, 2, 3}, {2, 3, 4})
        self.assertTrue(heavy.conditions(2)["heavy_overlap"])
        small = family(5, {1, 2, 3}, {3, 4, 5})
        self.assertTrue(small.conditions(2)["small_pairwise_overlaps"])
        self.assertTrue(small.conditions(2)["nearly_disjoint"])

    def test_small_overlaps_without_near_disjointness(self):
        blocks = family(6, {1, 2, 3}, {3, 4, 5}, {1, 5, 6}).blocks
        self.assertTrue(has_small_pairwise_overlaps(blocks, 2))
        self.assertFalse(is_nearly_disjoint(blocks, 2))

    def test_small_and_heavy_are_complementary(self):
        rng = np.random.default_rng(37)
        for _ in range(200):
            blocks = random_cover(rng, 8, 4).blocks
            delta = int(rng.integers(2, 4))
            self.assertNotEqual(
                has_small_pairwise_overlaps(blocks, delta), has_heavy_overlap(blocks, delta)
            )

    def test_exclusive(self):
        repair = family(5, {1, 2, 3}, {3, 4}, {4, 5})
        self.assertEqual(repair.exclusive(0), {0, 1})
        self.assertEqual(repair.exclusive(1), frozenset())
        self.assertEqual(repair.exclusive(1, 2), {3, 4})

    def test_canonical(self):
        repair = family(3, {2, 3}, {1, 2}, {2, 3})
        self.assertEqual(repair.canonical(), family(3, {1, 2}, {2, 3}))

    def test_repr_is_one_based(self):
        self.assertEqual(repr(family(3, {1, 2}, {3})), "RepairFamily(n=3, [{1,2}, {3}])")


class EssentialCoverTestCase(SimpleTestCase):
    def test_already_essential(self):
        repair = family(6, {1, 2, 3}, {4, 5, 6})
        self.assertEqual(extract_essential_cover(repair), repair)

    def test_last_block_goes_first(self):
        repair = family(3, {1, 2}, {2, 3}, {1, 3})
        self.assertEqual(extract_essential_cover(repair), family(3, {1, 2}, {2, 3}))

    def test_duplicates(self):
        repair = family(4, {1, 2, 3}, {2, 3, 4}, {1, 2, 3}, {3, 4})
        essential = extract_essential_cover(repair)
        self.assertEqual(essential, family(4, {1, 2, 3}, {2, 3, 4}))
        self.assertTrue(essential.is_essential_cover(3))

    def test_uncovered(self):
        with self.assertRaisesMessage(ValidationError, "coordinate 3"):
            extract_essential_cover(family(4, {1, 2}, {4}))

    def test_random_covers(self):
        rng = np.random.default_rng(41)
        for _ in range(1000):
            block_size = int(rng.integers(2, 6))
            n = int(rng.integers(block_size, 21))
            essential = extract_essential_cover(random_cover(rng, n, block_size))
            self.assertTrue(essential.is_essential_cover(block_size))
            self.assertGreaterEqual(len(essential), ceil_div(n, block_size))

    def test_repair_sets_of_a_code(self):
        code = repetition_code()
        params = decompose(3, 1, 1, 2)
        essential = extract_essential_cover(all_repair_sets(code, 1, 2), params)
        self.assertEqual(essential, family(3, {1, 2}, {1, 3}))


class OverlapSubsetTestCase(SimpleTestCase):
    def test_empty(self):
        self.assertEqual(find_overlap_subset(family(6, {1, 2, 3}, {4, 5, 6}), 0, 2, 2), ())

    def test_best_pair(self):
        repair = family(7, {1, 2, 3}, {4, 5, 6}, {6, 7})
        self.assertEqual(overlap_slack(2, 2, 7, 2), 1)
        self.assertEqual(find_overlap_subset(repair, 2, 2, 2), (1, 2))

    def test_out_of_range(self):
        with self.assertRaises(ValidationError):
            find_overlap_subset(family(6, {1, 2, 3}, {4, 5, 6}), 3, 2, 2)

    @override_settings(OVERLAP_EXHAUSTIVE_LIMIT=2)
    def test_averaging_search(self):
        repair = family(7, {1, 2, 3}, {4, 5, 6}, {6, 7})
        with self.assertLogs("locality.families", "WARNING"):
            chosen = find_overlap_subset(repair, 2, 2, 2)
        self.assertEqual(len(chosen), 2)
        self.assertGreaterEqual(padded_slack(repair.at(chosen), 3), 1)

    def test_slack_guarantee_on_essential_covers(self):
        rng = np.random.default_rng(43)
        for _ in range(200):
            r, delta = int(rng.integers(1, 4)), int(rng.integers(2, 4))
            n = int(rng.integers(r + delta - 1, 13))
            essential = extract_essential_cover(random_cover(rng, n, r + delta - 1))
            for t in range(len(essential) + 1):
                chosen = find_overlap_subset(essential, t, r, delta)
                self.assertEqual(len(chosen), t)
                self.assertGreaterEqual(
                    padded_slack(essential.at(chosen), r + delta - 1),
                    overlap_slack(r, delta, n, t),
                )

    @tag("slow")
    def test_slack_guarantee_on_every_cyclic_uniform_cover(self):
        """
        Every cover of [n] by w+1 cyclic intervals of r+delta-1 coordinates,
        for n <= 15 and intervals of at most 5 coordinates.
        """
        for s in range(2, 6):
            r, delta = s - 1, 2
            for n in range(s + 1, 16):
                w = n // s
                for starts in combinations(range(n), w + 1):
                    blocks = [frozenset((a + i) % n for i in range(s)) for a in starts]
                    repair = RepairFamily(n, tuple(blocks))
                    if not repair.is_cover():
                        continue
                    for t in range(w + 2):
                        with self.subTest(n=n, s=s, starts=starts, t=t):
                            chosen = find_overlap_subset(repair, t, r, delta)
                            self.assertGreaterEqual(
                                padded_slack(repair.at(chosen), s), overlap_slack(r, delta, n, t)
                            )

    def test_overlap_is_zero_iff_disjoint(self):
        rng = np.random.default_rng(46)
        for _ in range(1000):
            n = int(rng.integers(2, 21))
            blocks = [
                frozenset(rng.choice(n, size=int(rng.integers(1, min(n, 5) + 1))).tolist())
                for _ in range(int(rng.integers(1, 6)))
            ]
            disjoint = all(not a & b for a, b in combinations(blocks, 2))
            self.assertEqual(overlap(blocks) == 0, disjoint)

    def test_uniform_family_overlap(self):
        rng = np.random.default_rng(47)
        checked = 0
        while checked < 1000:
            s = int(rng.integers(2, 6))
            n = int(rng.integers(s + 1, 21))
            w, m = divmod(n, s)
            if m == 0:
                continue
            blocks = [
                frozenset(rng.choice(n, size=s, replace=False).tolist()) for _ in range(w + 1)
            ]
            self.assertGreaterEqual(overlap(blocks), s - m)
            checked += 1


class NearlyDisjointTestCase(SimpleTestCase):
    def test_pair(self):
        repair = family(6, {1, 2, 3}, {3, 4, 5}, {1, 5, 6})
        chosen = nearly_disjoint_subfamily(repair, [0, 1, 2], 2, 2)
        self.assertEqual(chosen, (0, 1))
        self.assertTrue(is_nearly_disjoint(repair.at(chosen), 2))

    def test_heavy(self):
        with self.assertRaises(ValidationError):
            nearly_disjoint_subfamily(family(4, {1, 2, 3}, {2, 3, 4}), [0, 1], 2, 2)

    def test_already_nearly_disjoint(self):
        with self.assertRaises(ValidationError):
            nearly_disjoint_subfamily(family(6, {1, 2, 3}, {4, 5, 6}), [0, 1], 2, 2)


class BreakHeavyOverlapsTestCase(SimpleTestCase):
    def test_disjoint(self):
        result = break_heavy_overlaps(family(6, {1, 2, 3}, {4, 5, 6}), 2)
        self.assertEqual((result.touched, result.seeds), (frozenset(), frozenset()))
        self.assertEqual(result.exclusive_count, 0)

    def test_first_loop(self):
        repair = family(9, {1, 2, 3}, {2, 3, 4}, {5, 6, 7}, {7, 8, 9})
        result = break_heavy_overlaps(repair, 2)
        self.assertEqual(result.touched, {0, 1})
        self.assertEqual(result.seeds, {0})
        self.assertEqual(result.kept, [1])
        self.assertEqual(result.exclusive, {0})
        result.check_cardinality_bounds()

    def test_nested_blocks(self):
        result = break_heavy_overlaps(family(4, {1, 2, 3}, {1, 2, 3, 4}), 2)
        self.assertEqual((result.touched, result.seeds), ({0, 1}, {0}))

    def test_second_loop(self):
        result = break_heavy_overlaps(family(6, {1, 2}, {2, 3}, {3, 4, 5, 6}), 2)
        self.assertEqual(result.touched, {0, 1, 2})
        self.assertEqual(result.seeds, {0, 1})

    def test_random_essential_covers(self):
        rng = np.random.default_rng(53)
        for _ in range(1000):
            delta = int(rng.integers(2, 4))
            n = int(rng.integers(4, 21))
            essential = extract_essential_cover(random_cover(rng, n, 5))
            result = break_heavy_overlaps(essential, delta)
            untouched = essential.at(essential.complement(result.touched))
            self.assertTrue(has_small_pairwise_overlaps(untouched, delta))
            self.assertTrue(result.seeds <= result.touched)
            self.assertLessEqual(len(result.seeds), result.exclusive_count)
            self.assertLessEqual(len(result.touched - result.seeds), result.exclusive_count)
            self.assertLessEqual(len(result.touched), 2 * result.exclusive_count)

    def test_orders(self):
        repair = family(9, {1, 2, 3}, {2, 3, 4}, {5, 6, 7}, {7, 8, 9})
        outcomes = enumerate_break_outcomes(repair, 2)
        self.assertEqual(
            [(set(o.touched), set(o.seeds)) for o in outcomes],
            [({0, 1}, {0}), ({0, 1}, {1})],
        )

    def test_orders_contain_the_scan(self):
        rng = np.random.default_rng(59)
        for _ in range(30):
            essential = extract_essential_cover(random_cover(rng, 8, 4))
            if len(essential) > 6:
                continue
            result = break_heavy_overlaps(essential, 2)
            found = {(o.touched, o.seeds) for o in enumerate_break_outcomes(essential, 2)}
            self.assertIn((result.touched, result.seeds), found)

    def test_orders_guard(self):
        repair = family(7, *[{i} for i in range(1, 8)])
        with self.assertRaises(SearchLimitExceeded):
            enumerate_break_outcomes(repair, 2)


class RedundantBlocksTestCase(SimpleTestCase):
    def test_nested_blocks(self):
        result = extend_redundant(
            nested_code(), break_heavy_overlaps(family(4, {1, 2, 3}, {1, 2, 3, 4}), 2)
        )
        self.assertEqual(result.redundant, {0})
        self.assertEqual(result.kept, [1])
        self.assertEqual(result.exclusive_count, 0)

    def test_nothing_touched(self):
        result = extend_redundant(
            two_block_code(), break_heavy_overlaps(family(6, {1, 2, 3}, {4, 5, 6}), 2)
        )
        self.assertEqual(result.redundant, frozenset())
        self.assertEqual(result.exclusive_count, 0)

    def test_wrong_length(self):
        with self.assertRaises(ValidationError):
            extend_redundant(nested_code(), break_heavy_overlaps(family(3, {1, 2, 3}), 2))

    def test_landscape(self):
        landscape = exclusive_count_landscape(nested_code(), family(4, {1, 2, 3}, {1, 2, 3, 4}), 2)
        self.assertEqual([outcome.exclusive_count for outcome in landscape], [0, 1])
        self.assertEqual(landscape[1].exclusive, {3})


class LowRankSetTestCase(SimpleTestCase):
    def setUp(self):
        self.code = two_block_code()
        self.family = family(6, {1, 2, 3}, {4, 5, 6})

    def test_from_a_block(self):
        found = find_low_rank_set(self.code, self.family, [0], 0, 2, 2)
        self.assertEqual(found, {0, 1, 2, 3})
        self.assertEqual(self.code.coord_rank(found), 3)

    def test_from_nothing(self):
        found = find_low_rank_set(self.code, self.family, [], 0, 2, 2)
        self.assertEqual(self.code.coord_rank(found), 3)
        self.assertGreaterEqual(len(found), 4)

    def test_slack_too_large(self):
        with self.assertRaises(ValidationError):
            find_low_rank_set(self.code, self.family, [0], 1, 2, 2)

    def test_too_many_seeds(self):
        with self.assertRaises(ValidationError):
            find_low_rank_set(self.code, self.family, [0, 1], 0, 2, 2)


class BoundWitnessTestCase(SimpleTestCase):
    def test_two_blocks(self):
        code = two_block_code()
        witness = bound_witness(code, 2, 2)
        self.assertEqual(witness.case, WitnessCase.NEARLY_DISJOINT)
        self.assertEqual(witness.exclusive_count, 0)
        self.assertEqual(witness.coordinates, {0, 1, 2, 3})
        self.assertEqual(witness.distance_bound, 2)
        self.assertEqual(code.min_distance(DistanceMethod.CODEWORDS), 2)

    def test_no_locality(self):
        G = from_elements(make_field(5), [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
        with self.assertRaises(ValidationError):
            bound_witness(LinearCode.from_generator(G), 1, 2)

    def test_random_local_codes(self):
        rng = np.random.default_rng(61)
        layouts = [([3, 3, 2], 1), ([3, 3, 3], 2), ([3, 2, 2], 1), ([3, 3, 2], 2)]
        for sizes, extra in layouts:
            code = local_code(rng, 7, sizes, extra)
            if code.k < 2:
                continue
            with self.subTest(code=code):
                witness = bound_witness(code, 2, 2)
                self.assertEqual(code.coord_rank(witness.coordinates), code.k - 1)
                self.assertGreaterEqual(len(witness.coordinates), witness.lower_bound)
                distance = code.min_distance(DistanceMethod.CODEWORDS)
                self.assertLessEqual(distance, witness.distance_bound)
                self.assertLessEqual(
                    witness.distance_bound, improved_bound(witness.params, witness.exclusive_count)
                )

    def test_exclusive_coordinates(self):
        code = exclusive_code()
        witness = bound_witness(code, 2, 2)
        self.assertEqual(witness.cover, family(7, {1, 2, 3}, {1, 4}, {5, 6, 7}))
        self.assertEqual(witness.overlap_break.redundant, {1})
        self.assertEqual(witness.overlap_break.exclusive, {3})
        self.assertEqual(witness.case, WitnessCase.EXCLUSIVE)
        self.assertEqual(witness.coordinates, {0, 1, 2, 3, 4})
        self.assertEqual(witness.lower_bound, 5)
        params = decompose(7, 4, 2, 2)
        self.assertEqual(improved_bound(params, witness.exclusive_count), 2)
        self.assertEqual(generalized_singleton_bound(params), 3)
        self.assertEqual(code.min_distance(DistanceMethod.CODEWORDS), 2)

    def test_small_pairwise_overlaps(self):
        code = triangle_code()
        witness = bound_witness(code, 2, 2)
        self.assertEqual(len(witness.cover), 5)
        self.assertEqual(witness.exclusive_count, 0)
        self.assertEqual(witness.case, WitnessCase.SMALL_OVERLAPS)
        self.assertEqual(witness.coordinates, frozenset(range(10)))
        self.assertEqual(witness.lower_bound, 9)
        self.assertEqual(witness.distance_bound, 2)
        self.assertEqual(code.min_distance(DistanceMethod.COLUMNS), 2)

    @tag("slow")
    def test_random_overlapping_codes(self):
        rng = np.random.default_rng(67)
        checked = 0
        while checked < 100:
            q = int(rng.choice([2, 3, 4, 5]))
            delta = 3 if q >= 4 and rng.random() < 0.3 else 2
            r = int(rng.integers(1, 4))
            s = r + delta - 1
            n = int(rng.integers(s + 2, LONGEST[s] + 1))
            code = overlapping_local_code(rng, q, n, r, delta, int(rng.integers(0, 3)))
            if code.k <= r or any(code.coord_rank([i]) == 0 for i in range(n)):
                continue
            checked += 1
            with self.subTest(code=code, r=r, delta=delta):
                witness = bound_witness(code, r, delta)
                self.assertEqual(code.coord_rank(witness.coordinates), code.k - 1)
                self.assertGreaterEqual(len(witness.coordinates), witness.lower_bound)
                broken, M = witness.overlap_break, witness.exclusive_count
                self.assertLessEqual(len(broken.removed), M)
                self.assertLessEqual(len(broken.kept), M)
                self.assertLessEqual(len(broken.touched), 2 * M)
                distance = code.min_distance(DistanceMethod.COLUMNS)
                self.assertLessEqual(distance, witness.distance_bound)
                self.assertLessEqual(distance, improved_bound(witness.params, M))
                self.assertLessEqual(distance, generalized_singleton_bound(witness.params))


class SerializerTestCase(SimpleTestCase):
    def test_params(self):
        serializer = LrcParamsSerializer(data={"n": 37, "k": 27, "r": 4, "delta": 2})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        params = serializer.save()
        data = LrcParamsSerializer(params).data
        self.assertEqual((data["w"], data["m"], data["u"], data["v"]), (7, 2, 6, 3))
        self.assertTrue(data["feasibility"]["w_at_least_u"])

    def test_invalid_params(self):
        serializer = LrcParamsSerializer(data={"n": 10, "k": 10, "r": 2, "delta": 2})
        self.assertFalse(serializer.is_valid())
        self.assertIn("non_field_errors", serializer.errors)

    def test_family(self):
        serializer = RepairFamilySerializer(data={"n": 3, "blocks": [[1, 2], [2, 3]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        repair = serializer.save()
        self.assertEqual(repair, family(3, {1, 2}, {2, 3}))
        self.assertEqual(RepairFamilySerializer(repair).data["blocks"], [[1, 2], [2, 3]])

    def test_family_out_of_range(self):
        serializer = RepairFamilySerializer(data={"n": 3, "blocks": [[1, 4]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn("blocks", serializer.errors)

    def test_overlap_break(self):
        repair = family(9, {1, 2, 3}, {2, 3, 4}, {5, 6, 7}, {7, 8, 9})
        data = OverlapBreakSerializer(break_heavy_overlaps(repair, 2)).data
        self.assertEqual(data["touched"], [1, 2])
        self.assertEqual(data["seeds"], [1])
        self.assertEqual(data["redundant"], [1])
        self.assertEqual(data["exclusive"], [1])
        self.assertEqual(data["exclusive_count"], 1)

    def test_witness(self):
        data = BoundWitnessSerializer(bound_witness(two_block_code(), 2, 2)).data
        self.assertEqual(data["coordinates"], [1, 2, 3, 4])
        self.assertEqual(data["case"], "u>M:C1")
        self.assertEqual(data["distance_bound"], 2)
        self.assertEqual(data["cover"]["blocks"], [[1, 2, 3], [4, 5, 6]])
