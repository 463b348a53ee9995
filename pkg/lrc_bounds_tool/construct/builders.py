"""
Parity-check matrices of the two optimal constructions and the pieces they
are made of: Reed-Solomon parity checks for the local codes and t-wise
independent sets for the Moore rows.
"""

import logging

from itertools import combinations
from math import comb
from typing import Optional, Sequence

import numpy as np

from django.conf import settings
from django.core.exceptions import ValidationError

from construct.plans import ConstructionPlan, Variant
from gf.fields import FieldElement, as_subfield_vector, element_order_key, make_field
from linearcode.codes import LinearCode
from matgf.matrices import (
    MatrixGF,
    block_assemble,
    embed,
    from_elements,
    moore_matrix,
    rank,
    vandermonde,
    zeros,
)
from utils.exceptions import InvariantViolation
from utils.search import check_limit, ensure

logger = logging.getLogger(__name__)

RANDOM_SET_ATTEMPTS = 100


def mds_parity(length: int, distance: int, q: int) -> MatrixGF:
    """
    A parity-check matrix of a [length, length-distance+1, distance] MDS code
    over GF(q): the (distance-1) x length Vandermonde matrix on the points
    0, 1, ..., length-1.

    Raises
    ------
    ValidationError
        If q < length or distance isn't in [1, length].
    """
    spec = make_field(q)
    if q < length:
        raise ValidationError(f"A Reed-Solomon code of length {length} needs q >= {length}")
    if not 1 <= distance <= length:
        raise ValidationError(f"The distance must lie in [1, {length}], got {distance}")
    if distance == 1:
        return zeros(spec, 0, length)
    return vandermonde([spec.element(i) for i in range(length)], distance - 1)


def split_local_parity(matrix: MatrixGF) -> tuple[MatrixGF, MatrixGF]:
    """
    Splits a local parity-check matrix into all its columns but the last and
    its last column.
    """
    if matrix.cols < 2:
        raise ValidationError(f"Can't split a matrix with {matrix.cols} column")
    return matrix.columns(range(matrix.cols - 1)), matrix.columns([matrix.cols - 1])


def _subfield_matrix(elements: Sequence[FieldElement], q: int) -> MatrixGF:
    """
    The e x |elements| matrix over GF(q) whose columns are the coordinates of
    the elements.
    """
    spec = make_field(q)
    columns = [as_subfield_vector(x, q).tolist() for x in elements]
    return from_elements(spec, list(map(list, zip(*columns))))


def is_twise_independent(
    elements: Sequence[FieldElement], t: int, q: int, seed: Optional[int] = None
) -> bool:
    """
    Whether every t of ``elements`` are linearly independent over GF(q).

    All the t-subsets are checked when there are at most
    ``INDEPENDENCE_EXHAUSTIVE_LIMIT`` of them, ``INDEPENDENCE_SPOT_CHECKS``
    random ones otherwise.
    """
    if t < 1:
        return True
    if t > len(elements):
        return True
    matrix = _subfield_matrix(elements, q)
    total = comb(len(elements), t)
    if total <= settings.INDEPENDENCE_EXHAUSTIVE_LIMIT:
        logger.debug("Checking the %d %d-subsets of %d elements", total, t, len(elements))
        subsets = combinations(range(len(elements)), t)
    else:
        logger.warning(
            "%d %d-subsets exceed the exhaustive limit, spot checking %d of them",
            total,
            t,
            settings.INDEPENDENCE_SPOT_CHECKS,
        )
        rng = np.random.default_rng(settings.DEFAULT_RANDOM_SEED if seed is None else seed)
        subsets = (
            rng.choice(len(elements), size=t, replace=False).tolist()
            for _ in range(settings.INDEPENDENCE_SPOT_CHECKS)
        )
    return all(rank(matrix.columns(subset)) == t for subset in subsets)


def twise_independent_set(n: int, t: int, q: int, e: int) -> list[FieldElement]:
    """
    n elements of GF(q^e) any t of which are independent over GF(q).

    The coordinates of the elements are the columns of a Vandermonde matrix on
    the points 0, ..., n-1 of GF(q) (with two rows at least, so the elements
    are distinct), padded with zeros to e coordinates.

    Returns
    -------
    list[FieldElement]
        The elements, sorted by ``element_order_key``.

    Raises
    ------
    ValidationError
        If q < n, e < t or t < 1.
    """
    if t < 1:
        raise ValidationError(f"The independence level must be positive, got {t}")
    if e < t:
        raise ValidationError(f"{t}-wise independence needs e >= {t}, got {e}")
    if q < n:
        raise ValidationError(f"The deterministic set needs q >= n, got q={q}, n={n}")
    spec, extension = make_field(q), make_field(q, e)
    rows = min(e, max(t, 2))
    if rows == 1:
        if q < n + 1:
            raise ValidationError(f"{n} distinct nonzero elements need q > {n}")
        columns = [[i] for i in range(1, n + 1)]
    else:
        points = [spec.element(i) for i in range(n)]
        columns = [list(map(int, column)) for column in vandermonde(points, rows).data.T]
    elements = [extension.element(column + [0] * (e - rows)) for column in columns]
    elements.sort(key=element_order_key)
    ensure(is_twise_independent(elements, t, q), f"The set isn't {t}-wise independent")
    logger.debug("Built a %d-wise independent set of %d elements of %s", t, n, extension)
    return elements


def random_independent_set(
    n: int, t: int, q: int, e: int, seed: Optional[int] = None
) -> list[FieldElement]:
    """
    n distinct nonzero random elements of GF(q^e) any t of which are
    independent over GF(q), for when q < n rules out the deterministic set.

    Every draw is verified on all its t-subsets; the guard
    ``INDEPENDENCE_EXHAUSTIVE_LIMIT`` bounds their number.

    Raises
    ------
    ValidationError
        If q^e <= n or e < t.
    SearchLimitExceeded
        If there are too many t-subsets to verify.
    InvariantViolation
        If no draw succeeds.
    """
    if e < t:
        raise ValidationError(f"{t}-wise independence needs e >= {t}, got {e}")
    if q**e <= n:
        raise ValidationError(f"GF({q}^{e}) has fewer than {n} nonzero elements")
    check_limit("independence verification", comb(n, t), settings.INDEPENDENCE_EXHAUSTIVE_LIMIT)
    extension = make_field(q, e)
    rng = np.random.default_rng(settings.DEFAULT_RANDOM_SEED if seed is None else seed)
    logger.warning("Drawing a random %d-wise independent set of %d elements", t, n)
    for attempt in range(RANDOM_SET_ATTEMPTS):
        values = (rng.choice(q**e - 1, size=n, replace=False) + 1).tolist()
        elements = sorted((extension.element(int(x)) for x in values), key=element_order_key)
        if is_twise_independent(elements, t, q):
            logger.debug("Random set found after %d draws", attempt + 1)
            return elements
    raise InvariantViolation(
        f"No {t}-wise independent set of {n} elements in {RANDOM_SET_ATTEMPTS} draws"
    )


def moore_points(plan: ConstructionPlan, seed: Optional[int] = None) -> list[FieldElement]:
    if plan.uses_random_set:
        return random_independent_set(plan.n, plan.t, plan.q, plan.e, seed)
    return twise_independent_set(plan.n, plan.t, plan.q, plan.e)


def _assemble(
    plan: ConstructionPlan, local_blocks: Sequence[MatrixGF], seed: Optional[int]
) -> MatrixGF:
    """
    The parity-check matrix with ``local_blocks`` on the diagonal and the h
    Moore rows below, split by the block widths.
    """
    extension = make_field(plan.q, plan.e)
    blocks = [embed(block, extension) for block in local_blocks]
    widths = [block.cols for block in blocks]
    ensure(sum(widths) == plan.n, f"The local blocks span {sum(widths)} columns, not n")
    layout = [
        [block if j == i else None for j in range(len(blocks))] for i, block in enumerate(blocks)
    ]
    heights = [block.rows for block in blocks]
    if plan.h > 0:
        moore = moore_matrix(moore_points(plan, seed), plan.h, plan.q)
        bottom, left = [], 0
        for width in widths:
            bottom.append(moore.columns(range(left, left + width)))
            left += width
        layout.append(bottom)
        heights.append(plan.h)
    R = block_assemble(layout, heights, widths)
    ensure(R.cols == plan.n, "The parity-check matrix doesn't have n columns")
    logger.info("%s: %dx%d parity-check matrix, rank %d", plan, R.rows, R.cols, rank(R))
    return R


def variant_a_parity(plan: ConstructionPlan, seed: Optional[int] = None) -> MatrixGF:
    """
    The first r+delta-1-m diagonal blocks are the local parity check A
    without its last column, the other ones A itself.
    """
    local = mds_parity(plan.block_size, plan.delta, plan.q)
    shortened, _ = split_local_parity(local)
    blocks = [shortened if width < plan.block_size else local for width in plan.local_widths]
    return _assemble(plan, blocks, seed)


def variant_b_parity(plan: ConstructionPlan, seed: Optional[int] = None) -> MatrixGF:
    """
    The first diagonal block checks a [m+r+delta-1, r, m+delta] MDS code, the
    other w-1 an [r+delta-1, r, delta] one.
    """
    first = mds_parity(plan.m + plan.block_size, plan.m + plan.delta, plan.q)
    local = mds_parity(plan.block_size, plan.delta, plan.q)
    return _assemble(plan, [first] + [local] * (plan.w - 1), seed)


def construct_variant_a(plan: ConstructionPlan, seed: Optional[int] = None) -> LinearCode:
    if plan.variant != Variant.A:
        raise ValidationError(f"Expected a variant A plan, got variant {plan.variant}")
    return LinearCode.from_parity(variant_a_parity(plan, seed))


def construct_variant_b(plan: ConstructionPlan, seed: Optional[int] = None) -> LinearCode:
    if plan.variant != Variant.B:
        raise ValidationError(f"Expected a variant B plan, got variant {plan.variant}")
    return LinearCode.from_parity(variant_b_parity(plan, seed))


def construct(plan: ConstructionPlan, seed: Optional[int] = None) -> LinearCode:
    """
    Builds the code of ``plan``; ``seed`` only matters when q < n and the
    independent set is drawn at random.
    """
    builder = construct_variant_a if plan.variant == Variant.A else construct_variant_b
    code = builder(plan, seed)
    if code.k != plan.k:
        logger.warning("%s: the code has dimension %d instead of %d", plan, code.k, plan.k)
    return code
