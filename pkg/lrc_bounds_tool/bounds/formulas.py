"""
Closed-form upper bounds on the minimum distance of linear codes with
all-symbol (r, delta)-locality.

Every function works in exact integer or rational arithmetic.
"""

from fractions import Fraction
from typing import Optional

from django.core.exceptions import ValidationError

from locality.params import LrcParams, ceil_div


class SlackUndefined(ValueError):
    """
    Raised when the overlap slack is requested on fewer than r+delta-1
    coordinates, e.g. the improved bound with n - M < r+delta-1.
    """

    def __init__(self, a: int, block_size: int):
        self.a = a
        self.block_size = block_size
        super().__init__(f"The overlap slack needs at least {block_size} coordinates, got {a}")


def overlap_slack(r: int, delta: int, a: int, b: int) -> int:
    """
    The guaranteed padded slack Phi(a, b) of a b-subfamily of repair sets
    covering a coordinates.

    With s = r+delta-1, c = a mod s and l = a // s, it is 0 when c = 0 and
    otherwise min{s-c, max{floor(b/2), ceil(b(b-1)(s-c) / ((l+1)l))}}.

    Raises
    ------
    SlackUndefined
        If a < r+delta-1.
    ValidationError
        If b < 0, r < 1 or delta < 2.
    """
    if r < 1 or delta < 2 or b < 0:
        raise ValidationError(f"Invalid slack arguments r={r}, delta={delta}, b={b}")
    s = r + delta - 1
    if a < s:
        raise SlackUndefined(a, s)
    c, ell = a % s, a // s
    if c == 0:
        return 0
    averaged = ceil_div(b * (b - 1) * (s - c), (ell + 1) * ell)
    return min(s - c, max(b // 2, averaged))


def singleton_bound(params: LrcParams) -> int:
    """
    d <= n - k + 1.
    """
    return params.n - params.k + 1


def generalized_singleton_bound(params: LrcParams) -> int:
    """
    d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1).
    """
    return singleton_bound(params) - (ceil_div(params.k, params.r) - 1) * (params.delta - 1)


def improved_bound(params: LrcParams, exclusive_count: int) -> int:
    """
    The improved bound for a code whose repair sets leave ``exclusive_count``
    coordinates exclusively covered by the redundant blocks.

    Parameters
    ----------
    params: LrcParams
        The code parameters.
    exclusive_count: int
        M >= 0.

    Returns
    -------
    int
        The bound; a value <= 0 means no code has these parameters and M.

    Raises
    ------
    SlackUndefined
        If u > M and n - M < r+delta-1.
    """
    n, k, r, delta, u = params.n, params.k, params.r, params.delta, params.u
    M = exclusive_count
    if M < 0:
        raise ValidationError(f"The exclusive count must be nonnegative, got {M}")
    if u <= M:
        return n - k + 1 - (u + (ceil_div(k, r) - 1) * (delta - 1))
    half = (ceil_div(k + ceil_div(r, 2), r) - 1) * (delta - 1)
    slack = overlap_slack(r, delta, n - M, u - M)
    reduced = M + (ceil_div(k + slack, r) - 1) * (delta - 1)
    return n - k + 1 - min(half, reduced)


def disjoint_repair_bound(params: LrcParams) -> int:
    """
    The improved bound when the repair sets are pairwise disjoint (M = 0):
    n - k + 1 - (ceil((k + Phi(n, u))/r) - 1)(delta - 1).
    """
    n, k, r, delta = params.n, params.k, params.r, params.delta
    slack = overlap_slack(r, delta, n, params.u)
    return n - k + 1 - (ceil_div(k + slack, r) - 1) * (delta - 1)


def large_remainder_applicable(params: LrcParams) -> bool:
    """
    m >= delta, r > v > max{m - delta + 1, floor(r/2)} and
    u >= max{2(r+delta-1-m), r+delta-1}.
    """
    r, delta, m, u, v = params.r, params.delta, params.m, params.u, params.v
    s = params.block_size
    return m >= delta and r > v > max(m - delta + 1, r // 2) and u >= max(2 * (s - m), s)


def large_remainder_bound(params: LrcParams) -> int:
    """
    n - k + 1 - ceil(k/r)(delta - 1), tight when ``large_remainder_applicable``.

    Raises
    ------
    ValidationError
        If the conditions don't hold.
    """
    if not large_remainder_applicable(params):
        raise ValidationError(f"The large remainder bound doesn't apply to {params}")
    return _remainder_base(params)


def small_remainder_applicable(params: LrcParams) -> bool:
    """
    0 < m <= delta - 1, r > v > floor(r/2) and u >= 2r + delta - 1.
    """
    r, delta, m, u, v = params.r, params.delta, params.m, params.u, params.v
    return 0 < m <= delta - 1 and r > v > r // 2 and u >= 2 * r + delta - 1


def small_remainder_bound(params: LrcParams) -> int:
    """
    n - k + 1 - ceil(k/r)(delta - 1) + (delta - 1 - m), tight when
    ``small_remainder_applicable``.

    Raises
    ------
    ValidationError
        If the conditions don't hold.
    """
    if not small_remainder_applicable(params):
        raise ValidationError(f"The small remainder bound doesn't apply to {params}")
    return _remainder_base(params) + (params.delta - 1 - params.m)


def _remainder_base(params: LrcParams) -> int:
    return params.n - params.k + 1 - ceil_div(params.k, params.r) * (params.delta - 1)


def dmax_formula(params: LrcParams) -> Optional[int]:
    """
    The largest achievable minimum distance, when m > 0, v < r,
    0 < r < k <= n - ceil(k/r)(delta - 1), v > max{m - delta + 1, floor(r/2)}
    and u >= max{2(r+delta-1-m), r+delta-1} (m >= delta) or
    u >= 2r + delta - 1 (m <= delta - 1). ``None`` otherwise.
    """
    n, k, r, delta, m, u, v = (
        params.n,
        params.k,
        params.r,
        params.delta,
        params.m,
        params.u,
        params.v,
    )
    s = params.block_size
    if not (m > 0 and v < r and 0 < r < k <= n - ceil_div(k, r) * (delta - 1)):
        return None
    if not v > max(m - delta + 1, r // 2):
        return None
    if m >= delta:
        if u < max(2 * (s - m), s):
            return None
        return _remainder_base(params)
    if u < 2 * r + delta - 1:
        return None
    return _remainder_base(params) + (delta - 1 - m)


def singleton_unachievable(params: LrcParams) -> bool:
    """
    Whether the generalized Singleton bound can't be met: u > 1,
    0 < m < v + delta - 1 and min{ceil(r/2), u(u-1)(r+delta-1-m)/((w+1)w)} > r - v.
    """
    r, delta, m, u, v, w = params.r, params.delta, params.m, params.u, params.v, params.w
    s = params.block_size
    if not (u > 1 and 0 < m < v + delta - 1):
        return False
    if w == 0:
        return ceil_div(r, 2) > r - v
    averaged = Fraction(u * (u - 1) * (s - m), (w + 1) * w)
    return min(Fraction(ceil_div(r, 2)), averaged) > r - v


def singleton_unachievable_specialized(params: LrcParams) -> bool:
    """
    The form of ``singleton_unachievable`` for v > r/2:
    u > 1 and 0 < m < r + delta - 1 - w(w+1)(r-v)/(u(u-1)).
    """
    r, m, u, v, w = params.r, params.m, params.u, params.v, params.w
    if not (2 * v > r and u > 1):
        return False
    return 0 < m < params.block_size - Fraction(w * (w + 1) * (r - v), u * (u - 1))
