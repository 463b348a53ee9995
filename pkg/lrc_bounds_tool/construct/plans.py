"""
Parameter plans of the two optimal constructions.

Variant A covers the large remainder case (delta <= m) and variant B the small
remainder case (0 < m <= delta-1). Both stack local MDS parity blocks on the
diagonal and h Moore rows on a t-wise independent set below them.
"""

from dataclasses import dataclass

import galois

from django.core.exceptions import ValidationError
from django.db import models

from locality.params import LrcParams
from utils.identifiers import AbstractIdentifier


class Variant(models.TextChoices):
    A = "A", "Large remainder, delta <= m < r+delta-1"
    B = "B", "Small remainder, 0 < m <= delta-1"


INDEPENDENCE_LEVEL_NOTE = (
    "The independent set is built at the stated level h+(w+1-u)(delta-1); the distance "
    "argument only uses h+(w-u)(delta-1)."
)
RANDOM_SET_NOTE = "q < n, the t-wise independent set is drawn at random and fully verified."


@dataclass(frozen=True)
class ConstructionPlan(AbstractIdentifier):
    """
    The parameters of a construction over GF(q^e), q prime.

    n = w(r+delta-1) + m and k = ur + v are derived, as are the number ``h``
    of Moore rows and the independence level ``t`` the set must have.
    """

    variant: Variant
    r: int
    delta: int
    m: int
    u: int
    v: int
    w: int
    q: int
    e: int

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        self.full_clean()

    def clean(self):
        errors = []
        if self.r < 1:
            errors.append(f"r >= 1 violated (r={self.r})")
        if self.delta < 2:
            errors.append(f"delta >= 2 violated (delta={self.delta})")
        if self.w < 1 or self.u < 1:
            errors.append(f"w >= 1 and u >= 1 violated (w={self.w}, u={self.u})")
        if not galois.is_prime(self.q):
            errors.append(f"q prime violated (q={self.q})")
        if self.e < 1:
            errors.append(f"e >= 1 violated (e={self.e})")
        if errors:
            raise ValidationError(errors)

        r, delta, m, u, v, w = self.r, self.delta, self.m, self.u, self.v, self.w
        s = self.block_size
        if self.variant == Variant.A:
            if not delta <= m:
                errors.append(f"m >= delta violated (m={m}, delta={delta})")
            if not m < s:
                errors.append(f"m < r+delta-1 violated (m={m}, r+delta-1={s})")
            if not 0 < v < r:
                errors.append(f"0 < v < r violated (v={v}, r={r})")
            if not v > max(m - delta + 1, r // 2):
                errors.append(f"v > max(m-delta+1, floor(r/2)) violated (v={v})")
            if not u >= max(2 * (s - m), s):
                errors.append(f"u >= max(2(r+delta-1-m), r+delta-1) violated (u={u})")
            if not w + 1 >= s - m:
                errors.append(f"w+1 >= r+delta-1-m violated (w={w})")
        else:
            if not 0 < m <= delta - 1:
                errors.append(f"0 < m <= delta-1 violated (m={m}, delta={delta})")
            if not r > v > r // 2:
                errors.append(f"r > v > floor(r/2) violated (v={v}, r={r})")
            if not u >= 2 * r + delta - 1:
                errors.append(f"u >= 2r+delta-1 violated (u={u})")
        if self.h < 0:
            errors.append(f"h >= 0 violated (h={self.h})")
        if self.e < self.t:
            errors.append(f"e >= t violated (e={self.e}, t={self.t})")
        if self.q**self.e < self.n:
            errors.append(f"q^e >= n violated (q^e={self.q ** self.e}, n={self.n})")
        if self.q < self.local_length:
            errors.append(
                f"q >= {self.local_length} violated, the local MDS codes need as many points"
            )
        if errors:
            raise ValidationError(errors)

    def build_identifier(self) -> str:
        return (
            f"{self.variant}|{self.r}|{self.delta}|{self.m}|{self.u}|{self.v}|{self.w}"
            f"|{self.q}|{self.e}"
        )

    def __str__(self):
        return f"Variant {self.variant} plan for {self.params} over GF({self.q}^{self.e})"

    @property
    def block_size(self) -> int:
        return self.r + self.delta - 1

    @property
    def n(self) -> int:
        return self.w * self.block_size + self.m

    @property
    def k(self) -> int:
        return self.u * self.r + self.v

    @property
    def params(self) -> LrcParams:
        return LrcParams(self.n, self.k, self.r, self.delta)

    @property
    def local_length(self) -> int:
        """
        The length of the longest local MDS code.
        """
        if self.variant == Variant.A:
            return self.block_size
        return self.m + self.block_size

    @property
    def h(self) -> int:
        """
        The number of Moore rows.
        """
        if self.variant == Variant.A:
            return self.n - self.k - (self.w + 1) * (self.delta - 1)
        return self.n - self.k - self.m - self.w * (self.delta - 1)

    @property
    def t(self) -> int:
        """
        The independence level of the Moore points.
        """
        if self.variant == Variant.A:
            return self.h + (self.w - self.u) * (self.delta - 1)
        return self.h + (self.w + 1 - self.u) * (self.delta - 1)

    @property
    def predicted_distance(self) -> int:
        return self.h + (self.w - self.u) * (self.delta - 1) + 1

    @property
    def uses_random_set(self) -> bool:
        return self.q < self.n

    @property
    def notes(self) -> list[str]:
        notes = []
        if self.variant == Variant.B:
            notes.append(INDEPENDENCE_LEVEL_NOTE)
        if self.uses_random_set:
            notes.append(RANDOM_SET_NOTE)
        return notes

    @property
    def local_widths(self) -> list[int]:
        """
        The widths of the diagonal blocks, left to right.
        """
        s = self.block_size
        if self.variant == Variant.A:
            short = s - self.m
            return [s - 1] * short + [s] * (self.w + 1 - short)
        return [self.m + s] + [s] * (self.w - 1)

    def repair_sets(self) -> list[range]:
        """
        The 0-based coordinates of the repair sets the construction provides,
        one per diagonal block and two for the wide first block of variant B.
        """
        sets, left = [], 0
        for width in self.local_widths:
            if width > self.block_size:
                sets.append(range(left, left + self.block_size))
                sets.append(range(left + width - self.block_size, left + width))
            else:
                sets.append(range(left, left + width))
            left += width
        return sets
