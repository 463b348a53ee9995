"""
The (n, k, r, delta) parameters of a locally repairable code and their
decomposition n = w(r+delta-1) + m, k = ur + v.
"""

from dataclasses import dataclass

from django.core.exceptions import ValidationError

from utils.identifiers import AbstractIdentifier


def ceil_div(a: int, b: int) -> int:
    """
    Exact ceiling of a / b for integers, b > 0.
    """
    return -(-a // b)


@dataclass(frozen=True)
class LrcParams(AbstractIdentifier):
    """
    Length ``n``, dimension ``k``, locality ``r`` and local distance ``delta``
    of a linear code with all-symbol (r, delta)-locality.

    The derived ``w``, ``m``, ``u`` and ``v`` are the unique integers with
    n = w(r+delta-1) + m, 0 <= m < r+delta-1 and k = ur + v, 0 < v <= r
    (so v = r exactly when r divides k).
    """

    n: int
    k: int
    r: int
    delta: int

    def __post_init__(self):
        self.full_clean()

    def clean(self):
        errors = []
        if self.r < 1:
            errors.append(f"r must be at least 1, got {self.r}")
        if self.delta < 2:
            errors.append(f"delta must be at least 2, got {self.delta}")
        if self.k >= self.n:
            errors.append(f"k must be smaller than n, got k={self.k}, n={self.n}")
        if self.r > self.k:
            errors.append(f"r must not exceed k, got r={self.r}, k={self.k}")
        if errors:
            raise ValidationError(errors)

    def build_identifier(self) -> str:
        return f"{self.n}|{self.k}|{self.r}|{self.delta}"

    def __str__(self):
        return f"(n={self.n}, k={self.k}, r={self.r}, delta={self.delta})"

    @property
    def block_size(self) -> int:
        """
        The largest size of a repair set, r + delta - 1.
        """
        return self.r + self.delta - 1

    @property
    def w(self) -> int:
        return self.n // self.block_size

    @property
    def m(self) -> int:
        return self.n % self.block_size

    @property
    def u(self) -> int:
        return (self.k - 1) // self.r

    @property
    def v(self) -> int:
        return self.k - self.u * self.r

    @property
    def feasibility(self) -> dict[str, bool]:
        """
        The necessary conditions for a code with these parameters to exist,
        by name.
        """
        return {
            "w_at_least_u": self.w >= self.u,
            "n_at_least_block_size": self.n >= self.block_size,
        }

    @property
    def is_feasible(self) -> bool:
        return all(self.feasibility.values())


def decompose(n: int, k: int, r: int, delta: int) -> LrcParams:
    """
    Validates (n, k, r, delta) and returns them with their decomposition.

    Raises
    ------
    ValidationError
        If k >= n, r > k, r < 1 or delta < 2.
    """
    return LrcParams(n, k, r, delta)
