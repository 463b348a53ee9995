"""
Linear codes over ``FieldSpec`` fields: coordinate-set ranks, puncturing, span
membership and three independent minimum distance oracles.

Coordinates are 0-based in the Python API; the JSON documents and the command
line use 1-based coordinates.
"""

import logging

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional

import numpy as np

from django.conf import settings
from django.core.exceptions import ValidationError
from django.db import models

from gf.fields import FieldSpec
from matgf.matrices import MatrixGF, kernel, rank, row_basis
from utils.identifiers import AbstractIdentifier
from utils.search import check_limit, ensure

logger = logging.getLogger(__name__)


class DistanceMethod(models.TextChoices):
    CODEWORDS = "codewords", "Minimum weight over every nonzero codeword"
    COLUMNS = "columns", "Smallest linearly dependent set of parity-check columns"
    SUBSET_RANK = "lemma1", "n minus the largest coordinate set of rank below k"


METHOD_ALIASES = {"subset-rank": DistanceMethod.SUBSET_RANK}


def distance_method(value: str) -> DistanceMethod:
    """
    The method named ``value``, either its value or an alias.
    """
    return METHOD_ALIASES.get(value) or DistanceMethod(value)


class DistanceAboveCap(Exception):
    """
    Raised by the ``columns`` method when no dependent set of at most ``cap``
    columns exists, i.e. the distance is greater than ``cap``.
    """

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"The minimum distance is greater than {cap}")


@dataclass(frozen=True, eq=False)
class LinearCode(AbstractIdentifier):
    """
    An [n, k] linear code given by a full row rank generator matrix ``G`` and,
    optionally, a full row rank parity-check matrix ``H``.
    """

    spec: FieldSpec
    G: MatrixGF
    H: Optional[MatrixGF] = None

    def __post_init__(self):
        self.full_clean()

    def clean(self):
        if self.G.spec != self.spec:
            raise ValidationError(f"The generator matrix isn't over {self.spec}")
        if rank(self.G) != self.G.rows:
            raise ValidationError("The generator matrix must have full row rank")
        if self.H is None:
            return
        if self.H.spec != self.spec:
            raise ValidationError(f"The parity-check matrix isn't over {self.spec}")
        if self.H.cols != self.n:
            raise ValidationError(f"The parity-check matrix must have n={self.n} columns")
        if rank(self.H) != self.H.rows or self.H.rows != self.n - self.k:
            raise ValidationError(f"The parity-check matrix must have rank n-k={self.n - self.k}")
        if self.k and self.H.rows and not (self.G @ self.H.transpose()).is_zero():
            raise ValidationError("The generator and parity-check matrices aren't orthogonal")

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.spec})"

    def build_identifier(self) -> str:
        canonical = row_basis(self.G).to_integers()
        return f"{self.spec.build_identifier()}|{self.n}|{self.k}|{canonical}"

    @classmethod
    def from_parity(cls, H: MatrixGF) -> "LinearCode":
        """
        The code whose parity-check matrix is ``H``, which needn't have full
        rank: k = n - rank(H), ``G`` is a kernel basis of ``H`` and the stored
        parity-check matrix is the row-reduced basis of ``H``.
        """
        reduced = row_basis(H)
        return cls(H.spec, kernel(H), reduced)

    @classmethod
    def from_generator(cls, G: MatrixGF) -> "LinearCode":
        """
        The code spanned by the rows of ``G``, reduced to a basis, with a
        parity-check matrix computed as the kernel of ``G``.
        """
        basis = row_basis(G)
        return cls(G.spec, basis, kernel(basis))

    @property
    def parity_check(self) -> MatrixGF:
        """
        The stored parity-check matrix or, when absent, the kernel of ``G``.
        """
        return self.H if self.H is not None else kernel(self.G)

    def _coordinates(self, coordinates: Iterable[int]) -> list[int]:
        coordinates = sorted(set(coordinates))
        if coordinates and not (0 <= coordinates[0] and coordinates[-1] < self.n):
            raise ValidationError(f"Coordinates must lie in [0, {self.n}), got {coordinates}")
        return coordinates

    def coord_rank(self, coordinates: Iterable[int]) -> int:
        """
        Dimension of the span of the generator columns indexed by
        ``coordinates``; 0 for the empty set.
        """
        coordinates = self._coordinates(coordinates)
        if not coordinates:
            return 0
        return rank(self.G.columns(coordinates))

    def span_contains(self, coordinates: Iterable[int], j: int) -> bool:
        """
        Whether the generator column ``j`` lies in the span of the columns
        indexed by ``coordinates``.
        """
        coordinates = self._coordinates(coordinates)
        self._coordinates([j])
        if j in coordinates:
            return True
        return self.coord_rank(coordinates + [j]) == self.coord_rank(coordinates)

    def puncture(self, coordinates: Iterable[int]) -> "LinearCode":
        """
        The punctured code on ``coordinates``: length |N|, dimension
        ``coord_rank(N)``, generated by the restriction of ``G``.
        """
        coordinates = self._coordinates(coordinates)
        if not coordinates:
            raise ValidationError("Can't puncture a code on an empty coordinate set")
        return LinearCode.from_generator(self.G.columns(coordinates))

    def min_distance(
        self, method: DistanceMethod | str = DistanceMethod.COLUMNS, cap: Optional[int] = None
    ) -> int:
        """
        Exact minimum Hamming distance.

        Parameters
        ----------
        method: DistanceMethod | str
            ``codewords`` enumerates the q^k codewords, ``columns`` looks for the
            smallest dependent set of parity-check columns, ``lemma1`` (alias
            ``subset-rank``) computes n - max{|N| : rank(N) < k} literally.
        cap: Optional[int]
            Only for ``columns``: the largest distance searched for. Raises
            ``DistanceAboveCap`` if the distance is larger.

        Returns
        -------
        int
            The minimum distance.
        """
        method = distance_method(method)
        if self.k == 0:
            raise ValidationError("The zero code has no minimum distance")
        if method == DistanceMethod.CODEWORDS:
            return self._distance_by_codewords()
        if method == DistanceMethod.SUBSET_RANK:
            return self._distance_by_subset_rank()
        return self._distance_by_columns(cap)

    def _distance_by_codewords(self) -> int:
        q, k = self.spec.order, self.k
        total = q**k
        check_limit("codeword enumeration", total, settings.CODEWORD_ENUMERATION_LIMIT)
        GF = self.spec.galois_field
        powers = q ** np.arange(k, dtype=np.int64)
        best, chunk = self.n, 2**15
        for start in range(1, total, chunk):
            messages = np.arange(start, min(total, start + chunk), dtype=np.int64)
            digits = (messages[:, None] // powers[None, :]) % q
            words = GF(digits) @ self.G.data
            best = min(best, int(np.count_nonzero(words.view(np.ndarray), axis=1).min()))
            if best == 1:
                break
        return best

    def _distance_by_columns(self, cap: Optional[int]) -> int:
        H = self.parity_check
        # Every n-k+1 columns of a rank n-k matrix are dependent
        limit = self.n - self.k + 1 if cap is None else min(cap, self.n - self.k + 1)
        scanned = 0
        for size in range(1, limit + 1):
            scanned += comb(self.n, size)
            check_limit("column subsets", scanned, settings.COLUMN_SUBSET_LIMIT)
            logger.debug("Scanning the %d column subsets of size %d", comb(self.n, size), size)
            for subset in combinations(range(self.n), size):
                if rank(H.columns(subset)) < size:
                    return size
        ensure(limit < self.n - self.k + 1, "No dependent set of n-k+1 parity-check columns")
        raise DistanceAboveCap(cap)

    def _distance_by_subset_rank(self) -> int:
        check_limit("subset-rank length", self.n, settings.SUBSET_RANK_MAX_LENGTH)
        for size in range(self.n - 1, -1, -1):
            for subset in combinations(range(self.n), size):
                if self.coord_rank(subset) < self.k:
                    return self.n - size
        raise ValidationError("The zero code has no minimum distance")

    def dependent_columns(self, size: int) -> Optional[tuple[int, ...]]:
        """
        The first set of ``size`` parity-check columns, in lexicographic order,
        that is linearly dependent, or None.
        """
        H = self.parity_check
        check_limit("column subsets", comb(self.n, size), settings.COLUMN_SUBSET_LIMIT)
        for subset in combinations(range(self.n), size):
            if rank(H.columns(subset)) < size:
                return subset
        return None
