"""
Dense linear algebra over ``FieldSpec`` fields and the structured matrices used
by the constructions: Moore matrices, Vandermonde matrices and block layouts.

Matrices wrap a 2-D ``galois.FieldArray``; elimination, rank and products are
``galois``'s own (first nonzero pivoting, deterministic).
"""

import logging

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import galois
import numpy as np

from django.core.exceptions import ValidationError

from gf.fields import FieldElement, FieldSpec, element_order_key

logger = logging.getLogger(__name__)


def _integers(values) -> np.ndarray:
    if isinstance(values, galois.FieldArray):
        values = values.view(np.ndarray)
    return np.asarray(values, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class MatrixGF:
    """
    A dense ``rows x cols`` matrix over ``spec``.
    """

    spec: FieldSpec
    data: galois.FieldArray

    def __post_init__(self):
        data = self.data
        if not isinstance(data, self.spec.galois_field):
            data = self.spec.galois_field(_integers(data))
        if data.ndim != 2:
            raise ValidationError(f"A matrix must be 2-dimensional, got shape {data.shape}")
        object.__setattr__(self, "data", data)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __eq__(self, other):
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"MatrixGF({self.rows}x{self.cols} over {self.spec})"

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        self._check_spec(other)
        if self.cols != other.rows:
            raise ValidationError(f"Can't multiply {self.shape} by {other.shape}")
        if 0 in (self.rows, self.cols, other.cols):
            return zeros(self.spec, self.rows, other.cols)
        return MatrixGF(self.spec, self.data @ other.data)

    def _check_spec(self, other: "MatrixGF"):
        if other.spec != self.spec:
            raise ValidationError(f"Matrices over {self.spec} and {other.spec} can't be combined")

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement.from_int(self.spec, int(self.data[i, j]))

    def to_integers(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def to_elements(self) -> list[list[FieldElement]]:
        return [[FieldElement.from_int(self.spec, int(x)) for x in row] for row in self.data]

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.spec, self.data.T.copy())

    def columns(self, indices: Iterable[int]) -> "MatrixGF":
        """
        The submatrix on the given (0-based) columns, in the given order.
        """
        indices = list(indices)
        return MatrixGF(self.spec, self.data[:, indices].reshape(self.rows, len(indices)))

    def row_slice(self, indices: Iterable[int]) -> "MatrixGF":
        indices = list(indices)
        return MatrixGF(self.spec, self.data[indices, :].reshape(len(indices), self.cols))

    def is_zero(self) -> bool:
        return not np.count_nonzero(self.data.view(np.ndarray))


def zeros(spec: FieldSpec, rows: int, cols: int) -> MatrixGF:
    return MatrixGF(spec, spec.galois_field.Zeros((rows, cols)))


def identity(spec: FieldSpec, size: int) -> MatrixGF:
    return MatrixGF(spec, spec.galois_field.Identity(size))


def from_elements(spec: FieldSpec, rows: Sequence[Sequence[FieldElement | int]]) -> MatrixGF:
    """
    Builds a matrix from rows of elements or of integer representations.
    """
    values = []
    for row in rows:
        values.append([])
        for x in row:
            if isinstance(x, FieldElement):
                if x.spec != spec:
                    raise ValidationError(f"Element of {x.spec} in a matrix over {spec}")
                x = x.value
            values[-1].append(int(x))
    width = len(values[0]) if values else 0
    if any(len(row) != width for row in values):
        raise ValidationError("All the rows of a matrix must have the same length")
    return MatrixGF(spec, np.array(values, dtype=np.int64).reshape(len(values), width))


def embed(matrix: MatrixGF, spec: FieldSpec) -> MatrixGF:
    """
    Injects a matrix over the prime field GF(p) into the extension ``spec`` of
    the same characteristic (constant polynomials keep their integer form).
    """
    if matrix.spec == spec:
        return matrix
    if matrix.spec.e != 1 or matrix.spec.p != spec.p:
        raise ValidationError(f"Can't embed a matrix over {matrix.spec} into {spec}")
    return MatrixGF(spec, _integers(matrix.data))


def rank(matrix: MatrixGF) -> int:
    """
    Row rank of the matrix by Gaussian elimination; the input isn't modified.

    Returns
    -------
    int
        The rank, between 0 and ``min(rows, cols)``.
    """
    if 0 in matrix.shape:
        return 0
    return int(np.linalg.matrix_rank(matrix.data))


def row_basis(matrix: MatrixGF) -> MatrixGF:
    """
    The nonzero rows of the reduced row echelon form, a basis of the row space.
    """
    if 0 in matrix.shape:
        return zeros(matrix.spec, 0, matrix.cols)
    reduced = matrix.data.row_reduce()
    nonzero = [i for i, row in enumerate(reduced.view(np.ndarray)) if np.count_nonzero(row)]
    return MatrixGF(matrix.spec, reduced[nonzero, :].reshape(len(nonzero), matrix.cols))


def kernel(matrix: MatrixGF) -> MatrixGF:
    """
    Basis of the right null space: ``cols - rank`` independent rows ``x`` with
    ``matrix @ x.T == 0``.

    The basis is read off the reduced row echelon form, one row per non-pivot
    column.
    """
    spec, cols = matrix.spec, matrix.cols
    reduced = row_basis(matrix)
    GF = spec.galois_field
    pivots = [int(np.flatnonzero(reduced.data[i])[0]) for i in range(reduced.rows)]
    free = [j for j in range(cols) if j not in pivots]
    basis = GF.Zeros((len(free), cols))
    for row, j in enumerate(free):
        basis[row, j] = 1
        for i, pivot in enumerate(pivots):
            basis[row, pivot] = -reduced.data[i, j]
    return MatrixGF(spec, basis)


def moore_matrix(points: Sequence[FieldElement], h: int, q: int) -> MatrixGF:
    """
    The ``h x |points|`` Moore matrix whose entry (i, j) is ``points[j]^(q^i)``.

    Parameters
    ----------
    points: Sequence[FieldElement]
        Elements of one field, in non-descending ``element_order_key`` order.
    h: int
        The number of rows, at least 1.
    q: int
        The size of the base field, a power of the characteristic.

    Returns
    -------
    MatrixGF
        The Moore matrix.
    """
    if h < 1:
        raise ValidationError(f"A Moore matrix needs at least one row, got h={h}")
    if not points:
        raise ValidationError("A Moore matrix needs at least one point")
    spec = points[0].spec
    if any(x.spec != spec for x in points):
        raise ValidationError("All the points of a Moore matrix must share a field")
    keys = [element_order_key(x) for x in points]
    if keys != sorted(keys):
        raise ValidationError("The points of a Moore matrix must be sorted by element order")
    power, s = q, 0
    while power > 1 and power % spec.p == 0:
        power //= spec.p
        s += 1
    if power != 1 or s == 0:
        raise ValidationError(f"{q} isn't a power of the characteristic {spec.p}")

    GF = spec.galois_field
    data = GF.Zeros((h, len(points)))
    data[0] = GF([x.value for x in points])
    for i in range(1, h):
        data[i] = data[i - 1] ** q
    return MatrixGF(spec, data)


def vandermonde(points: Sequence[FieldElement], rows: int) -> MatrixGF:
    """
    The ``rows x |points|`` Vandermonde matrix ``points[j]^i``, row 0 all ones.
    """
    if rows < 1:
        raise ValidationError(f"A Vandermonde matrix needs at least one row, got {rows}")
    if not points:
        raise ValidationError("A Vandermonde matrix needs at least one point")
    spec = points[0].spec
    values = [x.value for x in points]
    if any(x.spec != spec for x in points):
        raise ValidationError("All the points of a Vandermonde matrix must share a field")
    if len(set(values)) != len(values):
        raise ValidationError("The points of a Vandermonde matrix must be distinct")
    GF = spec.galois_field
    base = GF(values)
    data = GF.Ones((rows, len(values)))
    for i in range(1, rows):
        data[i] = data[i - 1] * base
    return MatrixGF(spec, data)


def block_assemble(
    layout: Sequence[Sequence[Optional[MatrixGF]]],
    heights: Optional[Sequence[int]] = None,
    widths: Optional[Sequence[int]] = None,
) -> MatrixGF:
    """
    Assembles a grid of blocks into a dense matrix, absent blocks being zero.

    Block-row heights and block-column widths are read from the present blocks;
    ``heights`` and ``widths`` are only needed for a block row or column with no
    present block at all.
    """
    blocks = [block for row in layout for block in row if block is not None]
    if not blocks:
        raise ValidationError("A block layout needs at least one block")
    spec = blocks[0].spec
    n_rows, n_cols = len(layout), len(layout[0])
    if any(len(row) != n_cols for row in layout):
        raise ValidationError("Every block row must have the same number of blocks")
    heights = list(heights) if heights is not None else [None] * n_rows
    widths = list(widths) if widths is not None else [None] * n_cols
    if len(heights) != n_rows or len(widths) != n_cols:
        raise ValidationError("The explicit heights and widths must match the layout")

    for i, row in enumerate(layout):
        for j, block in enumerate(row):
            if block is None:
                continue
            if block.spec != spec:
                raise ValidationError("All the blocks must share a field")
            if heights[i] is None:
                heights[i] = block.rows
            if widths[j] is None:
                widths[j] = block.cols
            if (block.rows, block.cols) != (heights[i], widths[j]):
                raise ValidationError(
                    f"Block ({i}, {j}) is {block.rows}x{block.cols}, "
                    f"expected {heights[i]}x{widths[j]}"
                )
    if None in heights or None in widths:
        raise ValidationError("A block row or column has no block to read its size from")

    data = spec.galois_field.Zeros((sum(heights), sum(widths)))
    top = 0
    for i, row in enumerate(layout):
        left = 0
        for j, block in enumerate(row):
            if block is not None:
                data[top : top + heights[i], left : left + widths[j]] = block.data
            left += widths[j]
        top += heights[i]
    return MatrixGF(spec, data)


def vstack(matrices: Sequence[MatrixGF]) -> MatrixGF:
    return block_assemble([[m] for m in matrices])


def hstack(matrices: Sequence[MatrixGF]) -> MatrixGF:
    return block_assemble([list(matrices)])
