"""Vectors, linear maps and functionals over an exact field.

Vectors are plain tuples of scalars.  A :class:`LinearMap` uses the
column-action convention: ``N(e_i) = sum_j M[j][i] e_j``, so column ``i`` of
the matrix holds the image of the ``i``-th basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import DimensionMismatch, ShapeMismatch, SingularMatrix
from .scalars import QQ, Field, format_scalar, get_field


def basis_vector(dim: int, i: int, field: Field = QQ) -> tuple:
    return tuple(field.one if j == i else field.zero for j in range(dim))


def zero_vector(dim: int, field: Field = QQ) -> tuple:
    return (field.zero,) * dim


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def vec_is_zero(v) -> bool:
    return not any(v)


def format_vector(v) -> list[str]:
    return [format_scalar(x) for x in v]


@dataclass(frozen=True)
class LinearMap:
    """A rows x cols matrix acting on column vectors."""

    matrix: tuple
    field: Field = QQ

    def __post_init__(self):
        field = get_field(self.field)
        rows = tuple(tuple(field.coerce(x) for x in row) for row in self.matrix)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatch("ragged matrix")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "matrix", rows)

    # -- construction --------------------------------------------------------

    @classmethod
    def identity(cls, dim: int, field: Field = QQ) -> LinearMap:
        field = get_field(field)
        return cls(linalg.identity(dim, field.zero, field.one), field)

    @classmethod
    def zero(cls, rows: int, cols: int | None = None, field: Field = QQ) -> LinearMap:
        field = get_field(field)
        return cls(linalg.zeros(rows, rows if cols is None else cols, field.zero), field)

    @classmethod
    def scalar(cls, c, dim: int, field: Field = QQ) -> LinearMap:
        field = get_field(field)
        c = field.coerce(c)
        return cls(linalg.identity(dim, field.zero, c), field)

    @classmethod
    def from_columns(cls, columns, field: Field = QQ) -> LinearMap:
        return cls(tuple(zip(*columns)), field)

    # -- shape ---------------------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def cols(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def dim(self) -> int:
        if self.rows != self.cols:
            raise ShapeMismatch(f"{self.rows}x{self.cols} map is not square")
        return self.rows

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def column(self, i: int) -> tuple:
        return tuple(row[i] for row in self.matrix)

    def to_field(self, field) -> LinearMap:
        field = get_field(field)
        if field is self.field:
            return self
        return LinearMap(self.matrix, field)

    # -- action and algebra --------------------------------------------------

    def apply(self, v) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for a map with {self.cols} columns")
        zero = self.field.zero
        out = []
        for row in self.matrix:
            acc = zero
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    __call__ = apply

    def __matmul__(self, other: LinearMap) -> LinearMap:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        return LinearMap(linalg.mat_mul(self.matrix, other.matrix), self.field)

    def __add__(self, other: LinearMap) -> LinearMap:
        self._same_shape(other)
        return LinearMap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)),
            self.field,
        )

    def __sub__(self, other: LinearMap) -> LinearMap:
        self._same_shape(other)
        return LinearMap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)),
            self.field,
        )

    def __neg__(self) -> LinearMap:
        return LinearMap(tuple(tuple(-a for a in r) for r in self.matrix), self.field)

    def __mul__(self, c) -> LinearMap:
        if isinstance(c, LinearMap):
            return NotImplemented
        c = self.field.coerce(c)
        return LinearMap(tuple(tuple(c * a for a in r) for r in self.matrix), self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LinearMap:
        if k < 0:
            return self.inverse() ** (-k)
        result = LinearMap.identity(self.dim, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch(
                f"shape {self.rows}x{self.cols} does not match {other.rows}x{other.cols}"
            )

    def transpose(self) -> LinearMap:
        return LinearMap(tuple(zip(*self.matrix)), self.field)

    def det(self):
        return self.field.coerce(linalg.det(self.matrix) if self.dim else 1)

    def is_invertible(self) -> bool:
        return bool(self.det())

    def inverse(self) -> LinearMap:
        if not self.is_invertible():
            raise SingularMatrix("map is not invertible")
        f = self.field
        return LinearMap(linalg.inverse(self.matrix, f.zero, f.one), f)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def commutes_with(self, other: LinearMap) -> bool:
        return self @ other == other @ self

    def formatted(self) -> list[list[str]]:
        return [[format_scalar(x) for x in row] for row in self.matrix]

    def __repr__(self):
        return f"LinearMap({self.formatted()}, field={self.field.name!r})"


@dataclass(frozen=True)
class LinearFunctional:
    """An element of the dual space, ``f(e_i) = values[i]``."""

    values: tuple
    field: Field = QQ

    def __post_init__(self):
        field = get_field(self.field)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "values", tuple(field.coerce(x) for x in self.values))

    @property
    def dim(self) -> int:
        return len(self.values)

    def __call__(self, v):
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} for a functional on dimension {self.dim}")
        acc = self.field.zero
        for a, x in zip(self.values, v):
            if a and x:
                acc = acc + a * x
        return acc

    def to_field(self, field) -> LinearFunctional:
        field = get_field(field)
        return self if field is self.field else LinearFunctional(self.values, field)

    def __repr__(self):
        return f"LinearFunctional({[format_scalar(x) for x in self.values]})"
