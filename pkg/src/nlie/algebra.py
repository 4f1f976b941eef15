"""n-Lie (Filippov) algebras given by structure constants.

Constants are stored only on strictly increasing index tuples; the full
bracket is the unique multilinear, totally antisymmetric extension.  Indices
are 0-based in code and 1-based in every file format and witness.

Fundamental objects (elements of the (n-1)-th exterior power) are sparse
dicts mapping strictly increasing (n-1)-tuples to coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations

from . import linalg
from .errors import ArityMismatch, DimensionMismatch, NotAnNLieAlgebra
from .maps import LinearMap, basis_vector
from .report import VerificationReport, one_based, scan
from .scalars import QQ, Field, get_field


def sort_sign(idx):
    """Return ``(sign, sorted_idx)``; sign is 0 when an index repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


def small_det(m):
    """Laplace expansion with zero pruning; fast for the tiny minors used here."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j, a in enumerate(m[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            sub = small_det(minor)
            if sub:
                total = total + a * sub if j % 2 == 0 else total - a * sub
    return total


def _minor(vectors, key):
    rows = []
    for v in vectors:
        row = [v[k] for k in key]
        if not any(row):
            return None
        rows.append(row)
    return rows


def wedge(vectors, dim: int) -> dict:
    """Expand ``v_1 ^ ... ^ v_k`` in the strictly increasing basis."""
    k = len(vectors)
    if k == 0:
        return {(): 1}
    supports = set()
    for v in vectors:
        supports.update(i for i, x in enumerate(v) if x)
    out = {}
    for key in combinations(sorted(supports), k):
        rows = _minor(vectors, key)
        if rows is None:
            continue
        c = small_det(rows)
        if c:
            out[key] = c
    return out


def fo_add(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + scale * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


@dataclass(frozen=True, eq=False)
class NLieAlgebra:
    """Structure constants of an n-ary antisymmetric bracket.

    Being an n-Lie algebra is not enforced; see :func:`check_filippov`.
    The same type doubles as an unvalidated bracket candidate.
    """

    arity: int
    dim: int
    constants: dict = dc_field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        if self.arity < 2:
            raise ArityMismatch(f"arity must be at least 2, got {self.arity}")
        if self.dim < 0:
            raise DimensionMismatch("negative dimension")
        fld = get_field(self.field)
        clean = {}
        for key, vec in self.constants.items():
            key = tuple(key)
            if len(key) != self.arity:
                raise ArityMismatch(f"key {one_based(key)} does not have {self.arity} entries")
            if any(not 0 <= k < self.dim for k in key) or list(key) != sorted(set(key)):
                raise DimensionMismatch(f"key {one_based(key)} is not strictly increasing in [1, {self.dim}]")
            if len(vec) != self.dim:
                raise DimensionMismatch(f"value at {one_based(key)} has length {len(vec)}, expected {self.dim}")
            vec = tuple(fld.coerce(x) for x in vec)
            if any(vec):
                clean[key] = vec
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "constants", clean)

    @classmethod
    def from_table(cls, arity: int, dim: int, table: dict, field: Field = QQ) -> NLieAlgebra:
        """Build from ``{(i1, ..., in): {j: c}}`` with 1-based indices.

        Keys may come in any order; the sign of the sorting permutation is
        applied.
        """
        fld = get_field(field)
        acc = {}
        for key, value in table.items():
            sign, skey = sort_sign(k - 1 for k in key)
            if not sign:
                continue
            vec = acc.setdefault(skey, [fld.zero] * dim)
            items = value.items() if isinstance(value, dict) else enumerate(value, start=1)
            for j, c in items:
                vec[j - 1] = vec[j - 1] + sign * fld.coerce(c)
        return cls(arity, dim, acc, fld)

    def __eq__(self, other):
        if not isinstance(other, NLieAlgebra):
            return NotImplemented
        return (self.arity, self.dim, self.field, self.constants) == (
            other.arity, other.dim, other.field, other.constants)

    def __hash__(self):
        return hash((self.arity, self.dim, tuple(sorted(self.constants.items()))))

    def __repr__(self):
        return f"NLieAlgebra(arity={self.arity}, dim={self.dim}, nonzero={len(self.constants)}, field={self.field.name!r})"

    @property
    def is_abelian(self) -> bool:
        return not self.constants

    def basis(self, i: int) -> tuple:
        return basis_vector(self.dim, i, self.field)

    @cached_property
    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis_bracket(self, idx) -> tuple:
        """Bracket of basis vectors given by a tuple of 0-based indices."""
        sign, key = sort_sign(idx)
        if not sign:
            return self.zero
        vec = self.constants.get(key)
        if vec is None:
            return self.zero
        return vec if sign > 0 else tuple(-x for x in vec)

    def bracket(self, *args) -> tuple:
        if len(args) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(args)}")
        for a in args:
            if len(a) != self.dim:
                raise DimensionMismatch(f"argument of length {len(a)} in dimension {self.dim}")
        out = list(self.zero)
        for key, vec in self.constants.items():
            rows = _minor(args, key)
            if rows is None:
                continue
            c = small_det(rows)
            if c:
                for j, x in enumerate(vec):
                    if x:
                        out[j] = out[j] + c * x
        return tuple(out)

    def bracket_with(self, idx, pos: int, v) -> tuple:
        """Bracket of basis vectors ``idx`` with slot ``pos`` replaced by ``v``."""
        out = list(self.zero)
        idx = list(idx)
        for j, c in enumerate(v):
            if c:
                idx[pos] = j
                for r, x in enumerate(self.basis_bracket(idx)):
                    if x:
                        out[r] = out[r] + c * x
        return tuple(out)

    @cached_property
    def fundamental_basis(self) -> list:
        return list(combinations(range(self.dim), self.arity - 1))

    @cached_property
    def _ad_columns(self) -> dict:
        return {
            key: [self.basis_bracket(key + (j,)) for j in range(self.dim)]
            for key in self.fundamental_basis
        }

    def ad_matrix(self, key) -> tuple:
        """Matrix (column-action) of ``ad`` for a basis fundamental object."""
        cols = self._ad_columns[tuple(key)]
        return tuple(tuple(col[r] for col in cols) for r in range(self.dim))

    def ad(self, X: dict, y) -> tuple:
        """``X o y`` for a fundamental object ``X`` given as a sparse dict."""
        out = list(self.zero)
        for key, c in X.items():
            cols = self._ad_columns[key]
            for j, yj in enumerate(y):
                if yj:
                    for r, x in enumerate(cols[j]):
                        if x:
                            out[r] = out[r] + c * yj * x
        return tuple(out)

    def circle(self, X: dict, Y: dict) -> dict:
        """Bilinear product of fundamental objects."""
        out = {}
        for kx, cx in X.items():
            for ky, cy in Y.items():
                for key, c in self._circle_basis[(kx, ky)].items():
                    w = out.get(key, 0) + cx * cy * c
                    if w:
                        out[key] = w
                    else:
                        out.pop(key, None)
        return out

    @cached_property
    def _circle_basis(self) -> dict:
        table = {}
        for kx in self.fundamental_basis:
            cols = self._ad_columns[kx]
            for ky in self.fundamental_basis:
                acc = {}
                for i, yi in enumerate(ky):
                    vecs = [self.basis(y) for y in ky]
                    vecs[i] = cols[yi]
                    acc = fo_add(acc, wedge(vecs, self.dim))
                table[(kx, ky)] = acc
        return table


def _check_map(alg: NLieAlgebra, N: LinearMap) -> LinearMap:
    if N.rows != alg.dim or N.cols != alg.dim:
        raise DimensionMismatch(f"{N.rows}x{N.cols} map on a {alg.dim}-dimensional algebra")
    return N.to_field(alg.field)


def increasing_tuples(alg: NLieAlgebra):
    return combinations(range(alg.dim), alg.arity)


# -- operations ---------------------------------------------------------------


def bracket_eval(alg: NLieAlgebra, args) -> tuple:
    return alg.bracket(*args)


def ad_action(alg: NLieAlgebra, X, y) -> tuple:
    """``ad_{x_1..x_{n-1}} y`` for a sequence of n-1 vectors."""
    X = list(X)
    if len(X) != alg.arity - 1:
        raise ArityMismatch(f"expected {alg.arity - 1} vectors, got {len(X)}")
    return alg.bracket(*X, y)


def circle_product(alg: NLieAlgebra, X: dict, Y: dict) -> dict:
    for key in list(X) + list(Y):
        if len(key) != alg.arity - 1 or any(not 0 <= k < alg.dim for k in key):
            raise DimensionMismatch(f"{one_based(key)} is not a basis fundamental object")
    return alg.circle(X, Y)


def check_filippov(alg: NLieAlgebra) -> VerificationReport:
    """Exhaustive check of the Filippov identity on basis vectors."""

    def cases():
        for X in alg.fundamental_basis:
            Xd = {X: 1}
            for Y in increasing_tuples(alg):
                lhs = alg.ad(Xd, alg.basis_bracket(Y))
                rhs = list(alg.zero)
                for i, yi in enumerate(Y):
                    t = alg.bracket_with(Y, i, alg.ad(Xd, alg.basis(yi)))
                    rhs = [a + b for a, b in zip(rhs, t)]
                yield {"x": one_based(X), "y": one_based(Y)}, lhs, tuple(rhs)

    return scan("filippov", cases())


def check_fi3(alg: NLieAlgebra) -> VerificationReport:
    """``X o (Y o z) - Y o (X o z) = (X o Y) o z`` on basis arguments."""

    def cases():
        for X in alg.fundamental_basis:
            Xd = {X: 1}
            for Y in alg.fundamental_basis:
                Yd = {Y: 1}
                XY = alg.circle(Xd, Yd)
                for z in range(alg.dim):
                    ez = alg.basis(z)
                    lhs = tuple(a - b for a, b in zip(alg.ad(Xd, alg.ad(Yd, ez)), alg.ad(Yd, alg.ad(Xd, ez))))
                    rhs = alg.ad(XY, ez)
                    yield {"X": one_based(X), "Y": one_based(Y), "z": z + 1}, lhs, rhs

    return scan("fi3", cases())


def check_leibniz_fundamental(alg: NLieAlgebra) -> VerificationReport:
    """Leibniz identity for the product of fundamental objects."""
    if not check_filippov(alg).ok:
        raise NotAnNLieAlgebra("the Leibniz property is only claimed for n-Lie algebras")

    def _fmt(fo):
        return {"+".join(str(k + 1) for k in key): c for key, c in sorted(fo.items())}

    def cases():
        basis = alg.fundamental_basis
        for X in basis:
            Xd = {X: 1}
            for Y in basis:
                Yd = {Y: 1}
                XY = alg.circle(Xd, Yd)
                for Z in basis:
                    Zd = {Z: 1}
                    lhs = alg.circle(Xd, alg.circle(Yd, Zd))
                    rhs = fo_add(alg.circle(XY, Zd), alg.circle(Yd, alg.circle(Xd, Zd)))
                    where = {"X": one_based(X), "Y": one_based(Y), "Z": one_based(Z)}
                    if lhs != rhs:
                        yield where, _fmt(lhs), _fmt(rhs)
                    else:
                        yield where, 0, 0

    return scan("leibniz", cases())


def _derivation_defect(alg: NLieAlgebra, D: LinearMap, idx):
    lhs = D.apply(alg.basis_bracket(idx))
    rhs = list(alg.zero)
    for i, k in enumerate(idx):
        t = alg.bracket_with(idx, i, D.column(k))
        rhs = [a + b for a, b in zip(rhs, t)]
    return lhs, tuple(rhs)


def is_derivation(alg: NLieAlgebra, D: LinearMap) -> VerificationReport:
    D = _check_map(alg, D)

    def cases():
        for idx in increasing_tuples(alg):
            lhs, rhs = _derivation_defect(alg, D, idx)
            yield {"at": one_based(idx)}, lhs, rhs

    return scan("derivation", cases())


def matrix_units(dim: int, field: Field):
    """The d^2 elementary maps ``E_ji`` sending ``e_i`` to ``e_j``."""
    units = []
    for j in range(dim):
        for i in range(dim):
            m = [[field.zero] * dim for _ in range(dim)]
            m[j][i] = field.one
            units.append(LinearMap(m, field))
    return units


def combine_maps(coeffs, maps, dim: int, field: Field) -> LinearMap:
    acc = [[field.zero] * dim for _ in range(dim)]
    for c, m in zip(coeffs, maps):
        if c:
            for r in range(dim):
                for s in range(dim):
                    if m.matrix[r][s]:
                        acc[r][s] = acc[r][s] + c * m.matrix[r][s]
    return LinearMap(acc, field)


def derivation_space(alg: NLieAlgebra) -> list[LinearMap]:
    """Basis of Der(g) by exact elimination over the matrix units."""
    fld = alg.field
    units = matrix_units(alg.dim, fld)
    tuples = list(increasing_tuples(alg))

    def defect(E):
        out = []
        for idx in tuples:
            lhs, rhs = _derivation_defect(alg, E, idx)
            out.extend(a - b for a, b in zip(lhs, rhs))
        return out

    if not tuples:
        return units
    sols = linalg.solve_linear_span(units, defect, fld.zero, fld.one)
    return [combine_maps(c, units, alg.dim, fld) for c in sols]


def is_homomorphism(F: LinearMap, src: NLieAlgebra, dst: NLieAlgebra) -> VerificationReport:
    if src.arity != dst.arity:
        raise ArityMismatch(f"arity {src.arity} vs {dst.arity}")
    if F.rows != dst.dim or F.cols != src.dim:
        raise DimensionMismatch(f"{F.rows}x{F.cols} map from dimension {src.dim} to {dst.dim}")
    F = F.to_field(dst.field)

    def cases():
        for idx in increasing_tuples(src):
            lhs = F.apply(src.basis_bracket(idx))
            rhs = dst.bracket(*(F.column(k) for k in idx))
            yield {"at": one_based(idx)}, lhs, rhs

    return scan("homomorphism", cases())
