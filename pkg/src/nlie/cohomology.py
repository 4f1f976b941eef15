"""Representations, semidirect products, cochains and the coboundary.

A degree-p cochain takes p-1 fundamental objects and one vector.  Values are
stored on basis keys ``(K_1, ..., K_{p-1}, z)`` where each ``K`` is a strictly
increasing (n-1)-tuple and ``z`` a basis index, all 0-based.  Absent keys are
zero.

The coboundary is written once, as a generator of linear terms
``(scale, rho_key, source_key)``.  Applying it to a cochain and assembling
its sparse matrix (used for the square-zero check) both consume that one
generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations, product

from .algebra import NLieAlgebra, check_filippov, fo_add, sort_sign, wedge
from .errors import (
    DegreeMismatch,
    DimensionMismatch,
    InvalidRepresentation,
    NotAnNLieAlgebra,
    ShapeMismatch,
)
from .report import VerificationReport, one_based, scan
from .scalars import get_field


def _mat_vec(m, v, zero):
    out = []
    for row in m:
        acc = zero
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return tuple(out)


def _mat_mul(a, b, zero):
    cols = list(zip(*b))
    return tuple(tuple(_dot(r, c, zero) for c in cols) for r in a)


def _dot(r, c, zero):
    acc = zero
    for x, y in zip(r, c):
        if x and y:
            acc = acc + x * y
    return acc


def _mat_lin(terms, size, zero):
    """``sum c * M`` over ``(c, M)`` pairs."""
    acc = [[zero] * size for _ in range(size)]
    for c, m in terms:
        if not c:
            continue
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                if x:
                    acc[i][j] = acc[i][j] + c * x
    return tuple(tuple(r) for r in acc)


@dataclass(frozen=True, eq=False)
class Representation:
    """``rho`` on basis (n-1)-tuples, extended antisymmetrically."""

    algebra: NLieAlgebra
    vdim: int
    rho: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        alg = self.algebra
        fld = alg.field
        clean = {}
        for key, m in self.rho.items():
            key = tuple(key)
            if len(key) != alg.arity - 1 or list(key) != sorted(set(key)) or any(
                not 0 <= k < alg.dim for k in key
            ):
                raise DimensionMismatch(f"representation key {one_based(key)} is not a strictly increasing (n-1)-tuple")
            if len(m) != self.vdim or any(len(r) != self.vdim for r in m):
                raise ShapeMismatch(f"matrix at {one_based(key)} is not {self.vdim}x{self.vdim}")
            m = tuple(tuple(fld.coerce(x) for x in r) for r in m)
            if any(any(r) for r in m):
                clean[key] = m
        object.__setattr__(self, "rho", clean)

    @property
    def field(self):
        return self.algebra.field

    @cached_property
    def zero_matrix(self):
        z = self.field.zero
        return tuple((z,) * self.vdim for _ in range(self.vdim))

    def matrix(self, idx):
        """``rho`` of basis vectors in any order (0-based)."""
        sign, key = sort_sign(idx)
        if not sign:
            return self.zero_matrix
        m = self.rho.get(key)
        if m is None:
            return self.zero_matrix
        return m if sign > 0 else tuple(tuple(-x for x in r) for r in m)

    def of_fundamental(self, X: dict):
        return _mat_lin(((c, self.matrix(k)) for k, c in X.items()), self.vdim, self.field.zero)

    def of_vectors(self, vectors):
        return self.of_fundamental(wedge(list(vectors), self.algebra.dim))

    def act(self, idx, v) -> tuple:
        return _mat_vec(self.matrix(idx), v, self.field.zero)


def adjoint_rep(alg: NLieAlgebra) -> Representation:
    return Representation(alg, alg.dim, {k: alg.ad_matrix(k) for k in alg.fundamental_basis})


def zero_rep(alg: NLieAlgebra, vdim: int) -> Representation:
    return Representation(alg, vdim, {})


def check_representation(rep: Representation) -> VerificationReport:
    if not check_filippov(rep.algebra).ok:
        raise NotAnNLieAlgebra("representations are defined over n-Lie algebras only")
    return representation_axioms(rep)


def representation_axioms(rep: Representation) -> VerificationReport:
    """Both representation axioms on basis tuples, with no precondition."""
    alg = rep.algebra
    zero = alg.field.zero
    n = alg.arity

    def commutators():
        for X in alg.fundamental_basis:
            for Y in alg.fundamental_basis:
                rx, ry = rep.matrix(X), rep.matrix(Y)
                lhs = _mat_lin([(1, _mat_mul(rx, ry, zero)), (-1, _mat_mul(ry, rx, zero))], rep.vdim, zero)
                rhs = rep.of_fundamental(alg.circle({X: 1}, {Y: 1}))
                yield {"X": one_based(X), "Y": one_based(Y)}, lhs, rhs

    def brackets():
        for xs in combinations(range(alg.dim), n - 2):
            for ys in combinations(range(alg.dim), n):
                inner = alg.basis_bracket(ys)
                lhs = _mat_lin(
                    ((c, rep.matrix(xs + (j,))) for j, c in enumerate(inner)), rep.vdim, zero
                )
                terms = []
                for i in range(n):
                    rest = ys[:i] + ys[i + 1:]
                    sign = 1 if (n - 1 - i) % 2 == 0 else -1
                    terms.append((sign, _mat_mul(rep.matrix(rest), rep.matrix(xs + (ys[i],)), zero)))
                rhs = _mat_lin(terms, rep.vdim, zero)
                yield {"x": one_based(xs), "y": one_based(ys)}, lhs, rhs

    return VerificationReport.combine(
        "representation",
        [scan("commutator", commutators()), scan("bracket", brackets())],
    )


def require_representation(rep: Representation):
    report = check_representation(rep)
    if not report.ok:
        raise InvalidRepresentation("representation axioms fail", report.witness)


def semidirect_product(alg: NLieAlgebra, rep: Representation) -> NLieAlgebra:
    """The n-Lie algebra on ``g + V``; basis of g first, then V."""
    require_representation(rep)
    d, k, n = alg.dim, rep.vdim, alg.arity
    fld = alg.field
    total = d + k
    constants = {}
    for key, vec in alg.constants.items():
        constants[key] = tuple(vec) + (fld.zero,) * k
    for X in alg.fundamental_basis:
        m = rep.matrix(X)
        for j in range(k):
            image = tuple(m[r][j] for r in range(k))
            if any(image):
                constants[X + (d + j,)] = (fld.zero,) * d + image
    return NLieAlgebra(n, total, constants, fld)


# -- cochains -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Cochain:
    """Degree-p cochain with values in a space of dimension ``vdim``."""

    degree: int
    vdim: int
    values: dict = dc_field(default_factory=dict)
    field: object = None

    def __post_init__(self):
        fld = get_field(self.field or "Q")
        object.__setattr__(self, "field", fld)
        clean = {}
        for key, v in self.values.items():
            if len(key) != self.degree:
                raise DegreeMismatch(f"key of length {len(key)} in a degree-{self.degree} cochain")
            if len(v) != self.vdim:
                raise DimensionMismatch(f"value of length {len(v)}, expected {self.vdim}")
            v = tuple(fld.coerce(x) for x in v)
            if any(v):
                clean[tuple(key)] = v
        object.__setattr__(self, "values", clean)

    @classmethod
    def zero(cls, degree, vdim, field=None):
        return cls(degree, vdim, {}, field)

    @classmethod
    def from_nary(cls, alg: NLieAlgebra) -> Cochain:
        """View an n-ary antisymmetric map as a degree-2 cochain ``(X, z)``."""
        values = {}
        for X in alg.fundamental_basis:
            for z in range(alg.dim):
                v = alg.basis_bracket(X + (z,))
                if any(v):
                    values[(X, z)] = v
        return cls(2, alg.dim, values, alg.field)

    def to_nary(self, arity: int, dim: int) -> NLieAlgebra:
        if self.degree != 2:
            raise DegreeMismatch("only degree-2 cochains define n-ary brackets")
        constants = {}
        for (X, z), v in self.values.items():
            if z > X[-1]:
                constants[X + (z,)] = v
        return NLieAlgebra(arity, dim, constants, self.field)

    def __call__(self, key) -> tuple:
        v = self.values.get(key)
        return v if v is not None else (self.field.zero,) * self.vdim

    def basis_eval(self, fos, z: int) -> tuple:
        """Evaluate on basis tuples given in any order (signs applied)."""
        sign = 1
        keys = []
        for K in fos:
            s, k = sort_sign(K)
            if not s:
                return (self.field.zero,) * self.vdim
            sign *= s
            keys.append(k)
        v = self(tuple(keys) + (z,))
        return v if sign > 0 else tuple(-x for x in v)

    def evaluate(self, fos, z) -> tuple:
        """Multilinear evaluation on fundamental-object dicts and a vector."""
        out = [self.field.zero] * self.vdim
        for combo in product(*(list(F.items()) for F in fos)):
            c = 1
            for _, cf in combo:
                c = c * cf
            keys = tuple(k for k, _ in combo)
            for j, zj in enumerate(z):
                if zj:
                    v = self.values.get(keys + (j,))
                    if v is not None:
                        for r, x in enumerate(v):
                            if x:
                                out[r] = out[r] + c * zj * x
        return tuple(out)

    def __add__(self, other: Cochain) -> Cochain:
        return self.combine(other, 1)

    def __sub__(self, other: Cochain) -> Cochain:
        return self.combine(other, -1)

    def combine(self, other: Cochain, scale) -> Cochain:
        if (self.degree, self.vdim) != (other.degree, other.vdim):
            raise DegreeMismatch("cochains of different shape")
        out = dict(self.values)
        for k, v in other.values.items():
            base = out.get(k, (self.field.zero,) * self.vdim)
            out[k] = tuple(a + scale * b for a, b in zip(base, v))
        return Cochain(self.degree, self.vdim, out, self.field)

    def scale(self, c) -> Cochain:
        return Cochain(self.degree, self.vdim, {k: tuple(c * x for x in v) for k, v in self.values.items()}, self.field)

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree, self.vdim, self.values) == (other.degree, other.vdim, other.values)

    __hash__ = None

    def __repr__(self):
        return f"Cochain(degree={self.degree}, vdim={self.vdim}, nonzero={len(self.values)})"


def cochain_keys(alg: NLieAlgebra, degree: int):
    fb = alg.fundamental_basis
    for Ks in product(fb, repeat=degree - 1):
        for z in range(alg.dim):
            yield Ks + (z,)


def _coboundary_terms(alg: NLieAlgebra, p: int, key):
    """Linear terms of ``(delta a)(X_1..X_p, z)`` for a basis key.

    Yields ``(scale, rho_key, source_key)`` meaning
    ``scale * rho(rho_key) a(source_key)``; ``rho_key`` None is the identity.
    """
    Xs, z = list(key[:-1]), key[-1]
    n = alg.arity
    # i, k below are 1-based to keep the sign exponents readable
    for i in range(1, p + 1):
        Xi = {Xs[i - 1]: 1}
        for k in range(i + 1, p + 1):
            for K, c in alg.circle(Xi, {Xs[k - 1]: 1}).items():
                rest = list(Xs)
                rest[k - 1] = K
                del rest[i - 1]
                yield (-1) ** i * c, None, tuple(rest) + (z,)
    for i in range(1, p + 1):
        rest = tuple(Xs[:i - 1] + Xs[i:])
        for j, c in enumerate(alg._ad_columns[Xs[i - 1]][z]):
            if c:
                yield (-1) ** i * c, None, rest + (j,)
    for i in range(1, p + 1):
        rest = tuple(Xs[:i - 1] + Xs[i:])
        yield (-1) ** (i + 1), Xs[i - 1], rest + (z,)
    last = Xs[-1]
    for i in range(1, n):
        sign, rk = sort_sign(last[:i - 1] + last[i:] + (z,))
        if sign:
            yield (-1) ** (n + p - i + 1) * sign, rk, tuple(Xs[:-1]) + (last[i - 1],)


def _check_rep(alg, rep):
    if rep.algebra is not alg and rep.algebra != alg:
        raise InvalidRepresentation("representation belongs to a different algebra")


def coboundary(alg: NLieAlgebra, rep: Representation, c: Cochain) -> Cochain:
    _check_rep(alg, rep)
    if c.vdim != rep.vdim:
        raise DimensionMismatch(f"cochain values of length {c.vdim} for a {rep.vdim}-dimensional module")
    p = c.degree
    zero = alg.field.zero
    values = {}
    if c.values:
        for key in cochain_keys(alg, p + 1):
            acc = [zero] * rep.vdim
            for s, rk, src in _coboundary_terms(alg, p, key):
                v = c.values.get(src)
                if v is None:
                    continue
                if rk is not None:
                    v = rep.act(rk, v)
                for r, x in enumerate(v):
                    if x:
                        acc[r] = acc[r] + s * x
            if any(acc):
                values[key] = tuple(acc)
    return Cochain(p + 1, rep.vdim, values, alg.field)


def coboundary_matrix(alg: NLieAlgebra, rep: Representation, p: int) -> dict:
    """Sparse matrix of the coboundary on degree-p cochains.

    Rows and columns are ``(key, component)`` pairs; the result maps each
    row to ``{column: coefficient}``.
    """
    rows = {}
    k = rep.vdim
    for key in cochain_keys(alg, p + 1):
        for s, rk, src in _coboundary_terms(alg, p, key):
            if rk is None:
                entries = ((r, r, s) for r in range(k))
            else:
                m = rep.matrix(rk)
                entries = ((r, q, s * m[r][q]) for r in range(k) for q in range(k) if m[r][q])
            for r, q, v in entries:
                row = rows.setdefault((key, r), {})
                w = row.get((src, q), 0) + v
                if w:
                    row[(src, q)] = w
                else:
                    row.pop((src, q), None)
    return {r: cols for r, cols in rows.items() if cols}


def check_d_squared(alg: NLieAlgebra, rep: Representation, p: int) -> VerificationReport:
    """Exact check that the coboundary squares to zero on degree-p cochains.

    Composing the two sparse matrices is equivalent to testing every basis
    cochain at once.
    """
    require_representation(rep)
    first = coboundary_matrix(alg, rep, p)
    second = coboundary_matrix(alg, rep, p + 1)
    count = 0
    for row, cols in second.items():
        acc = {}
        for mid, a in cols.items():
            for src, b in first.get(mid, {}).items():
                w = acc.get(src, 0) + a * b
                if w:
                    acc[src] = w
                else:
                    acc.pop(src, None)
        count += 1
        if acc:
            (src_key, src_comp), coeff = next(iter(acc.items()))
            (out_key, out_comp) = row
            witness = {
                "source": _key_repr(src_key) + [src_comp + 1],
                "target": _key_repr(out_key) + [out_comp + 1],
                "lhs": coeff,
                "rhs": 0,
            }
            return VerificationReport(f"d_squared[p={p}]", False, witness, count)
    return VerificationReport(f"d_squared[p={p}]", True, None, count)


def _key_repr(key):
    return [one_based(K) for K in key[:-1]] + [key[-1] + 1]


def nr_bracket(alg: NLieAlgebra, a: Cochain, b: Cochain) -> Cochain:
    """Nijenhuis-Richardson bracket of two n-ary cochains, a degree-3 cochain."""
    if a.degree != 2 or b.degree != 2:
        raise DegreeMismatch("the bracket takes two degree-2 (n-ary) cochains")
    if a.vdim != alg.dim or b.vdim != alg.dim:
        raise DimensionMismatch("n-ary cochains must take values in the algebra")
    values = {}
    zero = alg.field.zero
    if a.values and b.values:
        for key in cochain_keys(alg, 3):
            X, Y, z = key
            acc = [zero] * alg.dim
            for sgn, v in _nr_terms(alg, a, b, X, Y, z):
                for r, x in enumerate(v):
                    if x:
                        acc[r] = acc[r] + sgn * x
            if any(acc):
                values[key] = tuple(acc)
    return Cochain(3, alg.dim, values, alg.field)


def _nr_terms(alg, a, b, X, Y, z):
    def nest(outer, inner, P, Q):
        return outer.evaluate([{P: 1}], inner((Q, z)))

    def twisted(outer, inner):
        # outer(inner(X, .) o Y, z)
        fo = {}
        for k in range(len(Y)):
            vecs = [alg.basis(y) for y in Y]
            vecs[k] = inner((X, Y[k]))
            fo = fo_add(fo, wedge(vecs, alg.dim))
        return outer.evaluate([fo], alg.basis(z))

    yield 1, nest(a, b, X, Y)
    yield -1, nest(a, b, Y, X)
    yield 1, nest(b, a, X, Y)
    yield -1, nest(b, a, Y, X)
    yield -1, twisted(a, b)
    yield -1, twisted(b, a)

