"""Building higher brackets from lower ones and from commutative algebras.

* an (n+1)-ary bracket from an n-Lie algebra and a functional that kills
  all brackets;
* ternary brackets on a commutative associative algebra from a functional
  and a derivation, or from two or three commuting derivations, all written
  as 3x3 determinants whose entries are multiplied in the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, permutations

from . import linalg
from .algebra import NLieAlgebra, combine_maps, increasing_tuples, matrix_units, sort_sign
from .deform import is_nijenhuis
from .errors import (
    CommutationViolated,
    DerivationsDoNotCommute,
    DimensionMismatch,
    FunctionalNotVanishingOnDerived,
    FunctionalSymmetryViolated,
    NotADerivation,
    NotAssociative,
    NotNijenhuis,
    NotNijenhuisAssoc,
    UnknownName,
)
from .maps import LinearFunctional, LinearMap, basis_vector, vec_add, vec_scale, vec_sub
from .report import VerificationReport, one_based, scan
from .scalars import QQ, Field, get_field


@dataclass(frozen=True, eq=False)
class CommAssocAlgebra:
    """Products of basis vectors on unordered pairs ``i <= j`` (0-based)."""

    dim: int
    products: dict = dc_field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        fld = get_field(self.field)
        clean = {}
        for (i, j), v in self.products.items():
            if i > j:
                i, j = j, i
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise DimensionMismatch(f"product index {[i + 1, j + 1]} outside [1, {self.dim}]")
            if len(v) != self.dim:
                raise DimensionMismatch(f"product value of length {len(v)}, expected {self.dim}")
            v = tuple(fld.coerce(x) for x in v)
            if any(v):
                clean[(i, j)] = v
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "products", clean)

    def __eq__(self, other):
        if not isinstance(other, CommAssocAlgebra):
            return NotImplemented
        return (self.dim, self.field, self.products) == (other.dim, other.field, other.products)

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.products.items()))))

    @property
    def zero(self):
        return (self.field.zero,) * self.dim

    def basis(self, i):
        return basis_vector(self.dim, i, self.field)

    def basis_mul(self, i, j):
        return self.products.get((min(i, j), max(i, j)), self.zero)

    def mul(self, u, v):
        out = list(self.zero)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for r, x in enumerate(self.basis_mul(i, j)):
                    if x:
                        out[r] = out[r] + a * b * x
        return tuple(out)


def check_comm_assoc(A: CommAssocAlgebra) -> VerificationReport:
    def cases():
        for i in range(A.dim):
            for j in range(A.dim):
                for k in range(A.dim):
                    lhs = A.mul(A.basis_mul(i, j), A.basis(k))
                    rhs = A.mul(A.basis(i), A.basis_mul(j, k))
                    yield {"at": one_based((i, j, k))}, lhs, rhs

    return scan("associative", cases())


def _require_assoc(A):
    report = check_comm_assoc(A)
    if not report.ok:
        raise NotAssociative("product is not associative", report.witness)


def is_assoc_derivation(A: CommAssocAlgebra, D: LinearMap) -> VerificationReport:
    D = _square(A, D)

    def cases():
        for i in range(A.dim):
            for j in range(i, A.dim):
                lhs = D.apply(A.basis_mul(i, j))
                rhs = vec_add(A.mul(D.column(i), A.basis(j)), A.mul(A.basis(i), D.column(j)))
                yield {"at": one_based((i, j))}, lhs, rhs

    return scan("derivation", cases())


def _square(A, M: LinearMap) -> LinearMap:
    if M.rows != A.dim or M.cols != A.dim:
        raise DimensionMismatch(f"{M.rows}x{M.cols} map on a {A.dim}-dimensional algebra")
    return M.to_field(A.field)


def assoc_derivations(A: CommAssocAlgebra) -> list[LinearMap]:
    """Basis of the derivations of A, solved exactly over the matrix units."""
    units = matrix_units(A.dim, A.field)
    pairs = [(i, j) for i in range(A.dim) for j in range(i, A.dim)]

    def defect(E):
        out = []
        for i, j in pairs:
            lhs = E.apply(A.basis_mul(i, j))
            rhs = vec_add(A.mul(E.column(i), A.basis(j)), A.mul(A.basis(i), E.column(j)))
            out.extend(vec_sub(lhs, rhs))
        return out

    sols = linalg.solve_linear_span(units, defect, A.field.zero, A.field.one)
    return [combine_maps(c, units, A.dim, A.field) for c in sols]


def commutant(maps, dim: int, field: Field = QQ) -> list[LinearMap]:
    """Basis of the maps commuting with every map in ``maps``."""
    units = matrix_units(dim, field)

    def defect(E):
        out = []
        for M in maps:
            C = E @ M - M @ E
            for row in C.matrix:
                out.extend(row)
        return out

    sols = linalg.solve_linear_span(units, defect, field.zero, field.one)
    return [combine_maps(c, units, dim, field) for c in sols]


def symmetric_functionals(A: CommAssocAlgebra, D: LinearMap) -> list[LinearFunctional]:
    """Basis of functionals with ``f(Dx . y) = f(x . Dy)``."""
    fld = A.field
    basis = [LinearFunctional(basis_vector(A.dim, k, fld), fld) for k in range(A.dim)]

    def defect(f):
        return [
            f(A.mul(D.column(i), A.basis(j))) - f(A.mul(A.basis(i), D.column(j)))
            for i in range(A.dim)
            for j in range(A.dim)
        ]

    sols = linalg.solve_linear_span(basis, defect, fld.zero, fld.one)
    return [LinearFunctional(c, fld) for c in sols]


def is_nijenhuis_assoc(A: CommAssocAlgebra, N: LinearMap) -> VerificationReport:
    """``Nx.Ny = N(Nx.y + x.Ny - N(x.y))`` on basis pairs."""
    _require_assoc(A)
    N = _square(A, N)

    def cases():
        for i in range(A.dim):
            for j in range(i, A.dim):
                nx, ny = N.column(i), N.column(j)
                lhs = A.mul(nx, ny)
                inner = vec_add(A.mul(nx, A.basis(j)), A.mul(A.basis(i), ny))
                inner = vec_sub(inner, N.apply(A.basis_mul(i, j)))
                yield {"at": one_based((i, j))}, lhs, N.apply(inner)

    return scan("nijenhuis_assoc", cases())


# -- brackets from a functional ----------------------------------------------


def extend_by_functional(alg: NLieAlgebra, f: LinearFunctional) -> NLieAlgebra:
    """The (n+1)-ary bracket ``sum_i (-1)^(i-1) f(x_i) [.. x_i omitted ..]``."""
    if f.dim != alg.dim:
        raise DimensionMismatch(f"functional on dimension {f.dim} for a {alg.dim}-dimensional algebra")
    f = f.to_field(alg.field)
    for idx in increasing_tuples(alg):
        value = f(alg.basis_bracket(idx))
        if value:
            raise FunctionalNotVanishingOnDerived(
                "functional does not vanish on brackets",
                {"at": one_based(idx), "lhs": value, "rhs": 0},
            )
    constants = {}
    for idx in combinations(range(alg.dim), alg.arity + 1):
        acc = alg.zero
        for i, k in enumerate(idx):
            c = f.values[k]
            if c:
                term = vec_scale(c, alg.basis_bracket(idx[:i] + idx[i + 1:]))
                acc = vec_add(acc, term) if i % 2 == 0 else vec_sub(acc, term)
        constants[idx] = acc
    return NLieAlgebra(alg.arity + 1, alg.dim, constants, alg.field)


def check_nijenhuis_persistence(alg: NLieAlgebra, f: LinearFunctional, N: LinearMap) -> VerificationReport:
    base = is_nijenhuis(alg, N)
    if not base.ok:
        raise NotNijenhuis("map is not Nijenhuis on the original algebra", base.witness)
    report = is_nijenhuis(extend_by_functional(alg, f), N)
    report.name = "nijenhuis_on_extension"
    return report


# -- ternary brackets on commutative associative algebras ---------------------


def det3(A: CommAssocAlgebra, rows) -> tuple:
    """Determinant of a 3x3 array of algebra elements, products taken in A."""
    out = A.zero
    for perm in permutations(range(3)):
        factors = [rows[r][perm[r]] for r in range(3)]
        if not all(any(v) for v in factors):
            continue
        term = A.mul(A.mul(factors[0], factors[1]), factors[2])
        if any(term):
            out = vec_add(out, term) if sort_sign(perm)[0] > 0 else vec_sub(out, term)
    return out


def _require_derivations(A, maps):
    for k, D in enumerate(maps, start=1):
        report = is_assoc_derivation(A, D)
        if not report.ok:
            raise NotADerivation(f"map {k} is not a derivation", report.witness)


def _require_commuting(maps, error, what):
    for a, b in combinations(range(len(maps)), 2):
        if maps[a] @ maps[b] != maps[b] @ maps[a]:
            raise error(f"{what} {a + 1} and {b + 1} do not commute", {"pair": [a + 1, b + 1]})


def _ternary_from(A: CommAssocAlgebra, bracket) -> NLieAlgebra:
    constants = {idx: bracket(*(A.basis(k) for k in idx)) for idx in combinations(range(A.dim), 3)}
    return NLieAlgebra(3, A.dim, constants, A.field)


def bracket_f_D(A: CommAssocAlgebra, f: LinearFunctional, D: LinearMap) -> NLieAlgebra:
    """``f(x)(Dy.z - Dz.y)`` plus its cyclic permutations."""
    _require_assoc(A)
    D = _square(A, D)
    f = f.to_field(A.field)
    _require_derivations(A, [D])
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = f(A.mul(D.column(i), A.basis(j)))
            rhs = f(A.mul(A.basis(i), D.column(j)))
            if lhs != rhs:
                raise FunctionalSymmetryViolated(
                    "f(Dx.y) differs from f(x.Dy)", {"at": one_based((i, j)), "lhs": lhs, "rhs": rhs}
                )

    def bracket(x, y, z):
        out = A.zero
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            fa = f(a)
            if fa:
                out = vec_add(out, vec_scale(fa, vec_sub(A.mul(D.apply(b), c), A.mul(D.apply(c), b))))
        return out

    return _ternary_from(A, bracket)


def _det_bracket(A, row_maps):
    def bracket(x, y, z):
        rows = [[D.apply(v) for v in (x, y, z)] for D in row_maps]
        if len(rows) == 2:
            rows.insert(0, [x, y, z])
        return det3(A, rows)

    return bracket


def bracket_D1_D2(A: CommAssocAlgebra, D1: LinearMap, D2: LinearMap) -> NLieAlgebra:
    """Determinant with rows ``(x, y, z)``, ``D1`` images and ``D2`` images."""
    _require_assoc(A)
    maps = [_square(A, D1), _square(A, D2)]
    _require_derivations(A, maps)
    _require_commuting(maps, DerivationsDoNotCommute, "derivations")
    return _ternary_from(A, _det_bracket(A, maps))


def bracket_D1_D2_D3(A: CommAssocAlgebra, D1: LinearMap, D2: LinearMap, D3: LinearMap) -> NLieAlgebra:
    """Determinant with rows of ``D1``, ``D2`` and ``D3`` images."""
    _require_assoc(A)
    maps = [_square(A, D1), _square(A, D2), _square(A, D3)]
    _require_derivations(A, maps)
    _require_commuting(maps, DerivationsDoNotCommute, "derivations")
    return _ternary_from(A, _det_bracket(A, maps))


CONSTRUCTIONS = {"f_D": bracket_f_D, "D1_D2": bracket_D1_D2, "D1_D2_D3": bracket_D1_D2_D3}


def check_nijenhuis_persistence_assoc(A: CommAssocAlgebra, N: LinearMap, construction: str, params) -> VerificationReport:
    """Whether a Nijenhuis map of A commuting with the derivations stays Nijenhuis.

    ``params`` is ``(f, D)`` for ``f_D`` and the derivations otherwise.
    """
    try:
        build = CONSTRUCTIONS[construction]
    except KeyError:
        raise UnknownName(f"unknown construction {construction!r}; expected one of {sorted(CONSTRUCTIONS)}") from None
    base = is_nijenhuis_assoc(A, N)
    if not base.ok:
        raise NotNijenhuisAssoc("map is not Nijenhuis on the associative algebra", base.witness)
    N = _square(A, N)
    params = list(params)
    derivs = params[1:] if construction == "f_D" else params
    for k, D in enumerate(derivs, start=1):
        if N @ D != D @ N:
            raise CommutationViolated(f"map does not commute with derivation {k}", {"derivation": k})
    report = is_nijenhuis(build(A, *params), N)
    report.name = f"nijenhuis_on_{construction}"
    return report


# -- the determinant expansion identity ---------------------------------------


def _column_det(A, cols):
    rows = [[cols[c][r] for c in range(3)] for r in range(3)]
    return det3(A, rows)


def det3_expansion_check(A: CommAssocAlgebra, N: LinearMap, xs, ys, zs) -> VerificationReport:
    """Expansion of ``|Nx Ny Nz|`` for columns ``x, y, z`` in ``A^3``."""
    N = _require_nijenhuis_assoc(A, N)
    cols = (tuple(xs), tuple(ys), tuple(zs))
    where = {"columns": [[list(map(A.field.format, v)) for v in c] for c in cols]}
    lhs, rhs = _det3_sides(A, _powers(N), cols, N.apply)
    return scan("det3_expansion", [(where, lhs, rhs)])


def _require_nijenhuis_assoc(A, N):
    report = is_nijenhuis_assoc(A, N)
    if not report.ok:
        raise NotNijenhuisAssoc("map is not Nijenhuis on the associative algebra", report.witness)
    return _square(A, N)


def _powers(N):
    N2 = N @ N
    return N, N2, N2 @ N


def _det3_sides(A, powers, cols, image):
    N, N2, N3 = powers
    imaged = [tuple(image(v) for v in c) for c in cols]
    lhs = _column_det(A, imaged)
    by_count = {0: A.zero, 1: A.zero, 2: A.zero}
    for mask in range(7):
        chosen = [imaged[i] if mask >> i & 1 else cols[i] for i in range(3)]
        k = bin(mask).count("1")
        by_count[k] = vec_add(by_count[k], _column_det(A, chosen))
    rhs = N.apply(by_count[2])
    rhs = vec_sub(rhs, N2.apply(by_count[1]))
    rhs = vec_add(rhs, N3.apply(by_count[0]))
    return lhs, rhs


def det3_expansion_exhaustive(A: CommAssocAlgebra, N: LinearMap) -> VerificationReport:
    """The expansion on every triple of unit columns.

    Both sides are alternating and trilinear in the three columns, so unit
    columns ``e_a`` in one of three slots, taken as increasing triples,
    cover the identity completely.
    """
    N = _require_nijenhuis_assoc(A, N)
    zero = A.zero
    units = []
    for slot in range(3):
        for a in range(A.dim):
            col = [zero, zero, zero]
            col[slot] = A.basis(a)
            units.append(((slot, a), tuple(col)))
    images = {}

    def image(v):
        if v not in images:
            images[v] = N.apply(v)
        return images[v]

    powers = _powers(N)

    def cases():
        for trip in combinations(units, 3):
            lhs, rhs = _det3_sides(A, powers, [c for _, c in trip], image)
            where = {"units": [[slot + 1, a + 1] for (slot, a), _ in trip]}
            yield where, lhs, rhs

    return scan("det3_expansion", cases())
