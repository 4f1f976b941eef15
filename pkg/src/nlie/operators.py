"""Rota-Baxter operators, O-operators and their square-zero lifts."""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .algebra import NLieAlgebra, _check_map, increasing_tuples, is_derivation
from .cohomology import Representation, adjoint_rep, require_representation
from .deform import is_nijenhuis
from .errors import ShapeMismatch
from .maps import LinearMap, vec_add, vec_scale
from .report import VerificationReport, one_based, scan


def is_o_operator(alg: NLieAlgebra, rep: Representation, T: LinearMap) -> VerificationReport:
    """``[Tv_1..Tv_n] = sum_i (-1)^(n-i) T rho(Tv_1..^..Tv_n) v_i`` on basis of V."""
    if T.rows != alg.dim or T.cols != rep.vdim:
        raise ShapeMismatch(f"expected a {alg.dim}x{rep.vdim} map, got {T.rows}x{T.cols}")
    require_representation(rep)
    T = T.to_field(alg.field)
    n = alg.arity
    return _o_operator_scan(alg, rep, T, n, "o_operator")


def _o_operator_scan(alg, rep, T, n, name):
    def cases():
        for idx in combinations(range(rep.vdim), n):
            images = [T.column(k) for k in idx]
            lhs = alg.bracket(*images)
            rhs = alg.zero
            for i in range(n):
                m = rep.of_vectors(images[:i] + images[i + 1:])
                w = T.apply(tuple(row[idx[i]] for row in m))
                rhs = vec_add(rhs, w if (n - 1 - i) % 2 == 0 else vec_scale(-1, w))
            yield {"at": one_based(idx)}, lhs, rhs

    return scan(name, cases())


def is_rota_baxter(alg: NLieAlgebra, P: LinearMap) -> VerificationReport:
    """Weight-zero Rota-Baxter test.

    For ternary brackets this is the two-P expansion written out directly;
    for other arities it is the O-operator condition for the adjoint module.
    """
    P = _check_map(alg, P)
    if alg.arity != 3:
        return _o_operator_scan(alg, adjoint_rep(alg), P, alg.arity, "rota_baxter")

    def cases():
        for x, y, z in increasing_tuples(alg):
            px, py, pz = P.column(x), P.column(y), P.column(z)
            ex, ey, ez = alg.basis(x), alg.basis(y), alg.basis(z)
            lhs = alg.bracket(px, py, pz)
            inner = vec_add(vec_add(alg.bracket(px, py, ez), alg.bracket(px, ey, pz)), alg.bracket(ex, py, pz))
            yield {"at": one_based((x, y, z))}, lhs, P.apply(inner)

    return scan("rota_baxter", cases())


class MapClass(NamedTuple):
    derivation: bool
    rota_baxter: bool
    nijenhuis: bool


def classify_reports(alg: NLieAlgebra, N: LinearMap) -> list[VerificationReport]:
    return [is_derivation(alg, N), is_rota_baxter(alg, N), is_nijenhuis(alg, N)]


def classify_map(alg: NLieAlgebra, N: LinearMap) -> MapClass:
    return MapClass(*(r.ok for r in classify_reports(alg, N)))


def lift_o_operator(alg: NLieAlgebra, rep: Representation, T: LinearMap) -> LinearMap:
    """Block map on ``g + V`` sending ``x + v`` to ``Tv``."""
    if T.rows != alg.dim or T.cols != rep.vdim:
        raise ShapeMismatch(f"expected a {alg.dim}x{rep.vdim} map, got {T.rows}x{T.cols}")
    d, k = alg.dim, rep.vdim
    zero = alg.field.zero
    m = [[zero] * (d + k) for _ in range(d + k)]
    for i in range(d):
        for j in range(k):
            m[i][d + j] = T.matrix[i][j]
    return LinearMap(m, alg.field)
