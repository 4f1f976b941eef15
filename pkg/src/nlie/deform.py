"""Nijenhuis operators and the deformations they generate.

The deformed brackets are built level by level: level ``j`` applies N to
``j`` of the arguments in every possible way and subtracts N of level
``j - 1``.  A map is Nijenhuis when the fully N-applied bracket equals N of
level ``n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .algebra import NLieAlgebra, _check_map, check_filippov, increasing_tuples
from .cohomology import Cochain, adjoint_rep, coboundary, nr_bracket
from .errors import IndexOutOfRange, NotAnNLieAlgebra, NotNijenhuis
from .maps import LinearMap, vec_add, vec_scale, vec_sub
from .report import VerificationReport, one_based, scan


def _subset_sums(alg: NLieAlgebra, N: LinearMap, idx):
    """``sums[j]`` = sum of brackets with N applied to exactly j arguments."""
    n = alg.arity
    plain = [alg.basis(k) for k in idx]
    images = [N.column(k) for k in idx]
    sums = [alg.zero] * (n + 1)
    for mask in range(1 << n):
        args = [images[i] if mask >> i & 1 else plain[i] for i in range(n)]
        j = bin(mask).count("1")
        sums[j] = vec_add(sums[j], alg.bracket(*args))
    return sums


def _levels(alg: NLieAlgebra, N: LinearMap, idx):
    sums = _subset_sums(alg, N, idx)
    levels = [sums[0]]
    for j in range(1, alg.arity):
        levels.append(vec_sub(sums[j], N.apply(levels[-1])))
    return levels, sums[alg.arity]


def deformed_bracket(alg: NLieAlgebra, N: LinearMap, j: int) -> NLieAlgebra:
    """The level-j deformed bracket as an unvalidated candidate."""
    N = _check_map(alg, N)
    if not 1 <= j <= alg.arity - 1:
        raise IndexOutOfRange(f"level must lie in [1, {alg.arity - 1}], got {j}")
    constants = {idx: _levels(alg, N, idx)[0][j] for idx in increasing_tuples(alg)}
    return NLieAlgebra(alg.arity, alg.dim, constants, alg.field)


def is_nijenhuis(alg: NLieAlgebra, N: LinearMap) -> VerificationReport:
    N = _check_map(alg, N)

    def cases():
        for idx in increasing_tuples(alg):
            levels, top = _levels(alg, N, idx)
            yield {"at": one_based(idx)}, top, N.apply(levels[-1])

    return scan("nijenhuis", cases())


def _unshuffles(n: int):
    """Pairs ``(front, sign exponent)`` over all (p, n-p)-unshuffles."""
    for p in range(n + 1):
        for front in combinations(range(n), p):
            exponent = p * (p - 1) // 2 + sum(i + 1 for i in front)
            yield front, exponent


def _unshuffle_sum(alg, idx, exponents, power):
    """The alternating unshuffle sum with N^alpha_i on argument i."""
    n = alg.arity
    total = alg.zero
    for front, e in _unshuffles(n):
        back = [i for i in range(n) if i not in front]
        args = [alg.basis(idx[i]) for i in front]
        args += [power(exponents[i]).column(idx[i]) for i in back]
        v = alg.bracket(*args)
        if not any(v):
            continue
        v = power(sum(exponents[i] for i in front)).apply(v)
        total = vec_add(total, v if e % 2 == 0 else vec_scale(-1, v))
    return total


def is_nijenhuis_unshuffle(alg: NLieAlgebra, N: LinearMap) -> VerificationReport:
    """Nijenhuis test through the signed sum over unshuffles."""
    N = _check_map(alg, N)
    ones = (1,) * alg.arity
    power = _power_cache(N)

    def cases():
        for idx in increasing_tuples(alg):
            yield {"at": one_based(idx)}, _unshuffle_sum(alg, idx, ones, power), alg.zero

    return scan("nijenhuis_unshuffle", cases())


def _power_cache(N: LinearMap):
    @lru_cache(maxsize=None)
    def power(k):
        return N ** k

    return power


def power_identity(alg: NLieAlgebra, N: LinearMap, exponents) -> VerificationReport:
    """The unshuffle identity with independent powers of N on each argument.

    Negative exponents use the exact inverse, so they require N invertible.
    Exponents break the symmetry between slots, so every basis tuple is
    checked, not only increasing ones.
    """
    N = _check_map(alg, N)
    exponents = tuple(exponents)
    if len(exponents) != alg.arity:
        raise IndexOutOfRange(f"expected {alg.arity} exponents, got {len(exponents)}")
    if not is_nijenhuis(alg, N).ok:
        raise NotNijenhuis("the power identity is stated for Nijenhuis operators")
    if min(exponents) < 0:
        N.inverse()  # raises SingularMatrix early
    power = _power_cache(N)

    def cases():
        for idx in product(range(alg.dim), repeat=alg.arity):
            yield {"at": one_based(idx)}, _unshuffle_sum(alg, idx, exponents, power), alg.zero

    return scan(f"power_identity{list(exponents)}", cases())


# -- deformations -------------------------------------------------------------


@dataclass(frozen=True)
class DeformationFamily:
    """``[.]_t = [.] + sum_i t^i omega_i`` with n-1 n-ary cochains."""

    base: NLieAlgebra
    omegas: tuple

    def __post_init__(self):
        object.__setattr__(self, "omegas", tuple(self.omegas))
        if len(self.omegas) != self.base.arity - 1:
            raise IndexOutOfRange(f"expected {self.base.arity - 1} maps, got {len(self.omegas)}")


def omega_family(alg: NLieAlgebra, N: LinearMap) -> DeformationFamily:
    N = _check_map(alg, N)
    report = is_nijenhuis(alg, N)
    if not report.ok:
        raise NotNijenhuis("map is not a Nijenhuis operator", report.witness)
    levels = {idx: _levels(alg, N, idx)[0] for idx in increasing_tuples(alg)}
    omegas = []
    for j in range(1, alg.arity):
        cand = NLieAlgebra(alg.arity, alg.dim, {k: v[j] for k, v in levels.items()}, alg.field)
        omegas.append(Cochain.from_nary(cand))
    return DeformationFamily(alg, omegas)


def evaluate_at(fam: DeformationFamily, t) -> NLieAlgebra:
    base = fam.base
    t = base.field.coerce(t)
    constants = dict(base.constants)
    for i, w in enumerate(fam.omegas, start=1):
        c = t ** i
        nary = w.to_nary(base.arity, base.dim)
        for key, v in nary.constants.items():
            constants[key] = vec_add(constants.get(key, base.zero), vec_scale(c, v))
    return NLieAlgebra(base.arity, base.dim, constants, base.field)


def deformation_defects(fam: DeformationFamily) -> dict:
    """Degree-3 cochain that must vanish at each order ``l = 1 .. 2n-2``."""
    alg = fam.base
    n = alg.arity
    rep = adjoint_rep(alg)
    omegas = dict(enumerate(fam.omegas, start=1))
    brackets = {}

    def nr(i, j):
        key = (min(i, j), max(i, j))
        if key not in brackets:
            brackets[key] = nr_bracket(alg, omegas[key[0]], omegas[key[1]])
        return brackets[key]

    half = Fraction(1, 2)
    out = {}
    for l in range(1, 2 * n - 1):
        acc = Cochain.zero(3, alg.dim, alg.field)
        if l <= n - 1:
            acc = acc + coboundary(alg, rep, omegas[l])
        for i in range(max(1, l - n + 1), min(n - 1, l - 1) + 1):
            acc = acc + nr(i, l - i).scale(half)
        out[l] = acc
    return out


def check_deformation_conditions(fam: DeformationFamily) -> VerificationReport:
    if not check_filippov(fam.base).ok:
        raise NotAnNLieAlgebra("base bracket fails the Filippov identity")
    reports = []
    for l, defect in deformation_defects(fam).items():
        if defect.is_zero():
            reports.append(VerificationReport(f"order {l}", True, None, 1))
        else:
            key, value = next(iter(defect.values.items()))
            witness = {"order": l, "X": one_based(key[0]), "Y": one_based(key[1]), "z": key[2] + 1,
                       "lhs": value, "rhs": fam.base.zero}
            reports.append(VerificationReport(f"order {l}", False, witness, 1))
    return VerificationReport.combine("deformation_conditions", reports)


def check_trivial(alg: NLieAlgebra, N: LinearMap, t) -> VerificationReport:
    """Whether ``Id + tN`` intertwines the deformed and the original bracket."""
    N = _check_map(alg, N)
    fam = omega_family(alg, N)
    t = alg.field.coerce(t)
    deformed = evaluate_at(fam, t)
    T = LinearMap.identity(alg.dim, alg.field) + N * t

    def cases():
        for idx in increasing_tuples(alg):
            lhs = T.apply(deformed.basis_bracket(idx))
            rhs = alg.bracket(*(T.column(k) for k in idx))
            yield {"at": one_based(idx)}, lhs, rhs

    return scan(f"trivial[t={alg.field.format(t)}]", cases())


def polynomial_map(alg: NLieAlgebra, N: LinearMap, coeffs, min_exponent: int = 0) -> LinearMap:
    """``sum_k coeffs[k] * N^(min_exponent + k)``."""
    N = _check_map(alg, N)
    if min_exponent < 0:
        N.inverse()  # raises SingularMatrix
    power = _power_cache(N)
    acc = LinearMap.zero(alg.dim, field=alg.field)
    for k, c in enumerate(coeffs):
        c = alg.field.coerce(c)
        if c:
            acc = acc + power(min_exponent + k) * c
    return acc
