"""Seeded test corpora shared by the module tests and the acceptance suite."""

from __future__ import annotations

import random
from fractions import Fraction

from nlie import catalog
from nlie.algebra import combine_maps, derivation_space
from nlie.constructions import assoc_derivations, commutant, is_nijenhuis_assoc, symmetric_functionals
from nlie.deform import is_nijenhuis
from nlie.maps import LinearMap

CATALOG_ALGEBRAS = {
    "abelian(3,5)": lambda: catalog.abelian(3, 5),
    "dim3_nonabelian": catalog.dim3_nonabelian,
    "dim4_simple": catalog.dim4_simple,
    "dim4_nonsimple": catalog.dim4_nonsimple,
    "lie_ex1": catalog.lie_ex1,
}

FILIPPOV_ALGEBRAS = ("abelian(3,5)", "dim3_nonabelian", "dim4_simple", "dim4_nonsimple")

LAMBDAS = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(3), Fraction(1, 2)]

SIMPLE_LETTERS = ("a", "b", "c", "d", "e", "f")

T4_ALG = catalog.trunc_poly((4,))


def algebra(name):
    return CATALOG_ALGEBRAS[name]()


def sparse_map(dim, rng, choices=(0, 0, 0, 0, 1, -1, 2)) -> LinearMap:
    return LinearMap([[rng.choice(choices) for _ in range(dim)] for _ in range(dim)])


def derivation_combo(alg, rng, bound=3) -> LinearMap:
    basis = derivation_space(alg)
    coeffs = [catalog.random_rational(rng, bound) for _ in basis]
    return combine_maps(coeffs, basis, alg.dim, alg.field)


def agreement_corpus(name, size=100, seed=0):
    """Dense random maps, sparse maps and random derivations, in equal thirds-ish."""
    alg = algebra(name)
    rng = random.Random(f"{name}:{seed}")
    maps = [catalog.random_map(alg.dim, seed=rng) for _ in range(size // 2)]
    maps += [sparse_map(alg.dim, rng) for _ in range(size // 4)]
    while len(maps) < size:
        maps.append(derivation_combo(alg, rng))
    return alg, maps


def simple_der_point(rng, bound=4):
    return catalog.random_params(SIMPLE_LETTERS, rng, bound)


def nijenhuis_sweep(name):
    """A handful of verified Nijenhuis maps on each catalog algebra."""
    alg = algebra(name)
    rng = random.Random(f"sweep:{name}")
    d = alg.dim
    found = [LinearMap.scalar(Fraction(3, 2), d)]
    if name in ("abelian(3,5)", "dim3_nonabelian"):
        found += [catalog.random_map(d, seed=s) for s in range(2)]
    if name == "dim3_nonabelian":
        found.append(LinearMap([[2, 0, 0], [0, 3, 0], [0, 0, 5]]))
    if name == "dim4_simple":
        found += [catalog.dim4_simple_der(**simple_der_point(rng)) for _ in range(2)]
    if name == "dim4_nonsimple":
        found.append(catalog.T1(**catalog.random_params(SIMPLE_LETTERS, rng)))
        found.append(catalog.T2(**catalog.random_params("abcd", rng)))
    if name == "lie_ex1":
        while len(found) < 3:
            N = sparse_map(d, rng)
            if is_nijenhuis(alg, N).ok and not N.is_zero():
                found.append(N)
    for N in found:
        assert is_nijenhuis(alg, N).ok, (name, N.formatted())
    return alg, found


def f_d_instance():
    """Solver derivation of k[t]/(t^4) scaling t^k by k/3, with its functional."""
    D = assoc_derivations(T4_ALG)[2]
    assert D == LinearMap([[0, 0, 0, 0], [0, Fraction(1, 3), 0, 0], [0, 0, Fraction(2, 3), 0], [0, 0, 0, 1]])
    (f,) = symmetric_functionals(T4_ALG, D)
    return f, D


def commuting_nijenhuis(A, derivations, seed, want=3):
    rng = random.Random(seed)
    basis = commutant(derivations, A.dim, A.field)
    found = []
    while len(found) < want:
        N = combine_maps([rng.choice([-1, 0, 0, 1, 2]) for _ in basis], basis, A.dim, A.field)
        scalar = all(N.matrix[i][j] == (N.matrix[0][0] if i == j else 0) for i in range(A.dim) for j in range(A.dim))
        if not scalar and is_nijenhuis_assoc(A, N).ok:
            found.append(N)
    return found
