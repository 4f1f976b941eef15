import random
from fractions import Fraction

import pytest

from corpus import CATALOG_ALGEBRAS, algebra
from nlie import catalog
from nlie.algebra import NLieAlgebra, check_filippov
from nlie.cohomology import (
    Cochain,
    Representation,
    adjoint_rep,
    check_d_squared,
    check_representation,
    coboundary,
    cochain_keys,
    nr_bracket,
    representation_axioms,
    semidirect_product,
    zero_rep,
)
from nlie.deform import omega_family
from nlie.errors import DegreeMismatch, InvalidRepresentation, NotAnNLieAlgebra

D3 = catalog.dim3_nonabelian()
S4 = catalog.dim4_simple()


def unit(i, d):
    return tuple(Fraction(int(k == i)) for k in range(d))


def random_cochain(alg, degree, vdim, rng, density=0.3):
    values = {}
    for key in cochain_keys(alg, degree):
        if rng.random() < density:
            values[key] = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(vdim))
    return Cochain(degree, vdim, values)


def test_adjoint_values():
    ad = adjoint_rep(D3)
    # (e2, e3, e1) is an even permutation of (e1, e2, e3)
    assert ad.act((1, 2), unit(0, 3)) == unit(0, 3)
    assert ad.act((0, 1), unit(0, 3)) == (0, 0, 0)
    assert ad.act((0, 1), unit(2, 3)) == unit(0, 3)
    assert adjoint_rep(S4).act((1, 2), unit(3, 4)) == unit(0, 4)
    assert adjoint_rep(catalog.abelian(3, 4)).rho == {}


@pytest.mark.parametrize("name", ["dim3_nonabelian", "dim4_simple", "dim4_nonsimple", "lie_ex1"])
def test_adjoint_is_representation(name):
    assert check_representation(adjoint_rep(algebra(name))).ok


def test_zero_representation():
    assert check_representation(zero_rep(S4, 3)).ok


def test_adjoint_of_corrupted_algebra():
    bad = NLieAlgebra.from_table(
        3, 4, {(2, 3, 4): {1: 1}, (1, 2, 4): {3: 1}, (1, 3, 4): {2: 1}, (1, 2, 3): {1: 1}}
    )
    report = representation_axioms(adjoint_rep(bad))
    assert not report.ok and report.witness
    with pytest.raises(NotAnNLieAlgebra):
        check_representation(adjoint_rep(bad))


def test_semidirect_with_adjoint():
    sd = semidirect_product(D3, adjoint_rep(D3))
    assert check_filippov(sd).ok
    # [e1, e2, e3 in V] = e1 in V, the fourth basis vector
    assert sd.bracket(unit(0, 6), unit(1, 6), unit(5, 6)) == unit(3, 6)
    assert sd.bracket(unit(0, 6), unit(3, 6), unit(4, 6)) == (0,) * 6


def test_semidirect_with_zero_rep_is_direct_sum():
    sd = semidirect_product(S4, zero_rep(S4, 2))
    assert set(sd.constants) == set(S4.constants)


def test_semidirect_rejects_invalid_rep():
    bogus = Representation(D3, 1, {(0, 1): [[1]]})
    with pytest.raises(InvalidRepresentation):
        semidirect_product(D3, bogus)


@pytest.mark.parametrize("name", ["dim3_nonabelian", "dim4_simple", "dim4_nonsimple"])
def test_semidirect_products_are_nlie(name):
    alg = algebra(name)
    assert check_filippov(semidirect_product(alg, adjoint_rep(alg))).ok


def test_coboundary_of_zero():
    out = coboundary(S4, adjoint_rep(S4), Cochain.zero(1, 4))
    assert out.degree == 2 and out.is_zero()


def test_coboundary_of_inclusion_by_hand():
    # (dc)(X, z) = -c(X o z) + rho(X) c(z) + the last sum; for c = id on
    # dim3 at X = (e1, e2), z = e3 the three pieces give -e1 + e1 + 2e1.
    inclusion = Cochain(1, 3, {(z,): unit(z, 3) for z in range(3)})
    dc = coboundary(D3, adjoint_rep(D3), inclusion)
    assert dc(((0, 1), 2)) == (2, 0, 0)


def test_bracket_is_cocycle_and_self_commutes():
    omega = Cochain.from_nary(S4)
    assert coboundary(S4, adjoint_rep(S4), omega).is_zero()
    assert nr_bracket(S4, omega, omega).is_zero()


def test_cochain_nary_roundtrip():
    assert Cochain.from_nary(S4).to_nary(3, 4) == S4


def test_coboundary_linear():
    rng = random.Random(3)
    rep = adjoint_rep(S4)
    for _ in range(3):
        a, b = random_cochain(S4, 1, 4, rng), random_cochain(S4, 1, 4, rng)
        s, t = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 5)
        lhs = coboundary(S4, rep, a.scale(s) + b.scale(t))
        rhs = coboundary(S4, rep, a).scale(s) + coboundary(S4, rep, b).scale(t)
        assert lhs == rhs


@pytest.mark.parametrize("name", ["dim3_nonabelian", "dim4_nonsimple", "lie_ex1"])
def test_coboundary_twice_vanishes_on_random_cochains(name):
    alg = algebra(name)
    rep = adjoint_rep(alg)
    rng = random.Random(name)
    c = random_cochain(alg, 1, alg.dim, rng, density=0.8)
    assert coboundary(alg, rep, coboundary(alg, rep, c)).is_zero()
    c = random_cochain(alg, 2, alg.dim, rng, density=0.2)
    assert coboundary(alg, rep, coboundary(alg, rep, c)).is_zero()


@pytest.mark.parametrize("name", CATALOG_ALGEBRAS)
def test_d_squared_degree_one(name):
    alg = algebra(name)
    assert check_d_squared(alg, adjoint_rep(alg), 1).ok


def test_d_squared_zero_rep():
    for p in (1, 2):
        assert check_d_squared(D3, zero_rep(D3, 2), p).ok


def test_nr_bracket_symmetric_and_bilinear():
    rng = random.Random(9)
    a = Cochain.from_nary(S4)
    b = Cochain.from_nary(catalog.dim4_nonsimple())
    c = Cochain.from_nary(NLieAlgebra(3, 4, {(0, 1, 3): tuple(Fraction(rng.randint(-2, 2)) for _ in range(4))}))
    assert nr_bracket(S4, a, b) == nr_bracket(S4, b, a)
    two = Fraction(2)
    assert nr_bracket(S4, a.scale(two) + c, b) == nr_bracket(S4, a, b).scale(two) + nr_bracket(S4, c, b)
    assert nr_bracket(S4, Cochain.zero(2, 4), b).is_zero()


def test_nr_bracket_needs_nary_cochains():
    with pytest.raises(DegreeMismatch):
        nr_bracket(S4, Cochain.zero(1, 4), Cochain.zero(2, 4))


def test_second_order_condition_on_dim3():
    N = catalog.random_map(3, seed=4)
    w1, w2 = omega_family(D3, N).omegas
    half = Fraction(1, 2)
    total = coboundary(D3, adjoint_rep(D3), w2) + nr_bracket(D3, w1, w1).scale(half)
    assert total.is_zero()
    assert coboundary(D3, adjoint_rep(D3), w1).is_zero()
