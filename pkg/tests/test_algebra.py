import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import CATALOG_ALGEBRAS, FILIPPOV_ALGEBRAS, algebra
from nlie import catalog
from nlie.algebra import (
    NLieAlgebra,
    ad_action,
    bracket_eval,
    check_fi3,
    check_filippov,
    check_leibniz_fundamental,
    circle_product,
    derivation_space,
    is_derivation,
    is_homomorphism,
    sort_sign,
)
from nlie.deform import deformed_bracket
from nlie.errors import ArityMismatch, DimensionMismatch, NotAnNLieAlgebra
from nlie.linalg import rank
from nlie.maps import LinearMap

S4 = catalog.dim4_simple()
D3 = catalog.dim3_nonabelian()


def e(i, d=4):
    return tuple(Fraction(int(k == i - 1)) for k in range(d))


def corrupted_simple():
    return NLieAlgebra.from_table(
        3, 4, {(2, 3, 4): {1: 1}, (1, 2, 4): {3: 1}, (1, 3, 4): {2: 1}, (1, 2, 3): {1: 1}}
    )


def test_sort_sign():
    assert sort_sign((2, 0, 1)) == (1, (0, 1, 2))
    assert sort_sign((1, 0, 2)) == (-1, (0, 1, 2))
    assert sort_sign((1, 1, 2))[0] == 0


def test_simple_bracket_values():
    assert bracket_eval(S4, [e(2), e(3), e(4)]) == e(1)
    assert bracket_eval(S4, [e(3), e(2), e(4)]) == tuple(-x for x in e(1))
    assert bracket_eval(S4, [e(1), e(1), e(2)]) == S4.zero


def test_bracket_shape_errors():
    with pytest.raises(ArityMismatch):
        bracket_eval(S4, [e(1), e(2)])
    with pytest.raises(DimensionMismatch):
        bracket_eval(S4, [e(1), e(2), e(1, 3)])


def test_ad_action():
    assert ad_action(D3, [e(1, 3), e(2, 3)], e(3, 3)) == e(1, 3)
    assert ad_action(D3, [e(1, 3), e(1, 3)], e(3, 3)) == D3.zero
    assert ad_action(S4, [e(2), e(3)], e(4)) == e(1)


def test_circle_products():
    assert circle_product(D3, {(0, 1): 1}, {(0, 2): 1}) == {}
    assert circle_product(D3, {(1, 2): 1}, {(1, 2): 1}) == {}
    ab = catalog.abelian(3, 4)
    for X in ab.fundamental_basis:
        for Y in ab.fundamental_basis:
            assert circle_product(ab, {X: 1}, {Y: 1}) == {}


def test_circle_product_by_hand():
    # (e1,e2) o (e2,e3) on dim3: (e2, [e1,e2,e3]) = (e2, e1) = -(e1, e2)
    assert circle_product(D3, {(0, 1): 1}, {(1, 2): 1}) == {(0, 1): -1}


@pytest.mark.parametrize("name", FILIPPOV_ALGEBRAS)
def test_catalog_identities(name):
    alg = algebra(name)
    assert check_filippov(alg).ok
    assert check_fi3(alg).ok
    assert check_leibniz_fundamental(alg).ok


def test_lie_example_is_lie():
    assert check_filippov(catalog.lie_ex1()).ok


def test_corrupted_simple_fails_with_witness():
    bad = corrupted_simple()
    fil, fi3 = check_filippov(bad), check_fi3(bad)
    assert not fil.ok and not fi3.ok
    assert fil.witness["lhs"] != fil.witness["rhs"]
    with pytest.raises(NotAnNLieAlgebra):
        check_leibniz_fundamental(bad)


def _corruptions(seed=5, count=12):
    rng = random.Random(seed)
    for _ in range(count):
        base = rng.choice([S4, catalog.dim4_nonsimple(), D3])
        constants = dict(base.constants)
        key = rng.choice(sorted(set(constants) | {(0, 1, 2)} if base.dim > 3 else constants))
        constants[key] = tuple(Fraction(rng.randint(-1, 1)) for _ in range(base.dim))
        yield NLieAlgebra(3, base.dim, constants)


def test_filippov_and_fi3_agree_on_corrupted_variants():
    verdicts = set()
    for alg in _corruptions():
        fil = check_filippov(alg).ok
        assert fil == check_fi3(alg).ok
        verdicts.add(fil)
    assert verdicts == {True, False}


def test_dimension_zero_is_legal():
    empty = NLieAlgebra(3, 0, {})
    assert check_filippov(empty).ok and check_fi3(empty).ok
    assert derivation_space(empty) == []


def test_derivation_examples():
    assert is_derivation(S4, catalog.dim4_simple_der(1, 0, 0, 0, 0, 0)).ok
    assert is_derivation(S4, LinearMap.zero(4)).ok
    r = is_derivation(D3, LinearMap.identity(3))
    assert not r.ok
    assert r.witness["lhs"] == e(1, 3) and r.witness["rhs"] == tuple(3 * x for x in e(1, 3))


@pytest.mark.parametrize("name, dim", [("dim4_simple", 6), ("dim4_nonsimple", 7)])
def test_derivation_dimensions(name, dim):
    assert len(derivation_space(algebra(name))) == dim


def test_abelian_derivations_are_everything():
    assert len(derivation_space(catalog.abelian(3, 3))) == 9


def _flat(M):
    return [x for row in M.matrix for x in row]


@pytest.mark.parametrize("name", CATALOG_ALGEBRAS)
def test_derivation_space_rank_property(name):
    alg = algebra(name)
    basis = derivation_space(alg)
    assert all(is_derivation(alg, D).ok for D in basis)
    stacked = [_flat(D) for D in basis]
    assert rank(stacked) == len(basis)
    for seed in range(5):
        M = catalog.random_map(alg.dim, seed=seed)
        grown = rank(stacked + [_flat(M)])
        assert grown == len(basis) + (0 if is_derivation(alg, M).ok else 1)


def test_homomorphisms():
    assert is_homomorphism(LinearMap.identity(4), S4, S4).ok
    N = catalog.random_map(3, seed=11)
    assert is_homomorphism(N, deformed_bracket(D3, N, 2), D3).ok
    assert is_homomorphism(LinearMap.zero(4), S4, catalog.dim4_nonsimple()).ok
    with pytest.raises(ArityMismatch):
        is_homomorphism(LinearMap.identity(4), S4, catalog.lie_ex1())


small = st.integers(-3, 3)
vec4 = st.tuples(small, small, small, small)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["dim4_simple", "dim4_nonsimple"]), vec4, vec4, vec4, vec4, small, small)
def test_bracket_multilinear(name, x, y, z, w, a, b):
    alg = algebra(name)
    combo = tuple(a * p + b * q for p, q in zip(x, w))
    lhs = alg.bracket(y, combo, z)
    rhs = tuple(a * p + b * q for p, q in zip(alg.bracket(y, x, z), alg.bracket(y, w, z)))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["dim4_simple", "dim4_nonsimple", "dim3_nonabelian"]), st.data())
def test_bracket_antisymmetric(name, data):
    alg = algebra(name)
    vec = st.tuples(*[small] * alg.dim)
    args = [data.draw(vec) for _ in range(alg.arity)]
    base = alg.bracket(*args)
    for perm in permutations(range(alg.arity)):
        sign, _ = sort_sign(perm)
        assert alg.bracket(*(args[p] for p in perm)) == tuple(sign * x for x in base)
