import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import CATALOG_ALGEBRAS, FILIPPOV_ALGEBRAS, LAMBDAS, algebra
from nlie import catalog
from nlie.algebra import NLieAlgebra, check_filippov, sort_sign
from nlie.cohomology import Cochain
from nlie.deform import (
    DeformationFamily,
    check_deformation_conditions,
    check_trivial,
    deformed_bracket,
    evaluate_at,
    is_nijenhuis,
    is_nijenhuis_unshuffle,
    omega_family,
    polynomial_map,
    power_identity,
)
from nlie.errors import IndexOutOfRange, NotNijenhuis, SingularMatrix
from nlie.maps import LinearMap

D3 = catalog.dim3_nonabelian()
S4 = catalog.dim4_simple()


def unit(i, d):
    return tuple(Fraction(int(k == i)) for k in range(d))


def neg(v):
    return tuple(-x for x in v)


def test_level_one_vanishes_on_simple_derivations():
    N = catalog.dim4_simple_der(1, 2, -1, 3, Fraction(1, 2), 2)
    level1 = deformed_bracket(S4, N, 1)
    assert level1.basis_bracket((1, 2, 3)) == S4.zero
    assert level1.basis_bracket((0, 1, 3)) == S4.zero


def test_level_two_at_a_equals_one():
    N = catalog.dim4_simple_der(1, 0, 0, 0, 0, 0)
    assert deformed_bracket(S4, N, 2).basis_bracket((0, 1, 3)) == neg(unit(2, 4))


@pytest.mark.parametrize("name", FILIPPOV_ALGEBRAS)
def test_identity_levels_are_binomial(name):
    # a_1 = n-1 and a_j = C(n, j) - a_{j-1} give C(n-1, j)
    alg = algebra(name)
    I = LinearMap.identity(alg.dim)
    for j, factor in ((1, 2), (2, 1)):
        level = deformed_bracket(alg, I, j)
        for key, v in alg.constants.items():
            assert level.basis_bracket(key) == tuple(factor * x for x in v)


def test_level_index_range():
    for j in (0, 3):
        with pytest.raises(IndexOutOfRange):
            deformed_bracket(S4, LinearMap.identity(4), j)


def test_diagonal_on_dim3():
    N = LinearMap([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    _, w2 = omega_family(D3, N).omegas
    assert w2(((0, 1), 2)) == (15, 0, 0)
    assert N.apply(w2(((0, 1), 2))) == (30, 0, 0) == D3.bracket(*(N.column(k) for k in range(3)))


def test_omega_two_for_a_equals_one():
    _, w2 = omega_family(S4, catalog.dim4_simple_der(1, 0, 0, 0, 0, 0)).omegas
    assert w2(((0, 1), 3)) == neg(unit(2, 4))


@pytest.mark.parametrize("name", CATALOG_ALGEBRAS)
def test_scalar_maps_are_nijenhuis(name):
    alg = algebra(name)
    N = LinearMap.scalar(Fraction(-5, 3), alg.dim)
    assert is_nijenhuis(alg, N).ok and is_nijenhuis_unshuffle(alg, N).ok


def test_zero_map():
    assert is_nijenhuis_unshuffle(S4, LinearMap.zero(4)).ok
    fam = omega_family(S4, LinearMap.zero(4))
    assert all(w.is_zero() for w in fam.omegas)


def test_dim3_random_maps_are_nijenhuis():
    for seed in range(10):
        N = catalog.random_map(3, seed=seed)
        assert is_nijenhuis(D3, N).ok and is_nijenhuis_unshuffle(D3, N).ok


def test_non_nijenhuis_witness():
    N = catalog.random_map(4, seed=1)
    report = is_nijenhuis(S4, N)
    assert not report.ok and report.witness["lhs"] != report.witness["rhs"]
    with pytest.raises(NotNijenhuis):
        omega_family(S4, N)


matrices4 = st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=4, max_size=4)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["dim4_simple", "dim4_nonsimple", "lie_ex1"]), matrices4)
def test_criteria_agree(name, rows):
    alg = algebra(name)
    N = LinearMap(rows)
    assert is_nijenhuis(alg, N).ok == is_nijenhuis_unshuffle(alg, N).ok


@settings(max_examples=25, deadline=None)
@given(matrices4, st.integers(1, 2), st.data())
def test_deformed_brackets_antisymmetric(rows, j, data):
    N = LinearMap(rows)
    level = deformed_bracket(S4, N, j)
    vec = st.tuples(*[st.integers(-2, 2)] * 4)
    args = [data.draw(vec) for _ in range(3)]
    base = level.bracket(*args)
    for perm in permutations(range(3)):
        sign, _ = sort_sign(perm)
        assert level.bracket(*(args[p] for p in perm)) == tuple(sign * x for x in base)


def test_evaluate_at_zero_is_base():
    fam = omega_family(D3, catalog.random_map(3, seed=2))
    assert evaluate_at(fam, 0) == D3
    assert check_filippov(evaluate_at(fam, 1)).ok


def test_non_cocycle_family_fails():
    rng = random.Random(17)
    junk = NLieAlgebra(3, 4, {(0, 1, 2): tuple(Fraction(rng.randint(-2, 2)) for _ in range(4)), (0, 2, 3): unit(0, 4)})
    fam = DeformationFamily(S4, [Cochain.from_nary(junk), Cochain.zero(2, 4)])
    report = check_filippov(evaluate_at(fam, 1))
    assert not report.ok and report.witness
    assert not check_deformation_conditions(fam).ok


def test_conditions_match_sampled_filippov():
    families = [
        DeformationFamily(S4, [Cochain.from_nary(S4), Cochain.zero(2, 4)]),
        DeformationFamily(S4, [Cochain.zero(2, 4), Cochain.zero(2, 4)]),
        DeformationFamily(S4, [Cochain.from_nary(catalog.dim4_nonsimple()), Cochain.zero(2, 4)]),
        omega_family(S4, catalog.dim4_simple_der(1, -1, 2, 0, 1, 3)),
    ]
    for fam in families:
        sampled = all(check_filippov(evaluate_at(fam, t)).ok for t in LAMBDAS)
        assert check_deformation_conditions(fam).ok == sampled


def test_family_size_checked():
    with pytest.raises(IndexOutOfRange):
        DeformationFamily(S4, [Cochain.zero(2, 4)])


def test_trivial_deformations():
    N = catalog.random_map(3, seed=6)
    for t in (0, 1, -1, Fraction(1, 2)):
        assert check_trivial(D3, N, t).ok
    assert check_trivial(S4, catalog.dim4_simple_der(2, 1, 0, -1, 1, 1), 2).ok


def test_polynomials():
    N = catalog.dim4_simple_der(1, 0, 2, 0, -1, 1)
    assert polynomial_map(S4, N, [0, 1]) == N
    assert polynomial_map(S4, N, [7]) == LinearMap.scalar(7, 4)
    M = LinearMap([[1, 2, 0], [0, 1, 1], [1, 0, 3]])
    inv = polynomial_map(D3, M, [1], min_exponent=-1)
    assert inv @ M == LinearMap.identity(3)
    assert is_nijenhuis(D3, inv).ok


def test_negative_powers_of_singular_map():
    with pytest.raises(SingularMatrix):
        polynomial_map(S4, LinearMap.zero(4), [0, 0, 1], min_exponent=-2)


def test_power_identity_all_ones_matches_unshuffle():
    N = catalog.dim4_simple_der(1, 2, 0, 0, 1, 0)
    assert power_identity(S4, N, (1, 1, 1)).ok == is_nijenhuis_unshuffle(S4, N).ok


def test_power_identity_examples():
    N = catalog.dim4_simple_der(1, 0, 0, 0, 0, 0)
    assert power_identity(S4, N, (2, 1, 3)).ok
    # Id + N is singular at a=1 (N has eigenvalue -1), so take another member
    M = LinearMap.identity(4) + catalog.dim4_simple_der(1, 2, 0, 0, 1, 0)
    assert M.det() == 9
    assert power_identity(S4, M, (-1, 2, 1)).ok
    assert power_identity(S4, LinearMap.identity(4), (3, -2, 0)).ok


def test_power_identity_errors():
    with pytest.raises(NotNijenhuis):
        power_identity(S4, catalog.random_map(4, seed=3), (1, 1, 1))
    singular = catalog.dim4_simple_der(1, 0, 0, 0, 0, 0)
    assert not singular.is_invertible()
    with pytest.raises(SingularMatrix):
        power_identity(S4, singular, (-1, 1, 1))
    with pytest.raises(IndexOutOfRange):
        power_identity(S4, singular, (1, 1))
