"""Named algebras, operator families and seeded random generators.

Matrix families are written as they are printed (row ``i`` lists the
coordinates of the image of ``e_i``) and transposed into the column-action
convention.  That orientation is the one that makes every member a
derivation; the test suite pins this against the solved derivation space.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .algebra import NLieAlgebra
from .constructions import CommAssocAlgebra
from .errors import MissingParam, ParseError, UnknownName
from .maps import LinearFunctional, LinearMap
from .scalars import QQ, get_field


def _printed(rows, field=QQ) -> LinearMap:
    return LinearMap(rows, field).transpose()


def abelian(n: int, d: int, field=QQ) -> NLieAlgebra:
    return NLieAlgebra(int(n), int(d), {}, get_field(field))


def dim3_nonabelian(field=QQ) -> NLieAlgebra:
    return NLieAlgebra.from_table(3, 3, {(1, 2, 3): {1: 1}}, field)


def dim4_simple(field=QQ) -> NLieAlgebra:
    return NLieAlgebra.from_table(
        3, 4, {(2, 3, 4): {1: 1}, (1, 2, 4): {3: 1}, (1, 3, 4): {2: 1}, (1, 2, 3): {4: 1}}, field
    )


def dim4_nonsimple(field=QQ) -> NLieAlgebra:
    return NLieAlgebra.from_table(3, 4, {(2, 3, 4): {1: 1}, (1, 2, 4): {3: 1}, (1, 3, 4): {2: 1}}, field)


def lie_ex1(field=QQ) -> NLieAlgebra:
    """Four-dimensional Lie algebra with ``[e1, e2] = e1``; e3, e4 central."""
    return NLieAlgebra.from_table(2, 4, {(1, 2): {1: 1}}, field)


def dim4_simple_der(a, b, c, d, e, f, field=QQ) -> LinearMap:
    return _printed(
        [[0, a, b, c],
         [a, 0, d, e],
         [-b, d, 0, f],
         [c, -e, f, 0]],
        field,
    )


def dim4_nonsimple_der(h, a, b, c, d, e, f, field=QQ) -> LinearMap:
    return _printed(
        [[h, a, b, 0],
         [a, h, c, 0],
         [-b, c, h, 0],
         [d, e, f, -h]],
        field,
    )


def T1(a, b, c, d, e, f, field=QQ) -> LinearMap:
    return dim4_nonsimple_der(0, a, b, c, d, e, f, field)


def T2(a, b, c, d, field=QQ) -> LinearMap:
    return _printed(
        [[a, 0, 0, 0],
         [0, a, 0, 0],
         [0, 0, a, 0],
         [b, c, d, -a]],
        field,
    )


def trunc_monomials(exponents):
    """Exponent vectors below the bounds, ordered by degree then variable."""
    mons = list(product(*(range(e) for e in exponents)))
    return sorted(mons, key=lambda m: (sum(m), [-x for x in m]))


def trunc_poly(exponents, field=QQ) -> CommAssocAlgebra:
    """``k[x_1..x_r] / (x_i^{e_i})`` on the monomial basis."""
    exponents = tuple(int(e) for e in exponents)
    if any(e < 1 for e in exponents):
        raise ParseError("truncation exponents must be positive")
    mons = trunc_monomials(exponents)
    index = {m: i for i, m in enumerate(mons)}
    fld = get_field(field)
    products = {}
    for i, m in enumerate(mons):
        for j in range(i, len(mons)):
            prod = tuple(a + b for a, b in zip(m, mons[j]))
            if prod in index:
                v = [fld.zero] * len(mons)
                v[index[prod]] = fld.one
                products[(i, j)] = tuple(v)
    return CommAssocAlgebra(len(mons), products, fld)


def euler_derivation(exponents, var: int, field=QQ) -> LinearMap:
    """``x_var d/dx_var``: scales each monomial by its degree in that variable."""
    mons = trunc_monomials(exponents)
    fld = get_field(field)
    return LinearMap(
        [[fld.coerce(m[var]) if i == j else fld.zero for j in range(len(mons))] for i, m in enumerate(mons)],
        fld,
    )


# -- registry -----------------------------------------------------------------

_LETTERS6 = ("a", "b", "c", "d", "e", "f")

BUILTINS = {
    "abelian": (("n", "d"), abelian, {"n": 3, "d": 5}),
    "dim3_nonabelian": ((), dim3_nonabelian, {}),
    "dim4_simple": ((), dim4_simple, {}),
    "dim4_nonsimple": ((), dim4_nonsimple, {}),
    "dim4_simple_der": (_LETTERS6, dim4_simple_der, dict.fromkeys(_LETTERS6, 1)),
    "dim4_nonsimple_der": (("h",) + _LETTERS6, dim4_nonsimple_der, {"h": 1, **dict.fromkeys(_LETTERS6, 1)}),
    "T1": (_LETTERS6, T1, dict.fromkeys(_LETTERS6, 1)),
    "T2": (("a", "b", "c", "d"), T2, dict.fromkeys("abcd", 1)),
    "trunc_poly": (("exponents",), trunc_poly, {"exponents": "3"}),
    "lie_ex1": ((), lie_ex1, {}),
}

_INTEGER_PARAMS = {"n", "d"}


def builtin(name: str, params: dict | None = None, field=QQ, defaults: bool = False):
    """Construct a named object; ``defaults`` fills omitted parameters."""
    try:
        names, build, default = BUILTINS[name]
    except KeyError:
        raise UnknownName(f"unknown builtin {name!r}; known: {', '.join(BUILTINS)}") from None
    params = dict(params or {})
    fld = get_field(field)
    args = []
    for p in names:
        if p not in params:
            if not defaults:
                raise MissingParam(f"{name} needs parameter {p!r}")
            params[p] = default[p]
        value = params[p]
        if name == "trunc_poly":
            value = _parse_exponents(value)
        elif name == "abelian" and p in _INTEGER_PARAMS:
            value = int(value)
        else:
            value = fld.coerce(value)
        args.append(value)
    unknown = set(params) - set(names)
    if unknown:
        raise UnknownName(f"{name} takes no parameter(s) {sorted(unknown)}")
    return build(*args, field=fld)


def _parse_exponents(value):
    if isinstance(value, str):
        parts = [p for p in value.replace(" ", "").split(",") if p]
        if not parts or not all(p.isdigit() for p in parts):
            raise ParseError(f"bad exponent list {value!r}")
        return tuple(int(p) for p in parts)
    if isinstance(value, int):
        return (value,)
    return tuple(int(v) for v in value)


# -- seeded randomness --------------------------------------------------------


def random_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_rect_map(rows: int, cols: int, field=QQ, bound: int = 3, seed=0) -> LinearMap:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return LinearMap([[random_rational(rng, bound) for _ in range(cols)] for _ in range(rows)], field)


def random_map(dim: int, field=QQ, bound: int = 3, seed=0) -> LinearMap:
    """Square map with entries ``p/q``, ``|p| <= bound``, ``1 <= q <= bound``."""
    return random_rect_map(dim, dim, field, bound, seed)


def random_functional(dim: int, field=QQ, bound: int = 3, seed=0) -> LinearFunctional:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return LinearFunctional([random_rational(rng, bound) for _ in range(dim)], field)


def random_params(names, rng: random.Random, bound: int = 4) -> dict:
    return {p: random_rational(rng, bound) for p in names}
