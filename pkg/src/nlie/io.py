"""JSON forms of every object, with 1-based indices and scalar strings."""

from __future__ import annotations

import json

from .algebra import NLieAlgebra
from .cohomology import Cochain, Representation
from .constructions import CommAssocAlgebra
from .deform import DeformationFamily
from .errors import DimensionMismatch, ParseError, ShapeMismatch
from .maps import LinearFunctional, LinearMap
from .scalars import QQ, format_scalar, get_field


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", exc.pos) from None


def load_file(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _scalar(x, field):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"scalars must be strings or integers, got {x!r}")
    if isinstance(x, (str, int)):
        return field.coerce(x)
    raise ParseError(f"expected a scalar, got {type(x).__name__}")


def _get(obj, key, kind):
    if not isinstance(obj, dict):
        raise ParseError(f"{kind}: expected a JSON object")
    if key not in obj:
        raise ParseError(f"{kind}: missing key {key!r}")
    return obj[key]


def _int(obj, key, kind):
    v = _get(obj, key, kind)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ParseError(f"{kind}: {key!r} must be a non-negative integer")
    return v


def _expect_kind(obj, kind):
    found = _get(obj, "kind", kind)
    if found != kind:
        raise ParseError(f"expected kind {kind!r}, got {found!r}")


def _field(obj):
    return get_field(obj.get("field", "Q")) if isinstance(obj, dict) else QQ


def _sparse_vector(value, dim, field, kind):
    if not isinstance(value, dict):
        raise ParseError(f"{kind}: 'value' must map indices to scalars")
    vec = [field.zero] * dim
    for k, c in value.items():
        if not str(k).isdigit() or not 1 <= int(k) <= dim:
            raise DimensionMismatch(f"{kind}: index {k!r} outside [1, {dim}]")
        vec[int(k) - 1] = _scalar(c, field)
    return tuple(vec)


def _dense_vector(values, dim, field, kind):
    if not isinstance(values, list) or len(values) != dim:
        raise ShapeMismatch(f"{kind}: expected a list of {dim} scalars")
    return tuple(_scalar(c, field) for c in values)


def _matrix(rows, nrows, ncols, field, kind):
    if not isinstance(rows, list) or len(rows) != nrows:
        raise ShapeMismatch(f"{kind}: expected {nrows} rows")
    return [_dense_vector(r, ncols, field, kind) for r in rows]


def _indices(on, length, dim, kind, strict=True):
    if not isinstance(on, list) or len(on) != length or not all(isinstance(i, int) and not isinstance(i, bool) for i in on):
        raise ShapeMismatch(f"{kind}: 'on' must list {length} integer indices")
    if any(not 1 <= i <= dim for i in on):
        raise DimensionMismatch(f"{kind}: index in {on} outside [1, {dim}]")
    if strict and any(a >= b for a, b in zip(on, on[1:])):
        raise ParseError(f"{kind}: 'on' must be strictly increasing, got {on}")
    return tuple(i - 1 for i in on)


def _vec_sparse(v):
    return {str(i + 1): format_scalar(x) for i, x in enumerate(v) if x}


def _vec_dense(v):
    return [format_scalar(x) for x in v]


# -- algebras -----------------------------------------------------------------


def algebra_to_json(alg: NLieAlgebra) -> dict:
    return {
        "kind": "n-lie",
        "arity": alg.arity,
        "dim": alg.dim,
        "field": alg.field.name,
        "brackets": [
            {"on": [k + 1 for k in key], "value": _vec_sparse(v)} for key, v in sorted(alg.constants.items())
        ],
    }


def algebra_from_json(obj) -> NLieAlgebra:
    kind = "n-lie"
    _expect_kind(obj, kind)
    arity, dim = _int(obj, "arity", kind), _int(obj, "dim", kind)
    fld = _field(obj)
    constants = {}
    brackets = _get(obj, "brackets", kind)
    if not isinstance(brackets, list):
        raise ParseError(f"{kind}: 'brackets' must be a list")
    for entry in brackets:
        key = _indices(_get(entry, "on", kind), arity, dim, kind)
        if key in constants:
            raise ParseError(f"{kind}: duplicate bracket on {[k + 1 for k in key]}")
        constants[key] = _sparse_vector(_get(entry, "value", kind), dim, fld, kind)
    return NLieAlgebra(arity, dim, constants, fld)


# -- maps ---------------------------------------------------------------------


def map_to_json(M: LinearMap) -> dict:
    if M.is_square:
        return {"kind": "linear-map", "dim": M.rows, "field": M.field.name, "matrix": [_vec_dense(r) for r in M.matrix]}
    return {
        "kind": "rect-map",
        "rows": M.rows,
        "cols": M.cols,
        "field": M.field.name,
        "matrix": [_vec_dense(r) for r in M.matrix],
    }


def map_from_json(obj) -> LinearMap:
    kind = _get(obj, "kind", "map")
    fld = _field(obj)
    if kind == "linear-map":
        d = _int(obj, "dim", kind)
        return LinearMap(_matrix(_get(obj, "matrix", kind), d, d, fld, kind), fld)
    if kind == "rect-map":
        r, c = _int(obj, "rows", kind), _int(obj, "cols", kind)
        return LinearMap(_matrix(_get(obj, "matrix", kind), r, c, fld, kind), fld) if r else LinearMap((), fld)
    raise ParseError(f"expected kind 'linear-map' or 'rect-map', got {kind!r}")


def functional_to_json(f: LinearFunctional) -> dict:
    return {"kind": "functional", "dim": f.dim, "field": f.field.name, "values": _vec_dense(f.values)}


def functional_from_json(obj) -> LinearFunctional:
    kind = "functional"
    _expect_kind(obj, kind)
    d = _int(obj, "dim", kind)
    fld = _field(obj)
    return LinearFunctional(_dense_vector(_get(obj, "values", kind), d, fld, kind), fld)


# -- representations ----------------------------------------------------------


def representation_to_json(rep: Representation) -> dict:
    return {
        "kind": "representation",
        "vdim": rep.vdim,
        "rho": [
            {"on": [k + 1 for k in key], "matrix": [_vec_dense(r) for r in m]}
            for key, m in sorted(rep.rho.items())
        ],
    }


def representation_from_json(obj, alg: NLieAlgebra) -> Representation:
    kind = "representation"
    _expect_kind(obj, kind)
    vdim = _int(obj, "vdim", kind)
    rho = {}
    entries = _get(obj, "rho", kind)
    if not isinstance(entries, list):
        raise ParseError(f"{kind}: 'rho' must be a list")
    for entry in entries:
        key = _indices(_get(entry, "on", kind), alg.arity - 1, alg.dim, kind)
        rho[key] = _matrix(_get(entry, "matrix", kind), vdim, vdim, alg.field, kind)
    return Representation(alg, vdim, rho)


# -- commutative associative algebras ----------------------------------------


def comm_assoc_to_json(A: CommAssocAlgebra) -> dict:
    return {
        "kind": "comm-assoc",
        "dim": A.dim,
        "field": A.field.name,
        "products": [
            {"on": [i + 1, j + 1], "value": _vec_sparse(v)} for (i, j), v in sorted(A.products.items())
        ],
    }


def comm_assoc_from_json(obj) -> CommAssocAlgebra:
    kind = "comm-assoc"
    _expect_kind(obj, kind)
    d = _int(obj, "dim", kind)
    fld = _field(obj)
    products = {}
    entries = _get(obj, "products", kind)
    if not isinstance(entries, list):
        raise ParseError(f"{kind}: 'products' must be a list")
    for entry in entries:
        i, j = _indices(_get(entry, "on", kind), 2, d, kind, strict=False)
        if i > j:
            raise ParseError(f"{kind}: 'on' must satisfy i <= j, got {[i + 1, j + 1]}")
        products[(i, j)] = _sparse_vector(_get(entry, "value", kind), d, fld, kind)
    return CommAssocAlgebra(d, products, fld)


# -- deformation families -----------------------------------------------------


def family_to_json(fam: DeformationFamily) -> dict:
    base = fam.base
    omegas = []
    for w in fam.omegas:
        nary = w.to_nary(base.arity, base.dim)
        omegas.append({"brackets": algebra_to_json(nary)["brackets"]})
    return {"kind": "deformation", "base": algebra_to_json(base), "omegas": omegas}


def family_from_json(obj) -> DeformationFamily:
    kind = "deformation"
    _expect_kind(obj, kind)
    base = algebra_from_json(_get(obj, "base", kind))
    omegas = []
    for table in _get(obj, "omegas", kind):
        nary = algebra_from_json(
            {"kind": "n-lie", "arity": base.arity, "dim": base.dim, "field": base.field.name,
             "brackets": _get(table, "brackets", kind)}
        )
        omegas.append(Cochain.from_nary(nary))
    return DeformationFamily(base, omegas)


# -- dispatch -----------------------------------------------------------------


def to_json(obj) -> dict:
    if isinstance(obj, NLieAlgebra):
        return algebra_to_json(obj)
    if isinstance(obj, LinearMap):
        return map_to_json(obj)
    if isinstance(obj, LinearFunctional):
        return functional_to_json(obj)
    if isinstance(obj, Representation):
        return representation_to_json(obj)
    if isinstance(obj, CommAssocAlgebra):
        return comm_assoc_to_json(obj)
    if isinstance(obj, DeformationFamily):
        return family_to_json(obj)
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def from_json(obj):
    """Decode any self-describing object (representations need an algebra)."""
    kind = _get(obj, "kind", "object")
    decoders = {
        "n-lie": algebra_from_json,
        "linear-map": map_from_json,
        "rect-map": map_from_json,
        "functional": functional_from_json,
        "comm-assoc": comm_assoc_from_json,
        "deformation": family_from_json,
    }
    if kind not in decoders:
        raise ParseError(f"unknown kind {kind!r}")
    return decoders[kind](obj)


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=2)
