"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the report carries a witness), 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, io
from .algebra import check_fi3, check_filippov, check_leibniz_fundamental, derivation_space, is_derivation
from .cohomology import adjoint_rep, semidirect_product
from .constructions import bracket_D1_D2, check_comm_assoc, bracket_D1_D2_D3, bracket_f_D, extend_by_functional
from .deform import (
    check_deformation_conditions,
    check_trivial,
    deformed_bracket,
    evaluate_at,
    is_nijenhuis,
    is_nijenhuis_unshuffle,
    omega_family,
    power_identity,
)
from .errors import InputError, MathError, NLieError, ParseError
from .operators import classify_reports, is_o_operator, lift_o_operator
from .report import VerificationReport, _jsonable
from .scalars import parse_scalar

SAMPLE_PARAMETERS = ["0", "1", "-1", "2", "-2", "3", "1/2"]


class Outcome:
    """Checks plus optional data produced by one command."""

    def __init__(self, command):
        self.command = command
        self.checks: list[VerificationReport] = []
        self.data: dict = {}
        self.raw = None

    def add(self, report: VerificationReport):
        self.checks.append(report)
        return report

    @property
    def ok(self):
        return all(r.ok for r in self.checks)

    def to_dict(self):
        out = {
            "command": self.command,
            "ok": self.ok,
            "checks": [{"name": r.name, "ok": r.ok, "witness": _jsonable(r.witness)} for r in self.checks],
        }
        if self.data:
            out["data"] = _jsonable(self.data)
        return out


# -- loaders ------------------------------------------------------------------


def _algebra(path):
    return io.algebra_from_json(io.load_file(path))


def _map(path, field):
    return io.map_from_json(io.load_file(path)).to_field(field)


def _functional(path, field):
    return io.functional_from_json(io.load_file(path)).to_field(field)


def _comm_assoc(path):
    return io.comm_assoc_from_json(io.load_file(path))


def _failure(name, exc: MathError) -> VerificationReport:
    witness = dict(exc.witness) if isinstance(exc.witness, dict) else {}
    witness["error"] = type(exc).__name__
    witness["message"] = str(exc)
    return VerificationReport(name, False, witness)


# -- commands -----------------------------------------------------------------


def cmd_check(args, out: Outcome):
    doc = io.load_file(args.algebra)
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind == "comm-assoc":
        out.add(check_comm_assoc(io.comm_assoc_from_json(doc)))
        return
    if kind != "n-lie":
        # maps and functionals carry no identity of their own; check that
        # they decode and re-encode without loss
        obj = io.from_json(doc)
        again = io.to_json(obj)
        out.add(VerificationReport("roundtrip", io.from_json(again) == obj, None, 1))
        return
    alg = io.algebra_from_json(doc)
    filippov = out.add(check_filippov(alg))
    out.add(check_fi3(alg))
    if filippov.ok:
        out.add(check_leibniz_fundamental(alg))


def _brackets_data(cand):
    return {" ".join(f"e{k + 1}" for k in key): list(v) for key, v in sorted(cand.constants.items())}


def cmd_nijenhuis(args, out: Outcome):
    alg = _algebra(args.algebra)
    N = _map(args.map, alg.field)
    out.add(is_nijenhuis(alg, N))
    out.add(is_nijenhuis_unshuffle(alg, N))
    out.data["deformed"] = {
        str(j): _brackets_data(deformed_bracket(alg, N, j)) for j in range(1, alg.arity)
    }


def cmd_classify(args, out: Outcome):
    alg = _algebra(args.algebra)
    N = _map(args.map, alg.field)
    for r in classify_reports(alg, N):
        out.add(r)


def cmd_derivations(args, out: Outcome):
    alg = _algebra(args.algebra)
    basis = derivation_space(alg)
    out.data["dimension"] = len(basis)
    out.data["basis"] = [D.formatted() for D in basis]
    for k, D in enumerate(basis, start=1):
        r = is_derivation(alg, D)
        r.name = f"derivation[{k}]"
        out.add(r)


def cmd_deform(args, out: Outcome):
    alg = _algebra(args.algebra)
    N = _map(args.map, alg.field)
    fam = omega_family(alg, N)
    out.data["family"] = io.family_to_json(fam)
    out.add(check_deformation_conditions(fam))
    for text in args.parameters or SAMPLE_PARAMETERS:
        t = parse_scalar(text, alg.field)
        r = check_filippov(evaluate_at(fam, t))
        r.name = f"filippov[t={text}]"
        out.add(r)
        out.add(check_trivial(alg, N, t))
    top = deformed_bracket(alg, N, alg.arity - 1)
    r = check_filippov(top)
    r.name = "filippov[top level]"
    out.add(r)


def cmd_oop(args, out: Outcome):
    alg = _algebra(args.algebra)
    if args.rep == "adjoint":
        rep = adjoint_rep(alg)
    else:
        rep = io.representation_from_json(io.load_file(args.rep), alg)
    T = _map(args.map, alg.field)
    out.add(is_o_operator(alg, rep, T))
    if args.lift:
        lifted = lift_o_operator(alg, rep, T)
        r = is_nijenhuis(semidirect_product(alg, rep), lifted)
        r.name = "nijenhuis[lift]"
        out.add(r)


def cmd_construct(args, out: Outcome):
    kind, inputs = args.kind, args.inputs
    expected = {"extend": 2, "fd": 3, "d1d2": 3, "d1d2d3": 4}[kind]
    if len(inputs) != expected:
        raise InputError(f"construct {kind} takes {expected} input files, got {len(inputs)}")
    if kind == "extend":
        alg = _algebra(inputs[0])
        result = extend_by_functional(alg, _functional(inputs[1], alg.field))
    else:
        A = _comm_assoc(inputs[0])
        if kind == "fd":
            result = bracket_f_D(A, _functional(inputs[1], A.field), _map(inputs[2], A.field))
        elif kind == "d1d2":
            result = bracket_D1_D2(A, *(_map(p, A.field) for p in inputs[1:]))
        else:
            result = bracket_D1_D2_D3(A, *(_map(p, A.field) for p in inputs[1:]))
    out.data["algebra"] = io.algebra_to_json(result)
    out.add(check_filippov(result))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(io.algebra_to_json(result), fh, indent=2)


def cmd_power_identity(args, out: Outcome):
    alg = _algebra(args.algebra)
    N = _map(args.map, alg.field)
    try:
        exponents = [int(x) for x in args.exponents.split(",")]
    except ValueError:
        raise ParseError(f"bad exponent list {args.exponents!r}") from None
    out.add(power_identity(alg, N, exponents))


def _params(pairs):
    params = {}
    for item in pairs or []:
        if "=" not in item:
            raise ParseError(f"parameter {item!r} is not of the form name=value")
        k, v = item.split("=", 1)
        params[k.strip()] = v.strip()
    return params


def cmd_catalog(args, out: Outcome):
    if args.action == "list":
        out.data["builtins"] = {name: list(entry[0]) for name, entry in catalog.BUILTINS.items()}
        out.raw = "\n".join(
            f"{name}({', '.join(entry[0])})" if entry[0] else name for name, entry in catalog.BUILTINS.items()
        )
        return
    if args.action == "random-map":
        M = catalog.random_map(args.dim, bound=args.bound, seed=args.seed)
        out.raw = io.map_to_json(M)
        return
    if not args.name:
        raise InputError("catalog show needs a name")
    obj = catalog.builtin(args.name, _params(args.param), field=args.field, defaults=True)
    out.raw = io.to_json(obj)


COMMANDS = {
    "check": cmd_check,
    "nijenhuis": cmd_nijenhuis,
    "classify": cmd_classify,
    "derivations": cmd_derivations,
    "deform": cmd_deform,
    "oop": cmd_oop,
    "construct": cmd_construct,
    "power-identity": cmd_power_identity,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="nlie", description="Exact verifier for n-Lie algebra identities.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Filippov, FI3 and Leibniz checks (or a well-formedness check)")
    p.add_argument("algebra")

    for name, helptext in (("nijenhuis", "both Nijenhuis criteria"), ("classify", "derivation / Rota-Baxter / Nijenhuis")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("algebra")
        p.add_argument("map")

    p = sub.add_parser("derivations", parents=[common], help="basis of the derivation space")
    p.add_argument("algebra")

    p = sub.add_parser("deform", parents=[common], help="deformation generated by a Nijenhuis map")
    p.add_argument("algebra")
    p.add_argument("map")
    p.add_argument("--lambda", dest="parameters", action="append", metavar="SCALAR")

    p = sub.add_parser("oop", parents=[common], help="O-operator check")
    p.add_argument("algebra")
    p.add_argument("rep", help="representation JSON file, or 'adjoint'")
    p.add_argument("map")
    p.add_argument("--lift", action="store_true")

    p = sub.add_parser("construct", parents=[common], help="build a bracket from lower data")
    p.add_argument("kind", choices=["extend", "fd", "d1d2", "d1d2d3"])
    p.add_argument("inputs", nargs="+")
    p.add_argument("--output", "-o")

    p = sub.add_parser("power-identity", parents=[common], help="unshuffle identity with powers")
    p.add_argument("algebra")
    p.add_argument("map")
    p.add_argument("--exponents", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list or show builtin objects")
    p.add_argument("action", choices=["list", "show", "random-map"])
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.add_argument("--field", default="Q", choices=["Q", "Q(i)"])
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--bound", type=int, default=3)
    return parser


def _emit(out: Outcome, fmt: str, stream):
    if out.raw is not None:
        if isinstance(out.raw, str) and fmt == "text":
            print(out.raw, file=stream)
        elif isinstance(out.raw, str):
            print(json.dumps(out.to_dict(), indent=2), file=stream)
        else:
            print(json.dumps(out.raw, indent=2), file=stream)
        return
    if fmt == "json":
        print(json.dumps(out.to_dict(), indent=2), file=stream)
        return
    for r in out.checks:
        print(r.summary(), file=stream)
    for key, value in out.data.items():
        if key in ("family", "algebra"):
            continue
        print(f"{key}: {json.dumps(_jsonable(value))}", file=stream)
    print("OK" if out.ok else "FAILED", file=stream)


def _error(command, fmt, exc, stream):
    if fmt == "json":
        doc = {"command": command, "ok": False, "checks": [], "error": {"type": type(exc).__name__, "message": str(exc)}}
        if getattr(exc, "position", None) is not None:
            doc["error"]["position"] = exc.position
        print(json.dumps(doc, indent=2), file=stream)
    else:
        print(f"error: {exc}", file=sys.stderr)


def run(argv=None, stream=None) -> int:
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.format = getattr(args, "format", "text")
    args.seed = getattr(args, "seed", 0)
    out = Outcome(args.command)
    try:
        COMMANDS[args.command](args, out)
    except MathError as exc:
        out.add(_failure(args.command, exc))
    except (InputError, NLieError, OSError, ValueError, TypeError, KeyError) as exc:
        _error(args.command, args.format, exc, stream)
        return 2
    _emit(out, args.format, stream)
    return 0 if out.ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
