"""Command-line entry point.

Every command prints one JSON document on standard output.  Exit codes:
0 ok, 2 parse error, 3 precondition violation, 4 budget exceeded,
5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import curve_pairs as cp
from . import fibration as fib
from . import nilpotent as nil
from . import toric_fan as tf
from .fpgroups import (EnumerationExceeded, OrderBoundExceeded, Presentation,
                       PresentationSyntaxError, abelianization, coset_enumerate,
                       subgroup_abelianization)
from .suites import SUITES, run_suite

SCHEMA_VERSION = 1

OK, PARSE_ERROR, PRECONDITION, BUDGET, VERIFICATION = 0, 2, 3, 4, 5

DEFAULT_MAX_DENOMINATOR = 30
DEFAULT_MAX_COSETS = 100_000


class ParseError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


class VerificationFailed(RuntimeError):
    def __init__(self, payload: dict):
        super().__init__("verification failed")
        self.payload = payload


@dataclass(frozen=True)
class CommandResult:
    code: int
    payload: dict

    @property
    def status(self) -> str:
        return "ok" if self.code == OK else "error"

    def render(self) -> str:
        return json.dumps(self.payload, sort_keys=True)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _fmt(q: Fraction) -> str:
    return cp.format_fraction(q)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def _pair(text: str) -> tuple[int, int]:
    try:
        x, y = (int(p) for p in text.split(","))
    except ValueError as exc:
        raise ParseError(f"expected 'a,b', got {text!r}") from exc
    return x, y


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def _divisor(text: str) -> cp.CurveDivisor:
    try:
        return cp.CurveDivisor.from_json(_json_arg(text))
    except cp.PreconditionError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _fan(text: str) -> tf.Fan2D:
    data = _json_arg(text)
    if not isinstance(data, dict) or not isinstance(data.get("rays"), list):
        raise ParseError('fan JSON must look like {"rays": [[a,b], ...]}')
    return tf.Fan2D.from_json(data)


def _presentation(text: str) -> Presentation:
    if text.lstrip().startswith("{"):
        return Presentation.from_json(_json_arg(text))
    return Presentation.parse(text)


# commands


def cmd_classify(args) -> dict:
    D = _divisor(args.divisor).canonical()
    cls = cp.classify_trichotomy(D)
    degree, target = cp.abelianization_cover(D)
    op = cp.orbifold_presentation(D)
    group = cp.identify_group(D, args.max_cosets)
    return {"divisor": D.to_json(), "degree": _fmt(cp.pair_degree(D)), "class": cls.to_json(),
            "presentation": op.to_json(), "group": group.to_json(),
            "abelianization_cover": {"degree": degree, "target": target.to_json()}}


def cmd_enumerate(args) -> dict:
    rows, counts = [], {cp.TORIC: 0, cp.ELLIPTIC: 0, cp.SPORADIC: 0}
    for D in cp.enumerate_standard_pairs(args.max_denominator):
        cls = cp.classify_trichotomy(D)
        counts[cls.kind] += 1
        rows.append({"coeffs": [_fmt(c) for c in D.coeffs], "kind": cls.kind, "label": str(cls)})
    return {"max_denominator": args.max_denominator, "counts": counts, "pairs": rows}


def cmd_coset(args) -> dict:
    P = _presentation(args.presentation)
    gens = [P.word(w) for w in args.subgroup]
    t = coset_enumerate(P, gens, args.max_cosets)
    payload = {"presentation": str(P), "subgroup": args.subgroup, **t.to_json()}
    if not t.complete:
        raise BudgetExceeded(f"coset enumeration exceeded {args.max_cosets} cosets", payload)
    return payload


def cmd_abelianize(args) -> dict:
    P = _presentation(args.presentation)
    if not args.subgroup:
        return {"presentation": str(P), "abelianization": abelianization(P).to_json()}
    gens = [P.word(w) for w in args.subgroup]
    index, inv = subgroup_abelianization(P, gens, args.max_cosets)
    return {"presentation": str(P), "subgroup": args.subgroup, "index": index,
            "abelianization": inv.to_json()}


def cmd_heis(args) -> dict:
    if args.op in ("mul", "comm"):
        u = nil.HeisenbergElement.parse(args.k, args.u)
        v = nil.HeisenbergElement.parse(args.k, args.v)
        out = nil.h_mul(u, v) if args.op == "mul" else nil.h_commutator(u, v)
        return {"k": args.k, "u": str(u), "v": str(v), "result": str(out)}
    if args.op == "minindex":
        if args.m is None:
            raise ParseError("minindex needs --m")
        if args.k == 0 or args.m < 1:
            raise cp.PreconditionError("minindex needs m >= 1 and k != 0")
        bound = args.det_bound if args.det_bound is not None else 4 * args.m
        if bound < args.m:
            raise cp.PreconditionError("--det-bound must be at least m")
        index, datum = nil.min_abelian_normal_index(args.m, args.k, bound)
        return {"m": args.m, "k": args.k, "det_bound": bound, "index": index,
                "lower_bound": nil.sqrt_lower_bound(args.m, args.k), "subgroup": datum.to_json()}
    va, witness = nil.is_virtually_abelian(args.k)
    return {"k": args.k, "virtually_abelian": va,
            "witness": witness.to_json() if witness is not None else None}


def cmd_fan(args) -> dict:
    op = args.op
    if op == "index":
        v, w = _pair(args.v), _pair(args.w)
        rep = tf.cone_report(v, w)
        return {"v": list(v), "w": list(w), **rep.to_json()}
    if op == "resolve":
        v, w = _pair(args.v), _pair(args.w)
        return {"v": list(v), "w": list(w), **tf.cone_report(v, w).to_json(),
                "resolution": [{"ray": list(r), "self_intersection": e} for r, e in tf.hj_resolve(v, w)]}
    if op == "complexity":
        b = tf.BoundarySum(args.rho, _rational(args.coeff_sum))
        c, toric = tf.complexity(b, 2)
        return {**b.to_json(), "complexity": _fmt(c), "toric": toric}
    if args.fan is None:
        raise ParseError(f"fan {op} needs a fan JSON argument")
    f = _fan(args.fan)
    if op == "subdivide":
        g = tf.star_subdivide(f, _pair(args.ray))
        return {**g.to_json(), "picard_rank": g.picard_rank, "cones": tf.cone_table(g)}
    if op == "selfint":
        if args.ray is not None:
            rays = [_pair(args.ray)]
        else:
            rays = list(f.rays)
        return {**f.to_json(), "self_intersections": [
            {"ray": list(r), "self_intersection": _fmt(tf.self_intersection(f, f.position(r)))}
            for r in rays]}
    # recognize
    return {**f.to_json(), "surface": tf.recognize(f), "picard_rank": f.picard_rank,
            "cones": tf.cone_table(f)}


def _contribution(text: str) -> tuple[Fraction, int]:
    b, _, mult = text.partition(":")
    try:
        return _rational(b), int(mult or 1)
    except ValueError as exc:
        raise ParseError(f"expected 'b:mult', got {text!r}") from exc


def cmd_adj(args) -> dict:
    d = fib.AdjunctionPointDatum(args.m, tuple(_contribution(c) for c in args.contrib))
    return {**d.to_json(), "coefficient": _fmt(fib.adjunction_coefficient(d))}


def cmd_basepair(args) -> dict:
    f = fib.FibrationFiberDatum(args.m, _rational(args.a))
    return {**f.to_json(), "delta": _fmt(fib.base_pair_coefficient(f))}


def cmd_compat(args) -> dict:
    c = fib.CoverCoeffDatum(args.m, _rational(args.b), _rational(args.a))
    return {**c.to_json(), "compatible": fib.check_compatible(c)}


def cmd_pullback(args) -> dict:
    b = _rational(args.b)
    return {"m": args.m, "b": _fmt(b), "a": _fmt(fib.ramification_pullback(b, args.m))}


def cmd_cert(args) -> dict:
    return {"fiber": args.fiber, "base": args.base,
            **fib.nori_certificate(args.fiber, args.base, args.k).to_json()}


def cmd_verify(args) -> dict:
    results = run_suite(args.suite)
    payload = {"suite": args.suite, "passed": all(r.passed for r in results),
               "suites": [r.to_json() for r in results]}
    if not payload["passed"]:
        raise VerificationFailed(payload)
    return payload


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orbigroups", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="trichotomy, presentation and group of a curve pair")
    s.add_argument("divisor", help='{"genus": 0, "points": [{"label": "p", "coeff": "1/2"}, ...]}')
    s.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", help="classify every standard genus-0 pair of degree <= 0")
    s.add_argument("--max-denominator", type=int, default=DEFAULT_MAX_DENOMINATOR)
    s.set_defaults(func=cmd_enumerate)

    for name, func in (("coset", cmd_coset), ("abelianize", cmd_abelianize)):
        s = sub.add_parser(name)
        s.add_argument("presentation", help="'<a,b | a^2, b^3, (ab)^5>' or presentation JSON")
        s.add_argument("--subgroup", action="append", default=[], metavar="WORD")
        s.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
        s.set_defaults(func=func)

    s = sub.add_parser("heis", help="arithmetic in H_k and its quotients")
    s.add_argument("op", choices=["mul", "comm", "minindex", "vabelian"])
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--u", default="0,0,0")
    s.add_argument("--v", default="0,0,0")
    s.add_argument("--m", type=int)
    s.add_argument("--det-bound", type=int, help="largest sublattice index scanned (default 4m)")
    s.set_defaults(func=cmd_heis)

    s = sub.add_parser("fan", help="complete fans in the plane")
    s.add_argument("op", choices=["index", "subdivide", "resolve", "selfint", "recognize", "complexity"])
    s.add_argument("fan", nargs="?", help='{"rays": [[1,0], [0,1], [-1,-1]]}')
    s.add_argument("--v")
    s.add_argument("--w")
    s.add_argument("--ray")
    s.add_argument("--rho", type=int)
    s.add_argument("--coeff-sum")
    s.set_defaults(func=cmd_fan)

    s = sub.add_parser("adj", help="coefficient of a point under adjunction")
    s.add_argument("--m", type=int, required=True, help="orbifold index m_P")
    s.add_argument("--contrib", action="append", default=[], metavar="B:MULT")
    s.set_defaults(func=cmd_adj)

    s = sub.add_parser("basepair", help="base coefficient of a multiple fiber")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--a", required=True)
    s.set_defaults(func=cmd_basepair)

    s = sub.add_parser("compat", help="compatibility of a ramified cover")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--a", required=True)
    s.set_defaults(func=cmd_compat)

    s = sub.add_parser("pullback", help="upstairs coefficient under ramification")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_pullback)

    s = sub.add_parser("cert", help="structure certificate for a Mori fiber space")
    kinds = [cp.TORIC, cp.ELLIPTIC, cp.SPORADIC]
    s.add_argument("--fiber", choices=kinds, required=True)
    s.add_argument("--base", choices=kinds, required=True)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_cert)

    s = sub.add_parser("verify", help="replay a verification suite")
    s.add_argument("suite", choices=["all", *SUITES])
    s.set_defaults(func=cmd_verify)
    return p


def _error(code: int, kind: str, message: str, extra: dict | None = None) -> CommandResult:
    return CommandResult(code, {"schema": SCHEMA_VERSION, "status": "error",
                                "error": {"code": code, "kind": kind, "message": message},
                                **(extra or {})})


def run(argv: list[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
        payload = args.func(args)
    except (ParseError, PresentationSyntaxError) as exc:
        return _error(PARSE_ERROR, "parse", str(exc))
    except (cp.PreconditionError, tf.FanError, nil.ParameterMismatch) as exc:
        return _error(PRECONDITION, "precondition", str(exc))
    except BudgetExceeded as exc:
        return _error(BUDGET, "budget", str(exc), {"result": exc.payload})
    except (EnumerationExceeded, OrderBoundExceeded) as exc:
        return _error(BUDGET, "budget", str(exc) or "budget exceeded")
    except VerificationFailed as exc:
        return _error(VERIFICATION, "verification", str(exc), {"result": exc.payload})
    except ValueError as exc:
        return _error(PRECONDITION, "precondition", str(exc))
    return CommandResult(OK, {"schema": SCHEMA_VERSION, "status": "ok", "result": payload})


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    print(result.render())
    return result.code


if __name__ == "__main__":
    sys.exit(main())
