"""Command-line interface: ``delpair {intersect,deligne,arith,verify}``.

Problem files are JSON validated against ``delpair.schema``; every number in
a report is written as a decimal string (``a/b`` for rationals).  Exit codes:
0 success, 1 computation error, 2 schema error, 3 suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

import jsonschema

from .arith.domains import parse_domain
from .arith.parse import ParseError, default_names, parse_form, parse_poly
from .arithsurf import (
    ArithDivisor,
    BaseS,
    RationalFunc,
    intwithrat_sides,
    local_decomposition,
    norm_divisor,
    pairing,
    principal_divisor,
    shift_sides,
    weil_reciprocity_sides,
)
from .deligne import (
    RelBundle,
    SplitFamily,
    deligne_pairing,
    det_chi_check,
    det_rf,
    n1_expansion_check,
    pullback_axiom_check,
    restriction_axiom_check,
    restriction_degree,
)
from .grobner import DEFAULT_BUDGET, BudgetExceeded, Ideal
from .intersect import ProjScheme, intersection_number, local_multiplicity, total_multiplicity, vanishing_check
from .schema import ARITH, DELIGNE, INTERSECT, SCHEMA_VERSION
from .suites import SUITES, run_suite

EXIT_OK, EXIT_COMPUTE, EXIT_SCHEMA, EXIT_SUITE = 0, 1, 2, 3

_SCHEMAS = {"intersect": INTERSECT, "deligne": DELIGNE, "arith": ARITH}


class SchemaError(Exception):
    def __init__(self, message: str, location: str = "$"):
        super().__init__(message)
        self.location = location


@dataclass(frozen=True)
class ProblemSpec:
    """A validated problem: command tag, payload of text-grammar strings, seed."""

    command: str
    payload: dict = field(default_factory=dict)
    seed: int | None = None

    @classmethod
    def from_dict(cls, data) -> "ProblemSpec":
        if not isinstance(data, dict):
            raise SchemaError("problem file must be a JSON object")
        cmd = data.get("command")
        if cmd not in _SCHEMAS:
            raise SchemaError(f"command must be one of {sorted(_SCHEMAS)}, got {cmd!r}", "$.command")
        validator = jsonschema.Draft202012Validator(_SCHEMAS[cmd])
        errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
        if errors:
            e = errors[0]
            raise SchemaError(e.message, "$" + "".join(f"[{p!r}]" for p in e.absolute_path))
        payload = {k: v for k, v in data.items() if k not in ("schema_version", "command", "seed")}
        seed = int(data["seed"]) if "seed" in data else None
        return cls(cmd, payload, seed)

    def to_dict(self) -> dict:
        out = {"schema_version": SCHEMA_VERSION, "command": self.command}
        if self.seed is not None:
            out["seed"] = str(self.seed)
        out.update(self.payload)
        return out


def exact(obj):
    """Replace every int and Fraction by its decimal string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [exact(v) for v in obj]
    return str(obj)


# -- payload parsing -----------------------------------------------------


def _parse(fn, text, location, *args):
    try:
        return fn(text, *args)
    except (ParseError, ValueError) as exc:
        raise SchemaError(f"cannot parse {text!r}: {exc}", location) from exc


def _field_of(spec: ProblemSpec):
    return parse_domain(spec.payload.get("field", "QQ"))


def _base(spec: ProblemSpec) -> BaseS:
    try:
        return BaseS.parse(spec.payload["base"])
    except (ValueError, KeyError) as exc:
        raise SchemaError(f"bad base tag: {exc}", "$['base']") from exc


def _divisor(B: BaseS, data: dict | None, where: str) -> ArithDivisor:
    D = ArithDivisor(B)
    if data is None:
        return D
    for i, item in enumerate(data.get("horizontal", [])):
        loc = f"$['{where}']['horizontal'][{i}]"
        F = _parse(parse_form, item["form"], loc + "['form']", B.ring)
        if F.is_constant():
            raise SchemaError("a horizontal component needs positive degree", loc)
        D = D + int(item.get("mult", "1")) * ArithDivisor.of_form(B, F)
    for i, item in enumerate(data.get("vertical", [])):
        loc = f"$['{where}']['vertical'][{i}]['prime']"
        s = _parse(B.parse_prime, item["prime"], loc)
        D = D + ArithDivisor.fiber(B, s, int(item.get("mult", "1")))
    return D


def _func(B: BaseS, data: dict | None, where: str) -> RationalFunc:
    if data is None:
        raise SchemaError(f"task needs a rational function {where!r}", "$")
    num = _parse(parse_form, data["num"], f"$['{where}']['num']", B.ring)
    den = _parse(parse_form, data["den"], f"$['{where}']['den']", B.ring)
    try:
        return RationalFunc(B, num, den)
    except ValueError as exc:
        raise SchemaError(str(exc), f"$['{where}']") from exc


def _require(spec: ProblemSpec, *keys):
    for k in keys:
        if k not in spec.payload:
            raise SchemaError(f"task {spec.payload.get('task')!r} needs field {k!r}", "$")


def divisor_json(D: ArithDivisor) -> dict:
    D = D.canonical()
    return {
        "horizontal": [{"form": str(F), "mult": n} for F, n in D.horizontal_items()],
        "vertical": [{"prime": D.base.format_prime(s), "mult": n} for s, n in D.vertical_items()],
    }


# -- commands ------------------------------------------------------------


def cmd_intersect(spec: ProblemSpec, budget: int = DEFAULT_BUDGET) -> dict:
    p = spec.payload
    dom = _field_of(spec)
    task = p["task"]
    if task == "intersection_number":
        _require(spec, "ambient", "degrees")
        N = int(p["ambient"]["N"])
        names = default_names(N + 1)
        gens = [
            _parse(parse_poly, g, f"$['ambient']['ideal'][{i}]", names, dom)
            for i, g in enumerate(p["ambient"].get("ideal", []))
        ]
        try:
            X = ProjScheme(Ideal(gens, N + 1, dom, homogeneous=True), budget)
        except ValueError as exc:
            raise SchemaError(str(exc), "$['ambient']") from exc
        degrees = [int(d) for d in p["degrees"]]
        out = {"dimension": X.dimension, "degree": X.degree, "hilbert_polynomial": str(X.hilbert_polynomial)}
        if len(degrees) > X.dimension:
            out.update(value=vanishing_check(X, degrees), route="vanishing_check")
        else:
            out.update(value=intersection_number(X, degrees), route="intersection_number")
        return out
    if task == "total_multiplicity":
        _require(spec, "curves")
        names = default_names(3)
        F, G = (_parse(parse_poly, c, f"$['curves'][{i}]", names, dom) for i, c in enumerate(p["curves"]))
        seed = spec.seed if spec.seed is not None else 0
        return {"value": total_multiplicity(F, G, seed=seed, budget=budget)}
    _require(spec, "curves", "point")
    names = default_names(2)
    f, g = (_parse(parse_poly, c, f"$['curves'][{i}]", names, dom) for i, c in enumerate(p["curves"]))
    pt = [_parse(lambda s: dom(Fraction(s)), c, f"$['point'][{i}]") for i, c in enumerate(p["point"])]
    return {"value": local_multiplicity(f, g, pt, budget=budget)}


def _bundles(spec: ProblemSpec) -> list[RelBundle]:
    return [RelBundle(int(a), int(b)) for a, b in spec.payload.get("bundles", [])]


def _det(c) -> dict:
    return {"degree": c.degree, "grade": c.grade}


def cmd_deligne(spec: ProblemSpec, budget: int = DEFAULT_BUDGET) -> dict:
    p = spec.payload
    dom = _field_of(spec)
    fam = SplitFamily(int(p["m"]), p.get("base", "P1"), dom)
    task = p["task"]
    L = _bundles(spec)
    if task == "pairing":
        return _det(deligne_pairing(fam, L))
    if task == "pullback":
        _require(spec, "beta")
        beta = int(p["beta"])
        lhs = deligne_pairing(fam, [RelBundle(0, beta)] + L)
        expected = beta * intersection_number(ProjScheme.projective_space(fam.m, dom), [b.a for b in L])
        return {"pairing": _det(lhs), "expected_degree": expected, "holds": pullback_axiom_check(fam, beta, L)}
    if task == "n1-expansion":
        if len(L) != 2:
            raise SchemaError("n1-expansion takes two bundles", "$['bundles']")
        return {"pairing": _det(deligne_pairing(fam, L)), "holds": n1_expansion_check(fam, L[0], L[1])}
    if task == "det-chi":
        _require(spec, "beta")
        if len(L) != 1:
            raise SchemaError("det-chi takes one bundle", "$['bundles']")
        beta = int(p["beta"])
        return {
            "det": _det(det_rf(L[0], fam)),
            "det_twisted": _det(det_rf(RelBundle(L[0].a, L[0].b + beta), fam)),
            "holds": det_chi_check(fam, L[0].a, L[0].b, beta),
        }
    _require(spec, "A", "B")
    A = _parse(parse_form, p["A"], "$['A']", dom)
    Bf = _parse(parse_form, p["B"], "$['B']", dom)
    if len(L) != 1:
        raise SchemaError("restriction takes one bundle", "$['bundles']")
    return {
        "restricted_degree": restriction_degree(A, Bf, L[0]),
        "pairing": _det(deligne_pairing(fam, [L[0], RelBundle(1, A.degree)])),
        "holds": restriction_axiom_check(fam, A, Bf, L[0]),
    }


def _div_on_s(d) -> dict:
    return {"divisor": d.as_dict(), "degree": d.degree()}


def cmd_arith(spec: ProblemSpec, budget: int = DEFAULT_BUDGET) -> tuple[dict, dict | None]:
    p = spec.payload
    task = p["task"]
    if task == "verify":
        _require(spec, "suite")
        name = p["suite"]
        if name not in SUITES:
            raise SchemaError(f"unknown suite {name!r}", "$['suite']")
        n = int(p["n"]) if "n" in p else None
        rep = run_suite(name, spec.seed or 0, n, budget)
        return {"suite": name, "status": "pass" if rep.ok else "fail"}, rep.as_dict()
    B = _base(spec)
    if task == "weil":
        f, g = _func(B, p.get("f"), "f"), _func(B, p.get("g"), "g")
        lhs, rhs = weil_reciprocity_sides(f, g)
        return {"N_(g)(f)": B.format_element(lhs), "N_(f)(g)": B.format_element(rhs), "holds": lhs == rhs}, None
    if task == "principal_divisor":
        return {"divisor": divisor_json(principal_divisor(_func(B, p.get("f"), "f")))}, None
    D = _divisor(B, p.get("D"), "D")
    if task == "norm":
        return {"value": B.format_element(norm_divisor(D, _func(B, p.get("f"), "f")))}, None
    if task == "intwithrat":
        lhs, rhs = intwithrat_sides(D, _func(B, p.get("f"), "f"))
        return {"pairing": lhs.as_dict(), "div_norm": rhs.as_dict(), "holds": lhs == rhs}, None
    E = _divisor(B, p.get("E"), "E")
    if task == "pairing":
        return _div_on_s(pairing(D, E)), None
    if task == "shift":
        lhs, rhs = shift_sides(D, E, _func(B, p.get("f"), "f"))
        return {"shift": lhs.as_dict(), "div_norm": rhs.as_dict(), "holds": lhs == rhs}, None
    _require(spec, "prime")
    s = _parse(B.parse_prime, p["prime"], "$['prime']")
    pts = local_decomposition(D, E, s)
    total = sum(q.multiplicity * q.residue_degree for q in pts)
    return {
        "points": [{"point": str(q.point), "i_x": q.multiplicity, "residue_degree": q.residue_degree} for q in pts],
        "total": total,
        "pairing_coefficient": pairing(D, E).coeff(s),
    }, None


# -- report assembly -----------------------------------------------------


def _run(command: str, spec: ProblemSpec | None, budget: int, suite_args=None) -> tuple[dict, int]:
    report: dict = {"schema_version": SCHEMA_VERSION, "command": command}
    t0 = time.perf_counter()
    suite = None
    code = EXIT_OK
    try:
        if command == "verify":
            name, seed, n = suite_args
            if name not in SUITES:
                raise SchemaError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}", "suite")
            report["echo"] = {"suite": name, "seed": str(seed), "n": str(n if n is not None else SUITES[name][1])}
            rep = run_suite(name, seed, n, budget)
            suite = rep.as_dict()
            result = {"suite": name, "status": "pass" if rep.ok else "fail"}
        else:
            report["echo"] = spec.to_dict()
            if command == "intersect":
                result = cmd_intersect(spec, budget)
            elif command == "deligne":
                result = cmd_deligne(spec, budget)
            else:
                result, suite = cmd_arith(spec, budget)
        report["status"] = "ok"
        report["result"] = exact(result)
        if suite is not None:
            report["suite"] = exact(suite)
            if suite["status"] != "pass":
                report["status"] = "fail"
                code = EXIT_SUITE
    except SchemaError as exc:
        report["status"] = "error"
        report["error"] = {"kind": "schema", "message": str(exc), "location": exc.location}
        code = EXIT_SCHEMA
    except (ValueError, ArithmeticError, NotImplementedError, BudgetExceeded) as exc:
        report["status"] = "error"
        loc = f"$['task'] = {spec.payload.get('task')!r}" if spec is not None else "suite"
        report["error"] = {"kind": "computation", "message": f"{type(exc).__name__}: {exc}", "location": loc}
        code = EXIT_COMPUTE
    report["timing"] = {"seconds": f"{time.perf_counter() - t0:.6f}"}
    return report, code


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v) if not isinstance(v, str) else v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    return lines


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    return "\n".join(_text(report))


def load_spec(path: str) -> ProblemSpec:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", f"line {exc.lineno}, column {exc.colno}") from exc
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}", path) from exc
    return ProblemSpec.from_dict(data)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="delpair", description="Intersection numbers, Deligne pairings and arithmetic surface pairings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None, help="seed for randomized parts")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="Groebner pair-reduction budget")

    for name in ("intersect", "deligne", "arith"):
        p = sub.add_parser(name, help=f"run a {name} problem file")
        p.add_argument("--input", required=True, metavar="FILE", help="problem file (JSON), '-' for stdin")
        common(p)
    p = sub.add_parser("verify", help="run a randomized property suite")
    p.add_argument("suite", help=" | ".join(SUITES))
    p.add_argument("--n", type=int, default=None, help="number of instances")
    common(p)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        report, code = _run("verify", None, args.budget, (args.suite, args.seed or 0, args.n))
    else:
        try:
            spec = load_spec(args.input)
        except SchemaError as exc:
            report = {
                "schema_version": SCHEMA_VERSION,
                "command": args.command,
                "status": "error",
                "error": {"kind": "schema", "message": str(exc), "location": exc.location},
            }
            print(render(report, args.format))
            return EXIT_SCHEMA
        if spec.command != args.command:
            report = {
                "schema_version": SCHEMA_VERSION,
                "command": args.command,
                "status": "error",
                "error": {"kind": "schema", "message": f"file holds a {spec.command!r} problem", "location": "$.command"},
            }
            print(render(report, args.format))
            return EXIT_SCHEMA
        if args.seed is not None:
            spec = ProblemSpec(spec.command, spec.payload, args.seed)
        report, code = _run(args.command, spec, args.budget)
    print(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
