"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
errors or when a size guard trips.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Sequence

from . import verify
from .patterns import (
    ADPattern,
    GTPattern,
    ad_to_gt,
    gt_to_ad,
    parse_matrix,
    pattern_to_tableau,
    phi_injectivity_experiment,
    validate_ad,
)
from .pluecker import PlueckerMonomialSpec, expand, leading_term, parse_factors
from .poly import Monomial
from .shapes import CompositionShape, PartitionShape, composition_fiber, parse_shape
from .tableaux import enumerate_rsct, enumerate_ssyt

JOBS_ENV = "RSCT_JOBS"

CHECKS: dict[str, Callable[..., verify.VerificationReport]] = {
    "basis": verify.check_basis,
    "identity": verify.check_schur_identity,
    "cardinality": verify.check_cardinality,
    "roundtrip": verify.check_roundtrip,
    "rigidity": verify.check_rigidity,
    "weights": verify.check_weights,
}


class UsageError(Exception):
    pass


def _read_arg(raw: str) -> str:
    # An argument naming an existing file is replaced by the file's contents.
    path = Path(raw)
    if len(raw) < 4096 and not raw.lstrip().startswith(("[", "{")) and path.is_file():
        return path.read_text()
    return raw


def _shape_arg(raw: str) -> tuple[int, ...]:
    text = _read_arg(raw).strip()
    if text.startswith("{"):
        data = json.loads(text)
        if "shape" in data:
            return tuple(int(x) for x in data["shape"])
        if "lambda" in data:
            return tuple(int(x) for x in data["lambda"])
        raise ValueError("JSON object has no 'shape' key")
    return parse_shape(text)


def _matrix_arg(raw: str) -> list[list[int]]:
    return parse_matrix(_read_arg(raw))


def _monomial_arg(raw: str, n: int | None) -> Monomial:
    text = _read_arg(raw).strip()
    if text.startswith("{"):
        data = json.loads(text)
        if "matrix" in data:
            return Monomial.from_matrix(data["matrix"])
        n = int(data.get("n", n or 0))
        triples = data.get("monomial", data.get("exps"))
    elif text.startswith("["):
        triples = json.loads(text)
    else:
        triples = [[int(x) for x in chunk.split(",")] for chunk in text.split(";") if chunk.strip()]
    if not n:
        n = max((max(t[0], t[1]) for t in triples), default=1)
    return Monomial.from_triples(n, triples)


def _emit(args: argparse.Namespace, obj: Any, table: str, latex: str | None = None) -> None:
    if args.format == "json":
        text = json.dumps(obj)
    elif args.format == "latex" and latex is not None:
        text = latex
    else:
        text = table
    _write(args, text + "\n")


def _write(args: argparse.Namespace, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands -----------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    parts = _shape_arg(args.shape)
    n = args.n
    if args.kind == "ssyt":
        shape = PartitionShape(parts, n_bound=n)
        fillings = enumerate_ssyt(shape, n)
    else:
        shape = CompositionShape(parts, n_bound=n)
        fillings = enumerate_rsct(shape, n)
    obj = {"kind": args.kind, "shape": list(shape.parts), "n": n, "count": len(fillings),
           "fillings": [[list(r) for r in f.rows] for f in fillings]}
    table = f"{args.kind} shape={','.join(map(str, shape.parts))} n={n} count={len(fillings)}"
    if fillings:
        table += "\n\n" + "\n\n".join(str(f) for f in fillings)
    latex = "\n\n".join(f.to_latex() for f in fillings)
    _emit(args, obj, table, latex)
    return 0


def cmd_fiber(args: argparse.Namespace) -> int:
    lam = PartitionShape(_shape_arg(args.lam))
    comps = composition_fiber(lam, args.n)
    obj = {"lambda": list(lam.parts), "n": args.n, "compositions": [list(a.parts) for a in comps]}
    table = "\n".join(",".join(map(str, a.parts)) for a in comps)
    _emit(args, obj, table)
    return 0


def _spec(args: argparse.Namespace) -> PlueckerMonomialSpec:
    factors = parse_factors(_read_arg(args.factors))
    n = args.n or max((max(f) for f in factors if f), default=1)
    return PlueckerMonomialSpec(tuple(factors), n, "column" if args.cols else "row")


def cmd_expand(args: argparse.Namespace) -> int:
    spec = _spec(args)
    p = expand(spec)
    obj = {"spec": spec.to_json(), "n": spec.n, "terms": p.to_json()}
    _emit(args, obj, str(p), p.to_latex())
    return 0


def cmd_leading_term(args: argparse.Namespace) -> int:
    spec = _spec(args)
    p = expand(spec)
    if p.is_zero():
        raise UsageError("polynomial is zero; no leading term")
    m = leading_term(p)
    obj = {"n": spec.n, "monomial": [list(t) for t in m.triples()], "coeff": str(p.coefficient(m)),
           "matrix": m.as_matrix()}
    _emit(args, obj, f"{p.coefficient(m)} * {m}")
    return 0


def cmd_phi(args: argparse.Namespace) -> int:
    matrix = _matrix_arg(args.matrix)
    if not validate_ad(matrix):
        raise UsageError(f"not an anti-diagonal pattern: {matrix}")
    y = pattern_to_tableau(ADPattern(matrix), columns=args.columns)
    _emit(args, y.to_json(), str(y), y.to_latex())
    return 0


def cmd_psi(args: argparse.Namespace) -> int:
    m = _monomial_arg(args.monomial, args.n)
    matrix = m.as_matrix()
    valid = validate_ad(matrix)
    obj = {"n": m.n, "matrix": matrix, "valid": valid}
    table = "\n".join(" ".join(map(str, r)) for r in matrix) + f"\nvalid: {valid}"
    _emit(args, obj, table)
    return 0 if valid else 1


def cmd_gt(args: argparse.Namespace) -> int:
    matrix = _matrix_arg(args.matrix)
    if args.to:
        out = ad_to_gt(ADPattern(matrix)).to_json()
    else:
        out = gt_to_ad(GTPattern(matrix)).to_json()
    _emit(args, {"matrix": out}, "\n".join(" ".join(map(str, r)) for r in out))
    return 0


def cmd_validate_ad(args: argparse.Namespace) -> int:
    matrix = _matrix_arg(args.matrix)
    valid = validate_ad(matrix, args.reading)
    _emit(args, {"matrix": matrix, "reading": args.reading, "valid": valid}, f"valid: {valid}")
    return 0 if valid else 1


def cmd_experiment(args: argparse.Namespace) -> int:
    result = phi_injectivity_experiment(args.n, args.max_total)
    table = "\n".join(f"{k}: {v if not isinstance(v, list) else len(v)}" for k, v in result.items())
    _emit(args, result, table)
    return 0


# --- verification batches ---------------------------------------------------


def _run_task(task: tuple[str, dict]) -> dict:
    name, kwargs = task
    try:
        return {"report": CHECKS[name](**kwargs)}
    except verify.GuardExceeded as exc:
        return {"guard": {"check": name, "params": kwargs, "error": str(exc), "sizing": exc.sizing}}


def _tasks(args: argparse.Namespace) -> list[tuple[str, dict]]:
    n = args.n
    guard = {}
    if getattr(args, "max_rows", None) is not None:
        guard["max_rows"] = args.max_rows
    if getattr(args, "max_nonzeros", None) is not None:
        guard["max_nonzeros"] = args.max_nonzeros
    kind = args.check
    if kind == "basis":
        if args.lam:
            lams = [PartitionShape(_shape_arg(args.lam))]
        else:
            lams = verify.partitions_up_to(args.max_m, n)
        return [("basis", {"lam": lam.parts, "n": n, "compare_ssyt": not args.no_ssyt, **guard}) for lam in lams]
    if kind in ("identity", "cardinality"):
        lams = [PartitionShape(_shape_arg(args.lam))] if args.lam else verify.partitions_up_to(args.max_m, n)
        return [(kind, {"lam": lam.parts, "n": n}) for lam in lams]
    if kind in ("roundtrip", "rigidity", "weights"):
        return [(kind, {"n": n, "max_cells": args.max_cells})]
    if kind == "suite":
        max_m = args.max_m if args.max_m is not None else args.max_cells
        lams = verify.partitions_up_to(max_m, n)
        tasks: list[tuple[str, dict]] = []
        for lam in lams:
            tasks.append(("identity", {"lam": lam.parts, "n": n}))
            tasks.append(("cardinality", {"lam": lam.parts, "n": n}))
            tasks.append(("basis", {"lam": lam.parts, "n": n, **guard}))
        for name in ("roundtrip", "rigidity", "weights"):
            tasks.append((name, {"n": n, "max_cells": args.max_cells}))
        return tasks
    raise UsageError(f"unknown check {kind!r}")


def _summary_table(rows: list[dict]) -> str:
    lines = [f"{'check':<12} {'params':<32} {'outcome':<8}"]
    for r in rows:
        params = ",".join(f"{k}={v if not isinstance(v, list) else ','.join(map(str, v))}" for k, v in r["params"].items())
        lines.append(f"{r['check']:<12} {params:<32} {r['outcome']:<8}")
    passed = sum(r["outcome"] == "pass" for r in rows)
    lines.append(f"{passed}/{len(rows)} passed")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    tasks = _tasks(args)
    jobs = args.jobs
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]

    rows = []
    guard_hit = False
    out_lines = []
    for res in results:
        if "guard" in res:
            guard_hit = True
            row = {"check": res["guard"]["check"], "params": _jsonable(res["guard"]["params"]), "outcome": "guard",
                   "error": res["guard"]["error"], "sizing": _jsonable(res["guard"]["sizing"])}
        else:
            row = res["report"].to_json(timing=args.timing)
        rows.append(row)
        out_lines.append(json.dumps(row))

    summary = _summary_table(rows)
    if args.format == "json":
        _write(args, "\n".join(out_lines) + "\n")
        print(summary, file=sys.stderr)
    else:
        _write(args, summary + "\n")

    if guard_hit:
        return 2
    return 0 if all(r["outcome"] == "pass" for r in rows) else 1


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


# --- parser -------------------------------------------------------------------


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "latex", "table"), default="json")
    common.add_argument("-o", "--output", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="rsct", description="Row-strict composition tableaux and Plücker monomial bases.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="list SSYT or RSCT of a shape")
    e.add_argument("kind", choices=("ssyt", "rsct"))
    e.add_argument("--shape", required=True)
    e.add_argument("--n", type=_positive, required=True)
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("fiber", parents=[common], help="compositions whose sorted transpose is lambda")
    f.add_argument("--lambda", dest="lam", required=True)
    f.add_argument("--n", type=_positive, required=True)
    f.set_defaults(func=cmd_fiber)

    for name, func in (("expand", cmd_expand), ("leading-term", cmd_leading_term)):
        x = sub.add_parser(name, parents=[common], help=f"{name} of a product of Plücker coordinates")
        g = x.add_mutually_exclusive_group()
        g.add_argument("--rows", action="store_true", help="factors come from tableau rows (default)")
        g.add_argument("--cols", action="store_true", help="factors come from tableau columns")
        x.add_argument("--factors", required=True, help='index lists, e.g. "1,2,3;3,7;4,7,8"')
        x.add_argument("--n", type=_positive)
        x.set_defaults(func=func)

    ph = sub.add_parser("phi", parents=[common], help="tableau of an anti-diagonal pattern")
    ph.add_argument("--matrix", required=True)
    ph.add_argument("--columns", type=_positive, help="stop after this many columns")
    ph.set_defaults(func=cmd_phi)

    ps = sub.add_parser("psi", parents=[common], help="exponent matrix of a monomial as a pattern")
    ps.add_argument("--monomial", required=True, help='"i,j[,e];..." or JSON triples')
    ps.add_argument("--n", type=_positive)
    ps.set_defaults(func=cmd_psi)

    gt = sub.add_parser("gt", parents=[common], help="convert between AD and Gel'fand-Tsetlin patterns")
    g = gt.add_mutually_exclusive_group(required=True)
    g.add_argument("--to", action="store_true", help="anti-diagonal -> Gel'fand-Tsetlin")
    g.add_argument("--from", dest="from_", action="store_true", help="Gel'fand-Tsetlin -> anti-diagonal")
    gt.add_argument("--matrix", required=True)
    gt.set_defaults(func=cmd_gt)

    va = sub.add_parser("validate-ad", parents=[common], help="test the anti-diagonal pattern conditions")
    va.add_argument("--matrix", required=True)
    va.add_argument("--reading", choices=("interlacing", "literal"), default="interlacing")
    va.add_argument("--literal", dest="reading", action="store_const", const="literal",
                    help="shorthand for --reading literal")
    va.set_defaults(func=cmd_validate_ad)

    ex = sub.add_parser("experiment", parents=[common], help="exploratory runs with no correctness claim")
    ex.add_argument("name", choices=("phi-injectivity",))
    ex.add_argument("--n", type=_positive, required=True)
    ex.add_argument("--max-total", type=_nonnegative, default=4)
    ex.set_defaults(func=cmd_experiment)

    v = sub.add_parser("verify", parents=[common], help="run verification checks")
    v.add_argument("check", choices=tuple(CHECKS) + ("suite",))
    v.add_argument("--n", type=_positive, required=True)
    v.add_argument("--lambda", dest="lam")
    v.add_argument("--max-m", type=_nonnegative)
    v.add_argument("--max-cells", type=_nonnegative, default=6)
    v.add_argument("--max-rows", type=_nonnegative)
    v.add_argument("--max-nonzeros", type=_nonnegative)
    v.add_argument("--no-ssyt", action="store_true", help="skip the span comparison with SSYT monomials")
    v.add_argument("--jobs", type=_positive, default=_default_jobs(), help=f"worker processes (env {JOBS_ENV})")
    v.add_argument("--timing", action="store_true", help="include wall times (output no longer byte-stable)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.check in ("basis", "identity", "cardinality") and not args.lam and args.max_m is None:
            parser.error(f"verify {args.check} needs --lambda or --max-m")
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"rsct: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
