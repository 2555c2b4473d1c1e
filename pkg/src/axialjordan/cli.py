"""Command-line front end: classify, verify, sweep, model.

Exit codes: 0 success, 1 verification failure, 2 usage/parse/realization error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .axial import frobenius_form, radical
from .classifier import (
    GENERIC,
    ROWS,
    build_row_model,
    classify_parameters,
    verify_multiplication_table,
    verify_row,
)
from .errors import AxialError, ModelUnrealizable, ParseError
from .exactfield import fmt, parse_list, parse_number
from .models import (
    ParameterTuple,
    build_Fn,
    build_hermitian_jordan,
    build_matrix_jordan,
    jform2_pair,
    realize_universal,
    reorder_axes,
)
from .witnesses import WITNESSES

log = logging.getLogger("axialjordan")

JOBS_ENV = "AXIALJORDAN_JOBS"
CSV_HEADER = ["alpha", "beta", "gamma", "psi", "rows", "iso", "quotient_dim", "status"]
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(text: str) -> ParameterTuple:
    try:
        return ParameterTuple.parse(text)
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad parameter tuple {text!r}: {exc}") from exc


def _emit(obj, out: str | None):
    text = json.dumps(obj, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------- classify


def cmd_classify(args) -> int:
    text = args.params or args.tuple
    if not text:
        raise UsageError("classify needs a parameter tuple")
    _emit(classify_parameters(_params(text)).to_json(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _verify_generic(p: ParameterTuple) -> dict:
    m = realize_universal(p)
    G = frobenius_form(m.algebra, m.axes)
    rec = m.recovered_params(G)
    rad = radical(m.algebra, G).dim
    ok = m.algebra.dim == 9 and rad == 0 and tuple(rec) == tuple(p)
    return {
        "row": GENERIC,
        "params": p.to_json(),
        "rows": [],
        "iso_class": "M3+",
        "quotient_dim": m.algebra.dim,
        "radical_dim": rad,
        "recovered_params": rec.to_json(),
        "expression_residuals": [],
        "table_diffs": [],
        "ok": ok,
    }


def _verify_tables(branch: str) -> tuple[list, bool, list]:
    results, warnings, ok = [], [], True
    for table, row in (("S7", "A7"), ("S8", "A8")):
        m = build_row_model(row, WITNESSES[row], branch)
        rep = verify_multiplication_table(m, table)
        ok &= rep.ok
        warnings += [f"{table} cell ({c.row}, {c.col}): printed and computed entries differ" for c in rep.suspects]
        results.append(
            {
                "table": table,
                "params": rep.params.to_json(),
                "matches": sum(c.status == "match" for c in rep.cells),
                "cells": len(rep.cells),
                "diffs": [c.to_json() for c in rep.cells if c.status != "match"],
                "ok": rep.ok,
            }
        )
    return results, ok, warnings


def cmd_verify(args) -> int:
    scope = args.scope
    results, warnings, ok = [], [], True
    if scope in ROWS:
        p = _params(args.params) if args.params else WITNESSES[scope]
        rep = verify_row(scope, p, args.branch)
        results.append(rep.to_json())
        ok = rep.ok and rep.tables_ok
        warnings += [f"{t.table} cell ({c.row}, {c.col}) is a known suspect" for t in rep.tables for c in t.suspects]
    elif scope == "generic":
        p = _params(args.params) if args.params else WITNESSES[GENERIC]
        res = _verify_generic(p)
        results.append(res)
        ok = res["ok"]
    elif scope in ("tables", "all"):
        if args.params:
            raise UsageError(f"--params is not accepted with scope {scope!r}")
        if scope == "all":
            for row in ROWS:
                rep = verify_row(row, WITNESSES[row], args.branch)
                results.append(rep.to_json())
                ok &= rep.ok
            res = _verify_generic(WITNESSES[GENERIC])
            results.append(res)
            ok &= res["ok"]
        tables, tables_ok, warn = _verify_tables(args.branch)
        results += tables
        ok &= tables_ok
        warnings += warn
    else:
        raise UsageError(f"unknown scope {scope!r}; use A1..A9, generic, tables or all")
    for w in warnings:
        log.warning(w)
    _emit({"scope": scope, "ok": ok, "warnings": warnings, "results": results}, args.out)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- sweep


def parse_grid(text: str) -> list:
    """'start:stop:step' (inclusive, rational) or an explicit comma list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"grid {text!r} must be start:stop:step")
        start, stop, step = (Fraction(parse_number(t)) for t in parts)
        if step == 0:
            raise UsageError("grid step must be nonzero")
        values, x = [], start
        while (x <= stop) if step > 0 else (x >= stop):
            values.append(x)
            x += step
    else:
        values = parse_list(text)
    if not values:
        raise UsageError(f"grid {text!r} is empty")
    return values


def sweep_one(p: ParameterTuple, verify: bool, branch: str) -> list[str]:
    m = classify_parameters(p)
    status = "classified"
    if verify:
        try:
            if m.generic:
                status = "ok" if _verify_generic(p)["ok"] else "fail"
            elif m.rows:
                reports = [verify_row(r, p, branch) for r in m.rows]
                status = "ok" if all(r.ok for r in reports) else "fail"
            elif m.via_permutation:
                perm, row = m.via_permutation
                status = "ok" if verify_row(row, p.permuted(perm), branch).ok else "fail"
            else:
                status = "unclassified"
        except ModelUnrealizable:
            status = "unrealizable"
        except AxialError as exc:
            status = f"error:{type(exc).__name__}"
    return [*(fmt(v) for v in p), ";".join(m.rows), m.iso_class or "", str(m.quotient_dim or ""), status]


def _sweep_task(item):
    values, verify, branch = item
    return sweep_one(ParameterTuple.of(values), verify, branch)


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", JOBS_ENV, raw)
    return 1


def cmd_sweep(args) -> int:
    base = args.grid
    grids = []
    for name in ("alpha", "beta", "gamma", "psi"):
        grid_text = getattr(args, name) or base
        if not grid_text:
            raise UsageError(f"no grid for {name}; pass --{name} or --grid")
        grids.append(parse_grid(grid_text))
    tuples = list(itertools.product(*grids))
    jobs = args.jobs or default_jobs()
    items = [(t, not args.no_verify, args.branch) for t in tuples]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_task, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        rows = [_sweep_task(it) for it in items]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(buf.getvalue())
    failed = sum(r[-1] == "fail" for r in rows)
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------- model

KINDS = {
    "F1": lambda: build_Fn(1),
    "F2": lambda: build_Fn(2),
    "F3": lambda: build_Fn(3),
    "JForm2": lambda: jform2_pair(Fraction(1, 4)),
    "M2": lambda: build_matrix_jordan(2),
    "M3": lambda: build_matrix_jordan(3),
    "H3": lambda: build_hermitian_jordan(3),
}


def cmd_model(args) -> int:
    if args.kind and args.params:
        raise UsageError("pass either --kind or --params, not both")
    if args.kind:
        m = KINDS[args.kind]()
        data = m.to_json(with_form=len(m.axes) > 0 and args.kind not in ("M2", "M3", "H3"))
    elif args.params:
        p = _params(args.params)
        match = classify_parameters(p)
        if match.generic:
            m = realize_universal(p)
        elif match.rows:
            m = build_row_model(match.rows[0], p, args.branch)
        elif match.via_permutation:
            perm, row = match.via_permutation
            inner = build_row_model(row, p.permuted(perm), args.branch)
            reorder_axes(inner, perm)
            inner.params = p
            inner.notes.append(f"built for generator order {''.join('abc'[i] for i in perm)} (row {row})")
            m = inner
        else:
            raise ModelUnrealizable(f"no model for {p}")
        data = m.to_json()
        data["classification"] = match.to_json()
    else:
        raise UsageError("model needs --kind or --params")
    _emit(data, args.out)
    return EXIT_OK


# ---------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="axialjordan", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, params=True):
        if params:
            p.add_argument("--params", help="alpha,beta,gamma,psi (exact scalars, e.g. 1/2,sqrt(2),0,1)")
        p.add_argument("--branch", choices=("plus", "minus"), default="minus", help="sign of the root for M2+ generators")
        p.add_argument("--out", help="write output to PATH instead of stdout")

    p = sub.add_parser("classify", help="match a tuple against the non-simple rows")
    p.add_argument("tuple", nargs="?", help="alpha,beta,gamma,psi")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check a row, the printed tables, or everything")
    p.add_argument("scope", help="A1..A9, generic, tables or all")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="classify (and verify) a parameter grid; CSV output")
    for name in ("alpha", "beta", "gamma", "psi"):
        p.add_argument(f"--{name}", help="start:stop:step or a comma list")
    p.add_argument("--grid", help="grid used for every parameter without its own")
    p.add_argument("--jobs", type=int, help=f"worker processes (default: ${JOBS_ENV} or 1)")
    p.add_argument("--no-verify", action="store_true", help="classify only")
    common(p, params=False)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("model", help="dump structure constants, axes and Gram matrix as JSON")
    p.add_argument("--kind", choices=sorted(KINDS))
    common(p)
    p.set_defaults(func=cmd_model)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelUnrealizable as exc:
        print(f"unrealizable: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AxialError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
