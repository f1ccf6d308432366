"""Command-line surface.

Subcommands: validate, embed, separate, graph, enumerate, roots, verify.
Weights are given in halves notation ("5/2,3/2,3/2,1/2,-1/2") or as plain
integers; exit codes: 0 success, 1 validation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import oracle
from .crystal_core import BudgetExceeded, generate_component, graph_to_dot, graph_to_json
from .kn_model import kn_f, kn_from_json, kn_highest, kn_to_json, validate_kn
from .kn_spinor_iso import phi_lambda, psi_lambda
from .lusztig import convex_order, datum_from_verma, datum_to_json
from .separation import chi_lambda, verma_to_json
from .spinor_model import spinor_f, spinor_from_json, spinor_to_json, validate_tuple

DEFAULT_BUDGET = 10**6


class UsageError(ValueError):
    pass


def parse_lambda(text: str, n: Optional[int] = None) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    doubled = []
    for p in parts:
        v = Fraction(p)
        d = v * 2
        if d.denominator != 1:
            raise UsageError(f"weight entry {p} is not a half-integer")
        doubled.append(int(d))
    if n is not None and len(doubled) != n:
        raise UsageError(f"expected {n} weight entries, got {len(doubled)}")
    return tuple(doubled)


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def _emit(data, output: Optional[str]) -> None:
    text = data if isinstance(data, str) else json.dumps(data, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_element(args):
    data = _load_json(args.input)
    if "factors" in data:
        t = spinor_from_json(data)
        return ("spinor", t)
    return ("kn", kn_from_json(data))


def cmd_validate(args) -> int:
    kind, elt = _load_element(args)
    if kind == "kn":
        ok, problems = validate_kn(elt, check_d7=args.check_d7)
    else:
        ok, problems = validate_tuple(elt)
    _emit({"model": kind, "valid": ok, "violations": problems}, args.output)
    return 0 if ok else 1


def cmd_embed(args) -> int:
    kind, elt = _load_element(args)
    if kind == "spinor":
        tab = phi_lambda(elt)
    else:
        tab = elt
        ok, problems = validate_kn(tab)
        if not ok:
            _emit({"valid": False, "violations": problems}, args.output)
            return 1
    if args.to == "spinor":
        _emit(spinor_to_json(psi_lambda(tab)), args.output)
    elif args.to == "verma":
        _emit(verma_to_json(chi_lambda(psi_lambda(tab))), args.output)
    else:
        datum, biword = datum_from_verma(chi_lambda(psi_lambda(tab)))
        out = datum_to_json(datum)
        out["biword"] = [list(p) for p in biword]
        _emit(out, args.output)
    return 0


def cmd_separate(args) -> int:
    kind, elt = _load_element(args)
    t = elt if kind == "spinor" else psi_lambda(elt)
    ok, problems = validate_tuple(t)
    if not ok:
        _emit({"valid": False, "violations": problems}, args.output)
        return 1
    _emit(verma_to_json(chi_lambda(t)), args.output)
    return 0


def _component(args, model: str):
    lambda2 = parse_lambda(args.lam, args.n)
    budget = args.budget or int(os.environ.get("CRYSTALD_BUDGET", DEFAULT_BUDGET))
    if model == "kn":
        return generate_component(
            kn_highest(lambda2, args.n), kn_f, args.n, lambda t: t.key(), budget=budget
        )
    return generate_component(
        __import__("crystald.spinor_model", fromlist=["highest_element"]).highest_element(lambda2, args.n),
        spinor_f,
        args.n,
        lambda t: t.key(),
        budget=budget,
    )


def cmd_graph(args) -> int:
    g = _component(args, args.model)
    if args.model == "kn":
        serialize, label = kn_to_json, lambda t: " ".join(
            "/".join(str(x) for x in c.entries) for c in t.columns
        )
    else:
        serialize, label = spinor_to_json, lambda t: " ".join(
            "/".join(str(x) for x in f.left.entries + (0,) + f.right.entries) for f in t.factors
        )
    if args.format == "dot":
        _emit(graph_to_dot(g, label), args.output)
    else:
        _emit(graph_to_json(g, serialize), args.output)
    return 0


def cmd_enumerate(args) -> int:
    g = _component(args, args.model)
    serialize = kn_to_json if args.model == "kn" else spinor_to_json
    keys = sorted(g.nodes, key=repr)
    _emit({"count": len(g), "elements": [serialize(g.nodes[k]) for k in keys]}, args.output)
    return 0


def cmd_roots(args) -> int:
    order = convex_order(args.n)
    _emit(
        {
            "n": args.n,
            "count": order.count,
            "betas": [
                {"index": k + 1, "sign": s, "i": i, "j": j}
                for k, (s, i, j) in enumerate(order.betas)
            ],
        },
        args.output,
    )
    return 0


def cmd_verify(args) -> int:
    from . import verification

    suites = {
        "dimension": verification.dimension_suite,
        "morphism": verification.morphism_suite,
        "knuth": verification.knuth_suite,
        "rsk": verification.rsk_suite,
        "signatures": verification.signatures_suite,
    }
    results = suites[args.suite](n=args.n, seed=args.seed, threads=args.threads)
    ok = True
    for name, passed, detail in results:
        ok = ok and passed
        print(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crystald", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_lambda=False, with_model=False):
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--lambda", dest="lam", default=None, required=need_lambda)
        p.add_argument("--output", default=None)
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--threads", type=int, default=1)
        if with_model:
            p.add_argument("--model", choices=["kn", "spinor"], default="kn")

    p = sub.add_parser("validate", help="validate a tableau or tuple file")
    p.add_argument("--input", required=True)
    p.add_argument("--check-d7", action="store_true", dest="check_d7")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("embed", help="embed a tableau into another model")
    p.add_argument("--input", required=True)
    p.add_argument("--to", choices=["spinor", "verma", "lusztig"], required=True)
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("separate", help="run separation on a tuple or tableau")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("graph", help="export a crystal component")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    common(p, need_lambda=True, with_model=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("enumerate", help="list a full component")
    common(p, need_lambda=True, with_model=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("roots", help="print the convex order of positive roots")
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=["dimension", "morphism", "knuth", "rsk", "signatures"], required=True)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "command", None) in ("graph", "enumerate") and args.n is None:
        print("error: --n is required", file=sys.stderr)
        return 2
    if getattr(args, "command", None) == "roots" and args.n is None:
        print("error: --n is required", file=sys.stderr)
        return 2
    if getattr(args, "command", None) == "verify" and args.n is None:
        args.n = oracle.SMOKE_N
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
