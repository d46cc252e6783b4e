"""Command-line front end.

Exit status: 0 success / property holds, 1 property fails (witness printed),
2 usage or domain error, 3 exhaustive scan refused by a size cap.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import io
from .core import DomainError, GroundSet, PriceVector, Valuation, format_value, utility
from .demand import (
    brute_force_maximize,
    demand_set,
    greedy_failure_witness,
    greedy_maximize,
    shortened_greedy,
)
from .economy import Economy, check_walrasian, optimal_allocation, welfare
from .generators import CatalogName, catalog
from .properties import EQUIVALENCE_CLASS, CapExceeded, PropertyId, Verdict, Witness, check, classify

OK, FAILS, USAGE, REFUSED = 0, 1, 2, 3


def _bundle_doc(g: GroundSet, m: int) -> list[str]:
    return list(g.names(m))


def witness_doc(g: GroundSet, w: Witness) -> dict:
    return {
        "bundles": {k: _bundle_doc(g, m) for k, m in w.bundles.items()},
        "items": {k: g.items[i] for k, i in w.items.items()},
        "lhs": format_value(w.lhs),
        "rhs": None if w.rhs is None else format_value(w.rhs),
        "relation": w.relation,
        "values": {k: format_value(x) for k, x in w.values.items()},
    }


def verdict_doc(g: GroundSet, vd: Verdict) -> dict:
    return {
        "property": str(vd.property),
        "holds": vd.holds,
        "witness": None if vd.witness is None else witness_doc(g, vd.witness),
    }


def _verdict_line(g: GroundSet, vd: Verdict) -> str:
    if vd.holds:
        return f"{vd.property}: holds"
    return f"{vd.property}: fails\n  witness: {vd.witness.describe(g)}"


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(io.dumps(doc))
    else:
        print(text)


def _load_prices(path: str | None, g: GroundSet) -> PriceVector:
    if path is None:
        return PriceVector.zeros(g)
    return io.prices_from_doc(io.read_json(path), g)


# ---------------------------------------------------------------------------
# subcommands

def cmd_check(args) -> int:
    v = io.load_valuation(args.file)
    vd = check(v, args.property, force=args.force)
    _emit(args, verdict_doc(v.ground, vd), _verdict_line(v.ground, vd))
    return OK if vd.holds else FAILS


def cmd_classify(args) -> int:
    v = io.load_valuation(args.file)
    verdicts = classify(v, force=args.force)
    flags = {verdicts[p].holds for p in EQUIVALENCE_CLASS}
    if len(flags) != 1:
        raise AssertionError("equivalent axioms disagree")
    doc = {"items": list(v.ground.items), "verdicts": [verdict_doc(v.ground, vd) for vd in verdicts.values()]}
    lines = [_verdict_line(v.ground, vd) for vd in verdicts.values()]
    _emit(args, doc, "\n".join(lines))
    return OK


def _trace_doc(g: GroundSet, v: Valuation, trace) -> dict:
    return {
        "chain": [_bundle_doc(g, m) for m in trace.chain],
        "values": [format_value(x) for x in trace.values],
        "best": _bundle_doc(g, trace.best),
        "best_value": format_value(trace.best_value),
        "best_k": trace.best_k,
        "queries": trace.queries,
    }


def cmd_maximize(args) -> int:
    v = io.load_valuation(args.file)
    g = v.ground
    p = _load_prices(args.prices, g)
    target = utility(v, p)
    if args.algorithm == "brute":
        pref = brute_force_maximize(target)
        doc = {
            "algorithm": "brute",
            "value": format_value(pref.value),
            "bundles": [_bundle_doc(g, m) for m in pref.bundles],
        }
        text = f"max value {pref.value} at " + ", ".join(g.fmt(m) for m in pref.bundles)
        _emit(args, doc, text)
        return OK
    trace = (greedy_maximize if args.algorithm == "greedy" else shortened_greedy)(target)
    doc = {"algorithm": args.algorithm, **_trace_doc(g, target, trace)}
    lines = [f"k={k}  {g.fmt(m)}  {x}" for k, (m, x) in enumerate(zip(trace.chain, trace.values))]
    lines.append(f"best: {g.fmt(trace.best)} value {trace.best_value} (queries {trace.queries})")
    _emit(args, doc, "\n".join(lines))
    return OK


def cmd_slices(args) -> int:
    v = io.load_valuation(args.file)
    g = v.ground
    p = _load_prices(args.prices, g)
    rows, lines = [], []
    for k in range(g.n + 1):
        pref = demand_set(v, p, k)
        rows.append({
            "k": k,
            "value": format_value(pref.value),
            "bundles": [_bundle_doc(g, m) for m in pref.bundles],
        })
        lines.append(f"k={k}  {pref.value}  " + " ".join(g.fmt(m) for m in pref.bundles))
    _emit(args, {"slices": rows}, "\n".join(lines))
    return OK


def cmd_witness(args) -> int:
    v = io.load_valuation(args.file)
    g = v.ground
    fw = greedy_failure_witness(v, force=args.force)
    if fw is None:
        _emit(args, {"witness": None}, "valuation is ultra: no greedy-failure witness")
        return OK
    x, y, z = fw.triple
    doc = {
        "witness": {
            "prices": io.prices_to_doc(fw.prices),
            "k": fw.k,
            "bundle": _bundle_doc(g, fw.bundle),
            "conditioning": _bundle_doc(g, fw.base),
            "triple": [g.items[x], g.items[y], g.items[z]],
            "extensions": {g.items[i]: format_value(u) for i, u in fw.extensions.items()},
            "slice_max": format_value(fw.slice_max),
        }
    }
    ext = ", ".join(f"{g.items[i]}: {u}" for i, u in fw.extensions.items())
    text = "\n".join([
        f"prices: " + ", ".join(f"{n}={format_value(q)}" for n, q in zip(g.items, fw.prices.prices)),
        f"k={fw.k}: {g.fmt(fw.bundle)} is {fw.k}-preferred",
        f"extensions: {ext}; best {fw.k + 1}-slice utility {fw.slice_max}",
    ])
    _emit(args, doc, text)
    return FAILS


def cmd_equilibrium(args) -> int:
    e = io.load_economy(args.economy)
    a = io.allocation_from_doc(io.read_json(args.allocation), e)
    p = io.prices_from_doc(io.read_json(args.prices), e.ground)
    vd = check_walrasian(e, a, p, args.mode)
    g = e.ground
    doc = {
        "holds": vd.holds,
        "mode": vd.mode,
        "failures": [
            {
                "agent": e.names[f.agent],
                "condition": f.condition,
                "bundle": _bundle_doc(g, f.bundle),
                "own_utility": format_value(f.own_utility),
                "alt_utility": format_value(f.alt_utility),
                "gap": format_value(f.gap),
            }
            for f in vd.failures
        ],
    }
    lines = [f"walrasian ({vd.mode}): {'holds' if vd.holds else 'fails'}"]
    for f in vd.failures:
        lines.append(
            f"  {e.names[f.agent]} prefers {g.fmt(f.bundle)} (condition {f.condition}): "
            f"{f.alt_utility} > {f.own_utility}"
        )
    _emit(args, doc, "\n".join(lines))
    return OK if vd.holds else FAILS


def cmd_welfare(args) -> int:
    e = io.load_economy(args.economy)
    g = e.ground
    cap = None if not args.force else 10**12
    best, allocs = optimal_allocation(e) if cap is None else optimal_allocation(e, cap)
    doc = {
        "optimal_welfare": format_value(best),
        "optimal_allocations": [io.allocation_to_doc(e, a) for a in allocs],
    }
    lines = [f"optimal welfare {best}"]
    for a in allocs:
        lines.append("  " + "  ".join(f"{n}:{g.fmt(b)}" for n, b in zip(e.names, a.bundles)))
    if args.allocation:
        a = io.allocation_from_doc(io.read_json(args.allocation), e)
        w = welfare(e, a)
        doc["welfare"] = format_value(w)
        lines.append(f"given allocation welfare {w}")
    _emit(args, doc, "\n".join(lines))
    return OK


def cmd_demo(args) -> int:
    obj = catalog(args.name)
    doc = io.economy_to_doc(obj) if isinstance(obj, Economy) else io.valuation_to_doc(obj)
    sys.stdout.write(io.dumps(doc))
    return OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ultraval", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--force", action="store_true", help="lift exhaustive-scan size caps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide one property")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=[x.value for x in PropertyId])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", parents=[common], help="decide every property")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("maximize", parents=[common], help="find a preferred bundle")
    p.add_argument("file")
    p.add_argument("--prices")
    p.add_argument("--algorithm", choices=("greedy", "shortened", "brute"), default="greedy")
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("slices", parents=[common], help="k-preferred bundles for every k")
    p.add_argument("file")
    p.add_argument("--prices")
    p.set_defaults(func=cmd_slices)

    p = sub.add_parser("witness-greedy-failure", parents=[common], help="prices defeating greedy")
    p.add_argument("file")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("equilibrium", parents=[common], help="check a Walrasian equilibrium")
    p.add_argument("economy")
    p.add_argument("--allocation", required=True)
    p.add_argument("--prices", required=True)
    p.add_argument("--mode", choices=("full", "local"), default="full")
    p.set_defaults(func=cmd_equilibrium)

    p = sub.add_parser("welfare", parents=[common], help="optimal allocation by brute force")
    p.add_argument("economy")
    p.add_argument("--allocation")
    p.set_defaults(func=cmd_welfare)

    p = sub.add_parser("demo", parents=[common], help="print a catalog instance file")
    p.add_argument("name", choices=[c.value for c in CatalogName])
    p.set_defaults(func=cmd_demo)
    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return REFUSED
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
