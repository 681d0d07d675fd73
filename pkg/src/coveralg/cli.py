"""Command-line front end.

Exit codes: 0 success, 1 failed check or size limit hit, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Any, Callable

from . import hilbert, oracle, toric
from .covers import minimal_covers_recursive
from .errors import CoverAlgError, CycleError, SizeLimitError
from .lattice import enumerate_ideals
from .poset import (
    MAX_N,
    Poset,
    antichain,
    bits,
    chain,
    check_size,
    from_cover_relations,
    linear_extensions_by_descents,
    natural_relabel,
    random_poset,
)

log = logging.getLogger("coveralg")


class UsageError(Exception):
    pass


def load_poset(path: str, max_n: int) -> Poset:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read poset from {path}: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data:
        raise UsageError("poset file must be a JSON object with keys 'n' and 'relations'")
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise UsageError("'n' must be a positive integer")
    check_size(n, max_n)
    try:
        p = from_cover_relations(n, [tuple(r) for r in data.get("relations", [])])
    except (IndexError, CycleError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid relations: {exc}") from exc
    if not p.is_naturally_labeled:
        p, perm = natural_relabel(p)
        log.warning(
            "poset was not naturally labeled; relabeled old->new %s",
            {i + 1: g + 1 for i, g in enumerate(perm)},
        )
    return p


def _ideal_label(mask: int) -> list[int]:
    return [i + 1 for i in bits(mask)]


def _series_payload(p: Poset, threads: int) -> dict[str, Any]:
    h = hilbert.cover_algebra_h_vector(p, threads=threads)
    s = hilbert.HilbertSeries(h.coeffs, 2 * p.n + 1)
    L = enumerate_ideals(p)
    return {
        "h_vector": h.as_list(),
        "numerator": list(s.numerator),
        "denom_exp": s.denom_exp,
        "multiplicity": hilbert.multiplicity(h),
        "a_invariant": hilbert.a_invariant(s),
        "dimension": 2 * p.n + 1,
        "checks": hilbert.check_shape(h, p.n, len(L)).as_dict(),
        "_series": s,
    }


def cmd_gen(args) -> tuple[int, Any]:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.kind == "chain":
        p = chain(args.n)
    elif args.kind == "antichain":
        p = antichain(args.n)
    else:
        p = random_poset(args.n, args.seed, args.density)
    return 0, p.to_json()


def cmd_analyze(args) -> tuple[int, Any]:
    t0 = time.perf_counter()
    p = load_poset(args.poset, args.max_n)
    covers = minimal_covers_recursive(p)
    L = enumerate_ideals(p)
    series = _series_payload(p, args.threads)
    series.pop("_series")
    report = {
        "n": p.n,
        "relations": len(p.strict_pairs()),
        "lattice_size": len(L),
        "minimal_covers": len(covers),
        **series,
    }
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return 0, report


def cmd_series(args) -> tuple[int, Any]:
    p = load_poset(args.poset, args.max_n)
    payload = _series_payload(p, args.threads)
    s = payload.pop("_series")
    if not args.json:
        payload["series"] = s.pretty()
    return 0, payload


def cmd_covers(args) -> tuple[int, Any]:
    p = load_poset(args.poset, args.max_n)
    covers = minimal_covers_recursive(p)
    if args.json:
        return 0, {
            "covers": [
                {"x": _ideal_label(c.xmask), "y": _ideal_label(c.ymask)} for c in covers
            ]
        }
    return 0, [c.label() for c in covers]


def cmd_lattice(args) -> tuple[int, Any]:
    p = load_poset(args.poset, args.max_n)
    L = enumerate_ideals(p)
    if args.json:
        return 0, {"ideals": [_ideal_label(a) for a in L]}
    return 0, [str(_ideal_label(a)) for a in L]


def cmd_linext(args) -> tuple[int, Any]:
    p = load_poset(args.poset, args.max_n)
    prof = linear_extensions_by_descents(p, max_n=args.max_n)
    return 0, {"descent_counts": list(prof.counts), "linear_extensions": prof.total}


def _run_check(name: str, fn: Callable[[], Any], results: dict, skip_on_limit: bool) -> bool:
    try:
        out = fn()
    except SizeLimitError as exc:
        if not skip_on_limit:
            raise
        results[name] = {"skipped": str(exc)}
        return True
    results[name] = out
    return out.get("agree", True) if isinstance(out, dict) else bool(out)


def cmd_oracle_verify(args) -> tuple[int, Any]:
    p = load_poset(args.poset, args.max_n)
    k = args.kmax
    modes = ["graded", "power", "basic", "lemma", "monotone"] if args.mode == "all" else [args.mode]
    skip = args.mode == "all"
    results: dict[str, Any] = {}
    ok = True

    def graded():
        rep = oracle.compare_graded(p, k).as_dict()
        if k >= p.n:
            values = [v[1] for v in rep["values"]]
            h = oracle.h_vector_from_function(values, p.n).as_list()
            rep["h_vector_oracle"] = h
            rep["agree"] = rep["agree"] and h == hilbert.cover_algebra_h_vector(p).as_list()
        return rep

    def lemma():
        r = oracle.verify_lemma_delta(p)
        return {"agree": r.ok, "counterexample": r.counterexample}

    checks = {
        "graded": graded,
        "power": lambda: oracle.compare_power(p, k).as_dict(),
        "basic": lambda: oracle.compare_basic(p, k).as_dict(),
        "lemma": lemma,
        "monotone": lambda: {"agree": oracle.verify_monotonicity(p, k)},
    }
    for m in modes:
        ok &= _run_check(m, checks[m], results, skip)
    return (0 if ok else 1), {"ok": ok, "checks": results}


def cmd_export_toric(args) -> tuple[int, Any]:
    p = load_poset(args.poset, args.max_n)
    parts = []
    if args.which in ("G", "both"):
        parts.append(toric.export(p, toric.groebner_G(p), "G"))
    if args.which in ("G0", "both"):
        parts.append(toric.export(p, toric.groebner_G0(p), "G0"))
    text = "".join(parts)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        return 0, None
    return 0, text


COMMANDS = {
    "analyze": cmd_analyze,
    "covers": cmd_covers,
    "lattice": cmd_lattice,
    "linext": cmd_linext,
    "series": cmd_series,
    "oracle-verify": cmd_oracle_verify,
    "export-toric": cmd_export_toric,
    "gen": cmd_gen,
}


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for random generation")
    parser.add_argument("--max-n", type=int, default=d(MAX_N), help="poset size cap")
    parser.add_argument("--threads", type=int, default=d(1), help="worker processes for subset sums")
    parser.add_argument("--timing", action="store_true", default=d(False), help="add timing_ms to reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coveralg",
        description="Hilbert series of vertex cover algebras of poset graphs",
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    shared = argparse.ArgumentParser(add_help=False)
    _global_flags(shared, suppress=True)
    for name in ("analyze", "covers", "lattice", "linext", "series"):
        sp = sub.add_parser(name, parents=[shared])
        sp.add_argument("--poset", default="-", help="poset JSON file, '-' for stdin")
    ov = sub.add_parser("oracle-verify", parents=[shared])
    ov.add_argument("--poset", default="-")
    ov.add_argument("--kmax", type=int, default=3)
    ov.add_argument("--mode", choices=["graded", "power", "basic", "lemma", "monotone", "all"], default="all")
    ex = sub.add_parser("export-toric", parents=[shared])
    ex.add_argument("--poset", default="-")
    ex.add_argument("--which", choices=["G", "G0", "both"], default="both")
    ex.add_argument("--out", default="-")
    gen = sub.add_parser("gen", parents=[shared])
    gen.add_argument("--kind", choices=["chain", "antichain", "random"], required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--density", type=float, default=0.5)
    return parser


def _render_text(command: str, payload: Any) -> str:
    if payload is None:
        return ""
    if isinstance(payload, str):
        return payload
    if isinstance(payload, list):
        return "".join(f"{line}\n" for line in payload)
    if command == "gen":
        return json.dumps(payload) + "\n"
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {json.dumps(v)}" for k, v in value.items())
        else:
            lines.append(f"{key}: {value if isinstance(value, str) else json.dumps(value)}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        if args.json:
            print(json.dumps({"error": "SizeLimit", "message": str(exc)}))
        else:
            print(f"size limit: {exc}", file=sys.stderr)
        return 1
    except CoverAlgError as exc:
        if args.json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json and args.command not in ("gen", "export-toric"):
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(_render_text(args.command, payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
