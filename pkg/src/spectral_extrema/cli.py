"""Command-line entry point.  Every command prints one JSON document.

Exit codes: 0 success, 1 usage or format error, 2 a bound was violated,
3 an exact computation hit its size cap.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__, families, graph6
from .canon import canonical_form
from .core_eta import classify_components, decompose, eta_core_inequality, k_core, l_core, slack_report
from .graph import Graph, members
from .paths import CapabilityError
from .patterns import contains, parse_pattern
from .search import (SearchConfig, default_workers, extremal_search,
                     hill_climb, verify_bound)
from .spectral import full_spectrum, spectral_radius, trace_inequality

SCHEMA = "spectral-extrema/report-v1"

EXIT_OK, EXIT_USAGE, EXIT_VIOLATED, EXIT_CAPABILITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _round(obj):
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return None
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _read_graphs(args) -> list[Graph]:
    cached = getattr(args, "_graphs", None)
    if cached is not None:
        return cached
    graphs: list[Graph] = []
    for text in args.g6 or []:
        graphs.append(graph6.decode(text))
    sources = []
    if getattr(args, "file", None):
        sources.append(Path(args.file).read_text())
    if getattr(args, "stdin", False):
        sources.append(sys.stdin.read())
    for text in sources:
        stripped = text.strip()
        if stripped.startswith("{") or stripped.startswith("["):
            data = json.loads(stripped)
            for item in data if isinstance(data, list) else [data]:
                graphs.append(Graph.from_json(item))
        else:
            graphs.extend(graph6.decode(line) for line in stripped.splitlines() if line.strip())
    if not graphs:
        raise UsageError("no input graph: use --g6, --file or --stdin")
    args._graphs = graphs
    return graphs


def _add_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", action="append", help="graph6 string (repeatable)")
    p.add_argument("--file", help="file of graph6 lines or edge-list JSON")
    p.add_argument("--stdin", action="store_true", help="read graphs from standard input")


def _parse_int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()] if text else []


# ---------------------------------------------------------------- commands

def cmd_gen(args) -> tuple[str, int]:
    g = families.build(args.family, *args.params)
    if args.json and not args.g6:
        return g.to_json(), EXIT_OK
    return graph6.encode(g), EXIT_OK


def cmd_lambda(args) -> tuple[dict, int]:
    out = []
    for g in _read_graphs(args):
        res = spectral_radius(g)
        item = res.as_dict()
        if args.full:
            item["spectrum"] = full_spectrum(g)
        out.append(item)
    return _batch(out), EXIT_OK


def cmd_free(args) -> tuple[dict, int]:
    spec = parse_pattern(args.pattern)
    out = []
    for g in _read_graphs(args):
        w = contains(g, spec)
        out.append({"pattern": str(spec), "contains": w is not None,
                    "witness": list(w.mapping) if w else None})
    return _batch(out), EXIT_OK


def cmd_core(args) -> tuple[dict, int]:
    out = []
    for g in _read_graphs(args):
        res = k_core(g, args.k)
        out.append({"k": args.k, "core": res.vertices, "peel_order": [list(p) for p in res.peel_order]})
    return _batch(out), EXIT_OK


def cmd_eta(args) -> tuple[dict, int]:
    out = []
    L = _parse_int_list(args.set)
    for g in _read_graphs(args):
        ctx = decompose(g, args.k)
        cmp = eta_core_inequality(ctx, L)
        out.append({"k": args.k, "u_star": ctx.u_star, "R": members(ctx.R), "L": L,
                    "eta": float(cmp.eta_L), "core": members(l_core(ctx, L)),
                    "eta_core": float(cmp.eta_core), "inequality_holds": cmp.holds,
                    "equal": cmp.equal, "L_is_core": cmp.is_core})
    return _batch(out), EXIT_OK


def cmd_decompose(args) -> tuple[dict, int]:
    out = []
    for g in _read_graphs(args):
        ctx = decompose(g, args.k)
        item = ctx.as_dict()
        item["components"] = [c.as_dict() for c in classify_components(ctx)]
        item["slack"] = slack_report(ctx).as_dict()
        out.append(item)
    return _batch(out), EXIT_OK


def _config_from_args(args, m: int) -> SearchConfig:
    return SearchConfig(
        m=m,
        pattern=parse_pattern(args.pattern) if getattr(args, "pattern", None) else None,
        n_min=args.nmin, n_max=args.nmax,
        connected_only=not args.allow_disconnected,
        forbid_isolated=not args.allow_isolated,
        mode=getattr(args, "mode", "exhaustive"),
        seed=args.seed, budget=getattr(args, "budget", 10_000),
        workers=default_workers(),
    )


def cmd_search(args) -> tuple[dict, int]:
    cfg = _config_from_args(args, args.m)
    if cfg.mode == "hill_climb":
        start = graph6.decode(args.start) if args.start else families.path(args.m + 1)
        report = hill_climb(cfg, start)
    else:
        report = extremal_search(cfg)
    return report.as_dict(), EXIT_OK


def _parse_bound(text: str) -> tuple[str, dict]:
    head, _, body = text.partition(":")
    head = head.strip().lower()
    aliases = {"fan": "fan_theorem", "f23": "friendship_f23", "bh": "brualdi_hoffman"}
    kind = aliases.get(head, head)
    params: dict = {}
    if kind == "fan_theorem":
        if not body:
            raise UsageError("fan bound needs k, e.g. fan:3")
        params["k"] = int(body)
    elif kind == "nikiforov":
        params["r"] = int(body)
    return kind, params


def cmd_verify(args) -> tuple[dict, int]:
    kind, params = _parse_bound(args.bound)
    if args.pattern:
        params["pattern"] = parse_pattern(args.pattern)
    connected = not args.allow_disconnected and kind != "brualdi_hoffman"
    cfg = SearchConfig(m=args.m, n_min=args.nmin, n_max=args.nmax, connected_only=connected,
                       forbid_isolated=True, seed=args.seed, workers=default_workers())
    report = verify_bound(kind, params, cfg)
    code = EXIT_VIOLATED if report.bound and report.bound.violated else EXIT_OK
    return report.as_dict(), code


def cmd_trace(args) -> tuple[dict, int]:
    out = []
    for g in _read_graphs(args):
        res = trace_inequality(g, args.k)
        out.append({"k": res.k, "lhs": res.lhs, "rhs": res.rhs, "holds": res.holds})
    return _batch(out), EXIT_OK


def cmd_selftest(args) -> tuple[dict, int]:
    from .selftest import run_all

    results = run_all(seed=args.seed)
    ok = all(r["ok"] for r in results)
    return {"checks": results, "ok": ok}, EXIT_OK if ok else EXIT_USAGE


def _batch(items: list) -> dict | list:
    return items[0] if len(items) == 1 else items


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spectral-extrema", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="construct a named graph")
    s.add_argument("family", choices=sorted(families.FAMILIES))
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--g6", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("lambda", help="spectral radius and Perron vector")
    _add_inputs(s)
    s.add_argument("--full", action="store_true", help="include the full spectrum")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_lambda)

    s = sub.add_parser("free", help="forbidden-subgraph test")
    _add_inputs(s)
    s.add_argument("--pattern", required=True)
    s.set_defaults(func=cmd_free)

    s = sub.add_parser("core", help="k-core with peel order")
    _add_inputs(s)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_core)

    s = sub.add_parser("eta", help="evaluate η on a subset of N(u*)")
    _add_inputs(s)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--set", default="")
    s.set_defaults(func=cmd_eta)

    s = sub.add_parser("decompose", help="decomposition around the extremal vertex")
    _add_inputs(s)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_decompose)

    for name, func in (("search", cmd_search), ("verify", cmd_verify)):
        s = sub.add_parser(name)
        s.add_argument("--m", type=int, required=True)
        s.add_argument("--pattern")
        s.add_argument("--nmin", type=int)
        s.add_argument("--nmax", type=int)
        s.add_argument("--allow-disconnected", action="store_true")
        s.add_argument("--allow-isolated", action="store_true")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--json", action="store_true")
        if name == "search":
            s.add_argument("--mode", choices=["exhaustive", "hill_climb"], default="exhaustive")
            s.add_argument("--budget", type=int, default=10_000)
            s.add_argument("--start", help="graph6 start graph for hill_climb")
        else:
            s.add_argument("--bound", required=True,
                           help="nosal | lnw | f23 | bh | fan:K | nikiforov:R")
        s.set_defaults(func=func)

    s = sub.add_parser("trace-ineq", help="λ₁^{2k} + λ₂^{2k} <= Tr(A^{2k})/2")
    _add_inputs(s)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("selftest", help="run the oracle-equivalence checks")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        result, code = args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=stdout)
        return EXIT_USAGE
    except CapabilityError as exc:
        print(json.dumps({"error": "capability", "message": str(exc)}), file=stdout)
        return EXIT_CAPABILITY
    except (ValueError, TypeError, KeyError, OSError) as exc:
        print(json.dumps({"error": "format", "message": str(exc)}), file=stdout)
        return EXIT_USAGE
    if isinstance(result, str):
        print(result, file=stdout)
        return code
    envelope = {
        "schema": SCHEMA,
        "version": __version__,
        "command": args.command,
        "seed": getattr(args, "seed", 0),
        "results": result,
    }
    graphs = getattr(args, "_graphs", None)
    if graphs is not None:
        envelope["inputs"] = [canonical_form(g) for g in graphs]
    print(json.dumps(_round(envelope), sort_keys=True), file=stdout)
    return code


def main() -> None:
    sys.exit(run())
