"""Command-line front door.

Subcommands: info, graph, enumerate, verify, realize, extremal. Exit codes:
0 success, 1 usage error, 2 invariant/assertion failure (e.g. a hypothetical
Wilf violation), 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import apery, enumeration, matching, semigraph
from .realize import realize as _realize
from .errors import (Infeasible, NonCoprimeGenerators, EmptyGenerators,
                     InconsistentDepths, InvalidTruncation, RealizationFailed,
                     TooLarge, WilfCounterexample, WindowTooSmall)
from .loopy import LoopyGraph
from .semigroup import (NumericalSemigroup, format_generators,
                        from_generators, from_generators_truncated,
                        parse_generators)

_USAGE_ERRORS = (EmptyGenerators, NonCoprimeGenerators, InvalidTruncation,
                 WindowTooSmall, Infeasible, TooLarge, ValueError)
_INVARIANT_ERRORS = (WilfCounterexample, InconsistentDepths,
                     RealizationFailed, AssertionError)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass
class RunConfig:
    """One validated CLI invocation."""

    command: str
    gens: str | None = None
    trunc: int | None = None
    graph_file: str | None = None
    genus_max: int = 0
    workers: int = 1
    fmt: str = "table"
    out: str | None = None
    classes: bool = False
    n: int = 0
    k: int = 0
    lambda_: int | None = None
    seed: int = 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="wilfgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gens(p):
        p.add_argument("--gens", help='generator list, e.g. "12,13" or "12,13|t=30"')
        p.add_argument("--trunc", type=int, help="truncation point t")

    def add_common(p, formats):
        p.add_argument("--format", dest="fmt", choices=formats,
                       default=formats[0])
        p.add_argument("--out", help="write output to this path")

    p = sub.add_parser("info", help="core and Apery invariants of one semigroup")
    add_gens(p)
    add_common(p, ["table", "json"])

    p = sub.add_parser("graph", help="associated graph and matching summary")
    add_gens(p)
    p.add_argument("--graph", dest="graph_file",
                   help="synthetic loopy graph in JSON form")
    add_common(p, ["table", "dot", "json"])

    p = sub.add_parser("enumerate", help="genus census n_g (and classes)")
    p.add_argument("--genus-max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--classes", action="store_true",
                   help="also count graph-equivalence classes")
    add_common(p, ["table", "csv", "json"])

    p = sub.add_parser("verify", help="Wilf inequality and invariant suite")
    p.add_argument("--genus-max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the sampled suite beyond genus 12")
    add_common(p, ["table", "json"])

    p = sub.add_parser("realize", help="semigroup whose graph matches the input")
    p.add_argument("--graph", dest="graph_file", required=True)
    add_common(p, ["table", "json"])

    p = sub.add_parser("extremal", help="max edges of loopy graphs with vm = k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lambda_", type=int, default=None,
                   help="restrict to graphs with this many loops")
    add_common(p, ["table", "dot"])
    return parser


def _config(args) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("gens", "trunc", "graph_file", "genus_max", "workers", "fmt",
                 "out", "classes", "n", "k", "lambda_", "seed"):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    if cfg.workers < 1:
        raise _UsageError("--workers must be at least 1")
    if cfg.genus_max > enumeration.GENUS_HARD_CAP:
        raise _UsageError(f"--genus-max capped at {enumeration.GENUS_HARD_CAP}")
    if cfg.command in ("info", "graph") and bool(cfg.gens) == bool(cfg.graph_file):
        if cfg.command == "info" and not cfg.gens:
            raise _UsageError("info requires --gens")
        if cfg.command == "graph":
            raise _UsageError("graph requires exactly one of --gens / --graph")
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _semigroup(cfg: RunConfig) -> NumericalSemigroup:
    gens, trunc = parse_generators(cfg.gens)
    if cfg.trunc is not None:
        if trunc is not None and trunc != cfg.trunc:
            raise _UsageError("--trunc conflicts with the |t= suffix")
        trunc = cfg.trunc
    if trunc is None:
        return from_generators(gens)
    return from_generators_truncated(gens, trunc)


def _frac(numer: int, denom: int) -> str:
    if denom == 0:
        return "0/0 (0.000000)"
    return f"{numer}/{denom} ({numer / denom:.6f})"


def cmd_info(cfg: RunConfig) -> int:
    S = _semigroup(cfg)
    data = apery.report(S)
    w_direct = apery.wilf_w(S)
    w_apery = apery.wilf_w_apery(S)
    assert w_direct == w_apery
    data["W_apery"] = w_apery
    data["wilf_holds"] = w_direct >= 0
    data["P_ge_m_over_3"] = 3 * len(S.min_generators) >= S.multiplicity
    if cfg.fmt == "json":
        _emit(json.dumps(data, indent=2, sort_keys=True), cfg.out)
        return 0
    lines = [f"S = <{format_generators(S)}>"]
    for key in ("m", "f", "c", "g", "q", "rho", "L_size", "tau_X"):
        lines.append(f"  {key:<8} {data[key]}")
    lines.append(f"  P        {data['P']}")
    lines.append(f"  X        {data['X']}")
    lines.append(f"  X cap D  {data['X_cap_D']}")
    lines.append(f"  W(S)     {w_direct}  (|P||L| - c)")
    lines.append(f"  W(S)     {w_apery}  (|P| tau(X) - |X cap D| q + rho)")
    lines.append(f"  Wilf holds: {'yes' if data['wilf_holds'] else 'NO'}")
    lines.append(f"  |P| >= m/3: {'yes' if data['P_ge_m_over_3'] else 'no'}")
    _emit("\n".join(lines), cfg.out)
    return 0


def _load_graph(path: str) -> LoopyGraph:
    with open(path) as fh:
        return LoopyGraph.from_json(json.load(fh))


def cmd_graph(cfg: RunConfig) -> int:
    if cfg.graph_file:
        G = _load_graph(cfg.graph_file)
        weak: frozenset = frozenset()
    else:
        S = _semigroup(cfg)
        ap = apery.analyze(S)
        G = semigraph.build_graph(S, ap)
        weak, _ = semigraph.classify_edges(G, ap)
    ma = matching.analyze(G, weak)
    summary = {
        "vertices": G.n,
        "edges": G.edge_count,
        "k": ma.vm,
        "lambda": ma.loop_count,
        "nu": ma.nu,
        "weak": len(ma.weak_edges),
        "active": len(ma.active_edges),
    }
    if cfg.fmt == "dot":
        _emit(G.to_dot(weak=ma.weak_edges, active=ma.active_edges), cfg.out)
        return 0
    if cfg.fmt == "json":
        payload = G.to_json()
        payload["analysis"] = summary
        _emit(json.dumps(payload, indent=2, sort_keys=True), cfg.out)
        return 0
    lines = []
    if G.n == 0:
        lines.append("empty graph (maximal embedding dimension semigroup)"
                     if not cfg.graph_file else "empty graph")
    lines.append(f"vertices {G.n}, edges {G.edge_count} "
                 f"({len(G.true_edges)} true + {G.loop_count} loops)")
    lines.append(f"vm k = {ma.vm}, lambda = {ma.loop_count}, nu = {ma.nu}")
    lines.append(f"|E0| = {len(ma.weak_edges)} weak, "
                 f"|E+| = {len(ma.active_edges)} active")
    if G.n:
        lines.append(f"loops at {sorted(G.loops)}")
    _emit("\n".join(lines), cfg.out)
    return 0


def cmd_enumerate(cfg: RunConfig) -> int:
    result = enumeration.run_census(cfg.genus_max, workers=cfg.workers,
                               classes=cfg.classes)
    rows = []
    for g in range(cfg.genus_max + 1):
        stats = result[g]
        frac = stats.p_ge_third_fraction
        rows.append((g, stats.count_ng,
                     stats.class_count_gamma if cfg.classes else "",
                     len(stats.wilf_violations),
                     f"{float(frac):.6f}" if stats.count_ng else "0.000000"))
    if cfg.fmt == "csv":
        lines = ["g,n_g,gamma_g,wilf_violations,frac_P_ge_m3"]
        lines += [",".join(map(str, row)) for row in rows]
        _emit("\n".join(lines), cfg.out)
        return 0
    if cfg.fmt == "json":
        payload = {}
        for g in range(cfg.genus_max + 1):
            stats = result[g]
            item = {
                "n_g": stats.count_ng,
                "wilf_violations": len(stats.wilf_violations),
                "frac_P_ge_m3": {
                    "num": stats.p_ge_third_fraction.numerator,
                    "den": stats.p_ge_third_fraction.denominator,
                    "decimal": f"{float(stats.p_ge_third_fraction):.6f}",
                },
            }
            if cfg.classes:
                item["gamma_g"] = stats.class_count_gamma
                item["classes"] = {
                    key: {"count": stats.class_keys[key],
                          "representative": list(stats.class_representatives[key])}
                    for key in sorted(stats.class_keys)
                }
            payload[str(g)] = item
        _emit(json.dumps(payload, indent=2, sort_keys=True), cfg.out)
        return 0
    header = f"{'g':>3} {'n_g':>9} {'gamma_g':>9} {'wilf_viol':>9} {'frac |P|>=m/3':>14}"
    lines = [header]
    for row in rows:
        lines.append(f"{row[0]:>3} {row[1]:>9} {str(row[2]):>9} "
                     f"{row[3]:>9} {row[4]:>14}")
    _emit("\n".join(lines), cfg.out)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    report = enumeration.verify_wilf_range(cfg.genus_max, workers=cfg.workers)
    failures: list[str] = []
    exhaustive_cap = min(cfg.genus_max, 12)
    checked = 0
    for S in enumeration.iter_semigroups(exhaustive_cap):
        checked += 1
        bad = [k for k, ok in semigraph.invariant_report(S).items() if not ok]
        if bad:
            failures.append(f"genus {S.genus} {S.min_generators}: {bad}")
    sampled = 0
    for g in range(13, cfg.genus_max + 1):
        for S in enumeration.sample_semigroups(g, 25, seed=cfg.seed + g):
            sampled += 1
            bad = [k for k, ok in semigraph.invariant_report(S).items()
                   if not ok]
            if bad:
                failures.append(f"genus {g} {S.min_generators}: {bad}")
    data = {
        "genus_max": cfg.genus_max,
        "semigroups": report.total,
        "wilf_violations": len(report.violations),
        "invariants_checked_exhaustive": checked,
        "invariants_checked_sampled": sampled,
        "invariant_failures": failures,
        "bucket_p_le_3": report.bucket_p_le_3,
        "bucket_q_le_3": report.bucket_q_le_3,
        "bucket_p_ge_half_m": report.bucket_p_ge_half_m,
        "bucket_p_ge_third_m": report.bucket_p_ge_third_m,
        "bucket_covered": report.covered,
    }
    if cfg.fmt == "json":
        _emit(json.dumps(data, indent=2, sort_keys=True), cfg.out)
    else:
        lines = [
            f"semigroups up to genus {cfg.genus_max}: {report.total}",
            f"Wilf violations: {len(report.violations)}",
            f"invariant suite: {checked} exhaustive (genus <= {exhaustive_cap})"
            f" + {sampled} sampled, {len(failures)} failures",
            "known-case buckets (overlapping):",
            f"  |P| <= 3      {report.bucket_p_le_3}",
            f"  q <= 3        {report.bucket_q_le_3}",
            f"  |P| >= m/2    {report.bucket_p_ge_half_m}",
            f"  |P| >= m/3    {report.bucket_p_ge_third_m}",
            f"  any of these  {report.covered}",
        ]
        lines += [f"  FAILURE {f}" for f in failures]
        _emit("\n".join(lines), cfg.out)
    return 2 if failures else 0


def cmd_realize(cfg: RunConfig) -> int:
    G = _load_graph(cfg.graph_file)
    plan = _realize(G)
    cert = plan.certificate()
    if not cert["verified"]:
        raise RealizationFailed("certificate did not verify")
    gens_text = format_generators(plan.result)
    if cfg.fmt == "json":
        _emit(json.dumps(cert, indent=2, sort_keys=True), cfg.out)
        return 0
    lines = [
        f"gens: {gens_text}|t={2 * plan.multiplicity}",
        f"m = {plan.multiplicity}, offsets = {list(plan.offsets)}, "
        f"erased = {list(plan.erase_generators)}",
        f"certificate: {json.dumps(cert, sort_keys=True)}",
    ]
    _emit("\n".join(lines), cfg.out)
    return 0


def cmd_extremal(cfg: RunConfig) -> int:
    best, witnesses = matching.extremal_edge_search(cfg.n, cfg.k, cfg.lambda_)
    if cfg.fmt == "dot":
        if cfg.out is not None:
            # one DOT file per witness under the output directory
            os.makedirs(cfg.out, exist_ok=True)
            for i, w in enumerate(witnesses):
                with open(os.path.join(cfg.out, f"witness_{i}.dot"), "w") as fh:
                    fh.write(w.to_dot())
            print(f"wrote {len(witnesses)} witness files to {cfg.out}")
        else:
            _emit("\n".join(w.to_dot() for w in witnesses), None)
        return 0
    lines = [f"max edges = {best} over loopy graphs with n={cfg.n}, k={cfg.k}"
             + (f", lambda={cfg.lambda_}" if cfg.lambda_ is not None else ""),
             f"witnesses: {len(witnesses)}"]
    for w in witnesses:
        lines.append(f"  edges={sorted(w.true_edges)} loops={sorted(w.loops)}")
    _emit("\n".join(lines), cfg.out)
    return 0


_COMMANDS = {
    "info": cmd_info,
    "graph": cmd_graph,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "realize": cmd_realize,
    "extremal": cmd_extremal,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return _COMMANDS[cfg.command](cfg)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except _INVARIANT_ERRORS as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
