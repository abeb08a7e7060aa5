"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import divisors as dv
from . import graph as gc
from . import jacobian_group as jac
from . import rank_rr as rk
from . import semigroups as sg
from . import sweep as sw
from .errors import EnumerationCapExceeded, InputError

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 2, 3


@dataclass(frozen=True)
class RunConfig:
    gen: str | None
    input: str | None
    vertex: str | None
    base: int
    bound: int | None
    cap: int
    seed: int
    out: str | None
    format: str

    def __post_init__(self):
        if (self.gen is None) == (self.input is None):
            raise InputError("give exactly one of --gen or --input")
        if self.cap <= 0:
            raise InputError("--cap must be positive")
        if self.bound is not None and self.bound < 1:
            raise InputError("--bound must be >= 1")

    def load(self):
        """The graph and its distinguished vertex (0 for edge-list input)."""
        if self.gen is not None:
            fam = gc.from_spec(self.gen)
            return fam.graph, fam.P
        try:
            text = Path(self.input).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {self.input}: {exc}") from exc
        return gc.parse_edge_list(text), 0

    def check_base(self, g):
        if not 0 <= self.base < g.n:
            raise InputError(f"base vertex {self.base} out of range")

    def resolve_vertex(self, g, P):
        if self.vertex is None or self.vertex == "P":
            return P
        try:
            v = int(self.vertex)
        except ValueError as exc:
            raise InputError(f"bad vertex {self.vertex!r}") from exc
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
        return v


def _emit(cfg, payload, table):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n" if cfg.format == "json" else table
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt_div(D):
    return "[" + ", ".join(str(a) for a in D) + "]"


def cmd_laplacian(cfg, args):
    g, _ = cfg.load()
    L = gc.build_laplacian(g)
    width = max(len(str(x)) for row in L for x in row)
    table = "\n".join(" ".join(str(x).rjust(width) for x in row) for row in L) + "\n"
    _emit(cfg, {"n": g.n, "laplacian": [list(r) for r in L]}, table)


def cmd_genus(cfg, args):
    g, _ = cfg.load()
    gg = gc.genus(g)
    _emit(cfg, {"genus": gg, "n": g.n, "edges": g.num_edges}, f"{gg}\n")


def cmd_connectivity(cfg, args):
    g, P = cfg.load()
    rep = gc.connectivity_report(g)
    lines = [
        f"lambda (edge connectivity)   {rep.edge_connectivity}",
        f"kappa (vertex connectivity)  {rep.vertex_connectivity}",
        f"delta (min degree)           {rep.min_degree}",
        f"lambda_2 (algebraic)         {rep.algebraic_connectivity:.6f}",
        f"cut vertices                 {sorted(rep.cut_vertices)}",
        f"distinguished vertex P       {P}{' (cut vertex)' if P in rep.cut_vertices else ''}",
        f"chain lambda_2<=kappa<=lambda<=delta holds: {rep.chain_holds()}",
    ]
    payload = rep.to_json()
    payload["P"] = P
    payload["chain_holds"] = rep.chain_holds()
    _emit(cfg, payload, "\n".join(lines) + "\n")


def _divisor(cfg, g, P, text):
    if text is None:
        raise InputError("--divisor is required")
    return dv.parse_divisor(text, g.n, named={"P": cfg.resolve_vertex(g, P)})


def cmd_rank(cfg, args):
    g, P = cfg.load()
    D = _divisor(cfg, g, P, args.divisor)
    cert = rk.rank(g, D, cfg.cap)
    table = f"divisor      {_fmt_div(D)}\nrank         {cert.rank}\nobstruction  {_fmt_div(cert.obstruction)}\n"
    _emit(cfg, cert.to_json(), table)


def cmd_reduce(cfg, args):
    g, P = cfg.load()
    cfg.check_base(g)
    D = _divisor(cfg, g, P, args.divisor)
    red = dv.reduce(g, D, cfg.base)
    payload = {
        "divisor": list(D),
        "base": red.base,
        "reduced": list(red.reduced),
        "script": list(red.script),
    }
    table = (
        f"divisor  {_fmt_div(D)}\nbase     {red.base}\n"
        f"reduced  {_fmt_div(red.reduced)}\nscript   {_fmt_div(red.script)}\n"
    )
    _emit(cfg, payload, table)


def cmd_jacobian(cfg, args):
    g, _ = cfg.load()
    cfg.check_base(g)
    J = jac.jacobian(g, cfg.base)
    table = f"factors  {list(J.invariant_factors)}\norder    {J.order}\n"
    _emit(cfg, J.to_json(), table)


def _window_lines(label, w):
    gens = w.minimal_generators()
    return [
        f"{label:5s} <{', '.join(map(str, gens))}> in [0, {w.bound}]",
        f"      members {w.sorted_members()}",
        f"      gaps    {w.gaps}",
    ]


def cmd_semigroups(cfg, args):
    g, P0 = cfg.load()
    P = cfg.resolve_vertex(g, P0)
    bound = cfg.bound
    if bound is None:
        bound = sg.default_bound(g, P)
    rep = sg.containment_report(g, P, bound, cfg.cap, cfg.cap)
    c = rep.checks
    lines = [f"vertex P = {P}, deg P = {c['deg_P']}, genus = {c['genus']}, lambda = {c['lambda']}"]
    lines += _window_lines("Hf", rep.hf)
    lines += _window_lines("Hr", rep.hr)
    lines += _window_lines("Hred", rep.hred)
    lines += [
        f"min nonzero Hf = {c['min_hf']}",
        f"Hred <= Hf: {c['containment_hred_hf']}   Hr <= Hf: {c['hr_subset_hf']}",
        f"|Hf \\ Hr| in window = {len(c['hf_minus_hr'])}",
    ]
    _emit(cfg, rep.to_json(), "\n".join(lines) + "\n")


def cmd_edges(cfg, args):
    g, _ = cfg.load()
    text = gc.format_edge_list(g)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_sweep(cfg_args, args):
    lo, hi = sw.parse_range(args.n)
    records = sw.conjecture_sweep(
        args.family,
        args.count,
        (lo, hi),
        bound=args.bound,
        seed=args.seed,
        cap=args.cap,
        rank_cap=args.cap,
        jobs=args.jobs,
    )
    if args.out:
        with open(args.out, "w") as fh:
            summary = sw.write_jsonl(records, fh)
        Path(args.out + ".summary.json").write_text(json.dumps(summary, sort_keys=True, indent=2) + "\n")
    else:
        summary = sw.write_jsonl(records, sys.stdout)
    sys.stderr.write(
        f"sweep: {summary['graphs']} graphs, {summary['pairs']} vertex pairs, "
        f"{summary['violation_count']} Hr-not-in-Hf findings, {summary['skipped']} skipped\n"
    )
    for v in summary["violations"]:
        sys.stderr.write(f"VIOLATION (finding, not an error): graph {v['graph']} vertex {v['vertex']}\n")


COMMANDS = {
    "laplacian": cmd_laplacian,
    "genus": cmd_genus,
    "connectivity": cmd_connectivity,
    "rank": cmd_rank,
    "reduce": cmd_reduce,
    "jacobian": cmd_jacobian,
    "semigroups": cmd_semigroups,
    "edges": cmd_edges,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="graphsemigroups",
        description="Divisor theory and Weierstrass semigroups of finite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--gen", help="generator spec, e.g. complete:4, wheel:4, bridged:triangle,triangle")
    src.add_argument("--input", help="edge-list file: n, then one 'u v' per line")
    common.add_argument("--vertex", help="vertex index, or P for the generator's distinguished vertex")
    common.add_argument("--divisor", help="dense a,b,c or sparse v:c,v:c (v may be P)")
    common.add_argument("--base", type=int, default=0, help="base vertex for reduction (default 0)")
    common.add_argument("--bound", type=int, help="window bound B (default max(2g, deg P) + 2)")
    common.add_argument("--cap", type=int, default=sg.RANK_CAP, help="enumeration cap")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("table", "json"), default="table")

    for name in COMMANDS:
        sub.add_parser(name, parents=[common])

    sp = sub.add_parser("sweep", help="search for Hr not contained in Hf")
    sp.add_argument("--family", choices=sw.FAMILIES, default="random-connected")
    sp.add_argument("--n", default="4..6", help="vertex-count range lo..hi")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--cap", type=int, default=sg.HF_CAP)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", help="JSONL path; summary goes to <out>.summary.json")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            if args.count < 0 or args.cap <= 0:
                raise InputError("--count must be >= 0 and --cap positive")
            try:
                sw.parse_range(args.n)
            except ValueError as exc:
                raise InputError(str(exc)) from exc
            cmd_sweep(None, args)
            return EXIT_OK
        cfg = RunConfig(
            gen=args.gen,
            input=args.input,
            vertex=args.vertex,
            base=args.base,
            bound=args.bound,
            cap=args.cap,
            seed=args.seed,
            out=args.out,
            format=args.format,
        )
        COMMANDS[args.command](cfg, args)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
