"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import constructions, detect, oracle
from .errors import OPTuranError
from .formulas import Family, ex_value
from .graph import Graph, connected_components, from_graph6, graph_on_edges, to_dot
from .kblock import k_blocks


class UsageError(Exception):
    pass


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.|:)\s*(\d+)\s*", text)
    if not m:
        raise UsageError(f"bad range {text!r}; expected A..B")
    return range(int(m.group(1)), int(m.group(2)) + 1)


def _read_graph(spec: str | None) -> Graph:
    if spec is None or spec == "-":
        text = sys.stdin.readline()
    elif os.path.isfile(spec):
        with open(spec) as fh:
            text = fh.readline()
    else:
        text = spec
    return from_graph6(text)


# -- value / table --------------------------------------------------------------

def _describe(tv) -> str:
    p = tv.params
    if tv.family is Family.CYCLE and "lambda" in p:
        return f"{tv.value} (lambda={p['lambda']})"
    if tv.family is Family.PATH and "regime" in p:
        return f"{tv.value} (regime={p['regime'].short})"
    if tv.k == 3 and tv.family is Family.PATH:
        return str(tv.value)
    return f"{tv.value} (boundary)"


def cmd_value(args) -> int:
    tv = ex_value(args.family, args.n, args.k)
    _out(_describe(tv))
    if args.details:
        for key in sorted(tv.params):
            val = tv.params[key]
            _out(f"{key}={getattr(val, 'value', val)}")
    return 0


def _table_row(tv) -> list:
    p = tv.params
    if tv.family is Family.CYCLE:
        if "lambda" in p:
            return [p["lambda"], int(p["divisible"])]
        return ["boundary", ""]
    if "regime" in p:
        return [p["regime"].value, p["min_t"]]
    return ["boundary", ""]


def cmd_table(args) -> int:
    if args.format != "csv":
        raise UsageError("only csv output is supported")
    _out("n,k,family,value,param1,param2")
    for n in _parse_range(args.n_range):
        tv = ex_value(args.family, n, args.k)
        row = [n, args.k, tv.family.value, tv.value] + _table_row(tv)
        _out(",".join(str(x) for x in row))
    return 0


# -- construct / check / decompose ---------------------------------------------

def cmd_construct(args) -> int:
    if args.family == "cycle":
        cert = constructions.extremal_cycle_graph(args.n, args.k)
    elif args.variant == "connected":
        cert = constructions.extremal_path_connected_graph(args.n, args.k)
    elif args.variant == "bounded":
        cert = constructions.extremal_path_bounded_graph(args.n, args.k)
    else:
        cert = constructions.extremal_path_graph(args.n, args.k)
    if args.format == "graph6":
        _out(cert.graph6())
    elif args.format == "dot":
        sys.stdout.write(to_dot(cert.graph))
    elif args.format == "edges":
        for u, v in cert.graph.edge_list:
            _out(f"{u} {v}")
    if args.sidecar:
        with open(args.sidecar, "w") as fh:
            fh.write(cert.to_json() + "\n")
    if args.format == "json" or not args.sidecar:
        _out(cert.to_json())
    return 0 if cert.valid else 1


def _parse_forbid(text: str) -> tuple[str, int]:
    m = re.fullmatch(r"([CPcp])(\d+)", text.strip())
    if not m:
        raise UsageError(f"bad --forbid {text!r}; expected Ck or Pk")
    return m.group(1).upper(), int(m.group(2))


def cmd_check(args) -> int:
    kind, k = _parse_forbid(args.forbid)
    g = _read_graph(args.input)
    if kind == "C":
        if k < 3:
            raise UsageError("cycles need k >= 3")
        found = detect.has_cycle_len(g, k)
    else:
        if k < 2:
            raise UsageError("paths need k >= 2")
        found = not detect.is_pk_free(g, k)
    name = f"{kind}{k}"
    _out(f"contains {name}" if found else f"{name}-free")
    return 1 if found else 0


def cmd_decompose(args) -> int:
    g = _read_graph(args.input)
    if args.k < 3:
        raise UsageError("k must be at least 3")
    comps = [c for c in connected_components(g) if len(c) > 1]
    index = 0
    for comp in comps:
        sub_edges = [e for e in g.edge_list if e[0] in comp]
        h, labels = graph_on_edges(sub_edges)
        dec = k_blocks(h, args.k)
        for cls in dec.classes:
            edges = sorted((labels[u], labels[v]) for u, v in cls)
            order = len({x for e in edges for x in e})
            _out(f"block {index} order={order} size={len(edges)}: "
                 + " ".join(f"{u}-{v}" for u, v in edges))
            index += 1
    return 0


# -- verify ----------------------------------------------------------------------

def _cycle_job(nk):
    n, k = nk
    from .formulas import ex_cycle
    value, witness = oracle.brute_ex_cycle(n, k, witness=True)
    return "cycle", n, k, ex_cycle(n, k).value, value, witness


def _path_job(nk):
    n, k = nk
    from .formulas import ex_path
    value, witness = oracle.brute_ex_path(n, k, witness=True)
    return "path", n, k, ex_path(n, k).value, value, witness


def _run_jobs(fn, items, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_verify(args) -> int:
    from .graph import to_graph6

    n_max = args.n_max
    if n_max > oracle.DEFAULT_BUDGET:
        raise UsageError(f"--n-max above {oracle.DEFAULT_BUDGET} is not supported")
    if n_max > 8 and not args.allow_large:
        raise UsageError("--n-max above 8 takes minutes; pass --allow-large")
    families = ["cycle", "path", "order-bound", "kblocks"] if args.family == "all" else [args.family]
    failed = False
    for fam in families:
        if fam in ("cycle", "path"):
            items = [(n, k) for n in range(3, n_max + 1) for k in range(3, n + 1)]
            job = _cycle_job if fam == "cycle" else _path_job
            bad = [r for r in _run_jobs(job, items, args.jobs) if r[3] != r[4]]
            for _, n, k, formula, brute, witness in bad:
                _out(f"FAIL {fam} n={n} k={k} formula={formula} oracle={brute}")
                _out(f"witness {to_graph6(witness)}")
            if bad:
                failed = True
            else:
                _out(f"PASS 3≤k≤n≤{n_max} ({fam})")
        elif fam == "order-bound":
            cap = min(n_max, 7)
            bad = list(oracle.order_bound_violations(cap, range(3, cap + 1)))
            for g, k, bound in bad:
                _out(f"FAIL order-bound k={k} order={g.n} bound={bound}")
                _out(f"witness {to_graph6(g)}")
            failed = failed or bool(bad)
            if not bad:
                _out(f"PASS order-bound n≤{cap} 3≤k≤{cap}")
        elif fam == "kblocks":
            cap = min(n_max, 7)
            bad = list(oracle.kblock_structure_violations(cap, range(3, cap + 1)))
            for g, k, reason in bad:
                _out(f"FAIL kblocks k={k}: {reason}")
                _out(f"witness {to_graph6(g)}")
            failed = failed or bool(bad)
            if not bad:
                _out(f"PASS kblocks n≤{cap} 3≤k≤{cap}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="opturan", description="Outerplanar Turán numbers of cycles and paths.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("value", help="closed-form Turán number")
    v.add_argument("--family", choices=["cycle", "path"], required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--details", action="store_true", help="print derivation parameters")
    v.set_defaults(func=cmd_value)

    t = sub.add_parser("table", help="CSV table over a range of n")
    t.add_argument("--family", choices=["cycle", "path"], required=True)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--n-range", required=True, help="inclusive range A..B")
    t.add_argument("--format", default="csv", choices=["csv"])
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("construct", help="build a certified extremal graph")
    c.add_argument("--family", choices=["cycle", "path"], required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--variant", choices=["best", "connected", "bounded"], default="best",
                   help="path family only: which host class to build for")
    c.add_argument("--format", choices=["graph6", "json", "dot", "edges"], default="graph6")
    c.add_argument("--sidecar", help="write the JSON sidecar here instead of stdout")
    c.set_defaults(func=cmd_construct)

    ch = sub.add_parser("check", help="test a graph6 graph for a forbidden cycle or path")
    ch.add_argument("--forbid", required=True, help="Ck or Pk")
    ch.add_argument("--input", help="graph6 string, file, or - for stdin")
    ch.set_defaults(func=cmd_check)

    d = sub.add_parser("decompose", help="k-block decomposition of an outerplanar graph")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--input", help="graph6 string, file, or - for stdin")
    d.set_defaults(func=cmd_decompose)

    vf = sub.add_parser("verify", help="compare formulas and properties with brute force")
    vf.add_argument("--family", choices=["cycle", "path", "order-bound", "kblocks", "all"], default="all")
    vf.add_argument("--n-max", type=int, default=8)
    vf.add_argument("--jobs", type=int, default=1)
    vf.add_argument("--allow-large", action="store_true", help="permit n-max 9 or 10")
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, OPTuranError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
