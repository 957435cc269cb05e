"""Command-line workbench: verification, classification, constructions, experiments.

Graphs travel as MGF files.  Subcommands that produce a graph print MGF on
stdout; inspection subcommands print JSON.  The experiment subcommand exits
0 on PASS, 1 on FAIL and 2 on UNDECIDED.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import factors
from .construct import (
    lift_to_rgraph,
    meredith_extension,
    p_power,
    replace_edge,
)
from .core import load_mgf, mask_of, save_mgf, write_mgf
from .cuts import BRUTE_MAX_N, min_odd_cut, tight_cuts
from .experiments import DEFAULT_SEED, EXPERIMENT_NAMES, run_experiment
from .generate import GenSpec, generate
from .hcoloring import find_hcoloring
from .iso import are_isomorphic, canonical_form


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _vertices(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if (mask >> v) & 1]


def _cmd_verify(args) -> int:
    g = load_mgf(args.file)
    out: dict = {"order": g.n, "size": g.m, "regular": g.regular_degree() == args.r}
    if g.n < 2 or g.n % 2:
        out.update(
            {
                "min_odd_cut": None,
                "witness": None,
                "is_r_graph": False,
                "nontrivial_tight_cuts": None,
            }
        )
        _emit(out)
        return 0
    cert = min_odd_cut(g)
    out["min_odd_cut"] = cert.value
    out["witness"] = _vertices(cert.side)
    out["is_r_graph"] = bool(out["regular"] and cert.value >= args.r)
    if g.n <= BRUTE_MAX_N:
        cuts = tight_cuts(g, args.r, nontrivial_only=True)
        out["nontrivial_tight_cuts"] = [_vertices(c.side) for c in cuts]
    else:
        out["nontrivial_tight_cuts"] = None
    _emit(out)
    return 0


def _cmd_classify(args) -> int:
    g = load_mgf(args.file)
    if g.regular_degree() != args.r:
        raise SystemExit(f"error: graph is not {args.r}-regular")
    ok, witness = factors.is_class1(g)
    value, _ = factors.pi(g)
    out: dict = {"class": 1 if ok else 2, "pi": value}
    if ok:
        out["witness_matchings"] = [list(m) for m in witness]
    _emit(out)
    return 0


def _cmd_iso(args) -> int:
    a = load_mgf(args.a)
    b = load_mgf(args.b)
    same = are_isomorphic(a, b)
    _emit({"isomorphic": same})
    return 0 if same else 1


def _cmd_canon(args) -> int:
    g = load_mgf(args.file)
    print(canonical_form(g).certificate.hex())
    return 0


def _cmd_hcolor(args) -> int:
    guest = load_mgf(args.guest)
    host = load_mgf(args.host)
    res = find_hcoloring(guest, host, mode=args.mode, node_cap=args.node_cap)
    out: dict = {"status": res.status, "nodes": res.nodes}
    if res.coloring is not None:
        out["coloring"] = {
            "f": [[e, img] for e, img in enumerate(res.coloring.f)],
            "f_V": [[v, img] for v, img in enumerate(res.coloring.f_V)],
        }
    if res.count is not None:
        out["count"] = res.count
    if res.colorings is not None:
        out["colorings"] = [
            {"f": [[e, img] for e, img in enumerate(c.f)]} for c in res.colorings
        ]
    _emit(out)
    if res.status == "undecided":
        return 2
    return 0 if res.status != "none" else 1


def _cmd_construct(args) -> int:
    if args.what == "pm":
        counts = [int(x) for x in args.partition.split(",")]
        if len(counts) != 6:
            raise SystemExit("error: --partition wants six comma-separated counts")
        print(write_mgf(p_power(tuple(counts))), end="")
        return 0
    raise SystemExit(f"error: unknown construction {args.what!r}")


def _cmd_lift(args) -> int:
    g = load_mgf(args.file)
    side = mask_of(int(x) for x in args.contract.split(","))
    result, _ = lift_to_rgraph(g, side, args.r)
    print(write_mgf(result), end="")
    return 0


def _cmd_meredith(args) -> int:
    g = load_mgf(args.file)
    pairing = None
    if args.pairing:
        pairing = tuple(int(x) for x in args.pairing.split(","))
    print(write_mgf(meredith_extension(g, args.vertex, pairing=pairing)), end="")
    return 0


def _cmd_replace(args) -> int:
    a = load_mgf(args.g)
    b = load_mgf(args.g2)
    print(write_mgf(replace_edge(a, args.edge, b, args.edge2, swap=args.swap)), end="")
    return 0


def _parse_filters(tokens: list[str], r: int) -> dict:
    kw: dict = {}
    for chunk in tokens:
        for tok in chunk.replace(",", " ").split():
            t = tok.strip().lower()
            if t == "connected":
                kw["connected"] = True
            elif t == "simple":
                kw["simple"] = True
            elif t == "class1":
                kw["edge_class"] = 1
            elif t == "class2":
                kw["edge_class"] = 2
            elif t in ("rgraph", f"{r}graph"):
                kw["r_graph"] = True
            else:
                raise SystemExit(f"error: unknown filter token {tok!r}")
    return kw


def _cmd_gen(args) -> int:
    kw = _parse_filters(args.filter or [], args.r)
    graphs = generate(GenSpec(r=args.r, n_max=args.max_n, **kw))
    entries = []
    for i, g in enumerate(graphs):
        name = f"{args.r}reg_n{g.n}_{i}.mgf"
        entries.append(
            {
                "file": name,
                "order": g.n,
                "size": g.m,
                "certificate": canonical_form(g).certificate.hex(),
            }
        )
    manifest = {
        "r": args.r,
        "n_max": args.max_n,
        "filters": kw,
        "count": len(graphs),
        "graphs": entries,
    }
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for entry, g in zip(entries, graphs):
            save_mgf(g, out / entry["file"])
        (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
        print(f"wrote {len(graphs)} graphs to {out}")
    else:
        for entry, g in zip(entries, graphs):
            entry["mgf"] = write_mgf(g)
        _emit(manifest)
    return 0


def _cmd_experiment(args) -> int:
    report = run_experiment(
        args.id, r=args.r, n_max=args.n_max, seed=args.seed, jobs=args.jobs
    )
    if args.out:
        report.write(args.out)
    good = sum(1 for r in report.instances if r["ok"])
    print(
        f"{report.experiment}: {report.verdict} "
        f"({good}/{len(report.instances)} checks ok, {report.wall_time_s:.1f}s)"
    )
    for row in report.instances:
        if not row["ok"]:
            note = "undecided" if row.get("undecided") else "failed"
            print(f"  {row['id']}: {note} {row.get('detail', '')}".rstrip())
    return {"PASS": 0, "FAIL": 1, "UNDECIDED": 2}[report.verdict]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="regraph")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="r-graph check with cut certificates")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("classify", help="edge-chromatic class and pi")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("iso", help="isomorphism test (exit 0 iff isomorphic)")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("canon", help="canonical certificate as hex")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("hcolor", help="search for a coloring of guest by host")
    p.add_argument("--guest", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--mode", default="first", choices=("first", "count", "all_mod_aut"))
    p.add_argument("--node-cap", type=int, default=None)
    p.set_defaults(fn=_cmd_hcolor)

    p = sub.add_parser("construct", help="named constructions, MGF on stdout")
    p.add_argument("what", choices=("pm",))
    p.add_argument("--partition", required=True, help="six matching multiplicities")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("lift", help="contract a vertex set and lift back to degree r")
    p.add_argument("file")
    p.add_argument("--contract", required=True, help="comma-separated vertices")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(fn=_cmd_lift)

    p = sub.add_parser("meredith", help="replace a vertex by a bipartite gadget")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--pairing", default=None, help="comma-separated star permutation")
    p.set_defaults(fn=_cmd_meredith)

    p = sub.add_parser("replace", help="splice one graph into an edge of another")
    p.add_argument("--g", required=True)
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--edge2", type=int, required=True)
    p.add_argument("--swap", action="store_true")
    p.set_defaults(fn=_cmd_replace)

    p = sub.add_parser("gen", help="generate small regular multigraphs")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--filter", action="append", default=[])
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("experiment", help="run a reproducible experiment")
    p.add_argument("id", choices=EXPERIMENT_NAMES)
    p.add_argument("--r", type=int, default=9)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_experiment)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
