"""Command line front end.

Exit codes: 0 success, 2 usage or malformed input, 3 budget exceeded,
4 domain precondition failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .abacus import CoreTuple, core_from_tuple, core_tuple, pbar_core, rank_from_tuple
from .compat import verify_w_compatible
from .crystal import block_reduced_graph
from .donovan import donovan_bound, enumerate_representatives, reduce_core
from .errors import InvalidInput, SpinBlockError
from .lie import cartan_data, coords_from_tuple, level, level_matrix
from .partitions import content, half, p_strict_partition, parity
from .scopes import (action_allowed, allowed_component, apply_K, apply_K_tuple, is_w_allowed,
                     rank_change, threshold)

SCHEMA = "spinblock/1"
DEFAULT_BUDGET = 200_000


def parse_partition(text: str, p: int):
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise InvalidInput(f"cannot read partition {text!r}; expected e.g. 5,3,1")
    return p_strict_partition(sorted(parts, reverse=True), p)


def parse_tuple(text: str, p: int) -> CoreTuple:
    """'l:e,l:e,...' with one entry per runner pair."""
    try:
        pairs = [tuple(int(y) for y in x.split(":")) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInput(f"cannot read core tuple {text!r}; expected e.g. 2:0,3:0")
    if any(len(pr) != 2 for pr in pairs):
        raise InvalidInput(f"each entry of {text!r} must look like l:e")
    return CoreTuple.from_pairs(p, pairs)


def fmt_parts(parts) -> str:
    return ",".join(map(str, parts))


def emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


def cmd_core(args) -> int:
    lam = parse_partition(args.partition, args.p)
    core, w = pbar_core(lam, args.p)
    c = core_tuple(core, args.p)
    payload = {
        "partition": list(lam), "core": list(core), "weight": w, "tuple": c.to_json(),
        "parity": parity(core), "content": list(content(core, args.p)),
    }
    text = "\n".join([
        f"core     {fmt_parts(core) or '()'}",
        f"weight   {w}",
        f"tuple    {c}",
        f"parity   {parity(core)}",
        f"content  {fmt_parts(content(core, args.p))}",
    ])
    emit(args, payload, text)
    return 0


def cmd_graph(args) -> int:
    g = block_reduced_graph(args.p, args.max_rank, args.budget)
    if args.format == "dot":
        out = g.to_dot()
    elif args.format == "json":
        out = json.dumps({"schema": SCHEMA, **g.to_json()}, sort_keys=True) + "\n"
    else:
        lines = [f"{len(g.vertices)} blocks, {len(g.edges)} edges"]
        lines += [f"{u} -{i}-> {v}" for u, v, i in g.edges]
        out = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_scopes(args) -> int:
    if ":" in args.target:
        c = parse_tuple(args.target, args.p)
        img = apply_K_tuple(args.i, c)
        payload = {"i": args.i, "tuple": c.to_json(), "image": img.to_json(),
                   "core": list(core_from_tuple(img))}
        emit(args, payload, str(img))
        return 0
    lam = parse_partition(args.target, args.p)
    img = apply_K(args.i, lam, args.p)
    emit(args, {"i": args.i, "partition": list(lam), "image": list(img)}, fmt_parts(img))
    return 0


def cmd_allowed(args) -> int:
    c = parse_tuple(args.tuple, args.p)
    if args.component:
        if args.max_rank is None:
            raise InvalidInput("--component needs --max-rank")
        comp = allowed_component(c, args.w, args.max_rank, args.budget)
        members = [{"tuple": m.to_json(), "rank": rank_from_tuple(m)} for m in comp.members]
        text = "\n".join(f"{m}  rank {rank_from_tuple(m)}" for m in comp.members)
        emit(args, {"start": c.to_json(), "w": args.w, "max_rank": args.max_rank,
                    "members": members}, text)
        return 0
    indices = range(c.t + 1) if args.i is None else [args.i]
    rows = []
    for i in indices:
        rows.append({
            "i": i, "threshold": threshold(i, c), "w_allowed": is_w_allowed(i, c, args.w),
            "action_allowed": action_allowed(i, c, args.w), "rank_change": rank_change(i, c),
            "image": apply_K_tuple(i, c).to_json(),
        })
    text = "\n".join(
        f"K_{r['i']}: threshold {r['threshold']}, allowed {r['action_allowed']}, "
        f"rank change {r['rank_change']:+d}" for r in rows)
    emit(args, {"tuple": c.to_json(), "w": args.w, "actions": rows}, text)
    return 0


def cmd_reduce(args) -> int:
    c = parse_tuple(args.tuple, args.p)
    tr = reduce_core(c, args.w)
    lines = [f"start  {c}  rank {rank_from_tuple(c)}"]
    lines += [f"K_{s.i:<3}{s.tuple}  rank {s.rank}  ({s.move})" for s in tr.steps]
    lines.append(f"end    {tr.end}  rank {tr.end_rank}")
    emit(args, tr.to_json(), "\n".join(lines))
    return 0


def cmd_bound(args) -> int:
    n = donovan_bound(args.p, args.w)
    emit(args, {"p": args.p, "w": args.w, "bound": n}, str(n))
    return 0


def cmd_enumerate(args) -> int:
    reps = enumerate_representatives(args.p, args.w, args.budget)
    rows = [{"tuple": c.to_json(), "rank": rank_from_tuple(c), "level": level(coords_from_tuple(c))}
            for c in reps]
    text = "\n".join(f"{c}  rank {r['rank']}  level {r['level']}" for c, r in zip(reps, rows))
    emit(args, {"p": args.p, "w": args.w, "count": len(reps), "representatives": rows}, text)
    return 0


def cmd_level_matrix(args) -> int:
    m = level_matrix(args.p, args.lo, args.hi)
    axis = list(range(args.lo, args.hi + 1))
    if half(args.p) == 2:
        if args.format == "json":
            emit(args, {"p": args.p, "lo": args.lo, "hi": args.hi, "matrix": m}, "")
        elif args.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["n1\\n2"] + axis)
            for n1, row in zip(axis, m):
                writer.writerow([n1] + row)
            sys.stdout.write(buf.getvalue())
        else:
            width = max(len(str(x)) for row in m for x in row) + 1
            for row in m:
                print("".join(str(x).rjust(width) for x in row))
        return 0
    rows = [{"coords": list(v), "level": lv} for v, lv in m.items()]
    if args.format == "json":
        emit(args, {"p": args.p, "lo": args.lo, "hi": args.hi, "levels": rows}, "")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"n{k}" for k in range(1, half(args.p) + 1)] + ["level"])
        for r in rows:
            writer.writerow(r["coords"] + [r["level"]])
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_verify_compat(args) -> int:
    nu = parse_partition(args.core, args.p)
    rep = verify_w_compatible(nu, args.i, args.w, args.p, budget=args.budget)
    text = "\n".join([
        f"nu {fmt_parts(rep.nu) or '()'}  mu {fmt_parts(rep.mu) or '()'}",
        f"bijection   {rep.cond1}",
        f"paths       {rep.cond2}  ({rep.cond2_checked} pairs checked)",
        f"parities    {rep.cond3}",
        f"passed      {rep.passed}" + ("  (trivial)" if rep.trivial else ""),
    ])
    emit(args, rep.to_json(), text)
    return 0


def cmd_cartan(args) -> int:
    data = cartan_data(args.p)
    text = "\n".join(" ".join(f"{x:3d}" for x in row) for row in data.C)
    emit(args, data.to_json(), text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    env_budget = os.environ.get("SPINBLOCK_BUDGET")
    budget = int(env_budget) if env_budget and env_budget.isdigit() else DEFAULT_BUDGET

    parser = argparse.ArgumentParser(prog="spinblock", description="Spin block combinatorics.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("-p", type=int, required=True, help="odd prime")
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--budget", type=int, default=budget,
                        help="search budget (default from SPINBLOCK_BUDGET)")
        sp.set_defaults(func=func)
        return sp

    sp = add("core", cmd_core, "core, weight and tuple of a partition")
    sp.add_argument("partition", help='comma separated parts, "" for the empty partition')

    sp = add("graph", cmd_graph, "block-reduced crystal graph", ("dot", "json", "text"))
    sp.add_argument("--max-rank", type=int, required=True)
    sp.add_argument("-o", "--output", help="write to this file instead of stdout")

    sp = add("scopes", cmd_scopes, "apply K_i to a partition or core tuple")
    sp.add_argument("-i", type=int, required=True)
    sp.add_argument("target", help="partition 12,7,6,2,1 or tuple 2:0,3:0")

    sp = add("allowed", cmd_allowed, "thresholds and allowed actions at a core tuple")
    sp.add_argument("-w", type=int, required=True)
    sp.add_argument("-i", type=int)
    sp.add_argument("--component", action="store_true", help="list the allowed component")
    sp.add_argument("--max-rank", type=int)
    sp.add_argument("tuple")

    sp = add("reduce", cmd_reduce, "reduce a core by w-allowed actions")
    sp.add_argument("-w", type=int, required=True)
    sp.add_argument("tuple")

    sp = add("bound", cmd_bound, "rank bound for weight w")
    sp.add_argument("-w", type=int, required=True)

    sp = add("enumerate", cmd_enumerate, "irreducible representative cores")
    sp.add_argument("-w", type=int, required=True)

    sp = add("level-matrix", cmd_level_matrix, "levels on a coordinate box", ("text", "csv", "json"))
    sp.add_argument("--lo", type=int, required=True)
    sp.add_argument("--hi", type=int, required=True)

    sp = add("verify-compat", cmd_verify_compat, "brute-force check of a w-compatible pair")
    sp.add_argument("-i", type=int, required=True)
    sp.add_argument("-w", type=int, required=True)
    sp.add_argument("core")

    add("cartan", cmd_cartan, "Cartan matrix and null vectors")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget <= 0:
        parser.error("--budget must be positive")
    try:
        return args.func(args)
    except SpinBlockError as exc:
        print(f"spinblock: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
