"""``tdp`` command line: check, color, exact, gen, verify, bench.

Exit codes: 0 success, 1 input error, 2 negative finding (copy of L, no
colouring, failed verification), 3 undecided (search budget exhausted).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import certificate as certs
from .generators import gen_named, random_cubic, truncate
from .graph import Graph, GraphError, is_cubic, read_graphs, serialize_edge_list, serialize_graph6
from .motif import find_l_witness


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("TDP_BUDGET")
    return int(env) if env else None


def _emit(outcomes: list[certs.Outcome], fmt: str) -> None:
    if fmt == "json":
        if len(outcomes) == 1:
            print(json.dumps(outcomes[0].certificate, indent=2))
        else:
            for o in outcomes:
                print(json.dumps(o.certificate, separators=(",", ":")))
        return
    for o in outcomes:
        c = o.certificate
        chk = c["checks"]
        line = f"n={c['input']['n']} mode={c['mode']} cubic={chk['cubic']} l_free={chk['l_free']}"
        if c["partition"] is not None:
            kinds = [p["kind"] for p in c["partition"]]
            line += f" pieces={len(kinds)} partition_valid={chk['partition_valid']}"
        if c["coloring"] is not None:
            line += f" coloring={''.join(c['coloring'])} coupon_valid={chk['coupon_valid']}"
        if c["oracle"] is not None:
            orc = c["oracle"]
            line += f" d_t={orc['d_t']} (>= {orc['d_t_at_least']}) proven={orc['proven']} nodes={orc['nodes']}"
        if o.message:
            line += f"  # {o.message}"
        print(line)


def _load(args) -> list[Graph]:
    return read_graphs(_read_text(args.input), args.format)


def _run_each(args, fn) -> int:
    try:
        graphs = _load(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return certs.INPUT_ERROR
    if not graphs:
        print("error: no graph in input", file=sys.stderr)
        return certs.INPUT_ERROR
    outcomes = [fn(g) for g in graphs]
    for o in outcomes:
        if o.exit_code == certs.INPUT_ERROR:
            print(f"error: {o.message}", file=sys.stderr)
    _emit(outcomes, args.output)
    return max(o.exit_code for o in outcomes)


def cmd_check(args) -> int:
    return _run_each(args, lambda g: certs.check(g, args.seed))


def cmd_color(args) -> int:
    return _run_each(args, lambda g: certs.color(g, args.seed, _budget(args)))


def cmd_exact(args) -> int:
    return _run_each(args, lambda g: certs.exact(g, args.seed, _budget(args)))


def _generate(name: str, param: int | None, seed: int | None, do_truncate: bool) -> Graph:
    if name == "random":
        if param is None:
            raise GraphError("random needs the vertex count")
        g = random_cubic(param, seed)
    else:
        g = gen_named(name, param)
    return truncate(g) if do_truncate else g


def cmd_gen(args) -> int:
    try:
        g = _generate(args.name, args.param, args.seed, args.truncate)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return certs.INPUT_ERROR
    if args.format == "graph6":
        print(serialize_graph6(g))
    else:
        sys.stdout.write(serialize_edge_list(g))
    return certs.OK


def cmd_verify(args) -> int:
    try:
        graphs = _load(args)
        if len(graphs) != 1:
            raise GraphError("verify takes exactly one graph")
        cert = json.loads(_read_text(args.certificate))
    except (GraphError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return certs.INPUT_ERROR
    try:
        code, problems = certs.verify_certificate(graphs[0], cert, _budget(args))
    except certs.MalformedCertificate as exc:
        print(f"error: malformed certificate: {exc}", file=sys.stderr)
        return certs.INPUT_ERROR
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    print("verified" if code == certs.OK else "not verified")
    return code


BENCH_FIELDS = [
    "index", "n", "m", "cubic", "l_free", "pieces",
    "partition_valid", "coupon_valid", "partition_ms", "coloring_ms",
]


def bench_row(index: int, g: Graph) -> dict:
    from .coloring import two_coupon_color, verify_coupon
    from .partition import f_partition, validate_partition

    row = dict.fromkeys(BENCH_FIELDS)
    row.update(index=index, n=g.n, m=g.m, cubic=is_cubic(g))
    if row["cubic"]:
        row["l_free"] = find_l_witness(g) is None
    if row["l_free"]:
        t0 = time.perf_counter()
        part = f_partition(g)
        t1 = time.perf_counter()
        cols = two_coupon_color(g, part)
        t2 = time.perf_counter()
        row.update(
            pieces=len(part.pieces),
            partition_valid=bool(validate_partition(g, part)),
            coupon_valid=verify_coupon(g, cols),
            partition_ms=round((t1 - t0) * 1000, 3),
            coloring_ms=round((t2 - t1) * 1000, 3),
        )
    return row


def _bench_job(item):
    return bench_row(*item)


def cmd_bench(args) -> int:
    try:
        if args.random:
            graphs = []
            for i in range(args.random):
                seed = None if args.seed is None else args.seed + i
                g = random_cubic(args.n_base, seed)
                graphs.append(truncate(g) if args.truncate else g)
        else:
            graphs = _load(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return certs.INPUT_ERROR
    items = list(enumerate(graphs))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_job, items))
    else:
        rows = [_bench_job(it) for it in items]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    if args.output == "json":
        for r in rows:
            print(json.dumps(r))
    else:
        widths = {f: max(len(f), *(len(str(r[f])) for r in rows)) for f in BENCH_FIELDS} if rows else {}
        print("  ".join(f.rjust(widths[f]) for f in BENCH_FIELDS))
        for r in rows:
            print("  ".join(str(r[f]).rjust(widths[f]) for f in BENCH_FIELDS))
    failed = [r for r in rows if r["l_free"] and not (r["partition_valid"] and r["coupon_valid"])]
    return certs.NEGATIVE if failed else certs.OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tdp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def io_flags(sp, output=True):
        sp.add_argument("--input", default="-", help="graph file, or - for stdin")
        sp.add_argument("--format", choices=["graph6", "edges"], default="graph6")
        if output:
            sp.add_argument("--output", choices=["json", "text"], default="json")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--budget", type=int, default=None, help="search node budget")

    sp = sub.add_parser("check", help="is the graph cubic and L-free?")
    io_flags(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("color", help="two total dominating sets, with certificate")
    io_flags(sp)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("exact", help="exact total domatic number")
    io_flags(sp)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("gen", help="print a named or random graph")
    sp.add_argument("name", help="k4, k33, petersen, heawood, prism, moebius_ladder, cycle, random")
    sp.add_argument("param", nargs="?", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--truncate", action="store_true")
    sp.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="re-check a certificate against its graph")
    io_flags(sp, output=False)
    sp.add_argument("--certificate", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="time the pipeline over a corpus")
    io_flags(sp)
    sp.add_argument("--random", type=int, default=0, help="number of random cubic graphs")
    sp.add_argument("--n-base", type=int, default=16)
    sp.add_argument("--truncate", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--csv", default=None, help="also write rows to this CSV file")
    sp.set_defaults(func=cmd_bench, output="text")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
