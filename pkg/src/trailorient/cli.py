"""Command-line front end: orient, verify, bench, and gen subcommands.

Exit codes follow one contract everywhere: 0 success (or feasible), 1 a
valid negative answer (infeasible instance, failed verification), 2 bad
input or usage, 3 an internal self-check failure.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time

from . import fileio, oracle
from .linear import orient_linear
from .mixed import orient_mixed
from .naive import orient_trails

__all__ = ["main"]


def _fail(code: int, message: str) -> int:
    print(f"trailorient: {message}", file=sys.stderr)
    return code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _apply_thread_cap() -> None:
    """Honor TRAIL_ORIENT_THREADS as an upper bound on helper parallelism.

    The solvers are single-threaded; this only caps the compiled kernels'
    runtime, where the setting exists."""
    raw = os.environ.get("TRAIL_ORIENT_THREADS")
    if not raw:
        return
    try:
        cap = max(1, int(raw))
    except ValueError:
        return
    try:
        import numba

        numba.set_num_threads(min(cap, numba.get_num_threads()))
    except Exception:
        pass


def _load_instance(path: str) -> fileio.Instance | int:
    try:
        return fileio.parse_instance(_read_text(path))
    except OSError as exc:
        return _fail(2, f"cannot read {path}: {exc}")
    except fileio.FormatError as exc:
        return _fail(2, f"{path}: {exc}")


def cmd_orient(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    if isinstance(inst, int):
        return inst
    g, p = inst.graph, inst.trails

    if g.is_mixed() and args.algo != "mixed":
        return _fail(2, "instance has pre-directed edges; requires --algo mixed")
    try:
        if args.algo == "naive":
            o = orient_trails(g, p)
        elif args.algo == "linear":
            o = orient_linear(g, p, engine=args.engine)
        else:
            o = orient_mixed(g, p)
    except (AssertionError, RuntimeError) as exc:
        return _fail(3, f"internal solver failure: {exc}")

    if args.cap_trails is not None and len(p.trails) <= args.cap_trails:
        expect = oracle.brute_force_feasible(g, p, cap=args.cap_trails)
        if (expect is not None) != (o is not None):
            return _fail(3, "oracle cross-check disagrees with the solver")

    if o is None:
        _write_text(args.output, fileio.emit_orientation(g, None))
        return 1
    verdict = oracle.verify(g, p, o)
    if not verdict:
        return _fail(3, f"self-check failed: {verdict.reason}")
    _write_text(args.output, fileio.emit_orientation(g, o))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    if isinstance(inst, int):
        return inst
    g, p = inst.graph, inst.trails
    try:
        o = fileio.parse_orientation(_read_text(args.orientation), g)
    except OSError as exc:
        return _fail(2, f"cannot read {args.orientation}: {exc}")
    except fileio.FormatError as exc:
        return _fail(2, f"{args.orientation}: {exc}")
    if o is None:
        return _fail(2, "orientation file says INFEASIBLE; nothing to verify")
    verdict = oracle.verify(g, p, o)
    if verdict:
        print("OK")
        return 0
    print(verdict.reason)
    return 1


def _bench_row(n: int, m: int, seconds: float, stats: dict) -> str:
    depth = stats.get("depth", 0)
    levels = stats.get("levels", {})
    fracs = []
    for lvl in sorted(levels):
        entry = levels[lvl]
        v = entry["vertices"]
        fracs.append(f"{(entry['large_mass'] / v if v else 0.0):.4f}")
    return f"{n}\t{m}\t{seconds:.4f}\t{depth}\t{','.join(fracs) or '-'}"


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    except ValueError:
        return _fail(2, f"bad --sizes list: {args.sizes!r}")
    if not sizes or any(b <= a for a, b in zip(sizes, sizes[1:])):
        return _fail(2, "--sizes must be strictly ascending")

    print("# n\tm\tseconds\tdepth\tlarge_component_vertex_fraction_per_level")
    if args.algo == "linear":
        from . import fastpath

        fastpath.warmup()  # compile outside the timed region
        for i, n in enumerate(sizes):
            eu, ev = fastpath.random_cubic_arrays(n, args.seed + i)
            tprev, tnext, enter = fastpath.random_trails_arrays(n, eu, ev, args.seed + i)
            stats: dict = {}
            t0 = time.perf_counter()
            dirs = fastpath.solve_cubic_arrays(n, eu, ev, tprev, tnext, enter, stats)
            dt = time.perf_counter() - t0
            if dirs is None or not fastpath.check_arrays(
                n, eu, ev, tprev, tnext, enter, dirs
            ):
                return _fail(3, f"benchmark solve failed its check at n={n}")
            print(_bench_row(n, eu.shape[0], dt, stats))
        return 0

    for i, n in enumerate(sizes):
        g = oracle.random_cubic(n, args.seed + i)
        rng = random.Random(9_999_991 * (args.seed + i) + 3)
        p = oracle.random_trail_partition(g, rng)
        stats = {}
        t0 = time.perf_counter()
        if args.algo == "naive":
            o = orient_trails(g, p)
        else:
            o = orient_mixed(g, p)
        dt = time.perf_counter() - t0
        if o is None or not oracle.verify(g, p, o):
            return _fail(3, f"benchmark solve failed its check at n={n}")
        print(_bench_row(g.n, g.num_live_edges, dt, stats))
    return 0


def _arrays_to_instance_text(n, eu, ev, tprev, tnext) -> str:
    lines = [f"{n} {eu.shape[0]}"]
    for e in range(eu.shape[0]):
        lines.append(f"{eu[e]} {ev[e]}")
    trails = []
    for e in range(eu.shape[0]):
        if tprev[e] != -1:
            continue
        seq = []
        cur = e
        while cur != -1:
            seq.append(cur)
            cur = int(tnext[cur])
        trails.append(seq)
    lines.append(str(len(trails)))
    for seq in trails:
        lines.append(" ".join([str(len(seq))] + [str(x) for x in seq]))
    return "\n".join(lines) + "\n"


def cmd_gen(args: argparse.Namespace) -> int:
    chosen = sum(1 for flag in (args.cubic, args.fig1, args.path is not None) if flag)
    if chosen != 1:
        return _fail(2, "pick exactly one of --cubic, --fig1, --path K")

    if args.fig1:
        g, p = oracle.fig_gadget()
        text = fileio.emit_instance(fileio.Instance(g, p))
    elif args.path is not None:
        if args.path < 1:
            return _fail(2, "--path needs a positive edge count")
        g, p = oracle.path_instance(args.path)
        text = fileio.emit_instance(fileio.Instance(g, p))
    else:
        if args.n is None or args.n < 4 or args.n % 2:
            return _fail(2, "--cubic needs -n EVEN_N with N >= 4")
        from . import fastpath

        try:
            eu, ev = fastpath.random_cubic_arrays(args.n, args.seed)
        except RuntimeError as exc:
            return _fail(2, str(exc))
        tprev, tnext, enter = fastpath.random_trails_arrays(args.n, eu, ev, args.seed)
        text = _arrays_to_instance_text(args.n, eu, ev, tprev, tnext)

    _write_text(args.output, text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="trailorient",
        description="Strong trail orientations of undirected and mixed multigraphs.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_orient = sub.add_parser("orient", help="orient an instance file")
    p_orient.add_argument("instance", help="instance file path, or - for stdin")
    p_orient.add_argument(
        "--algo", choices=("naive", "linear", "mixed"), default="linear"
    )
    p_orient.add_argument(
        "--engine",
        choices=("auto", "object", "array"),
        default="auto",
        help="implementation used by --algo linear",
    )
    p_orient.add_argument(
        "--cap-trails",
        type=int,
        metavar="N",
        help="also cross-check against the exhaustive oracle when the "
        "instance has at most N trails",
    )
    p_orient.add_argument("-o", "--output", metavar="FILE", help="default stdout")
    p_orient.set_defaults(func=cmd_orient)

    p_verify = sub.add_parser("verify", help="check an orientation file")
    p_verify.add_argument("instance")
    p_verify.add_argument("orientation")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="timing and recursion-shape report")
    p_bench.add_argument(
        "--sizes", required=True, help="comma-separated ascending vertex counts"
    )
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument(
        "--algo", choices=("naive", "linear", "mixed"), default="linear"
    )
    p_bench.set_defaults(func=cmd_bench)

    p_gen = sub.add_parser("gen", help="write a certified instance file")
    p_gen.add_argument("--cubic", action="store_true", help="random cubic instance")
    p_gen.add_argument("-n", type=int, metavar="N", help="vertex count for --cubic")
    p_gen.add_argument("--seed", type=int, default=1)
    p_gen.add_argument(
        "--fig1", action="store_true", help="the canonical infeasible mixed gadget"
    )
    p_gen.add_argument(
        "--path", type=int, metavar="K", help="path of K edges as a single trail"
    )
    p_gen.add_argument("-o", "--output", metavar="FILE", help="default stdout")
    p_gen.set_defaults(func=cmd_gen)
    return ap


def main(argv: list[str] | None = None) -> int:
    _apply_thread_cap()
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
