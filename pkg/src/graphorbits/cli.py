"""Command-line entry point: ``graphorbits INPUT [options]``.

Default output is ORCA-compatible: one line per vertex id, 73 induced
counts separated by spaces, no header.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
import time
from pathlib import Path

import numpy as np

from .counting import ccd, count_orbits, prepare
from .graph import EdgeListError, load_graph, write_binary_cache
from .orbit4 import EDGE_DUMP_HEADER, edge_dump_rows
from .transform import format_matrix, inverse_transform_matrix, transform_matrix

_CHUNK = 1 << 16


def _available_cores() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def write_atomic(path, write) -> None:
    """Write through a temporary file in the target directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            write(fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_table(fh, table: np.ndarray, labels: np.ndarray | None = None) -> None:
    if labels is not None:
        table = np.column_stack([labels.astype(np.uint64), table])
    for start in range(0, len(table), _CHUNK):
        rows = table[start : start + _CHUNK].tolist()
        fh.write("".join(" ".join(map(str, row)) + "\n" for row in rows))


def write_ccd(fh, points) -> None:
    fh.write("".join(f"{x}\t{frac!r}\n" for x, frac in points))


def _emit(path, write) -> None:
    if path is None:
        write(sys.stdout)
        sys.stdout.flush()
    else:
        write_atomic(path, write)


def _parse_orbits(text: str) -> list[int]:
    try:
        orbits = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated orbit list: {text!r}") from None
    if not orbits or any(not 0 <= o < 73 for o in orbits):
        raise argparse.ArgumentTypeError("orbit ids must lie in 0..72")
    return orbits


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="graphorbits",
        description="Exact per-vertex orbit counts for connected graphlets of up to 5 vertices.",
    )
    p.add_argument("input", nargs="?", help="edge-list text file or binary graph cache")
    p.add_argument("--mode", choices=("voc4", "voc5", "edge-orbits4"), default="voc5")
    p.add_argument("--counts", choices=("induced", "noninduced", "both"), default="induced")
    p.add_argument(
        "--out", nargs="+", metavar="PATH",
        help="output file; with --counts both a second path receives the non-induced table",
    )
    p.add_argument("--edge-orbits-out", metavar="PATH", help="also write the E0-E11 edge-orbit table")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: available cores)")
    p.add_argument("--ccd", type=_parse_orbits, metavar="ORBITS", help="comma-separated orbits to emit CCDs for")
    p.add_argument("--with-ids", action="store_true", help="prefix each row with its vertex id")
    p.add_argument("--compact", action="store_true", help="renumber vertices by first appearance")
    p.add_argument("--cache", metavar="PATH", help="also store the canonical graph as a binary cache")
    p.add_argument(
        "--dump-transform-matrix", action="store_true",
        help="print the 73x73 induced-to-non-induced matrix and its inverse, then exit",
    )
    p.add_argument("--timing", action="store_true", help="print a per-stage timing breakdown")
    return p


def _dump_matrices(args) -> int:
    A, Ainv = transform_matrix(), inverse_transform_matrix()
    if args.out and len(args.out) == 2:
        write_atomic(args.out[0], lambda fh: fh.write(format_matrix(A)))
        write_atomic(args.out[1], lambda fh: fh.write(format_matrix(Ainv)))
    else:
        text = "# A\n" + format_matrix(A) + "# A_inverse\n" + format_matrix(Ainv)
        _emit(args.out[0] if args.out else None, lambda fh: fh.write(text))
    return 0


def run(args) -> int:
    if args.dump_transform_matrix:
        return _dump_matrices(args)
    if args.input is None:
        print("graphorbits: an input file is required", file=sys.stderr)
        return 2
    if args.out and len(args.out) > 2:
        print("graphorbits: --out takes at most two paths", file=sys.stderr)
        return 2
    if args.counts == "both" and not args.out:
        print("graphorbits: --counts both needs --out", file=sys.stderr)
        return 2
    threads = args.threads or _available_cores()
    stages: dict[str, float] = {}

    t0 = time.perf_counter()
    g = load_graph(args.input, compact=args.compact)
    if args.cache:
        write_binary_cache(g, args.cache)
    stages["load"] = time.perf_counter() - t0
    labels = g.labels if args.with_ids else None

    if args.mode == "edge-orbits4":
        t = time.perf_counter()
        e4 = prepare(g, stages).e4
        stages["count"] = time.perf_counter() - t
        t = time.perf_counter()
        _emit(args.out[0] if args.out else None, lambda fh: _write_edges(fh, g, e4))
        stages["write"] = time.perf_counter() - t
        _report(args, g, stages)
        return 0

    size = 4 if args.mode == "voc4" else 5
    want_induced = args.counts in ("induced", "both")
    t = time.perf_counter()
    result = count_orbits(
        g, graphlet_size=size, induced=want_induced, n_threads=threads,
        keep_edge_orbits=args.edge_orbits_out is not None,
    )
    stages.update(result.timings)
    stages["count"] = time.perf_counter() - t

    t = time.perf_counter()
    outputs = []
    if args.counts == "induced":
        outputs.append((args.out[0] if args.out else None, result.induced))
    elif args.counts == "noninduced":
        outputs.append((args.out[0] if args.out else None, result.noninduced))
    else:
        second = args.out[1] if len(args.out) == 2 else _sibling(args.out[0], "noninduced")
        outputs += [(args.out[0], result.induced), (second, result.noninduced)]
    for path, table in outputs:
        _emit(path, lambda fh, table=table: write_table(fh, table, labels))
    if args.edge_orbits_out:
        _emit(args.edge_orbits_out, lambda fh: _write_edges(fh, g, result.edge_orbits))
    if args.ccd:
        table = result.induced if want_induced else result.noninduced
        for orbit in args.ccd:
            if orbit >= table.shape[1]:
                print(f"graphorbits: orbit {orbit} not computed in mode {args.mode}", file=sys.stderr)
                return 2
            points = ccd(table[:, orbit])
            if args.out:
                _emit(_sibling(args.out[0], f"ccd{orbit}.tsv"), lambda fh, pts=points: write_ccd(fh, pts))
            else:
                sys.stdout.write(f"# ccd orbit {orbit}\n")
                write_ccd(sys.stdout, points)
    stages["write"] = time.perf_counter() - t
    _report(args, g, stages)
    return 0


def _sibling(path, suffix: str) -> str:
    return f"{path}.{suffix}"


def _write_edges(fh, g, e4) -> None:
    fh.write(EDGE_DUMP_HEADER + "\n")
    write_table(fh, edge_dump_rows(g, e4))


def _report(args, g, stages) -> None:
    total = stages.get("load", 0.0) + stages.get("count", 0.0) + stages.get("write", 0.0)
    print(f"graphorbits: n={g.n} m={g.m} total {total:.3f}s", file=sys.stderr)
    if args.timing:
        for name, seconds in stages.items():
            print(f"  {name:<16}{seconds:10.3f}s", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except EdgeListError as exc:
        print(f"graphorbits: {args.input}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"graphorbits: {exc}", file=sys.stderr)
        return 1
    except (OverflowError, AssertionError) as exc:
        print(f"graphorbits: aborted: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
