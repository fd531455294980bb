"""Command-line interface: solve, generate, verify, bench.

Exit codes: 0 success (solve: optimality proven), 2 time limit reached, 1 error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .instance import CLASSES, GeneratorSpec, ParseError, generate, read_instance, write_instance
from .oracle import BRUTE_FORCE_LIMIT, DP_CELL_LIMIT, brute_force, textbook_dp
from .solver import FEATURES, SolveResult, SolverConfig, solve

EXIT_OK, EXIT_ERROR, EXIT_TIMEOUT = 0, 1, 2
BENCH_FIELDS = ["file", "n", "W", "optimum", "upper_bound", "gap", "proven", "elapsed_ms", "peak_states", "states"]
INSTANCE_SUFFIXES = {".txt", ".kp", ".in", ".dat", ""}


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("RECORD_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"RECORD_SEED must be an integer, got {env!r}")


def _config(args) -> SolverConfig:
    return SolverConfig(seed=_seed(args), time_limit=args.time_limit).disable(args.disable or [])


def _result_json(res: SolveResult) -> dict:
    return {
        "optimum": res.optimum,
        "proven": res.proven,
        "upper_bound": res.upper_bound,
        "solution": list(res.solution.multiplicities) if res.solution else None,
        "stats": res.stats,
        "elapsed_ms": round(res.elapsed * 1e3, 3),
    }


def _instance_files(path: Path) -> list[Path]:
    if path.is_dir():
        return sorted(p for p in path.iterdir() if p.is_file() and not p.name.startswith("."))
    return [path]


def cmd_solve(args) -> int:
    inst = read_instance(args.path, args.format)
    res = solve(inst, _config(args))
    if args.csv:
        row = _bench_row(args.path, inst, [res])
        w = csv.DictWriter(sys.stdout, BENCH_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerow(row)
    else:
        json.dump(_result_json(res), sys.stdout)
        sys.stdout.write("\n")
    return EXIT_OK if res.proven else EXIT_TIMEOUT


def cmd_generate(args) -> int:
    hs = range(1, args.H + 1) if args.batch else [args.h]
    out = Path(args.out) if args.out else None
    if args.batch and out is None:
        raise SystemExit("--batch needs --out DIRECTORY")
    if args.batch:
        out.mkdir(parents=True, exist_ok=True)
    for h in hs:
        spec = GeneratorSpec(args.cls, args.n, R=args.r, h=h, H=args.H, seed=_seed(args), bounded=args.bounded)
        text = write_instance(generate(spec), "canonical")
        if out is None:
            sys.stdout.write(text)
        elif args.batch:
            (out / f"{args.cls}_n{args.n}_R{args.r}_h{h:03d}.txt").write_text(text)
        else:
            out.write_text(text)
    return EXIT_OK


def _oracle(inst):
    space = 1
    for it in inst.items:
        space *= it.availability + 1
        if space > BRUTE_FORCE_LIMIT:
            break
    if space <= BRUTE_FORCE_LIMIT:
        return "brute_force", brute_force(inst)
    pieces = sum(it.availability.bit_length() for it in inst.items)
    if pieces * (inst.capacity + 1) <= DP_CELL_LIMIT:
        return "textbook_dp", textbook_dp(inst)
    return None, None


def cmd_verify(args) -> int:
    cfg = _config(args)
    passed = failed = skipped = 0
    for f in _instance_files(Path(args.path)):
        try:
            inst = read_instance(f, args.format)
        except ParseError as e:
            print(f"FAIL {f}: {e}")
            failed += 1
            continue
        res = solve(inst, cfg)
        name, ref = _oracle(inst)
        problems = []
        sol = res.solution
        if sol is None or sol.weight > inst.capacity or sol.value != res.optimum:
            problems.append("recovered solution infeasible or inconsistent")
        if sol is not None and any(x > it.availability for x, it in zip(sol.multiplicities, inst.items)):
            problems.append("availability exceeded")
        if not res.proven:
            problems.append("optimality not proven")
        if ref is None:
            print(f"SKIP {f}: beyond oracle limits (solver optimum {res.optimum})")
            skipped += 1
            if problems:
                failed += 1
            continue
        if ref.optimum != res.optimum:
            problems.append(f"optimum {res.optimum} != {name} {ref.optimum}")
        if problems:
            print(f"FAIL {f}: " + "; ".join(problems))
            failed += 1
        else:
            print(f"PASS {f}: {res.optimum} ({name})")
            passed += 1
    print(f"{passed} pass / {failed} fail" + (f" / {skipped} skipped" if skipped else ""))
    return EXIT_ERROR if failed else EXIT_OK


def _bench_row(path, inst, results: list[SolveResult]) -> dict:
    first = results[0]
    return {
        "file": Path(path).name,
        "n": inst.n,
        "W": inst.capacity,
        "optimum": first.optimum,
        "upper_bound": first.upper_bound,
        "gap": first.gap,
        "proven": str(first.proven).lower(),
        "elapsed_ms": f"{statistics.median(r.elapsed for r in results) * 1e3:.3f}",
        "peak_states": first.stats.get("peak_states", 0),
        "states": first.stats.get("states", 0),
    }


def _bench_one(job) -> dict:
    path, fmt, cfg, repeats = job
    inst = read_instance(path, fmt)
    return _bench_row(path, inst, [solve(inst, cfg) for _ in range(repeats)])


def cmd_bench(args) -> int:
    cfg = _config(args)
    files = _instance_files(Path(args.path))
    jobs = [(f, args.format, cfg, max(1, args.repeats)) for f in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    if args.json:
        json.dump(rows, sys.stdout)
        sys.stdout.write("\n")
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, BENCH_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="recordkp", description="Exact knapsack / bounded knapsack solver.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, solver_flags=True):
        p.add_argument("--seed", type=int, default=None, help="solver seed (default: $RECORD_SEED or 0)")
        if solver_flags:
            p.add_argument("--format", choices=["canonical", "jooken"], default=None,
                           help="instance format (default: detect)")
            p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
            p.add_argument("--disable", action="append", choices=sorted(FEATURES), metavar="FEATURE",
                           help="turn a feature off (repeatable): " + ", ".join(FEATURES))
            out = p.add_mutually_exclusive_group()
            out.add_argument("--json", action="store_true")
            out.add_argument("--csv", action="store_true")

    p = sub.add_parser("solve", help="solve one instance, JSON on stdout")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write generated instances in canonical format")
    p.add_argument("--class", dest="cls", required=True, choices=sorted(CLASSES), metavar="CLASS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1000)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--H", type=int, default=100)
    p.add_argument("--bounded", action="store_true")
    p.add_argument("--batch", action="store_true", help="write h = 1..H into the --out directory")
    p.add_argument("--out", default=None)
    common(p, solver_flags=False)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="solve and compare with an oracle")
    p.add_argument("path", help="instance file or directory")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="solve every instance in a directory, CSV on stdout")
    p.add_argument("path")
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    try:
        return args.func(args)
    except (OSError, ParseError, ValueError) as e:
        print(f"recordkp: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except SystemExit as e:
        if isinstance(e.code, str):
            print(f"recordkp: error: {e.code}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
