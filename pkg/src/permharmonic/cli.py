"""Command-line surface: transform, shift, verify, oracle, bench.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input
problems (unparseable vectors, invalid permutations, oracle cap exceeded).

Determinism contract: randomized commands draw from numpy's default_rng
(PCG64) with the given --seed, and their JSON output carries no timing
fields, so identical invocations produce byte-identical JSON.  Wall-clock
numbers appear only in text output and in bench results.

Numbers print with 17 significant digits in JSON and CSV (round-trip safe
doubles) and 15 in human-readable text.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time

import numpy as np

from .oracle import derive_schur_constants, verify_bandlimit
from .permutations import OracleCapExceeded, from_one_line, oracle_cap
from .transform import (
    build_plan,
    dense_transform,
    inverse_transform,
    spectral_shift,
    transform,
    transform_counted,
)
from .verify import SuiteReport, run_suite


class CliError(Exception):
    """Bad input or arguments; maps to exit code 2."""


def _float_str(value: float, digits: int) -> str:
    return format(float(value), f".{digits}g")


def _to_json(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _float_str(obj, 17)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {_to_json(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _read_vector(source: str) -> np.ndarray:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise CliError(f"cannot read {source}: {exc}") from exc
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise CliError(f"no numbers found in {source}")
    try:
        values = [float(t) for t in tokens]
    except ValueError as exc:
        raise CliError(f"cannot parse {source}: {exc}") from exc
    if len(values) < 2:
        raise CliError(f"need a vector of length >= 2, got {len(values)}")
    return np.array(values)


def _print_vector(vec: np.ndarray, fmt: str) -> None:
    if fmt == "csv":
        print(",".join(_float_str(v, 17) for v in vec))
    else:
        for v in vec:
            print(_float_str(v, 15))


def _cmd_transform(args: argparse.Namespace) -> int:
    if args.counted and args.inverse:
        raise CliError("--counted applies to the forward transform only")
    x = _read_vector(args.input)
    plan = build_plan(x.shape[0])
    mult = add = None
    if args.counted:
        out, mult, add = transform_counted(x, plan)
    elif args.inverse:
        out = inverse_transform(x, plan)
    else:
        out = transform(x, plan)

    if args.format == "json":
        payload = {
            "command": "transform",
            "n": plan.n,
            "inverse": bool(args.inverse),
            "output": list(out),
        }
        if args.counted:
            payload["mult"] = mult
            payload["add"] = add
        print(_to_json(payload))
    else:
        _print_vector(out, args.format)
        if args.counted:
            print(_to_json({"n": plan.n, "mult": mult, "add": add}))
    return 0


_CHECK_TOL = 1e-10


def _cmd_shift(args: argparse.Namespace) -> int:
    try:
        sigma = from_one_line(args.perm)
    except ValueError as exc:
        raise CliError(f"invalid permutation {args.perm!r}: {exc}") from exc
    x = _read_vector(args.input)
    if sigma.n != x.shape[0]:
        raise CliError(f"permutation degree {sigma.n} does not match vector length {x.shape[0]}")
    plan = build_plan(x.shape[0])
    shifted = spectral_shift(sigma, transform(x, plan), plan)

    deviation = None
    if args.check:
        direct = transform(sigma.apply_to_vector(x), plan)
        deviation = float(np.max(np.abs(shifted - direct)))

    if args.format == "json":
        payload = {
            "command": "shift",
            "n": plan.n,
            "perm": list(sigma.images),
            "output": list(shifted),
        }
        if args.check:
            payload["check_deviation"] = deviation
            payload["check_passed"] = deviation <= _CHECK_TOL
        print(_to_json(payload))
    else:
        _print_vector(shifted, args.format)
        if args.check:
            status = "PASS" if deviation <= _CHECK_TOL else "FAIL"
            print(f"check_deviation = {_float_str(deviation, 15)} [{status}]")
    if args.check and deviation > _CHECK_TOL:
        return 1
    return 0


def _apply_tol(reports: list[SuiteReport], tol: float | None) -> list[SuiteReport]:
    if tol is None:
        return reports
    from .verify import Check

    return [
        SuiteReport(
            suite=r.suite,
            n=r.n,
            seed=r.seed,
            checks=tuple(Check(c.name, c.deviation, tol) for c in r.checks),
        )
        for r in reports
    ]


def _cmd_verify(args: argparse.Namespace) -> int:
    n = args.n
    suite = args.suite
    if n < 2:
        raise CliError(f"verification needs n >= 2, got {n}")
    if suite == "coxeter" and n > 64:
        raise CliError(f"coxeter suite supports n <= 64, got {n}")
    if suite in ("prop1", "schur", "all") and n > oracle_cap():
        raise CliError(f"suite {suite!r} runs the full-group oracle; n <= {oracle_cap()} required")
    if suite in ("schur", "all") and n < 3:
        raise CliError(f"suite {suite!r} needs n >= 3, got {n}")

    started = time.perf_counter_ns()
    reports = _apply_tol(run_suite(suite, n, args.seed), args.tol)
    elapsed = time.perf_counter_ns() - started
    passed = all(r.passed for r in reports)

    if args.format == "json":
        payload = {
            "command": "verify",
            "suite": suite,
            "n": n,
            "seed": args.seed,
            "suites": [
                {
                    "suite": r.suite,
                    "checks": [
                        {
                            "name": c.name,
                            "deviation": c.deviation,
                            "tolerance": c.tolerance,
                            "passed": c.passed,
                        }
                        for c in r.checks
                    ],
                    "passed": r.passed,
                }
                for r in reports
            ],
            "passed": passed,
        }
        print(_to_json(payload))
    else:
        for r in reports:
            print(f"suite {r.suite} (n={r.n}):")
            for c in r.checks:
                status = "PASS" if c.passed else "FAIL"
                print(
                    f"  {status} {c.name}: deviation {_float_str(c.deviation, 15)}"
                    f" tolerance {_float_str(c.tolerance, 15)}"
                )
        print(f"overall: {'PASS' if passed else 'FAIL'} (elapsed_ns={elapsed})")
    return 0 if passed else 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.input is not None:
        f = _read_vector(args.input)
        n = f.shape[0]
        source: dict = {"input": args.input}
    else:
        n = args.n
        if n is None:
            raise CliError("oracle needs --n (with --seed) or --input")
        rng = np.random.default_rng(args.seed)
        f = rng.uniform(-1.0, 1.0, n)
        source = {"seed": args.seed}
    if n < 3:
        raise CliError(f"oracle report needs n >= 3, got {n}")
    if n > oracle_cap():
        raise OracleCapExceeded(f"n={n} exceeds the oracle cap {oracle_cap()}")

    band = verify_bandlimit(f)
    schur = derive_schur_constants(n)
    lam1_exact = math.factorial(n - 1) * math.sqrt(n)

    violations: list[str] = []
    if band.off_band_max > band.bound:
        violations.append(
            f"off-band coefficient {band.off_band_max!r} exceeds bound {band.bound!r}"
        )
    if band.tail_max > band.bound:
        violations.append(
            f"standard-block tail {band.tail_max!r} exceeds bound {band.bound!r}"
        )
    if schur.off_structure_max > 1e-9:
        violations.append(f"linking matrix off-structure deviation {schur.off_structure_max!r}")
    if abs(schur.lambda1 - lam1_exact) / lam1_exact > 1e-9:
        violations.append(f"lambda1 {schur.lambda1!r} deviates from {lam1_exact!r}")
    if schur.block_split != (1, n - 1):
        violations.append(f"block split {schur.block_split} is not (1, {n - 1})")

    payload = {
        "command": "oracle",
        "n": n,
        **source,
        "partitions": {",".join(map(str, shape)): norm for shape, norm in band.block_norms.items()},
        "bound": band.bound,
        "off_band_max": band.off_band_max,
        "standard_tail_max": band.tail_max,
        "lambda1": schur.lambda1,
        "lambda2": schur.lambda2,
        "block_split": list(schur.block_split),
        "violations": violations,
    }
    if args.format == "json":
        print(_to_json(payload))
    else:
        for shape, norm in payload["partitions"].items():
            print(f"|F({shape})|_max = {_float_str(norm, 15)}")
        print(f"bound = {_float_str(band.bound, 15)}")
        print(f"lambda1 = {_float_str(schur.lambda1, 15)}")
        print(f"lambda2 = {_float_str(schur.lambda2, 15)}")
        print(f"block_split = {schur.block_split}")
        for v in violations:
            print(f"VIOLATION: {v}")
        print("overall: " + ("PASS" if not violations else "FAIL"))
    return 0 if not violations else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(t) for t in args.n_list.split(",") if t]
    except ValueError as exc:
        raise CliError(f"cannot parse --n-list: {exc}") from exc
    if not sizes or any(n < 2 for n in sizes):
        raise CliError("--n-list needs integers >= 2")
    if args.reps < 1:
        raise CliError("--reps must be >= 1")

    rng = np.random.default_rng(0)
    rows = []
    for n in sizes:
        plan = build_plan(n)
        dense = dense_transform(plan)
        x = rng.uniform(-1.0, 1.0, n)
        fast_ns = min(_time_ns(lambda: transform(x, plan)) for _ in range(args.reps))
        dense_ns = min(_time_ns(lambda: dense @ x) for _ in range(args.reps))
        rows.append(
            {
                "n": n,
                "fast_ns": fast_ns,
                "dense_ns": dense_ns,
                "mult": 2 * n - 2,
                "add": 2 * n - 2,
                "ops_total": 2 * (2 * n - 2),
                "bound_cubic": n**3 - n**2,
                "bound_quadratic": 3 * n * (n - 1) // 2,
            }
        )
    crossover = next((r["n"] for r in rows if r["fast_ns"] < r["dense_ns"]), None)

    if args.format == "json":
        print(_to_json({"command": "bench", "reps": args.reps, "rows": rows, "crossover_n": crossover}))
    elif args.format == "csv":
        cols = list(rows[0])
        print(",".join(cols))
        for r in rows:
            print(",".join(str(r[c]) for c in cols))
    else:
        cols = list(rows[0])
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
        print("  ".join(c.rjust(widths[c]) for c in cols))
        for r in rows:
            print("  ".join(str(r[c]).rjust(widths[c]) for c in cols))
        if crossover is None:
            print("crossover: none observed (dense multiply never slower on this list)")
        else:
            print(f"crossover: fast path beats dense multiply from n={crossover}")
    return 0


def _time_ns(fn) -> int:
    start = time.perf_counter_ns()
    fn()
    return time.perf_counter_ns() - start


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permharmonic",
        description="Linear-time orthogonal spectral transform for permuted vectors, "
        "with verification suites and a small-n full-group oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply the forward or inverse transform to a vector")
    p.add_argument("input", nargs="?", default="-", help="vector file, or - for stdin (default)")
    p.add_argument("--inverse", action="store_true", help="apply the inverse transform")
    p.add_argument("--counted", action="store_true", help="report exact multiply/add counts")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("shift", help="shift a vector's spectrum by a permutation")
    p.add_argument("input", nargs="?", default="-", help="vector file, or - for stdin (default)")
    p.add_argument("--perm", required=True, help='one-line images, 1-based, e.g. "2 1 3"')
    p.add_argument(
        "--check",
        action="store_true",
        help="also transform the permuted vector directly and report the deviation",
    )
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(handler=_cmd_shift)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=("coxeter", "orthogonality", "theorem", "prop1", "schur", "all"),
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--tol",
        type=float,
        default=None,
        help="override every check tolerance (diagnostic; negative forces failure)",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("oracle", help="full-group coefficient report for a lifted vector")
    p.add_argument("--n", type=int, default=None, help="vector length for the seeded random input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", default=None, help="read the vector from a file instead")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("bench", help="time the O(n) path against a dense multiply")
    p.add_argument("--n-list", default="8,16,32,64,128,256,512,1024")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(args)
    except (CliError, OracleCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
