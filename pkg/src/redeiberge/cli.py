"""Command-line front end.

Instances come from digraph files or generator specs
("complete:4", "path:3", "random:5:0.3:7", "tournament:6:1", ...).
Exit status: 0 success, 1 at least one failed check, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .checks import ALL_CHECKS, check_identities
from .digraph import (
    Digraph,
    complete_digraph,
    cycle_digraph,
    discrete_digraph,
    parse_digraph,
    path_digraph,
    random_digraph,
    random_tournament,
)
from .errors import SizeLimitError
from .invariant import redei_berge

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2

ALGORITHM_CAPACITY = {
    "definition": 6,
    "permutations": 8,
    "deletion-contraction": 7,
}

GENERATOR_KINDS = ("complete", "discrete", "path", "cycle", "random", "tournament")


@dataclass
class RunConfig:
    command: str
    input: str
    basis: str = "p"
    commutative: bool = False
    algorithm: str = "auto"
    checks: tuple[str, ...] = ALL_CHECKS
    seed: int = 0
    output: str = "text"
    count: int = 10


class UsageError(Exception):
    pass


def parse_generator_spec(spec: str, default_seed: int = 0) -> Digraph:
    """Build a digraph from "kind:args" (see GENERATOR_KINDS)."""
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind in ("complete", "discrete", "path", "cycle"):
            if len(parts) != 2:
                raise UsageError(f"generator {kind!r} takes one argument: {kind}:n")
            n = int(parts[1])
            return {
                "complete": complete_digraph,
                "discrete": discrete_digraph,
                "path": path_digraph,
                "cycle": cycle_digraph,
            }[kind](n)
        if kind == "random":
            if len(parts) not in (3, 4):
                raise UsageError("generator 'random' takes random:n:p[:seed]")
            n, p = int(parts[1]), float(parts[2])
            seed = int(parts[3]) if len(parts) == 4 else default_seed
            return random_digraph(n, p, seed)
        if kind == "tournament":
            if len(parts) not in (2, 3):
                raise UsageError("generator 'tournament' takes tournament:n[:seed]")
            n = int(parts[1])
            seed = int(parts[2]) if len(parts) == 3 else default_seed
            return random_tournament(n, seed)
    except ValueError as exc:
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from None
    raise UsageError(f"unknown generator kind {kind!r}; expected one of {GENERATOR_KINDS}")


def load_instance(source: str, default_seed: int = 0) -> tuple[Digraph, str]:
    """Return (digraph, display name) from a generator spec or a file path."""
    head = source.split(":", 1)[0]
    if head in GENERATOR_KINDS:
        return parse_generator_spec(source, default_seed), source
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source!r}: {exc}") from None
    try:
        return parse_digraph(text), source
    except ValueError as exc:
        raise UsageError(f"{source}: {exc}") from None


def _select_algorithm(config_algorithm: str, n: int) -> str:
    if config_algorithm == "auto":
        usable = [a for a, cap in ALGORITHM_CAPACITY.items() if n <= cap]
        if not usable:
            raise UsageError(f"no algorithm can handle n={n} (largest capacity is 8)")
        return max(usable, key=lambda a: ALGORITHM_CAPACITY[a])
    cap = ALGORITHM_CAPACITY[config_algorithm]
    if n > cap:
        raise UsageError(f"algorithm {config_algorithm!r} refuses n={n} (capacity {cap})")
    return config_algorithm


def _format_coeff(c) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def run_compute(config: RunConfig) -> int:
    dg, name = load_instance(config.input, config.seed)
    algorithm = _select_algorithm(config.algorithm, dg.n)
    element = redei_berge(dg, algorithm).to_basis(config.basis.upper())
    if config.commutative:
        result = element.commutative_image()
        lines = [f"{result.basis}{lam}  {_format_coeff(result.terms[lam])}" for lam in sorted(result.terms, reverse=True)]
    else:
        result = element
        lines = [
            f"{result.basis.lower()}[{pi}]  {_format_coeff(result.terms[pi])}"
            for pi in sorted(result.terms)
        ]
    if config.output == "json":
        payload = {
            "instance": name,
            "command": "compute",
            "algorithm": algorithm,
            "element": result.to_json_dict(),
        }
        print(json.dumps(payload))
    else:
        print(f"instance: {name} ({dg.describe()})")
        print(f"algorithm: {algorithm}")
        for line in lines:
            print(line)
        if not lines:
            print("0")
    return EXIT_OK


def run_verify(config: RunConfig) -> int:
    dg, name = load_instance(config.input, config.seed)
    reports = check_identities(dg, config.checks, instance=name)
    failed = any(r.status == "fail" for r in reports)
    if config.output == "json":
        payload = {
            "instance": name,
            "command": "verify",
            "results": [
                {"check": r.check, "status": r.status}
                | ({"witness": r.witness} if r.witness else {})
                for r in reports
            ],
        }
        print(json.dumps(payload))
    else:
        print(f"instance: {name} ({dg.describe()})")
        for r in reports:
            tail = f"  ({r.witness})" if r.witness else ""
            print(f"{r.check}: {r.status}{tail}")
    return EXIT_CHECK_FAILURE if failed else EXIT_OK


def run_bench(config: RunConfig) -> int:
    dg, name = load_instance(config.input, config.seed)
    rows = []
    for algorithm, cap in ALGORITHM_CAPACITY.items():
        if dg.n > cap:
            continue
        start = time.perf_counter()
        element = redei_berge(dg, algorithm)
        elapsed = time.perf_counter() - start
        rows.append((algorithm, elapsed, len(element.terms), element.basis))
    if config.output == "json":
        payload = {
            "instance": name,
            "command": "bench",
            "results": [
                {"algorithm": a, "seconds": round(t, 6), "terms": k, "basis": b}
                for a, t, k, b in rows
            ],
        }
        print(json.dumps(payload))
    else:
        print(f"instance: {name} ({dg.describe()})")
        print(f"{'algorithm':<22}{'seconds':>10}  {'terms':>5}  basis")
        for a, t, k, b in rows:
            print(f"{a:<22}{t:>10.4f}  {k:>5}  {b}")
    return EXIT_OK


def run_batch(config: RunConfig) -> int:
    head = config.input.split(":", 1)[0]
    if head not in GENERATOR_KINDS:
        raise UsageError("batch requires a generator spec family, e.g. random:5:0.3")
    summaries = []
    any_failed = False
    for i in range(config.count):
        seed = config.seed + i
        dg = parse_generator_spec(config.input, seed)
        name = f"{config.input}#seed={seed}"
        reports = check_identities(dg, config.checks, instance=name)
        counts = {
            "pass": sum(r.status == "pass" for r in reports),
            "fail": sum(r.status == "fail" for r in reports),
            "skipped": sum(r.status == "skipped" for r in reports),
        }
        failures = [
            {"check": r.check, "witness": r.witness} for r in reports if r.status == "fail"
        ]
        any_failed = any_failed or bool(failures)
        summaries.append((name, counts, failures))
    if config.output == "json":
        payload = {
            "command": "batch",
            "family": config.input,
            "count": config.count,
            "results": [
                {"instance": n, **c} | ({"failures": f} if f else {}) for n, c, f in summaries
            ],
        }
        print(json.dumps(payload))
    else:
        print(f"family: {config.input}  count: {config.count}  base seed: {config.seed}")
        for name, counts, failures in summaries:
            print(f"{name}: {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
            for f in failures:
                print(f"  FAIL {f['check']}: {f['witness']}")
        total_fail = sum(c["fail"] for _, c, _ in summaries)
        print(f"total failures: {total_fail}")
    return EXIT_CHECK_FAILURE if any_failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redeiberge",
        description="Compute and verify the Redei-Berge function of labeled digraphs "
        "in noncommuting variables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_checks=False):
        p.add_argument("input", help="digraph file or generator spec (e.g. cycle:3)")
        p.add_argument("--seed", type=int, default=0, help="seed for random generators")
        p.add_argument("--format", choices=("text", "json"), default="text", dest="output")
        if with_checks:
            p.add_argument(
                "--checks",
                default="all",
                help="comma-separated check names, or 'all' (default)",
            )

    p_compute = sub.add_parser("compute", help="print the expansion of one instance")
    add_common(p_compute)
    p_compute.add_argument("--basis", choices=("m", "p", "e"), default="p")
    p_compute.add_argument("--commutative", action="store_true", help="let the variables commute")
    p_compute.add_argument(
        "--algorithm",
        choices=("auto",) + tuple(ALGORITHM_CAPACITY),
        default="auto",
    )

    p_verify = sub.add_parser("verify", help="run identity checks on one instance")
    add_common(p_verify, with_checks=True)

    p_bench = sub.add_parser("bench", help="time each applicable algorithm")
    add_common(p_bench)

    p_batch = sub.add_parser("batch", help="verify a seeded random family")
    add_common(p_batch, with_checks=True)
    p_batch.add_argument("--count", type=int, default=10, help="number of instances")

    return parser


def _parse_checks(raw: str) -> tuple[str, ...]:
    if raw == "all":
        return ALL_CHECKS
    names = tuple(name.strip() for name in raw.split(",") if name.strip())
    unknown = [n for n in names if n not in ALL_CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; available: {list(ALL_CHECKS)}")
    return names


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    config = RunConfig(
        command=args.command,
        input=args.input,
        basis=getattr(args, "basis", "p"),
        commutative=getattr(args, "commutative", False),
        algorithm=getattr(args, "algorithm", "auto"),
        seed=args.seed,
        output=args.output,
        count=getattr(args, "count", 10),
    )
    try:
        if hasattr(args, "checks"):
            config.checks = _parse_checks(args.checks)
        runner = {
            "compute": run_compute,
            "verify": run_verify,
            "bench": run_bench,
            "batch": run_batch,
        }[config.command]
        return runner(config)
    except (UsageError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
