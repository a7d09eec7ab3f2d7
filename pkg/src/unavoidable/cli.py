"""Command-line front end.

Exit codes: 0 success (BelowThreshold included), 1 certificate rejected,
2 parse error or bad parameters, 3 input not strong, 4 internal invariant
violated.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from . import certificates as certs
from .digraph import is_strong
from .edgelist import ParseError, format_edgelist, read_edgelist, to_dot
from .extract import ProofInvariantViolation, unavoidable, unavoidable_threshold
from .generators import Family, GeneratorSpec, gen_random_strong

log = logging.getLogger("unavoidable")

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_NOT_STRONG = 3
EXIT_INVARIANT = 4

MAX_PROBE_SIZE = 200
MAX_PROBE_SAMPLES = 100_000
KINDS = ("long_dicycle", "semi_chain", "short_system", "below_threshold")


@dataclass
class RunReport:
    vertices: int
    edges: int
    strong: bool
    n: int
    k: int
    n_impl: int
    kind: str | None = None
    wall_ms: float | None = None
    verified: bool | None = None
    reason: str | None = None


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_extract(args: argparse.Namespace) -> int:
    if args.n < 2 or args.k < 1:
        log.error("need --n >= 2 and --k >= 1")
        return EXIT_USAGE
    try:
        D = read_edgelist(args.input)
    except ParseError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    report = RunReport(
        len(D), len(D.edges), is_strong(D), args.n, args.k, unavoidable_threshold(args.n, args.k)
    )
    if not report.strong:
        log.error("input digraph is not strongly connected")
        _write_report(report, args.report)
        return EXIT_NOT_STRONG
    start = time.perf_counter()
    try:
        cert = unavoidable(D, args.n, args.k)
    except ProofInvariantViolation as exc:
        log.error("invariant violated: %s", exc)
        return EXIT_INVARIANT
    report.wall_ms = round((time.perf_counter() - start) * 1000, 3)
    report.kind = certs.kind(cert)
    verdict = certs.verify_certificate(D, cert, args.n, args.k)
    report.verified = verdict.ok
    report.reason = None if verdict.ok else str(verdict)
    _write_report(report, args.report)
    if not verdict.ok:
        log.error("extracted certificate failed verification: %s", verdict)
        return EXIT_INVARIANT
    _emit(certs.dumps(cert, args.n, args.k), args.out)
    return EXIT_OK


def _write_report(report: RunReport, path: str | None) -> None:
    text = json.dumps(asdict(report), sort_keys=True)
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text, file=sys.stderr)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        D = read_edgelist(args.input)
        cert, n, k = certs.loads(Path(args.cert).read_text(encoding="utf-8"))
    except (ParseError, OSError, ValueError, KeyError, TypeError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    n = args.n if args.n is not None else n
    k = args.k if args.k is not None else k
    verdict = certs.verify_certificate(D, cert, n, k)
    print(f"{certs.kind(cert)}: {verdict}")
    return EXIT_OK if verdict else EXIT_REJECTED


_FAMILY_PARAMS = ("v", "p", "k", "m", "n", "h", "w", "c", "l")


def cmd_generate(args: argparse.Namespace) -> int:
    params = {name: getattr(args, name) for name in _FAMILY_PARAMS if getattr(args, name) is not None}
    if args.suppress:
        params["suppress"] = True
    try:
        spec = GeneratorSpec(args.family, params, args.seed)
        D = spec.build()
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    header = [f"spec: {spec.to_json()}"]
    if args.format == "dot":
        text = to_dot(D, header=header)
    elif args.format == "json":
        doc = {"spec": json.loads(spec.to_json()), "vertices": list(D.vertices), "edges": D.sorted_edges()}
        text = json.dumps(doc, sort_keys=True) + "\n"
    else:
        text = format_edgelist(D, header)
    _emit(text, args.out)
    return EXIT_OK


def _parse_sizes(text: str) -> range:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def _probe_size(job: tuple[int, int, int, int, int, float | None]) -> dict:
    n, k, size, samples, seed, p = job
    counts = dict.fromkeys(KINDS, 0)
    verified = violations = 0
    for i in range(samples):
        rng = random.Random(f"{seed}:{size}:{i}")
        prob = p if p is not None else rng.uniform(0.05, 0.4)
        D = gen_random_strong(size, prob, rng.getrandbits(64))
        try:
            cert = unavoidable(D, n, k)
        except ProofInvariantViolation:
            violations += 1
            continue
        counts[certs.kind(cert)] += 1
        verified += bool(certs.verify_certificate(D, cert, n, k))
    row = {"size": size, "samples": samples}
    row.update({kind: counts[kind] / samples for kind in KINDS})
    row["verified"] = verified / samples
    row["violations"] = violations
    return row


def cmd_probe(args: argparse.Namespace) -> int:
    try:
        sizes = _parse_sizes(args.sizes)
    except ValueError:
        log.error("cannot parse --sizes %r", args.sizes)
        return EXIT_USAGE
    if args.n < 2 or args.k < 1:
        log.error("need --n >= 2 and --k >= 1")
        return EXIT_USAGE
    if not sizes or sizes[0] < 1 or sizes[-1] > MAX_PROBE_SIZE:
        log.error("sizes must lie in 1..%d", MAX_PROBE_SIZE)
        return EXIT_USAGE
    if not 0 <= args.samples <= MAX_PROBE_SAMPLES:
        log.error("samples must lie in 0..%d", MAX_PROBE_SAMPLES)
        return EXIT_USAGE
    rows = []
    if args.samples:
        jobs = [(args.n, args.k, s, args.samples, args.seed, args.p) for s in sizes]
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                rows = list(pool.map(_probe_size, jobs))
        else:
            rows = [_probe_size(j) for j in jobs]
    if args.format == "json":
        out = json.dumps(
            {"n": args.n, "k": args.k, "n_impl": unavoidable_threshold(args.n, args.k), "rows": rows},
            sort_keys=True,
            indent=2,
        )
        sys.stdout.write(out + "\n")
    else:
        cols = ["size", "samples", *KINDS, "verified", "violations"]
        print("\t".join(cols))
        for row in rows:
            print("\t".join(f"{row[c]:.4f}" if isinstance(row[c], float) else str(row[c]) for c in cols))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unavoidable",
        description="Extract and verify unavoidable substructures of strong digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract a certificate from an edge-list file")
    p.add_argument("--input", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="certificate JSON path (default: stdout)")
    p.add_argument("--report", help="run report JSON path (default: stderr)")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="verify a certificate against an edge-list file")
    p.add_argument("--input", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--n", type=int, help="override n stored in the certificate")
    p.add_argument("--k", type=int, help="override k stored in the certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a generated digraph")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--v", type=int, help="vertices (random_strong)")
    p.add_argument("--p", type=float, help="edge probability (random_strong)")
    p.add_argument("--seed", type=int, help="seed (random_strong)")
    p.add_argument("--k", type=int, help="triangles (triangle_chain)")
    p.add_argument("--m", type=int, help="petals (flower)")
    p.add_argument("--n", type=int, help="width (hexagonal_grid, circular_grid)")
    p.add_argument("--w", type=int, help="rays (quarter grids, complete_ray_prefix)")
    p.add_argument("--h", type=int, help="vertices per ray")
    p.add_argument("--c", type=int, help="connections per ray pair (complete_ray_prefix)")
    p.add_argument("--l", type=int, help="ray groups (stein_example)")
    p.add_argument("--suppress", action="store_true", help="suppress ray-internal degree-2 vertices")
    p.add_argument("--format", choices=["edgelist", "dot", "json"], default="edgelist")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("probe", help="certificate kinds over random strong digraphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sizes", required=True, help="vertex counts, e.g. 14..20")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, help="fixed edge probability (default: drawn per sample)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=os.environ.get("UNAVOIDABLE_LOG", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
