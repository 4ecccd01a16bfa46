"""Command-line front end: compute, check-identities, random, bench.

Exit codes: 0 success (and, for compute, all agreement flags true);
1 disagreement or identity failure; 2 malformed input; 3 infeasible size.

JSON output is one record per line with sorted keys and, by default, no
timing fields, so identical seeds and configs produce byte-identical
output; --timings adds wall-clock seconds to each record.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .chainsums import SET_VARIANT_CAP, Variant
from .corpus import generate_corpus, sample_points
from .engine import ALL_METHOD_NAMES, METHOD_ALL, METHOD_AUTO, OmegaReport, compute_omega
from .errors import Infeasible, OmegacalcError, SpecFileError
from .matroid import uniform
from .polytopes import IdentityKind, check_identity
from .specfile import (
    LoadedMatroid,
    load_matroid_file,
    load_points_file,
    matroid_from_spec,
    spec_to_json,
)

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3


def _write_lines(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_inputs(paths: list[str]) -> list[LoadedMatroid]:
    loaded: list[LoadedMatroid] = []
    for path in paths:
        loaded.extend(load_matroid_file(path))
    return loaded


def _compute_one(payload: tuple[LoadedMatroid, str]) -> OmegaReport:
    item, method = payload
    return compute_omega(item.matroid, method, item.matroid_id, item.schubert)


def _report_records(report: OmegaReport, timings: bool) -> list[dict]:
    records = []
    for res in report.results:
        rec = {
            "id": report.matroid_id,
            "n": report.n,
            "r": report.r,
            "method": res.method,
            "omega": res.omega,
            "chains": res.chains,
            "consensus": report.consensus,
            "agree": report.agree,
        }
        if res.note:
            rec["note"] = res.note
        if timings:
            rec["seconds"] = round(res.seconds, 6)
        records.append(rec)
    return records


def _render_table(reports: list[OmegaReport]) -> list[str]:
    lines = []
    header = f"{'matroid':<24} {'n':>3} {'r':>3} {'method':<16} {'omega':>10} {'chains':>10} {'time':>9}"
    lines.append(header)
    lines.append("-" * len(header))
    for rep in reports:
        for res in rep.results:
            chains = "-" if res.chains is None else str(res.chains)
            lines.append(
                f"{rep.matroid_id:<24} {rep.n:>3} {rep.r:>3} {res.method:<16} "
                f"{res.omega:>10} {chains:>10} {res.seconds:>8.3f}s"
            )
        verdict = "agree" if rep.agree else "DISAGREE"
        extra = f" ({rep.noteworthy})" if rep.noteworthy else ""
        lines.append(f"{rep.matroid_id:<24} consensus={rep.consensus} [{verdict}]{extra}")
    return lines


def cmd_compute(args) -> int:
    try:
        loaded = _load_inputs(args.input)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    payloads = [(item, args.method) for item in loaded]
    try:
        if args.jobs > 1 and len(payloads) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_compute_one, payloads))
        else:
            reports = [_compute_one(p) for p in payloads]
    except Infeasible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OmegacalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.format == "json":
        lines = [
            json.dumps(rec, sort_keys=True)
            for rep in reports
            for rec in _report_records(rep, args.timings)
        ]
    else:
        lines = _render_table(reports)
    _write_lines(lines, args.out)
    return EXIT_OK if all(rep.agree for rep in reports) else EXIT_DISAGREE


def _identities_one(payload) -> tuple[list[str], list[dict], int]:
    import random

    item, samples, seed, explicit = payload
    m = item.matroid
    failures = 0
    lines: list[str] = []
    records: list[dict] = []
    kinds = list(IdentityKind)
    if m.has_loops():
        # flats identities assume a loop-free matroid; set sums hold always
        kinds = [IdentityKind.INWARD_SETS, IdentityKind.OUTWARD_SETS]
        lines.append(f"{item.matroid_id}: loops present, checking set identities only")
    if explicit is not None:
        points = explicit
    else:
        rng = random.Random(seed)
        points = sample_points(rng, m.n, m.r, samples, bases=m.bases)
    for kind in kinds:
        bad_here = 0
        for z in points:
            lhs, rhs = check_identity(m, kind, z)
            if lhs != rhs:
                failures += 1
                bad_here += 1
                coords = [[c.numerator, c.denominator] for c in z]
                lines.append(
                    f"MISMATCH id={item.matroid_id} kind={kind.value} "
                    f"point={json.dumps(coords)} lhs={lhs} rhs={rhs}"
                )
        records.append(
            {
                "id": item.matroid_id,
                "kind": kind.value,
                "points": len(points),
                "failures": bad_here,
            }
        )
        lines.append(
            f"{item.matroid_id}: {kind.value}: {len(points)} points, {bad_here} failures"
        )
    return lines, records, failures


def cmd_check_identities(args) -> int:
    try:
        loaded = _load_inputs(args.input)
        explicit = load_points_file(args.points) if args.points else None
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    from .polytopes import IDENTITY_CAP

    oversized = [item for item in loaded if item.matroid.n > IDENTITY_CAP]
    if oversized:
        print(
            f"error: identity checking is capped at n = {IDENTITY_CAP} "
            f"({oversized[0].matroid_id} has n = {oversized[0].matroid.n})",
            file=sys.stderr,
        )
        return EXIT_INFEASIBLE
    payloads = [(item, args.samples, args.seed, explicit) for item in loaded]
    if args.jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(_identities_one, payloads))
    else:
        chunks = [_identities_one(p) for p in payloads]
    lines = [line for chunk in chunks for line in chunk[0]]
    records = [rec for chunk in chunks for rec in chunk[1]]
    failures = sum(chunk[2] for chunk in chunks)
    if args.format == "json":
        out_lines = [json.dumps(rec, sort_keys=True) for rec in records]
    else:
        out_lines = lines
    _write_lines(out_lines, args.out)
    return EXIT_OK if failures == 0 else EXIT_DISAGREE


def cmd_random(args) -> int:
    try:
        specs = generate_corpus(args.family, args.count, args.seed, args.n, args.r)
    except (ValueError, OmegacalcError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    for spec in specs:
        # every generated spec must load back into a valid matroid
        matroid_from_spec(spec)
    lines = [spec_to_json(spec) for spec in specs]
    _write_lines(lines, args.out)
    return EXIT_OK


def _standard_bench_corpus() -> list[LoadedMatroid]:
    from .bitops import mask_of

    items = []
    for r, n in [(3, 7), (4, 9), (4, 10), (5, 12)]:
        items.append(LoadedMatroid(f"uniform-{r}-{n}", uniform(r, n)))
    chain = (mask_of(range(2)), mask_of(range(7)), mask_of(range(10)))
    profile = (0, 1, 3, 4)
    items.append(
        LoadedMatroid(
            "schubert-10-4",
            matroid_from_spec(
                {
                    "kind": "schubert_lower",
                    "n": 10,
                    "chain": [[0, 1], list(range(7)), list(range(10))],
                    "profile": list(profile),
                }
            ).matroid,
            (10, chain, profile),
        )
    )
    items.append(
        LoadedMatroid("sum-u25-u12", uniform(2, 5).direct_sum(uniform(1, 2)))
    )
    return items


def cmd_bench(args) -> int:
    try:
        loaded = _load_inputs(args.input) if args.input else _standard_bench_corpus()
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    methods = args.methods.split(",") if args.methods else None
    lines = []
    records = []
    all_agree = True
    for item in loaded:
        m = item.matroid
        selected = methods or [
            v.value
            for v in Variant
            if not (v.value.endswith("-sets") and m.n > SET_VARIANT_CAP)
        ]
        rep = compute_omega(m, selected, item.matroid_id, item.schubert)
        all_agree &= rep.agree
        chain_counts = {res.method: res.chains for res in rep.results}
        for res in rep.results:
            chains = "-" if res.chains is None else str(res.chains)
            lines.append(
                f"{item.matroid_id:<24} {res.method:<16} omega={res.omega:<8} "
                f"chains={chains:<10} time={res.seconds:.3f}s"
            )
            records.append(
                {
                    "id": item.matroid_id,
                    "method": res.method,
                    "omega": res.omega,
                    "chains": res.chains,
                    "seconds": round(res.seconds, 6),
                }
            )
        ordered = [
            Variant.OUTWARD_FLATS.value,
            Variant.CROWDED_FLATS.value,
            Variant.RECORD_FLATS.value,
            Variant.FINAL_FLATS.value,
        ]
        present = [v for v in ordered if chain_counts.get(v) is not None]
        if len(present) > 1:
            counts = [str(chain_counts[v]) for v in present]
            lines.append(
                f"{item.matroid_id:<24} cancellation: "
                + " >= ".join(f"{v}:{c}" for v, c in zip(present, counts))
            )
    if args.format == "json":
        out_lines = [json.dumps(rec, sort_keys=True) for rec in records]
    else:
        out_lines = lines
    _write_lines(out_lines, args.out)
    return EXIT_OK if all_agree else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omega", description="Exact computation of the omega invariant of matroids"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the invariant for matroid spec files")
    p.add_argument("-i", "--input", action="append", required=True, help="matroid spec or corpus file")
    p.add_argument(
        "--method",
        default=METHOD_AUTO,
        help=f"one of: {METHOD_AUTO}, {METHOD_ALL}, {', '.join(ALL_METHOD_NAMES)}",
    )
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out", default=None, help="write output to a file")
    p.add_argument("--jobs", type=int, default=1, help="process-level parallelism over inputs")
    p.add_argument("--timings", action="store_true", help="include seconds in JSON records")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check-identities", help="verify decomposition identities pointwise")
    p.add_argument("-i", "--input", action="append", required=True)
    p.add_argument("--samples", type=int, default=500, help="sampled points per matroid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", default=None, help="explicit point batch file (JSON)")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=1, help="process-level parallelism over inputs")
    p.set_defaults(func=cmd_check_identities)

    p = sub.add_parser("random", help="generate a reproducible corpus of matroid specs")
    p.add_argument("--family", choices=["schubert", "closure"], required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("bench", help="compare chain counts and timing across methods")
    p.add_argument("-i", "--input", action="append", default=None)
    p.add_argument("--methods", default=None, help="comma-separated method list")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
