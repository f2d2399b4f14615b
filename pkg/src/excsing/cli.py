"""Command line entry point.  Every subcommand writes UTF-8 JSON with ``"schema": 1``.

Exit codes: 0 success (verdict present), 2 a step or refutation failed,
3 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .certify import certify
from .chartab import TableParseError, TableValidationError, load_table
from .exclusion import case_from_candidate, exclude_case
from .hilbert import HilbertCandidate, builtin_constraints, check_candidate, search
from .bundled import TABLE_DATA, load_profile_data, sum_sets
from .reps import delta_profile, semi_invariant_counts
from .sums import sigma

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 2, 3
BUILTIN_PROFILES = "builtin:data"


class InputError(Exception):
    pass


def default_workers() -> int:
    n = os.cpu_count() or 1
    cap = os.environ.get("EXCSING_THREADS")
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise InputError(f"EXCSING_THREADS must be an integer, got {cap!r}") from None
    return n


def _emit(obj: dict, out: str | None = None) -> None:
    text = json.dumps({"schema": 1, **obj}, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _profiles(source: str | None):
    if source in (None, BUILTIN_PROFILES):
        return load_profile_data()
    try:
        return load_profile_data(source)
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise InputError(f"cannot read profile data {source}: {e}") from e


def _table(path: str | None):
    return load_table(path or TABLE_DATA)


def cmd_validate_table(args) -> int:
    try:
        t = load_table(args.file)
    except TableParseError as e:
        _emit({"valid": False, "error": {"kind": "parse", "message": str(e), "line": e.line, "field": e.field}})
        return EXIT_INPUT
    except TableValidationError as e:
        _emit({"valid": False, "error": {"kind": "invariant", "invariant": e.invariant, "message": str(e)}})
        return EXIT_INPUT
    _emit(
        {
            "valid": True,
            "order": t.order,
            "classes": t.n_classes,
            "exponent": t.exponent,
            "degrees": list(t.degrees),
            "designated": t.designated,
        }
    )
    return EXIT_OK


def cmd_delta(args) -> int:
    if args.paper_data:
        delta = _profiles(None).delta
        if args.k not in delta:
            raise InputError(f"no profile for k={args.k}")
        profile = delta[args.k]
    else:
        profile = delta_profile(_table(args.table), args.k)
    _emit({"k": args.k, "profile": profile.to_json()})
    return EXIT_OK


def cmd_sigma(args) -> int:
    if args.table:
        profile = delta_profile(_table(args.table), args.k)
    else:
        delta = _profiles(args.delta).delta
        if args.k not in delta:
            raise InputError(f"no profile for k={args.k}")
        profile = delta[args.k]
    _emit({"k": args.k, "sums": list(sigma(profile))})
    return EXIT_OK


def cmd_semi_invariants(args) -> int:
    t = _table(args.table)
    counts = semi_invariant_counts(t, args.max_degree)
    first = next((d for d in sorted(counts) if counts[d] > 0), None)
    _emit({"counts": {str(d): c for d, c in sorted(counts.items())}, "first_degree": first})
    return EXIT_OK


def run_search(n: int, delta_source: str | None, strict: bool, workers: int) -> dict:
    if not 1 <= n <= 6:
        raise InputError(f"--n must be in 1..6, got {n}")
    sums = sum_sets(_profiles(delta_source).delta)
    full_c = builtin_constraints(n)
    strict_c = builtin_constraints(n, strict=True)
    full = search(n, sums, full_c, workers=workers)
    loose = search(n, sums, strict_c, workers=workers)
    chosen = strict_c if strict else full_c
    # candidates admitted by the bare hypotheses but removed by the extra conditions
    discrepancy = [
        {**c.to_json(), "excluded_by": [r.name for r in check_candidate(c, full_c, sums).failures]}
        for c in loose
        if c not in full
    ]
    return {
        "n": n,
        "mode": "strict-lemma" if strict else "with-remarks",
        "solutions": [c.to_json() for c in (loose if strict else full)],
        "constraints": chosen.describe(),
        "discrepancy": discrepancy,
    }


def cmd_search(args) -> int:
    _emit(run_search(args.n, args.delta, args.strict_lemma, args.workers or default_workers()), args.out)
    return EXIT_OK


def cmd_exclude(args) -> int:
    try:
        raw = json.loads(Path(args.search_output).read_text(encoding="utf-8"))
        cands = [HilbertCandidate.from_json({"n": raw["n"], **s}) for s in raw["solutions"]]
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise InputError(f"cannot read search output {args.search_output}: {e}") from e
    data = _profiles(args.delta)
    cases = []
    for cand in cands:
        ref = exclude_case(case_from_candidate(cand, data.delta, data.tensors))
        cases.append({"case": cand.to_json(), **ref.to_json()})
    verdict = "refuted" if all(c["verdict"] == "refuted" for c in cases) else "inconclusive"
    _emit({"verdict": verdict, "cases": cases}, args.out)
    return EXIT_OK if verdict == "refuted" else EXIT_FAILED


def cmd_certify(args) -> int:
    workers = args.workers or default_workers()
    if args.table is not None:
        cert = certify("table", table_path=args.table or None, profile_path=args.delta, workers=workers)
    else:
        cert = certify("paper-data", profile_path=args.delta, workers=workers)
    text = cert.dumps()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if not cert.passed:
        bad = cert.failed_step()
        print(f"step failed: {bad.name if bad else '?'}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="excsing", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate-table", help="parse and validate a character table file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate_table)

    s = sub.add_parser("delta", help="constituent dimensions of Sym^k of the designated character")
    s.add_argument("--k", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--table", help="table file (default: bundled table)")
    g.add_argument("--paper-data", action="store_true", help="read the transcribed profile instead")
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("sigma", help="attainable subspace dimensions in Sym^k")
    s.add_argument("--k", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--delta", default=BUILTIN_PROFILES, help=f"profile file or {BUILTIN_PROFILES}")
    g.add_argument("--table", help="recompute the profile from a table file")
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("semi-invariants", help="semi-invariant counts by degree")
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--table")
    s.set_defaults(func=cmd_semi_invariants)

    s = sub.add_parser("search", help="Hilbert-function sieve for one dimension n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--delta", default=BUILTIN_PROFILES, help=f"profile file or {BUILTIN_PROFILES}")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--strict-lemma", action="store_true", help="bare hypotheses only")
    g.add_argument("--with-remarks", action="store_true", help="hypotheses plus extra conditions (default)")
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("exclude", help="refute the candidates in a search output")
    s.add_argument("search_output")
    s.add_argument("--delta", default=BUILTIN_PROFILES)
    s.add_argument("--out")
    s.set_defaults(func=cmd_exclude)

    s = sub.add_parser("certify", help="run the whole pipeline")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--paper-data", action="store_true", help="transcribed data only (default)")
    g.add_argument("--table", nargs="?", const="", help="recompute from a table (default: bundled)")
    s.add_argument("--delta", help="profile file (default: bundled)")
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_certify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, TableParseError, TableValidationError, FileNotFoundError) as e:
        print(json.dumps({"schema": 1, "error": str(e)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
