"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 the computation ran but an asserted
outcome failed.
"""
from __future__ import annotations

import argparse
import logging
import sys
from collections import Counter
from fractions import Fraction
from typing import Sequence

from .irreps import enumerate_irreps_by_dim
from .numeric_lab import AmbiguousClustering, spin_cluster_sizes, verify_gss_trace
from .obstruction import Conclusion, VerificationFailure, rigidity_verdict, scan_remark
from .report import Report, fmt_rational
from .root_system import Family, GroupError, RankedGroup, build_root_system
from .spectrum import bi_invariant_spectrum

GSS_TOL = 1e-8

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _group(text: str) -> RankedGroup:
    try:
        return RankedGroup.parse(text)
    except GroupError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _spin(text: str) -> Fraction:
    try:
        j = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse spin {text!r}") from exc
    if (2 * j).denominator != 1 or not 0 < 2 * j <= 6:
        raise argparse.ArgumentTypeError("spin must be one of 1/2, 1, 3/2, 2, 5/2, 3")
    return j


# -- commands ---------------------------------------------------------------

def cmd_tables(group: RankedGroup, max_dim: int | None = None) -> Report:
    """Irreps of dimension at most (dim of the first-eigenvalue irrep)^2."""
    rs = build_root_system(group)
    if max_dim is None:
        if group.family is not Family.C:
            raise UsageError("--max-dim is required for groups other than C_n")
        max_dim = (2 * group.rank) ** 2
    rows = []
    for s in enumerate_irreps_by_dim(rs, max_dim):
        note = None
        if group.family is Family.C and group.rank != 4 and group.rank >= 3 and s.weight.coeffs == (2,) + (0,) * (group.rank - 1):
            note = "listed as 2e2 in the published table"
        rows.append({
            "weight": s.weight.label(),
            "eigenvalue": fmt_rational(s.casimir),
            "dim": s.dim,
            "fs_type": s.fs_type.value,
            "note": note,
        })
    return Report("tables", {"group": str(group), "max_dim": max_dim}, rows, summary={"row_count": len(rows)})


def cmd_spectrum(group: RankedGroup, count: int) -> Report:
    rs = build_root_system(group)
    rows = [
        {
            "eigenvalue": fmt_rational(line.eigenvalue),
            "multiplicity": line.multiplicity,
            "contributors": "; ".join(f"{w.label()} (dim {d})" for w, d in line.contributors),
        }
        for line in bi_invariant_spectrum(rs, count)
    ]
    return Report("spectrum", {"group": str(group), "count": count}, rows)


def _spectrum_row(row) -> str:
    return f"{row['eigenvalue']} → {row['multiplicity']}  [{row['contributors']}]"


def cmd_uniqueness(group: RankedGroup) -> Report:
    v = rigidity_verdict(group)
    rows = [
        {
            "solution": sol.describe(),
            "canonical": sol.is_canonical(v.first),
            "pruned": sol.pruned,
            "prune_reason": sol.prune_reason,
        }
        for sol in v.solutions
    ]
    summary = {
        "first_eigenvalue": fmt_rational(v.first.value),
        "multiplicity": v.first.multiplicity,
        "minimizers": ", ".join(s.weight.label() for s in v.first.minimizers),
        "parity_applied": v.parity_applied,
        "solution_count": v.solution_count,
        "surviving_count": v.surviving_count,
        "canonical_survives_uniquely": v.canonical_survives_uniquely,
        "conclusion": v.conclusion.value,
    }
    verdicts = [f"conclusion={v.conclusion.value}"]
    if not v.parity_applied:
        verdicts.append("parity pruning skipped: Frobenius-Schur types undetermined")
    return Report("uniqueness", {"group": str(group)}, rows, verdicts, summary)


def cmd_scan(max_rank: int) -> Report:
    verdicts = scan_remark(max_rank, check=False)
    rows = [
        {
            "group": str(v.group),
            "first_eigenvalue": fmt_rational(v.first.value),
            "multiplicity": v.first.multiplicity,
            "minimizers": ", ".join(s.weight.label() for s in v.first.minimizers),
            "solution_count": v.solution_count,
            "surviving_count": v.surviving_count,
            "parity_applied": v.parity_applied,
            "conclusion": v.conclusion.value,
        }
        for v in verdicts
    ]
    holds = all(v.solution_count >= 2 for v in verdicts)
    return Report(
        "scan", {"max_rank": max_rank}, rows,
        [f"at least two solutions for every group: {'yes' if holds else 'no'}"],
        {"groups": len(rows), "all_have_two_solutions": holds},
    )


def cmd_verify_gss(n: int, trials: int, seed: int) -> Report:
    residual = float(verify_gss_trace(n, trials, seed))
    ok = bool(residual < GSS_TOL)
    return Report(
        "verify-gss", {"n": n, "trials": trials, "seed": seed},
        [{"n": n, "max_relative_residual": f"{residual:.3e}", "tolerance": f"{GSS_TOL:.0e}", "pass": ok}],
        [f"trace identity within tolerance: {'yes' if ok else 'no'}"],
        {"pass": ok},
    )


def cmd_verify_parity(j: Fraction, trials: int, seed: int) -> Report:
    sizes = spin_cluster_sizes(j, trials, seed)
    patterns = Counter(",".join(map(str, s)) for s in sizes)
    rows = [{"cluster_sizes": p, "trials": c} for p, c in sorted(patterns.items())]
    odd_trials = sum(any(x % 2 for x in s) for s in sizes)
    quaternionic = (2 * j) % 2 == 1
    summary = {"quaternionic": quaternionic, "trials_with_odd_cluster": odd_trials}
    if quaternionic:
        ok = odd_trials == 0
        verdict = f"all clusters even: {'yes' if ok else 'no'}"
    else:
        ok = True
        verdict = f"integer spin (real type): odd clusters in {odd_trials} of {trials} trials"
    summary["pass"] = ok
    return Report("verify-parity", {"j": fmt_rational(j), "trials": trials, "seed": seed}, rows, [verdict], summary)


def _failed(report: Report) -> bool:
    if report.command == "uniqueness":
        return report.summary["conclusion"] != Conclusion.RIGID.value
    if report.command == "scan":
        return not report.summary["all_have_two_solutions"]
    return report.summary.get("pass") is False


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = _Parser(prog="sprigidity", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("tables", parents=[common], help="irreps of small dimension")
    s.add_argument("group", type=_group)
    s.add_argument("--max-dim", type=_positive)

    s = sub.add_parser("spectrum", parents=[common], help="bi-invariant Laplace spectrum")
    s.add_argument("group", type=_group)
    s.add_argument("--count", type=_positive, default=6)

    s = sub.add_parser("uniqueness", parents=[common], help="first-eigenvalue multiplicity analysis")
    s.add_argument("group", type=_group)

    s = sub.add_parser("scan", parents=[common], help="multiplicity analysis for A, B, D families")
    s.add_argument("--max-rank", type=int, default=6)

    s = sub.add_parser("verify-gss", parents=[common], help="numerical trace identity on sp(n)")
    s.add_argument("n", type=int)
    s.add_argument("--trials", type=_positive, default=100)
    s.add_argument("--seed", type=_seed, default=42)

    s = sub.add_parser("verify-parity", parents=[common], help="even eigenvalue multiplicities on spin-j")
    s.add_argument("j", type=_spin)
    s.add_argument("--trials", type=_positive, default=100)
    s.add_argument("--seed", type=_seed, default=42)
    return p


def run(args: argparse.Namespace) -> Report:
    if args.command == "tables":
        return cmd_tables(args.group, args.max_dim)
    if args.command == "spectrum":
        return cmd_spectrum(args.group, args.count)
    if args.command == "uniqueness":
        return cmd_uniqueness(args.group)
    if args.command == "scan":
        if args.max_rank < 2:
            raise UsageError("--max-rank must be >= 2")
        return cmd_scan(args.max_rank)
    if args.command == "verify-gss":
        if not 1 <= args.n <= 4:
            raise UsageError("n must lie in 1..4")
        return cmd_verify_gss(args.n, args.trials, args.seed)
    return cmd_verify_parity(args.j, args.trials, args.seed)


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except UsageError as exc:
        print(f"sprigidity: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VerificationFailure, AmbiguousClustering) as exc:
        print(f"sprigidity: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    row_format = _spectrum_row if report.command == "spectrum" else None
    sys.stdout.write(report.render(args.format, row_format))
    return EXIT_FAILED if _failed(report) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
