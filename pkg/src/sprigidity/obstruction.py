"""First-eigenvalue multiplicity analysis for left-invariant metrics.

If a left-invariant metric is isospectral to the bi-invariant one, the
multiplicity M of the first nonzero eigenvalue must be rebuilt from eigenvalue
slots of nontrivial irreps: a multiset of irreps pi_h whose dimensions sum to M,
each irrep used at most dim(pi) times.  The unique "canonical" decomposition
(every minimizer used dim times) forces the trace identity that pins the
metric; any other decomposition has to be ruled out, here by the parity of
eigenvalue multiplicities on quaternionic irreps.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence

from scipy.optimize import brentq

from .irreps import (
    DominantWeight,
    FSType,
    IrrepSummary,
    casimir_eigenvalue,
    enumerate_irreps_by_dim,
    weyl_dimension,
)
from .root_system import Family, RankedGroup, RootSystemData, build_root_system
from .spectrum import FirstEigenvalue, first_eigenvalue

log = logging.getLogger(__name__)


class PruningError(ValueError):
    """Parity pruning asked to decide an irrep of unknown Frobenius-Schur type."""


class VerificationFailure(AssertionError):
    """A computation finished but its asserted outcome did not hold."""


class Conclusion(str, enum.Enum):
    RIGID = "rigid_by_method"
    INCONCLUSIVE = "method_inconclusive"


@dataclass(frozen=True)
class SolutionMultiset:
    entries: tuple[tuple[IrrepSummary, int], ...]
    pruned: bool = False
    prune_reason: str | None = None

    @property
    def total(self) -> int:
        return sum(s.dim * c for s, c in self.entries)

    def is_canonical(self, first: FirstEigenvalue) -> bool:
        return dict((s.weight, c) for s, c in self.entries) == {s.weight: s.dim for s in first.minimizers}

    def describe(self) -> str:
        return " + ".join(f"{s.weight.label()} x{c}" for s, c in self.entries)


@dataclass(frozen=True)
class RigidityVerdict:
    group: RankedGroup
    first: FirstEigenvalue
    solutions: tuple[SolutionMultiset, ...]
    parity_applied: bool
    solution_count: int
    surviving_count: int
    canonical_survives_uniquely: bool
    conclusion: Conclusion


def _bounded_knapsack(items: Sequence[IrrepSummary], target: int) -> list[tuple[int, ...]]:
    """Count vectors c with sum c_i * dim_i == target and 0 <= c_i <= dim_i."""
    dims = [s.dim for s in items]

    @lru_cache(maxsize=None)
    def feasible(i: int, rem: int) -> bool:
        if rem == 0:
            return True
        if i == len(dims):
            return False
        return any(feasible(i + 1, rem - k * dims[i]) for k in range(min(dims[i], rem // dims[i]) + 1))

    out: list[tuple[int, ...]] = []

    def rec(i: int, rem: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(tuple(acc) + (0,) * (len(dims) - i))
            return
        if i == len(dims) or not feasible(i, rem):
            return
        for k in range(min(dims[i], rem // dims[i]), -1, -1):
            acc.append(k)
            rec(i + 1, rem - k * dims[i], acc)
            acc.pop()

    rec(0, target, [])
    return out


def diophantine_solutions(rs: RootSystemData, first: FirstEigenvalue | None = None) -> list[SolutionMultiset]:
    """All decompositions of the first-eigenvalue multiplicity into irrep dimensions."""
    first = first or first_eigenvalue(rs)
    target = first.multiplicity
    items = [s for s in enumerate_irreps_by_dim(rs, target) if not s.weight.is_zero()]
    items.sort(key=lambda s: (-s.dim,) + s.sort_key())
    solutions = []
    for counts in _bounded_knapsack(items, target):
        entries = sorted(
            ((s, c) for s, c in zip(items, counts) if c),
            key=lambda e: e[0].sort_key(),
        )
        solutions.append(SolutionMultiset(tuple(entries)))
    solutions.sort(key=lambda sol: (len(sol.entries), [(s.sort_key(), -c) for s, c in sol.entries]))
    return solutions


def parity_prune(solutions: Sequence[SolutionMultiset]) -> list[SolutionMultiset]:
    """Flag solutions that use a quaternionic irrep an odd number of times.

    On a quaternionic irrep every eigenvalue of pi(-C_A) has even
    multiplicity, so such an irrep can only fill an even number of slots.
    """
    out = []
    for sol in solutions:
        reason = None
        for s, c in sol.entries:
            if s.fs_type is FSType.UNDETERMINED:
                raise PruningError(f"Frobenius-Schur type of {s.weight} is undetermined")
            if s.fs_type is FSType.QUATERNIONIC and c % 2:
                reason = f"quaternionic {s.weight.label()} used an odd number of times ({c})"
                break
        out.append(replace(sol, pruned=reason is not None, prune_reason=reason))
    return out


def rigidity_verdict(group: RankedGroup | str, rs: RootSystemData | None = None) -> RigidityVerdict:
    rs = rs or build_root_system(group)
    first = first_eigenvalue(rs)
    solutions = diophantine_solutions(rs, first)
    try:
        solutions = parity_prune(solutions)
        parity_applied = True
    except PruningError as exc:
        log.warning("%s: parity pruning skipped (%s)", rs.group, exc)
        parity_applied = False
    survivors = [s for s in solutions if not s.pruned]
    unique = len(survivors) == 1 and survivors[0].is_canonical(first)
    return RigidityVerdict(
        group=rs.group,
        first=first,
        solutions=tuple(solutions),
        parity_applied=parity_applied,
        solution_count=len(solutions),
        surviving_count=len(survivors),
        canonical_survives_uniquely=unique,
        conclusion=Conclusion.RIGID if unique else Conclusion.INCONCLUSIVE,
    )


def scan_groups(max_rank: int) -> list[RankedGroup]:
    """Supported simple groups other than Sp(n) up to ``max_rank``."""
    groups = [RankedGroup(Family.A, r) for r in range(1, max_rank + 1)]
    groups += [RankedGroup(Family.B, r) for r in range(3, max_rank + 1)]
    groups += [RankedGroup(Family.D, r) for r in range(4, max_rank + 1)]
    return groups


def scan_remark(max_rank: int, check: bool = True) -> list[RigidityVerdict]:
    """Verdicts for every non-symplectic group up to ``max_rank``.

    With ``check`` set, raises VerificationFailure unless each group admits at
    least two decompositions.
    """
    if max_rank < 2:
        raise ValueError("max_rank must be >= 2")
    verdicts = [rigidity_verdict(g) for g in scan_groups(max_rank)]
    if check:
        bad = [str(v.group) for v in verdicts if v.solution_count < 2]
        if bad:
            raise VerificationFailure(f"fewer than two solutions for: {', '.join(bad)}")
    return verdicts


def gss_expected_trace(group: RankedGroup | str, weight: DominantWeight, gram_norm_sq: float) -> float:
    """Trace of pi(-C_A) predicted from ||A||^2: (||A||^2 / m) * dim * casimir."""
    if not gram_norm_sq > 0:
        raise ValueError("gram_norm_sq must be positive")
    rs = build_root_system(group)
    dim = weyl_dimension(weight, rs)
    lam = casimir_eigenvalue(weight, rs)
    return float(gram_norm_sq) / rs.group_dim * dim * float(lam)


def amgm_rigidity_check(gram_eigenvalues: Sequence[float], tolerance: float) -> bool:
    """Numerically certify that det(A^T A) = 1 and ||A||^2 = m force A^T A = I.

    Returns False when the two constraints do not hold within ``tolerance``.
    Otherwise each eigenvalue x satisfies x - 1 - log x <= E with
    E = (sum - m) - log(prod), and all eigenvalues must sit inside the interval
    that bound carves out around 1.
    """
    vals = [float(v) for v in gram_eigenvalues]
    if not vals:
        raise ValueError("need at least one eigenvalue")
    if any(not v > 0 for v in vals):
        raise ValueError("eigenvalues must be positive")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    m = len(vals)
    log_prod = math.fsum(math.log(v) for v in vals)
    excess = math.fsum(vals) - m
    if abs(log_prod) > tolerance or abs(excess) > tolerance * m:
        return False
    budget = max(excess - log_prod, 1e-30)

    def g(x: float) -> float:
        return x - 1 - math.log(x) - budget

    lo = brentq(g, 1e-300, 1.0) if g(1e-300) > 0 else 0.0
    hi = brentq(g, 1.0, 2.0 + 2 * budget)
    slack = 1e-12
    return all(lo - slack <= v <= hi + slack for v in vals) and hi - lo <= 4 * math.sqrt(2 * budget) + slack
