"""Laplace spectrum of a bi-invariant metric.

Each irrep contributes its Casimir eigenvalue with multiplicity dim**2, so the
spectrum is assembled from the Casimir enumeration.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .irreps import (
    DominantWeight,
    IrrepSummary,
    casimir_eigenvalue,
    enumerate_irreps_by_casimir,
)
from .root_system import RootSystemData


@dataclass(frozen=True)
class SpectrumLine:
    eigenvalue: Fraction
    multiplicity: int
    contributors: tuple[tuple[DominantWeight, int], ...]


@dataclass(frozen=True)
class FirstEigenvalue:
    value: Fraction
    multiplicity: int
    minimizers: tuple[IrrepSummary, ...]


def _lines(irreps: list[IrrepSummary]) -> list[SpectrumLine]:
    by_value: dict[Fraction, list[IrrepSummary]] = defaultdict(list)
    for s in irreps:
        by_value[s.casimir].append(s)
    return [
        SpectrumLine(
            value,
            sum(s.dim ** 2 for s in group),
            tuple((s.weight, s.dim) for s in group),
        )
        for value, group in sorted(by_value.items())
    ]


def bi_invariant_spectrum(rs: RootSystemData, count: int) -> list[SpectrumLine]:
    """First ``count`` distinct eigenvalues with exact multiplicities."""
    if count < 1:
        raise ValueError("count must be >= 1")
    # enumeration up to the threshold is complete, so once it holds `count`
    # distinct values the first `count` lines are final
    threshold = max(casimir_eigenvalue(DominantWeight._trusted(rs.group, w), rs) for w in rs.fundamental_weights)
    while True:
        lines = _lines(enumerate_irreps_by_casimir(rs, threshold))
        if len(lines) >= count:
            return lines[:count]
        threshold *= 2


def first_eigenvalue(rs: RootSystemData) -> FirstEigenvalue:
    """Smallest nonzero eigenvalue, its multiplicity and the irreps realizing it.

    The Casimir is superadditive on dominant weights, so the minimum over all
    nontrivial weights is attained among the fundamental weights; a bounded
    enumeration at that value then collects every tie.
    """
    best = min(casimir_eigenvalue(DominantWeight._trusted(rs.group, w), rs) for w in rs.fundamental_weights)
    found = [s for s in enumerate_irreps_by_casimir(rs, best) if not s.weight.is_zero()]
    assert found and all(s.casimir == best for s in found), "Casimir minimum certification failed"
    return FirstEigenvalue(best, sum(s.dim ** 2 for s in found), tuple(found))
