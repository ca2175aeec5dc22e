"""Irreducible representations: dominant weights, Casimir eigenvalues, Weyl dimensions.

All arithmetic is exact (``fractions.Fraction``).  Enumeration walks the
Dynkin-label lattice and prunes with monotonicity: both the Weyl dimension and
the Casimir eigenvalue strictly increase when any Dynkin label is increased.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm, prod
from typing import Callable, Iterator, Sequence

from .root_system import Family, RankedGroup, RootSystemData, Vector, build_root_system


class WeightError(ValueError):
    """A weight that is not dominant integral for its group."""


class FSType(str, enum.Enum):
    REAL = "real"
    COMPLEX = "complex"
    QUATERNIONIC = "quaternionic"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True, order=True)
class DominantWeight:
    """Highest weight in epsilon coordinates.

    A-family coordinates are projected onto the sum-zero hyperplane, so
    ``DominantWeight(A2, (1, 0, 0))`` is the defining representation.
    """

    group: RankedGroup  # a string such as "C3" is parsed
    coeffs: Vector

    def __post_init__(self) -> None:
        if isinstance(self.group, str):
            object.__setattr__(self, "group", RankedGroup.parse(self.group))
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.group.ambient_dim:
            raise WeightError(
                f"{self.group} weights need {self.group.ambient_dim} coordinates, got {len(coeffs)}"
            )
        if self.group.family is Family.A:
            mean = sum(coeffs, Fraction(0)) / len(coeffs)
            coeffs = tuple(c - mean for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        for lab in self.dynkin:
            if lab < 0 or lab.denominator != 1:
                raise WeightError(f"{self.coeffs} is not dominant integral for {self.group}")

    @classmethod
    def _trusted(cls, group: RankedGroup, coeffs: Vector) -> "DominantWeight":
        # skips validation; only for weights built from fundamental weights
        obj = object.__new__(cls)
        object.__setattr__(obj, "group", group)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def from_dynkin(cls, group: RankedGroup | str, labels: Sequence[int]) -> "DominantWeight":
        rs = build_root_system(group)
        return cls(rs.group, rs.from_dynkin(labels))

    @classmethod
    def zero(cls, group: RankedGroup | str) -> "DominantWeight":
        rs = build_root_system(group)
        return cls(rs.group, (0,) * rs.ambient_dim)

    @property
    def dynkin(self) -> tuple[Fraction, ...]:
        return build_root_system(self.group).dynkin_labels(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "DominantWeight") -> "DominantWeight":
        if other.group != self.group:
            raise WeightError("cannot add weights of different groups")
        return DominantWeight(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def label(self) -> str:
        """``2e1+e2`` for C_n (epsilon coordinates), ``w1+w3`` (fundamental weights) otherwise."""
        if self.is_zero():
            return "0"
        if self.group.family is Family.C:
            parts, prefix = [int(c) for c in self.coeffs], "e"
        else:
            parts, prefix = [int(c) for c in self.dynkin], "w"
        terms = []
        for i, c in enumerate(parts, start=1):
            if c:
                terms.append(f"{'' if c == 1 else c}{prefix}{i}")
        return "+".join(terms)

    def __str__(self) -> str:
        return f"{self.group}:{self.label()}"


@dataclass(frozen=True)
class IrrepSummary:
    weight: DominantWeight
    dim: int
    casimir: Fraction
    fs_type: FSType

    def sort_key(self) -> tuple:
        return (self.casimir, self.dim, self.weight.coeffs)


def _check(weight: DominantWeight, rs: RootSystemData) -> None:
    if weight.group != rs.group:
        raise WeightError(f"weight of {weight.group} used with root system of {rs.group}")


def casimir_eigenvalue(weight: DominantWeight, rs: RootSystemData) -> Fraction:
    """<mu + 2 rho, mu> under the root system's inner product."""
    _check(weight, rs)
    mu = weight.coeffs
    return rs.inner(tuple(m + 2 * r for m, r in zip(mu, rs.rho)), mu)


def casimir_closed_form_c(coeffs: Sequence[int]) -> int:
    """Sum of a_j (a_j + 2(n + 1 - j)) for an Sp(n) weight a_1 >= ... >= a_n >= 0."""
    n = len(coeffs)
    return sum(a * (a + 2 * (n + 1 - j)) for j, a in enumerate(coeffs, start=1))


def weyl_dimension(weight: DominantWeight, rs: RootSystemData) -> int:
    _check(weight, rs)
    # clear denominators so the product runs over Python ints
    scale = lcm(*(c.denominator for c in weight.coeffs + rs.rho))
    mu_alpha = rs.root_pairings([int(c * scale) for c in weight.coeffs])
    rho_alpha = rs.root_pairings([int(c * scale) for c in rs.rho])
    num = prod(m + r for m, r in zip(mu_alpha, rho_alpha))
    den = prod(rho_alpha)
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"non-integral Weyl dimension {Fraction(num, den)} for {weight}")
    return value


def dim_k_eps1(n: int, k: int) -> int:
    """Dimension of the Sp(n) irrep with highest weight k e1."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return comb(k + 2 * n - 1, k)


def dim_omega_p(n: int, p: int) -> int:
    """Dimension of the Sp(n) irrep with highest weight e1 + ... + ep."""
    if not 1 <= p <= n:
        raise ValueError(f"p must lie in 1..{n}, got {p}")
    value = Fraction(2 * n + 2 - 2 * p, 2 * n + 2 - p) * comb(2 * n + 1, p)
    assert value.denominator == 1
    return int(value)


def cubic_F(n: int, j: int, a1: int, x: int | Fraction) -> int | Fraction:
    """Difference of the two sides of the per-index factor bound used to compare
    dim(mu) with dim(a1 e1), with x = a_j.

    F(0) = 0, but F is not nonnegative on all of 0 <= x <= a1: cubic_F(3, 2, 1, 1)
    is -3.  The bound dim(mu) >= dim(a1 e1) itself still holds.
    """
    return (
        (x + n + 1 - j) * (x + a1 + 2 * n + 1 - j) * (-x + a1 + j - 1)
        - (n + 1 - j) * (a1 + 2 * n + 1 - j) * (a1 + j - 1)
    )


def fs_type(weight: DominantWeight) -> FSType:
    """Frobenius-Schur type.  Every Sp(n) irrep is self-dual and it is
    quaternionic exactly when the coefficient sum is odd; other families are
    left undetermined, apart from the trivial irrep."""
    if weight.is_zero():
        return FSType.REAL
    if weight.group.family is not Family.C:
        return FSType.UNDETERMINED
    return FSType.QUATERNIONIC if sum(weight.coeffs) % 2 else FSType.REAL


def summarize(weight: DominantWeight, rs: RootSystemData | None = None) -> IrrepSummary:
    rs = rs or build_root_system(weight.group)
    return IrrepSummary(weight, weyl_dimension(weight, rs), casimir_eigenvalue(weight, rs), fs_type(weight))


def _walk(rs: RootSystemData, f: Callable[[DominantWeight], object], bound) -> Iterator[DominantWeight]:
    """All dominant weights with f(weight) <= bound, for f strictly increasing
    in every Dynkin label."""
    r, d = rs.rank, rs.ambient_dim
    omegas = rs.fundamental_weights

    def rec(idx: int, coords: list[Fraction]) -> Iterator[DominantWeight]:
        if idx == r:
            yield DominantWeight._trusted(rs.group, tuple(coords))
            return
        cur = list(coords)
        yield from rec(idx + 1, cur)
        while True:
            cur = [cur[k] + omegas[idx][k] for k in range(d)]
            if f(DominantWeight._trusted(rs.group, tuple(cur))) > bound:
                break
            yield from rec(idx + 1, cur)

    yield from rec(0, [Fraction(0)] * d)


def _sorted_summaries(rs: RootSystemData, weights: Iterator[DominantWeight]) -> list[IrrepSummary]:
    return sorted((summarize(w, rs) for w in weights), key=IrrepSummary.sort_key)


def enumerate_irreps_by_dim(rs: RootSystemData, max_dim: int) -> list[IrrepSummary]:
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    return _sorted_summaries(rs, _walk(rs, lambda w: weyl_dimension(w, rs), max_dim))


def enumerate_irreps_by_casimir(rs: RootSystemData, max_casimir: Fraction | int) -> list[IrrepSummary]:
    max_casimir = Fraction(max_casimir)
    if max_casimir < 0:
        raise ValueError("max_casimir must be >= 0")
    return _sorted_summaries(rs, _walk(rs, lambda w: casimir_eigenvalue(w, rs), max_casimir))
