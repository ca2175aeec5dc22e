"""Root systems of the classical simple Lie algebras in orthonormal epsilon coordinates.

Conventions:

    A_r   r+1 coordinates, weights live on the sum-zero hyperplane
    B_r   roots e_i +- e_j, e_i
    C_r   roots e_i +- e_j, 2 e_i        (Sp(r); rho = (r, r-1, ..., 1))
    D_r   roots e_i +- e_j

The inner product is the coordinate dot product, optionally multiplied by a
positive rational ``scale``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

Vector = tuple[Fraction | int, ...]  # roots are stored with int entries


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


# (family, rank) -> canonical isomorphic group, for rejected low-rank duplicates
_DUPLICATES = {
    ("B", 1): "A1 (B1 = C1 = A1)",
    ("B", 2): "C2 (B2 = C2)",
    ("D", 1): "a torus (D1 is abelian)",
    ("D", 2): "A1 x A1 (D2 is not simple)",
    ("D", 3): "A3 (D3 = A3)",
}
_MIN_RANK = {"A": 1, "B": 2, "C": 1, "D": 4}


class GroupError(ValueError):
    """Unsupported or malformed group identifier."""


@dataclass(frozen=True, order=True)
class RankedGroup:
    family: Family
    rank: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        if not isinstance(self.rank, int) or self.rank < 1:
            raise GroupError(f"rank must be a positive integer, got {self.rank!r}")
        key = (self.family.value, self.rank)
        if key in _DUPLICATES:
            raise GroupError(
                f"{self.family.value}{self.rank} is not supported; use {_DUPLICATES[key]}"
            )
        if self.rank < _MIN_RANK[self.family.value]:
            raise GroupError(f"{self.family.value}{self.rank} is not supported")

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"

    @property
    def ambient_dim(self) -> int:
        return self.rank + 1 if self.family is Family.A else self.rank

    @classmethod
    def parse(cls, text: str) -> "RankedGroup":
        """Parse selectors like ``"C4"`` or ``"a2"``."""
        m = re.fullmatch(r"\s*([ABCDabcd])_?(\d+)\s*", text)
        if not m:
            raise GroupError(f"cannot parse group selector {text!r} (expected e.g. 'C4')")
        return cls(Family(m.group(1).upper()), int(m.group(2)))


def inner_product(u: Sequence, v: Sequence) -> Fraction:
    """Exact epsilon-coordinate dot product."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")
    return Fraction(sum(a * b for a, b in zip(u, v)))


def _unit(dim: int, *entries: tuple[int, int]) -> Vector:
    # roots have integer coordinates; plain ints keep construction cheap
    out = [0] * dim
    for i, c in entries:
        out[i] += c
    return tuple(out)


def _positive_roots(family: Family, r: int) -> list[Vector]:
    if family is Family.A:
        d = r + 1
        return [_unit(d, (i, 1), (j, -1)) for i in range(d) for j in range(i + 1, d)]
    roots = []
    for i in range(r):
        for j in range(i + 1, r):
            roots.append(_unit(r, (i, 1), (j, -1)))
            roots.append(_unit(r, (i, 1), (j, 1)))
    if family is Family.B:
        roots += [_unit(r, (i, 1)) for i in range(r)]
    elif family is Family.C:
        roots += [_unit(r, (i, 2)) for i in range(r)]
    return roots


def _simple_roots(family: Family, r: int) -> list[Vector]:
    d = r + 1 if family is Family.A else r
    chain = [_unit(d, (i, 1), (i + 1, -1)) for i in range(d - 1)]
    if family is Family.A:
        return chain
    if family is Family.B:
        return chain + [_unit(r, (r - 1, 1))]
    if family is Family.C:
        return chain + [_unit(r, (r - 1, 2))]
    return chain + [_unit(r, (r - 2, 1), (r - 1, 1))]


def _fundamental_weights(family: Family, r: int) -> list[Vector]:
    half = Fraction(1, 2)
    if family is Family.A:
        d = r + 1
        out = []
        for i in range(1, r + 1):
            shift = Fraction(i, d)
            out.append(tuple((Fraction(1) if k < i else Fraction(0)) - shift for k in range(d)))
        return out
    omegas = [tuple(Fraction(1) if k < i else Fraction(0) for k in range(r)) for i in range(1, r + 1)]
    if family is Family.B:
        omegas[r - 1] = (half,) * r
    elif family is Family.D:
        omegas[r - 2] = (half,) * (r - 1) + (-half,)
        omegas[r - 1] = (half,) * r
    return omegas


@dataclass(frozen=True)
class RootSystemData:
    group: RankedGroup
    positive_roots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]
    fundamental_weights: tuple[Vector, ...]
    rho: Vector
    scale: Fraction = field(default=Fraction(1))

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        return self.scale * inner_product(u, v)

    @property
    def ambient_dim(self) -> int:
        return self.group.ambient_dim

    @property
    def rank(self) -> int:
        return self.group.rank

    @cached_property
    def group_dim(self) -> int:
        """Real dimension m of the compact group."""
        return 2 * len(self.positive_roots) + self.rank

    @cached_property
    def sparse_roots(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Positive roots as (index, coefficient) pairs over their nonzero entries.

        Every root of a classical system has integer epsilon coordinates.
        """
        return tuple(tuple((k, int(c)) for k, c in enumerate(a) if c) for a in self.positive_roots)

    def root_pairings(self, coords: Sequence[int]) -> list[int]:
        """Unscaled <coords, alpha> for every positive root, for integer coords."""
        return [sum(coords[k] * c for k, c in a) for a in self.sparse_roots]

    @cached_property
    def _sparse_coroots(self) -> tuple[tuple[tuple[tuple[int, int], ...], int], ...]:
        return tuple(
            (tuple((k, int(c)) for k, c in enumerate(a) if c), int(inner_product(a, a)))
            for a in self.simple_roots
        )

    def dynkin_labels(self, coords: Sequence) -> tuple[Fraction, ...]:
        """Pairings 2<mu, a>/<a, a> with the simple roots (scale-free)."""
        if len(coords) != self.ambient_dim:
            raise ValueError(f"dimension mismatch: {len(coords)} != {self.ambient_dim}")
        return tuple(
            Fraction(2 * sum(coords[k] * c for k, c in a), norm) for a, norm in self._sparse_coroots
        )

    def from_dynkin(self, labels: Sequence[int]) -> Vector:
        if len(labels) != self.rank:
            raise ValueError(f"expected {self.rank} Dynkin labels, got {len(labels)}")
        out = [Fraction(0)] * self.ambient_dim
        for c, w in zip(labels, self.fundamental_weights):
            for k in range(self.ambient_dim):
                out[k] += c * w[k]
        return tuple(out)

    def rescaled(self, scale: Fraction | int) -> "RootSystemData":
        """Same roots with the inner product multiplied by ``scale``."""
        scale = Fraction(scale)
        if scale <= 0:
            raise ValueError("scale must be positive")
        return RootSystemData(
            self.group, self.positive_roots, self.simple_roots,
            self.fundamental_weights, self.rho, scale,
        )


def build_root_system(group: RankedGroup | str) -> RootSystemData:
    if isinstance(group, str):
        group = RankedGroup.parse(group)
    return _build(group)


@lru_cache(maxsize=None)
def _build(group: RankedGroup) -> RootSystemData:
    fam, r = group.family, group.rank
    pos = _positive_roots(fam, r)
    dim = group.ambient_dim
    twice_rho = [0] * dim
    for a in pos:
        for k, c in enumerate(a):
            if c:
                twice_rho[k] += c
    rho = tuple(Fraction(c, 2) for c in twice_rho)
    return RootSystemData(
        group=group,
        positive_roots=tuple(pos),
        simple_roots=tuple(_simple_roots(fam, r)),
        fundamental_weights=tuple(_fundamental_weights(fam, r)),
        rho=rho,
    )
