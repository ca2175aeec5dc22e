"""Explicit matrix models for sp(n) and the spin-j irreps of sp(1).

sp(n) is realized as 2n x 2n complex matrices [[a, b], [-conj(b), conj(a)]]
with a anti-Hermitian and b symmetric.  The basis is orthonormal for
<X, Y> = -c tr(XY), where c is calibrated so that the defining representation
has Casimir eigenvalue 2n + 1 (the value for highest weight e1 when the
epsilon basis is orthonormal).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .irreps import DominantWeight
from .obstruction import VerificationFailure, gss_expected_trace
from .root_system import Family, RankedGroup

MAX_BASIS_RANK = 6
SYMPLECTIC_TOL = 1e-12
GRAM_TOL = 1e-10
NORMALIZATION_TOL = 1e-10
HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-8
CLUSTER_REL_GAP = 1e-6


class AmbiguousClustering(RuntimeError):
    """An eigenvalue gap fell too close to the clustering threshold; retry with another seed."""


def symplectic_form(n: int) -> np.ndarray:
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def _raw_basis(n: int) -> list[np.ndarray]:
    """Basis orthogonal under -tr(XY), each element of unit -tr(X X) norm.

    Order: diagonal of a, off-diagonal real then imaginary parts of a (i < j),
    diagonal of b real then imaginary, off-diagonal of b real then imaginary.
    """
    def embed(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.block([[a, b], [-b.conj(), a.conj()]])

    zero = np.zeros((n, n), dtype=complex)
    mats = []
    for j in range(n):
        a = zero.copy()
        a[j, j] = 1j
        mats.append(embed(a, zero))
    for j in range(n):
        for k in range(j + 1, n):
            a = zero.copy()
            a[j, k], a[k, j] = 1, -1
            mats.append(embed(a, zero))
            a = zero.copy()
            a[j, k] = a[k, j] = 1j
            mats.append(embed(a, zero))
    for j in range(n):
        for phase in (1, 1j):
            b = zero.copy()
            b[j, j] = phase
            mats.append(embed(zero, b))
    for j in range(n):
        for k in range(j + 1, n):
            for phase in (1, 1j):
                b = zero.copy()
                b[j, k] = b[k, j] = phase
                mats.append(embed(zero, b))
    return [x / np.sqrt(-np.trace(x @ x).real) for x in mats]


@dataclass(frozen=True)
class LieBasis:
    group: RankedGroup
    matrices: np.ndarray  # shape (m, 2n, 2n)
    c: float

    @property
    def n(self) -> int:
        return self.group.rank

    @property
    def m(self) -> int:
        return len(self.matrices)

    def gram(self) -> np.ndarray:
        """Matrix of -c tr(X_i X_j)."""
        return -self.c * np.einsum("iab,jba->ij", self.matrices, self.matrices).real

    @property
    def gram_form(self) -> str:
        return f"<X,Y> = -{self.c:g} tr(XY)"


def _check_rank(n: int) -> None:
    if not 1 <= n <= MAX_BASIS_RANK:
        raise ValueError(f"n must lie in 1..{MAX_BASIS_RANK}, got {n}")


def verify_normalization(n: int) -> tuple[float, float]:
    """Calibrate c and return (c, max-entry residual of sum pi(X_i)^2 + (2n+1) Id)."""
    _check_rank(n)
    raw = _raw_basis(n)
    s = -sum(x @ x for x in raw)
    kappa = float(np.mean(np.diag(s).real))
    if np.max(np.abs(s - kappa * np.eye(2 * n))) > 1e-9 * max(kappa, 1.0):
        raise VerificationFailure(f"Casimir of the defining representation of sp({n}) is not scalar")
    c = kappa / (2 * n + 1)
    scaled = [x / np.sqrt(c) for x in raw]
    casimir = sum(x @ x for x in scaled)
    residual = float(np.max(np.abs(casimir + (2 * n + 1) * np.eye(2 * n))))
    if residual > NORMALIZATION_TOL:
        raise VerificationFailure(f"normalization residual {residual:.3e} for sp({n})")
    return c, residual


@lru_cache(maxsize=None)
def build_sp_basis(n: int) -> LieBasis:
    _check_rank(n)
    c, _ = verify_normalization(n)
    mats = np.array([x / np.sqrt(c) for x in _raw_basis(n)])
    basis = LieBasis(RankedGroup(Family.C, n), mats, c)
    j = symplectic_form(n)
    for x in mats:
        if np.max(np.abs(x + x.conj().T)) > SYMPLECTIC_TOL or np.max(np.abs(x @ j + j @ x.T)) > SYMPLECTIC_TOL:
            raise VerificationFailure("basis element outside the compact real form of sp(n)")
    if np.max(np.abs(basis.gram() - np.eye(basis.m))) > GRAM_TOL:
        raise VerificationFailure("basis is not orthonormal")
    return basis


def spin_matrices(j: Fraction | float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(J_x, J_y, J_z) for spin j in the |j, m> basis, m = j, j-1, ..., -j.

    J_+ has the real nonnegative entries sqrt(j(j+1) - m(m+1)) above the diagonal.
    """
    two_j = Fraction(j) * 2
    if two_j.denominator != 1 or two_j < 0:
        raise ValueError(f"j must be a nonnegative half-integer, got {j}")
    jj = float(j)
    ms = jj - np.arange(int(two_j) + 1)
    jp = np.diag(np.sqrt(jj * (jj + 1) - ms[1:] * (ms[1:] + 1)), 1).astype(complex)
    jm = jp.conj().T
    return (jp + jm) / 2, (jp - jm) / 2j, np.diag(ms).astype(complex)


_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def spin_representation(basis: LieBasis, j: Fraction | float) -> np.ndarray:
    """Images of the sp(1) basis under the spin-j representation.

    Each 2x2 basis element X is written as sum_k x_k (i sigma_k) and sent to
    sum_k x_k (2i J_k), which is the identity map for j = 1/2.
    """
    if basis.n != 1:
        raise ValueError("spin representations are only available for sp(1)")
    big = spin_matrices(j)
    out = []
    for x in basis.matrices:
        coeffs = [np.trace(x @ s) / 2j for s in _PAULI]
        out.append(sum(c * 2j * jk for c, jk in zip(coeffs, big)))
    return np.array(out)


@dataclass(frozen=True)
class MetricMatrix:
    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("metric matrix must be square")
        object.__setattr__(self, "entries", a)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.entries))

    @property
    def norm_sq(self) -> float:
        return float(np.sum(self.entries ** 2))


@dataclass(frozen=True)
class CasimirMatrix:
    matrix: np.ndarray
    rep: str

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)


def casimir_matrix(basis: LieBasis, a: MetricMatrix | np.ndarray, rep: str | Fraction = "defining") -> CasimirMatrix:
    """pi(-C_A) = -sum_j Y_j^2 with Y_j = sum_i a_ij pi(X_i).

    ``rep`` is ``"defining"`` or a spin j (number or ``"spin(3/2)"``).
    """
    a = a if isinstance(a, MetricMatrix) else MetricMatrix(a)
    if a.entries.shape != (basis.m, basis.m):
        raise ValueError(f"metric matrix must be {basis.m}x{basis.m}")
    if np.linalg.matrix_rank(a.entries) < basis.m:
        raise ValueError("metric matrix is singular")
    if rep == "defining":
        images, label = basis.matrices, f"defining rep of sp({basis.n})"
    else:
        j = _parse_spin(rep)
        images, label = spin_representation(basis, j), f"spin({j}) of sp(1)"
    ys = np.einsum("ij,iab->jab", a.entries, images)
    mat = -np.einsum("jab,jbc->ac", ys, ys)
    if np.max(np.abs(mat - mat.conj().T)) > HERMITIAN_TOL * max(1.0, np.max(np.abs(mat))):
        raise VerificationFailure("pi(-C_A) is not Hermitian")
    mat = (mat + mat.conj().T) / 2
    if np.min(np.linalg.eigvalsh(mat)) < -PSD_TOL * max(1.0, np.max(np.abs(mat))):
        raise VerificationFailure("pi(-C_A) is not positive semidefinite")
    return CasimirMatrix(mat, label)


def _parse_spin(rep) -> Fraction:
    if isinstance(rep, str):
        text = rep.strip()
        if text.startswith("spin(") and text.endswith(")"):
            text = text[5:-1]
        return Fraction(text)
    return Fraction(rep).limit_denominator(2)


def random_metric(m: int, rng: np.random.Generator) -> MetricMatrix:
    """Uniform [-1, 1] entries, |det| >= 1e-3, then a column sign flip and
    rescaling so that det(A) >= 1."""
    while True:
        a = rng.uniform(-1.0, 1.0, size=(m, m))
        det = np.linalg.det(a)
        if abs(det) >= 1e-3:
            break
    if det < 0:
        a[:, 0] = -a[:, 0]  # A -> A P with P orthogonal; the metric is unchanged
        det = -det
    if det < 1:
        a *= det ** (-1.0 / m) * (1 + 1e-9)
    out = MetricMatrix(a)
    assert out.det >= 1
    return out


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def verify_gss_trace(n: int, trials: int, seed: int) -> float:
    """Max relative residual between tr pi(-C_A) on the defining representation
    and (||A||^2 / m) * dim * casimir over seeded random A with det(A) >= 1."""
    if not 1 <= n <= 4:
        raise ValueError("n must lie in 1..4")
    basis = build_sp_basis(n)
    e1 = DominantWeight(basis.group, (1,) + (0,) * (n - 1))
    worst = 0.0
    for t in range(trials):
        a = random_metric(basis.m, _trial_rng(seed, t))
        got = np.trace(casimir_matrix(basis, a).matrix).real
        want = gss_expected_trace(basis.group, e1, a.norm_sq)
        worst = max(worst, float(abs(got - want) / abs(want)))
    return worst


def cluster_eigenvalues(values: np.ndarray, rel_gap: float = CLUSTER_REL_GAP) -> list[int]:
    """Sizes of clusters of sorted eigenvalues separated by gaps above threshold.

    threshold = rel_gap * max(spectral range, largest |eigenvalue|); a gap
    within a factor 10 of the threshold is ambiguous.
    """
    vals = np.sort(np.asarray(values, dtype=float))
    if len(vals) == 0:
        return []
    scale = max(vals[-1] - vals[0], np.max(np.abs(vals)))
    threshold = rel_gap * scale
    sizes = [1]
    for gap in np.diff(vals):
        if threshold / 10 < gap < threshold * 10:
            raise AmbiguousClustering(f"eigenvalue gap {gap:.3e} too close to threshold {threshold:.3e}")
        if gap >= threshold * 10:
            sizes.append(1)
        else:
            sizes[-1] += 1
    return sizes


def spin_cluster_sizes(j: Fraction | float, trials: int, seed: int) -> list[list[int]]:
    """Per-trial eigenvalue cluster sizes of pi_j(-C_A) for seeded random A."""
    basis = build_sp_basis(1)
    return [
        cluster_eigenvalues(casimir_matrix(basis, random_metric(basis.m, _trial_rng(seed, t)), Fraction(j)).eigenvalues())
        for t in range(trials)
    ]


def verify_kramers_parity(j: Fraction | float, trials: int, seed: int) -> bool:
    """True iff every eigenvalue cluster is of even size in every trial."""
    j = Fraction(j)
    if j not in (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2)):
        raise ValueError("j must be 1/2, 3/2 or 5/2")
    return all(size % 2 == 0 for sizes in spin_cluster_sizes(j, trials, seed) for size in sizes)
