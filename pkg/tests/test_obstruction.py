import math
from fractions import Fraction

import numpy as np
import pytest

from sprigidity.irreps import DominantWeight, FSType, enumerate_irreps_by_dim
from sprigidity.obstruction import (
    Conclusion,
    PruningError,
    amgm_rigidity_check,
    diophantine_solutions,
    gss_expected_trace,
    parity_prune,
    scan_groups,
    rigidity_verdict,
    scan_remark,
)
from sprigidity.root_system import build_root_system
from sprigidity.spectrum import first_eigenvalue


def as_set(solutions):
    return {frozenset((s.weight.label(), c) for s, c in sol.entries) for sol in solutions}


def test_c1_solutions():
    sols = parity_prune(diophantine_solutions(build_root_system("C1")))
    assert as_set(sols) == {frozenset({("e1", 2)}), frozenset({("3e1", 1)})}
    pruned = {sol.describe(): sol.pruned for sol in sols}
    assert pruned == {"e1 x2": False, "3e1 x1": True}


def test_c2_solutions():
    sols = parity_prune(diophantine_solutions(build_root_system("C2")))
    assert [(sol.describe(), sol.pruned) for sol in sols] == [("e1 x4", False), ("2e1+e2 x1", True)]
    assert "odd number" in sols[1].prune_reason


@pytest.mark.parametrize("name", ["C3", "C5"])
def test_unique_solution(name):
    sols = diophantine_solutions(build_root_system(name))
    assert [sol.describe() for sol in sols] == ["e1 x" + str(2 * int(name[1:]))]


def test_c4_solutions():
    sols = parity_prune(diophantine_solutions(build_root_system("C4")))
    assert as_set(sols) == {frozenset({("e1", 8)}), frozenset({("e1", 2), ("e1+e2+e3", 1)})}
    assert [sol.pruned for sol in sols] == [False, True]


@pytest.mark.parametrize("name", [f"C{n}" for n in range(1, 11)] + ["A1", "A2", "A3", "B3", "B4", "D4", "D5"])
def test_solution_invariants(name):
    rs = build_root_system(name)
    first = first_eigenvalue(rs)
    sols = diophantine_solutions(rs, first)
    assert sum(sol.is_canonical(first) for sol in sols) == 1
    for sol in sols:
        assert sol.total == first.multiplicity
        for s, c in sol.entries:
            assert 1 <= c <= s.dim
            assert not s.weight.is_zero()


def _count_oracle(dims, target):
    # generating function prod_i (1 + x^d + ... + x^{d*d}); coefficient of x^target
    poly = [1] + [0] * target
    for d in dims:
        new = [0] * (target + 1)
        for e, coef in enumerate(poly):
            if coef:
                for k in range(0, d + 1):
                    if e + k * d > target:
                        break
                    new[e + k * d] += coef
        poly = new
    return poly[target]


def _vector_oracle(dims, target):
    # forward DP over irreps, storing every partial count vector per residual sum
    table = {0: [()]}
    for d in dims:
        nxt = {}
        for total, vecs in table.items():
            for k in range(0, d + 1):
                t = total + k * d
                if t > target:
                    break
                nxt.setdefault(t, []).extend(v + (k,) for v in vecs)
        table = nxt
    return table.get(target, [])


ORACLE_GROUPS = [f"C{n}" for n in range(1, 8)] + ["A1", "A2", "A3", "A4", "B3", "B4", "B5", "B6", "D5", "D6"]


@pytest.mark.parametrize("name", ORACLE_GROUPS)
def test_solutions_match_independent_oracle(name):
    rs = build_root_system(name)
    first = first_eigenvalue(rs)
    target = first.multiplicity
    assert target <= 200
    irreps = [s for s in enumerate_irreps_by_dim(rs, target) if not s.weight.is_zero()]
    dims = [s.dim for s in irreps]
    expected = {
        frozenset((irreps[i].weight, c) for i, c in enumerate(vec) if c)
        for vec in _vector_oracle(dims, target)
    }
    got = {frozenset((s.weight, c) for s, c in sol.entries) for sol in diophantine_solutions(rs, first)}
    assert got == expected
    assert len(got) == _count_oracle(dims, target)


def test_oracle_sanity():
    assert _count_oracle([2, 3], 4) == 1
    assert sorted(_vector_oracle([1, 2], 3)) == [(1, 1)]


@pytest.mark.parametrize("n", range(1, 21))
def test_canonical_survives(n):
    v = rigidity_verdict(f"C{n}")
    assert v.parity_applied
    assert v.canonical_survives_uniquely
    assert v.conclusion is Conclusion.RIGID
    assert v.first.value == 2 * n + 1 and v.first.multiplicity == 4 * n * n
    survivors = [s for s in v.solutions if not s.pruned]
    assert len(survivors) == 1 and survivors[0].describe() == f"e1 x{2 * n}"
    for sol in v.solutions:
        if sol.pruned:
            assert any(s.fs_type is FSType.QUATERNIONIC and c % 2 for s, c in sol.entries)


def test_parity_requires_types():
    sols = diophantine_solutions(build_root_system("A2"))
    with pytest.raises(PruningError):
        parity_prune(sols)


def test_a2_inconclusive():
    v = rigidity_verdict("A2")
    assert not v.parity_applied
    assert v.conclusion is Conclusion.INCONCLUSIVE
    assert v.solution_count == v.surviving_count == 30
    assert v.first.multiplicity == 18


def test_a1_two_solutions():
    assert rigidity_verdict("A1").solution_count == 2


def test_scan_groups_and_bound():
    assert [str(g) for g in scan_groups(4)] == ["A1", "A2", "A3", "A4", "B3", "B4", "D4"]
    with pytest.raises(ValueError):
        scan_remark(1)
    counts = {str(v.group): v.solution_count for v in scan_remark(4)}
    assert counts == {"A1": 2, "A2": 30, "A3": 62, "A4": 221, "B3": 8, "B4": 3, "D4": 1401}


@pytest.mark.parametrize("name", ["C2", "C4", "A2", "B3"])
def test_verdict_scale_invariant(name):
    rs = build_root_system(name)
    a = rigidity_verdict(name, rs)
    b = rigidity_verdict(name, rs.rescaled(Fraction(7, 3)))
    assert b.first.value == Fraction(7, 3) * a.first.value
    assert [s.describe() for s in a.solutions] == [s.describe() for s in b.solutions]
    assert (a.conclusion, a.surviving_count) == (b.conclusion, b.surviving_count)


@pytest.mark.parametrize("n", range(1, 6))
def test_gss_trace_at_identity(n):
    e1 = DominantWeight(f"C{n}", (1,) + (0,) * (n - 1))
    m = n * (2 * n + 1)
    assert gss_expected_trace(f"C{n}", e1, m) == pytest.approx(2 * n * (2 * n + 1))


def test_gss_trace_examples():
    assert gss_expected_trace("C2", DominantWeight("C2", (1, 0)), 20) == pytest.approx(40)
    assert gss_expected_trace("C1", DominantWeight("C1", (1,)), 3) == pytest.approx(6)
    with pytest.raises(ValueError):
        gss_expected_trace("C1", DominantWeight("C1", (1,)), 0)


def test_amgm_identity_passes():
    assert amgm_rigidity_check([1.0] * 10, 1e-10)


def test_amgm_off_identity_fails():
    assert not amgm_rigidity_check([2.0, 0.5, 1.0, 1.0], 1e-10)
    # det 1 but trace too large
    assert not amgm_rigidity_check([4.0, 0.25, 1.0], 1e-6)


def test_amgm_orthogonal():
    rng = np.random.default_rng(3)
    for m in (3, 10, 21):
        q, _ = np.linalg.qr(rng.standard_normal((m, m)))
        assert amgm_rigidity_check(np.linalg.eigvalsh(q.T @ q), 1e-10)


def test_amgm_nearby_within_bound():
    eps = 1e-7
    vals = [1 + eps, 1 / (1 + eps), 1.0]
    assert amgm_rigidity_check(vals, 1e-10)
    assert max(abs(v - 1) for v in vals) < 4 * math.sqrt(2e-13) + 1e-6


@pytest.mark.parametrize("bad", [[], [1.0, 0.0], [1.0, -2.0]])
def test_amgm_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        amgm_rigidity_check(bad, 1e-10)
