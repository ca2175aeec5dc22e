import itertools
from fractions import Fraction

import pytest

from sprigidity.irreps import DominantWeight, casimir_eigenvalue, enumerate_irreps_by_casimir, weyl_dimension
from sprigidity.root_system import build_root_system
from sprigidity.spectrum import bi_invariant_spectrum, first_eigenvalue


def pairs(lines):
    return [(line.eigenvalue, line.multiplicity) for line in lines]


def test_c2_first_four_lines():
    assert pairs(bi_invariant_spectrum(build_root_system("C2"), 4)) == [(0, 1), (5, 16), (8, 25), (12, 100)]


def test_c2_six_lines_against_sweep():
    # independent sweep: every a1 >= a2 >= 0 with a1(a1+4) + a2(a2+2) <= 20
    sweep = {}
    for a1, a2 in itertools.product(range(6), repeat=2):
        if a1 >= a2:
            lam = a1 * (a1 + 4) + a2 * (a2 + 2)
            if lam <= 20:
                d = weyl_dimension(DominantWeight.from_dynkin("C2", (a1 - a2, a2)), build_root_system("C2"))
                sweep[lam] = sweep.get(lam, 0) + d * d
    assert pairs(bi_invariant_spectrum(build_root_system("C2"), 6)) == sorted(sweep.items())
    assert pairs(bi_invariant_spectrum(build_root_system("C2"), 6))[4:] == [(15, 256), (20, 196)]


@pytest.mark.parametrize("name", ["A1", "A2", "B3", "C1", "C4", "D4"])
def test_first_line_is_constants(name):
    (line,) = bi_invariant_spectrum(build_root_system(name), 1)
    assert (line.eigenvalue, line.multiplicity) == (0, 1)
    assert [w.is_zero() for w, _ in line.contributors] == [True]


@pytest.mark.parametrize("name, count", [("A2", 8), ("B3", 6), ("C3", 10), ("D4", 6)])
def test_lines_increasing_and_multiplicities_consistent(name, count):
    rs = build_root_system(name)
    lines = bi_invariant_spectrum(rs, count)
    assert len(lines) == count
    values = [line.eigenvalue for line in lines]
    assert values == sorted(set(values))
    for line in lines:
        assert line.multiplicity == sum(d * d for _, d in line.contributors)
        assert all(casimir_eigenvalue(w, rs) == line.eigenvalue for w, _ in line.contributors)


@pytest.mark.parametrize("n", [2, 3, 7, 20, 50])
def test_first_eigenvalue_cn(n):
    first = first_eigenvalue(build_root_system(f"C{n}"))
    assert first.value == 2 * n + 1
    assert first.multiplicity == 4 * n * n
    assert [s.weight.coeffs for s in first.minimizers] == [(1,) + (0,) * (n - 1)]


def test_first_eigenvalue_c1():
    first = first_eigenvalue(build_root_system("C1"))
    assert (first.value, first.multiplicity) == (3, 4)


def test_first_eigenvalue_a2_two_minimizers():
    rs = build_root_system("A2")
    first = first_eigenvalue(rs)
    # brute force over Dynkin labels well past the minimum
    values = {}
    for labels in itertools.product(range(5), repeat=2):
        if any(labels):
            w = DominantWeight.from_dynkin("A2", labels)
            values[labels] = casimir_eigenvalue(w, rs)
    lowest = min(values.values())
    assert first.value == lowest == Fraction(8, 3)
    assert sorted(s.weight.dynkin for s in first.minimizers) == [(0, 1), (1, 0)]
    assert [s.dim for s in first.minimizers] == [3, 3]
    assert first.multiplicity == 18


@pytest.mark.parametrize("n", range(1, 9))
def test_first_eigenvalue_strict_below_double(n):
    rs = build_root_system(f"C{n}")
    first = first_eigenvalue(rs)
    e1 = (1,) + (0,) * (n - 1)
    for s in enumerate_irreps_by_casimir(rs, 2 * (2 * n + 1)):
        if not s.weight.is_zero() and s.weight.coeffs != e1:
            assert first.value < s.casimir


@pytest.mark.parametrize("name", ["A3", "C3", "D4", "B3"])
@pytest.mark.parametrize("c", [Fraction(1, 3), Fraction(5, 2)])
def test_scale_invariance(name, c):
    rs = build_root_system(name)
    scaled = rs.rescaled(c)
    base, other = bi_invariant_spectrum(rs, 6), bi_invariant_spectrum(scaled, 6)
    assert [line.eigenvalue * c for line in base] == [line.eigenvalue for line in other]
    assert [line.multiplicity for line in base] == [line.multiplicity for line in other]
    assert [line.contributors for line in base] == [line.contributors for line in other]
    f1, f2 = first_eigenvalue(rs), first_eigenvalue(scaled)
    assert f2.value == c * f1.value
    assert f2.multiplicity == f1.multiplicity
    assert [s.weight for s in f1.minimizers] == [s.weight for s in f2.minimizers]
