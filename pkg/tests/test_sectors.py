"""Characters, traces, eigenspace gradings, sector tops, and the module
catalog."""

from fractions import Fraction

import pytest

from voalab.exactfield import sc, sixth_root
from voalab.fockspace import named_vector, partitions
from voalab.sectors import (
    QSeries, brute_fixed_dims, char_L1, char_series,
    decompose_quarter_module, dim_full_lattice, eigenspace_char, graded_dim,
    klein_fixed_dim, module_catalog, partition_count,
    partition_count_even_length, primary_multiplicity, primary_space_basis,
    quarter_cube_is_minus_one, sector_top, sigma, sigma_eigendims,
    sigma_multiplet_dims, sigma_trace, sigma_trace_brute, theta_trace,
    top_level_eigenvalue, twisted_sector,
)


def test_partition_counts():
    assert [partition_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partition_count(10) == 42
    assert partition_count(6, min_part=2) == 4
    for n in range(13):
        brute = sum(1 for p in partitions(n) if len(p) % 2 == 0)
        assert partition_count_even_length(n) == brute


def test_graded_dims():
    # M(1)+ keeps the even-length partitions, M(1)- the odd ones
    for w in range(10):
        assert graded_dim("M(1)", w) == partition_count(w)
        assert graded_dim("M(1)+", w) + graded_dim("M(1)-", w) == partition_count(w)
        assert graded_dim("M(1)+", w) == partition_count_even_length(w)
    assert [graded_dim("V_Zb+", w) for w in range(9)] == [1, 0, 1, 1, 4, 4, 8, 10, 17]


def test_qseries():
    s = QSeries([1, 0, 3])
    assert s.coefficient(0) == 1
    assert s.coefficient(2) == 3
    assert s.coefficient(1) == 0
    with pytest.raises(ValueError):
        s.coefficient(5)
    t = QSeries([1, 0, 3, 9])
    assert s == t
    assert (s + t).coefficient(2) == 6
    assert (2 * s).coefficient(2) == 6


def test_char_series_consistency():
    vzb = char_series("V_Zb+", 8)
    for w in range(9):
        assert vzb.coefficient(w) == graded_dim("V_Zb+", w)


def test_char_L1_rows():
    # L(1, n^2) dimensions: p(t - n^2) - p(t - (n+1)^2)
    row0 = char_L1(0, 10)
    for t in range(11):
        assert row0.coefficient(t) == partition_count(t) - (partition_count(t - 1) if t >= 1 else 0)
    row2 = char_L1(2, 10)
    assert row2.coefficient(4) == 1
    assert row2.coefficient(3) == 0


def test_brute_fixed_dims_match_eigenspace_character():
    dims = brute_fixed_dims(6)
    fixed_char = eigenspace_char(0, 6)
    for w, d in dims.items():
        assert d == fixed_char.coefficient(w)
    assert dims[0] == 1
    total = char_series("V_Zb+", 6)
    other = eigenspace_char(1, 6)
    for w in range(7):
        assert fixed_char.coefficient(w) + 2 * other.coefficient(w) == total.coefficient(w)


def test_traces():
    assert dim_full_lattice(0) == 1
    assert dim_full_lattice(1) == 3
    assert dim_full_lattice(4) == 13
    assert theta_trace(0) == 1
    assert klein_fixed_dim(4) == 4
    for w in range(5):
        assert sigma_trace_brute(w) == sigma_trace(w)


def test_sigma_eigendims_small():
    # the weight 4 charged pair splits into the two nontrivial eigenlines
    dims = sigma_eigendims([named_vector("J"), named_vector("E")])
    assert dims == {0: 0, 1: 1, 2: 1}
    assert sigma_eigendims([named_vector("omega")]) == {0: 1, 1: 0, 2: 0}
    assert sigma(named_vector("X1")) == named_vector("X1") * sixth_root(2)
    assert sigma(named_vector("X2")) == named_vector("X2") * sixth_root(4)
    assert sigma(named_vector("omega")) == named_vector("omega")


def test_primary_multiplets():
    assert primary_multiplicity(0) == 1
    assert primary_multiplicity(2) == 2
    assert primary_multiplicity(3) == 1
    basis2 = primary_space_basis(2)
    assert len(basis2) == 2
    assert all(st.weight() == 4 for st in basis2)
    assert sigma_multiplet_dims(2) == {0: 0, 1: 1, 2: 1}
    assert sigma_multiplet_dims(3) == {0: 1, 1: 0, 2: 0}


def test_sector_tops():
    u = sector_top("V_b/4")
    assert u.weight() == Fraction(1, 4)
    J = named_vector("J")
    E = named_vector("E")
    assert top_level_eigenvalue(J, "V-") == sc(-6)
    assert top_level_eigenvalue(J, "V_b/2+") == sc(3)
    assert top_level_eigenvalue(E, "V_b/2+") == sc(1)
    assert top_level_eigenvalue(E, "V_b/2-") == sc(-1)
    assert top_level_eigenvalue(J, "V_b/8") == sc(Fraction(-3, 64))
    assert top_level_eigenvalue(E, "V_b/8") == sc(0)
    with pytest.raises(ValueError):
        sector_top("V_nowhere")


def test_twisted_sector_lowest():
    t11 = twisted_sector(1, 1, bound=Fraction(37, 36))
    grades = sorted(t11["graded"])
    assert grades[0] == Fraction(1, 36)
    assert len(t11["graded"][Fraction(1, 36)]) == 1
    t21 = twisted_sector(2, 1, bound=Fraction(10, 9))
    assert sorted(t21["graded"])[0] == Fraction(1, 9)


def test_quarter_module():
    q = decompose_quarter_module()
    assert q["weight_quarter"].weight() == Fraction(1, 4)
    assert set(q["spectrum"]) == {Fraction(1, 6), Fraction(-1, 6),
                                  Fraction(1, 2), Fraction(-1, 2)}
    assert quarter_cube_is_minus_one(samples=[q["weight_quarter"]])


def test_module_catalog():
    rows = module_catalog()
    assert len(rows) == 27
    names = [r["name"] for r in rows]
    assert len(set(names)) == 27
    aliases = [r for r in rows if r["alias_of"]]
    assert len(aliases) == 6
    by_name = {r["name"]: r for r in rows}
    assert by_name["(V+)^0"]["lowest_weight"] == 0
    assert by_name["W^(1,T1,1)"]["lowest_weight"] == Fraction(1, 36)
    assert by_name["V_b/8"]["lowest_weight"] == Fraction(1, 16)
    assert by_name["V_b/2+"]["alias_of"] == "V-"
    assert by_name["V^(T1,+)"]["alias_of"] == "V_b/8"
