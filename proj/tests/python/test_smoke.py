from fractions import Fraction

import pytest

import relbrauer as rb

E1 = [0, -1, 1, -10, -20]
E2 = [1, 1, 1, -10, -10]
HYPER = [-48, 0]


def test_group_law():
    assert rb.contains(E1, (5, 5))
    assert rb.multiply(E1, 5, (5, 5)) is None
    assert rb.add(E1, (5, 5), (5, 5)) == (16, -61)
    assert rb.point_order(E2, (8, 18)) == 4
    assert rb.discriminant(HYPER) == Fraction(7077888)


def test_torsion():
    t = rb.torsion(E1)
    assert t["structure"] == "Z/5"
    assert t["generators"] == [((5, 5), 5)]
    assert rb.torsion(E2)["invariants"] == [2, 4]


def test_hyperelliptic_cocycle():
    table = rb.cocycle_table(HYPER, 2, (0, 0), (0, 0))
    assert table == [[1, 1], [1, Fraction(-1, 48)]]
    result = rb.pairing(HYPER, 2, (0, 0), (0, 0), "quad:3")
    assert result["b_normalized"] == -3
    assert result["status"] == "trivial"


def test_index_five_and_noncyclic():
    assert rb.pairing(E1, 5, (5, 5), (5, 5), "cyclo:11:10")["b_normalized"] == 14641
    t = rb.multiply(E2, -1, (8, 18))
    assert rb.pairing(E2, 4, t, (8, 18), "cyclo:5")["b_normalized"] == 5
    assert rb.pairing(E2, 4, t, (-1, 0), "cyclo:5")["b_normalized"] == -1


def test_local_symbols():
    assert rb.hilbert_symbol(-1, -1, 0) == -1
    assert rb.hilbert_symbol(-1, -1, 2) == -1
    assert rb.hilbert_symbol(Fraction(-1), 3, 3) == -1
    assert rb.quaternion_is_split(4, 3)
    assert rb.mth_power_free_part(Fraction(1, 11), 5) == 14641


def test_report_and_errors():
    r = rb.report("relbr", "1 1 1 -10 -10", t="-8,18", m=4, ext="cyclo:5", gens="8,18;-1,0")
    assert [e["b_normalized"] for e in r["results"]] == ["5", "-1"]
    with pytest.raises(rb.RelbrError):
        rb.torsion([0, 0, 0, 0, 0])
    with pytest.raises(rb.RelbrError):
        rb.pairing(E1, 4, (5, 5), (5, 5), "cyclo:5")
    with pytest.raises(TypeError):
        rb.discriminant([0.5, 0, 0, 1, 0])
