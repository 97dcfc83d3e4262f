from fractions import Fraction

import pytest

import tempiric


def test_builtins():
    assert tempiric.builtin_names() == ["SL2R", "SO31", "Sp11"]
    sp = tempiric.builtin("Sp11")
    assert sp.name == "Sp11"
    assert sp.equal_rank
    assert tempiric.load(sp.to_json()) == sp


def test_norms_and_enumeration():
    assert tempiric.vogan_norm("Sp11", (0, 0)) == Fraction(8)
    assert tempiric.vogan_norm("SO31", (2,)) == 9
    assert tempiric.enumerate_ktypes("SL2R", 4) == [(0,), (-1,), (1,), (-2,), (2,)]
    assert tempiric.enumerate_ktypes("Sp11", Fraction(15, 2)) == []
    assert tempiric.ktype_dim("Sp11", (1, 2)) == 6


def test_branching():
    assert tempiric.restrict("Sp11", (1, 1)) == {(0,): 1, (2,): 1}
    assert tempiric.restrict("SL2R", (3,)) == {(1,): 1}
    assert tempiric.tensor_decompose("Sp11", (1, 0), (1, 0)) == {(0, 0): 1, (2, 0): 1}


def test_tempiric_table():
    rows = tempiric.tempiric_table("SL2R", 9)
    assert len(rows) == 7
    assert {r["kind"] for r in tempiric.tempiric_table("SO31", 16)} == {"PSConstituent"}


def test_matrix():
    so = tempiric.ck_matrix("SO31", 16)
    assert "inverse" in so
    sp = tempiric.ck_matrix("Sp11", 20)
    assert "inverse" not in sp
    assert sp["refusal"]["columns"] == ["PS(sigma={1},min=(0,1))", "PS(sigma={1},min=(1,0))"]


def test_verify_and_identity():
    checks = tempiric.verify("Sp11", 41)
    assert all(c["passed"] for c in checks)
    assert tempiric.dimension_identity("Sp11", {(1, 1): 1}, {(1, 1): 1}) == (2, 2)


def test_figure():
    txt = tempiric.figure("Sp11", 6)
    assert "# triangles=7 squares=12 pairs=6 circles=30" in txt
    assert tempiric.figure("Sp11", 2, "dot").startswith("graph")


def test_errors():
    with pytest.raises(tempiric.TempiricError):
        tempiric.builtin("Bogus")
    with pytest.raises(ValueError):
        tempiric.vogan_norm("Sp11", (1,))
    with pytest.raises(ValueError):
        tempiric.enumerate_ktypes("SL2R", -1)
