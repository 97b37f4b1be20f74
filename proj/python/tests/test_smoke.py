import pytest

import descalg


def test_printed_product():
    p = descalg.multiply("[4]", "[1,3]", 4)
    assert p == {"[1,3]": 2, "[1,2,1]": 1, "[1,1,2]": 1}
    assert descalg.format_product(p) == "2*[1,3] + 1*[1,2,1] + 1*[1,1,2]"


def test_rule_matches_oracle_in_rank_four():
    for p in descalg.enumerate_basis(4):
        for q in descalg.enumerate_basis(4):
            assert descalg.multiply(p, q, 4) == descalg.oracle_multiply(p, q, 4)


def test_type_b():
    assert descalg.format_product(descalg.multiply("[2]", "[2]", 2, type="B")) == "2*[2] + 1*[1,1]"
    assert descalg.oracle_multiply("[2]", "[2]", 2, type="B", strategy="convolution") == {"[2]": 2, "[1,1]": 1}
    assert len(descalg.enumerate_basis(3, type="B")) == 8


def test_templates():
    ts = descalg.templates("[1,1]", "[2]", 4)
    assert len(ts) == 9
    assert all(sum(map(sum, t["z"])) + sum(map(sum, t["y"])) == 4 for t in ts)
    assert descalg.templates("[]", "[]", 4)[0]["z"] == [[4]]


def test_indices():
    assert descalg.enumerate_basis(2) == ["[]", "[2]", "[2]'", "[1,1]"]
    assert descalg.subset_of("[1,3]", 4) == ("{s_1',s_1}", "{s_2,s_3}")
    assert descalg.class_of("[2,2]'", 4) == "Cn'"
    assert descalg.normalize_index("[3,1]'", 4) == "[3,1]'"


def test_errors():
    with pytest.raises(descalg.Error):
        descalg.multiply("[1,3]'", "[4]", 4)
    with pytest.raises(ValueError):
        descalg.multiply("[4", "[4]", 4)
    with pytest.raises(descalg.Error):
        descalg.verify("bogus", 4)


def test_verify():
    report = descalg.verify("quotient", "3..4")
    assert report["pass"]
    assert [r["n"] for r in report["reports"]] == [3, 4]
    assert descalg.run_cli(["bijection", "--n", "4", "[2]"])[0] == 0
