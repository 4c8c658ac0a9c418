import math

import pytest

abcmin = pytest.importorskip("abcmin")


def test_abc_of_edge_list():
    star4 = [(0, i) for i in range(1, 5)]
    assert abcmin.abc_index(star4) == pytest.approx(math.sqrt(12), rel=1e-15)
    # Vertex ids are arbitrary integers.
    assert abcmin.abc_index([(7, 2), (2, 9), (2, 40)]) == pytest.approx(
        math.sqrt(6), rel=1e-15
    )


def test_abc_of_text_and_round_trip():
    text = "# a star\n0 1\n0 2\n0 3\n"
    assert abcmin.abc_index(text) == pytest.approx(math.sqrt(6), rel=1e-15)
    edges = abcmin.parse(text)
    assert sorted(edges) == [(0, 1), (0, 2), (0, 3)]
    assert abcmin.parse(abcmin.serialize(edges)) == sorted(edges)


def test_canonical_code():
    assert abcmin.canonical_code([(0, 1)]) == "(())"
    relabeled = abcmin.canonical_code([(5, 0), (5, 1), (5, 9)])
    assert relabeled == abcmin.canonical_code([(0, 1), (0, 2), (0, 3)])


def test_classify():
    # Hub 0 carries three order-2 star branches (1, 2, 3).
    edges = [(0, 1), (0, 2), (0, 3)]
    edges += [(s, 10 * s + d) for s in (1, 2, 3) for d in (1, 2)]
    kinds = [c["kind"] for c in abcmin.classify(abcmin.parse(abcmin.serialize(edges)))]
    assert kinds.count("Root") == 1
    assert kinds.count("Star") == 3
    assert kinds.count("Leaf") == 6


def test_minimal_tree_record():
    rec = abcmin.minimal_tree(36)
    assert rec["family"] == "MixedOnly"
    assert rec["parameters"]["d_M"] == 16
    assert rec["parameters"]["k_M"] == 11
    assert rec["abc"] == pytest.approx(35.354818154559382, abs=1e-12)
    assert rec["unique"]
    assert not rec["cap_hit"]


def test_built_tree_reproduces_search_value():
    rec = abcmin.minimal_tree(53)
    edges = abcmin.minimal_tree_edges(53)
    assert abcmin.abc_index(edges) == rec["abc"]


def test_scan():
    res = abcmin.scan(18, 20)
    assert [r["t"] for r in res["records"]] == [18, 19, 20]
    assert res["records"][0]["family"] == "Star"
    assert res["records"][1]["family"] == "DoubleStar"
    assert 19 in res["change_points"]


def test_closed_form_and_asymptotics():
    cf = abcmin.closed_form_abc(1030)
    assert cf["pattern"] == "TenEleven"
    assert cf["abc"] == abcmin.minimal_tree(1030)["abc"]
    shape = abcmin.large_t_shape(1030, "TenEleven")
    assert (shape["d_R"], shape["k_R"], shape["s_R"]) == (103, 10, 0)
    assert abcmin.asymptotic_abc(10000) > abcmin.closed_form_abc(10000)["abc"]
    with pytest.raises(ValueError):
        abcmin.closed_form_abc(1029)
    with pytest.raises(ValueError):
        abcmin.asymptotic_abc(1194)


def test_oracle():
    res = abcmin.oracle_minimal(6)
    assert res["trees_considered"] == 7
    assert res["min_abc"] == pytest.approx(math.sqrt(30), rel=1e-15)
    assert len(res["minimizer_codes"]) == 1
    assert len(abcmin.enumerate_leaf_codes(7)) == 13


def test_verification():
    assert "noRandM2" in abcmin.verification_names()
    report = abcmin.run_verification("noRandM2")
    assert report["passed"]
    assert report["worst_point"] == {"d": 14}
    with pytest.raises(ValueError):
        abcmin.run_verification("bogus")


def test_table():
    rows = abcmin.table1()
    assert [r["k"] for r in rows] == list(range(5, 17))
    assert rows[5]["diff_120"] == 0.0
    assert rows[5]["c_120"] == pytest.approx(0.98472395, abs=5e-9)


def test_contributions():
    assert abcmin.leaf_contribution(10, 120) == pytest.approx(
        0.98472395081659122, abs=1e-14
    )
    assert abcmin.leaf_contribution(9) == pytest.approx(
        (14 / 45) * math.sqrt(10), rel=1e-15
    )
    assert abcmin.delta0(10, 120) < 0
    lo, val, hi = abcmin.f_bounds(100, 3)
    assert lo < val < hi


def test_transforms():
    # Hub 0 with an order-5 branch (vertex 1) and an order-1 branch (vertex 2).
    edges = [(0, 1), (0, 2), (2, 3)] + [(1, 4 + i) for i in range(5)]
    res = abcmin.move_leaf_between_branches(edges, 1, 2)
    recomputed = abcmin.abc_index(edges) - abcmin.abc_index(res["edges"])
    assert res["delta"] == pytest.approx(recomputed, abs=1e-12)
    assert res["delta"] == abcmin.move_leaf_delta(2, 5, 1)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        abcmin.minimal_tree(1)
    with pytest.raises(ValueError):
        abcmin.abc_index("0 1\n2 3\n")
    with pytest.raises(ValueError):
        abcmin.oracle_minimal(50)
