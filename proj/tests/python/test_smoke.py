import json

import pytest

import balanced_betti as bb


def test_clique_example_value():
    k332 = bb.clique_multipartite([3, 3, 2])
    assert k332["n"] == 8
    table = bb.graded_betti(k332)
    assert table[2][3] == 16


def test_fields_agree_on_cross_stacked_sphere():
    sphere = bb.stacked_cross_polytopal(4, 3, plan="star")
    base = bb.graded_betti(sphere)
    assert bb.graded_betti(sphere, field="gf32003") == base
    assert bb.graded_betti(sphere, field="qq") == base
    assert base == bb.cross_stacked_closed(3, 4)
    assert base[1][1:8] == [24, 80, 116, 88, 36, 8, 1]


def test_json_string_input_and_max_j():
    text = json.dumps(bb.cross_polytope(3))
    table = bb.graded_betti(text, max_j=1)
    assert table[1][1] == 3


def test_bounds():
    assert bb.bound("any_balanced", 12, 4, 5, 3, class_sizes=[3, 3, 3, 3]) == 5733
    assert bb.bound("balanced_cm_lps", 12, 4, 8, 4, class_sizes=[1, 3, 4, 4]) == 35
    assert bb.bound("pseudo_general", 12, 4, 3, 1) == 210
    assert bb.bound("balanced_cm", 12, 4, 0, 1, class_sizes=[3, 3, 3, 3]) is None
    assert bb.bth_largest_deg2(8, 12) == (2, 5)
    assert bb.bth_largest_sqfree_deg2(8, 4) == (1, 5)


def test_bound_report_on_stacked_sphere():
    report = bb.bound_report(bb.stacked_sphere(4, 12), ["pseudomanifold"])
    assert report["applicable"] and report["pass"]
    assert report["bounds"] == ["pseudo_general"]
    assert all(entry["slack"] == 0 for row in report["rows"] if row["j"] == 1 for entry in row["bounds"].values())


def test_errors():
    with pytest.raises(ValueError):
        bb.graded_betti("{not json")
    with pytest.raises(bb.CapExceeded):
        bb.graded_betti(bb.cross_polytope(5), cap=4)
    with pytest.raises(bb.EmptyPool):
        bb.conjecture_scan(2, 3)


def test_conjecture_scan_reports():
    report = bb.conjecture_scan(4, 3, samples=3, seed=1)
    assert report["d"] == 4 and report["k"] == 3
    assert len(report["samples"]) == 3
