"""Smoke tests for the Python bindings: tiny, exact, cross-checked values."""

import json

import pytest

core = pytest.importorskip("qaffine_core")


def test_exact_counts_small_table():
    assert [int(core.count_exact(0, 1, m)) for m in range(6)] == [1, 1, 1, 2, 2, 3]


def test_counts_match_product_side():
    counts = [int(core.count_exact(1, 2, m)) for m in range(13)]
    prod = [int(c) for c in core.product_coeffs("main-exact", 1, 2, 12)]
    assert counts == prod


def test_atleast_counts_are_convolutions():
    # at-least counts = sum_k p(k) * exact counts(m - k)
    for m in range(10):
        lhs = int(core.count_atleast(0, 1, m))
        rhs = sum(
            int(core.count_partitions(k)) * int(core.count_exact(0, 1, m - k))
            for k in range(m + 1)
        )
        assert lhs == rhs


def test_weyl_kac_equals_product():
    assert core.weyl_kac_coeffs(0, 1, 5) == ["1", "1", "1", "2", "2", "3"]
    assert core.weyl_kac_coeffs(2, 3, 20) == core.product_coeffs("main-exact", 2, 3, 20)


def test_verify_reports_pass():
    rep = core.verify_main(0, 1, False, 15)
    assert rep["status"] == "PASS" and rep["first_mismatch"] is None

    rep = core.verify_andrews_gordon(2, 2, 20)
    assert rep["status"] == "PASS"

    rep = core.verify_character("2l0", 6)
    assert rep["status"] == "PASS" and rep["floor_shift"] == 0

    rep = core.verify_character("2l1", 6)
    assert rep["status"] == "PASS" and rep["floor_shift"] == 1


def test_path_partition_round_trip():
    prefix = [1, 1]
    parts = core.path_to_partition(0, 1, prefix)
    assert core.partition_to_path(parts, 0, 1) == prefix


def test_split_merge_round_trip():
    for parts in core.enum_atleast(0, 1, 8):
        mu, nu = core.psi_split(parts, 0, 1)
        assert sum(s for s, _ in parts) == sum(s for s, _ in mu) + sum(nu)
        assert core.psi_merge(mu, nu, 0, 1) == parts


def test_json_documents_parse():
    doc = json.loads(core.gf_closed_json("l01", 5))
    assert doc["trunc_order"] == 5 and doc["q_min"] == 0
    assert all(len(t["colours"]) == 3 for t in doc["terms"])

    doc = json.loads(core.char_closed_json("2l1", 6))
    # The closed form keeps its stored floor one step below the first
    # nonzero slice; verify_character reports the gap as floor_shift = 1.
    assert doc["trunc_order"] == 6 and doc["a_min"] == -1
    assert all(t["a"] > doc["a_min"] for t in doc["terms"])
    assert all(int(t["coeff"]) > 0 for t in doc["terms"])


def test_validation_errors():
    with pytest.raises(ValueError):
        core.count_exact(2, 1, 5)  # i > n
    with pytest.raises(ValueError):
        core.andrews_gordon_count(1, 1, 5)  # r = 1 rejected
