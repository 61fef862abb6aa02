"""Smoke tests for the python bindings."""

import heron4


def test_heron_chain_345():
    doc = heron4.heron(5, "9/5", "12/5")
    assert doc["schema"] == 1
    assert doc["verdict"] is True
    assert doc["results"]["chain_value"] == "576"
    assert len(doc["results"]["steps"]) == 4
    assert all(cert["verdict"] for cert in doc["certificates"])


def test_heron_irrational_sides():
    doc = heron4.heron(4, 1, 2)
    assert doc["verdict"] is True
    assert doc["results"]["chain_value"] == "256"
    assert doc["results"]["triangle"]["a2"] == "5"
    assert doc["results"]["triangle"]["b2"] == "13"


def test_heron_rejects_bad_input():
    import pytest

    with pytest.raises(ValueError):
        heron4.heron(5, "not-a-rational", 1)
    with pytest.raises(ValueError):
        heron4.heron(3, 0, 2)  # c is not the longest side


def test_cube():
    doc = heron4.cube(4)
    assert doc["verdict"] is True
    assert doc["results"]["simplex_count"] == 24
    assert doc["results"]["piece_volume"]["exact"] == "1/24"
    assert doc["results"]["pairwise_congruent"] is True


def test_quarter():
    doc = heron4.quarter("1")
    assert doc["verdict"] is True
    assert doc["results"]["piece_volume"]["exact"] == "1/4"
    assert doc["results"]["delta_delta_p4_shared_orderings"] == 3


def test_multinomial_classes():
    doc = heron4.multinomial(3, 3)
    assert doc["verdict"] is True
    coefficients = sorted(int(c["coefficient"]) for c in doc["results"]["classes"])
    assert coefficients == [1, 1, 1, 3, 3, 3, 3, 3, 3, 6]
    assert doc["results"]["coefficient_total"] == "27"


def test_pythag_targets():
    doc = heron4.pythag((3, 4), (5, 12))
    assert doc["verdict"] is True
    assert doc["results"]["piece_count"] == 25
    assert doc["results"]["source_volume"]["exact"] == "4225"
    volumes = [t["volume"]["exact"] for t in doc["results"]["targets"]]
    assert volumes == ["225", "1296", "400", "2304"]
    assert doc["results"]["all_translations"] is True


def test_nicomachus():
    doc = heron4.nicomachus(24)
    assert doc["results"]["sum_of_cubes"] == "90000"
    assert doc["results"]["equal"] is True


def test_svg_emission(tmp_path):
    doc = heron4.quarter(1, svg_dir=str(tmp_path / "figs"))
    assert len(doc["figures"]) == 5  # four pieces and the assembly
    for fig in doc["figures"]:
        text = open(fig).read()
        assert text.startswith("<svg")


def test_deterministic_with_fixed_timestamp():
    a = heron4.heron_expand(5, 13, 4, timestamp="1970-01-01T00:00:00Z")
    b = heron4.heron_expand(5, 13, 4, timestamp="1970-01-01T00:00:00Z")
    assert a == b
    assert a["results"]["term_count"] == 81
    assert a["results"]["net_value"]["exact"] == "256"
