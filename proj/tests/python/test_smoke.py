"""Smoke tests for the python bindings: exercise each exposed operation and
re-check a few frozen values against the C++ core."""

import pytest

import h1cube


def test_builtin_names():
    names = h1cube.builtin_names()
    assert "fricke-macbeath" in names
    assert "bring" in names
    assert "klein-quartic" in names


def test_certify_fricke_macbeath():
    certs = h1cube.certify(builtin="fricke-macbeath")
    assert len(certs) == 3  # one per order-7 class
    for cert in certs:
        assert cert["genus"] == 7
        assert cert["dim_h1"] == 14
        assert cert["d3"] == 0
        assert cert["verdict"] == "criterion satisfied"
        assert cert["decomposition"] == [{"degree": 7, "multiplicity": "2"}]


def test_certify_spec_text():
    spec = "kind = psl2\nq = 7\n"
    certs = h1cube.certify(spec=spec, signature=[2, 3, 7])
    assert {c["d3"] for c in certs} == {2}
    assert all(c["verdict"] == "criterion NOT satisfied" for c in certs)


def test_certify_with_classes():
    certs = h1cube.certify(builtin="bring", classes=["2b", "4a", "5a"])
    assert len(certs) == 1


def test_trilinear():
    report = h1cube.trilinear(8)
    assert report["triples_checked"] == 120
    assert report["violations"] == []


def test_scan():
    rows = h1cube.scan_psl2(50)
    by_q = {row["q"]: row for row in rows}
    assert by_q[8]["d3"] == 0
    assert by_q[7]["d3"] == 2
    assert all(row["d3"] > 0 for row in rows if row["q"] != 8)


def test_character_table():
    table = h1cube.character_table(spec="kind = symmetric\nn = 5\n")
    degrees = sorted(irr["degree"] for irr in table["irreducibles"])
    assert degrees == [1, 1, 4, 4, 5, 5, 6]


def test_number_theory_helpers():
    assert h1cube.macbeath_admissible(8)
    assert not h1cube.macbeath_admissible(11)
    assert h1cube.genus_from_signature(504, [2, 3, 7]) == 7
    assert h1cube.verify_identity_polynomial()


def test_errors_surface_as_exceptions():
    with pytest.raises(h1cube.H1CubeError):
        h1cube.genus_from_signature(10, [2, 3, 7])
    with pytest.raises(h1cube.H1CubeError):
        h1cube.certify(builtin="does-not-exist")
