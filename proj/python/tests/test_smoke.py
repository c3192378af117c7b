import pytest

import wci


def test_build_from_dict_and_basic_invariants():
    r = wci.build({"kind": "zn", "n": 6})
    assert isinstance(r, wci.Ring)
    assert r.order() == 6
    assert r.unital()
    assert r.one() == 1
    assert r.units() == [1, 5]
    assert r.idempotents() == [0, 1, 3, 4]
    assert not r.is_uniquely_clean()


def test_build_from_json_text():
    r = wci.build('{"kind": "zn", "n": 4}')
    assert r.order() == 4
    assert r.is_local()
    assert r.is_uniquely_clean()


def test_indices_and_chi():
    r = wci.build({"kind": "zn", "n": 6})
    assert r.weak_clean_index() == {"value": 2, "argmax": 1}
    assert r.weak_clean_index(threads=4) == {"value": 2, "argmax": 1}
    assert r.clean_index() == {"value": 2, "argmax": 2}

    rep = r.chi(4)
    assert rep["element"] == 4
    assert rep["members"] == [1, 3]
    assert rep["size"] == 2
    assert [w["idempotent"] for w in rep["witnesses"]] == [1, 3]


def test_symbolic_ring():
    s = wci.build({"kind": "symbolic_t3"})
    assert isinstance(s, wci.SymbolicRing)
    assert len(s.idempotents()) == 8
    rep = s.chi((0, 0, 1))
    assert rep["size"] == 3
    assert rep["element"] == [0, 0, 1]
    pred = s.predicate_win3()
    assert pred["matched"]
    assert pred["claimed_win"] == 3


def test_run_suite_classification():
    rep = wci.run_suite("classification")
    assert rep["suite"] == "classification"
    assert rep["seed"] == 1729
    assert rep["results"]
    assert all(row["outcome"] in ("pass", "na") for row in rep["results"])


def test_census():
    c = wci.census()
    assert c["win3_found"] is False
    assert c["max_win"] == 8
    assert c["skipped"] == ["T(Z,Z,Z_3)"]
    assert len(c["census"]) == 29


def test_catalog_and_suite_names():
    cat = wci.default_catalog()
    assert len(cat["entries"]) == 30
    assert cat["entries"][0]["name"] == "Z_1"
    assert "all" in wci.suite_names()


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        wci.build({"kind": "frob"})
    with pytest.raises(RuntimeError):
        wci.build({"kind": "zn", "n": 100}, size_cap=50)
    r = wci.build({"kind": "zn", "n": 5})
    with pytest.raises(ValueError):
        r.chi(9)
