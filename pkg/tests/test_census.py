"""Census enumeration, the JSONL format, parallel determinism, verify."""

import json

import pytest

from rzformal import Graph, run_census, verify_census
from rzformal.census import all_complexes, compute_record, census_tasks, flag_complexes
from rzformal.simplicial import vertex_mask


def test_flag_complex_counts():
    # one flag complex per graph
    assert len(list(flag_complexes(2))) == 2
    assert len(list(flag_complexes(3))) == 8
    assert len(list(flag_complexes(4))) == 64


def test_all_complex_counts():
    # complexes with every singleton present, up to nothing: the order
    # ideals of the nonempty-subset lattice that contain all vertices
    assert len(list(all_complexes(1))) == 1
    assert len(list(all_complexes(2))) == 2
    assert len(list(all_complexes(3))) == 9
    assert len(list(all_complexes(4))) == 114


def test_all_complexes_regression_membership():
    found = {tuple(sorted(k.facets)) for k in all_complexes(2)}
    two_points = vertex_mask([1]), vertex_mask([2])
    edge = (vertex_mask([1, 2]),)
    assert found == {tuple(sorted(two_points)), edge}


def test_record_json_key_order_and_content():
    k = Graph.cycle(4).clique_complex()
    line = compute_record(k, vertex_mask([1])).json_line()
    obj = json.loads(line)
    assert list(obj) == [
        "m",
        "facets",
        "is_flag",
        "I",
        "verdict_flag",
        "verdict_general",
        "verdict_oracle",
        "verdict_torus",
        "betti_total_ambient",
        "betti_total_fixed",
        "agree",
    ]
    assert obj["verdict_flag"] == "formal"
    assert obj["agree"] is True
    assert " " not in line  # compact separators


def test_record_for_non_flag_complex_has_null_flag_verdict():
    from rzformal.simplicial import SimplicialComplex

    tri = SimplicialComplex.from_facets(3, [[1, 2], [2, 3], [1, 3]])
    obj = json.loads(compute_record(tri, 0).json_line())
    assert obj["is_flag"] is False
    assert obj["verdict_flag"] is None
    assert obj["agree"] is True


def test_census_tasks_one_per_complex():
    tasks = list(census_tasks(2, "flag"))
    assert len(tasks) == 2
    assert len(list(census_tasks(3, "all-complexes"))) == 9


def test_census_tasks_reject_unknown_mode():
    with pytest.raises(ValueError):
        list(census_tasks(2, "all"))


def test_run_census_flag_m2(tmp_path):
    out = tmp_path / "flag2.jsonl"
    summary = run_census(2, "flag", out)
    assert summary["records"] == 8
    assert summary["complexes"] == 2
    assert summary["disagreements"] == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 8
    for line in lines:
        obj = json.loads(line)
        assert obj["agree"] is True


def test_run_census_all_complexes_m3(tmp_path):
    out = tmp_path / "all3.jsonl"
    summary = run_census(3, "all-complexes", out)
    assert summary["records"] == 72
    assert summary["disagreements"] == 0


def test_parallel_census_is_byte_identical(tmp_path):
    serial = tmp_path / "serial.jsonl"
    parallel = tmp_path / "parallel.jsonl"
    run_census(3, "flag", serial, jobs=1)
    run_census(3, "flag", parallel, jobs=2)
    assert serial.read_bytes() == parallel.read_bytes()


def test_verify_census_clean(tmp_path):
    out = tmp_path / "c.jsonl"
    run_census(2, "flag", out)
    result = verify_census(out)
    assert result["records"] == 8
    assert result["mismatches"] == []
    assert result["corrupt"] == []


def test_verify_census_reports_tampered_line(tmp_path):
    out = tmp_path / "c.jsonl"
    run_census(2, "flag", out)
    lines = out.read_text().splitlines()
    lines[2] = lines[2].replace('"betti_total_ambient":', '"betti_total_ambient":9')
    out.write_text("\n".join(lines) + "\n")
    result = verify_census(out)
    assert result["corrupt"] == []
    assert result["mismatches"] == [3]


def test_verify_census_reports_corrupt_line(tmp_path):
    out = tmp_path / "c.jsonl"
    run_census(2, "flag", out)
    lines = out.read_text().splitlines()
    lines[5] = "this is not json"
    out.write_text("\n".join(lines) + "\n")
    result = verify_census(out)
    assert result["corrupt"] == [6]


def test_verify_census_empty_file(tmp_path):
    out = tmp_path / "empty.jsonl"
    out.write_text("")
    result = verify_census(out)
    assert result["records"] == 0
    assert result["mismatches"] == []


def test_census_caps(tmp_path, monkeypatch):
    with pytest.raises(ValueError):
        run_census(6, "flag", tmp_path / "x.jsonl")
    with pytest.raises(ValueError):
        run_census(5, "all-complexes", tmp_path / "y.jsonl")
    monkeypatch.setenv("RZFORMAL_CENSUS_FLAG_CAP", "2")
    with pytest.raises(ValueError):
        run_census(3, "flag", tmp_path / "z.jsonl")
    monkeypatch.delenv("RZFORMAL_CENSUS_FLAG_CAP")
    run_census(3, "flag", tmp_path / "ok.jsonl")


def test_every_all_complex_has_all_vertices():
    for k in all_complexes(3):
        assert k.ghost_mask == 0
        assert k.vertices_mask == 0b111
