import json

import pytest

from graphpoly.graphio import (
    from_edge_list,
    from_json_obj,
    graph_digest,
    load_graph,
    parse_graph_spec,
    save_graph,
    to_dot,
    to_edge_list,
    to_json_obj,
)
from graphpoly.graphs import SUM, build_cycle, build_digon, make_graph


def test_edge_list_roundtrip():
    g = make_graph(4, [(1, 2), (2, 4, SUM), (1, 2)])
    text = to_edge_list(g)
    assert text.splitlines()[0] == "n 4"
    assert from_edge_list(text) == g


def test_edge_list_format_exact():
    g = make_graph(3, [(1, 2), (2, 3, SUM)])
    assert to_edge_list(g) == "n 3\n1 2\n2 3 sum\n"


def test_edge_list_rejects_garbage():
    with pytest.raises(ValueError):
        from_edge_list("1 2\n")
    with pytest.raises(ValueError):
        from_edge_list("n 3\n1 2 prod\n")


def test_json_roundtrip():
    g = make_graph(3, [(1, 2), (1, 3, SUM)])
    obj = to_json_obj(g)
    assert obj == {"n": 3, "edges": [[1, 2, "diff"], [1, 3, "sum"]]}
    assert from_json_obj(json.loads(json.dumps(obj))) == g


def test_dot_contains_edges():
    dot = to_dot(make_graph(3, [(1, 2), (1, 2), (2, 3, SUM)]))
    assert dot.count("1 -- 2") == 2
    assert 'label="sum"' in dot


def test_digest_is_stable_and_distinguishes():
    c4 = build_cycle(4)
    assert graph_digest(c4) == graph_digest(build_cycle(4))
    assert graph_digest(c4) != graph_digest(build_cycle(5))


def test_parse_graph_spec():
    assert parse_graph_spec("cycle:5").n == 5
    assert parse_graph_spec("digon") == build_digon()
    g = parse_graph_spec("product:cycle:3:cycle:4")
    assert g.n == 12 and g.num_edges == 24
    g3 = parse_graph_spec("product:cycle:3:cycle:3:cycle:3")
    assert g3.n == 27 and g3.num_edges == 81
    assert parse_graph_spec("cyclepower:6:2").num_edges == 12
    with pytest.raises(ValueError):
        parse_graph_spec("torus:3")


def test_load_graph_file_and_spec(tmp_path):
    g = build_cycle(6)
    p = tmp_path / "g.txt"
    save_graph(g, p)
    assert load_graph(p) == g
    pj = tmp_path / "g.json"
    save_graph(g, pj, fmt="json")
    assert load_graph(pj) == g
    assert load_graph("cycle:6") == g
