import json

import pytest

from hypersimplicial.dualgraph.dualgraph_main import (
    build_dual_graph,
    check_dual_graph,
    coordinate_rule,
    export_graph,
    geometric_rule,
)
from hypersimplicial.geometry.cells import Cell
from hypersimplicial.subdivision.subdivision_main import build_subdivision


def parameter_triples(d_max, r_max):
    return [(r, d, i) for d in range(1, d_max + 1) for i in range(1, d + 1) for r in range(1, r_max + 1)]


def test_doubled_triangle_is_a_star():
    graph = build_dual_graph(build_subdivision(2, 2, 1))
    assert len(graph.nodes) == 4
    assert len(graph.edges) == 3
    center = graph.nodes.index(Cell(v=(0, 0, 0), j=2))
    assert graph.degrees()[center] == 3
    assert all(center in edge for edge in graph.edges)


def test_single_cell_graph():
    graph = build_dual_graph(build_subdivision(1, 3, 2))
    assert len(graph.nodes) == 1
    assert not graph.edges
    assert graph.is_connected()


def test_octahedral_slice_graph():
    graph = build_dual_graph(build_subdivision(2, 3, 2))
    assert (len(graph.nodes), len(graph.edges)) == (14, 24)


def test_segments_on_a_line_form_a_path():
    subdivision = build_subdivision(3, 1, 1)
    graph = build_dual_graph(subdivision)
    assert len(graph.nodes) == 3
    assert len(graph.edges) == 2
    assert graph.is_connected()
    assert check_dual_graph(subdivision).passed


def test_rules_on_a_single_pair():
    upper, lower = Cell(v=(0, 0, 0), j=2), Cell(v=(1, 0, 0), j=1)
    assert coordinate_rule(upper, lower)
    assert geometric_rule(upper, lower)
    assert not coordinate_rule(Cell(v=(1, 0, 0), j=1), Cell(v=(0, 1, 0), j=1))
    assert not geometric_rule(Cell(v=(1, 0, 0), j=1), Cell(v=(0, 1, 0), j=1))


def test_check_doubled_triangle():
    check = check_dual_graph(build_subdivision(2, 2, 1))
    assert check.pairs == 6
    assert check.passed
    assert check.edges == 3


@pytest.mark.parametrize("r, d, i", parameter_triples(3, 3))
def test_rules_agree_and_graph_is_connected(r, d, i):
    subdivision = build_subdivision(r, d, i)
    check = check_dual_graph(subdivision)
    assert check.passed, check.discrepancies[:5]
    assert check.connected
    assert check.max_degree <= 2 * (d + 1)


@pytest.mark.slow
@pytest.mark.parametrize("r, d, i", [(r, 4, i) for i in range(1, 5) for r in range(1, 4)])
def test_rules_agree_in_dimension_four(r, d, i):
    check = check_dual_graph(build_subdivision(r, d, i))
    assert check.passed, check.discrepancies[:5]
    assert check.connected


@pytest.mark.parametrize("r, d, i", [(2, 2, 1), (3, 3, 2), (2, 4, 2)])
def test_edges_join_unit_translation_steps(r, d, i):
    graph = build_dual_graph(build_subdivision(r, d, i))
    for a, b in graph.edges:
        step = [y - x for x, y in zip(graph.nodes[a].v, graph.nodes[b].v)]
        assert sorted(abs(part) for part in step) == [0] * d + [1]
        assert abs(graph.nodes[a].j - graph.nodes[b].j) == 1


@pytest.mark.parametrize("r, d, i", [(2, 2, 1), (3, 3, 2), (2, 4, 3)])
def test_graph_is_induced_by_the_translations(r, d, i):
    graph = build_dual_graph(build_subdivision(r, d, i))
    nodes = graph.nodes
    expected = {
        (a, b)
        for a in range(len(nodes))
        for b in range(a + 1, len(nodes))
        if sum(abs(x - y) for x, y in zip(nodes[a].v, nodes[b].v)) == 1
    }
    assert graph.edges == expected


def test_export_dot():
    text = export_graph(build_dual_graph(build_subdivision(2, 2, 1)), "dot")
    lines = text.strip().splitlines()
    assert lines[0] == "graph H_2_2_1 {"
    assert lines[-1] == "}"
    assert sum("[label=" in line for line in lines) == 4
    assert sum(" -- " in line for line in lines) == 3
    assert '    3 [label="v=(0,0,0);j=2"];' in lines


def test_export_json():
    payload = json.loads(export_graph(build_dual_graph(build_subdivision(1, 2, 1)), "json"))
    assert payload == {"nodes": [{"v": [0, 0, 0], "j": 1}], "edges": []}

    payload = json.loads(export_graph(build_dual_graph(build_subdivision(2, 3, 2)), "json"))
    assert len(payload["nodes"]) == 14
    assert len(payload["edges"]) == 24
    assert all(a < b for a, b in payload["edges"])


def test_export_rejects_unknown_format():
    with pytest.raises(ValueError):
        export_graph(build_dual_graph(build_subdivision(1, 2, 1)), "graphml")
