from __future__ import division, absolute_import, print_function

import os

import pytest

from dswitch.errors import FormatError, MalformedGraph6
from dswitch.graph import Graph, parse_graph6, emit_graph6, load_graph, save_graph


def test_triangle_graph6():
    k3 = Graph.complete(3)
    assert emit_graph6(k3) == b'Bw'
    assert emit_graph6(k3, header=True) == b'>>graph6<<Bw'
    assert parse_graph6('Bw') == k3
    assert parse_graph6(b'>>graph6<<Bw\n') == k3


def test_single_vertex_graph6():
    g = parse_graph6('@')
    assert g.n == 1
    assert g.edge_count == 0


def test_graph6_reports_offset_of_bad_byte():
    with pytest.raises(MalformedGraph6) as e:
        parse_graph6(b'garbage\xff')
    assert e.value.offset == 7
    assert e.value.witness == 7


def test_graph6_rejects_truncated_and_empty_input():
    with pytest.raises(MalformedGraph6) as e:
        parse_graph6('B')
    assert e.value.offset == 1
    with pytest.raises(MalformedGraph6):
        parse_graph6('')
    with pytest.raises(MalformedGraph6):
        parse_graph6('Bwé')


def test_random_graph_is_deterministic():
    g = Graph.random(20, seed=3)
    assert Graph.random(20, seed=3) == g
    assert parse_graph6(emit_graph6(g)) == g


def test_rows_must_be_symmetric():
    with pytest.raises(FormatError):
        Graph(2, [0b10, 0])
    with pytest.raises(FormatError):
        Graph(2, [0b01, 0])
    with pytest.raises(FormatError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(FormatError):
        Graph.from_adjacency([[0, 2], [2, 0]])


def test_complement_induced_relabel():
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert path.edge_count == 3
    assert path.complement().edges() == [(0, 2), (0, 3), (1, 3)]
    assert path.induced([1, 2, 3]).edges() == [(0, 1), (1, 2)]
    assert path.relabel([3, 2, 1, 0]) == path
    assert path.degree(1) == 2
    assert path.has_edge(2, 1) and not path.has_edge(0, 3)
    with pytest.raises(FormatError):
        path.relabel([0, 0, 1, 2])


def test_matrix_and_networkx_conversion():
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert Graph.from_adjacency(path.to_matrix()) == path
    assert Graph.from_networkx(path.to_networkx()) == path
    assert Graph.from_json(path.to_json()) == path
    with pytest.raises(FormatError):
        Graph.from_json({'n': 2})


def test_load_and_save(tmp_path):
    g = Graph.random(9, seed=1)
    for name in ('g.g6', 'g.json'):
        filename = os.path.join(str(tmp_path), name)
        save_graph(g, filename)
        assert load_graph(filename) == g
    with pytest.raises(FormatError):
        load_graph(os.path.join(str(tmp_path), 'missing.g6'))


@pytest.mark.parametrize('seed', range(100))
def test_graph6_round_trip_of_random_graphs(seed):
    graph = Graph.random(20, seed)
    assert parse_graph6(emit_graph6(graph)) == graph
