from __future__ import division, absolute_import, print_function

import pytest

from dswitch.errors import UnsupportedField, SizeTooLarge, IndexOutOfRange
from dswitch.geometry import (q_number, ProjectiveSpace, q_triangular, SubplaneSite,
                              subplane_sites, switch_subplane, max_clique_report,
                              isomorphic)
from dswitch.graph import Graph
from dswitch.designs import validate, DesignParams
from dswitch.switching import verify_site, r_cospectral


@pytest.fixture(scope='module')
def space():
    return ProjectiveSpace(4, 2)


@pytest.fixture(scope='module')
def plane_switch(space):
    return switch_subplane(space, 0, '(1 2)')


def test_q_numbers():
    assert q_number(3, 2) == 7
    assert q_number(4, 2) == 15
    assert q_number(3, 3) == 13


def test_projective_space_counts(space):
    assert len(space.points) == 15
    assert len(space.lines) == 35
    assert len(space.planes) == 15
    assert all(len(line) == 3 for line in space.lines)
    assert all(len(plane) == 7 for plane in space.planes)
    assert len(space.plane_lines(0)) == 7
    with pytest.raises(IndexOutOfRange):
        space.plane_lines(15)


def test_projective_plane_over_three():
    P = ProjectiveSpace(3, 3)
    assert len(P.points) == 13
    assert len(P.lines) == 13


def test_q_triangular_graph():
    G = q_triangular(4, 2)
    assert G.n == 35
    assert all(G.degree(x) == 18 for x in range(G.n))


def test_q_triangular_bounds():
    with pytest.raises(UnsupportedField):
        q_triangular(4, 5)
    with pytest.raises(UnsupportedField):
        ProjectiveSpace(3, 4)
    with pytest.raises(SizeTooLarge):
        q_triangular(5, 3)


def test_subplane_site_is_a_fano_plane(space):
    site = SubplaneSite(space.line_graph(), space, 0)
    assert site.v == 7
    assert validate(site.design) == DesignParams(3, 1)
    assert site.ac() == Graph.complete(7)
    assert len(subplane_sites(space)) == 15


def test_collineation_is_detected(space):
    res = switch_subplane(space, 0, '()')
    assert res.collineation
    assert res.switched == res.original


def test_switched_graph_is_cospectral(plane_switch):
    assert not plane_switch.collineation
    assert r_cospectral(plane_switch.original, plane_switch.switched)
    report = verify_site(plane_switch.site, plane_switch.scheme)
    assert report.ok


def test_switched_graph_has_new_cliques(plane_switch):
    original = max_clique_report(plane_switch.original)
    switched = max_clique_report(plane_switch.switched)
    assert not original.has_size(4)
    assert switched.has_size(4)
    witness = switched.witnesses[4]
    graph = plane_switch.switched
    assert all(graph.has_edge(a, b) for a in witness for b in witness if a != b)


def test_switched_graph_is_not_isomorphic(plane_switch):
    assert not isomorphic(plane_switch.original, plane_switch.switched)


def test_clique_report():
    res = max_clique_report(Graph.complete(5))
    assert dict(res.sizes) == {5: 1}
    assert res.max_size == 5
    assert res.to_json()['witnesses'] == {'5': [0, 1, 2, 3, 4]}
    res = max_clique_report(Graph(3))
    assert res.max_size == 1
    with pytest.raises(SizeTooLarge):
        max_clique_report(Graph(5), max_vertices=4)


def test_isomorphic():
    g = Graph.random(12, seed=5)
    sigma = [11 - i for i in range(12)]
    assert isomorphic(g, g.relabel(sigma))
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not isomorphic(path, star)
    assert not isomorphic(path, Graph(5))
    with pytest.raises(SizeTooLarge):
        isomorphic(g, g, max_vertices=10)
