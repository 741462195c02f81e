'''
Projective spaces over GF(2) and GF(3), q-triangular graphs and the
switching of a plane inside them

The lines of a plane alpha form a site of J_q(n, 2): their induced
subgraph is complete and every other line meets alpha in at most one
point, so it sees a point-pencil of alpha or nothing. Permuting the
pencils of alpha switches the graph. If the permutation is not a
collineation the switched graph has maximal cliques of size q + 2,
which the original does not have.

Config Example:
---------------

    geometry:
      q: 2
      n: 4
      switch_plane: 0
      perm: (1 2)
'''
from __future__ import division, absolute_import, print_function

import logging

from collections import Counter
from itertools import combinations, product

import networkx as nx

from .classify import induces_automorphism
from .designs import IncidenceStructure
from .errors import SizeTooLarge, UnsupportedField, ShapeMismatch, IndexOutOfRange
from .graph import Graph
from .helper import parse_cycles
from .switching import SwitchSite, derive_R_perm, apply_switch

FIELDS = (2, 3)
MAX_LINES = 400
MAX_CLIQUE_VERTICES = 130
MAX_ISO_VERTICES = 64

logger = logging.getLogger('dswitch.geometry')


def q_number(k: int, q: int) -> int:
    '''
    [k]_q = (q^k - 1) / (q - 1)
    '''
    return (q ** k - 1) // (q - 1)


class ProjectiveSpace:
    '''
    PG(n - 1, q) for q in {2, 3}

    Points are the nonzero vectors of GF(q)^n with first nonzero entry
    1, in lexicographic order. Lines and planes are sorted tuples of
    point indices, sorted lexicographically.
    '''

    def __init__(self, n: int, q: int) -> None:
        if q not in FIELDS:
            raise UnsupportedField(f'Only GF(2) and GF(3) are supported, got q={q}')
        if n < 2:
            raise ShapeMismatch(f'PG(n - 1, q) needs n >= 2, got {n}')
        self.n = n
        self.q = q
        self.points = [v for v in product(range(q), repeat=n) if self._is_normal(v)]
        self.index = {v: i for i, v in enumerate(self.points)}
        self.lines = self._spans(2)
        self.planes = self._spans(3) if n >= 3 else []
        logger.debug(f'PG({n - 1},{q}): {len(self.points)} points, '
                     f'{len(self.lines)} lines, {len(self.planes)} planes')

    def __repr__(self) -> str:
        return f'ProjectiveSpace(n={self.n}, q={self.q})'

    @staticmethod
    def _is_normal(v: tuple) -> bool:
        for x in v:
            if x:
                return x == 1
        return False

    def normalize(self, v) -> tuple:
        q = self.q
        for x in v:
            if x:
                inv = pow(x, q - 2, q)
                return tuple(y * inv % q for y in v)
        raise ShapeMismatch('The zero vector is not a point')

    def span(self, indices) -> tuple:
        '''
        Point indices of the subspace spanned by the given points
        '''
        q, n = self.q, self.n
        gens = [self.points[i] for i in indices]
        res = set()
        for coeffs in product(range(q), repeat=len(gens)):
            v = tuple(sum(c * g[k] for c, g in zip(coeffs, gens)) % q for k in range(n))
            if any(v):
                res.add(self.index[self.normalize(v)])
        return tuple(sorted(res))

    def _spans(self, k: int) -> list:
        found = set()
        size = q_number(k, self.q)
        for gens in combinations(range(len(self.points)), k):
            if any(set(gens).issubset(s) for s in found):
                continue
            s = self.span(gens)
            if len(s) == size:
                found.add(s)
        return sorted(found)

    def plane_lines(self, plane_index: int) -> list:
        '''
        Indices of the lines contained in a plane
        '''
        if not 0 <= plane_index < len(self.planes):
            raise IndexOutOfRange(f'No plane {plane_index}', witness=plane_index)
        plane = set(self.planes[plane_index])
        return [i for i, line in enumerate(self.lines) if plane.issuperset(line)]

    def line_graph(self) -> Graph:
        '''
        Lines adjacent iff they meet
        '''
        sets = [set(line) for line in self.lines]
        edges = [(a, b) for a, b in combinations(range(len(sets)), 2) if sets[a] & sets[b]]
        return Graph.from_edges(len(sets), edges)


def q_triangular(n: int, q: int, max_lines: int = MAX_LINES) -> Graph:
    '''
    J_q(n, 2): the lines of PG(n - 1, q), adjacent if they intersect
    '''
    if q not in FIELDS:
        raise UnsupportedField(f'Only GF(2) and GF(3) are supported, got q={q}')
    count = q_number(n, q) * q_number(n - 1, q) // (q + 1)
    if count > max_lines:
        raise SizeTooLarge(f'J_{q}({n},2) has {count} vertices, limit {max_lines}')
    return ProjectiveSpace(n, q).line_graph()


class SubplaneSite(SwitchSite):
    '''
    Site of the lines of one plane, the design is its dual: points are
    the lines of the plane in site order, blocks the point-pencils in
    point order
    '''

    def __init__(self, graph: Graph, space: ProjectiveSpace, plane_index: int) -> None:
        members = space.plane_lines(plane_index)
        super(SubplaneSite, self).__init__(graph, members)
        self.space = space
        self.plane_index = plane_index
        self.plane = space.planes[plane_index]
        pencils = []
        for p in self.plane:
            pencils.append([k for k, line in enumerate(members) if p in space.lines[line]])
        self.design = IncidenceStructure.from_sets(len(members), pencils)


def subplane_sites(space: ProjectiveSpace, graph: Graph = None) -> list:
    '''
    One site per plane of the space
    '''
    if graph is None:
        graph = space.line_graph()
    return [SubplaneSite(graph, space, i) for i in range(len(space.planes))]


class PlaneSwitch:
    '''
    Original and switched q-triangular graph of one plane permutation
    '''

    def __init__(self, site: SubplaneSite, scheme, perm: list, switched: Graph,
                 collineation: bool) -> None:
        self.site = site
        self.scheme = scheme
        self.perm = perm
        self.original = site.graph
        self.switched = switched
        self.collineation = collineation


def switch_subplane(space: ProjectiveSpace, plane_index: int, perm: str,
                    graph: Graph = None) -> PlaneSwitch:
    '''
    Switches J_q(n, 2) at a plane by permuting its point-pencils

    Args:
    -----
    - space (ProjectiveSpace)
    - plane_index (int)
    - perm (str): 1-based cycles on the pencils, in point order
    - graph (Graph): Optional, the line graph of space

    Returns:
    --------
    PlaneSwitch
    '''
    if graph is None:
        graph = space.line_graph()
    site = SubplaneSite(graph, space, plane_index)
    pi = parse_cycles(perm, site.design.b)
    scheme = derive_R_perm(site.design, pi)
    switched = apply_switch(site, scheme)
    collineation = induces_automorphism(site.design, pi)
    logger.debug(f'Plane {plane_index} switched by {perm}, collineation={collineation}')
    return PlaneSwitch(site, scheme, pi, switched, collineation)


class CliqueReport:
    '''
    Maximal clique sizes of a graph, one witness per reported size
    '''

    def __init__(self, sizes: Counter, witnesses: dict, max_size: int) -> None:
        self.sizes = sizes
        self.witnesses = witnesses
        self.max_size = max_size

    def has_size(self, k: int) -> bool:
        return self.sizes.get(k, 0) > 0

    def to_json(self) -> dict:
        return {
            'sizes': {str(k): self.sizes[k] for k in sorted(self.sizes)},
            'witnesses': {str(k): self.witnesses[k] for k in sorted(self.witnesses)},
            'max_size': self.max_size,
        }


def max_clique_report(graph: Graph, size_cap: int = None,
                      max_vertices: int = MAX_CLIQUE_VERTICES) -> CliqueReport:
    '''
    Enumerates all maximal cliques (pivoting Bron-Kerbosch)

    Args:
    -----
    - graph (Graph)
    - size_cap (int): Optional, only keep witnesses of cliques up to
      this size; the maximum is always reported
    - max_vertices (int): Optional, largest supported graph

    Returns:
    --------
    CliqueReport
    '''
    if graph.n > max_vertices:
        raise SizeTooLarge(f'Clique enumeration needs <= {max_vertices} vertices, got {graph.n}')
    sizes = Counter()
    witnesses = {}
    for clique in nx.find_cliques(graph.to_networkx()):
        k = len(clique)
        sizes[k] += 1
        clique = sorted(clique)
        if size_cap is None or k <= size_cap:
            if k not in witnesses or clique < witnesses[k]:
                witnesses[k] = clique
    max_size = max(sizes) if sizes else 0
    logger.debug(f'Maximal cliques by size: {dict(sorted(sizes.items()))}')
    return CliqueReport(sizes, witnesses, max_size)


def isomorphic(G1: Graph, G2: Graph, max_vertices: int = MAX_ISO_VERTICES) -> bool:
    '''
    Exact isomorphism test, cheap invariants first
    '''
    if max(G1.n, G2.n) > max_vertices:
        raise SizeTooLarge(f'Isomorphism test needs <= {max_vertices} vertices')
    if G1.n != G2.n or G1.edge_count != G2.edge_count:
        return False
    g1, g2 = G1.to_networkx(), G2.to_networkx()
    if not nx.could_be_isomorphic(g1, g2):
        return False
    return nx.is_isomorphic(g1, g2)
