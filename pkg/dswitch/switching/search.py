'''
Search for the induced subgraphs A_C a scheme maps to adjacency matrices

With M = level * R every entry of level^2 * R^T A R is a linear form in
the edge variables of A. The search assigns the edge variables in
lexicographic order and prunes as soon as some form can no longer reach
an admissible value: 0 on the diagonal, 0 or level^2 elsewhere.
'''
from __future__ import division, absolute_import, print_function

import logging

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from ..errors import SizeTooLarge
from ..graph import Graph
from .scheme import SwitchingScheme, r_automorphisms

MAX_AC_V = 10

logger = logging.getLogger('dswitch.switching')


def _linear_forms(M: list, v: int) -> tuple:
    '''
    Returns (edges, forms, touched) where forms are the index pairs
    (k, l), k <= l, and touched[e] lists (form, coefficient) pairs
    '''
    edges = list(combinations(range(v), 2))
    forms = [(k, l) for k in range(v) for l in range(k, v)]
    touched = []
    for i, j in edges:
        row = []
        for f, (k, l) in enumerate(forms):
            c = M[i][k] * M[j][l] + M[j][k] * M[i][l]
            if c:
                row.append((f, c))
        touched.append(row)
    return edges, forms, touched


class _FormSearch:
    '''
    Depth first search over the edge variables with interval pruning
    '''

    def __init__(self, M: list, ell: int, v: int) -> None:
        self.edges, self.forms, self.touched = _linear_forms(M, v)
        self.target = ell * ell
        self.diagonal = [k == l for k, l in self.forms]
        nedges, nforms = len(self.edges), len(self.forms)
        self.neg = [[0] * nforms for _ in range(nedges + 1)]
        self.pos = [[0] * nforms for _ in range(nedges + 1)]
        for e in range(nedges - 1, -1, -1):
            self.neg[e] = list(self.neg[e + 1])
            self.pos[e] = list(self.pos[e + 1])
            for f, c in self.touched[e]:
                if c < 0:
                    self.neg[e][f] += c
                else:
                    self.pos[e][f] += c

    def _feasible(self, sums: list, e: int, forms) -> bool:
        neg, pos, target = self.neg[e], self.pos[e], self.target
        for f in forms:
            lo = sums[f] + neg[f]
            hi = sums[f] + pos[f]
            if lo <= 0 <= hi:
                continue
            if not self.diagonal[f] and lo <= target <= hi:
                continue
            return False
        return True

    def _complete(self, sums: list) -> bool:
        for f, s in enumerate(sums):
            if s != 0 and (self.diagonal[f] or s != self.target):
                return False
        return True

    def run(self, prefix: tuple = (), limit: int = None) -> list:
        '''
        All solutions extending the given prefix of edge values, as
        edge bit masks
        '''
        nedges = len(self.edges)
        sums = [0] * len(self.forms)
        mask = 0
        for e, bit in enumerate(prefix):
            if bit:
                mask |= 1 << e
                for f, c in self.touched[e]:
                    sums[f] += c
        res = []
        start = len(prefix)
        if not self._feasible(sums, start, range(len(self.forms))):
            return res

        def search(e, mask):
            if limit is not None and len(res) >= limit:
                return
            if e == nedges:
                if self._complete(sums):
                    res.append(mask)
                return
            touched = self.touched[e]
            forms = [f for f, _ in touched]
            if self._feasible(sums, e + 1, forms):
                search(e + 1, mask)
            for f, c in touched:
                sums[f] += c
            if self._feasible(sums, e + 1, forms):
                search(e + 1, mask | 1 << e)
            for f, c in touched:
                sums[f] -= c

        search(start, mask)
        return res


def _search_worker(args: tuple) -> list:
    M, ell, v, prefix, limit = args
    return _FormSearch(M, ell, v).run(prefix, limit)


def _mask_to_graph(mask: int, edges: list, v: int) -> Graph:
    return Graph.from_edges(v, [edges[e] for e in range(len(edges)) if mask >> e & 1])


def _bitstring(graph: Graph) -> tuple:
    return tuple(graph.rows[i] >> j & 1 for i, j in combinations(range(graph.n), 2))


def canonical_ac(graph: Graph, automorphisms: list) -> Graph:
    '''
    Lexicographically least upper triangle over the relabelings by the
    given automorphisms of R and complementation
    '''
    best = None
    for candidate in (graph, graph.complement()):
        for sigma in automorphisms:
            g = candidate.relabel(sigma)
            key = _bitstring(g)
            if best is None or key < best[0]:
                best = (key, g)
    return best[1]


def compatible_ac(scheme: SwitchingScheme, up_to_symmetry: bool = False,
                  limit: int = None, threads: int = 1,
                  max_v: int = MAX_AC_V) -> list:
    '''
    All graphs A_C on the scheme points with R^T A_C R an adjacency
    matrix

    Args:
    -----
    - scheme (SwitchingScheme)
    - up_to_symmetry (bool): one canonical graph per orbit under the
      relabelings fixing R and complementation
    - limit (int): Optional, stop after this many solutions without
      the first edge, their complements are always returned too
    - threads (int): worker processes, the result does not depend on it
    - max_v (int): Optional, largest supported size

    Returns:
    --------
    list of Graph, sorted by upper triangle bit string
    '''
    v = scheme.v
    if v > max_v:
        raise SizeTooLarge(f'A_C search needs v <= {max_v}, got {v}')
    if v < 2:
        return [Graph(v)]
    M, ell = scheme.scaled, scheme.level
    edges = list(combinations(range(v), 2))
    # complements of the solutions with edge 0 unset cover the others
    if threads > 1 and limit is None:
        depth = 1
        while (1 << (depth - 1)) < 4 * threads and depth < len(edges):
            depth += 1
        prefixes = [(0,) + tuple(p >> k & 1 for k in range(depth - 1))
                    for p in range(1 << (depth - 1))]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(_search_worker,
                             [(M, ell, v, prefix, None) for prefix in prefixes])
            masks = [m for part in parts for m in part]
    else:
        masks = _FormSearch(M, ell, v).run((0,), limit)
    full = (1 << len(edges)) - 1
    masks = sorted(set(masks) | {full & ~m for m in masks})
    graphs = [_mask_to_graph(m, edges, v) for m in masks]
    logger.debug(f'{len(graphs)} compatible A_C for v={v}')
    if not up_to_symmetry:
        return sorted(graphs, key=_bitstring)
    automorphisms = r_automorphisms(scheme.R)
    reps = {}
    for g in graphs:
        c = canonical_ac(g, automorphisms)
        reps[_bitstring(c)] = c
    return [reps[k] for k in sorted(reps)]
