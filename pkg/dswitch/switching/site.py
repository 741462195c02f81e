from __future__ import division, absolute_import, print_function

import logging

from ..core import RatMatrix, charpoly
from ..errors import SiteInvalid, SizeMismatch, SourceMissing, InvariantViolation
from ..graph import Graph
from ..helper import mask_to_points
from .scheme import SwitchingScheme

logger = logging.getLogger('dswitch.switching')


class SwitchSite:
    '''
    A graph together with the ordered vertices identified with the
    points 0..v-1 of a scheme
    '''

    def __init__(self, graph: Graph, members) -> None:
        members = [int(x) for x in members]
        if len(set(members)) != len(members):
            raise SiteInvalid('Site members are not distinct', witness=members)
        for x in members:
            if not 0 <= x < graph.n:
                raise SiteInvalid(f'Member {x} is not a vertex', witness=x)
        self.graph = graph
        self.members = tuple(members)

    @property
    def v(self) -> int:
        return len(self.members)

    def outside(self) -> list:
        inside = set(self.members)
        return [x for x in range(self.graph.n) if x not in inside]

    def chi(self, x: int) -> int:
        '''
        Neighbourhood of vertex x inside the site as point mask
        '''
        row = self.graph.rows[x]
        res = 0
        for k, m in enumerate(self.members):
            if row >> m & 1:
                res |= 1 << k
        return res

    def ac(self) -> Graph:
        return self.graph.induced(self.members)

    def __repr__(self) -> str:
        return f'SwitchSite({self.graph!r}, members={list(self.members)})'


class SiteReport:
    '''
    Result of checking both switching conditions on a site
    '''

    def __init__(self) -> None:
        self.ok = False
        self.size_ok = False
        self.ac_ok = False
        self.ac_image = None
        self.outside = []
        self.failures = []

    @property
    def witness(self):
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        return {
            'ok': self.ok,
            'size_ok': self.size_ok,
            'ac_ok': self.ac_ok,
            'ac_image': self.ac_image.to_json() if self.ac_image else None,
            'outside': self.outside,
            'failures': self.failures,
        }


def conjugate_ac(scheme: SwitchingScheme, ac: Graph):
    '''
    Returns R^T A_C R as Graph, None if it is not an adjacency matrix
    '''
    B = scheme.R.T @ ac.to_matrix() @ scheme.R
    n = B.rows
    for i in range(n):
        if B[i, i] != 0:
            return None
        for j in range(i + 1, n):
            x = B[i, j]
            if x != B[j, i] or x not in (0, 1):
                return None
    return Graph.from_adjacency(B)


def _strict_blocks(scheme: SwitchingScheme) -> set:
    if scheme.design is None:
        raise SourceMissing('Strict site check needs the source design of the scheme')
    full = (1 << scheme.v) - 1
    return {0, full} | set(scheme.design.masks)


def verify_site(site: SwitchSite, scheme: SwitchingScheme,
                strict: bool = False) -> SiteReport:
    '''
    Checks that A_C is mapped to an adjacency matrix and that every
    outside vertex sees a compatible neighbourhood in the site

    Args:
    -----
    - site (SwitchSite)
    - scheme (SwitchingScheme)
    - strict (bool): only accept nothing, everything or a block of
      the source design instead of the full block table
      (SourceMissing if the scheme has no source design)

    Returns:
    --------
    SiteReport
    '''
    report = SiteReport()
    if site.v != scheme.v:
        report.failures.append({'reason': 'size', 'members': site.v, 'v': scheme.v})
        return report
    report.size_ok = True
    report.ac_image = conjugate_ac(scheme, site.ac())
    report.ac_ok = report.ac_image is not None
    if not report.ac_ok:
        report.failures.append({'reason': 'ac'})
    table = scheme.block_table
    allowed = _strict_blocks(scheme) if strict else table
    for x in site.outside():
        chi = site.chi(x)
        ok = chi in allowed and chi in table
        report.outside.append({
            'vertex': x,
            'chi': mask_to_points(chi),
            'ok': ok,
            'image': mask_to_points(table[chi]) if ok else None,
        })
        if not ok:
            report.failures.append({'reason': 'neighbourhood', 'vertex': x,
                                    'chi': mask_to_points(chi)})
    report.ok = not report.failures
    logger.debug(f'Site check: ok={report.ok}, {len(report.failures)} failures')
    return report


def apply_switch(site: SwitchSite, scheme: SwitchingScheme,
                 strict: bool = False) -> Graph:
    '''
    Switches the graph of a valid site, i.e. conjugates its adjacency
    matrix with diag(R, I)

    Args:
    -----
    - site (SwitchSite)
    - scheme (SwitchingScheme)
    - strict (bool): Optional, see verify_site

    Returns:
    --------
    Graph
    '''
    report = verify_site(site, scheme, strict)
    if not report.ok:
        raise SiteInvalid('Site does not satisfy the switching conditions',
                          witness=report.witness)
    graph = site.graph
    rows = list(graph.rows)
    members = site.members
    member_mask = 0
    for m in members:
        member_mask |= 1 << m
    table = scheme.block_table
    # inside the site
    B = report.ac_image
    for a, x in enumerate(members):
        row = rows[x] & ~member_mask
        for b in mask_to_points(B.rows[a]):
            row |= 1 << members[b]
        rows[x] = row
    # outside vertices move to the image of their neighbourhood
    for y in site.outside():
        chi = site.chi(y)
        image = table[chi]
        if scheme.image(chi) != image:
            raise InvariantViolation(f'Table image of vertex {y} is inconsistent',
                                     witness=y)
        row = rows[y] & ~member_mask
        for b in mask_to_points(image):
            row |= 1 << members[b]
        rows[y] = row
        for k, x in enumerate(members):
            if image >> k & 1:
                rows[x] |= 1 << y
            else:
                rows[x] &= ~(1 << y)
    try:
        res = Graph(graph.n, rows)
    except Exception as e:
        raise InvariantViolation(f'Switched graph is not simple: {e}')
    if res.to_matrix() != conjugated(graph, members, scheme.R):
        raise InvariantViolation('Switched graph differs from Q^T A Q')
    return res


def conjugated(graph: Graph, members, R: RatMatrix) -> RatMatrix:
    '''
    Q^T A Q for Q = diag(R, I) with R acting on the given vertices
    '''
    n = graph.n
    order = list(members) + [x for x in range(n) if x not in set(members)]
    A = graph.relabel(order).to_matrix()
    Q = RatMatrix.block_diag(R, RatMatrix.identity(n - len(members)))
    res = Q.T @ A @ Q
    back = [0] * n
    for k, x in enumerate(order):
        back[x] = k
    return res.permuted(back)


def _check_sizes(G1: Graph, G2: Graph) -> None:
    if G1.n != G2.n:
        raise SizeMismatch(f'Graphs have {G1.n} and {G2.n} vertices',
                           witness=[G1.n, G2.n])


def cospectral(G1: Graph, G2: Graph) -> bool:
    '''
    Equal characteristic polynomials of the adjacency matrices
    '''
    _check_sizes(G1, G2)
    return charpoly(G1.adjacency()) == charpoly(G2.adjacency())


def r_cospectral(G1: Graph, G2: Graph) -> bool:
    '''
    Cospectral graphs with cospectral complements
    '''
    return cospectral(G1, G2) and cospectral(G1.complement(), G2.complement())
