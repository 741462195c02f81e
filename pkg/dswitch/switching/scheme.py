from __future__ import division, absolute_import, print_function

import logging

from fractions import Fraction

from ..core import RatMatrix, is_regular_orthogonal, level
from ..designs import (IncidenceStructure, DesignParams, validate,
                       gram_witness)
from ..errors import (NotRegularOrthogonal, ParamMismatch, GramMismatch,
                      RLambdaDegenerate, IntersectionNotPreserved,
                      InvariantViolation, SizeTooLarge, FormatError,
                      ShapeMismatch)
from ..helper import popcount, format_cycles, load_json, dump_json

MAX_COMPATIBLE_V = 24

logger = logging.getLogger('dswitch.switching')


class SwitchingScheme:
    '''
    Validated regular orthogonal matrix R with its provenance

    The block table maps every 0/1 vector chi (as point mask) with
    R^T chi again 0/1 to that image. It is computed on first use.
    '''

    def __init__(self, R: RatMatrix, provenance: dict = None,
                 design: IncidenceStructure = None,
                 partner: IncidenceStructure = None) -> None:
        if not is_regular_orthogonal(R):
            raise NotRegularOrthogonal('Matrix is not regular orthogonal')
        self.R = R
        self.v = R.rows
        self.provenance = provenance or {'kind': 'raw'}
        # designs whose blocks are paired by index, if known
        self.design = design
        self.partner = partner
        self._level = None
        self._scaled = None
        self._table = None

    def __repr__(self) -> str:
        return f'SwitchingScheme(v={self.v}, level={self.level}, {self.provenance.get("kind")})'

    @property
    def level(self) -> int:
        if self._level is None:
            self._level = level(self.R)
        return self._level

    @property
    def scaled(self) -> list:
        '''
        Integer matrix M = level * R as list of rows
        '''
        if self._scaled is None:
            self._scaled = self.R.scaled_int()[1]
        return self._scaled

    @property
    def is_identity(self) -> bool:
        return self.R == RatMatrix.identity(self.v)

    def image(self, chi: int):
        '''
        Returns R^T chi as point mask or None if it is not 0/1
        '''
        ell = self.level
        M = self.scaled
        sums = [0] * self.v
        for i in range(self.v):
            if chi >> i & 1:
                row = M[i]
                for j in range(self.v):
                    sums[j] += row[j]
        res = 0
        for j, s in enumerate(sums):
            if s == ell:
                res |= 1 << j
            elif s != 0:
                return None
        return res

    @property
    def block_table(self) -> dict:
        if self._table is None:
            self._table = dict(compatible_vectors(self))
        return self._table

    def is_involution(self) -> bool:
        return self.R @ self.R == RatMatrix.identity(self.v)

    def to_json(self) -> dict:
        return {'v': self.v, 'R': self.R.to_json(), 'provenance': self.provenance}

    @classmethod
    def from_json(cls, data: dict) -> 'SwitchingScheme':
        '''
        Parses {"v": int, "R": [[num, den], ...], "provenance": {...}}
        '''
        if not isinstance(data, dict) or 'v' not in data or 'R' not in data:
            raise FormatError('Scheme JSON needs "v" and "R"')
        v = data['v']
        if not isinstance(v, int) or v < 1:
            raise FormatError(f'Invalid scheme size {v!r}')
        R = RatMatrix.from_json(v, data['R'])
        provenance = data.get('provenance') or {'kind': 'raw'}
        design = partner = None
        if 'designs' in provenance:
            design, partner = (IncidenceStructure.from_json(x)
                               for x in provenance['designs'])
        elif 'design' in provenance:
            design = IncidenceStructure.from_json(provenance['design'])
        return cls(R, provenance, design=design, partner=partner)


def compatible_vectors(scheme: SwitchingScheme, max_v: int = MAX_COMPATIBLE_V) -> list:
    '''
    All 0/1 vectors chi with R^T chi again 0/1, paired with the image

    Vectors with point 0 unset are searched depth first with interval
    pruning on the partial column sums of M = level * R, the others are
    their complements.

    Args:
    -----
    - scheme (SwitchingScheme)
    - max_v (int): Optional, largest supported size

    Returns:
    --------
    list of (chi, image) point masks, sorted by chi
    '''
    v = scheme.v
    if v > max_v:
        raise SizeTooLarge(f'Compatible vectors need v <= {max_v}, got {v}')
    ell = scheme.level
    M = scheme.scaled
    full = (1 << v) - 1
    # neg[i][j] / pos[i][j]: extreme contributions of rows i.. to column j
    neg = [[0] * v for _ in range(v + 1)]
    pos = [[0] * v for _ in range(v + 1)]
    for i in range(v - 1, -1, -1):
        for j in range(v):
            x = M[i][j]
            neg[i][j] = neg[i + 1][j] + min(0, x)
            pos[i][j] = pos[i + 1][j] + max(0, x)

    res = []

    def feasible(sums, i):
        lo_row, hi_row = neg[i], pos[i]
        for j in range(v):
            lo = sums[j] + lo_row[j]
            hi = sums[j] + hi_row[j]
            if not (lo <= 0 <= hi or lo <= ell <= hi):
                return False
        return True

    def search(i, chi, sums):
        if i == v:
            image = 0
            for j, s in enumerate(sums):
                if s == ell:
                    image |= 1 << j
                elif s != 0:
                    return
            res.append((chi, image))
            return
        if feasible(sums, i + 1):
            search(i + 1, chi, sums)
        row = M[i]
        nxt = [s + x for s, x in zip(sums, row)]
        if feasible(nxt, i + 1):
            search(i + 1, chi | 1 << i, nxt)

    if v and feasible([0] * v, 1):
        search(1, 0, [0] * v)
    res.extend([(full & ~chi, full & ~image) for chi, image in res])
    res.sort()
    for chi, image in res:
        if popcount(chi) != popcount(image):
            raise InvariantViolation(f'Image of {chi:b} changes its size')
    logger.debug(f'{len(res)} compatible vectors for v={v}')
    return res


def _weighted_product(D1: IncidenceStructure, D2: IncidenceStructure) -> list:
    '''
    N1 D_m N2^T as integer rows
    '''
    v = D1.v
    res = [[0] * v for _ in range(v)]
    for (m1, mult), (m2, _) in zip(D1.blocks, D2.blocks):
        for p in range(v):
            if m1 >> p & 1:
                row = res[p]
                for q in range(v):
                    if m2 >> q & 1:
                        row[q] += mult
    return res


def _scheme_from_pair(D1: IncidenceStructure, D2: IncidenceStructure,
                      params: DesignParams, provenance: dict) -> SwitchingScheme:
    r, lambda_ = params
    if r == lambda_:
        raise RLambdaDegenerate(f'r = lambda = {r}')
    prod = _weighted_product(D1, D2)
    R = RatMatrix.from_rows(
        [[x - lambda_ for x in row] for row in prod], Fraction(1, r - lambda_))
    if not is_regular_orthogonal(R):
        raise InvariantViolation('Derived matrix is not regular orthogonal')
    scheme = SwitchingScheme(R, provenance, design=D1, partner=D2)
    for i, ((m1, _), (m2, _)) in enumerate(zip(D1.blocks, D2.blocks)):
        if scheme.image(m1) != m2:
            raise InvariantViolation(f'R^T maps block {i} elsewhere', witness=i)
    return scheme


def derive_R(D1: IncidenceStructure, D2: IncidenceStructure) -> SwitchingScheme:
    '''
    Scheme R = (N1 D_m N2^T - lambda J) / (r - lambda) of two designs
    with equal parameters and equal intersection profiles

    Args:
    -----
    - D1 (IncidenceStructure): blocks before switching
    - D2 (IncidenceStructure): blocks after switching, paired by index

    Returns:
    --------
    SwitchingScheme
    '''
    p1 = validate(D1)
    p2 = validate(D2)
    if p1 != p2:
        raise ParamMismatch(f'Parameters {tuple(p1)} and {tuple(p2)} differ',
                            witness=[p1.to_json(), p2.to_json()])
    try:
        pair = gram_witness(D1, D2)
    except ShapeMismatch as e:
        raise GramMismatch(e.message)
    if pair is not None:
        raise GramMismatch(f'Blocks {list(pair)} intersect differently',
                           witness=list(pair))
    provenance = {'kind': 'two-designs', 'designs': [D1.to_json(), D2.to_json()]}
    return _scheme_from_pair(D1, D2, p1, provenance)


def derive_R_perm(D: IncidenceStructure, pi) -> SwitchingScheme:
    '''
    Scheme of one design and a block permutation, the partner design
    has block pi(i) at position i

    Args:
    -----
    - D (IncidenceStructure)
    - pi (list): 0-based images of the block indices

    Returns:
    --------
    SwitchingScheme
    '''
    params = validate(D)
    pi = list(pi)
    if sorted(pi) != list(range(D.b)):
        raise ShapeMismatch(f'Not a permutation of the {D.b} blocks')
    masks, mults = D.masks, D.mults
    for i in range(D.b):
        if mults[pi[i]] != mults[i]:
            raise IntersectionNotPreserved(
                f'Block {i} and its image have different multiplicities',
                witness=[i, i])
        for j in range(i, D.b):
            if popcount(masks[i] & masks[j]) != popcount(masks[pi[i]] & masks[pi[j]]):
                raise IntersectionNotPreserved(
                    f'Intersection of blocks {i} and {j} is not preserved',
                    witness=[i, j])
    provenance = {'kind': 'permuted-design', 'design': D.to_json(),
                  'perm': format_cycles(pi)}
    return _scheme_from_pair(D, D.permute_blocks(pi), params, provenance)


def named_scheme(R: RatMatrix, entry_id: str) -> SwitchingScheme:
    return SwitchingScheme(R, {'kind': 'named', 'id': entry_id})


def _relabel_search(R1: RatMatrix, R2: RatMatrix, find_all: bool):
    '''
    Backtracking over sigma with R1[sigma(i), sigma(j)] = R2[i, j]
    '''
    n = R1.rows
    if R1.shape != R2.shape or not R1.is_square:
        return []
    rows1 = [sorted(R1.row(i)) for i in range(n)]
    cols1 = [sorted(R1.col(i)) for i in range(n)]
    rows2 = [sorted(R2.row(i)) for i in range(n)]
    cols2 = [sorted(R2.col(i)) for i in range(n)]
    candidates = [[a for a in range(n)
                   if rows1[a] == rows2[i] and cols1[a] == cols2[i]
                   and R1[a, a] == R2[i, i]] for i in range(n)]
    res = []
    sigma = [0] * n
    used = [False] * n

    def search(i):
        if i == n:
            res.append(tuple(sigma))
            return not find_all
        for a in candidates[i]:
            if used[a]:
                continue
            if all(R1[a, sigma[k]] == R2[i, k] and R1[sigma[k], a] == R2[k, i]
                   for k in range(i)):
                sigma[i] = a
                used[a] = True
                if search(i + 1):
                    return True
                used[a] = False
        return False

    search(0)
    return res


def equivalent(R1: RatMatrix, R2: RatMatrix):
    '''
    Returns sigma with R1.permuted(sigma) == R2, None if there is none
    '''
    res = _relabel_search(R1, R2, False)
    return list(res[0]) if res else None


def r_automorphisms(R: RatMatrix) -> list:
    '''
    All simultaneous row/column permutations fixing R
    '''
    return [list(x) for x in _relabel_search(R, R, True)]


def load_scheme(filename: str) -> SwitchingScheme:
    return SwitchingScheme.from_json(load_json(filename))


def save_scheme(scheme: SwitchingScheme, filename: str) -> None:
    dump_json(scheme.to_json(), filename)
