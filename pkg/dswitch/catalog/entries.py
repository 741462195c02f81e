'''
Named switching methods and their source designs

Every entry is addressed by an id like "GM(6+4)", "WQH(3)", "AH(8)",
"Fano(4)", "AG32(10)" or "Prop51". Parametric ids accept "+" or "," as
separator of the part sizes.

Config Example:
---------------

    catalog:
      ids: [GM(4), WQH(3), AH(6), Fano, Cube]
      levels: true
'''
from __future__ import division, absolute_import, print_function

import os
import logging
import random
import re

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, lcm

from ..classify import block_symmetry_group, design_automorphism_group, double_coset_reps
from ..core import RatMatrix
from ..designs import IncidenceStructure, all_subsets, affine_plane
from ..errors import UnknownId, SourceMissing, ShapeMismatch, SizeMismatch, FormatError
from ..graph import Graph
from ..helper import parse_cycles, format_cycles, popcount, points_to_mask
from ..switching import (SwitchingScheme, SwitchSite, derive_R_perm,
                         named_scheme, equivalent, compatible_ac, load_scheme)
from ..switching.search import MAX_AC_V
from . import data

REDUCTION_BASIS = ('GM(4)', 'GM(6)', 'WQH(3)', 'AH(6)')

PLANT_AC_LIMIT = 64

_PARTS_RE = re.compile(r'^(GM|WQH)\(\s*(\d+(?:\s*[+,]\s*\d+)*)\s*\)$')
_INDEXED_RE = re.compile(r'^(AH|Fano|AG32|AG23)\(\s*(\d+)\s*\)$')

_ALIASES = {
    'Level5': 'Level5Circulant',
}

logger = logging.getLogger('dswitch.catalog')


class CatalogEntry:
    '''
    Named scheme, optionally with the design and the 1-based block
    permutation it is derived from
    '''

    def __init__(self, entry_id: str, scheme: SwitchingScheme, source=None,
                 description: str = '') -> None:
        self.id = entry_id
        self.scheme = scheme
        self.source = source
        self.description = description

    @property
    def level(self) -> int:
        return self.scheme.level

    def __repr__(self) -> str:
        return f'CatalogEntry({self.id}, v={self.scheme.v}, level={self.level})'

    def to_json(self) -> dict:
        res = {
            'id': self.id,
            'description': self.description,
            'level': self.level,
            'scheme': self.scheme.to_json(),
            'source': None,
        }
        if self.source is not None:
            design, perm = self.source
            res['source'] = {'design': design.to_json(), 'perm': perm}
        return res


def _printed(entry: tuple) -> RatMatrix:
    scale, text = entry
    return RatMatrix.from_rows(data.int_rows(text), Fraction(1, scale))


def _printed_design(text: str) -> IncidenceStructure:
    return IncidenceStructure.from_incidence(data.int_rows(text))


# matrices

def gm_matrix(c: int) -> RatMatrix:
    '''
    (2/c) J - I
    '''
    return RatMatrix.ones(c) * Fraction(2, c) - RatMatrix.identity(c)


def wqh_matrix(c: int) -> RatMatrix:
    '''
    I + (1/c) [[-J, J], [J, -J]] on two halves of c points
    '''
    J = RatMatrix.ones(c)
    return (RatMatrix.identity(2 * c)
            + RatMatrix.from_blocks([[-J, J], [J, -J]], Fraction(1, c)))


def ah_matrix(m: int) -> RatMatrix:
    '''
    (1/2) circulant(J, O, ..., O, Y) with blocks of order 2, Y = 2I - J
    '''
    J = RatMatrix.ones(2)
    O = RatMatrix.zeros(2)
    Y = RatMatrix.identity(2) * 2 - J
    return RatMatrix.block_circulant([J] + [O] * (m - 2) + [Y], Fraction(1, 2))


def cube_matrix() -> RatMatrix:
    I = RatMatrix.identity(2)
    Z = RatMatrix.ones(2) - I
    blocks = {'I': I, '-I': -I, 'Z': Z, '-Z': -Z}
    return RatMatrix.from_blocks(
        [[blocks[x] for x in row] for row in data.CUBE_BLOCKS], Fraction(1, 2))


# source designs

def _part_choices(points: list) -> list:
    half = len(points) // 2
    res = [0]
    res.extend(points_to_mask(s) for s in combinations(points, half))
    res.append(points_to_mask(points))
    return res


def gm_design(parts, weight=None) -> tuple:
    '''
    Blocks meeting every part C_i in 0, c_i/2 or c_i points

    Args:
    -----
    - parts (list): part sizes c_1, ..., c_t, all even
    - weight (callable): Optional, multiplicity of a block given the
      tuple of flags "meets C_i in half"

    Returns:
    --------
    (IncidenceStructure, 0-based block permutation swapping each half
    with its complement in the part)
    '''
    offsets = []
    start = 0
    for c in parts:
        if c < 2 or c % 2:
            raise ShapeMismatch(f'GM parts need an even size, got {c}')
        offsets.append(list(range(start, start + c)))
        start += c
    full = [points_to_mask(p) for p in offsets]
    blocks = []
    for choice in product(*[_part_choices(p) for p in offsets]):
        halves = tuple(x not in (0, f) for x, f in zip(choice, full))
        mask = 0
        for x in choice:
            mask |= x
        blocks.append((mask, weight(halves) if weight else 1))
    D = IncidenceStructure(start, blocks)
    index = {b: i for i, b in enumerate(D.blocks)}
    pi = []
    for mask, mult in D.blocks:
        image = 0
        for f in full:
            part = mask & f
            image |= part if part in (0, f) else f & ~part
        pi.append(index[(image, mult)])
    return D, pi


def gm64_design() -> IncidenceStructure:
    '''
    GM_{6+4} blocks weighted to an (r, lambda) = (408, 204) design
    '''
    return _gm64()[0]


def _gm64_weight(halves: tuple) -> int:
    return {(True, True): 4, (True, False): 5,
            (False, True): 11, (False, False): 1}[halves]


@lru_cache(maxsize=None)
def _gm64() -> tuple:
    return gm_design([6, 4], _gm64_weight)


def wqh_multiplicity(c: int) -> int:
    return comb(2 * c - 2, c - 1) - comb(2 * c - 2, c)


def wqh_design(c: int) -> tuple:
    '''
    WQH blocks on C^1 = {0..c-1}, C^2 = {c..2c-1}: equally many points
    of both halves, plus C^1 and C^2 with the multiplicity fixing lambda

    Returns:
    --------
    (IncidenceStructure, 0-based block permutation swapping C^1, C^2)
    '''
    first = list(range(c))
    second = list(range(c, 2 * c))
    blocks = []
    for k in range(c + 1):
        for s1 in combinations(first, k):
            for s2 in combinations(second, k):
                blocks.append((points_to_mask(s1 + s2), 1))
    m = wqh_multiplicity(c)
    blocks.append((points_to_mask(first), m))
    blocks.append((points_to_mask(second), m))
    b = len(blocks)
    pi = list(range(b - 2)) + [b - 1, b - 2]
    return IncidenceStructure(2 * c, blocks), pi


def ah_design(m: int) -> tuple:
    '''
    Subsets meeting every pair {2i, 2i+1} in the same number of points
    modulo 2; odd blocks are shifted by two points, even blocks fixed

    Returns:
    --------
    (IncidenceStructure, 0-based block permutation)
    '''
    v = 2 * m
    masks = []
    for mask in range(1 << v):
        parities = {popcount(mask >> (2 * i) & 3) % 2 for i in range(m)}
        if len(parities) == 1:
            masks.append(mask)
    index = {mask: i for i, mask in enumerate(masks)}
    pi = []
    for mask in masks:
        if popcount(mask & 3) % 2:
            mask = points_to_mask((p - 2) % v for p in range(v) if mask >> p & 1)
        pi.append(index[mask])
    return IncidenceStructure.from_sets(v, [[p for p in range(v) if x >> p & 1]
                                            for x in masks]), pi


@lru_cache(maxsize=None)
def _ag23_representatives() -> tuple:
    D = affine_plane(3)
    G = block_symmetry_group(D, parallelism_only=True)
    H = design_automorphism_group(D)
    reps = double_coset_reps(H, G)
    logger.debug(f'AG(2,3): {len(reps)} parallelism preserving double cosets')
    return D, tuple(reps)


# ids

def _parse_parts(txt: str) -> list:
    return [int(x) for x in re.split(r'\s*[+,]\s*', txt.strip())]


def normalize_id(entry_id: str) -> str:
    '''
    Canonical spelling of an id, "GM(4,4)" becomes "GM(4+4)"
    '''
    txt = (entry_id or '').strip()
    txt = _ALIASES.get(txt, txt)
    match = _PARTS_RE.match(txt)
    if match:
        return f'{match.group(1)}({"+".join(str(c) for c in _parse_parts(match.group(2)))})'
    match = _INDEXED_RE.match(txt)
    if match:
        return f'{match.group(1)}({int(match.group(2))})'
    return txt


def list_ids() -> list:
    '''
    Every fixed id and a representative set of parametric ones
    '''
    res = ['GM(4)', 'GM(6)', 'GM(8)', 'GM(4+4)', 'GM(6+4)',
           'WQH(2)', 'WQH(3)', 'WQH(4)', 'WQH(3+3)',
           'AH(6)', 'AH(8)', 'Fano']
    res.extend(f'Fano({i})' for i in range(1, len(data.FANO_PERMS) + 1))
    res.append('Cube')
    res.extend(f'AG32({i})' for i in range(1, len(data.AG32_PERMS) + 1))
    res.extend(['New7', 'New8'])
    res.extend(f'AG23({i})' for i in range(1, 6))
    res.extend(['AG23Circulant', 'AG23BlockCirculant', 'Level5Circulant', 'Prop51'])
    return res


def make(entry_id: str) -> CatalogEntry:
    '''
    Builds the catalog entry of an id

    Args:
    -----
    - entry_id (str): e.g. "GM(4)", "WQH(3+3)", "AG32(10)", "Level5"

    Returns:
    --------
    CatalogEntry
    '''
    return _make(normalize_id(entry_id))


def resolve_scheme(ref: str) -> SwitchingScheme:
    '''
    Scheme of a JSON file or of a catalog id
    '''
    if not ref:
        raise FormatError('No scheme given')
    if os.path.isfile(ref):
        return load_scheme(ref)
    return make(ref).scheme


@lru_cache(maxsize=None)
def _make(entry_id: str) -> CatalogEntry:
    match = _PARTS_RE.match(entry_id)
    if match:
        family, parts = match.group(1), _parse_parts(match.group(2))
        if family == 'GM':
            return _make_gm(entry_id, parts)
        return _make_wqh(entry_id, parts)
    match = _INDEXED_RE.match(entry_id)
    if match:
        family, i = match.group(1), int(match.group(2))
        builder = {'AH': _make_ah, 'Fano': _make_fano,
                   'AG32': _make_ag32, 'AG23': _make_ag23}[family]
        return builder(entry_id, i)
    builder = _FIXED.get(entry_id)
    if builder is None:
        raise UnknownId(f'Unknown catalog id {entry_id!r}', witness=entry_id)
    return builder(entry_id)


def _entry(entry_id, R, source=None, description='') -> CatalogEntry:
    entry = CatalogEntry(entry_id, named_scheme(R, entry_id), source, description)
    logger.debug(f'Built {entry!r}')
    return entry


def _make_gm(entry_id: str, parts: list) -> CatalogEntry:
    if any(c < 2 or c % 2 for c in parts):
        raise UnknownId(f'GM parts must be even, got {parts}', witness=entry_id)
    R = RatMatrix.block_diag(*[gm_matrix(c) for c in parts])
    if parts == [4]:
        source = (_printed_design(data.AG22_N), data.AG22_PERM)
    elif parts == [6]:
        source = (_printed_design(data.GM6_N), data.GM6_PERM)
    elif len(parts) == 1:
        D = all_subsets(parts[0], parts[0] // 2)
        source = (D, format_cycles([D.b - 1 - i for i in range(D.b)]))
    elif parts == [6, 4]:
        D, pi = _gm64()
        source = (D, format_cycles(pi))
    elif all(c == 4 for c in parts):
        D, pi = gm_design(parts)
        source = (D, format_cycles(pi))
    else:
        source = None
    return _entry(entry_id, R, source,
                  'Godsil-McKay switching, diag((2/c_i) J - I)')


def _make_wqh(entry_id: str, parts: list) -> CatalogEntry:
    if any(c < 2 for c in parts):
        raise UnknownId(f'WQH parts need at least 2 points, got {parts}', witness=entry_id)
    R = RatMatrix.block_diag(*[wqh_matrix(c) for c in parts])
    source = None
    if parts == [3]:
        source = (_printed_design(data.WQH6_N), data.WQH6_PERM)
    elif len(parts) == 1:
        D, pi = wqh_design(parts[0])
        source = (D, format_cycles(pi))
    return _entry(entry_id, R, source,
                  'Wang-Qiu-Hu switching on halves C^1, C^2 of every part')


def _make_ah(entry_id: str, v: int) -> CatalogEntry:
    if v < 4 or v % 2:
        raise UnknownId(f'AH needs an even size of at least 4, got {v}', witness=entry_id)
    m = v // 2
    if m == 3:
        source = (_printed_design(data.AH6_N), data.AH6_PERM)
    else:
        D, pi = ah_design(m)
        source = (D, format_cycles(pi))
    return _entry(entry_id, ah_matrix(m), source,
                  'Abiad-Haemers switching, (1/2) circulant(J, O, ..., O, Y)')


def _make_fano(entry_id: str, i: int) -> CatalogEntry:
    if not 1 <= i <= len(data.FANO_R):
        raise UnknownId(f'No Fano matrix {i}', witness=entry_id)
    source = (_printed_design(data.FANO_N), data.FANO_PERMS[i - 1])
    return _entry(entry_id, _printed(data.FANO_R[i - 1]), source,
                  f'Lines of the Fano plane permuted by {data.FANO_PERMS[i - 1]}')


def _make_ag32(entry_id: str, i: int) -> CatalogEntry:
    if not 1 <= i <= len(data.AG32_R):
        raise UnknownId(f'No AG(3,2) matrix {i}', witness=entry_id)
    source = (_printed_design(data.AG32_N), data.AG32_PERMS[i - 1])
    return _entry(entry_id, _printed(data.AG32_R[i - 1]), source,
                  f'Planes of AG(3,2) permuted by {data.AG32_PERMS[i - 1]}')


def _make_ag23(entry_id: str, i: int) -> CatalogEntry:
    D, reps = _ag23_representatives()
    if not 1 <= i <= len(reps):
        raise UnknownId(f'No AG(2,3) representative {i}', witness=entry_id)
    pi = list(reps[i - 1].images)
    derived = derive_R_perm(D, pi)
    scheme = SwitchingScheme(derived.R, {'kind': 'named', 'id': entry_id},
                             design=derived.design, partner=derived.partner)
    perm = format_cycles(pi)
    return CatalogEntry(entry_id, scheme, (D, perm),
                        f'Lines of AG(2,3) permuted by {perm}, parallelism preserved')


def _make_fano_circulant(entry_id: str) -> CatalogEntry:
    scale, first = data.FANO_CIRCULANT
    return _entry(entry_id, RatMatrix.circulant(first, Fraction(1, scale)), None,
                  'Fano switching, (1/2) circulant(-1, 1, 1, 0, 1, 0, 0)')


def _make_cube(entry_id: str) -> CatalogEntry:
    return _entry(entry_id, cube_matrix(), None, 'Cube switching on eight points')


def _make_new7(entry_id: str) -> CatalogEntry:
    return _entry(entry_id, _printed(data.NEW7_R),
                  (_printed_design(data.NEW7_N), data.NEW7_PERM),
                  'Seven point method of level 4')


def _make_new8(entry_id: str) -> CatalogEntry:
    return _entry(entry_id, _printed(data.NEW8_R),
                  (_printed_design(data.NEW8_N), data.NEW8_PERM),
                  'Eight point method of level 3 from a design with repeated blocks')


def _make_ag23_circulant(entry_id: str) -> CatalogEntry:
    scale, first = data.AG23_CIRCULANT
    return _entry(entry_id, RatMatrix.circulant(first, Fraction(1, scale)), None,
                  'AG(2,3) method printed as a circulant')


def _make_ag23_block_circulant(entry_id: str) -> CatalogEntry:
    scale, firsts = data.AG23_BLOCK_CIRCULANT
    blocks = [RatMatrix.circulant(first) for first in firsts]
    return _entry(entry_id, RatMatrix.block_circulant(blocks, Fraction(1, scale)), None,
                  'AG(2,3) method printed as a block circulant')


def _make_level5(entry_id: str) -> CatalogEntry:
    scale, first = data.LEVEL5_CIRCULANT
    return _entry(entry_id, RatMatrix.circulant(first, Fraction(1, scale)), None,
                  'Level 5 circulant on eight points')


def _make_prop51(entry_id: str) -> CatalogEntry:
    return _entry(entry_id, _printed(data.PROP51_R), None,
                  'Level 5 method on six points without a design')


_FIXED = {
    'Fano': _make_fano_circulant,
    'Cube': _make_cube,
    'New7': _make_new7,
    'New8': _make_new8,
    'AG23Circulant': _make_ag23_circulant,
    'AG23BlockCirculant': _make_ag23_block_circulant,
    'Level5Circulant': _make_level5,
    'Prop51': _make_prop51,
}


def default_basis() -> list:
    return [make(x) for x in REDUCTION_BASIS]


def expected_level(entry_id: str) -> int:
    '''
    Level of an id known from the construction, None if it is only
    known from the matrix
    '''
    entry_id = normalize_id(entry_id)
    match = _PARTS_RE.match(entry_id)
    if match:
        parts = _parse_parts(match.group(2))
        if match.group(1) == 'GM':
            return lcm(*[c // 2 for c in parts])
        return lcm(*parts)
    if entry_id in ('Fano', 'Cube') or entry_id.startswith('AH('):
        return 2
    if entry_id in ('Level5Circulant', 'Prop51'):
        return 5
    return {'New7': 4, 'New8': 3}.get(entry_id)


# checks

def consistency_check(entry: CatalogEntry) -> bool:
    '''
    True iff the scheme derived from the source equals the entry's
    matrix up to one simultaneous row and column permutation
    '''
    if entry.source is None:
        raise SourceMissing(f'{entry.id} has no source design', witness=entry.id)
    design, perm = entry.source
    derived = derive_R_perm(design, parse_cycles(perm, design.b))
    sigma = equivalent(derived.R, entry.scheme.R)
    logger.debug(f'{entry.id}: source {"matches" if sigma is not None else "differs"}')
    return sigma is not None


def prop51_ac() -> list:
    '''
    The three switching sets of the level 5 method, up to symmetry
    '''
    return [Graph.from_edges(6, [(a - 1, b - 1) for a, b in edges])
            for edges in data.PROP51_AC]


def new8_irreducible_ac() -> list:
    return [Graph.from_adjacency(data.bit_rows(x)) for x in data.NEW8_IRREDUCIBLE_AC]


def _binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _count(blocks, points) -> int:
    mask = points_to_mask(points)
    return sum(mult for block, mult in blocks if block & mask == mask)


def counting_identities(c: int) -> dict:
    '''
    Block counts of the GM and WQH families on parts of size c by
    enumeration, next to their closed forms

    Args:
    -----
    - c (int): part size, at least 2

    Returns:
    --------
    dict name -> {"count": enumerated, "formula": closed form}, and
    "ok" true iff all of them agree
    '''
    if c < 2:
        raise ShapeMismatch(f'Counting identities need c >= 2, got {c}')
    res = {}

    def check(name, count, formula):
        res[name] = {'count': count, 'formula': formula}

    # WQH on C^1 = {0..c-1}, C^2 = {c..2c-1}
    first = points_to_mask(range(c))
    second = first << c
    plain = [(mask, 1) for mask in range(1 << (2 * c))
             if mask in (first, second)
             or popcount(mask & first) == popcount(mask & second)]
    check('wqh_r', _count(plain, [0]), (2 + comb(2 * c, c)) // 2)
    check('wqh_lattice', sum(comb(c, j) ** 2 for j in range(c + 1)), comb(2 * c, c))
    check('wqh_same_side', _count(plain, [0, 1]), comb(2 * c - 2, c) + 1)
    check('wqh_cross', _count(plain, [0, c]), comb(2 * c - 2, c - 1))
    m = wqh_multiplicity(c)
    fixed = [(mask, m if mask in (first, second) else 1) for mask, _ in plain]
    lambdas = {_count(fixed, pair) for pair in combinations(range(2 * c), 2)}
    check('wqh_fixed_lambda', sorted(lambdas), [comb(2 * c - 2, c - 1)])
    rs = {_count(fixed, [p]) for p in range(2 * c)}
    check('wqh_fixed_r', sorted(rs), [comb(2 * c - 1, c - 1) + m])
    if c % 2 == 0:
        D = gm_design([c])[0]
        check('gm_r', _count(D.blocks, [0]), (comb(c, c // 2) + 2) // 2)
        check('gm_lambda', _count(D.blocks, [0, 1]), _binomial(c - 2, c // 2 - 2) + 1)
    if c == 4:
        D = gm_design([4, 4])[0]
        lambdas = {_count(D.blocks, pair) for pair in combinations(range(8), 2)}
        check('gm_t2_lambda', sorted(lambdas), [2 ** (3 * 2 - 2)])
        check('gm_t2_r', _count(D.blocks, [0]), (comb(4, 2) + 2) ** 2 // 2)
    ok = all(x['count'] == x['formula'] for x in res.values())
    res['ok'] = ok
    res['c'] = c
    return res


# planted sites

def plant_site(n: int, entry: CatalogEntry, seed=None, moving: bool = False,
               p: float = 0.5) -> SwitchSite:
    '''
    Random graph on n vertices with a valid site for the entry's scheme

    A_C is drawn from the compatible switching sets, every outside
    vertex sees a neighbourhood from the block table and outside
    vertices are joined with probability p.

    Args:
    -----
    - n (int): number of vertices, at least the scheme size
    - entry (CatalogEntry)
    - seed: Optional, seed of the random generator
    - moving (bool): the first outside vertex sees a neighbourhood the
      switch changes, if the scheme has one

    Returns:
    --------
    SwitchSite
    '''
    scheme = entry.scheme
    v = scheme.v
    if n < v:
        raise SizeMismatch(f'{n} vertices cannot hold a site of {v} points',
                           witness=[n, v])
    rng = random.Random(seed)
    members = rng.sample(range(n), v)
    if v <= MAX_AC_V:
        candidates = compatible_ac(scheme, limit=PLANT_AC_LIMIT)
    else:
        candidates = [Graph(v), Graph.complete(v)]
    ac = rng.choice(candidates)
    edges = [(members[a], members[b]) for a, b in ac.edges()]
    table = sorted(scheme.block_table.items())
    chis = [chi for chi, _ in table]
    movers = [chi for chi, image in table if chi != image]
    member_set = set(members)
    outside = [x for x in range(n) if x not in member_set]
    for k, x in enumerate(outside):
        chi = rng.choice(movers) if moving and k == 0 and movers else rng.choice(chis)
        edges.extend((x, members[a]) for a in range(v) if chi >> a & 1)
    for x, y in combinations(outside, 2):
        if rng.random() < p:
            edges.append((x, y))
    return SwitchSite(Graph.from_edges(n, edges), members)
