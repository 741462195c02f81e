'''
Incidence structures with block multiplicities and (r, lambda)-designs

Blocks are kept as point bit masks together with a positive integer
multiplicity. The order of the blocks is part of the identity of a
structure: two structures are always paired by block index.

Config Example:
---------------

    design:
      file: demo/designs/fano.json
      add_empty_full: false
      add_complements: false
'''
from __future__ import division, absolute_import, print_function

import logging

from itertools import combinations
from typing import NamedTuple

from .errors import (NotADesign, NotADifferenceSet, NotPlanar, ShapeMismatch,
                     IndexOutOfRange, InvariantViolation, FormatError)
from .helper import popcount, mask_to_points, points_to_mask, load_json, dump_json

MAX_POINTS = 64

logger = logging.getLogger('dswitch.designs')


class DesignParams(NamedTuple):
    r: int
    lambda_: int

    def to_json(self) -> dict:
        return {'r': self.r, 'lambda': self.lambda_}


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class IncidenceStructure:
    '''
    Point set {0..v-1} with an ordered list of (block mask, multiplicity)

    Empty blocks are allowed, they are what closure() adds.
    '''

    __slots__ = ('v', 'blocks')

    def __init__(self, v: int, blocks) -> None:
        if not 0 <= v <= MAX_POINTS:
            raise ShapeMismatch(f'Point count {v} outside 0..{MAX_POINTS}')
        full = (1 << v) - 1
        res = []
        for i, (mask, mult) in enumerate(blocks):
            if mask & ~full or mask < 0:
                raise FormatError(f'Block {i} has points outside 0..{v - 1}')
            if not _is_int(mult) or mult < 1:
                raise FormatError(f'Block {i} has invalid multiplicity {mult!r}')
            res.append((mask, mult))
        self.v = v
        self.blocks = tuple(res)

    @classmethod
    def from_sets(cls, v: int, sets, mults=None) -> 'IncidenceStructure':
        sets = [points_to_mask(s) for s in sets]
        mults = mults or [1] * len(sets)
        if len(mults) != len(sets):
            raise ShapeMismatch('One multiplicity per block needed')
        return cls(v, list(zip(sets, mults)))

    @classmethod
    def from_incidence(cls, rows) -> 'IncidenceStructure':
        '''
        Creates a structure from a points x blocks matrix

        A column with entries in {0, m} is a block of multiplicity m.
        '''
        v = len(rows)
        b = len(rows[0]) if rows else 0
        blocks = []
        for j in range(b):
            col = [rows[i][j] for i in range(v)]
            nonzero = {x for x in col if x}
            if len(nonzero) > 1:
                raise FormatError(f'Column {j} mixes entries {sorted(nonzero)}')
            mult = nonzero.pop() if nonzero else 1
            blocks.append((points_to_mask(i for i, x in enumerate(col) if x), mult))
        return cls(v, blocks)

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def masks(self) -> tuple:
        return tuple(x[0] for x in self.blocks)

    @property
    def mults(self) -> tuple:
        return tuple(x[1] for x in self.blocks)

    @property
    def full_mask(self) -> int:
        return (1 << self.v) - 1

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for m in self.mults) and len(set(self.masks)) == self.b

    def incidence(self) -> list:
        '''
        0/1 points x blocks incidence matrix N
        '''
        return [[mask >> p & 1 for mask, _ in self.blocks] for p in range(self.v)]

    def permute_blocks(self, pi) -> 'IncidenceStructure':
        '''
        Block i of the result is block pi(i) of this structure
        '''
        if len(pi) != self.b:
            raise ShapeMismatch(f'Permutation of degree {len(pi)} on {self.b} blocks')
        return IncidenceStructure(self.v, [self.blocks[pi[i]] for i in range(self.b)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self.v == other.v and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.v, self.blocks))

    def __repr__(self) -> str:
        return f'IncidenceStructure(v={self.v}, b={self.b})'

    def to_json(self) -> dict:
        return {'v': self.v, 'blocks': [
            {'points': mask_to_points(mask), 'mult': mult}
            for mask, mult in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> 'IncidenceStructure':
        '''
        Parses {"v": int, "blocks": [{"points": [...], "mult": int}, ...]}
        '''
        if not isinstance(data, dict) or 'v' not in data or 'blocks' not in data:
            raise FormatError('Design JSON needs "v" and "blocks"')
        v = data['v']
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise FormatError(f'Invalid point count {v!r}')
        blocks = []
        for i, block in enumerate(data['blocks']):
            if isinstance(block, list):
                block = {'points': block}
            points = block.get('points')
            if not isinstance(points, list) or not all(_is_int(p) for p in points):
                raise FormatError(f'Block {i} needs a list of integer points')
            if len(set(points)) != len(points):
                raise FormatError(f'Block {i} repeats a point')
            if any(p < 0 or p >= v for p in points):
                raise FormatError(f'Block {i} has points outside 0..{v - 1}')
            blocks.append((points_to_mask(points), block.get('mult', 1)))
        return cls(v, blocks)


def replication(D: IncidenceStructure) -> list:
    '''
    Number of blocks through every point, multiplicities counted
    '''
    res = [0] * D.v
    for mask, mult in D.blocks:
        for p in mask_to_points(mask):
            res[p] += mult
    return res


def pair_coverage(D: IncidenceStructure) -> dict:
    '''
    Number of blocks through every pair p < q, multiplicities counted
    '''
    res = {pair: 0 for pair in combinations(range(D.v), 2)}
    for mask, mult in D.blocks:
        for pair in combinations(mask_to_points(mask), 2):
            res[pair] += mult
    return res


def validate(D: IncidenceStructure) -> DesignParams:
    '''
    Checks that D is an (r, lambda)-design

    Args:
    -----
    - D (IncidenceStructure): structure with at least two points

    Returns:
    --------
    DesignParams
    '''
    if D.v < 2:
        raise NotADesign(f'A design needs at least two points, got {D.v}')
    cover = pair_coverage(D)
    lambda_ = cover[(0, 1)]
    for pair, count in cover.items():
        if count != lambda_:
            raise NotADesign(
                f'Pair {list(pair)} lies in {count} blocks, pair [0, 1] in {lambda_}',
                witness={'pair': list(pair), 'count': count, 'expected': lambda_})
    reps = replication(D)
    r = reps[0]
    for p, count in enumerate(reps):
        if count != r:
            raise NotADesign(
                f'Point {p} lies in {count} blocks, point 0 in {r}',
                witness={'point': p, 'count': count, 'expected': r})
    _check_design_identities(D, r, lambda_)
    return DesignParams(r, lambda_)


def _check_design_identities(D: IncidenceStructure, r: int, lambda_: int) -> None:
    # N D_m N^T = lambda J + (r - lambda) I
    for p in range(D.v):
        for q in range(p, D.v):
            both = (1 << p) | (1 << q)
            value = sum(m for mask, m in D.blocks if mask & both == both)
            if value != (r if p == q else lambda_):
                raise InvariantViolation(
                    f'Weighted Gram entry ({p}, {q}) is {value}')
    # sum of |B| over blocks through p
    for p in range(D.v):
        total = sum(m * popcount(mask) for mask, m in D.blocks if mask >> p & 1)
        if total != r + (D.v - 1) * lambda_:
            raise InvariantViolation(
                f'Block size sum through point {p} is {total}')


def closure(D: IncidenceStructure, add_empty_full: bool = False,
            add_complements: bool = False) -> IncidenceStructure:
    '''
    Appends complements (in block order) and the empty and full block
    '''
    blocks = list(D.blocks)
    if add_complements:
        blocks.extend((D.full_mask & ~mask, mult) for mask, mult in D.blocks)
    if add_empty_full:
        blocks.extend([(0, 1), (D.full_mask, 1)])
    return IncidenceStructure(D.v, blocks)


def gram_witness(D1: IncidenceStructure, D2: IncidenceStructure):
    '''
    Returns the first index pair (i, j) with different intersection
    sizes, None if there is none
    '''
    if D1.v != D2.v or D1.b != D2.b:
        raise ShapeMismatch(
            f'Structures differ in shape: v={D1.v}/{D2.v}, b={D1.b}/{D2.b}')
    if D1.mults != D2.mults:
        raise ShapeMismatch('Multiplicity vectors differ')
    m1, m2 = D1.masks, D2.masks
    for i in range(D1.b):
        for j in range(i, D1.b):
            if popcount(m1[i] & m1[j]) != popcount(m2[i] & m2[j]):
                return (i, j)
    return None


def gram_profile(D1: IncidenceStructure, D2: IncidenceStructure) -> bool:
    '''
    True iff |B1i & B1j| = |B2i & B2j| for all block indices i <= j
    '''
    return gram_witness(D1, D2) is None


class DifferenceSet:
    '''
    Set of residues mod v where every nonzero residue is a difference
    of two elements exactly lambda times
    '''

    def __init__(self, modulus: int, residues) -> None:
        if modulus < 2:
            raise NotADifferenceSet(f'Modulus {modulus} too small')
        residues = sorted({x % modulus for x in residues})
        counts = [0] * modulus
        for a in residues:
            for b in residues:
                if a != b:
                    counts[(a - b) % modulus] += 1
        lambda_ = counts[1]
        for d in range(1, modulus):
            if counts[d] != lambda_:
                raise NotADifferenceSet(
                    f'Residue {d} is a difference {counts[d]} times, 1 is {lambda_}',
                    witness={'residue': d, 'count': counts[d]})
        self.modulus = modulus
        self.residues = tuple(residues)
        self.lambda_ = lambda_

    @property
    def k(self) -> int:
        return len(self.residues)

    def __repr__(self) -> str:
        return f'DifferenceSet({set(self.residues)} mod {self.modulus})'


def _shift(mask: int, i: int, v: int) -> int:
    return points_to_mask((p + i) % v for p in mask_to_points(mask))


def cyclic_plane(ds: DifferenceSet) -> IncidenceStructure:
    '''
    Projective plane with blocks {d + i mod v : d in residues}
    '''
    if ds.lambda_ != 1:
        raise NotPlanar(f'Difference set has lambda {ds.lambda_}, a plane needs 1')
    v = ds.modulus
    base = points_to_mask(ds.residues)
    P = IncidenceStructure(v, [(_shift(base, i, v), 1) for i in range(v)])
    try:
        params = validate(P)
    except NotADesign as e:
        raise NotPlanar(f'Shifted blocks do not form a plane: {e.message}')
    if params != DesignParams(ds.k, 1):
        raise NotPlanar(f'Unexpected parameters {tuple(params)}')
    return P


def _cyclic_base(P: IncidenceStructure) -> int:
    '''
    Returns the first block of a cyclic plane after checking that block
    i is block 0 shifted by i
    '''
    if P.b != P.v or P.v < 3:
        raise NotPlanar('Structure is not a cyclic plane')
    base = P.blocks[0][0]
    for i, (mask, mult) in enumerate(P.blocks):
        if mask != _shift(base, i, P.v) or mult != 1:
            raise NotPlanar(f'Block {i} is not block 0 shifted by {i}')
    return base


def line_orbit(P: IncidenceStructure, line_index: int) -> IncidenceStructure:
    '''
    The blocks L + i, i = 0..v-1, for the line L with the given index
    '''
    _cyclic_base(P)
    if not 0 <= line_index < P.v:
        raise IndexOutOfRange(f'Line index {line_index} outside 0..{P.v - 1}')
    line = P.blocks[line_index][0]
    return IncidenceStructure(P.v, [(_shift(line, i, P.v), 1) for i in range(P.v)])


def oval_companion(P: IncidenceStructure, line_index: int) -> IncidenceStructure:
    '''
    Oval companion of a line in a cyclic plane

    The oval is the set of points -x for x on the line. The companion
    has the shifted ovals as blocks, paired by index with line_orbit().

    Args:
    -----
    - P (IncidenceStructure): plane as produced by cyclic_plane
    - line_index (int): index of the line L

    Returns:
    --------
    IncidenceStructure
    '''
    _cyclic_base(P)
    if not 0 <= line_index < P.v:
        raise IndexOutOfRange(f'Line index {line_index} outside 0..{P.v - 1}')
    v = P.v
    line = P.blocks[line_index][0]
    oval = points_to_mask((-p) % v for p in mask_to_points(line))
    for i, (mask, _) in enumerate(P.blocks):
        if popcount(mask & oval) > 2:
            raise InvariantViolation(
                f'Line {i} meets the oval in {popcount(mask & oval)} points')
    companion = IncidenceStructure(v, [(_shift(oval, i, v), 1) for i in range(v)])
    if not gram_profile(line_orbit(P, line_index), companion):
        raise InvariantViolation('Oval companion breaks the intersection profile')
    logger.debug(f'Oval {mask_to_points(oval)} for line {mask_to_points(line)}')
    return companion


def cycle_adjacency(v: int) -> list:
    '''
    Adjacency of the cycle 0 - 1 - ... - (v-1) - 0
    '''
    return [[1 if (i - j) % v in (1, v - 1) else 0 for j in range(v)]
            for i in range(v)]


def singer_identity(P: IncidenceStructure) -> bool:
    '''
    Checks N^T A N = qA + 2J for a cyclic plane of order q and the
    cycle A following the Singer order of the points
    '''
    _cyclic_base(P)
    v = P.v
    q = popcount(P.blocks[0][0]) - 1
    A = cycle_adjacency(v)
    N = P.incidence()
    for i in range(v):
        for j in range(v):
            value = sum(N[x][i] * A[x][y] * N[y][j]
                        for x in range(v) if N[x][i] for y in range(v))
            if value != q * A[i][j] + 2:
                return False
    return True


def all_subsets(v: int, k: int) -> IncidenceStructure:
    '''
    All k-subsets of {0..v-1} in lexicographic order
    '''
    return IncidenceStructure.from_sets(v, combinations(range(v), k))


def affine_plane(q: int) -> IncidenceStructure:
    '''
    Lines of AG(2, q) for prime q, point (x, y) has index q*x + y,
    lines sorted by their point lists
    '''
    if q < 2 or any(q % d == 0 for d in range(2, q)):
        raise ShapeMismatch(f'AG(2, {q}) needs a prime order')
    lines = set()
    for a in range(q):
        # y = a*x + c
        for c in range(q):
            lines.add(tuple(sorted(q * x + (a * x + c) % q for x in range(q))))
    for c in range(q):
        lines.add(tuple(q * c + y for y in range(q)))
    return IncidenceStructure.from_sets(q * q, sorted(lines))


def parallel_classes(D: IncidenceStructure) -> list:
    '''
    Partition of the block indices into classes of pairwise disjoint
    blocks (parallelism of an affine design)
    '''
    classes = []
    for i, mask in enumerate(D.masks):
        for cls in classes:
            if all(not mask & D.masks[j] for j in cls):
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes


def load_design(filename: str) -> IncidenceStructure:
    return IncidenceStructure.from_json(load_json(filename))


def save_design(D: IncidenceStructure, filename: str) -> None:
    dump_json(D.to_json(), filename)
