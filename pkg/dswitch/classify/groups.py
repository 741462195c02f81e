from __future__ import division, absolute_import, print_function

import logging

from collections import Counter, defaultdict

from ..designs import IncidenceStructure, parallel_classes
from ..errors import GroupTooLarge, ShapeMismatch
from ..helper import popcount, mask_to_points, points_to_mask
from .perms import PermSet

MAX_GROUP_ELEMENTS = 10 ** 6
MAX_AUTOMORPHISM_POINTS = 13

logger = logging.getLogger('dswitch.classify')


def block_symmetry_group(D: IncidenceStructure, parallelism_only: bool = False,
                         max_elements: int = MAX_GROUP_ELEMENTS) -> PermSet:
    '''
    All block permutations preserving every pairwise intersection size
    and the multiplicity of every block

    Images are assigned block by block in increasing order, so the
    elements come out sorted.

    Args:
    -----
    - D (IncidenceStructure)
    - parallelism_only (bool): additionally map parallel classes onto
      parallel classes
    - max_elements (int): Optional, raise GroupTooLarge beyond this

    Returns:
    --------
    PermSet
    '''
    b = D.b
    masks, mults = D.masks, D.mults
    inter = [[popcount(x & y) for y in masks] for x in masks]
    # candidates by profile: size, multiplicity, sorted intersection row
    profile = [(mults[i], inter[i][i], sorted(inter[i])) for i in range(b)]
    candidates = [[j for j in range(b) if profile[j] == profile[i]] for i in range(b)]
    cls_of = {}
    if parallelism_only:
        for k, cls in enumerate(parallel_classes(D)):
            for i in cls:
                cls_of[i] = k
    res = []
    images = [0] * b
    used = [False] * b

    def search(i):
        if i == b:
            res.append(bytes(images))
            if len(res) > max_elements:
                raise GroupTooLarge(
                    f'More than {max_elements} block permutations', bound=len(res))
            return
        row = inter[i]
        for j in candidates[i]:
            if used[j]:
                continue
            jrow = inter[j]
            if any(jrow[images[k]] != row[k] for k in range(i)):
                continue
            if parallelism_only and any(
                    (cls_of[k] == cls_of[i]) != (cls_of[images[k]] == cls_of[j])
                    for k in range(i)):
                continue
            images[i] = j
            used[j] = True
            search(i + 1)
            used[j] = False

    search(0)
    logger.debug(f'Block symmetry group of order {len(res)} on {b} blocks')
    return PermSet(b, res)


def point_automorphisms(D: IncidenceStructure,
                        max_points: int = MAX_AUTOMORPHISM_POINTS) -> list:
    '''
    Point permutations mapping the block multiset onto itself

    Points are assigned in increasing order, a block is checked as soon
    as its largest point has an image.
    '''
    v = D.v
    if v > max_points:
        raise ShapeMismatch(f'Automorphism search needs v <= {max_points}, got {v}')
    mults = defaultdict(list)
    for mask, mult in D.blocks:
        mults[mask].append(mult)
    # multiset of column multiplicities per block mask
    weight = {mask: tuple(sorted(m)) for mask, m in mults.items()}
    # blocks to check once point p is assigned
    closing = defaultdict(list)
    for mask in weight:
        if mask:
            closing[max(mask_to_points(mask))].append(mask)
    signature = []
    for p in range(v):
        signature.append(sorted(
            (popcount(mask), w) for mask, w in weight.items() if mask >> p & 1))
    candidates = [[q for q in range(v) if signature[q] == signature[p]] for p in range(v)]
    res = []
    sigma = [0] * v
    used = [False] * v

    def search(p):
        if p == v:
            res.append(list(sigma))
            return
        for q in candidates[p]:
            if used[q]:
                continue
            sigma[p] = q
            ok = True
            for mask in closing[p]:
                image = points_to_mask(sigma[x] for x in mask_to_points(mask))
                if weight.get(image) != weight[mask]:
                    ok = False
                    break
            if ok:
                used[q] = True
                search(p + 1)
                used[q] = False

    search(0)
    return res


def induced_block_permutation(D: IncidenceStructure, sigma) -> bytes:
    '''
    Block permutation pi with B_pi(i) = sigma(B_i), repeated blocks are
    matched in order of appearance
    '''
    positions = defaultdict(list)
    for i, (mask, mult) in enumerate(D.blocks):
        positions[(mask, mult)].append(i)
    seen = Counter()
    res = bytearray(D.b)
    for i, (mask, mult) in enumerate(D.blocks):
        image = points_to_mask(sigma[x] for x in mask_to_points(mask))
        key = (image, mult)
        res[i] = positions[key][seen[key]]
        seen[key] += 1
    return bytes(res)


def design_automorphism_group(D: IncidenceStructure,
                              max_points: int = MAX_AUTOMORPHISM_POINTS) -> PermSet:
    '''
    Automorphism group of D acting on its blocks

    Args:
    -----
    - D (IncidenceStructure): at most 13 points

    Returns:
    --------
    PermSet of induced block permutations
    '''
    autos = point_automorphisms(D, max_points)
    res = PermSet(D.b, [induced_block_permutation(D, s) for s in autos])
    logger.debug(f'{len(autos)} point automorphisms, {res.order} on blocks')
    return res


def induces_automorphism(D: IncidenceStructure, pi) -> bool:
    '''
    True iff the block permutation pi is induced by an automorphism
    '''
    images = bytes(pi.images if hasattr(pi, 'images') else pi)
    return images in design_automorphism_group(D)
