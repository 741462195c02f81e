from __future__ import division, absolute_import, print_function

import logging

from ..designs import IncidenceStructure, validate
from ..errors import BudgetExceeded, NotAGroup
from ..switching import derive_R_perm, compatible_ac
from .groups import block_symmetry_group, design_automorphism_group, MAX_GROUP_ELEMENTS
from .perms import Permutation, PermSet, compose, invert, table

DOUBLE_COSET_BUDGET = 10 ** 8

logger = logging.getLogger('dswitch.classify')


def double_cosets(H: PermSet, G: PermSet, budget: int = DOUBLE_COSET_BUDGET) -> list:
    '''
    Double cosets HgH partitioning G

    G is swept in sorted order, every unmarked element becomes the
    representative of its double coset, which is expanded and marked.

    Args:
    -----
    - H (PermSet): subgroup of G
    - G (PermSet)
    - budget (int): Optional, maximal number of products

    Returns:
    --------
    list of (representative, coset size)
    '''
    if not H.issubset(G):
        raise NotAGroup('H is not contained in G')
    marks = bytearray(G.order)
    hs = H.raw
    htables = [table(h) for h in hs]
    cost_per_rep = len(hs) * len(hs)
    work = 0
    res = []
    for idx, g in enumerate(G.raw):
        if marks[idx]:
            continue
        work += cost_per_rep
        if work > budget:
            raise BudgetExceeded(
                f'Double coset expansion needs more than {budget} products',
                witness=len(res))
        members = set()
        for ht in htables:
            # h1 * g
            left = g.translate(ht)
            for h2 in hs:
                members.add(compose(left, h2))
        for x in members:
            marks[G.index[x]] = 1
        res.append((Permutation._raw(g), len(members)))
    logger.debug(f'{len(res)} double cosets of H ({H.order}) in G ({G.order})')
    return res


def double_coset_reps(H: PermSet, G: PermSet, budget: int = DOUBLE_COSET_BUDGET) -> list:
    '''
    Lexicographically least element of every double coset HgH
    '''
    return [rep for rep, _ in double_cosets(H, G, budget)]


def in_double_coset(H: PermSet, a, b) -> bool:
    '''
    True iff b lies in HaH, i.e. a^-1 h b is in H for some h
    '''
    a = bytes(a.images if isinstance(a, Permutation) else a)
    b = bytes(b.images if isinstance(b, Permutation) else b)
    ainv = invert(a)
    for h in H.raw:
        if compose(compose(ainv, h), b) in H.index:
            return True
    return False


class Classification:
    '''
    Groups, double cosets and derived schemes of one design
    '''

    def __init__(self, design, params, G, H, cosets, schemes) -> None:
        self.design = design
        self.params = params
        self.G = G
        self.H = H
        self.cosets = cosets
        self.schemes = schemes

    def to_json(self) -> dict:
        return {
            'r': self.params.r,
            'lambda': self.params.lambda_,
            'G_order': self.G.order,
            'H_order': self.H.order,
            'double_cosets': len(self.cosets),
            'representatives': [
                {'perm': rep.cycles(), 'size': size} for rep, size in self.cosets],
            'schemes': [
                {'perm': rep.cycles(), 'level': scheme.level,
                 'scheme': scheme.to_json(), 'ac_count': ac}
                for rep, scheme, ac in self.schemes],
        }


def schemes_from_design(D: IncidenceStructure, parallelism_only: bool = False,
                        with_ac: bool = False, budget: int = DOUBLE_COSET_BUDGET,
                        reps: list = None) -> list:
    '''
    Scheme of every non-identity double coset representative

    Returns:
    --------
    list of (representative, SwitchingScheme, A_C count or None)
    '''
    if reps is None:
        G = block_symmetry_group(D, parallelism_only)
        H = design_automorphism_group(D)
        reps = double_coset_reps(H, G, budget)
    res = []
    for rep in reps:
        if rep.is_identity():
            continue
        scheme = derive_R_perm(D, list(rep.images))
        ac = None
        if with_ac:
            ac = len(compatible_ac(scheme, up_to_symmetry=True))
        res.append((rep, scheme, ac))
    return res


def classify_design(D: IncidenceStructure, parallelism_only: bool = False,
                    with_ac: bool = False,
                    budget: int = DOUBLE_COSET_BUDGET,
                    max_elements: int = MAX_GROUP_ELEMENTS) -> Classification:
    '''
    Full classification of the switching methods of one design

    Args:
    -----
    - D (IncidenceStructure)
    - parallelism_only (bool): restrict G to parallelism preserving
      block permutations
    - with_ac (bool): count compatible A_C per scheme
    - budget (int): Optional, double coset product budget
    - max_elements (int): Optional, largest block permutation group

    Returns:
    --------
    Classification
    '''
    params = validate(D)
    G = block_symmetry_group(D, parallelism_only, max_elements)
    H = design_automorphism_group(D)
    cosets = double_cosets(H, G, budget)
    schemes = schemes_from_design(
        D, with_ac=with_ac, reps=[rep for rep, _ in cosets])
    return Classification(D, params, G, H, cosets, schemes)
