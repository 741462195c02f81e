'''
Bounded search for a factorization of a switching scheme

A scheme R is reducible for a given A_C if R = Q_1 ... Q_s (up to a final
relabeling of its columns) where every Q_i is a known switching matrix
placed on some of the points and every prefix product P keeps the
switched graph a graph: P^T A_C P is an adjacency matrix and P^T chi is
a 0/1 vector for every outside neighbourhood chi allowed by R.

The search is breadth first over distinct prefix products. Failing to
find a factorization within the bounds is not a proof of irreducibility,
only the level obstruction is.
'''
from __future__ import division, absolute_import, print_function

import logging

from fractions import Fraction
from itertools import permutations

from sympy import primefactors

from ..core import RatMatrix
from ..errors import BudgetExceeded, SizeTooLarge
from ..graph import Graph
from ..helper import mask_to_points
from ..switching import SwitchingScheme

MAX_REDUCE_V = 8
MAX_FACTORS = 4
REDUCE_BUDGET = 200000

ZERO = Fraction(0)
ONE = Fraction(1)

logger = logging.getLogger('dswitch.classify')


class Reduction:
    '''
    Factorization found: factors as (basis id, positions) in product order
    '''

    reduced = True

    def __init__(self, factors: list, explored: int) -> None:
        self.factors = factors
        self.explored = explored

    def to_json(self) -> dict:
        return {
            'reduced': True,
            'factors': [{'id': name, 'points': list(pos)} for name, pos in self.factors],
            'explored': self.explored,
        }


class NotReduced:
    '''
    No factorization: reason is "level" (proven) or "exhausted" (bounded)
    '''

    reduced = False

    def __init__(self, reason: str, explored: int = 0, primes=None) -> None:
        self.reason = reason
        self.explored = explored
        self.primes = primes or []

    def to_json(self) -> dict:
        res = {'reduced': False, 'reason': self.reason, 'explored': self.explored}
        if self.primes:
            res['primes'] = self.primes
        return res


def level_obstruction(scheme: SwitchingScheme, basis: list) -> list:
    '''
    Primes dividing the level of scheme but no level of the basis

    A product of matrices whose levels avoid a prime p has a level
    avoiding p, so any such prime rules out every factorization.
    '''
    available = set()
    for entry in basis:
        available.update(primefactors(entry.scheme.level))
    return [p for p in primefactors(scheme.level) if p not in available]


def _placements(basis: list, v: int) -> list:
    '''
    Every distinct non-identity embedding of a basis matrix into I_v
    '''
    res = []
    seen = set()
    ident = RatMatrix.identity(v)
    for entry in basis:
        B = entry.scheme.R
        k = B.rows
        if k > v:
            continue
        for positions in permutations(range(v), k):
            Q = B.embed(v, positions)
            if Q == ident or Q in seen:
                continue
            seen.add(Q)
            res.append((entry.id, positions, Q))
    return res


def _admissible(P: RatMatrix, A: RatMatrix, table: list) -> bool:
    B = P.T @ A @ P
    n = B.rows
    for i in range(n):
        if B[i, i] != ZERO:
            return False
        for j in range(i + 1, n):
            x = B[i, j]
            if x != B[j, i] or (x != ZERO and x != ONE):
                return False
    cols = P.columns()
    for points in table:
        for col in cols:
            s = sum((col[i] for i in points), ZERO)
            if s != ZERO and s != ONE:
                return False
    return True


def reduce_scheme(scheme: SwitchingScheme, ac: Graph, basis: list,
                  max_factors: int = MAX_FACTORS,
                  budget: int = REDUCE_BUDGET):
    '''
    Looks for a factorization of scheme into placed basis schemes

    Args:
    -----
    - scheme (SwitchingScheme): at most 8 points
    - ac (Graph): adjacency of the switching set
    - basis (list): catalog entries with id and scheme
    - max_factors (int): Optional, longest product searched
    - budget (int): Optional, maximal number of products formed

    Returns:
    --------
    Reduction or NotReduced
    '''
    v = scheme.v
    if v > MAX_REDUCE_V:
        raise SizeTooLarge(f'Reduction search needs v <= {MAX_REDUCE_V}, got {v}')
    primes = level_obstruction(scheme, basis)
    if primes:
        logger.debug(f'Level {scheme.level} has primes {primes} outside the basis')
        return NotReduced('level', primes=primes)
    R = scheme.R
    ident = RatMatrix.identity(v)
    if R == ident:
        return Reduction([], 0)
    target = sorted(R.columns())
    A = ac.to_matrix()
    table = [mask_to_points(chi) for chi in scheme.block_table]
    placements = _placements(basis, v)
    seen = {ident}
    frontier = [(ident, [])]
    explored = 0
    for depth in range(max_factors):
        following = []
        for P, factors in frontier:
            for name, positions, Q in placements:
                explored += 1
                if explored > budget:
                    raise BudgetExceeded(
                        f'Reduction search exceeded {budget} products', witness=depth)
                product = P @ Q
                if product in seen:
                    continue
                seen.add(product)
                if not _admissible(product, A, table):
                    continue
                path = factors + [(name, positions)]
                if sorted(product.columns()) == target:
                    logger.debug(f'Reduced with {len(path)} factors after {explored} products')
                    return Reduction(path, explored)
                following.append((product, path))
        frontier = following
        if not frontier:
            break
    return NotReduced('exhausted', explored)
