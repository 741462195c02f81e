'''
Decides whether a scheme comes from an (r, lambda)-design

Every non-trivial compatible vector B becomes a block with rational
multiplicity m_B = 1 + y_B, y_B >= 0. The blocks must cover every pair
and every point equally often. The linear system A y = b, y >= 0 is
solved with an exact two-phase simplex (Bland's rule). Infeasibility
is certified by a vector u with u^T A <= 0 and u^T b > 0.
'''
from __future__ import division, absolute_import, print_function

import math
import logging

from fractions import Fraction
from functools import reduce
from itertools import combinations

from ..errors import InvariantViolation, SizeTooLarge
from ..helper import mask_to_points, rational_to_json
from .scheme import SwitchingScheme, MAX_COMPATIBLE_V

ZERO = Fraction(0)
ONE = Fraction(1)

logger = logging.getLogger('dswitch.switching')


class SimplexTableau:
    '''
    Dense exact simplex tableau for min c^T x, A x = b, x >= 0 with
    b >= 0, started from an artificial basis
    '''

    def __init__(self, A: list, b: list) -> None:
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        # columns n..n+m-1 are the artificial variables
        self.T = [[Fraction(x) for x in row] + [ONE if k == i else ZERO for k in range(self.m)]
                  for i, row in enumerate(A)]
        self.rhs = [Fraction(x) for x in b]
        self.basis = [self.n + i for i in range(self.m)]
        self.active = list(range(self.n + self.m))

    def pivot(self, i: int, j: int) -> None:
        row = self.T[i]
        piv = row[j]
        self.T[i] = row = [x / piv for x in row]
        self.rhs[i] /= piv
        for k in range(self.m):
            if k != i:
                f = self.T[k][j]
                if f:
                    self.T[k] = [a - f * c for a, c in zip(self.T[k], row)]
                    self.rhs[k] -= f * self.rhs[i]
        self.basis[i] = j

    def reduced_costs(self, cost: dict) -> dict:
        '''
        Reduced cost of every active column for the cost vector
        '''
        res = {}
        for j in self.active:
            z = sum((cost.get(self.basis[i], ZERO) * self.T[i][j]
                     for i in range(self.m)), ZERO)
            res[j] = cost.get(j, ZERO) - z
        return res

    def minimize(self, cost: dict) -> str:
        '''
        Bland's rule minimization over the active columns
        '''
        while True:
            reduced = self.reduced_costs(cost)
            entering = [j for j in sorted(self.active) if reduced[j] < 0]
            if not entering:
                return 'optimal'
            j = entering[0]
            ratios = [(self.rhs[i] / self.T[i][j], self.basis[i], i)
                      for i in range(self.m) if self.T[i][j] > 0]
            if not ratios:
                return 'unbounded'
            _, _, i = min(ratios)
            self.pivot(i, j)

    def objective(self, cost: dict) -> Fraction:
        return sum((cost.get(self.basis[i], ZERO) * self.rhs[i]
                    for i in range(self.m)), ZERO)

    def drive_out_artificials(self) -> None:
        '''
        Pivots basic artificial variables out, rows without a structural
        entry are redundant and dropped
        '''
        i = 0
        while i < self.m:
            if self.basis[i] >= self.n:
                j = next((j for j in range(self.n) if self.T[i][j]), None)
                if j is None:
                    del self.T[i]
                    del self.rhs[i]
                    del self.basis[i]
                    self.m -= 1
                    continue
                self.pivot(i, j)
            i += 1
        self.active = list(range(self.n))

    def solution(self) -> list:
        x = [ZERO] * self.n
        for i, j in enumerate(self.basis):
            if j < self.n:
                x[j] = self.rhs[i]
        return x


class Realizability:
    '''
    Outcome of design_realizable
    '''

    def __init__(self, feasible: bool, blocks: list, params=None,
                 multiplicities=None, certificate=None, rows=None) -> None:
        self.feasible = feasible
        self.blocks = blocks
        self.params = params
        self.multiplicities = multiplicities
        self.certificate = certificate
        self.rows = rows

    def to_json(self) -> dict:
        if self.feasible:
            return {
                'feasible': True,
                'r': self.params[0],
                'lambda': self.params[1],
                'blocks': [{'points': mask_to_points(b), 'mult': m}
                           for b, m in zip(self.blocks, self.multiplicities)],
            }
        return {
            'feasible': False,
            'certificate': [{'row': label, 'u': rational_to_json(u)}
                            for label, u in zip(self.rows, self.certificate) if u],
        }


def _coverage_system(v: int, blocks: list) -> tuple:
    '''
    Rows "pair p,q covered as often as pair 0,1" and "point p covered as
    often as point 0" over the block multiplicities
    '''
    pairs = list(combinations(range(v), 2))
    labels, rows = [], []

    def count(mask, points):
        return 1 if all(mask >> p & 1 for p in points) else 0

    for pair in pairs[1:]:
        labels.append(f'pair {pair[0]},{pair[1]}')
        rows.append([count(B, pair) - count(B, (0, 1)) for B in blocks])
    for p in range(1, v):
        labels.append(f'point {p}')
        rows.append([count(B, (p,)) - count(B, (0,)) for B in blocks])
    return labels, rows


def design_realizable(scheme: SwitchingScheme,
                      max_v: int = MAX_COMPATIBLE_V) -> Realizability:
    '''
    Looks for multiplicities m_B >= 1 on the non-trivial compatible
    vectors turning them into an (r, lambda)-design

    Args:
    -----
    - scheme (SwitchingScheme)
    - max_v (int): Optional, largest supported size

    Returns:
    --------
    Realizability, either with the minimal total multiplicity scaled to
    integers and (r, lambda) counting the empty and the full block once,
    or with an infeasibility certificate
    '''
    v = scheme.v
    full = (1 << v) - 1
    if max_v < v:
        raise SizeTooLarge(f'Realizability needs v <= {max_v}, got {v}')
    blocks = [chi for chi in sorted(scheme.block_table) if chi not in (0, full)]
    labels, A = _coverage_system(v, blocks)
    # y = m - 1 >= 0
    b = [-sum(row) for row in A]
    signs = [1 if x >= 0 else -1 for x in b]
    At = [[s * x for x in row] for s, row in zip(signs, A)]
    bt = [s * x for s, x in zip(signs, b)]
    tableau = SimplexTableau(At, bt)
    n = len(blocks)
    phase1 = {n + i: ONE for i in range(len(At))}
    tableau.minimize(phase1)
    infeasibility = tableau.objective(phase1)
    if infeasibility > 0:
        # duals of phase 1, read from the artificial columns
        u = [sum((phase1.get(tableau.basis[i], ZERO) * tableau.T[i][n + k]
                  for i in range(tableau.m)), ZERO) for k in range(len(At))]
        u = [s * x for s, x in zip(signs, u)]
        _check_certificate(A, b, u)
        logger.debug(f'Scheme is not design realizable, phase 1 value {infeasibility}')
        return Realizability(False, blocks, certificate=u, rows=labels)
    tableau.drive_out_artificials()
    tableau.minimize({j: ONE for j in range(n)})
    y = tableau.solution()
    mults = [ONE + x for x in y]
    scale = reduce(lambda a, c: a * c // math.gcd(a, c), (x.denominator for x in mults), 1)
    ints = [int(x * scale) for x in mults]
    g = reduce(math.gcd, ints, 0) or 1
    ints = [x // g for x in ints]
    for row in A:
        if sum(c * m for c, m in zip(row, ints)):
            raise InvariantViolation('Multiplicities do not solve the coverage system')
    lambda_ = sum(m for B, m in zip(blocks, ints) if B & 3 == 3) + 1
    r = sum(m for B, m in zip(blocks, ints) if B & 1) + 1
    return Realizability(True, blocks, params=(r, lambda_), multiplicities=ints)


def _check_certificate(A: list, b: list, u: list) -> None:
    for j in range(len(A[0]) if A else 0):
        if sum(u[i] * A[i][j] for i in range(len(A))) > 0:
            raise InvariantViolation('Certificate violates u^T A <= 0', witness=j)
    if sum(x * y for x, y in zip(u, b)) <= 0:
        raise InvariantViolation('Certificate violates u^T b > 0')
