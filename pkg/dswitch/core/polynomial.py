from __future__ import division, absolute_import, print_function

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..errors import NonSquareMatrix, NonIntegralMatrix


class IntPolynomial:
    '''
    Polynomial with integer coefficients, index = degree
    '''

    __slots__ = ('coefficients',)

    def __init__(self, coefficients) -> None:
        coefficients = [int(x) for x in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients = tuple(coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f'IntPolynomial({self})'

    def __str__(self) -> str:
        if self.is_zero:
            return '0'
        terms = []
        for deg in range(self.degree, -1, -1):
            c = self.coefficients[deg]
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            c = abs(c)
            if deg == 0:
                body = str(c)
            else:
                power = 'x' if deg == 1 else f'x^{deg}'
                body = power if c == 1 else f'{c}*{power}'
            terms.append((sign, body))
        first_sign, first = terms[0]
        res = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            res += f' {sign} {body}'
        return res

    def to_json(self) -> list:
        return list(self.coefficients)


def charpoly(A) -> IntPolynomial:
    '''
    Characteristic polynomial det(xI - A) of an integral square matrix

    The computation runs over the integers with division free
    arithmetic, so the coefficients are exact at every size.

    Args:
    -----
    - A (RatMatrix or list): square matrix with integral entries

    Returns:
    --------
    IntPolynomial
    '''
    if hasattr(A, 'rows') and hasattr(A, 'entries'):
        if not A.is_square:
            raise NonSquareMatrix(f'Matrix of shape {A.shape} is not square')
        if not A.is_integral:
            raise NonIntegralMatrix('Characteristic polynomial needs integral entries')
        rows = A.to_int_rows()
    else:
        rows = [list(r) for r in A]
        if any(len(r) != len(rows) for r in rows):
            raise NonSquareMatrix('Matrix is not square')
        if any(not isinstance(x, int) for r in rows for x in r):
            raise NonIntegralMatrix('Characteristic polynomial needs integral entries')
    n = len(rows)
    if n == 0:
        return IntPolynomial([1])
    dm = DomainMatrix([[ZZ(x) for x in r] for r in rows], (n, n), ZZ)
    # highest degree first
    coeffs = [int(c) for c in dm.charpoly()]
    return IntPolynomial(reversed(coeffs))
