from __future__ import division, absolute_import, print_function

import math
import networkx as nx

from fractions import Fraction
from functools import reduce

from ..errors import NonIntegralMatrix, ShapeMismatch, FormatError
from ..helper import rational_to_json, rational_from_json

ZERO = Fraction(0)
ONE = Fraction(1)


class RatMatrix:
    '''
    Dense immutable matrix of exact rationals

    Entries are stored row-major as reduced Fractions, so equality of
    matrices is entrywise equality of reduced forms.
    '''

    __slots__ = ('rows', 'cols', 'entries', '_hash')

    def __init__(self, rows: int, cols: int, entries) -> None:
        entries = tuple(
            x if isinstance(x, Fraction) else Fraction(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeMismatch(
                f'{len(entries)} entries do not fit a {rows}x{cols} matrix')
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def _make(cls, rows: int, cols: int, entries: tuple) -> 'RatMatrix':
        res = cls.__new__(cls)
        res.rows = rows
        res.cols = cols
        res.entries = entries
        res._hash = None
        return res

    # constructors

    @classmethod
    def from_rows(cls, rows, scale=1) -> 'RatMatrix':
        '''
        Creates a matrix from a list of rows, multiplied by scale

        Args:
        -----
        - rows (list): list of equally long rows
        - scale (int, Fraction): Optional scalar factor

        Returns:
        --------
        RatMatrix
        '''
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch('Rows have different lengths')
        scale = Fraction(scale)
        return cls._make(len(rows), ncols, tuple(
            Fraction(x) * scale for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> 'RatMatrix':
        return cls._make(n, n, tuple(
            ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int = None) -> 'RatMatrix':
        cols = rows if cols is None else cols
        return cls._make(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def ones(cls, rows: int, cols: int = None) -> 'RatMatrix':
        cols = rows if cols is None else cols
        return cls._make(rows, cols, (ONE,) * (rows * cols))

    @classmethod
    def circulant(cls, first_row, scale=1) -> 'RatMatrix':
        '''
        Circulant matrix, row i is the first row shifted i places right
        '''
        n = len(first_row)
        return cls.from_rows(
            [[first_row[(j - i) % n] for j in range(n)] for i in range(n)],
            scale)

    @classmethod
    def from_blocks(cls, blocks, scale=1) -> 'RatMatrix':
        '''
        Assembles a matrix from a grid of blocks

        Args:
        -----
        - blocks (list): rows of RatMatrix blocks
        - scale: Optional scalar factor

        Returns:
        --------
        RatMatrix
        '''
        rows = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ShapeMismatch('Blocks in a row differ in height')
            for i in range(height):
                row = []
                for b in brow:
                    row.extend(b.row(i))
                rows.append(row)
        return cls.from_rows(rows, scale)

    @classmethod
    def block_circulant(cls, blocks, scale=1) -> 'RatMatrix':
        '''
        Block circulant matrix, block (i, j) is blocks[(j - i) mod m]
        '''
        m = len(blocks)
        return cls.from_blocks(
            [[blocks[(j - i) % m] for j in range(m)] for i in range(m)],
            scale)

    @classmethod
    def block_diag(cls, *mats) -> 'RatMatrix':
        n = sum(m.rows for m in mats)
        k = sum(m.cols for m in mats)
        entries = [ZERO] * (n * k)
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                for j in range(m.cols):
                    entries[(r0 + i) * k + c0 + j] = m.entries[i * m.cols + j]
            r0 += m.rows
            c0 += m.cols
        return cls._make(n, k, tuple(entries))

    # access

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    # arithmetic

    @property
    def T(self) -> 'RatMatrix':
        return self.transpose()

    def transpose(self) -> 'RatMatrix':
        return RatMatrix._make(self.cols, self.rows, tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: 'RatMatrix') -> 'RatMatrix':
        if self.cols != other.rows:
            raise ShapeMismatch(
                f'Cannot multiply {self.shape} with {other.shape}')
        ocols = other.columns()
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            nz = [(k, x) for k, x in enumerate(row) if x]
            for col in ocols:
                entries.append(sum((x * col[k] for k, x in nz), ZERO))
        return RatMatrix._make(self.rows, other.cols, tuple(entries))

    def _check_same_shape(self, other: 'RatMatrix') -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f'Shapes {self.shape} and {other.shape} differ')

    def __add__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_shape(other)
        return RatMatrix._make(self.rows, self.cols, tuple(
            a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_shape(other)
        return RatMatrix._make(self.rows, self.cols, tuple(
            a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> 'RatMatrix':
        return RatMatrix._make(
            self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, scalar) -> 'RatMatrix':
        scalar = Fraction(scalar)
        return RatMatrix._make(
            self.rows, self.cols, tuple(a * scalar for a in self.entries))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        rows = ['[' + ', '.join(str(x) for x in self.row(i)) + ']'
                for i in range(self.rows)]
        return f'RatMatrix({self.rows}x{self.cols}, [{", ".join(rows)}])'

    # integrality

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def to_int_rows(self) -> list:
        if not self.is_integral:
            raise NonIntegralMatrix('Matrix has non-integral entries')
        return [[x.numerator for x in self.row(i)] for i in range(self.rows)]

    def scaled_int(self) -> tuple:
        '''
        Returns (l, M) where l is the level and M = l * self as int rows
        '''
        ell = level(self)
        return ell, [[(x * ell).numerator for x in self.row(i)]
                     for i in range(self.rows)]

    # relabeling

    def permuted(self, sigma) -> 'RatMatrix':
        '''
        Simultaneous row/column relabeling, entry (i, j) becomes
        entry (sigma(i), sigma(j)) of self
        '''
        n = self.rows
        if not self.is_square or len(sigma) != n:
            raise ShapeMismatch('Simultaneous permutation needs a square matrix')
        return RatMatrix._make(n, n, tuple(
            self.entries[sigma[i] * n + sigma[j]]
            for i in range(n) for j in range(n)))

    def embed(self, n: int, positions) -> 'RatMatrix':
        '''
        Places this square matrix on the given positions of I_n
        '''
        k = self.rows
        entries = list(RatMatrix.identity(n).entries)
        for a in range(k):
            for b in range(k):
                entries[positions[a] * n + positions[b]] = self.entries[a * k + b]
        return RatMatrix._make(n, n, tuple(entries))

    # serialization

    def to_json(self) -> list:
        return [rational_to_json(x) for x in self.entries]

    @classmethod
    def from_json(cls, n: int, data: list) -> 'RatMatrix':
        if not isinstance(data, list) or len(data) != n * n:
            raise FormatError(f'Expected {n * n} matrix entries')
        return cls._make(n, n, tuple(rational_from_json(x) for x in data))


def is_regular_orthogonal(Q: RatMatrix) -> bool:
    '''
    Returns True iff QQ^T = I and QJ = J, both exactly
    '''
    if not Q.is_square:
        return False
    n = Q.rows
    rows = [Q.row(i) for i in range(n)]
    for i in range(n):
        if sum(rows[i]) != ONE:
            return False
        for j in range(i, n):
            dot = sum((a * b for a, b in zip(rows[i], rows[j]) if a), ZERO)
            if dot != (ONE if i == j else ZERO):
                return False
    return True


def level(Q: RatMatrix) -> int:
    '''
    Smallest positive integer l such that l * Q is integral
    '''
    return reduce(
        lambda a, b: a * b // math.gcd(a, b),
        (x.denominator for x in Q.entries), 1)


def support_blocks(Q: RatMatrix) -> list:
    '''
    Returns (rows, cols) index lists of the connected components of the
    bipartite support graph of Q, ordered by their smallest row
    '''
    g = nx.Graph()
    g.add_nodes_from(('r', i) for i in range(Q.rows))
    g.add_nodes_from(('c', j) for j in range(Q.cols))
    g.add_edges_from(
        (('r', i), ('c', j))
        for i in range(Q.rows) for j in range(Q.cols) if Q[i, j])
    res = []
    for comp in nx.connected_components(g):
        rows = sorted(x[1] for x in comp if x[0] == 'r')
        cols = sorted(x[1] for x in comp if x[0] == 'c')
        res.append((rows, cols))
    res.sort(key=lambda x: (x[0][:1] or [Q.rows], x[1][:1]))
    return res


def is_decomposable(Q: RatMatrix) -> bool:
    '''
    True iff Q splits into at least two non-identity diagonal blocks
    '''
    nonidentity = 0
    for rows, cols in support_blocks(Q):
        if len(rows) == len(cols) and all(
                Q[r, c] == (ONE if a == b else ZERO)
                for a, r in enumerate(rows) for b, c in enumerate(cols)):
            continue
        nonidentity += 1
    return nonidentity >= 2
