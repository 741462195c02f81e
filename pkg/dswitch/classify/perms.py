from __future__ import division, absolute_import, print_function

import random

from ..errors import NotAGroup, FormatError
from ..helper import parse_cycles, format_cycles

# closure is checked on all products up to this size, sampled above
EXHAUSTIVE_CLOSURE = 5000
CLOSURE_SAMPLES = 20000


class Permutation:
    '''
    Bijection on {0..n-1} stored as image bytes, n <= 256

    Products compose right to left: (p * q)(i) = p(q(i)).
    '''

    __slots__ = ('images',)

    def __init__(self, images) -> None:
        images = bytes(images)
        if sorted(images) != list(range(len(images))):
            raise FormatError('Images do not form a permutation')
        self.images = images

    @classmethod
    def _raw(cls, images: bytes) -> 'Permutation':
        res = cls.__new__(cls)
        res.images = images
        return res

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls._raw(bytes(range(n)))

    @classmethod
    def from_cycles(cls, txt: str, n: int) -> 'Permutation':
        return cls(parse_cycles(txt, n))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        return Permutation._raw(compose(self.images, other.images))

    def inverse(self) -> 'Permutation':
        return Permutation._raw(invert(self.images))

    def is_identity(self) -> bool:
        return self.images == bytes(range(len(self.images)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: 'Permutation') -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def cycles(self) -> str:
        '''
        1-based cycle notation
        '''
        return format_cycles(list(self.images))

    def __repr__(self) -> str:
        return f'Permutation({self.cycles()})'


def table(images: bytes) -> bytes:
    return images + bytes(range(len(images), 256))


def compose(p: bytes, q: bytes) -> bytes:
    '''
    Image bytes of p * q, i.e. i -> p(q(i))
    '''
    return q.translate(table(p))


def invert(p: bytes) -> bytes:
    res = bytearray(len(p))
    for i, x in enumerate(p):
        res[x] = i
    return bytes(res)


class PermSet:
    '''
    Explicit sorted set of permutations of one degree forming a group
    '''

    def __init__(self, degree: int, elements, verify: bool = True) -> None:
        raw = sorted({bytes(x.images if isinstance(x, Permutation) else x)
                      for x in elements})
        if any(len(x) != degree for x in raw):
            raise NotAGroup(f'Elements of different degree in a group of degree {degree}')
        self.degree = degree
        self.raw = raw
        self.index = {x: i for i, x in enumerate(raw)}
        if verify:
            self._verify()

    def _verify(self) -> None:
        ident = bytes(range(self.degree))
        if ident not in self.index:
            raise NotAGroup('Identity is missing')
        for x in self.raw:
            if invert(x) not in self.index:
                raise NotAGroup(f'Inverse of {format_cycles(list(x))} is missing')
        if len(self.raw) <= EXHAUSTIVE_CLOSURE:
            pairs = ((a, b) for a in self.raw for b in self.raw)
        else:
            rng = random.Random(len(self.raw))
            pairs = ((rng.choice(self.raw), rng.choice(self.raw))
                     for _ in range(CLOSURE_SAMPLES))
        for a, b in pairs:
            if compose(a, b) not in self.index:
                raise NotAGroup('Set is not closed under composition', witness=[
                    format_cycles(list(a)), format_cycles(list(b))])

    @property
    def order(self) -> int:
        return len(self.raw)

    def __len__(self) -> int:
        return len(self.raw)

    def __iter__(self):
        return (Permutation._raw(x) for x in self.raw)

    def __contains__(self, p) -> bool:
        key = p.images if isinstance(p, Permutation) else bytes(p)
        return key in self.index

    def issubset(self, other: 'PermSet') -> bool:
        return self.degree == other.degree and all(x in other.index for x in self.raw)

    def __repr__(self) -> str:
        return f'PermSet(degree={self.degree}, order={self.order})'
