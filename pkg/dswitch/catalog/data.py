'''
Printed incidence matrices, block permutations and switching matrices

Matrices are kept as whitespace separated integer rows together with a
denominator, permutations in 1-based cycle notation as printed.
'''
from __future__ import division, absolute_import, print_function


def int_rows(text: str) -> list:
    return [[int(x) for x in line.split()]
            for line in text.strip().splitlines() if line.strip()]


def bit_rows(text: str) -> list:
    return [[int(x) for x in line.strip()] for line in text.split()]


# Fano plane

FANO_N = '''
    1 1 1 0 0 0 0
    1 0 0 1 1 0 0
    1 0 0 0 0 1 1
    0 1 0 1 0 1 0
    0 1 0 0 1 0 1
    0 0 1 1 0 0 1
    0 0 1 0 1 1 0
'''

FANO_H_GENERATORS = ['(1 3)(5 7)', '(1 4 2)(3 5 6)']

FANO_PERMS = ['()', '(6 7)', '(5 6 7)', '(3 4)(5 6 7)']

FANO_R = [
    (1, '''
    1 0 0 0 0 0 0
    0 1 0 0 0 0 0
    0 0 1 0 0 0 0
    0 0 0 1 0 0 0
    0 0 0 0 1 0 0
    0 0 0 0 0 1 0
    0 0 0 0 0 0 1
    '''),
    (2, '''
    2 0 0  0  0  0  0
    0 2 0  0  0  0  0
    0 0 2  0  0  0  0
    0 0 0  1  1  1 -1
    0 0 0  1  1 -1  1
    0 0 0  1 -1  1  1
    0 0 0 -1  1  1  1
    '''),
    (2, '''
    2  0  0  0  0  0  0
    0  1  1  1 -1  0  0
    0  1  1 -1  1  0  0
    0  0  0  1  1  1 -1
    0  0  0  1  1 -1  1
    0  1 -1  0  0  1  1
    0 -1  1  0  0  1  1
    '''),
    (2, '''
     1  1  0  1  0  0 -1
     1  0  1  0 -1  0  1
     0  1  1 -1  1  0  0
     1 -1  0  0  1  1  0
     0  0  0  1  1 -1  1
     0  1 -1  0  0  1  1
    -1  0  1  1  0  1  0
    '''),
]

FANO_CIRCULANT = (2, [-1, 1, 1, 0, 1, 0, 0])

# cube switching, blocks of order 2: I, Z = J - I

CUBE_BLOCKS = [
    ['-I', 'I', 'I', 'I'],
    ['I', '-Z', 'I', 'Z'],
    ['I', 'Z', '-Z', 'I'],
    ['I', 'I', 'Z', '-Z'],
]

# small designs

AG22_N = '''
    1 1 1 0 0 0
    1 0 0 1 1 0
    0 1 0 1 0 1
    0 0 1 0 1 1
'''

AG22_PERM = '(1 6)(2 5)(3 4)'

GM6_N = '''
    1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0
    1 1 1 1 0 0 0 0 0 0 1 1 1 1 1 1 0 0 0 0
    1 0 0 0 1 1 1 0 0 0 1 1 1 0 0 0 1 1 1 0
    0 1 0 0 1 0 0 1 1 0 1 0 0 1 1 0 1 1 0 1
    0 0 1 0 0 1 0 1 0 1 0 1 0 1 0 1 1 0 1 1
    0 0 0 1 0 0 1 0 1 1 0 0 1 0 1 1 0 1 1 1
'''

# B_i -> B_{21-i}
GM6_PERM = ''.join(f'({i} {21 - i})' for i in range(1, 11))

WQH6_N = '''
    1 1 1 1 0 0 0 0 0 0 0
    1 0 0 0 1 1 1 0 0 0 0
    1 0 0 0 0 0 0 1 1 1 0
    0 1 0 0 1 0 0 1 0 0 1
    0 0 1 0 0 1 0 0 1 0 1
    0 0 0 1 0 0 1 0 0 1 1
'''

WQH6_PERM = '(1 11)'

AH6_N = '''
    1 1 1 1 1 1 1 0 0 0 0 0 0 0
    1 1 1 0 0 0 0 1 1 1 1 0 0 0
    1 0 0 1 1 0 0 1 1 0 0 1 1 0
    1 0 0 0 0 1 1 0 0 1 1 1 1 0
    0 1 0 1 0 1 0 1 0 1 0 1 0 1
    0 1 0 0 1 0 1 0 1 0 1 1 0 1
'''

AH6_PERM = '(5 6 8)(7 10 9)'

# points and planes of AG(3,2)

AG32_N = '''
    1 1 1 1 1 1 1 0 0 0 0 0 0 0
    1 1 1 0 0 0 0 1 1 1 1 0 0 0
    1 0 0 1 1 0 0 1 1 0 0 1 1 0
    1 0 0 0 0 1 1 0 0 1 1 1 1 0
    0 1 0 1 0 1 0 1 0 1 0 1 0 1
    0 1 0 0 1 0 1 0 1 0 1 1 0 1
    0 0 1 1 0 0 1 0 1 1 0 0 1 1
    0 0 1 0 1 1 0 1 0 0 1 0 1 1
'''

AG32_PERMS = [
    '()',
    '(6 7)(8 9)',
    '(5 6 7)(8 10 9)',
    '(3 4)(5 6 7)(8 10 9)(11 12)',
    '(3 12)(5 10)(6 9)(7 8)',
    '(3 12)(5 10)(6 9)',
    '(7 8)',
    '(3 12)(5 10)(6 8)(7 9)',
    '(3 12)(5 9 7 10 6 8)',
    '(3 12)(5 10)(6 8 9 7)',
    '(6 7 9 8)',
    '(3 12)(5 9 7)(6 8 10)',
    '(5 6 7 10 9 8)',
    '(3 11 12 4)(5 9 7)(6 8 10)',
]

AG32_R = [
    (1, '''
    1 0 0 0 0 0 0 0
    0 1 0 0 0 0 0 0
    0 0 1 0 0 0 0 0
    0 0 0 1 0 0 0 0
    0 0 0 0 1 0 0 0
    0 0 0 0 0 1 0 0
    0 0 0 0 0 0 1 0
    0 0 0 0 0 0 0 1
    '''),
    (2, '''
    2 0 0 0  0  0  0  0
    0 2 0 0  0  0  0  0
    0 0 2 0  0  0  0  0
    0 0 0 2  0  0  0  0
    0 0 0 0  1  1  1 -1
    0 0 0 0  1  1 -1  1
    0 0 0 0  1 -1  1  1
    0 0 0 0 -1  1  1  1
    '''),
    (2, '''
    2 0  0  0  0  0  0  0
    0 2  0  0  0  0  0  0
    0 0  1  1  1 -1  0  0
    0 0  1  1 -1  1  0  0
    0 0  0  0  1  1  1 -1
    0 0  0  0  1  1 -1  1
    0 0  1 -1  0  0  1  1
    0 0 -1  1  0  0  1  1
    '''),
    (2, '''
    2  0  0  0  0  0  0  0
    0  1  1  0  1  0  0 -1
    0  1  0  1  0 -1  0  1
    0  0  1  1 -1  1  0  0
    0  1 -1  0  0  1  1  0
    0  0  0  0  1  1 -1  1
    0  0  1 -1  0  0  1  1
    0 -1  0  1  1  0  1  0
    '''),
    (2, '''
     0  1  1  0  1  0  0 -1
     1  0  0  1  0  1 -1  0
     1  0  0  1  0 -1  1  0
     0  1  1  0 -1  0  0  1
     1  0  0 -1  0  1  1  0
     0  1 -1  0  1  0  0  1
     0 -1  1  0  1  0  0  1
    -1  0  0  1  0  1  1  0
    '''),
    (4, '''
     1  1  1  1  1  1  1 -3
     1  1  1  1  1  1 -3  1
     1  1  1  1  1 -3  1  1
     1  1  1  1 -3  1  1  1
     1  1  1 -3  1  1  1  1
     1  1 -3  1  1  1  1  1
     1 -3  1  1  1  1  1  1
    -3  1  1  1  1  1  1  1
    '''),
    (4, '''
     3  1  1 -1  1 -1 -1  1
     1  3 -1  1 -1  1  1 -1
     1 -1  3  1 -1  1  1 -1
    -1  1  1  3  1 -1 -1  1
     1 -1 -1  1  3  1  1 -1
    -1  1  1 -1  1  3 -1  1
    -1  1  1 -1  1 -1  3  1
     1 -1 -1  1 -1  1  1  3
    '''),
    (2, '''
     0  1  1  0  1  0  0 -1
     1  0  0  1  0  1 -1  0
     1  0  0  1  0 -1  1  0
     0  1  1  0 -1  0  0  1
     1  0  0 -1  1  0  0  1
     0  1 -1  0  0  1  1  0
     0 -1  1  0  0  1  1  0
    -1  0  0  1  1  0  0  1
    '''),
    (2, '''
     0  1  1  0  1  0  0 -1
     1  0  0  1  0  1 -1  0
     1  0  1  0 -1  0  1  0
     0  1  0  1  0 -1  0  1
     1  0  0 -1  1  0  0  1
     0  1 -1  0  0  1  1  0
     0 -1  0  1  1  0  1  0
    -1  0  1  0  0  1  0  1
    '''),
    (4, '''
     1  1  1  1  1  1  1 -3
     1  1  1  1  1  1 -3  1
     1  1  1  1  1 -3  1  1
     1  1  1  1 -3  1  1  1
     3 -1 -1 -1  1  1  1  1
    -1  3 -1 -1  1  1  1  1
    -1 -1  3 -1  1  1  1  1
    -1 -1 -1  3  1  1  1  1
    '''),
    (4, '''
     3  1  1 -1  1 -1 -1  1
     1  3 -1  1 -1  1  1 -1
     1 -1  3  1 -1  1  1 -1
    -1  1  1  3  1 -1 -1  1
    -1  1  1 -1  3  1  1 -1
     1 -1 -1  1  1  3 -1  1
     1 -1 -1  1  1 -1  3  1
    -1  1  1 -1 -1  1  1  3
    '''),
    (4, '''
     1  1  1  1  1  1  1 -3
     1  1  1  1  1  1 -3  1
     3 -1  1  1 -1 -1  1  1
    -1  3  1  1 -1 -1  1  1
     1  1 -1 -1  3 -1  1  1
     1  1 -1 -1 -1  3  1  1
    -1 -1  3 -1  1  1  1  1
    -1 -1 -1  3  1  1  1  1
    '''),
    (4, '''
     3  1  1 -1  1 -1 -1  1
     1  3 -1  1 -1  1  1 -1
    -1  1  3  1  1 -1  1 -1
     1 -1  1  3 -1  1 -1  1
     1 -1  1 -1  1  3  1 -1
    -1  1 -1  1  3  1 -1  1
     1 -1 -1  1  1 -1  3  1
    -1  1  1 -1 -1  1  1  3
    '''),
    (4, '''
     1  1  1  1  1  1  1 -3
     3  1  1 -1  1 -1 -1  1
     1 -1  1  3 -1  1 -1  1
    -1  3  1  1 -1 -1  1  1
    -1  1 -1  1  3  1 -1  1
     1  1 -1 -1 -1  3  1  1
    -1 -1  3 -1  1  1  1  1
     1 -1 -1  1  1 -1  3  1
    '''),
]

# new method on seven vertices

NEW7_N = '''
    1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
    1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0
    1 1 1 0 0 0 0 1 1 1 1 0 0 0 0 1 1 1 1 0 0 0 0 1 1 1 1 0 0 0
    1 1 1 0 0 0 0 0 0 0 0 1 1 1 1 0 0 0 0 1 1 1 1 1 1 1 1 0 0 0
    1 0 0 1 1 0 0 1 1 0 0 1 1 0 0 1 1 0 0 1 1 0 0 1 1 0 0 1 1 0
    0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1
    0 0 1 0 1 1 0 0 1 1 0 0 1 1 0 1 0 0 1 1 0 0 1 1 0 0 1 0 1 1
'''

NEW7_PERM = ('(1 24)(2 20)(3 16)(4 14)(5 10)(7 30)(8 13)(11 29)(15 28)'
             '(17 27)(18 23)(21 26)')

NEW7_R = (4, '''
     1 -1 -1 -1  2  2  2
    -1  1  1  1 -2  2  2
    -1  1  1  1  2 -2  2
    -1  1  1  1  2  2 -2
     2 -2  2  2  0  0  0
     2  2 -2  2  0  0  0
     2  2  2 -2  0  0  0
''')

# new non-simple method on eight vertices, entries 2 are blocks of
# multiplicity 2

NEW8_N = '''
    1 1 1 2 2 1 1 1 1 2 2 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
    1 1 1 2 2 1 1 1 1 0 0 0 0 0 0 2 2 2 2 2 2 0 0 0 0 0 0 0 0 0
    1 1 1 2 0 0 0 0 0 2 2 2 0 0 0 2 2 2 0 0 0 1 1 1 1 2 0 0 0 0
    1 1 1 0 2 0 0 0 0 2 0 0 2 2 0 2 0 0 2 2 0 1 1 1 1 0 2 0 0 0
    1 0 0 2 0 1 1 0 0 0 2 0 2 2 0 2 0 0 2 0 2 1 1 0 0 2 0 1 1 0
    1 0 0 0 2 1 1 0 0 2 2 0 0 0 2 0 2 2 2 0 0 1 1 0 0 0 2 1 1 0
    0 1 0 2 0 1 0 1 0 2 0 0 2 0 2 0 2 0 2 2 0 1 0 1 0 2 0 1 0 1
    0 1 0 0 2 1 0 1 0 0 2 2 2 0 0 2 2 0 0 0 2 1 0 1 0 0 2 1 0 1
'''

NEW8_PERM = '(4 5)(10 16)(15 21)(26 27)'

NEW8_R = (3, '''
     2  1  0  0  1 -1 -1  1
     1  2  0  0 -1  1  1 -1
     0  0  2  1 -1  1 -1  1
     0  0  1  2  1 -1  1 -1
     1 -1 -1  1  1  2  0  0
    -1  1  1 -1  2  1  0  0
    -1  1 -1  1  0  0  1  2
     1 -1  1 -1  0  0  2  1
''')

# switching sets on which the eight vertex method is irreducible

NEW8_IRREDUCIBLE_AC = [
    '00000001 00000010 00011000 00100100 00100000 00010000 01000001 10000010',
    '00000001 00000010 00011000 00100100 00100011 00010011 01001101 10001110',
    '00000001 00000010 00011011 00100111 00100000 00010000 01110001 10110010',
    '00000001 00000010 00011011 00100111 00100011 00010011 01111101 10111110',
    '00000101 00001010 00000110 00001001 01010000 10100000 01100000 10010000',
    '00000101 00001010 00000110 00001001 01010011 10100011 01101100 10011100',
    '00001011 00000111 00010010 00100001 10000100 01001000 11100000 11010000',
    '00001011 00000111 00010010 00100001 10000111 01001011 11101100 11011100',
    '00001011 00000111 00011110 00101101 10110100 01111000 11100000 11010000',
    '00110101 00111010 11000110 11001001 01010011 10100011 01101100 10011100',
]

# AG(2,3) representatives printed as circulants

AG23_CIRCULANT = (3, [2, 1, 0, -1, 1, 0, -1, 1, 0])

AG23_BLOCK_CIRCULANT = (3, [[2, 1, 0], [0, -1, 1], [0, -1, 1]])

# level five

LEVEL5_CIRCULANT = (5, [3, 1, 2, -1, -2, 1, 2, -1])

PROP51_R = (5, '''
     2  3  3 -1 -1 -1
     3  2 -3  1  1  1
     3 -3  2  1  1  1
    -1  1  1 -2  3  3
    -1  1  1  3 -2  3
    -1  1  1  3  3 -2
''')

# 1-based edge lists of the three switching sets, up to symmetry
PROP51_AC = [
    [],
    [(1, 4), (1, 5), (4, 5), (2, 3), (2, 6), (3, 6)],
    [(1, 2), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
]
