from __future__ import division, absolute_import, print_function

from .matrix import (RatMatrix, is_regular_orthogonal, level,  # noqa: F401
                     is_decomposable, support_blocks)
from .polynomial import IntPolynomial, charpoly  # noqa: F401
