from __future__ import division, absolute_import, print_function

from .perms import Permutation, PermSet  # noqa: F401
from .groups import (block_symmetry_group, design_automorphism_group,  # noqa: F401
                     point_automorphisms, induced_block_permutation,
                     induces_automorphism)
from .cosets import (double_cosets, double_coset_reps, in_double_coset,  # noqa: F401
                     schemes_from_design, classify_design, Classification)
from .reduce import reduce_scheme, level_obstruction, Reduction, NotReduced  # noqa: F401
