from __future__ import division, absolute_import, print_function

from .scheme import (SwitchingScheme, compatible_vectors, derive_R,  # noqa: F401
                     derive_R_perm, named_scheme, equivalent, r_automorphisms,
                     load_scheme, save_scheme)
from .site import (SwitchSite, SiteReport, verify_site, apply_switch,  # noqa: F401
                   conjugate_ac, conjugated, cospectral, r_cospectral)
from .search import compatible_ac, canonical_ac  # noqa: F401
from .realizable import design_realizable, Realizability  # noqa: F401
