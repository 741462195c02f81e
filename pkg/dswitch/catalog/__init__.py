from __future__ import division, absolute_import, print_function

from .entries import (CatalogEntry, make, resolve_scheme, list_ids, normalize_id,  # noqa: F401
                      consistency_check, expected_level, gm64_design,
                      gm_design, wqh_design, ah_design, gm_matrix, wqh_matrix,
                      ah_matrix, cube_matrix, counting_identities, plant_site,
                      default_basis, prop51_ac, new8_irreducible_ac,
                      REDUCTION_BASIS)
