"""Maps on orientable surfaces, their surface Tutte polynomial, and local G-flow counts."""

from .errors import (GroupError, InternalError, LimitExceededError, MapError,
                     MapFormatError, MapolyError)
from .flows import (count_via_surface_tutte, local_count_bruteforce, local_count_formula,
                    local_flow_count_formula, nowhere_identity_count_formula,
                    surface_group_hom_count)
from .groups import (FiniteGroup, conjugacy_class_count, group_from_selector, make_cyclic,
                     make_dihedral, make_product, make_quaternion8, make_symmetric,
                     validate_group)
from .invariants import (classical_specialization, quad_q, quad_q_tilde,
                         quasi_tree_genus_profile, substructure_counts, surface_tutte,
                         surface_tutte_tilde, verify_specialization_identities)
from .maps import (HalfEdge, Map, MapParameters, build_map, classify, components, contract,
                   delete, disjoint_union, dual, faces, format_map, parameters, parse_map,
                   read_map)
from .polynomials import Polynomial, canonical_text, evaluate, parse_polynomial, substitute

__version__ = "0.1.0"
