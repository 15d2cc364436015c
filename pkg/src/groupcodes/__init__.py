"""Binary linear codes from group rings of semidirect products.

Build the G-matrix of an element of F2[G], take its row space (or the
dual), compute minimum distances, split codes along an automorphism and
glue the pieces back with Construction X.
"""

from .codes import (
    CodeError,
    LinearCode,
    apply_perm,
    code_from_gmatrix,
    construction_x,
    decompose,
    dual,
    even_subcode,
    extend,
    fixed_subcode,
    is_automorphism,
    puncture,
    shorten,
)
from .distance import (
    Budget,
    DistanceResult,
    find_word_of_weight_at_most,
    min_distance_bruteforce,
    min_distance_bz,
)
from .gf2linalg import (
    BitMatrix,
    BitVector,
    DimensionError,
    nullspace,
    rank,
    rowspace_equal,
    rref,
    solve_membership,
)
from .groupring import (
    GroupMismatch,
    GroupRingElement,
    block_lambda_circulant,
    gr_add,
    gr_mul,
    gr_power_map,
    is_unit,
    lambda_circulant,
    sigma,
    sigma_structured_g1,
    sigma_structured_g2,
)
from .groups import (
    FiniteGroup,
    GroupError,
    Permutation,
    SemidirectParams1,
    SemidirectParams2,
    cyclic_group,
    cycle_type,
    group_from_table,
    make_g1,
    make_g2,
    make_gs,
    regular_permutations,
)

__version__ = "0.1.0"
