"""crystald: type D_n crystal combinatorics.

Kashiwara-Nakashima tableaux, the spinor model of two-column factors, the
separation algorithm into a body/tail profile, and the embedding into
multiplicity vectors over a convex order of the positive roots.
"""

from .foundations import Column, Profile, compare, jdt_slide, rectify, reverse_column_insert
from .crystal_core import (
    CrystalGraph,
    compare_components,
    generate_component,
    graph_to_dot,
    graph_to_json,
    reduce_signature,
    verify_morphism,
)
from .kn_model import KNTableau, kn_e, kn_f, kn_from_json, kn_highest, kn_to_json, kn_weight2, validate_kn
from .spinor_model import (
    Factor,
    SpinorTuple,
    highest_element,
    is_admissible,
    op_e,
    op_f,
    residue,
    shape_decomposition,
    sigma_word,
    spinor_e,
    spinor_f,
    spinor_from_json,
    spinor_to_json,
    spinor_weight2,
    triangle_lt,
    validate_tuple,
)
from .kn_spinor_iso import phi, phi_lambda, psi_column, psi_lambda, psi_sp
from .separation import (
    SeparationTrace,
    VermaElement,
    bicrystal_e,
    bicrystal_f,
    chi_lambda,
    separate,
    signature_agreement,
    tau_word,
    verma_e,
    verma_f,
    verma_to_json,
)
from .lusztig import (
    LusztigDatum,
    RootOrder,
    c_lower,
    composite_e,
    composite_f,
    concat,
    convex_order,
    datum_from_verma,
    rsk_burge,
    rsk_burge_inverse,
    xi_lambda,
)
from .oracle import SMOKE_LAMBDAS, SMOKE_N, knuth_equivalent, weyl_dim

__version__ = "0.1.0"
