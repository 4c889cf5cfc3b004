"""Exact perfect crystals for D4^(3) and G2^(1) in scaled integer coordinates."""

from .core import (
    AVector,
    CartanData,
    CaseClassificationError,
    CrystalError,
    CrystalParams,
    Element,
    IntegralityError,
    Kind,
    MembershipError,
    ZVector,
    a_vector,
    classify_e,
    classify_f,
    in_hat_crystal,
    in_V,
    s_scaled,
    z_vector,
)
from .g2 import G2Crystal, g2_e, g2_eps, g2_f, g2_phi, g2_weight, similarity_check, verify_similarity
from .graph import (
    CrystalGraph,
    DecompositionError,
    DecompositionReport,
    TensorProduct,
    build_graph,
    check_axioms,
    decompose,
    enumerate_elements,
    export_dot,
    export_json,
    j_highest,
    parse_json,
    tensor,
)
from .hat_d4 import HatD4Crystal, hat_e, hat_eps, hat_f, hat_phi
from .perfectness import (
    B_INF,
    DominantWeight,
    InfElement,
    MinimalElement,
    binf_e,
    binf_eps,
    binf_f,
    binf_phi,
    embed,
    level_of,
    minimal_elements,
    psi,
    verify_coherent,
    verify_coverage,
    verify_perfect,
)

__version__ = "0.1.0"
