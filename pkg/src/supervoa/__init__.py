"""Exact workbench for basic Lie superalgebras and affine vertex
operator superalgebras: matrix realizations, root data, truncated
vacuum modules with exact mode actions, simple quotients, C2 analysis
and integrable-weight enumeration."""

from .linalg import (
    Scalar,
    SparseVec,
    Subspace,
    contains,
    echelonize,
    quotient_dim,
    scalar_from_str,
    scalar_to_str,
)
from .liesuper import (
    LieSuperalgebra,
    RootDatum,
    DualBasisPair,
    bracket,
    dual_basis_pair,
    dual_coxeter,
    root_decomposition,
    root_inner_products,
    verify_axioms,
)
from .realizations import (
    G3RootData,
    Realization,
    SuperMatrix,
    g3_root_data,
    make_osp1_2n,
    make_osp2_2n,
    make_sl,
    make_sl1n,
    make_sp,
)
from .affinevoa import (
    ConformalData,
    CutoffError,
    NoConformalStructure,
    State,
    TruncatedModule,
    build_vacuum,
    commutator_identity_check,
    conformal,
    field_coeff,
    is_singular,
    mode_action,
    singular_vectors,
    virasoro_mode,
    weight_one_bracket,
    weight_one_form,
    zhu_circle,
    zhu_star,
)
from .quotient import ideal_closure, simple_quotient
from .c2analysis import (
    C2Report,
    c2_brute_grade,
    c2_grade,
    c2_report,
    closure_checks,
    nilpotency_check,
)
from .integrability import (
    FamilyCertificate,
    WeightLabels,
    check_osp22n,
    check_sl1n,
    enumerate_weights,
    validate_g3_data,
)

__version__ = "0.1.0"
