"""Exact symbolic engine for chi_y genera and characteristic-class identities.

The package computes Hirzebruch chi_y genera, Hodge characteristics and
characteristic-class polynomials for varieties assembled from combinatorial
generators (projective spaces, tori, affine cells, split projective
bundles, blow-ups), and verifies the closed-form identities connecting them
against independent oracles.  All arithmetic is exact over Q[y, y^-1]; no
floating point is used anywhere.
"""

from .scalars import (
    DomainError,
    ExactDivisionError,
    LaurentScalar,
    ONE,
    ONE_PLUS_Y,
    Rational,
    Y,
    ZERO,
)
from .series import TruncSeries
from .polynomials import MultiPoly, PolyRing, elementary_symmetric, series_at
from .genus import (
    BundleRoots,
    GenusSpec,
    ch_twisted,
    chern_series,
    class_of_roots,
    gamma_powers,
    l_series,
    lambda_gamma,
    lambda_powers,
    operator_chern_images,
    q_series,
    tilde_lambda_class,
    tilde_lambda_coeffs,
    todd_series,
)
from .chow import BundleStage, ChowElement, ChowPresentation, hypersurface_chi
from .motivic import (
    Affine,
    BlowUp,
    Declared,
    DeclRegistry,
    DeclarationError,
    Diff,
    HodgePolynomial,
    Lefschetz,
    Prod,
    Proj,
    ProjBundle,
    Pt,
    Sum,
    Torus,
    UnknownDeclarationError,
    VarietyExpr,
    check_blowup_relation,
    chi_y,
    conventional_e_polynomial,
    dimension,
    hodge_characteristic,
    specialize,
)
from .verify import (
    VerifyReport,
    blowup_check,
    chi_proj_three_routes,
    composition_check,
    euler_char_O,
    euler_char_Omega,
    gamma_pb_relation,
    ghrr_check,
    higher_chern_check,
    lambda_gamma_identities,
    reform_identity,
    vrr_projection,
    yokura_identity,
)
from .fgl import (
    FGLaw,
    SymPoly,
    c1_tensor_check,
    fgl_axioms,
    fgl_inverse,
    fgl_make,
    universal_relations,
)
from .parsing import ExprParseError, parse_expr, render_expr

__version__ = "0.1.0"
