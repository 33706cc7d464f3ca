"""knotrho: exact knot signatures, finite-cyclic rho invariants, and
triangulation-complexity bounds for Dehn surgery manifolds."""

from .bounds import (
    BoundReport,
    CuspData,
    GromovNormBound,
    PUBLISHED,
    PublishedConstants,
    bound_report,
    complexity_from_rho,
    gap_lower_bound,
    gromov_norm_bound,
    lower_bound_crossing,
    lower_bound_signature,
    lower_bound_slice_genus,
    slope_length,
    two_pi_check,
    universal_rho_bound,
    upper_bound,
)
from .cyclotomic import CyclotomicElement, UnitRoot, certified_sign, cyc_field, cyclotomic_polynomial
from .exceptions import (
    CertificationError,
    ConductorLimitError,
    InconsistentModulusError,
    InternalInconsistencyError,
    InvalidParameterError,
    InvalidSeifertMatrixError,
    InvalidSlopeError,
    KnotRhoError,
    KnotSpecError,
    MissingCableDataError,
    SeifertJSONError,
)
from .rho import CableData, RhoResult, casson_gordon_sigma, rho_finite_cyclic, rho_knot_surgery, rho_knot_surgery_result, sign_linking_matrix
from .seifert import (
    KnotFamilyId,
    SeifertMatrix,
    SurgeryPresentation,
    TwistReduction,
    jn_seifert,
    knot_surgery_presentation,
    mirror,
    seifert_from_json,
    torus_knot_seifert,
    trefoil_seifert,
    twist_reduction,
    unknot_seifert,
)
from .signature import (
    AvgSignatureResult,
    HermitianForm,
    InertiaTriple,
    SignatureResult,
    alexander_at,
    alexander_polynomial,
    avg_signature,
    avg_signature_details,
    hermitian_form,
    inertia,
    jn_avg_lower_bound,
    levine_tristram,
    litherland_torus_signature,
    signature_details,
    torus_avg_lower_bound,
)

__version__ = "0.1.0"
