"""Numerical checks for anisotropic magnetic Hardy-type inequalities."""

from .catalog import IDENTITIES, THEOREMS, list_theorems
from .errors import (
    AdmissibilityError,
    ConfigError,
    DomainError,
    MagHardyError,
    NonFiniteError,
    OriginError,
    RealnessError,
    SingularWeightError,
)
from .fields import (
    ConstantFieldPotentials,
    FluxParam,
    RadialPotential,
    ab_potential,
    constant_field_grad,
    grushin_potential,
    magnetic_grad,
    tilde_grad,
    twisted_grad_psi,
)
from .functions import (
    AngularMode,
    TestFunction,
    TrialFamily,
    angular_average,
    evaluate,
    make_bump,
    make_trial,
    partials,
    random_test_function,
)
from .geometry import GrushinGeometry, Point, WeightExponents, dilate, rho
from .quadrature import Domain, QuadratureSpec
from .reports import (
    IdentityReport,
    InequalityReport,
    SharpnessResult,
    SuperweightParams,
)
from .verifiers import (
    DEFAULT_SCHEDULE,
    check_grushin_ibp_identity,
    check_twisted_polar_identity,
    estimate_sharpness,
    fourier_defect_terms,
    verify_ab_hardy,
    verify_constant_field,
    verify_landau,
    verify_magnetic_grushin,
    verify_radial_hardy,
    verify_radial_p,
    verify_real_landau,
    verify_uncertainty_grushin,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError",
    "AngularMode",
    "ConfigError",
    "ConstantFieldPotentials",
    "DEFAULT_SCHEDULE",
    "Domain",
    "DomainError",
    "FluxParam",
    "GrushinGeometry",
    "IDENTITIES",
    "IdentityReport",
    "InequalityReport",
    "MagHardyError",
    "NonFiniteError",
    "OriginError",
    "Point",
    "QuadratureSpec",
    "RadialPotential",
    "RealnessError",
    "SharpnessResult",
    "SingularWeightError",
    "SuperweightParams",
    "THEOREMS",
    "TestFunction",
    "TrialFamily",
    "WeightExponents",
    "ab_potential",
    "angular_average",
    "check_grushin_ibp_identity",
    "check_twisted_polar_identity",
    "constant_field_grad",
    "dilate",
    "estimate_sharpness",
    "evaluate",
    "fourier_defect_terms",
    "grushin_potential",
    "list_theorems",
    "magnetic_grad",
    "make_bump",
    "make_trial",
    "partials",
    "random_test_function",
    "rho",
    "tilde_grad",
    "twisted_grad_psi",
    "verify_ab_hardy",
    "verify_constant_field",
    "verify_landau",
    "verify_magnetic_grushin",
    "verify_radial_hardy",
    "verify_radial_p",
    "verify_real_landau",
    "verify_uncertainty_grushin",
    "__version__",
]
