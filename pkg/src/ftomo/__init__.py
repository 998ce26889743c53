"""Deformed-oscillator states, their tomographic probability representations,
entropic inequalities, entanglement measures and uncertainty bounds on
truncated Fock spaces."""

from .deformation import (
    DeformationSpec,
    commutator_diag,
    f_value,
    log_f_factorial,
    log_f_factorial_table,
)
from .entanglement import (
    ReducedDensity,
    cat_entropy_identity_limit,
    cat_linear_entropy,
    kerr_zero_entropy,
    linear_entropy,
    linear_entropy_series,
    reduce_mode2,
)
from .entropy import (
    InequalityResult,
    ProbabilityVector,
    RegroupedTable,
    displaced_fock_pmf,
    flatten,
    information_curve,
    laguerre_lambda,
    marginals,
    regroup,
    shannon_entropy,
    shannon_information,
    verify_laguerre_inequality,
)
from .errors import (
    DeformationSingular,
    DegenerateDirection,
    DegenerateSuperposition,
    FtomoError,
    IncompatibleDeformation,
    NonConvergence,
    TailNotConverged,
    TruncationOverflow,
)
from .kernels import BACKEND
from .special import (
    hyp0f1,
    laguerre_assoc,
    log_factorial,
    log_gamma,
    oscillator_eigenfunction,
    oscillator_eigenfunctions,
)
from .states import (
    ClassicalAmplitude,
    FockAmplitudes,
    TwoModeAmplitudes,
    cat_superposition,
    check_compatibility,
    classical_evolution,
    f_coherent,
    two_mode_f_coherent_general,
    two_mode_f_coherent_total,
)
from .tomography import (
    TomogramGrid,
    husimi,
    husimi_grid,
    optical_grid,
    optical_tomogram,
    optical_tomogram_on_grid,
    photon_grid,
    photon_moment,
    photon_tomogram,
    photon_tomogram_fock,
    quadrature_moment,
    symplectic_grid,
    symplectic_tomogram,
)
from .uncertainty import (
    QuadratureStats,
    deformed_quadrature_stats,
    effective_planck,
    moment_from_optical_tomogram,
    qosc_small_lambda_rhs,
)

__version__ = "0.1.0"
