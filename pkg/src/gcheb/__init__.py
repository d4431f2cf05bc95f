"""Generalized Chebyshev polynomials and the point-perturbed free Jacobi operator."""

from gcheb.branch import EnergyPoint, Sheet, Side, boundary_omega, branch_sqrt, omega
from gcheb.errors import (
    AdmissibilityError,
    DomainError,
    GChebError,
    NearEdgeError,
    NumericalError,
    OrthogonalityLossError,
    QuadratureError,
    RadiusError,
    SingularEnergyError,
    SingularMomentError,
    StepFailureError,
)
from gcheb.genchebyshev import (
    CouplingParams,
    PolySeq,
    eval_closed_form,
    eval_edge,
    eval_recurrence,
    eval_trig,
    psi,
)
from gcheb.jost import (
    DetPolynomial,
    JacobiCoeffs,
    det_polynomial,
    jost_function,
    jost_solution,
    pert_det_general,
    recover_rank1,
    recover_rank2,
    resolvent_entry_general,
)
from gcheb.pointres import (
    TMatrixEntries,
    free_resolvent_entry,
    pert_det,
    resolvent_entry,
    tmatrix,
    weyl_m,
)
from gcheb.scattering import (
    ScatteringRecord,
    scattering_record,
    sigma_pm,
    smatrix,
    smatrix_via_sigma,
    smatrix_via_t,
    ssf_arg_tracked,
    ssf_closed,
    transform_row,
    wave_operator_check,
)
from gcheb.spectral import (
    HankelData,
    ResonanceSet,
    SpectralMeasureRecord,
    density,
    eigenvalues,
    hankel_dets,
    moment,
    moment_gf,
    resonances,
    spectral_measure,
    trace_gf,
)

__version__ = "0.1.0"
