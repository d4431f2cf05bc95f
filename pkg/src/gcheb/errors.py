"""Exception hierarchy shared by all modules.

Validation problems derive from :class:`ValueError`; numerical failures
(poles, singular energies, non-convergence) derive from
:class:`ArithmeticError`.  The command line maps the two families onto
distinct exit codes.
"""


class GChebError(Exception):
    """Base class for every error raised by the package."""


class DomainError(GChebError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class AdmissibilityError(DomainError):
    """A determinant polynomial cannot come from a Jacobi operator."""


class RadiusError(DomainError):
    """A generating-function argument lies outside its disc of convergence."""


class NumericalError(GChebError, ArithmeticError):
    """A numerical procedure failed."""


class SingularEnergyError(NumericalError):
    """Evaluation at a branch point, pole or eigenvalue."""


class NearEdgeError(NumericalError):
    """Closed form refused too close to a band edge."""


class SingularMomentError(NumericalError):
    """A Hankel determinant of a moment sequence is not positive."""


class QuadratureError(NumericalError):
    """Adaptive quadrature exhausted its panel budget."""


class StepFailureError(NumericalError):
    """Argument tracking could not resolve a phase jump."""


class OrthogonalityLossError(NumericalError):
    """Lanczos lost orthogonality despite reorthogonalisation."""
