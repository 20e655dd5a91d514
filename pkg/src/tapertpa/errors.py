"""Exception hierarchy for physics and numerics failures.

Precondition violations on plain arguments raise ``ValueError`` as usual;
the classes here mark failures of the computation itself (no guided root,
quadrature not converging, integrator stalling) so callers such as the CLI
can distinguish them from usage errors.
"""


class TaperTpaError(Exception):
    """Base class for physics/numerics errors raised by this package."""


class NoGuidedRootError(TaperTpaError):
    """The dispersion scan found no guided-mode root (mode too close to cutoff)."""


class QuadratureError(TaperTpaError):
    """A quadrature failed to converge to the requested tolerance."""


class IntegrationError(TaperTpaError):
    """Adaptive ODE integration failed (step size collapsed).

    Carries the time at which the integrator stalled.
    """

    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t


class DegenerateDenominatorError(TaperTpaError):
    """Closed-form excited-state probability is singular at these parameters.

    Raised when (gamma2 - gamma1)**2 + 4*delta**2 is negligible compared to
    gamma2**2; use the perturbative ODE solution instead.
    """
