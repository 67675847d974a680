"""Exception types shared across the package."""


class HulthenError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidParameter(HulthenError):
    """A model or configuration parameter violates its documented range."""


class InvalidEnergy(HulthenError):
    """Energy outside the regime an operation is defined for."""


class InvalidGrid(HulthenError):
    """Malformed sampling grid (too few points or inverted bounds)."""


class NonConvergence(HulthenError):
    """Power series failed to reach its tolerance within the term budget."""


class NoConvergence(HulthenError):
    """Root refinement stalled on a non-finite or sign-stable bracket."""


class SingularMatching(HulthenError):
    """Matching-system denominator vanished; amplitude ratios undefined."""


class DomainTooSmall(HulthenError):
    """Integration half-width leaves non-negligible potential at the edges."""


class StepTooLarge(HulthenError):
    """Spatial step too coarse for the requested wavenumber."""


class NonFiniteResult(HulthenError):
    """A value that must be emitted was NaN or infinite."""
