"""Exception types shared across the package."""


class FtomoError(Exception):
    """Base class for all library-specific failures."""


class DeformationSingular(FtomoError):
    """A deformation value is zero, negative under a square root, or undefined."""


class TruncationOverflow(FtomoError):
    """The Fock-space cap was reached before the tail mass dropped below tolerance."""


class IncompatibleDeformation(FtomoError):
    """The two-mode recurrence gives path-dependent coefficients."""


class DegenerateSuperposition(FtomoError):
    """The two branches of a superposition cancel; no normalizable state exists."""


class DegenerateDirection(FtomoError):
    """mu^2 + nu^2 vanishes; the quadrature direction is undefined."""


class NonConvergence(FtomoError):
    """A series failed to converge within the iteration budget."""


class TailNotConverged(FtomoError):
    """A truncated distribution still carries non-negligible tail mass."""
