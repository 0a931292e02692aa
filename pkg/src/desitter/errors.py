"""Exception hierarchy for domain and convergence failures.

Every public operation raises one of these instead of letting NaN/Inf
escape; callers that scan grids catch ``DeSitterError`` per point.
"""


class DeSitterError(Exception):
    """Base class for all library errors."""


class PoleAtNonpositiveInteger(DeSitterError):
    """Gamma/digamma evaluated at 0, -1, -2, ..."""


class NoConvergence(DeSitterError):
    """A series exceeded its term cap without meeting tolerance."""


class OnCut(DeSitterError):
    """Argument lies on an excluded branch cut."""


class ParameterPole(DeSitterError):
    """A parameter sits on a pole of the defining Gamma factors."""


class ParameterDomain(DeSitterError):
    """Parameters outside the admissible region of a formula."""


class DomainError(DeSitterError):
    """Generic out-of-domain argument."""


class DimensionMismatch(DeSitterError):
    """Vectors of different spacetime dimension were combined."""


class NotOnManifold(DeSitterError):
    """Point fails the de Sitter membership test."""


class NotSpacelike(DeSitterError):
    """Pair is not spacelike separated."""


class OnLightcone(DeSitterError):
    """Pointwise evaluation requested on the light-cone boundary."""


class ConvergenceDomain(DeSitterError):
    """Integral representation does not converge for these parameters."""


class DegenerateEigenvector(DeSitterError):
    """Eigenspace is not one-dimensional; no canonical choice exists."""


class SingularU(DeSitterError):
    """Base-change matrix numerically singular (indicates a bug)."""


class NotSymmetric(DeSitterError):
    """Operation requires a reflection-symmetric spectral measure."""


class IndexOutOfRange(DeSitterError):
    """Weight-basis index outside 0..ell."""
