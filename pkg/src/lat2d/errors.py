"""Exception types raised by lat2d operations."""


class LatticeError(Exception):
    """Base class for all lat2d errors."""


class DegenerateBasis(LatticeError):
    """Basis vectors are (numerically) collinear."""


class NonTermination(LatticeError):
    """Reduction hit its iteration cap; input is numerically pathological."""


class NotObtuse(LatticeError):
    """A superbase with a negative conorm was passed where an obtuse one is required."""


class OutsideObt(LatticeError):
    """Normalized second basis vector lies outside the obtuse-superbase region."""


class UnsupportedQ(LatticeError):
    """Minkowski parameter q is invalid or has no implemented evaluation path."""


class InvalidPI(LatticeError):
    """Point lies outside the quotient triangle of projected invariants."""


class InconsistentSign(LatticeError):
    """Requested sign contradicts the mirror symmetry of the invariant."""


class InsufficientLength(LatticeError):
    """Distance sequence is too short or inconsistent for vonorm extraction."""


class InvalidParams(LatticeError):
    """Parameters violate a documented precondition."""


class DegeneratePath(LatticeError):
    """A sampled basis along a deformation path is degenerate."""
