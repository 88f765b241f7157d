"""Exception types shared across the package."""


class BerezinError(Exception):
    """Base class for all library errors."""


class UnsupportedFamily(BerezinError):
    """Element-level arithmetic requested on a descriptor-only family."""


class DescriptorMismatch(BerezinError):
    """Binary operation on elements bound to different descriptors."""


class SingularElement(BerezinError):
    """Jordan determinant vanishes where an inverse or quotient is needed."""


class SingularConfiguration(BerezinError):
    """Cross-ratio denominator degenerates."""


class OutsideCone(BerezinError):
    """Argument is not in the symmetric cone of the Euclidean part."""


class OutsideDomain(BerezinError):
    """Point is outside the domain of a conformal map or kernel."""

    def __init__(self, message, generator_index=None):
        super().__init__(message)
        self.generator_index = generator_index


class PoleError(BerezinError):
    """A Gamma factor was evaluated at a nonpositive integer."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class ParameterDomain(BerezinError):
    """Spectral parameter outside the validity region (no override set)."""


class InvalidWeight(BerezinError):
    """Integer weight vector violates the dominance condition."""


class ConvergenceError(BerezinError):
    """Numerical oracle could not reach the requested tolerance."""
