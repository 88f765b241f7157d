"""Jordan-algebraic kernels on symmetric domains: closed-form spectral
objects (spherical transforms, Bernstein polynomials, compact-picture
masses and Fourier coefficients) together with the independent quadrature
oracles that verify them at small rank."""

from . import algebra, conformal, kernels, quadrature, spectra, verify
from ._accel import USING_NUMBA
from .algebra import AlgebraDescriptor, Element, JordanFrame, make_descriptor
from .conformal import ConformalMap, StructureLinear
from .errors import (BerezinError, ConvergenceError, DescriptorMismatch,
                     InvalidWeight, OutsideCone, OutsideDomain,
                     ParameterDomain, PoleError, SingularConfiguration,
                     SingularElement, UnsupportedFamily)
from .spectra import SpectralPoint, Weight

__version__ = "1.0.0"

__all__ = [
    "AlgebraDescriptor", "Element", "JordanFrame", "ConformalMap",
    "StructureLinear", "Weight", "SpectralPoint", "make_descriptor",
    "USING_NUMBA", "algebra", "conformal", "kernels", "quadrature",
    "spectra", "verify",
    "BerezinError", "ConvergenceError", "DescriptorMismatch", "InvalidWeight",
    "OutsideCone", "OutsideDomain", "ParameterDomain", "PoleError",
    "SingularConfiguration", "SingularElement", "UnsupportedFamily",
]
