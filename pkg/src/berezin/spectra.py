"""Closed-form spectral objects: spherical transform of the canonical
kernel, Bernstein polynomials, normalized tube integrals, compact-picture
Fourier coefficients and the meromorphic constant C(s).

Every function below is an explicit product of Gamma factors or a
polynomial in the spectral parameters; they satisfy the exact functional
equations that the test-suite checks as Gamma identities:

    gamma_nu(lambda) * Transform_nu(lambda) = b(nu) * Transform_{nu+1}(lambda)
    gamma_{-kappa}(rho) * J(kappa)          = b(-kappa) * J(kappa - 1)
    gamma_{-kappa}(rho - m) * a_kappa(m)    = b(-kappa) * a_{kappa-1}(m)
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.special import loggamma as _loggamma

from .algebra import AlgebraDescriptor
from .errors import InvalidWeight, ParameterDomain, PoleError

_POLE_TOL = 1e-12


def log_gamma(z: complex, factor: str = "") -> complex:
    """log Gamma with pole detection at non-positive integers."""
    z = complex(z)
    if z.imag == 0.0:
        near = round(z.real)
        if near <= 0 and abs(z.real - near) < _POLE_TOL:
            raise PoleError(
                f"Gamma pole at {near}" + (f" in {factor}" if factor else ""),
                factor=factor or None)
    return complex(_loggamma(z))


# --------------------------------------------------------------------------
# spectral parameters and weights
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralPoint:
    """A point lambda in the complexified spectral parameter space,
    one coordinate per short root (length rank0)."""

    descriptor: AlgebraDescriptor
    values: tuple

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        if len(vals) != self.descriptor.rank0:
            raise ParameterDomain(
                f"spectral point needs {self.descriptor.rank0} coordinates")
        object.__setattr__(self, "values", vals)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=complex)


def as_spectral(desc: AlgebraDescriptor, lam) -> np.ndarray:
    """Coerce a scalar or length-rank0 sequence to a spectral vector."""
    r0 = desc.rank0
    if isinstance(lam, SpectralPoint):
        lam = lam.as_array()
    arr = np.atleast_1d(np.asarray(lam, dtype=complex))
    if arr.size == 1 and r0 > 1:
        raise ParameterDomain(
            f"spectral parameter must have length {r0} for {desc.name}")
    if arr.size != r0:
        raise ParameterDomain(
            f"spectral parameter has length {arr.size}, expected {r0}")
    return arr


@dataclass(frozen=True)
class Weight:
    """Highest-weight label m = (m_1, ..., m_rank0), validated per root
    system: A requires m_1 >= ... >= m_r0 (integers); C requires
    0 >= m_1 >= ... >= m_r0; D accepts any non-increasing integers
    (with a warning for positive leading parts)."""

    descriptor: AlgebraDescriptor
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        desc = self.descriptor
        if len(parts) != desc.rank0:
            raise InvalidWeight(
                f"weight needs {desc.rank0} parts, got {len(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidWeight("weight parts must be non-increasing")
        root = desc.root_system
        if root == "C" and parts and parts[0] > 0:
            raise InvalidWeight(
                "type-C weights must have non-positive parts")
        if root == "D" and parts and parts[0] > 0:
            warnings.warn(
                "type-D weight with positive leading part; coefficients "
                "are defined by analytic continuation", stacklevel=2)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.parts, dtype=float)


# --------------------------------------------------------------------------
# Gamma-product building blocks
# --------------------------------------------------------------------------

def _p_factor_log(desc: AlgebraDescriptor, lam: np.ndarray, nu: complex) -> complex:
    """log prod_j Gamma(1/2 + nu - delta + lambda_j)."""
    delta = float(desc.delta)
    total = 0.0 + 0.0j
    for j, lj in enumerate(lam):
        total += log_gamma(0.5 + nu - delta + lj, factor=f"P[{j + 1}]")
    return total


def _q_hat_log(desc: AlgebraDescriptor, nu: complex) -> complex:
    """log prod_k Gamma(nu - beta_k) over the 2*rank0 shift exponents."""
    total = 0.0 + 0.0j
    for k, bk in enumerate(desc.beta):
        total += log_gamma(nu - float(bk), factor=f"Q[{k + 1}]")
    return total


def spherical_transform(desc: AlgebraDescriptor, nu: complex, lam,
                        *, allow_outside_domain: bool = False) -> complex:
    """Spherical transform of psi_nu at spectral point lambda:

        T_nu(lambda) = P(lambda, nu) P(-lambda, nu) / Q(nu)

    with P(lambda, nu) = prod_j Gamma(1/2 + nu - delta + lambda_j) and
    Q(nu) = prod_k Gamma(nu - beta_k).  Normalization constants
    independent of (nu, lambda) are dropped; all exported quantities are
    ratios in which they cancel.

    The defining integral converges for Re(nu) > dim/rank0 - 1; outside
    that half-plane the value is the meromorphic continuation and is only
    returned with allow_outside_domain=True.
    """
    desc.require_concrete("spherical transform")
    lam = as_spectral(desc, lam)
    nu = complex(nu)
    if not allow_outside_domain:
        bound = desc.dim / desc.rank0 - 1.0
        if nu.real <= bound:
            raise ParameterDomain(
                f"Re(nu) = {nu.real} is outside the convergence half-plane "
                f"Re(nu) > {bound}; pass allow_outside_domain=True for the "
                "meromorphic continuation")
    log_val = (_p_factor_log(desc, lam, nu)
               + _p_factor_log(desc, -lam, nu)
               - _q_hat_log(desc, nu))
    return cmath.exp(log_val)


def spherical_transform_normalized(desc: AlgebraDescriptor, nu: complex, lam,
                                   **kw) -> complex:
    """T_nu(lambda) / T_nu(rho): equals 1 at the reference spectral point
    lambda = rho, so every constant cancels."""
    rho = np.asarray([float(r) for r in desc.rho], dtype=complex)
    return (spherical_transform(desc, nu, lam, **kw)
            / spherical_transform(desc, nu, rho, **kw))


def bernstein_b(desc: AlgebraDescriptor, nu: complex) -> complex:
    """b(nu) = prod_k (nu - beta_k), the Bernstein polynomial of the
    kernel family; also Q(nu + 1)/Q(nu) as a Gamma ratio."""
    val = 1.0 + 0.0j
    for bk in desc.beta:
        val *= (complex(nu) - float(bk))
    return val


def bernstein_b_gamma_ratio(desc: AlgebraDescriptor, nu: complex) -> complex:
    """b(nu) computed as exp(log Q(nu+1) - log Q(nu)); independent route."""
    return cmath.exp(_q_hat_log(desc, complex(nu) + 1.0)
                     - _q_hat_log(desc, complex(nu)))


def gamma_symbol(desc: AlgebraDescriptor, nu: complex, lam) -> complex:
    """gamma_nu(lambda) = prod_j (nu + 1/2 - delta + lambda_j)
    (nu + 1/2 - delta - lambda_j): the eigenvalue of the Bernstein
    operator on the spherical function with spectral parameter lambda."""
    lam = as_spectral(desc, lam)
    delta = float(desc.delta)
    val = 1.0 + 0.0j
    for lj in lam:
        val *= (complex(nu) + 0.5 - delta + lj) * (complex(nu) + 0.5 - delta - lj)
    return val


def bernstein_fourier_residual(desc: AlgebraDescriptor, nu: complex, lam) -> float:
    """Relative residual of
    gamma_nu(lambda) T_nu(lambda) = b(nu) T_{nu+1}(lambda)."""
    lhs = gamma_symbol(desc, nu, lam) * spherical_transform(
        desc, nu, lam, allow_outside_domain=True)
    rhs = bernstein_b(desc, nu) * spherical_transform(
        desc, complex(nu) + 1.0, lam, allow_outside_domain=True)
    scale = abs(lhs) + abs(rhs)
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


# --------------------------------------------------------------------------
# normalized tube-domain integral
# --------------------------------------------------------------------------

def I_normalized(desc: AlgebraDescriptor, nu: complex) -> complex:
    """The kernel mass I(nu) = integral of psi_nu over the symmetric
    space, normalized so that I(dim/rank) = 1.

    Computed as T_nu(rho) / T_{n/r}(rho) through the Gamma products, so
    all parameter-independent constants cancel.
    """
    desc.require_concrete("normalized integral")
    rho = np.asarray([float(r) for r in desc.rho], dtype=complex)
    ref = desc.dim / desc.rank

    def log_i(v: complex) -> complex:
        return (_p_factor_log(desc, rho, v)
                + _p_factor_log(desc, -rho, v)
                - _q_hat_log(desc, v))

    return cmath.exp(log_i(complex(nu)) - log_i(complex(ref)))


# --------------------------------------------------------------------------
# compact picture: Hua integral, Fourier coefficients, C(s)
# --------------------------------------------------------------------------

def _phi_log(desc: AlgebraDescriptor, kappa: complex) -> complex:
    """log of prod_k Gamma(kappa + 1 + beta_k) /
    prod_j [Gamma(kappa + 1/2 + delta - rho_j) Gamma(kappa + 1/2 + delta + rho_j)]."""
    delta = float(desc.delta)
    total = 0.0 + 0.0j
    for k, bk in enumerate(desc.beta):
        total += log_gamma(kappa + 1.0 + float(bk), factor=f"num[{k + 1}]")
    for j, rj in enumerate(desc.rho):
        rj = float(rj)
        total -= log_gamma(kappa + 0.5 + delta - rj, factor=f"den-[{j + 1}]")
        total -= log_gamma(kappa + 0.5 + delta + rj, factor=f"den+[{j + 1}]")
    return total


def hua_J(desc: AlgebraDescriptor, kappa: complex,
          *, allow_outside_domain: bool = False) -> complex:
    """Normalized compact-picture mass
    J(kappa) = mean of prod_j cos^{2 kappa}(theta_j / 2), J(0) = 1.

    As an integral this needs Re(kappa) >= 0 (or more precisely kappa to
    the right of the first Gamma pole); the Gamma-product form continues
    it meromorphically.
    """
    desc.require_concrete("compact-picture mass")
    kappa = complex(kappa)
    if not allow_outside_domain and kappa.real < 0.0:
        raise ParameterDomain(
            "Re(kappa) < 0 is outside the defining integral's domain; "
            "pass allow_outside_domain=True for the continuation")
    return cmath.exp(_phi_log(desc, kappa) - _phi_log(desc, 0.0))


def fourier_coeff(desc: AlgebraDescriptor, kappa: complex, m: Weight,
                  *, allow_outside_domain: bool = False) -> complex:
    """Fourier coefficient of the compact kernel against the spherical
    polynomial of weight m:

        a_kappa(m) = J(kappa) prod_j
            Gamma(k+1/2+delta-rho_j) Gamma(k+1/2+delta+rho_j)
          / [Gamma(k+1/2+delta-rho_j+m_j) Gamma(k+1/2+delta+rho_j-m_j)]

    so a_kappa(0) = J(kappa).
    """
    if m.descriptor is not desc and m.descriptor != desc:
        raise InvalidWeight("weight belongs to a different algebra")
    kappa = complex(kappa)
    delta = float(desc.delta)
    log_val = 0.0 + 0.0j
    for j, (rj, mj) in enumerate(zip(desc.rho, m.parts)):
        rj = float(rj)
        log_val += log_gamma(kappa + 0.5 + delta - rj, factor=f"base-[{j + 1}]")
        log_val += log_gamma(kappa + 0.5 + delta + rj, factor=f"base+[{j + 1}]")
        try:
            log_val -= log_gamma(kappa + 0.5 + delta - rj + mj,
                                 factor=f"shift-[{j + 1}]")
            log_val -= log_gamma(kappa + 0.5 + delta + rj - mj,
                                 factor=f"shift+[{j + 1}]")
        except PoleError:
            # a Gamma pole in the denominator kills the coefficient
            return 0.0 + 0.0j
    return hua_J(desc, kappa,
                 allow_outside_domain=allow_outside_domain) * cmath.exp(log_val)


def hua_recursion_residual(desc: AlgebraDescriptor, kappa: complex) -> float:
    """Relative residual of gamma_{-kappa}(rho) J(kappa) = b(-kappa) J(kappa-1)."""
    rho = np.asarray([float(r) for r in desc.rho], dtype=complex)
    lhs = gamma_symbol(desc, -complex(kappa), rho) * hua_J(
        desc, kappa, allow_outside_domain=True)
    rhs = bernstein_b(desc, -complex(kappa)) * hua_J(
        desc, complex(kappa) - 1.0, allow_outside_domain=True)
    scale = abs(lhs) + abs(rhs)
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


def coeff_recursion_residual(desc: AlgebraDescriptor, kappa: complex,
                             m: Weight) -> float:
    """Relative residual of
    gamma_{-kappa}(rho - m) a_kappa(m) = b(-kappa) a_{kappa-1}(m)."""
    shifted = np.asarray(
        [float(r) - p for r, p in zip(desc.rho, m.parts)], dtype=complex)
    lhs = gamma_symbol(desc, -complex(kappa), shifted) * fourier_coeff(
        desc, kappa, m, allow_outside_domain=True)
    rhs = bernstein_b(desc, -complex(kappa)) * fourier_coeff(
        desc, complex(kappa) - 1.0, m, allow_outside_domain=True)
    scale = abs(lhs) + abs(rhs)
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


def coeff_asymptotic_constant(desc: AlgebraDescriptor, m: Weight) -> float:
    """First-order constant in a_kappa(m)/J(kappa) = 1 + const/(2 kappa)
    + O(kappa^{-2}): sum_j m_j (m_j - 2 rho_j)."""
    return float(sum(p * (p - 2.0 * float(r))
                     for p, r in zip(m.parts, desc.rho)))


def nu_of_s(desc: AlgebraDescriptor, s: complex) -> complex:
    """Spectral reparametrization nu(s) = -(r/r0)(s - n/2r)."""
    ratio = desc.rank / desc.rank0
    return -ratio * (complex(s) - desc.dim / (2.0 * desc.rank))


def C_of_s(desc: AlgebraDescriptor, s: complex,
           *, allow_outside_domain: bool = False) -> complex:
    """Meromorphic normalizing constant C(s) = J(-nu(s)) =
    J((r/r0)(s - n/2r)), with C fixed to 1 at s = n/2r."""
    kappa = -nu_of_s(desc, s)
    return hua_J(desc, kappa, allow_outside_domain=allow_outside_domain)
