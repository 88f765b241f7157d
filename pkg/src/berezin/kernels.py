"""Cross-ratios, canonical kernels and spherical functions.

All kernels are ratios of Jordan determinants.  Powers are taken through
logarithms of bases that are checked positive, so complex exponents are
well defined without branch ambiguity.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import algebra
from .algebra import AlgebraDescriptor, Element, JordanFrame
from .errors import SingularConfiguration

_SINGULAR_TOL = 1e-13


def _det(x: Element) -> float:
    return algebra.det(x)


def cross_ratio(x1: Element, x2: Element, x3: Element, x4: Element) -> float:
    """{x1,x2,x3,x4} = [det(x1-x3)/det(x2-x3)] [det(x2-x4)/det(x1-x4)].

    Degenerates continuously to 1 when x2 == x1.
    """
    if x1.allclose(x2, atol=0.0):
        return 1.0
    d13 = _det(x1 - x3)
    d23 = _det(x2 - x3)
    d24 = _det(x2 - x4)
    d14 = _det(x1 - x4)
    scale = max(abs(d13), abs(d23), abs(d24), abs(d14), 1e-300)
    if abs(d23) <= _SINGULAR_TOL * scale or abs(d14) <= _SINGULAR_TOL * scale:
        raise SingularConfiguration("cross-ratio denominator vanishes")
    return (d13 / d23) * (d24 / d14)


def F_kernel(x: Element, y: Element) -> float:
    """F(x,y) = det(x + a(x)) det(y + a(y)) / [det(x + a(y)) det(y + a(x))]

    with a the Euclidean involution; symmetric, positive on the tube,
    and F(x,x) = 1.
    """
    ax = algebra.involution_alpha(x)
    ay = algebra.involution_alpha(y)
    num = _det(x + ax) * _det(y + ay)
    den = _det(x + ay) * _det(y + ax)
    scale = max(abs(num), abs(den), 1e-300)
    if abs(den) <= _SINGULAR_TOL * scale:
        raise SingularConfiguration("kernel denominator vanishes")
    return num / den


def berezin(x: Element, y: Element, nu: complex) -> complex:
    """B_nu(x, y) = F(x, y)^{(r0/r) nu}; requires F(x,y) > 0."""
    desc = x.descriptor
    base = F_kernel(x, y)
    if base <= 0.0:
        raise SingularConfiguration("kernel base not positive")
    return cmath.exp((desc.rank0 / desc.rank) * nu * math.log(base))


def psi(x: Element, nu: complex) -> complex:
    """Spherical-type function psi_nu(x) = F(x, e)^{(r0/r) nu}."""
    return berezin(x, algebra.identity(x.descriptor), nu)


def psi_frame_diagonal(t, nu: complex) -> complex:
    """psi_nu at sum exp(t_j) c_j over a frame: prod cosh(t_j/2)^{-2 nu}."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    log_val = -2.0 * nu * np.sum(np.log(np.cosh(t / 2.0)))
    return cmath.exp(log_val)


def h_diag(u: Element) -> float:
    """h(u, u) = det(a(u^{-1}) - u) det(a(u)) on the bounded domain.

    Equals det(I - u u^T) for full-real and (1 - |u|^2)^2 for spin.
    """
    au = algebra.involution_alpha(u)
    if abs(_det(u)) <= 1e-300:
        # continuous limit through the expanded polynomial form
        return _h_diag_regularized(u)
    uinv = algebra.inverse(u)
    return _det(algebra.involution_alpha(uinv) - u) * _det(au)


def _h_diag_regularized(u: Element) -> float:
    desc = u.descriptor
    if desc.family == "spin":
        return float((1.0 - np.dot(u.coords, u.coords)) ** 2)
    um = algebra.to_matrix(u)
    return float(np.linalg.det(np.eye(desc.param) - um @ um.T))


def h_neg(x: Element) -> float:
    """|det(x^{-1} + a(x)) det(x)|; equals (1 + |x|^2)^2 for spin."""
    xinv = algebra.inverse(x)
    return abs(_det(xinv + algebra.involution_alpha(x)) * _det(x))


def psi_compact(u: Element, nu: complex) -> complex:
    """psi_nu at the Cayley image of a bounded-domain point:
    psi_nu(c(u)) = h(u,u)^{(r0/r) nu}."""
    desc = u.descriptor
    base = h_diag(u)
    if base <= 0.0:
        raise SingularConfiguration("bounded-domain kernel not positive")
    return cmath.exp((desc.rank0 / desc.rank) * nu * math.log(base))


def compact_F(u: Element, v: Element) -> float:
    """Kernel on the compact picture:
    det(u + a(u^{-1})) det(v + a(v^{-1})) /
    [det(u + a(v^{-1})) det(v + a(u^{-1}))]."""
    aui = algebra.involution_alpha(algebra.inverse(u))
    avi = algebra.involution_alpha(algebra.inverse(v))
    num = _det(u + aui) * _det(v + avi)
    den = _det(u + avi) * _det(v + aui)
    scale = max(abs(num), abs(den), 1e-300)
    if abs(den) <= _SINGULAR_TOL * scale:
        raise SingularConfiguration("compact kernel denominator vanishes")
    return num / den


def compact_psi(theta, kappa: complex) -> complex:
    """prod_j cos^2(theta_j / 2)^kappa — frame-diagonal compact kernel."""
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    base = np.cos(theta / 2.0) ** 2
    if np.any(base <= 0.0):
        raise SingularConfiguration("compact kernel base not positive")
    return cmath.exp(kappa * np.sum(np.log(base)))


def psi_at_frame_point(frame: JordanFrame, t, nu: complex) -> complex:
    """psi_nu evaluated at sum exp(t_j) c_j via the kernel (cross-check
    against psi_frame_diagonal)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    desc = frame.idempotents[0].descriptor
    x = algebra.zero(desc)
    for tj, cj in zip(t, frame.idempotents):
        x = x + math.exp(tj) * cj
    return psi(x, nu)
