"""Independent numerical oracles.

Every closed-form spectral object exported by `spectra` is re-derived
here, at small rank, by direct integration against the invariant
measures — tensor Gauss-Legendre where the domain compactifies nicely,
stratified Monte Carlo on the rank-2 matrix ball.  Nothing in this module
calls the Gamma-product formulas; that independence is the point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from . import _accel, algebra, conformal
from .algebra import AlgebraDescriptor, Element
from .conformal import ConformalMap
from .errors import ConvergenceError, OutsideDomain, ParameterDomain

# sample/node budgets, tuned so "small" stays interactive
_MC_BUDGETS = {"small": 10 ** 6, "default": 4 * 10 ** 6, "full": 10 ** 7}
_GL_BUDGETS = {"small": (192, 64), "default": (448, 160), "full": (896, 320)}


@dataclass(frozen=True)
class OracleResult:
    """Numerical estimate with an internal error estimate."""

    value: complex
    error: float
    samples: int

    @property
    def real(self) -> float:
        return float(np.real(self.value))


@lru_cache(maxsize=32)
def _leggauss(n: int):
    return np.polynomial.legendre.leggauss(n)


def gl_nodes(a: float, b: float, n: int):
    """Gauss-Legendre nodes and weights on [a, b]."""
    x, w = _leggauss(n)
    half = 0.5 * (b - a)
    return 0.5 * (a + b) + half * x, half * w


# --------------------------------------------------------------------------
# spherical transform oracles
# --------------------------------------------------------------------------

def _transform_spin_grid(n: int, lam: complex, nu: float, nt: int, nu_n: int):
    """2D tensor quadrature of the tube-domain transform integral for the
    rank-2 non-split family of dimension n.

    After x0 = e^t and ||x1|| = (1 + e^t) tan(u) the integrand is

        exp(t (nu + lam - (n-1)/2)) (1 + e^t)^{n-1-2 nu}
        * cos^{2 nu - n}(u) sin^{n-2}(u),

    up to (nu, lam)-independent constants (which cancel in ratios).
    """
    rho = 0.5 * (n - 1)
    c_minus = nu + lam.real - rho   # decay rate as t -> -inf
    c_plus = nu - lam.real - rho    # decay rate as t -> +inf
    if c_minus <= 0 or c_plus <= 0:
        raise ParameterDomain(
            "transform integral diverges: need |Re lam| < nu - (n-1)/2")
    t_lo = -(40.0 / c_minus + 5.0)
    t_hi = 40.0 / c_plus + 5.0
    t, wt = gl_nodes(t_lo, t_hi, nt)
    u, wu = gl_nodes(0.0, 0.5 * math.pi, nu_n)

    ft = np.exp(t * (nu + lam - rho)) * (1.0 + np.exp(t)) ** (n - 1 - 2.0 * nu)
    fu = np.cos(u) ** (2.0 * nu - n) * np.sin(u) ** (n - 2)
    return complex(np.dot(wt, ft) * np.dot(wu, fu))


def _transform_spin(desc: AlgebraDescriptor, lam, nu: float, budget) -> OracleResult:
    n = desc.param
    lam = complex(np.atleast_1d(np.asarray(lam, dtype=complex))[0])
    nt, nu_n = _GL_BUDGETS[budget] if isinstance(budget, str) else budget
    full = _transform_spin_grid(n, lam, nu, nt, nu_n)
    half = _transform_spin_grid(n, lam, nu, nt // 2, nu_n // 2)
    return OracleResult(full, abs(full - half), nt * nu_n)


def _transform_fullreal2_mc(desc: AlgebraDescriptor, lam, nu: float,
                            budget, seed: int) -> OracleResult:
    """Stratified Monte Carlo over the 2x2 spectral-norm ball.

    The tube integral is pulled back through the Cayley map; the pulled
    back integrand is Delta_{rho+lam}(x0(u)) h(u)^{nu - 2} on
    D = { u : ||u||_op < 1 }, sampled uniformly on [-1,1]^4 with
    rejection.  Fixed (seed, chunk-count) gives bit-identical output.
    """
    lam = np.atleast_1d(np.asarray(lam, dtype=complex))
    if np.any(np.abs(lam.imag) > 0):
        raise ParameterDomain("Monte-Carlo transform oracle is real-lambda only")
    a1 = float(lam[0].real + 0.0)          # rho_1 = 0
    a2 = float(lam[1].real + 0.5)          # rho_2 = 1/2
    n_samples = _MC_BUDGETS[budget] if isinstance(budget, str) else int(budget)
    n_chunks = 64
    per_chunk = n_samples // n_chunks
    total = 0.0
    total_sq = 0.0
    count = 0
    for chunk in range(n_chunks):
        rng = np.random.Generator(np.random.Philox(key=(seed, chunk)))
        u = rng.uniform(-1.0, 1.0, size=(per_chunk, 4))
        # stratify the first coordinate over the chunk's subinterval
        lo = -1.0 + 2.0 * chunk / n_chunks
        u[:, 0] = lo + (u[:, 0] + 1.0) / n_chunks
        s, sq, acc = _accel.mc_chunk(u, a1, a2, float(nu))
        total += s
        total_sq += sq
        count += per_chunk
    volume = 16.0  # of the sampling cube; cancels in ratios
    mean = total / count
    var = max(total_sq / count - mean * mean, 0.0)
    stderr = volume * math.sqrt(var / count)
    return OracleResult(volume * mean, stderr, count)


def transform_numeric(desc: AlgebraDescriptor, lam, nu: float,
                      budget="default", seed: int = 12345,
                      tol: float | None = None) -> OracleResult:
    """Numerical spherical transform of psi_nu at spectral point lam,
    up to a (nu, lam)-independent constant: ratios across lam values are
    directly comparable with the closed form.
    """
    nu = float(nu)
    if nu <= desc.dim / desc.rank0 - 1.0:
        raise ParameterDomain(
            f"need nu > {desc.dim / desc.rank0 - 1.0} for integrability")
    if desc.family == "spin" and desc.param in (2, 3):
        res = _transform_spin(desc, lam, nu, budget)
    elif desc.family == "full-real" and desc.param == 2:
        res = _transform_fullreal2_mc(desc, lam, nu, budget, seed)
    else:
        raise ParameterDomain(
            f"no quadrature oracle for {desc.name}; closed forms there are "
            "covered by algebraic identities only")
    if tol is not None and abs(res.value) > 0:
        if res.error / abs(res.value) > tol:
            raise ConvergenceError(
                f"estimated relative error {res.error / abs(res.value):.2e} "
                f"exceeds requested {tol:.2e}")
    return res


# --------------------------------------------------------------------------
# compact dual (rank 1): sphere quadrature, zonal polynomials
# --------------------------------------------------------------------------

def _sphere_measure(n: int, nodes: int = 128):
    theta, w = gl_nodes(0.0, math.pi, nodes)
    return theta, w * np.sin(theta) ** (n - 1)


def hua_numeric_sphere(n: int, kappa: float, nodes: int = 128) -> float:
    """Mean of cos^{2 kappa}(theta/2) over the n-sphere (polar angle
    density sin^{n-1}); independent check of the Gamma-product mass."""
    if kappa < 0:
        raise ParameterDomain("kappa must be non-negative")
    theta, w = _sphere_measure(n, nodes)
    num = float(np.dot(w, np.cos(theta / 2.0) ** (2.0 * kappa)))
    return num / float(w.sum())


def zonal_polynomials(n: int, maxdeg: int, nodes: int = 256):
    """Orthogonal polynomials in cos(theta) for the weight
    sin^{n-1}(theta), Gram-Schmidt on monomials, normalized to 1 at
    theta = 0.  Returns numpy Polynomial objects in c = cos(theta)."""
    theta, w = _sphere_measure(n, nodes)
    c = np.cos(theta)
    Poly = np.polynomial.Polynomial
    basis = []
    for deg in range(maxdeg + 1):
        p = Poly.basis(deg)
        for q in basis:
            qv = q(c)
            p = p - Poly(q.coef) * (np.dot(w, p(c) * qv) / np.dot(w, qv * qv))
        value_at_pole = p(1.0)
        if abs(value_at_pole) < 1e-13:
            raise ConvergenceError(f"zonal normalization failed at degree {deg}")
        basis.append(p / value_at_pole)
    return basis


def coeff_numeric(n: int, kappa: float, ell: int, nodes: int = 256) -> float:
    """Quadrature pairing of the compact kernel with the degree-ell zonal
    polynomial; matches the Gamma-product coefficient at weight -ell."""
    theta, w = _sphere_measure(n, nodes)
    phi = zonal_polynomials(n, ell, nodes)[ell]
    num = float(np.dot(w, np.cos(theta / 2.0) ** (2.0 * kappa) * phi(np.cos(theta))))
    return num / float(w.sum())


def delta_concentration_check(n: int, kappa_list: Sequence[float],
                              phi: Callable[[np.ndarray], np.ndarray],
                              nodes: int = 256):
    """Concentration of the normalized kernel family toward theta = 0:
    rows (kappa, L_kappa(phi), |L_kappa(phi) - phi(0)|), gap decreasing."""
    theta, w = _sphere_measure(n, nodes)
    target = float(phi(np.zeros(1))[0])
    rows = []
    for kappa in kappa_list:
        dens = w * np.cos(theta / 2.0) ** (2.0 * float(kappa))
        l_val = float(np.dot(dens, phi(theta))) / float(dens.sum())
        rows.append((float(kappa), l_val, abs(l_val - target)))
    return rows


# --------------------------------------------------------------------------
# scalar-family oracles (dimension 1)
# --------------------------------------------------------------------------

def i_normalized_numeric_scalar(nu: float, nodes: int = 256) -> float:
    """(1/2) integral of (1 - u^2)^{nu - 1} over [-1, 1], computed after
    u = sin(t); the normalized kernel mass of the scalar family."""
    if nu <= 0.5:
        raise ParameterDomain("need nu > 1/2")
    t, w = gl_nodes(0.0, 0.5 * math.pi, nodes)
    return float(np.dot(w, np.cos(t) ** (2.0 * nu - 1.0)))


def c_of_s_numeric_scalar(s: float, nodes: int = 256) -> float:
    """integral of (1 + x^2)^{-(s + 1/2)} over the line, normalized to 1
    at s = 1/2; computed after x = tan(t)."""
    if s <= 0.0:
        raise ParameterDomain("need s > 0")
    t, w = gl_nodes(-0.5 * math.pi, 0.5 * math.pi, nodes)

    def raw(sv: float) -> float:
        return float(np.dot(w, np.cos(t) ** (2.0 * sv - 1.0)))

    return raw(s) / raw(0.5)


# --------------------------------------------------------------------------
# invariant bilinear form (scalar family)
# --------------------------------------------------------------------------

class SmoothBump:
    """C-infinity bump supported on (a, b), identically zero outside."""

    def __init__(self, a: float, b: float):
        if not b > a:
            raise ValueError("empty support")
        self.support = (float(a), float(b))

    def __call__(self, x):
        a, b = self.support
        x = np.asarray(x, dtype=float)
        t = 2.0 * (x - a) / (b - a) - 1.0
        out = np.zeros_like(t)
        inside = np.abs(t) < 1.0
        ti = t[inside]
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - ti * ti))
        return out


def _apply_scalar(g: ConformalMap, x: float) -> float:
    el = Element(g.descriptor, np.array([float(x)]))
    return float(conformal.apply(g, el).coords[0])


def _map_interval(g: ConformalMap, a: float, b: float, probes: int = 64):
    """Image of [a, b] under a scalar conformal map; OutsideDomain if a
    pole crosses the interval."""
    xs = np.linspace(a, b, probes)
    try:
        ys = np.array([_apply_scalar(g, x) for x in xs])
    except OutsideDomain:
        raise
    if not (np.all(np.diff(ys) > 0) or np.all(np.diff(ys) < 0)):
        raise OutsideDomain("support straddles a pole of the map")
    return min(ys[0], ys[-1]), max(ys[0], ys[-1])


def bilinear_form(s: float, f1, f2, nodes: int = 200) -> float:
    """B_s(f1, f2) = double integral of |x - y|^{2s - 1} f1(x) f2(y) over
    the supports (scalar family, where 2s - n/r = 2s - 1)."""
    x, wx = gl_nodes(*f1.support, nodes)
    y, wy = gl_nodes(*f2.support, nodes)
    kern = np.abs(x[:, None] - y[None, :]) ** (2.0 * s - 1.0)
    return float(wx @ (kern * (f1(x)[:, None] * f2(y)[None, :])) @ wy)


class _ActedBump:
    """pi_s(g) applied to a bump: support mapped through g."""

    def __init__(self, g: ConformalMap, s: float, f):
        self.support = _map_interval(g, *f.support)
        self._fn = conformal.pi_s(g, s, lambda el: float(f(el.coords[0])))
        self._desc = g.descriptor

    def __call__(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return np.array([float(np.real(self._fn(Element(self._desc, np.array([v])))))
                         for v in x])


def bilinear_invariance_mc(s: float, g: ConformalMap, f1, f2,
                           budget: int = 200) -> float:
    """Relative residual of B_s(pi_s(g) f1, pi_s(g) f2) = B_s(f1, f2)."""
    if s <= 0.5:
        raise ParameterDomain("need Re s > 1/2 for local integrability")
    base = bilinear_form(s, f1, f2, nodes=budget)
    gf1 = _ActedBump(g, s, f1)
    gf2 = _ActedBump(g, s, f2)
    moved = bilinear_form(s, gf1, gf2, nodes=budget)
    return abs(moved - base) / abs(base)


# --------------------------------------------------------------------------
# quadrature self-check
# --------------------------------------------------------------------------

def gl_convergence_factor(n: int = 3, kappa: float = 2.5) -> float:
    """Residual-reduction factor when doubling nodes on a smooth sphere
    integrand; spectral convergence means a factor >= 10."""
    exact = hua_numeric_sphere(n, kappa, nodes=512)
    coarse = abs(hua_numeric_sphere(n, kappa, nodes=8) - exact)
    fine = abs(hua_numeric_sphere(n, kappa, nodes=16) - exact)
    if fine == 0.0:
        return float("inf")
    return coarse / fine
