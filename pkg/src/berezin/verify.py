"""Verification suites shared by the CLI and the acceptance tests.

Each case exercises one functional identity or closed-form-vs-oracle
comparison and reports {name, paper_anchor, status, max_rel_err,
samples}.  `paper_anchor` carries the identity being checked, written
out as a formula.  Case order is deterministic (sorted by name) and a
fixed seed gives a byte-identical report.
"""

from __future__ import annotations

import math
import warnings
from typing import Callable

import numpy as np

from . import algebra, conformal, kernels, quadrature, spectra
from .algebra import AlgebraDescriptor
from .errors import BerezinError, OutsideDomain, PoleError, SingularConfiguration

_FAMILIES = ("sym-real:1", "sym-real:2", "sym-real:3",
             "full-real:2", "full-real:3",
             "spin:2", "spin:3", "spin:4", "spin:5", "spin:6")

DEFAULT_SEED = 20250826


class Case:
    def __init__(self, name: str, anchor: str, tol: float,
                 fn: Callable[[np.random.Generator, str], tuple]):
        self.name = name
        self.anchor = anchor
        self.tol = tol
        self.fn = fn

    def run(self, seed: int, budget: str, tol_scale: float) -> dict:
        rng = np.random.default_rng(seed)
        try:
            max_err, samples = self.fn(rng, budget)
            status = "pass" if max_err <= self.tol * tol_scale else "fail"
        except BerezinError as exc:
            max_err, samples, status = float("nan"), 0, f"error: {exc}"
        return {
            "name": self.name,
            "paper_anchor": self.anchor,
            "status": status,
            "max_rel_err": max_err,
            "samples": samples,
        }


def _desc(spec: str) -> AlgebraDescriptor:
    return algebra.make_descriptor(spec)


def _random_spectral(desc: AlgebraDescriptor, rng) -> np.ndarray:
    return (rng.uniform(-1.5, 1.5, size=desc.rank0)
            + 1j * rng.uniform(-2.0, 2.0, size=desc.rank0))


# --------------------------------------------------------------------------
# algebraic suite
# --------------------------------------------------------------------------

def _case_bernstein_fourier(rng, budget):
    worst, count = 0.0, 0
    for spec in _FAMILIES:
        desc = _desc(spec)
        done = 0
        while done < 100:
            nu = rng.uniform(1.0, 6.0)
            lam = _random_spectral(desc, rng)
            try:
                res = spectra.bernstein_fourier_residual(desc, nu, lam)
            except PoleError:
                continue
            worst = max(worst, res)
            done += 1
            count += 1
    return worst, count


def _case_b_two_routes(rng, budget):
    worst, count = 0.0, 0
    for spec in _FAMILIES:
        desc = _desc(spec)
        done = 0
        while done < 100:
            nu = rng.uniform(1.0, 6.0) + 1j * rng.uniform(-1.0, 1.0)
            try:
                a = spectra.bernstein_b(desc, nu)
                b = spectra.bernstein_b_gamma_ratio(desc, nu)
            except PoleError:
                continue
            worst = max(worst, abs(a - b) / (abs(a) + abs(b)))
            done += 1
            count += 1
    return worst, count


def _random_weight(desc: AlgebraDescriptor, rng) -> spectra.Weight:
    r0 = desc.rank0
    if desc.root_system == "C":
        top = -int(rng.integers(0, 8))
        parts = [top]
    else:
        parts = sorted((int(p) for p in rng.integers(-5, 3, size=r0)),
                       reverse=True)
        if desc.root_system == "C" or desc.root_system == "D":
            parts = [min(p, 0) for p in parts]
            parts = sorted(parts, reverse=True)
    return spectra.Weight(desc, tuple(parts))


def _case_recursions(rng, budget):
    worst, count = 0.0, 0
    for spec in _FAMILIES:
        desc = _desc(spec)
        for kappa in range(1, 21):
            worst = max(worst, spectra.hua_recursion_residual(desc, float(kappa)))
            count += 1
        weights = 0
        attempts = 0
        while weights < 20 and attempts < 400:
            attempts += 1
            m = _random_weight(desc, rng)
            try:
                errs = [spectra.coeff_recursion_residual(desc, float(k), m)
                        for k in range(1, 21)]
            except PoleError:
                continue
            worst = max(worst, max(errs))
            weights += 1
            count += 20
    return worst, count


def _case_coeff_asymptotics(rng, budget):
    worst, count = 0.0, 0
    for spec in ("spin:2", "spin:4", "sym-real:2", "full-real:2"):
        desc = _desc(spec)
        for _ in range(5):
            m = _random_weight(desc, rng)
            const = spectra.coeff_asymptotic_constant(desc, m)
            if const == 0.0:
                continue
            for kappa in (50.0, 100.0, 200.0):
                try:
                    ratio = (spectra.fourier_coeff(desc, kappa, m)
                             / spectra.hua_J(desc, kappa))
                except PoleError:
                    continue
                # |a/J - 1| <= 2|const|/kappa: envelope as pass/fail margin
                excess = abs(ratio - 1.0) / (2.0 * abs(const) / kappa)
                worst = max(worst, excess)
                count += 1
    return worst, count


def _case_positivity(rng, budget):
    worst, count = 0.0, 0
    for spec in _FAMILIES:
        desc = _desc(spec)
        nu_lo = desc.dim / desc.rank0 - 1.0
        for nu in (nu_lo + 0.5, nu_lo + 1.5, nu_lo + 3.0):
            for y in np.linspace(0.0, 3.0, 7):
                lam = 1j * np.full(desc.rank0, y)
                val = spectra.spherical_transform(desc, nu, lam)
                if abs(val.imag) > 1e-12 * abs(val) or val.real < 0.0:
                    worst = max(worst, 1.0)
                count += 1
    return worst, count


def _case_i_normalized_spin_gamma(rng, budget):
    """I(nu) proportional to Gamma(nu-n+1)/Gamma(nu+1-n/2) on the rank-2
    non-split family: check the normalized ratio."""
    import cmath

    from scipy.special import loggamma

    worst, count = 0.0, 0
    for n in (2, 3, 4, 5, 6):
        desc = _desc(f"spin:{n}")
        rho = [float(r) for r in desc.rho]
        base = n + 0.25

        def i_ratio(nu):
            # I(nu)/I(base): the arbitrary normalization cancels
            return (spectra.spherical_transform(desc, nu, rho,
                                                allow_outside_domain=True)
                    / spectra.spherical_transform(desc, base, rho,
                                                  allow_outside_domain=True))

        def gamma_route(nu):
            return cmath.exp(loggamma(nu - n + 1) - loggamma(nu + 1 - n / 2.0)
                             - loggamma(base - n + 1) + loggamma(base + 1 - n / 2.0))

        for nu in (n - 0.5, float(n), n + 1.0, n + 2.5):
            a = i_ratio(nu)
            b = gamma_route(nu)
            worst = max(worst, abs(a - b) / (abs(a) + abs(b)))
            count += 1
    return worst, count


# --------------------------------------------------------------------------
# conformal suite
# --------------------------------------------------------------------------

_CONF_FAMILIES = ("full-real:2", "full-real:3", "spin:3")


def _case_cross_ratio_invariance(rng, budget):
    worst, count = 0.0, 0
    per_family = 1000 if budget != "small" else 200
    for spec in _CONF_FAMILIES:
        desc = _desc(spec)
        done = 0
        while done < per_family:
            g = conformal.sample_conf(desc, rng)
            pts = [algebra.random_element(desc, rng) for _ in range(4)]
            try:
                c1 = kernels.cross_ratio(*pts)
                c2 = kernels.cross_ratio(*[conformal.apply(g, p) for p in pts])
            except (OutsideDomain, SingularConfiguration):
                continue
            worst = max(worst, abs(c1 - c2) / (abs(c1) + abs(c2)))
            done += 1
            count += 1
    return worst, count


def _case_fg_identity(rng, budget):
    worst, count = 0.0, 0
    per_family = 1000 if budget != "small" else 200
    for spec in _CONF_FAMILIES:
        desc = _desc(spec)
        done = 0
        while done < per_family:
            g = conformal.sample_conf(desc, rng)
            x = algebra.random_element(desc, rng)
            y = algebra.random_element(desc, rng)
            try:
                res = conformal.det_cocycle_identity_check(g, x, y)
            except OutsideDomain:
                continue
            worst = max(worst, res)
            done += 1
            count += 1
    return worst, count


def _case_det0_lemma(rng, budget):
    worst, count = 0.0, 0
    per_family = 1000 if budget != "small" else 200
    for spec in _CONF_FAMILIES:
        desc = _desc(spec)
        done = 0
        while done < per_family:
            g = conformal.sample_G(desc, rng)
            x = algebra.random_element(desc, rng)
            try:
                res = conformal.g_action_on_det0(g, x)
            except OutsideDomain:
                continue
            worst = max(worst, res)
            done += 1
            count += 1
    return worst, count


def _case_cocycle_chain_rule(rng, budget):
    worst, count = 0.0, 0
    for spec in _CONF_FAMILIES:
        desc = _desc(spec)
        done = 0
        while done < 50:
            g1 = conformal.sample_conf(desc, rng)
            g2 = conformal.sample_conf(desc, rng)
            x = algebra.random_element(desc, rng)
            try:
                comp = conformal.compose(g1, g2)
                lhs = conformal.cocycle(comp, x)
                rhs = conformal.cocycle(g1, conformal.apply(g2, x)) * conformal.cocycle(g2, x)
            except OutsideDomain:
                continue
            worst = max(worst, abs(lhs - rhs) / (abs(lhs) + abs(rhs)))
            done += 1
            count += 1
    return worst, count


def _case_sample_g_membership(rng, budget):
    failures, count = 0, 0
    for spec in _CONF_FAMILIES:
        desc = _desc(spec)
        for _ in range(10):
            g = conformal.sample_G(desc, rng)
            if not conformal.in_G(g):
                failures += 1
            count += 1
    return float(failures), count


def _case_psi_frame_diagonal(rng, budget):
    worst, count = 0.0, 0
    for spec in ("sym-real:2", "sym-real:3", "full-real:2", "spin:3", "spin:5"):
        desc = _desc(spec)
        for _ in range(100):
            t = rng.uniform(-1.5, 1.5, size=desc.rank0)
            frame = algebra.jordan_frame(algebra.random_tube_point(desc, rng))
            nu = complex(rng.uniform(0.5, 3.0), rng.uniform(-1.0, 1.0))
            a = kernels.psi_at_frame_point(frame, t, nu)
            b = kernels.psi_frame_diagonal(t, nu)
            worst = max(worst, abs(a - b) / abs(b))
            count += 1
    return worst, count


def _case_psi_cayley(rng, budget):
    worst, count = 0.0, 0
    for spec in ("sym-real:2", "full-real:2", "spin:3", "spin:5"):
        desc = _desc(spec)
        for _ in range(100):
            u = algebra.random_bounded_point(desc, rng, radius=0.85)
            nu = complex(rng.uniform(0.5, 3.0), rng.uniform(-1.0, 1.0))
            a = kernels.psi(conformal.cayley(u), nu)
            b = kernels.psi_compact(u, nu)
            worst = max(worst, abs(a - b) / abs(b))
            count += 1
    return worst, count


# --------------------------------------------------------------------------
# oracle suite
# --------------------------------------------------------------------------

def _case_hua_sphere(rng, budget):
    worst, count = 0.0, 0
    for n in (2, 3, 4):
        desc = _desc(f"spin:{n}")
        for kappa in (0.0, 0.5, 1.0, 2.0, 5.0):
            numeric = quadrature.hua_numeric_sphere(n, kappa)
            closed = spectra.hua_J(desc, kappa).real
            worst = max(worst, abs(numeric - closed))
            if n == 2:
                worst = max(worst, abs(numeric - 1.0 / (kappa + 1.0)))
            count += 1
    return worst, count


def _case_coeff_oracle(rng, budget):
    desc = _desc("spin:2")
    worst, count = 0.0, 0
    for kappa in (0.5, 1.0, 2.0, 4.0, 6.0):
        for ell in range(0, 5):
            numeric = quadrature.coeff_numeric(2, kappa, ell)
            closed = spectra.fourier_coeff(desc, kappa, spectra.Weight(desc, (-ell,))).real
            worst = max(worst, abs(numeric - closed))
            count += 1
    worst = max(worst, abs(
        spectra.fourier_coeff(desc, 2.0, spectra.Weight(desc, (-1,))).real - 1.0 / 6.0))
    return worst, count


def _case_transform_spin(rng, budget):
    worst, count = 0.0, 0
    lams = (0.0, 0.5, 1.0)
    for n in (2, 3):
        desc = _desc(f"spin:{n}")
        for nu in (3.0, 5.0):
            numeric = {la: quadrature.transform_numeric(desc, [la], nu, budget=budget)
                       for la in lams}
            for la in lams[1:]:
                num = numeric[la].value / numeric[0.0].value
                closed = (spectra.spherical_transform(desc, nu, [la])
                          / spectra.spherical_transform(desc, nu, [0.0]))
                worst = max(worst, abs(num - closed) / abs(closed))
                count += numeric[la].samples
    return worst, count


def _case_transform_fullreal_mc(rng, budget):
    desc = _desc("full-real:2")
    nu = 3.0
    seed = int(rng.integers(0, 2 ** 31))
    n_samples = 10 ** 6 if budget == "small" else 10 ** 7
    la, lb = [0.0, 0.0], [0.5, 0.0]
    ra = quadrature.transform_numeric(desc, la, nu, budget=n_samples, seed=seed)
    rb = quadrature.transform_numeric(desc, lb, nu, budget=n_samples, seed=seed)
    num = ra.value / rb.value
    closed = (spectra.spherical_transform(desc, nu, la)
              / spectra.spherical_transform(desc, nu, lb))
    return abs(num - closed) / abs(closed), 2 * n_samples


def _case_i_normalized_scalar(rng, budget):
    desc = _desc("sym-real:1")
    worst, count = 0.0, 0
    for nu in (1.5, 2.0, 3.0):
        numeric = quadrature.i_normalized_numeric_scalar(nu)
        closed = spectra.I_normalized(desc, nu).real
        worst = max(worst, abs(numeric - closed))
        count += 1
    worst = max(worst, abs(spectra.I_normalized(desc, 2.0) - 2.0 / 3.0))
    return worst, count


def _case_c_of_s(rng, budget):
    desc = _desc("sym-real:1")
    worst, count = 0.0, 0
    for s in (1.0, 1.5, 2.0):
        numeric = quadrature.c_of_s_numeric_scalar(s)
        closed = spectra.C_of_s(desc, s).real
        worst = max(worst, abs(numeric - closed))
        count += 1
    return worst, count


def _bilinear_setup():
    desc = _desc("sym-real:1")
    f1 = quadrature.SmoothBump(1.0, 2.0)
    f2 = quadrature.SmoothBump(3.0, 4.0)
    return desc, f1, f2


def _case_bilinear_translation(rng, budget):
    desc, f1, f2 = _bilinear_setup()
    g = conformal.translation(algebra.Element(desc, np.array([0.7])))
    return quadrature.bilinear_invariance_mc(0.8, g, f1, f2), 200 * 200


def _case_bilinear_dilation(rng, budget):
    desc, f1, f2 = _bilinear_setup()
    g = conformal.structure_map(desc, conformal.structure_scale(desc, 2.0))
    return quadrature.bilinear_invariance_mc(0.8, g, f1, f2), 200 * 200


def _case_bilinear_inversion_word(rng, budget):
    desc, f1, f2 = _bilinear_setup()
    g = conformal.ConformalMap(desc, word=(
        ("invert",),
        ("translate", algebra.Element(desc, np.array([0.2]))),
        ("invert",),
    ))
    return quadrature.bilinear_invariance_mc(0.8, g, f1, f2), 200 * 200


def _case_concentration(rng, budget):
    kappas = (1.0, 10.0, 100.0)
    rows = quadrature.delta_concentration_check(2, kappas, np.cos)
    worst = 0.0
    gaps = [gap for (_, _, gap) in rows]
    if not all(gaps[i] > gaps[i + 1] for i in range(len(gaps) - 1)):
        worst = 1.0
    for (kappa, l_val, _gap) in rows:
        worst = max(worst, abs(l_val - kappa / (kappa + 2.0)))
    # a second test function, also concentrating at theta = 0
    rows2 = quadrature.delta_concentration_check(2, kappas, lambda th: th ** 2)
    gaps2 = [gap for (_, _, gap) in rows2]
    if not all(gaps2[i] > gaps2[i + 1] for i in range(len(gaps2) - 1)):
        worst = max(worst, 1.0)
    return worst, len(kappas) * 2


def _case_gl_convergence(rng, budget):
    factor = quadrature.gl_convergence_factor()
    return (0.0 if factor >= 10.0 else 1.0), 3


# --------------------------------------------------------------------------
# suite registry
# --------------------------------------------------------------------------

SUITES = {
    "algebraic": [
        Case("bernstein_fourier_identity",
             "gamma_nu(lam) * T_nu(lam) = b(nu) * T_{nu+1}(lam)",
             1e-10, _case_bernstein_fourier),
        Case("b_product_vs_gamma_ratio",
             "prod_k (nu - beta_k) = Q(nu+1)/Q(nu)",
             1e-12, _case_b_two_routes),
        Case("hua_and_coeff_recursions",
             "gamma_{-k}(rho) J(k) = b(-k) J(k-1); "
             "gamma_{-k}(rho-m) a_k(m) = b(-k) a_{k-1}(m)",
             1e-12, _case_recursions),
        Case("coeff_asymptotic_envelope",
             "|a_k(m)/J(k) - 1| <= 2 |sum_j m_j (m_j - 2 rho_j)| / k",
             1.0, _case_coeff_asymptotics),
        Case("transform_positivity",
             "T_nu(lam) >= 0 for real nu, imaginary lam",
             0.5, _case_positivity),
        Case("i_normalized_gamma_ratio_rank2",
             "I(nu) ~ Gamma(nu-n+1)/Gamma(nu+1-n/2), normalized",
             1e-12, _case_i_normalized_spin_gamma),
    ],
    "conformal": [
        Case("cross_ratio_invariance",
             "{g.x1, g.x2, g.x3, g.x4} = {x1, x2, x3, x4}",
             1e-9, _case_cross_ratio_invariance),
        Case("det_cocycle_identity",
             "det(g.x - g.y)^2 = a(g,x) a(g,y) det(x-y)^2",
             1e-9, _case_fg_identity),
        Case("det0_semi_invariance",
             "det((g.x)_0) = a(g,x) det(x_0) for g in G",
             1e-9, _case_det0_lemma),
        Case("cocycle_chain_rule",
             "a(g1 g2, x) = a(g1, g2.x) a(g2, x)",
             1e-9, _case_cocycle_chain_rule),
        Case("sampled_g_membership",
             "(-alpha) g (-alpha) = g for sampled g",
             0.5, _case_sample_g_membership),
        Case("psi_frame_diagonal",
             "psi_nu(sum e^{t_j} c_j) = prod cosh(t_j/2)^{-2nu}",
             1e-12, _case_psi_frame_diagonal),
        Case("psi_cayley_pullback",
             "psi_nu(c(u)) = h(u,u)^{(r0/r) nu}",
             1e-10, _case_psi_cayley),
    ],
    "oracles": [
        Case("hua_sphere_quadrature",
             "mean of cos^{2k}(theta/2) on S^n = J(k)",
             1e-8, _case_hua_sphere),
        Case("coeff_zonal_quadrature",
             "<cos^{2k}(theta/2), Phi_l> = a_k(-l)",
             1e-8, _case_coeff_oracle),
        Case("transform_quadrature_rank2",
             "tube integral of Delta_{rho+lam}(x0) psi_nu mu(dx) "
             "matches Gamma products (ratios)",
             1e-4, _case_transform_spin),
        Case("transform_montecarlo_matrix2",
             "bounded-domain Monte Carlo matches Gamma products (ratios)",
             2e-2, _case_transform_fullreal_mc),
        Case("i_normalized_scalar_quadrature",
             "I(nu) = (1/2) int (1-u^2)^{nu-1} du, normalized",
             1e-8, _case_i_normalized_scalar),
        Case("c_of_s_scalar_quadrature",
             "C(s) = int (1+x^2)^{-(s+1/2)} dx / pi",
             1e-8, _case_c_of_s),
        Case("bilinear_invariance_translation",
             "B_s(pi_s(g)f1, pi_s(g)f2) = B_s(f1, f2), g translation",
             1e-12, _case_bilinear_translation),
        Case("bilinear_invariance_dilation",
             "B_s invariance, g dilation",
             1e-6, _case_bilinear_dilation),
        Case("bilinear_invariance_inversion_word",
             "B_s invariance, g inversion-conjugated word",
             1e-3, _case_bilinear_inversion_word),
        Case("delta_concentration",
             "L_k(phi) -> phi(0), L_k(cos) = k/(k+2)",
             1e-10, _case_concentration),
        Case("gl_spectral_convergence",
             "doubling nodes shrinks residual >= 10x",
             0.5, _case_gl_convergence),
    ],
}


def run_suite(suite: str, seed: int = DEFAULT_SEED, budget: str = "default",
              tol_scale: float = 1.0) -> dict:
    if suite == "all":
        cases = [c for name in ("algebraic", "conformal", "oracles")
                 for c in SUITES[name]]
    elif suite in SUITES:
        cases = list(SUITES[suite])
    else:
        raise ValueError(f"unknown suite {suite!r}")
    cases.sort(key=lambda c: c.name)
    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for i, case in enumerate(cases):
            results.append(case.run(seed + i, budget, tol_scale))
    return {"suite": suite, "seed": seed, "cases": results}


def all_passed(report: dict) -> bool:
    return all(c["status"] == "pass" for c in report["cases"])
