"""Acceptance gate: thirteen criteria, each printing one PASS/FAIL line.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines; the
assertions use exactly the stated tolerances and time limits.
"""

import math
import time

import numpy as np
import pytest

from berezin import algebra, conformal, kernels, quadrature, spectra
from berezin.errors import PoleError

ALL_FAMILIES = ("sym-real:1", "sym-real:2", "sym-real:3",
                "full-real:2", "full-real:3",
                "spin:2", "spin:3", "spin:4", "spin:5", "spin:6")


def _desc(spec):
    return algebra.make_descriptor(spec)


def _report(num, label, err, limit, ok):
    print(f"[criterion {num:>2}] {'PASS' if ok else 'FAIL'}  {label}: "
          f"max err {err:.3e} (limit {limit:.0e})")


def test_criterion_01_bernstein_fourier_identity():
    rng = np.random.default_rng(101)
    start = time.time()
    worst = 0.0
    for spec in ALL_FAMILIES:
        d = _desc(spec)
        done = 0
        while done < 100:
            nu = rng.uniform(1.0, 6.0)
            lam = (rng.uniform(-1.5, 1.5, size=d.rank0)
                   + 1j * rng.uniform(-2.0, 2.0, size=d.rank0))
            try:
                worst = max(worst, spectra.bernstein_fourier_residual(d, nu, lam))
            except (PoleError, OverflowError):
                continue
            done += 1
    elapsed = time.time() - start
    ok = worst < 1e-10 and elapsed < 1.0
    _report(1, "Fourier-side Bernstein identity", worst, 1e-10, ok)
    assert worst < 1e-10
    assert elapsed < 1.0, f"took {elapsed:.2f}s, limit 1s"


def test_criterion_02_b_two_routes():
    rng = np.random.default_rng(102)
    worst = 0.0
    for spec in ALL_FAMILIES:
        d = _desc(spec)
        done = 0
        while done < 100:
            nu = rng.uniform(1.0, 6.0) + 1j * rng.uniform(-1.0, 1.0)
            try:
                a = spectra.bernstein_b(d, nu)
                b = spectra.bernstein_b_gamma_ratio(d, nu)
            except PoleError:
                continue
            worst = max(worst, abs(a - b) / (abs(a) + abs(b)))
            done += 1
    ok = worst < 1e-12
    _report(2, "b(nu) product form vs Gamma-ratio form", worst, 1e-12, ok)
    assert ok


def _twenty_weights(d, rng):
    found, attempts = [], 0
    while len(found) < 20 and attempts < 500:
        attempts += 1
        if d.root_system == "C":
            parts = (-int(rng.integers(0, 12)),)
        else:
            parts = tuple(sorted((int(p) for p in
                                  rng.integers(-5, 3, size=d.rank0)),
                                 reverse=True))
        try:
            found.append(spectra.Weight(d, parts))
        except Exception:
            continue
    return found


def test_criterion_03_recursions():
    rng = np.random.default_rng(103)
    worst = 0.0
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for spec in ALL_FAMILIES:
            d = _desc(spec)
            for kappa in range(1, 21):
                worst = max(worst,
                            spectra.hua_recursion_residual(d, float(kappa)))
            for m in _twenty_weights(d, rng):
                for kappa in range(1, 21):
                    try:
                        worst = max(worst, spectra.coeff_recursion_residual(
                            d, float(kappa), m))
                    except PoleError:
                        continue
    ok = worst < 1e-12
    _report(3, "mass and coefficient recursions, kappa=1..20", worst, 1e-12, ok)
    assert ok


def test_criterion_04_sphere_oracle():
    start = time.time()
    worst = 0.0
    for n in (2, 3, 4):
        d = _desc(f"spin:{n}")
        for kappa in (0.0, 0.5, 1.0, 2.0, 5.0):
            numeric = quadrature.hua_numeric_sphere(n, kappa)
            worst = max(worst, abs(numeric - spectra.hua_J(d, kappa).real))
            if n == 2:
                worst = max(worst, abs(numeric - 1.0 / (kappa + 1.0)))
    elapsed = time.time() - start
    ok = worst < 1e-8 and elapsed < 1.0
    _report(4, "sphere quadrature vs closed-form mass", worst, 1e-8, ok)
    assert worst < 1e-8
    assert elapsed < 1.0, f"took {elapsed:.2f}s, limit 1s"


def test_criterion_05_coefficient_oracle():
    d = _desc("spin:2")
    worst = 0.0
    for kappa in (0.5, 1.0, 2.0, 3.0, 4.5, 6.0):
        for ell in range(0, 5):
            numeric = quadrature.coeff_numeric(2, kappa, ell)
            closed = spectra.fourier_coeff(d, kappa,
                                           spectra.Weight(d, (-ell,))).real
            worst = max(worst, abs(numeric - closed))
    worst = max(worst, abs(spectra.fourier_coeff(
        d, 2.0, spectra.Weight(d, (-1,))).real - 1.0 / 6.0))
    ok = worst < 1e-8
    _report(5, "zonal coefficient oracle incl. a_2(-1)=1/6", worst, 1e-8, ok)
    assert ok


def test_criterion_06_transform_oracles():
    start = time.time()
    worst_spin = 0.0
    for n in (2, 3):
        d = _desc(f"spin:{n}")
        for nu in (3.0, 5.0):
            numeric = {la: quadrature.transform_numeric(d, [la], nu)
                       for la in (0.0, 0.5, 1.0)}
            for la in (0.5, 1.0):
                num = numeric[la].value / numeric[0.0].value
                closed = (spectra.spherical_transform(d, nu, [la])
                          / spectra.spherical_transform(d, nu, [0.0]))
                worst_spin = max(worst_spin, abs(num - closed) / abs(closed))
    spin_elapsed = time.time() - start
    ok_spin = worst_spin < 1e-4 and spin_elapsed < 10.0
    _report(6, "transform quadrature (rank-2 nonsplit)", worst_spin, 1e-4,
            ok_spin)

    start = time.time()
    d = _desc("full-real:2")
    nu, la, lb = 3.0, [0.0, 0.0], [0.5, 0.0]
    ra = quadrature.transform_numeric(d, la, nu, budget=10 ** 7, seed=606)
    rb = quadrature.transform_numeric(d, lb, nu, budget=10 ** 7, seed=606)
    closed = (spectra.spherical_transform(d, nu, la)
              / spectra.spherical_transform(d, nu, lb))
    err_mc = abs(ra.value / rb.value - closed) / abs(closed)
    mc_elapsed = time.time() - start
    ok_mc = err_mc < 2e-2 and mc_elapsed < 120.0
    _report(6, "transform Monte Carlo (rank-2 matrix, 1e7)", err_mc, 2e-2,
            ok_mc)
    assert worst_spin < 1e-4
    assert spin_elapsed < 10.0, f"took {spin_elapsed:.1f}s, limit 10s"
    assert err_mc < 2e-2
    assert mc_elapsed < 120.0, f"took {mc_elapsed:.1f}s, limit 120s"


def test_criterion_07_normalized_mass():
    d = _desc("sym-real:1")
    worst = 0.0
    for nu in (1.5, 2.0, 3.0):
        worst = max(worst, abs(quadrature.i_normalized_numeric_scalar(nu)
                               - spectra.I_normalized(d, nu).real))
    worst = max(worst, abs(spectra.I_normalized(d, 2.0) - 2.0 / 3.0))
    ok_scalar = worst < 1e-8

    # rank-2 nonsplit family: normalized-ratio route vs direct Gamma ratio
    import cmath

    from scipy.special import loggamma
    worst_spin = 0.0
    for n in (2, 3, 4, 5, 6):
        ds = _desc(f"spin:{n}")
        rho = [float(r) for r in ds.rho]
        base = n + 0.25
        for nu in (n - 0.5, float(n), n + 1.0, n + 2.5):
            a = (spectra.spherical_transform(ds, nu, rho,
                                             allow_outside_domain=True)
                 / spectra.spherical_transform(ds, base, rho,
                                               allow_outside_domain=True))
            b = cmath.exp(loggamma(nu - n + 1) - loggamma(nu + 1 - n / 2.0)
                          - loggamma(base - n + 1)
                          + loggamma(base + 1 - n / 2.0))
            worst_spin = max(worst_spin, abs(a - b) / (abs(a) + abs(b)))
    ok = ok_scalar and worst_spin < 1e-12
    _report(7, "normalized mass: scalar oracle + nonsplit Gamma ratio",
            max(worst, worst_spin), 1e-8, ok)
    assert worst < 1e-8
    assert worst_spin < 1e-12


def test_criterion_08_conformal_invariance():
    rng = np.random.default_rng(108)
    worst = 0.0
    from berezin.errors import OutsideDomain, SingularConfiguration
    for spec in ("full-real:2", "full-real:3", "spin:3"):
        d = _desc(spec)
        done = 0
        while done < 1000:
            g = conformal.sample_conf(d, rng)
            gg = conformal.sample_G(d, rng)
            x = algebra.random_element(d, rng)
            y = algebra.random_element(d, rng)
            pts = [algebra.random_element(d, rng) for _ in range(4)]
            try:
                res_fg = conformal.det_cocycle_identity_check(g, x, y)
                c1 = kernels.cross_ratio(*pts)
                c2 = kernels.cross_ratio(*[conformal.apply(g, p) for p in pts])
                res_cr = abs(c1 - c2) / (abs(c1) + abs(c2))
                res_l = conformal.g_action_on_det0(gg, x)
            except (OutsideDomain, SingularConfiguration):
                continue
            worst = max(worst, res_fg, res_cr, res_l)
            done += 1
    ok = worst < 1e-9
    _report(8, "conformal invariance (cross-ratio, cocycle, V0-det)",
            worst, 1e-9, ok)
    assert ok


def test_criterion_09_psi_consistency():
    rng = np.random.default_rng(109)
    worst_frame = 0.0
    specs = ("sym-real:2", "sym-real:3", "full-real:2", "spin:3", "spin:5")
    done = 0
    while done < 500:
        d = _desc(specs[done % len(specs)])
        t = rng.uniform(-2.0, 2.0, size=d.rank0)
        frame = algebra.jordan_frame(algebra.random_tube_point(d, rng))
        nu = complex(rng.uniform(0.5, 3.0), rng.uniform(-1.0, 1.0))
        a = kernels.psi_at_frame_point(frame, t, nu)
        b = kernels.psi_frame_diagonal(t, nu)
        worst_frame = max(worst_frame, abs(a - b) / abs(b))
        done += 1
    worst_cayley = 0.0
    for spec in specs:
        d = _desc(spec)
        for _ in range(100):
            u = algebra.random_bounded_point(d, rng, radius=0.85)
            nu = complex(rng.uniform(0.5, 3.0), rng.uniform(-1.0, 1.0))
            a = kernels.psi(conformal.cayley(u), nu)
            b = kernels.psi_compact(u, nu)
            worst_cayley = max(worst_cayley, abs(a - b) / abs(b))
    ok = worst_frame < 1e-12 and worst_cayley < 1e-10
    _report(9, "psi frame-diagonal and bounded-domain pullback",
            max(worst_frame, worst_cayley), 1e-10, ok)
    assert worst_frame < 1e-12
    assert worst_cayley < 1e-10


def test_criterion_10_meromorphic_constant():
    d = _desc("sym-real:1")
    worst = 0.0
    for s in (1.0, 1.5, 2.0):
        worst = max(worst, abs(quadrature.c_of_s_numeric_scalar(s)
                               - spectra.C_of_s(d, s).real))
    ok = worst < 1e-8
    _report(10, "C(s) vs normalized line integral", worst, 1e-8, ok)
    assert ok


def test_criterion_11_positivity():
    violations = 0
    for spec in ALL_FAMILIES:
        d = _desc(spec)
        nu_lo = d.dim / d.rank0 - 1.0
        for nu in (nu_lo + 0.25, nu_lo + 1.0, nu_lo + 2.5, nu_lo + 5.0):
            for y in np.linspace(0.0, 4.0, 9):
                val = spectra.spherical_transform(
                    d, nu, 1j * y * np.ones(d.rank0))
                if val.real < 0.0 or abs(val.imag) > 1e-12 * max(val.real, 1e-300):
                    violations += 1
    ok = violations == 0
    _report(11, "transform positivity on imaginary spectral grid",
            float(violations), 1.0, ok)
    assert ok


def test_criterion_12_bilinear_invariance():
    d = _desc("sym-real:1")
    f1 = quadrature.SmoothBump(1.0, 2.0)
    f2 = quadrature.SmoothBump(3.0, 4.0)
    r_tr = quadrature.bilinear_invariance_mc(
        0.8, conformal.translation(algebra.Element(d, np.array([0.7]))), f1, f2)
    r_dil = quadrature.bilinear_invariance_mc(
        0.8, conformal.structure_map(d, conformal.structure_scale(d, 2.0)),
        f1, f2)
    g_word = conformal.ConformalMap(d, word=(
        ("invert",),
        ("translate", algebra.Element(d, np.array([0.2]))),
        ("invert",),
    ))
    r_word = quadrature.bilinear_invariance_mc(0.8, g_word, f1, f2)
    ok = r_tr < 1e-12 and r_dil < 1e-6 and r_word < 1e-3
    _report(12, "bilinear-form invariance (translate/dilate/invert)",
            max(r_tr, r_dil, r_word), 1e-3, ok)
    assert r_tr < 1e-12
    assert r_dil < 1e-6
    assert r_word < 1e-3


def test_criterion_13_concentration():
    kappas = (1.0, 5.0, 20.0, 100.0)
    rows = quadrature.delta_concentration_check(2, kappas, np.cos)
    gaps = [gap for (_, _, gap) in rows]
    monotone = all(gaps[i] > gaps[i + 1] for i in range(len(gaps) - 1))
    worst = max(abs(l_val - k / (k + 2.0)) for (k, l_val, _) in rows)
    ok = monotone and worst < 1e-10
    _report(13, "delta concentration, L_k(cos) = k/(k+2)", worst, 1e-10, ok)
    assert monotone
    assert worst < 1e-10
