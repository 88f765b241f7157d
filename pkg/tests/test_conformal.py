"""Conformal maps, cocycles, group membership and the Cayley transform."""

import numpy as np
import pytest

from berezin import algebra, conformal
from berezin.errors import OutsideDomain

FAMILIES = ["sym-real:2", "full-real:2", "full-real:3", "spin:3"]


def _rng(seed=1):
    return np.random.default_rng(seed)


# --------------------------------------------------------------------------
# action and cocycle
# --------------------------------------------------------------------------

@pytest.mark.parametrize("spec", FAMILIES)
def test_cocycle_matches_numeric_differential(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng()
    checked = 0
    while checked < 20:
        g = conformal.sample_conf(d, rng)
        x = algebra.random_element(d, rng)
        try:
            a = conformal.cocycle(g, x)
            b = conformal.numeric_differential_chi(g, x)
        except OutsideDomain:
            continue
        assert a == pytest.approx(b, rel=1e-5)
        checked += 1


@pytest.mark.parametrize("spec", FAMILIES)
def test_cocycle_chain_rule(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng(2)
    checked = 0
    while checked < 20:
        g1 = conformal.sample_conf(d, rng)
        g2 = conformal.sample_conf(d, rng)
        x = algebra.random_element(d, rng)
        try:
            lhs = conformal.cocycle(conformal.compose(g1, g2), x)
            rhs = conformal.cocycle(g1, conformal.apply(g2, x)) * \
                conformal.cocycle(g2, x)
        except OutsideDomain:
            continue
        assert lhs == pytest.approx(rhs, rel=1e-10)
        checked += 1


@pytest.mark.parametrize("spec", FAMILIES)
def test_map_inverse_roundtrip(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng(3)
    checked = 0
    while checked < 20:
        g = conformal.sample_conf(d, rng)
        x = algebra.random_element(d, rng)
        try:
            y = conformal.apply(conformal.invert_map(g), conformal.apply(g, x))
        except OutsideDomain:
            continue
        assert y.allclose(x, atol=1e-8)
        checked += 1


def test_block_word_equivalence():
    d = algebra.make_descriptor("full-real:2")
    rng = _rng(4)
    checked = 0
    while checked < 20:
        g = conformal.sample_conf(d, rng)  # block form
        assert g.is_block
        word = conformal.block_to_word(g)
        x = algebra.random_element(d, rng)
        try:
            yb = conformal.apply(g, x)
            yw = conformal.apply(word, x)
            cb = conformal.cocycle(g, x)
            cw = conformal.cocycle(word, x)
        except OutsideDomain:
            continue
        assert yb.allclose(yw, atol=1e-9)
        assert cb == pytest.approx(cw, rel=1e-9)
        checked += 1


def test_outside_domain_reports_generator():
    d = algebra.make_descriptor("sym-real:1")
    g = conformal.ConformalMap(d, word=(
        ("translate", algebra.Element(d, np.array([1.0]))),
        ("invert",),
    ))
    with pytest.raises(OutsideDomain) as exc:
        conformal.apply(g, algebra.Element(d, np.array([-1.0])))
    assert exc.value.generator_index == 1


# --------------------------------------------------------------------------
# the determinant identities
# --------------------------------------------------------------------------

@pytest.mark.parametrize("spec", FAMILIES)
def test_det_cocycle_identity(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng(5)
    checked = 0
    while checked < 50:
        g = conformal.sample_conf(d, rng)
        x = algebra.random_element(d, rng)
        y = algebra.random_element(d, rng)
        try:
            res = conformal.det_cocycle_identity_check(g, x, y)
        except OutsideDomain:
            continue
        assert res < 1e-9
        checked += 1


@pytest.mark.parametrize("spec", FAMILIES)
def test_det0_semi_invariance_on_G(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng(6)
    checked = 0
    while checked < 50:
        g = conformal.sample_G(d, rng)
        x = algebra.random_element(d, rng)
        try:
            res = conformal.g_action_on_det0(g, x)
        except OutsideDomain:
            continue
        assert res < 1e-9
        checked += 1


# --------------------------------------------------------------------------
# group membership
# --------------------------------------------------------------------------

@pytest.mark.parametrize("spec", FAMILIES)
def test_sampled_G_elements_are_in_G(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng(7)
    for _ in range(5):
        assert conformal.in_G(conformal.sample_G(d, rng))


def test_generic_translation_not_in_G():
    d = algebra.make_descriptor("full-real:2")
    v = algebra.from_matrix(d, np.array([[1.0, 0.3], [0.3, 0.5]]))  # not skew
    assert not conformal.in_G(conformal.translation(v))


def test_skew_translation_in_G():
    d = algebra.make_descriptor("full-real:2")
    v = algebra.from_matrix(d, np.array([[0.0, 0.4], [-0.4, 0.0]]))
    assert conformal.in_G(conformal.translation(v))


def test_inversion_in_U():
    d = algebra.make_descriptor("sym-real:2")
    assert conformal.in_U(conformal.inversion(d))
    assert conformal.in_U(conformal.structure_map(
        d, conformal.structure_alpha(d)))


def test_dilation_not_in_U():
    d = algebra.make_descriptor("sym-real:2")
    g = conformal.structure_map(d, conformal.structure_scale(d, 2.0))
    assert not conformal.in_U(g)


# --------------------------------------------------------------------------
# Cayley transform
# --------------------------------------------------------------------------

@pytest.mark.parametrize("spec", FAMILIES + ["spin:5"])
def test_cayley_roundtrip(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng(8)
    for _ in range(20):
        u = algebra.random_bounded_point(d, rng, radius=0.8)
        x = conformal.cayley(u)
        assert algebra.in_tube(x)
        assert conformal.inverse_cayley(x).allclose(u, atol=1e-9)


def test_cayley_fixes_origin_to_identity():
    d = algebra.make_descriptor("spin:4")
    assert conformal.cayley(algebra.zero(d)).allclose(algebra.identity(d))


# --------------------------------------------------------------------------
# degenerate-series action
# --------------------------------------------------------------------------

def test_pi_s_is_multiplicative():
    """pi_s(g1 g2) f = pi_s(g1) pi_s(g2) f at sample points."""
    d = algebra.make_descriptor("sym-real:1")
    s = 0.8
    g1 = conformal.translation(algebra.Element(d, np.array([0.3])))
    g2 = conformal.ConformalMap(d, word=(("invert",),))

    def f(el):
        return float(np.exp(-el.coords[0] ** 2))

    lhs = conformal.pi_s(conformal.compose(g1, g2), s, f)
    rhs = conformal.pi_s(g1, s, conformal.pi_s(g2, s, f))
    for x in (0.4, 1.7, -2.2):
        el = algebra.Element(d, np.array([x]))
        assert lhs(el) == pytest.approx(rhs(el), rel=1e-10)
