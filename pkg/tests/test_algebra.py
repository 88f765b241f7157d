"""Descriptor arithmetic, Jordan products, frames and the cone power
function."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berezin import algebra
from berezin.errors import (OutsideCone, SingularElement, UnsupportedFamily)

CONCRETE = ["sym-real:1", "sym-real:2", "sym-real:3",
            "full-real:2", "full-real:3", "spin:2", "spin:3", "spin:5"]


def _rng():
    return np.random.default_rng(42)


# --------------------------------------------------------------------------
# descriptors
# --------------------------------------------------------------------------

def test_spin2_descriptor_numbers():
    d = algebra.make_descriptor("spin:2")
    assert float(d.delta) == 1.0
    assert [float(r) for r in d.rho] == [0.5]
    assert sorted(float(b) for b in d.beta) == [0.0, 0.0]
    assert (d.rank, d.rank0, d.dim, d.dim0, d.dim1) == (2, 1, 2, 1, 1)


def test_sym_real_1_descriptor_numbers():
    d = algebra.make_descriptor("sym-real:1")
    assert sorted(float(b) for b in d.beta) == [-0.5, 0.0]
    assert [float(r) for r in d.rho] == [0.0]
    assert float(d.delta) == 0.5


def test_full_real_descriptor_numbers():
    d = algebra.make_descriptor("full-real:2")
    assert [float(r) for r in d.rho] == [0.0, 0.5]
    assert float(d.delta) == 1.0
    assert (d.rank, d.rank0, d.dim, d.dim0, d.dim1) == (2, 2, 4, 3, 1)
    d3 = algebra.make_descriptor("full-real:3")
    assert [float(r) for r in d3.rho] == [0.0, 0.5, 1.0]
    assert float(d3.delta) == 1.5


@pytest.mark.parametrize("spec", CONCRETE)
def test_counting_identities(spec):
    d = algebra.make_descriptor(spec)
    if d.rank > 1:
        assert d.dim == d.rank + float(d.d) / 2 * d.rank * (d.rank - 1)
    if d.rank0 > 1:
        assert d.dim0 == d.rank0 + float(d.d0) / 2 * d.rank0 * (d.rank0 - 1)
    assert d.dim0 + d.dim1 == d.dim
    if d.type_class in ("euclidean-split", "noneuclidean-split"):
        assert d.rank == d.rank0
    else:
        assert d.rank == 2 * d.rank0
    assert len(d.beta) == 2 * d.rank0
    assert len(d.rho) == d.rank0


def test_descriptor_only_catalog():
    fams = algebra.known_families()
    assert "herm-complex" in fams and "exceptional" in fams
    d = algebra.make_descriptor("herm-complex:3")
    assert not d.is_concrete
    with pytest.raises(UnsupportedFamily):
        d.require_concrete("element arithmetic")
    with pytest.raises(UnsupportedFamily):
        algebra.make_descriptor("no-such-family:2")


def test_complexified_rows_consistent():
    for spec in ("sym-complex:3", "full-complex:2", "spin-complex:4",
                 "exceptional-complex"):
        d = algebra.make_descriptor(spec)
        assert d.dim == 2 * d.dim0
        assert d.rank == 2 * d.rank0


# --------------------------------------------------------------------------
# element arithmetic
# --------------------------------------------------------------------------

@pytest.mark.parametrize("spec", CONCRETE)
def test_identity_and_trace(spec):
    d = algebra.make_descriptor(spec)
    e = algebra.identity(d)
    rng = _rng()
    x = algebra.random_element(d, rng)
    assert algebra.product(e, x).allclose(x)
    assert algebra.trace(e) == pytest.approx(d.rank)
    assert algebra.det(e) == pytest.approx(1.0)


@pytest.mark.parametrize("spec", CONCRETE)
def test_jordan_identity(spec):
    """x^2 (x y) = x (x^2 y): the defining axiom."""
    d = algebra.make_descriptor(spec)
    rng = _rng()
    for _ in range(25):
        x = algebra.random_element(d, rng)
        y = algebra.random_element(d, rng)
        x2 = algebra.product(x, x)
        lhs = algebra.product(x2, algebra.product(x, y))
        rhs = algebra.product(x, algebra.product(x2, y))
        assert lhs.allclose(rhs, atol=1e-9)


def test_spin_product_and_inverse():
    d = algebra.make_descriptor("spin:2")
    x = algebra.Element(d, np.array([3.0, 4.0]))
    assert algebra.det(x) == pytest.approx(25.0)
    xi = algebra.inverse(x)
    assert np.allclose(xi.coords, [3.0 / 25.0, -4.0 / 25.0])
    assert algebra.product(x, xi).allclose(algebra.identity(d))
    assert algebra.trace(x) == pytest.approx(6.0)


@pytest.mark.parametrize("spec", CONCRETE)
def test_inverse_roundtrip(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng()
    for _ in range(20):
        x = algebra.random_tube_point(d, rng)
        assert algebra.product(x, algebra.inverse(x)).allclose(
            algebra.identity(d), atol=1e-8)


def test_singular_inverse_raises():
    d = algebra.make_descriptor("full-real:2")
    x = algebra.from_matrix(d, np.array([[1.0, 0.0], [0.0, 0.0]]))
    with pytest.raises(SingularElement):
        algebra.inverse(x)


@pytest.mark.parametrize("spec", ["sym-real:2", "full-real:3"])
def test_det_via_quadratic_representation(spec):
    """det(P(x)) = det(x)^{2n/r}: the quadratic representation route."""
    d = algebra.make_descriptor(spec)
    rng = _rng()
    for _ in range(10):
        x = algebra.random_tube_point(d, rng)
        lhs = np.linalg.det(algebra.quad_rep(x))
        rhs = algebra.det(x) ** (2.0 * d.dim / d.rank)
        assert lhs == pytest.approx(rhs, rel=1e-8)


def test_matrix_roundtrip_and_symmetry_check():
    d = algebra.make_descriptor("sym-real:3")
    rng = _rng()
    x = algebra.random_element(d, rng)
    assert algebra.from_matrix(d, algebra.to_matrix(x)).allclose(x)
    with pytest.raises(ValueError):
        algebra.from_matrix(d, rng.standard_normal((3, 3)))


# --------------------------------------------------------------------------
# involution, Peirce split, frames
# --------------------------------------------------------------------------

@pytest.mark.parametrize("spec", CONCRETE)
def test_alpha_is_involutive_automorphism(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng()
    for _ in range(10):
        x = algebra.random_element(d, rng)
        y = algebra.random_element(d, rng)
        assert algebra.involution_alpha(algebra.involution_alpha(x)).allclose(x)
        lhs = algebra.involution_alpha(algebra.product(x, y))
        rhs = algebra.product(algebra.involution_alpha(x),
                              algebra.involution_alpha(y))
        assert lhs.allclose(rhs, atol=1e-10)
        assert algebra.det(algebra.involution_alpha(x)) == pytest.approx(
            algebra.det(x), abs=1e-9 * (1 + abs(algebra.det(x))))


@pytest.mark.parametrize("spec", CONCRETE)
def test_peirce_split(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng()
    x = algebra.random_element(d, rng)
    x0, x1 = algebra.peirce_split(x)
    assert (x0 + x1).allclose(x)
    assert algebra.involution_alpha(x0).allclose(x0)
    assert algebra.involution_alpha(x1).allclose(-x1)


@pytest.mark.parametrize("spec", ["sym-real:2", "sym-real:3", "full-real:2",
                                  "spin:3"])
def test_frame_reconstruction(spec):
    d = algebra.make_descriptor(spec)
    rng = _rng()
    for _ in range(10):
        x = algebra.random_tube_point(d, rng)
        x0, _ = algebra.peirce_split(x)
        frame = algebra.jordan_frame(x0)
        assert len(frame.idempotents) == d.rank0
        assert frame.reconstruct().allclose(x0, atol=1e-9)
        for c in frame.idempotents:
            assert algebra.product(c, c).allclose(c, atol=1e-9)


def test_frame_orthogonality():
    d = algebra.make_descriptor("sym-real:3")
    x = algebra.random_tube_point(d, _rng())
    frame = algebra.jordan_frame(x)
    for i, ci in enumerate(frame.idempotents):
        for j, cj in enumerate(frame.idempotents):
            if i != j:
                assert algebra.product(ci, cj).allclose(
                    algebra.zero(d), atol=1e-9)


# --------------------------------------------------------------------------
# cone and power function
# --------------------------------------------------------------------------

def test_power_function_diagonal():
    d = algebra.make_descriptor("sym-real:2")
    a, b = 2.0, 5.0
    x = algebra.from_matrix(d, np.diag([a, b]))
    lam = np.array([1.3 + 0.2j, 0.4 - 0.1j])
    val = algebra.power_function(x, lam)
    expected = a ** (lam[0] - lam[1]) * (a * b) ** lam[1]
    assert val == pytest.approx(expected, rel=1e-12)


def test_power_function_outside_cone():
    d = algebra.make_descriptor("sym-real:2")
    x = algebra.from_matrix(d, np.diag([-1.0, 2.0]))
    with pytest.raises(OutsideCone):
        algebra.power_function(x, [1.0, 0.5])


def test_in_tube():
    d = algebra.make_descriptor("spin:3")
    assert algebra.in_tube(algebra.Element(d, np.array([1.0, 5.0, -2.0])))
    assert not algebra.in_tube(algebra.Element(d, np.array([-1.0, 0.0, 0.0])))


@given(st.integers(min_value=1, max_value=4),
       st.floats(min_value=-3, max_value=3),
       st.floats(min_value=0.1, max_value=3))
@settings(max_examples=50, deadline=None)
def test_scalar_family_power_is_plain_power(_unused, mu, pos):
    d = algebra.make_descriptor("sym-real:1")
    x = algebra.Element(d, np.array([pos]))
    assert algebra.power_function(x, [mu]) == pytest.approx(pos ** mu, rel=1e-10)


def test_bounded_point_radius():
    rng = _rng()
    for spec in CONCRETE:
        d = algebra.make_descriptor(spec)
        u = algebra.random_bounded_point(d, rng, radius=0.7)
        assert algebra.spectral_norm(u) < 0.7
