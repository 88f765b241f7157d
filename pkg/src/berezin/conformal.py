"""Conformal transformations, cocycles and the degenerate-series action.

A map is represented either as a generator word (translations, structure
elements, inversions, applied left to right) or, for full-real, as an
SL(2m,R) block matrix acting by x -> (ax+b)(cx+d)^{-1}.  The block form
is a fast path; words are the universal representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import algebra
from .algebra import AlgebraDescriptor, Element
from .errors import OutsideDomain, SingularElement

#: |det(cx+d)| (or |det| inside a word) below this is a domain failure
DOMAIN_EPS = 1e-12


@dataclass(frozen=True)
class StructureLinear:
    """Invertible linear map on coordinates scaling det by a character chi."""

    matrix: np.ndarray   # (n, n), acts on Element.coords
    chi: float

    def inverse(self) -> "StructureLinear":
        return StructureLinear(np.linalg.inv(self.matrix), 1.0 / self.chi)


# word steps: ("translate", Element) | ("structure", StructureLinear) | ("invert",)

class ConformalMap:
    """Conformal transformation of a concrete Jordan algebra."""

    __slots__ = ("descriptor", "word", "block")

    def __init__(self, descriptor: AlgebraDescriptor, word=None, block=None):
        descriptor.require_concrete("conformal maps")
        if block is not None:
            if descriptor.family != "full-real":
                raise ValueError("block-matrix form is full-real only")
            block = np.asarray(block, dtype=float)
            two_m = 2 * descriptor.param
            if block.shape != (two_m, two_m):
                raise ValueError(f"block matrix must be {two_m} x {two_m}")
            dt = np.linalg.det(block)
            if abs(dt - 1.0) > 1e-10 * max(1.0, abs(dt)):
                block = block / dt ** (1.0 / two_m)
        self.descriptor = descriptor
        self.word = tuple(word) if word is not None else None
        self.block = block

    @property
    def is_block(self) -> bool:
        return self.block is not None

    def __repr__(self):
        if self.is_block:
            return f"ConformalMap(block {self.block.shape[0]})"
        kinds = ",".join(step[0] for step in self.word)
        return f"ConformalMap([{kinds}])"


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------

def identity_map(desc: AlgebraDescriptor) -> ConformalMap:
    return ConformalMap(desc, word=())


def translation(v: Element) -> ConformalMap:
    return ConformalMap(v.descriptor, word=(("translate", v.copy()),))


def inversion(desc: AlgebraDescriptor) -> ConformalMap:
    """j : x -> -x^{-1}."""
    return ConformalMap(desc, word=(("invert",),))


def structure_map(desc: AlgebraDescriptor, struct: StructureLinear) -> ConformalMap:
    return ConformalMap(desc, word=(("structure", struct),))


def structure_scale(desc: AlgebraDescriptor, t: float) -> StructureLinear:
    """Dilation x -> t x, chi = t^r."""
    if t == 0:
        raise ValueError("zero dilation")
    return StructureLinear(t * np.eye(desc.dim), float(t) ** desc.rank)


def structure_alpha(desc: AlgebraDescriptor) -> StructureLinear:
    """The Euclidean involution as a structure element (chi = 1)."""
    n = desc.dim
    mat = np.empty((n, n))
    basis = np.eye(n)
    for k in range(n):
        mat[:, k] = algebra.involution_alpha(Element(desc, basis[k])).coords
    return StructureLinear(mat, 1.0)


def structure_congruence(desc: AlgebraDescriptor, a) -> StructureLinear:
    """sym-real: x -> a x a^T, chi = det(a)^2."""
    a = np.asarray(a, dtype=float)
    n = desc.dim
    mat = np.empty((n, n))
    basis = np.eye(n)
    for k in range(n):
        xm = algebra.to_matrix(Element(desc, basis[k]))
        mat[:, k] = algebra.from_matrix(desc, a @ xm @ a.T).coords
    return StructureLinear(mat, float(np.linalg.det(a)) ** 2)


def structure_pair(desc: AlgebraDescriptor, g1, g2) -> StructureLinear:
    """full-real: x -> g1 x g2^{-1}, chi = det(g1)/det(g2)."""
    g1 = np.asarray(g1, dtype=float)
    g2inv = np.linalg.inv(np.asarray(g2, dtype=float))
    n = desc.dim
    mat = np.empty((n, n))
    basis = np.eye(n)
    for k in range(n):
        xm = algebra.to_matrix(Element(desc, basis[k]))
        mat[:, k] = (g1 @ xm @ g2inv).reshape(-1)
    return StructureLinear(mat, float(np.linalg.det(g1) / np.linalg.det(g2)))


def structure_spin(desc: AlgebraDescriptor, scale: float, ortho) -> StructureLinear:
    """spin: x -> scale * O x for orthogonal O on all n coords, chi = scale^2."""
    ortho = np.asarray(ortho, dtype=float)
    return StructureLinear(scale * ortho, float(scale) ** 2)


def from_block(desc: AlgebraDescriptor, mat) -> ConformalMap:
    return ConformalMap(desc, block=mat)


def block_to_word(g: ConformalMap) -> ConformalMap:
    """Equivalent generator word of a block matrix (Bruhat-style).

    For det(c) != 0: g = n_{a c^{-1}} . h . j . n_{c^{-1} d} with
    h(y) = (a c^{-1} d - b) y c^{-1}; affine maps split directly.
    """
    if not g.is_block:
        return g
    desc = g.descriptor
    m = desc.param
    a, b = g.block[:m, :m], g.block[:m, m:]
    c, d = g.block[m:, :m], g.block[m:, m:]
    if abs(np.linalg.det(c)) > DOMAIN_EPS:
        cinv = np.linalg.inv(c)
        word = (
            ("translate", algebra.from_matrix(desc, cinv @ d)),
            ("invert",),
            ("structure", structure_pair(desc, a @ cinv @ d - b, c)),
            ("translate", algebra.from_matrix(desc, a @ cinv)),
        )
        return ConformalMap(desc, word=word)
    if abs(np.linalg.det(d)) <= DOMAIN_EPS:
        raise OutsideDomain("block matrix with both c and d singular")
    dinv = np.linalg.inv(d)
    word = (
        ("structure", structure_pair(desc, a, d)),
        ("translate", algebra.from_matrix(desc, b @ dinv)),
    )
    return ConformalMap(desc, word=word)


# --------------------------------------------------------------------------
# action and cocycle
# --------------------------------------------------------------------------

def _apply_step(step, x: Element, index: int) -> Element:
    kind = step[0]
    if kind == "translate":
        return x + step[1]
    if kind == "structure":
        return Element(x.descriptor, step[1].matrix @ x.coords)
    try:
        return -algebra.inverse(x)
    except SingularElement as exc:
        raise OutsideDomain(f"singular inversion at generator {index}",
                            generator_index=index) from exc


def apply(g: ConformalMap, x: Element) -> Element:
    """g.x; raises OutsideDomain on a singular denominator."""
    if g.is_block:
        m = g.descriptor.param
        a, b = g.block[:m, :m], g.block[:m, m:]
        c, d = g.block[m:, :m], g.block[m:, m:]
        xm = algebra.to_matrix(x)
        den = c @ xm + d
        if abs(np.linalg.det(den)) <= DOMAIN_EPS * max(1.0, np.abs(den).max()) ** m:
            raise OutsideDomain("det(cx+d) ~ 0")
        return algebra.from_matrix(
            g.descriptor, (a @ xm + b) @ np.linalg.inv(den))
    y = x
    for i, step in enumerate(g.word):
        y = _apply_step(step, y, i)
    return y


def cocycle(g: ConformalMap, x: Element) -> float:
    """a(g, x) = chi((Dg)_x), folded along the word by the chain rule.

    Generators contribute 1 (translation), chi(h) (structure) and
    det(x)^{-2} (inversion).
    """
    if g.is_block:
        m = g.descriptor.param
        c, d = g.block[m:, :m], g.block[m:, m:]
        den = np.linalg.det(c @ algebra.to_matrix(x) + d)
        if abs(den) <= DOMAIN_EPS:
            raise OutsideDomain("det(cx+d) ~ 0")
        return float(den) ** -2
    acc = 1.0
    y = x
    for i, step in enumerate(g.word):
        kind = step[0]
        if kind == "structure":
            acc *= step[1].chi
        elif kind == "invert":
            dy = algebra.det(y)
            if abs(dy) <= DOMAIN_EPS:
                raise OutsideDomain(f"singular inversion at generator {i}",
                                    generator_index=i)
            acc *= dy ** -2
        y = _apply_step(step, y, i)
    return acc


def numeric_differential_chi(g: ConformalMap, x: Element,
                             step: float = 1e-6) -> float:
    """chi((Dg)_x) from central finite differences; cross-check of cocycle."""
    desc = g.descriptor
    n = desc.dim
    scale = max(1.0, float(np.abs(x.coords).max()))
    h = step * scale
    jac = np.empty((n, n))
    basis = np.eye(n)
    for k in range(n):
        xp = Element(desc, x.coords + h * basis[k])
        xm = Element(desc, x.coords - h * basis[k])
        jac[:, k] = (apply(g, xp).coords - apply(g, xm).coords) / (2 * h)
    # chi of a structure element from its determinant action on e
    e = algebra.identity(desc)
    img = Element(desc, jac @ e.coords)
    return algebra.det(img)


def compose(g1: ConformalMap, g2: ConformalMap) -> ConformalMap:
    """g1 o g2 (g2 applied first)."""
    if g1.is_block and g2.is_block:
        return ConformalMap(g1.descriptor, block=g1.block @ g2.block)
    w1 = g1.word if not g1.is_block else block_to_word(g1).word
    w2 = g2.word if not g2.is_block else block_to_word(g2).word
    return ConformalMap(g1.descriptor, word=w2 + w1)


def invert_map(g: ConformalMap) -> ConformalMap:
    if g.is_block:
        return ConformalMap(g.descriptor, block=np.linalg.inv(g.block))
    steps = []
    for step in reversed(g.word):
        kind = step[0]
        if kind == "translate":
            steps.append(("translate", -step[1]))
        elif kind == "structure":
            steps.append(("structure", step[1].inverse()))
        else:
            steps.append(("invert",))
    return ConformalMap(g.descriptor, word=tuple(steps))


# --------------------------------------------------------------------------
# identity residuals
# --------------------------------------------------------------------------

def det_cocycle_identity_check(g: ConformalMap, x: Element, y: Element) -> float:
    """Relative residual of det(g.x - g.y)^2 = a(g,x) a(g,y) det(x-y)^2."""
    lhs = algebra.det(apply(g, x) - apply(g, y)) ** 2
    rhs = cocycle(g, x) * cocycle(g, y) * algebra.det(x - y) ** 2
    scale = abs(lhs) + abs(rhs)
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


def g_action_on_det0(g: ConformalMap, x: Element) -> float:
    """Relative residual of det((g.x)_0) = a(g,x) det(x_0), g in G."""
    gx = apply(g, x)
    x0, _ = algebra.peirce_split(x)
    gx0, _ = algebra.peirce_split(gx)
    lhs = algebra.det(gx0)
    rhs = cocycle(g, x) * algebra.det(x0)
    scale = abs(lhs) + abs(rhs)
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


# --------------------------------------------------------------------------
# group membership and sampling
# --------------------------------------------------------------------------

def _minus_alpha(x: Element) -> Element:
    return -algebra.involution_alpha(x)


def _commutes_at_points(g: ConformalMap, conj: Callable[[Element], Element],
                        rng: np.random.Generator, points: int = 20,
                        tol: float = 1e-9) -> bool:
    """Does conj o g o conj == g at random sample points?"""
    desc = g.descriptor
    checked = 0
    attempts = 0
    while checked < points and attempts < 50 * points:
        attempts += 1
        x = algebra.random_element(desc, rng)
        try:
            lhs = conj(apply(g, conj(x)))
            rhs = apply(g, x)
        except OutsideDomain:
            continue
        scale = max(1.0, float(np.abs(rhs.coords).max()))
        if np.abs(lhs.coords - rhs.coords).max() > tol * scale:
            return False
        checked += 1
    if checked < points:
        raise OutsideDomain("could not find enough regular sample points")
    return True


def upsilon(m: int) -> np.ndarray:
    """Anti-diagonal block form whose isometries make up G for full-real."""
    z = np.zeros((m, m))
    i = np.eye(m)
    return np.block([[z, i], [i, z]])


def in_G(g: ConformalMap, seed: int = 7) -> bool:
    """Membership in G = {g : (-alpha) o g o (-alpha) = g}."""
    if g.is_block:
        ups = upsilon(g.descriptor.param)
        res = g.block.T @ ups @ g.block - ups
        return bool(np.abs(res).max() < 1e-9 * max(1.0, np.abs(g.block).max() ** 2))
    rng = np.random.default_rng(seed)
    return _commutes_at_points(g, _minus_alpha, rng)


def in_U(g: ConformalMap, seed: int = 7) -> bool:
    """Membership in U = {g : alpha o j o g o j o alpha = g}."""
    desc = g.descriptor

    def conj(x: Element) -> Element:
        return -algebra.inverse(algebra.involution_alpha(x))

    # alpha o j = j o alpha, both involutions, so conj is its own inverse
    rng = np.random.default_rng(seed)
    if g.is_block:
        g = block_to_word(g)
    return _commutes_at_points(g, conj, rng)


def sample_G(desc: AlgebraDescriptor, seed) -> ConformalMap:
    """Random element of G (connected component), seeded.

    full-real: exp of an Upsilon-skew matrix with entries O(1/2m).
    Other families: short word in G-stabilizing generators (dilations,
    V1 translations, alpha-commuting rotations, inversions).
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if desc.family == "full-real":
        from scipy.linalg import expm

        two_m = 2 * desc.param
        ups = upsilon(desc.param)
        amp = 1.0 / two_m
        while True:
            x = rng.uniform(-amp, amp, size=(two_m, two_m))
            # project onto the Lie algebra: X^T Ups + Ups X = 0
            x = 0.5 * (x - ups @ x.T @ ups)
            mat = expm(x)
            if abs(np.linalg.det(mat)) > 0.5:
                return ConformalMap(desc, block=mat)
    word = []
    n_steps = int(rng.integers(2, 5))
    for _ in range(n_steps):
        kind = rng.integers(0, 3 if desc.dim1 == 0 else 4)
        if kind == 0:
            word.append(("structure", structure_scale(desc, float(rng.uniform(0.6, 1.6)))))
        elif kind == 1:
            word.append(("structure", _alpha_commuting_rotation(desc, rng)))
        elif kind == 2:
            word.append(("invert",))
        else:
            v = algebra.random_element(desc, rng, scale=0.4)
            v0, v1 = algebra.peirce_split(v)
            word.append(("translate", v1))
    return ConformalMap(desc, word=tuple(word))


def _alpha_commuting_rotation(desc: AlgebraDescriptor,
                              rng: np.random.Generator) -> StructureLinear:
    """A structure element commuting with alpha."""
    if desc.family == "spin":
        k = desc.dim - 1
        q, _ = np.linalg.qr(rng.standard_normal((k, k)))
        if np.linalg.det(q) < 0:
            q[:, 0] *= -1.0
        full = np.eye(desc.dim)
        full[1:, 1:] = q
        return structure_spin(desc, 1.0, full)
    m = desc.param
    if desc.family == "sym-real":
        q, _ = np.linalg.qr(rng.standard_normal((m, m)))
        return structure_congruence(desc, q)
    # full-real: x -> q x q^T with q orthogonal commutes with transposition
    q, _ = np.linalg.qr(rng.standard_normal((m, m)))
    return structure_pair(desc, q, q)


def sample_conf(desc: AlgebraDescriptor, seed) -> ConformalMap:
    """Random conformal map (not constrained to G)."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if desc.family == "full-real":
        two_m = 2 * desc.param
        from scipy.linalg import expm

        x = rng.uniform(-1.0 / two_m, 1.0 / two_m, size=(two_m, two_m))
        x -= np.trace(x) / two_m * np.eye(two_m)
        return ConformalMap(desc, block=expm(x))
    word = []
    for _ in range(int(rng.integers(2, 5))):
        kind = rng.integers(0, 3)
        if kind == 0:
            word.append(("translate", algebra.random_element(desc, rng, scale=0.4)))
        elif kind == 1:
            word.append(("structure", structure_scale(desc, float(rng.uniform(0.6, 1.6)))))
        else:
            word.append(("invert",))
    return ConformalMap(desc, word=tuple(word))


def theta(g: ConformalMap) -> ConformalMap:
    """Cartan involution theta(g) = alpha o j o g o j o alpha as a word."""
    desc = g.descriptor
    if g.is_block:
        g = block_to_word(g)
    al = ("structure", structure_alpha(desc))
    jj = ("invert",)
    neg = ("structure", structure_scale(desc, -1.0))
    # j = neg o inverse; alpha o j as word steps: [invert is -inv already]
    wrap = (al, jj)
    unwrap = (jj, al)
    return ConformalMap(desc, word=wrap + g.word + unwrap)


# --------------------------------------------------------------------------
# Cayley transform and pi_s
# --------------------------------------------------------------------------

def cayley(u: Element) -> Element:
    """c(u) = (e + u)(e - u)^{-1}, unambiguous since both factors commute."""
    e = algebra.identity(u.descriptor)
    return algebra.product(e + u, algebra.inverse(e - u))


def inverse_cayley(x: Element) -> Element:
    """c^{-1}(x) = (x - e)(x + e)^{-1}."""
    e = algebra.identity(x.descriptor)
    return algebra.product(x - e, algebra.inverse(x + e))


def pi_s(g: ConformalMap, s: complex, f: Callable[[Element], complex]):
    """Degenerate-series action: x -> |a(g^{-1}, x)|^{s + n/2r} f(g^{-1}.x)."""
    desc = g.descriptor
    ginv = invert_map(g)
    expo = s + desc.dim / (2.0 * desc.rank)

    def acted(x: Element) -> complex:
        factor = abs(cocycle(ginv, x)) ** expo
        return factor * f(apply(ginv, x))

    return acted
