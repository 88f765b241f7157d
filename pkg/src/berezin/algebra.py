"""Simple real Jordan algebras.

Concrete element arithmetic is provided for three families:

* ``sym-real:m``  -- symmetric m x m real matrices, product (xy+yx)/2,
* ``full-real:m`` -- all m x m real matrices, same product,
* ``spin:n``      -- R x R^(n-1) with z0 = x0*y0 - (x1|y1), z1 = x0*y1 + y0*x1.

Every other classification row is exposed as a descriptor-only record:
its spectral constants (rank, dimensions, Peirce multiplicities, delta,
rho, beta) are available but element construction raises
``UnsupportedFamily``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    DescriptorMismatch,
    OutsideCone,
    SingularElement,
    UnsupportedFamily,
)

#: |det| below ``SINGULAR_EPS * scale**rank`` counts as singular.
SINGULAR_EPS = 1e-300

_CONCRETE = ("sym-real", "full-real", "spin")

_SPLIT = ("euclidean-split", "noneuclidean-split")


@dataclass(frozen=True)
class AlgebraDescriptor:
    """Classification data of one simple real Jordan algebra instance."""

    family: str
    param: int
    rank: int          # r
    dim: int           # n
    rank0: int         # r0
    dim0: int          # n0
    dim1: int          # n1
    d: Fraction
    d0: Fraction
    root_system: str   # "A", "C" or "D"
    type_class: str    # euclidean-split / noneuclidean-split / nonsplit / complex
    groups: tuple      # ((label, name), ...) for Conf(V), U, G, K

    def __post_init__(self):
        if self.rank > 1:
            expected = self.rank + Fraction(self.d, 2) * self.rank * (self.rank - 1)
            if expected != self.dim:
                raise ValueError(
                    f"{self.name}: n = r + (d/2) r (r-1) fails "
                    f"({self.dim} != {expected})"
                )
        if self.d < 0:
            raise ValueError(f"{self.name}: negative Peirce multiplicity d")
        expected0 = self.rank0 + Fraction(self.d0, 2) * self.rank0 * (self.rank0 - 1)
        if expected0 != self.dim0:
            raise ValueError(f"{self.name}: n0 = r0 + (d0/2) r0 (r0-1) fails")
        if self.type_class in _SPLIT and self.rank != self.rank0:
            raise ValueError(f"{self.name}: split requires r = r0")
        if self.type_class not in _SPLIT and self.rank != 2 * self.rank0:
            raise ValueError(f"{self.name}: non-split requires r = 2 r0")
        if self.dim0 + self.dim1 != self.dim:
            raise ValueError(f"{self.name}: n0 + n1 != n")

    @property
    def name(self) -> str:
        return f"{self.family}:{self.param}" if self.param else self.family

    @property
    def is_concrete(self) -> bool:
        return self.family in _CONCRETE

    @property
    def delta(self) -> Fraction:
        return Fraction(self.dim, 2 * self.rank0)

    @property
    def rho(self) -> tuple:
        """Half-sum-of-roots vector, length r0."""
        r0, d0, n1 = self.rank0, self.d0, self.dim1
        return tuple(
            Fraction(d0, 4) * (2 * j - r0 - 1) + Fraction(n1, 2 * r0)
            for j in range(1, r0 + 1)
        )

    @property
    def beta(self) -> tuple:
        """Multiset of 2*r0 Bernstein roots, ordering fixed per type."""
        r0 = self.rank0
        if self.type_class in _SPLIT:
            out = []
            for j in range(1, r0 + 1):
                out.append(Fraction(self.d, 4) * (j - 1))
                out.append(Fraction(-1, 2) + Fraction(self.d, 4) * (j - 1))
            return tuple(out)
        if self.type_class == "nonsplit":
            return tuple(Fraction(self.d, 2) * (j - 1) for j in range(1, 2 * r0 + 1))
        # complex: each factor doubled
        out = []
        for j in range(1, r0 + 1):
            out.extend([Fraction(self.d0, 2) * (j - 1)] * 2)
        return tuple(out)

    def require_concrete(self, operation: str):
        if not self.is_concrete:
            raise UnsupportedFamily(
                f"{operation} needs element arithmetic; {self.name} is descriptor-only"
            )


def _sym_groups(m):
    return (("Conf", f"Sp({m},R)"), ("U", f"U({m})"),
            ("G", f"SL({m},R) x R+"), ("K", f"SO({m})"))


def _full_groups(m):
    return (("Conf", f"SL({2 * m},R)"), ("U", f"SO({2 * m})"),
            ("G", f"SO({m},{m})"), ("K", f"SO({m}) x SO({m})"))


def _spin_groups(n):
    return (("Conf", f"SO(1,{n + 1})"), ("U", f"SO({n + 1})"),
            ("G", f"SO_0(1,{n})"), ("K", f"SO({n})"))


def _descriptor_only_rows():
    """Classification-table rows without element arithmetic.

    Each entry: name -> callable(param) returning the constructor kwargs.
    Parameters follow the tables; integers are derived from the row's
    Euclidean part V0 and the counting identities.
    """

    def herm_complex(m):
        return dict(rank=m, dim=m * m, rank0=m, dim0=m * m, dim1=0,
                    d=Fraction(2), d0=Fraction(2),
                    root_system="A", type_class="euclidean-split",
                    groups=(("Conf", f"SU({m},{m})"), ("U", f"S(U({m}) x U({m}))"),
                            ("G", f"SL({m},C) x R+"), ("K", f"SU({m})")))

    def herm_quat(m):
        n = m * (2 * m - 1)
        return dict(rank=m, dim=n, rank0=m, dim0=n, dim1=0,
                    d=Fraction(4), d0=Fraction(4),
                    root_system="A", type_class="euclidean-split",
                    groups=(("Conf", f"SO*({4 * m})"), ("U", f"U({2 * m})"),
                            ("G", f"SL({m},H) x R+"), ("K", f"Sp({m})")))

    def lorentz(n):
        if n < 3:
            raise ValueError("lorentz requires n >= 3")
        return dict(rank=2, dim=n, rank0=2, dim0=n, dim1=0,
                    d=Fraction(n - 2), d0=Fraction(n - 2),
                    root_system="A", type_class="euclidean-split",
                    groups=(("Conf", f"SO_0(2,{n})"), ("U", f"SO(2) x SO({n})"),
                            ("G", f"SO_0(1,{n - 1}) x R+"), ("K", f"SO({n - 1})")))

    def exceptional(_):
        return dict(rank=3, dim=27, rank0=3, dim0=27, dim1=0,
                    d=Fraction(8), d0=Fraction(8),
                    root_system="A", type_class="euclidean-split",
                    groups=(("Conf", "E7(-25)"), ("U", "E6 x SO(2)"),
                            ("G", "E6(-26) x R+"), ("K", "F4")))

    def skew_real(m):
        # V = Skew_{2m}(R), Pfaffian determinant; V0 of rank m with d0 = 2.
        if m < 2:
            raise ValueError("skew-real requires m >= 2")
        n = m * (2 * m - 1)
        return dict(rank=m, dim=n, rank0=m, dim0=m * m, dim1=n - m * m,
                    d=Fraction(4), d0=Fraction(2),
                    root_system="D", type_class="noneuclidean-split",
                    groups=(("Conf", f"SO({2 * m},{2 * m})"),
                            ("U", f"SO({2 * m}) x SO({2 * m})"),
                            ("G", f"SO({2 * m},C)"), ("K", f"SO({2 * m})")))

    def pq_real(p):
        # R^p x R^p with split signature quadratic form (p = q case).
        if p < 2:
            raise ValueError("pq-real requires p >= 2")
        n = 2 * p
        return dict(rank=2, dim=n, rank0=2, dim0=2, dim1=n - 2,
                    d=Fraction(n - 2), d0=Fraction(0),
                    root_system="D", type_class="noneuclidean-split",
                    groups=(("Conf", f"SO_0({p + 1},{p + 1})"),
                            ("U", f"SO({p + 1}) x SO({p + 1})"),
                            ("G", f"SO_0(1,{p}) x SO_0(1,{p})"),
                            ("K", f"SO({p}) x SO({p})")))

    def exceptional_split(_):
        return dict(rank=3, dim=27, rank0=3, dim0=15, dim1=12,
                    d=Fraction(8), d0=Fraction(4),
                    root_system="D", type_class="noneuclidean-split",
                    groups=(("Conf", "E7(7)"), ("U", "SU(8)"),
                            ("G", "SU*(8)"), ("K", "Sp(4)")))

    def sym_quat(l):
        # Sym_{2l}(R) cap M_l(H): real form of Sym_{2l}(C), d = 1.
        n = l * (2 * l + 1)
        return dict(rank=2 * l, dim=n, rank0=l, dim0=l * (2 * l - 1),
                    dim1=2 * l, d=Fraction(1), d0=Fraction(4),
                    root_system="C", type_class="nonsplit",
                    groups=(("Conf", f"Sp({l},{l})"), ("U", f"Sp({l}) x Sp({l})"),
                            ("G", f"Sp({l},C)"), ("K", f"Sp({l})")))

    def full_quat(l):
        n = 4 * l * l
        return dict(rank=2 * l, dim=n, rank0=l, dim0=l * (2 * l - 1),
                    dim1=n - l * (2 * l - 1), d=Fraction(2), d0=Fraction(4),
                    root_system="C", type_class="nonsplit",
                    groups=(("Conf", f"SL({2 * l},H)"), ("U", f"SO_{2 * l}(H)"),
                            ("G", f"Sp({l},{l})"), ("K", f"Sp({l}) x Sp({l})")))

    def _complex_row(r0, n0, d0, groups):
        n = 2 * n0
        r = 2 * r0
        d = Fraction(2 * (n - r), r * (r - 1)) if r > 1 else Fraction(0)
        return dict(rank=r, dim=n, rank0=r0, dim0=n0, dim1=n0,
                    d=d, d0=Fraction(d0), root_system="C",
                    type_class="complex", groups=groups)

    def sym_complex(m):
        return _complex_row(m, m * (m + 1) // 2, 1,
                            (("Conf", f"Sp({m},C)"), ("U", f"Sp({m})"),
                             ("G", f"Sp({m},R)"), ("K", f"U({m})")))

    def full_complex(m):
        return _complex_row(m, m * m, 2,
                            (("Conf", f"SL({2 * m},C)"), ("U", f"SU({2 * m})"),
                             ("G", f"SU({m},{m})"), ("K", f"S(U({m}) x U({m}))")))

    def skew_complex(m):
        if m < 2:
            raise ValueError("skew-complex requires m >= 2")
        return _complex_row(m, m * (2 * m - 1), 4,
                            (("Conf", f"SO({4 * m},C)"), ("U", f"SO({4 * m})"),
                             ("G", f"SO*({4 * m})"), ("K", f"U({2 * m})")))

    def spin_complex(n):
        if n < 3:
            raise ValueError("spin-complex requires n >= 3")
        return _complex_row(2, n, n - 2,
                            (("Conf", f"SO({n + 2},C)"), ("U", f"SO({n + 2})"),
                             ("G", f"SO_0(2,{n})"), ("K", f"SO(2) x SO({n})")))

    def exceptional_complex(_):
        return _complex_row(3, 27, 8,
                            (("Conf", "E7(C)"), ("U", "E7"),
                             ("G", "E7(-25)"), ("K", "E6 x SO(2)")))

    return {
        "herm-complex": herm_complex,
        "herm-quat": herm_quat,
        "lorentz": lorentz,
        "exceptional": exceptional,
        "skew-real": skew_real,
        "pq-real": pq_real,
        "exceptional-split": exceptional_split,
        "sym-quat": sym_quat,
        "full-quat": full_quat,
        "sym-complex": sym_complex,
        "full-complex": full_complex,
        "skew-complex": skew_complex,
        "spin-complex": spin_complex,
        "exceptional-complex": exceptional_complex,
    }


_DESCRIPTOR_ONLY = _descriptor_only_rows()

#: families taking no integer parameter
_PARAMETERLESS = {"exceptional", "exceptional-split", "exceptional-complex"}


def known_families():
    return _CONCRETE + tuple(sorted(_DESCRIPTOR_ONLY))


def make_descriptor(spec) -> AlgebraDescriptor:
    """Build a descriptor from a spec string like ``"spin:4"``.

    Concrete families: sym-real:m, full-real:m (m >= 1), spin:n (n >= 2).
    Descriptor-only families reject element construction but expose all
    spectral constants.
    """
    if isinstance(spec, AlgebraDescriptor):
        return spec
    if isinstance(spec, (tuple, list)):
        family, param = spec
    else:
        family, _, tail = str(spec).partition(":")
        param = int(tail) if tail else 0
    family = family.strip().lower()

    if family == "sym-real":
        m = param
        if m < 1:
            raise ValueError("sym-real requires m >= 1")
        n = m * (m + 1) // 2
        return AlgebraDescriptor(
            family, m, rank=m, dim=n, rank0=m, dim0=n, dim1=0,
            d=Fraction(1), d0=Fraction(1), root_system="A",
            type_class="euclidean-split", groups=_sym_groups(m))
    if family == "full-real":
        m = param
        if m < 1:
            raise ValueError("full-real requires m >= 1")
        return AlgebraDescriptor(
            family, m, rank=m, dim=m * m, rank0=m,
            dim0=m * (m + 1) // 2, dim1=m * (m - 1) // 2,
            d=Fraction(2), d0=Fraction(1), root_system="D",
            type_class="noneuclidean-split", groups=_full_groups(m))
    if family == "spin":
        n = param
        if n < 2:
            raise ValueError("spin requires n >= 2")
        return AlgebraDescriptor(
            family, n, rank=2, dim=n, rank0=1, dim0=1, dim1=n - 1,
            d=Fraction(n - 2), d0=Fraction(0), root_system="C",
            type_class="nonsplit", groups=_spin_groups(n))
    if family in _DESCRIPTOR_ONLY:
        if family in _PARAMETERLESS:
            param = 0
        elif param < 1:
            raise ValueError(f"{family} requires a positive parameter")
        kwargs = _DESCRIPTOR_ONLY[family](param)
        return AlgebraDescriptor(family, param, **kwargs)
    raise UnsupportedFamily(f"unknown family {family!r}; known: {known_families()}")


# --------------------------------------------------------------------------
# Elements
# --------------------------------------------------------------------------

class Element:
    """A point of V in fixed coordinates, bound to a descriptor.

    Coordinates: sym-real packs the diagonal then the strict upper
    triangle (row-major); full-real is the row-major matrix; spin is
    (x0, x1_1, ..., x1_{n-1}).
    """

    __slots__ = ("descriptor", "coords")

    def __init__(self, descriptor: AlgebraDescriptor, coords):
        descriptor.require_concrete("element construction")
        coords = np.asarray(coords, dtype=float)
        if coords.shape != (descriptor.dim,):
            raise ValueError(
                f"expected {descriptor.dim} coordinates, got {coords.shape}")
        self.descriptor = descriptor
        self.coords = coords

    def __repr__(self):
        return f"Element({self.descriptor.name}, {self.coords.tolist()})"

    def __add__(self, other):
        _same(self, other)
        return Element(self.descriptor, self.coords + other.coords)

    def __sub__(self, other):
        _same(self, other)
        return Element(self.descriptor, self.coords - other.coords)

    def __neg__(self):
        return Element(self.descriptor, -self.coords)

    def __mul__(self, t):
        return Element(self.descriptor, self.coords * float(t))

    __rmul__ = __mul__

    def copy(self):
        return Element(self.descriptor, self.coords.copy())

    def allclose(self, other, atol=1e-10):
        _same(self, other)
        return bool(np.allclose(self.coords, other.coords, atol=atol))


def _same(x: Element, y: Element):
    if x.descriptor is not y.descriptor and x.descriptor != y.descriptor:
        raise DescriptorMismatch(
            f"{x.descriptor.name} vs {y.descriptor.name}")


def identity(desc: AlgebraDescriptor) -> Element:
    desc.require_concrete("identity")
    c = np.zeros(desc.dim)
    if desc.family == "spin":
        c[0] = 1.0
    elif desc.family == "sym-real":
        c[: desc.param] = 1.0
    else:  # full-real
        m = desc.param
        c = np.eye(m).ravel()
    return Element(desc, c)


def zero(desc: AlgebraDescriptor) -> Element:
    desc.require_concrete("zero")
    return Element(desc, np.zeros(desc.dim))


def from_matrix(desc: AlgebraDescriptor, mat) -> Element:
    """Matrix families only; sym-real validates symmetry."""
    mat = np.asarray(mat, dtype=float)
    m = desc.param
    if desc.family == "full-real":
        return Element(desc, mat.reshape(m * m).copy())
    if desc.family == "sym-real":
        if not np.allclose(mat, mat.T, atol=1e-12 * max(1.0, np.abs(mat).max())):
            raise ValueError("sym-real element must be a symmetric matrix")
        iu = np.triu_indices(m, 1)
        return Element(desc, np.concatenate([np.diag(mat), mat[iu]]))
    raise UnsupportedFamily(f"from_matrix on {desc.name}")


def to_matrix(x: Element) -> np.ndarray:
    desc = x.descriptor
    m = desc.param
    if desc.family == "full-real":
        return x.coords.reshape(m, m).copy()
    if desc.family == "sym-real":
        mat = np.diag(x.coords[:m]).astype(float)
        iu = np.triu_indices(m, 1)
        mat[iu] = x.coords[m:]
        mat[(iu[1], iu[0])] = x.coords[m:]
        return mat
    raise UnsupportedFamily(f"to_matrix on {desc.name}")


def product(x: Element, y: Element) -> Element:
    """Jordan product."""
    _same(x, y)
    desc = x.descriptor
    if desc.family == "spin":
        x0, x1 = x.coords[0], x.coords[1:]
        y0, y1 = y.coords[0], y.coords[1:]
        z = np.empty(desc.dim)
        z[0] = x0 * y0 - x1 @ y1
        z[1:] = x0 * y1 + y0 * x1
        return Element(desc, z)
    a, b = to_matrix(x), to_matrix(y)
    return from_matrix(desc, 0.5 * (a @ b + b @ a))


def det(x: Element) -> float:
    """Jordan determinant, homogeneous of degree r."""
    desc = x.descriptor
    if desc.family == "spin":
        return float(x.coords @ x.coords)
    return float(np.linalg.det(to_matrix(x)))


def trace(x: Element) -> float:
    if x.descriptor.family == "spin":
        return 2.0 * x.coords[0]
    return float(np.trace(to_matrix(x)))


def lmap(x: Element) -> np.ndarray:
    """Dense matrix of L(x): y -> x o y in the coordinate basis."""
    desc = x.descriptor
    n = desc.dim
    out = np.empty((n, n))
    basis = np.eye(n)
    for k in range(n):
        out[:, k] = product(x, Element(desc, basis[k])).coords
    return out


def quad_rep(x: Element) -> np.ndarray:
    """Quadratic representation P(x) = 2 L(x)^2 - L(x o x)."""
    lx = lmap(x)
    return 2.0 * lx @ lx - lmap(product(x, x))


def _singular_threshold(x: Element) -> float:
    scale = max(1.0, float(np.abs(x.coords).max(initial=0.0)))
    return SINGULAR_EPS * scale ** x.descriptor.rank


def inverse(x: Element) -> Element:
    desc = x.descriptor
    d = det(x)
    if not np.isfinite(d) or abs(d) <= _singular_threshold(x):
        raise SingularElement(f"det {d:g} below threshold on {desc.name}")
    if desc.family == "spin":
        c = x.coords.copy()
        c[1:] *= -1.0
        return Element(desc, c / d)
    return from_matrix(desc, np.linalg.inv(to_matrix(x)))


def involution_alpha(x: Element) -> Element:
    """Euclidean involution: identity / transpose / flip of x1."""
    desc = x.descriptor
    if desc.family == "sym-real":
        return x.copy()
    if desc.family == "full-real":
        return from_matrix(desc, to_matrix(x).T)
    c = x.coords.copy()
    c[1:] *= -1.0
    return Element(desc, c)


def peirce_split(x: Element):
    """x = x0 + x1 with alpha(x0) = x0, alpha(x1) = -x1."""
    ax = involution_alpha(x)
    x0 = Element(x.descriptor, 0.5 * (x.coords + ax.coords))
    x1 = Element(x.descriptor, 0.5 * (x.coords - ax.coords))
    return x0, x1


def v0_matrix(x: Element) -> np.ndarray:
    """Symmetric-matrix realization of the V0-part of x."""
    desc = x.descriptor
    if desc.family == "spin":
        return np.array([[x.coords[0]]])
    if desc.family == "sym-real":
        return to_matrix(x)
    mat = to_matrix(x)
    return 0.5 * (mat + mat.T)


def _element_of_v0(desc: AlgebraDescriptor, sym: np.ndarray) -> Element:
    if desc.family == "spin":
        c = np.zeros(desc.dim)
        c[0] = sym[0, 0]
        return Element(desc, c)
    if desc.family == "sym-real":
        return from_matrix(desc, sym)
    return Element(desc, sym.reshape(-1))  # symmetric matrix inside M_m


@dataclass
class JordanFrame:
    """Complete orthogonal system of idempotents diagonalizing an x0."""

    idempotents: list
    eigenvalues: np.ndarray
    degenerate: bool = False

    def reconstruct(self) -> Element:
        out = self.eigenvalues[0] * self.idempotents[0]
        for lam, c in zip(self.eigenvalues[1:], self.idempotents[1:]):
            out = out + float(lam) * c
        return out


#: eigenvalue gaps below this flag a degenerate spectrum
DEGENERATE_TOL = 1e-10


def jordan_frame(x0: Element) -> JordanFrame:
    """Spectral frame of an element of V0.

    Eigenvalues ascend; eigenvector signs are fixed by making the first
    nonzero component positive, for determinism.
    """
    desc = x0.descriptor
    if desc.family == "spin":
        return JordanFrame([identity(desc)], np.array([x0.coords[0]]))
    sym = v0_matrix(x0)
    w, v = np.linalg.eigh(sym)
    scale = max(1.0, float(np.abs(w).max()))
    degenerate = bool(np.any(np.diff(w) < DEGENERATE_TOL * scale))
    idem = []
    for k in range(len(w)):
        vec = v[:, k]
        nz = np.nonzero(np.abs(vec) > 1e-14)[0]
        if nz.size and vec[nz[0]] < 0:
            vec = -vec
        idem.append(_element_of_v0(desc, np.outer(vec, vec)))
    return JordanFrame(idem, w.copy(), degenerate)


def in_tube(x: Element) -> bool:
    """True iff the V0-part lies in the open cone Omega_0."""
    w = np.linalg.eigvalsh(v0_matrix(x))
    return bool(np.all(w > 0.0))


def power_function(x0: Element, lam) -> complex:
    """Cone power function via leading principal minors of the V0 matrix.

    ``lam`` is a scalar (rank0 == 1) or a length-r0 complex vector; the
    exponent of the j-th minor is lam_j - lam_{j+1} with lam_{r0+1} = 0.
    """
    desc = x0.descriptor
    r0 = desc.rank0
    lam = np.atleast_1d(np.asarray(lam, dtype=complex))
    if lam.shape != (r0,):
        raise ValueError(f"expected spectral point of length {r0}")
    sym = v0_matrix(x0)
    minors = np.array([np.linalg.det(sym[:j, :j]) for j in range(1, r0 + 1)])
    if np.any(minors <= 0.0):
        raise OutsideCone(f"principal minors not positive: {minors}")
    steps = lam - np.append(lam[1:], 0.0)
    return complex(np.exp(np.sum(steps * np.log(minors))))


# --------------------------------------------------------------------------
# Random sampling helpers (seeded, used by verification suites)
# --------------------------------------------------------------------------

def random_element(desc: AlgebraDescriptor, rng: np.random.Generator,
                   scale: float = 1.0) -> Element:
    return Element(desc, scale * rng.standard_normal(desc.dim))


def random_tube_point(desc: AlgebraDescriptor, rng: np.random.Generator,
                      spread: float = 1.0) -> Element:
    """Uniform-ish point of the tube X = Omega_0 + V1."""
    if desc.family == "spin":
        c = spread * rng.standard_normal(desc.dim)
        c[0] = np.exp(spread * rng.uniform(-1.0, 1.0))
        return Element(desc, c)
    m = desc.param
    a = spread * rng.standard_normal((m, m)) / np.sqrt(m)
    spd = a @ a.T + 0.05 * np.eye(m)
    if desc.family == "sym-real":
        return from_matrix(desc, spd)
    skew = spread * rng.standard_normal((m, m))
    skew = 0.5 * (skew - skew.T)
    return from_matrix(desc, spd + skew)


def spectral_norm(x: Element) -> float:
    """Norm whose open unit ball is the bounded realization D."""
    desc = x.descriptor
    if desc.family == "spin":
        return float(np.sqrt(x.coords @ x.coords))
    return float(np.linalg.norm(to_matrix(x), 2))


def random_bounded_point(desc: AlgebraDescriptor, rng: np.random.Generator,
                         radius: float = 0.8) -> Element:
    """Random point of D with spectral norm < radius (rejection)."""
    for _ in range(1000):
        x = random_element(desc, rng, scale=0.5)
        s = spectral_norm(x)
        if s < 1e-12:
            continue
        if s < radius:
            return x
        shrink = radius * rng.uniform(0.1, 0.9) / s
        return Element(desc, x.coords * shrink)
    raise RuntimeError("rejection sampling failed")
