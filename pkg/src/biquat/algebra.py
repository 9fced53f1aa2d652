"""Real quaternion and biquaternion arithmetic on double coefficients.

A biquaternion is stored canonically as a pair of real quaternions
``qr + qi*I``, where ``I`` is an imaginary unit that commutes with the
quaternion units ``i, j, k``. Coefficient order, used for coefficient
tuples and wire formats throughout the package, is
``(w_r, x_r, y_r, z_r, w_i, x_i, y_i, z_i)``.

The equivalent presentation as four complex components is a relabeling
of the same eight reals (see ``convert_view``), never a second copy.

All types are immutable values and all operations are pure functions,
so they are safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Absolute tolerances: one knob per concern, overridable per call.
DEFAULT_TOL = 1e-9   # generic approximate comparisons
UNIT_TOL = 1e-9      # unit-norm validation of PureUnit
PURE_TOL = 1e-12     # zero-scalar-part validation in dot_cross

# View tags accepted by convert_view.
QUATERNION_PARTS = "quaternion-parts"
COMPLEX_COMPONENTS = "complex-components"


def _check_finite(kind: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{kind} coefficients must be finite, got {v!r}")


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Real quaternion ``w + x*i + y*j + z*k``."""

    w: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        object.__setattr__(self, "w", float(self.w))
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "z", float(self.z))
        _check_finite("Quaternion", self.w, self.x, self.y, self.z)

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented

    def norm(self) -> float:
        return math.hypot(self.w, self.x, self.y, self.z)

    def isclose(self, other: Quaternion, tol: float = DEFAULT_TOL) -> bool:
        return (abs(self.w - other.w) <= tol and abs(self.x - other.x) <= tol
                and abs(self.y - other.y) <= tol and abs(self.z - other.z) <= tol)


@dataclass(frozen=True, slots=True)
class PureUnit:
    """Unit pure quaternion: zero scalar part, ``x^2 + y^2 + z^2 = 1``."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "z", float(self.z))
        _check_finite("PureUnit", self.x, self.y, self.z)
        n = math.hypot(self.x, self.y, self.z)
        if abs(n - 1.0) > UNIT_TOL:
            raise ValueError(f"PureUnit requires unit norm, got {n!r}")

    @classmethod
    def from_vector(cls, x: float, y: float, z: float) -> PureUnit:
        """Normalize an arbitrary nonzero 3-vector into a PureUnit."""
        n = math.hypot(x, y, z)
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(x / n, y / n, z / n)

    def dot(self, other: PureUnit) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def __neg__(self) -> PureUnit:
        return PureUnit(-self.x, -self.y, -self.z)

    def isclose(self, other: PureUnit, tol: float = DEFAULT_TOL) -> bool:
        return (abs(self.x - other.x) <= tol and abs(self.y - other.y) <= tol
                and abs(self.z - other.z) <= tol)


@dataclass(frozen=True, slots=True)
class ComplexScalar:
    """Complex number ``re + im*I`` used by the complex-components view."""

    re: float
    im: float

    def __post_init__(self):
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))
        _check_finite("ComplexScalar", self.re, self.im)


@dataclass(frozen=True, slots=True)
class ComplexComponents:
    """Biquaternion presented as four complex components ``w + x*i + y*j + z*k``."""

    w: ComplexScalar
    x: ComplexScalar
    y: ComplexScalar
    z: ComplexScalar


@dataclass(frozen=True, slots=True)
class Biquaternion:
    """Biquaternion ``qr + qi*I`` with real-quaternion parts ``qr`` and ``qi``."""

    qr: Quaternion
    qi: Quaternion

    @classmethod
    def from_coefficients(cls, wr, xr, yr, zr, wi, xi, yi, zi) -> Biquaternion:
        return cls(Quaternion(wr, xr, yr, zr), Quaternion(wi, xi, yi, zi))

    @classmethod
    def from_scalar(cls, value: float) -> Biquaternion:
        return cls(Quaternion(value, 0.0, 0.0, 0.0), Quaternion(0.0, 0.0, 0.0, 0.0))

    def coefficients(self) -> tuple[float, ...]:
        """The eight reals in canonical order (w_r, x_r, y_r, z_r, w_i, x_i, y_i, z_i)."""
        return (self.qr.w, self.qr.x, self.qr.y, self.qr.z,
                self.qi.w, self.qi.x, self.qi.y, self.qi.z)

    def coefficient_norm(self) -> float:
        """Euclidean norm of the eight coefficients.

        This is the definite magnitude used for residuals. The algebraic
        biquaternion norm is complex-valued and can vanish on nonzero
        elements, which makes it useless as a test magnitude.
        """
        return math.hypot(*self.coefficients())

    def __add__(self, other):
        if isinstance(other, Biquaternion):
            return Biquaternion(self.qr + other.qr, self.qi + other.qi)
        if isinstance(other, (int, float)):
            return Biquaternion(
                Quaternion(self.qr.w + other, self.qr.x, self.qr.y, self.qr.z),
                self.qi)
        return NotImplemented

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if isinstance(other, Biquaternion):
            return Biquaternion(self.qr - other.qr, self.qi - other.qi)
        if isinstance(other, (int, float)):
            return self.__add__(-other)
        return NotImplemented

    def __neg__(self) -> Biquaternion:
        return Biquaternion(-self.qr, -self.qi)

    def __mul__(self, other):
        if isinstance(other, Biquaternion):
            return biquat_mul(self, other)
        if isinstance(other, (int, float)):
            return Biquaternion(self.qr * other, self.qi * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented

    def isclose(self, other: Biquaternion, tol: float = DEFAULT_TOL) -> bool:
        return all(abs(a - b) <= tol
                   for a, b in zip(self.coefficients(), other.coefficients()))


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product, from i^2 = j^2 = k^2 = ijk = -1."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def biquat_mul(p: Biquaternion, q: Biquaternion) -> Biquaternion:
    """Biquaternion product.

    Because I commutes with i, j, k and I^2 = -1:
    (p_r + p_i I)(q_r + q_i I) = (p_r q_r - p_i q_i) + (p_r q_i + p_i q_r) I.
    """
    return Biquaternion(
        quat_mul(p.qr, q.qr) - quat_mul(p.qi, q.qi),
        quat_mul(p.qr, q.qi) + quat_mul(p.qi, q.qr),
    )


def convert_view(value, target: str):
    """Relabel a biquaternion between its two presentations.

    ``value`` is either a Biquaternion (quaternion-parts view) or a
    ComplexComponents (complex-components view); ``target`` names the
    requested view. The conversion moves the eight coefficients without
    any arithmetic, so a round trip is bit-exact.
    """
    if target == QUATERNION_PARTS:
        if isinstance(value, Biquaternion):
            return value
        if isinstance(value, ComplexComponents):
            return Biquaternion(
                Quaternion(value.w.re, value.x.re, value.y.re, value.z.re),
                Quaternion(value.w.im, value.x.im, value.y.im, value.z.im),
            )
    elif target == COMPLEX_COMPONENTS:
        if isinstance(value, ComplexComponents):
            return value
        if isinstance(value, Biquaternion):
            qr, qi = value.qr, value.qi
            return ComplexComponents(
                ComplexScalar(qr.w, qi.w), ComplexScalar(qr.x, qi.x),
                ComplexScalar(qr.y, qi.y), ComplexScalar(qr.z, qi.z),
            )
    else:
        raise ValueError(f"unknown view tag {target!r}")
    raise TypeError(f"cannot convert {type(value).__name__} to view {target!r}")


def scalar_vector_split(q: Quaternion) -> tuple[float, Quaternion]:
    """Split into (scalar part, pure vector part); the two re-add to q exactly."""
    return q.w, Quaternion(0.0, q.x, q.y, q.z)


def dot_cross(u: Quaternion, v: Quaternion,
              pure_tol: float = PURE_TOL) -> tuple[float, Quaternion]:
    """Dot and cross product of two pure quaternions.

    Rejects inputs whose scalar part exceeds ``pure_tol``. For pure u, v
    the Hamilton product satisfies u*v = -dot(u, v) + cross(u, v), the
    identity behind all the perpendicularity arguments in this package.
    """
    if abs(u.w) > pure_tol or abs(v.w) > pure_tol:
        raise ValueError(
            f"dot_cross requires pure quaternions, got scalar parts "
            f"{u.w!r} and {v.w!r}")
    dot = u.x * v.x + u.y * v.y + u.z * v.z
    cross = Quaternion(0.0,
                       u.y * v.z - u.z * v.y,
                       u.z * v.x - u.x * v.z,
                       u.x * v.y - u.y * v.x)
    return dot, cross
