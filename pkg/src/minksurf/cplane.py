"""Extended complex plane, chordal metric, and the Moebius group SL(2,C).

The point at infinity is a first-class value (``INF``), never a float
overflow.  Moebius transforms are stored with unit determinant; S and -S
induce the same map on the sphere, and the normal-form classifier works up
to the conjugate-similarity relation S -> +-conj(T) S T^{-1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: chordal tolerance used for equality of sphere points
POINT_EQ_TOL = 1e-10

#: absolute tolerance at the normal-form classifier boundaries
CLASSIFY_TOL = 1e-9


class DegeneratePointError(ValueError):
    """A sphere point violates a non-degeneracy precondition."""


class InternalConsistencyError(RuntimeError):
    """A provably-real or provably-unit quantity came out wrong numerically."""


class ExtendedComplex:
    """A point of the Riemann sphere: a finite complex number or infinity."""

    __slots__ = ("value",)

    def __init__(self, value=None):
        if value is None:
            self.value = None
            return
        if isinstance(value, ExtendedComplex):
            self.value = value.value
            return
        v = complex(value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("finite point must have finite parts; use INF for infinity")
        self.value = v

    @property
    def is_inf(self) -> bool:
        return self.value is None

    def conj(self) -> "ExtendedComplex":
        # conj(inf) = inf
        if self.is_inf:
            return INF
        return ExtendedComplex(self.value.conjugate())

    def __complex__(self) -> complex:
        if self.is_inf:
            raise ValueError("cannot convert the point at infinity to a complex number")
        return self.value

    def __eq__(self, other):
        try:
            other = as_point(other)
        except (TypeError, ValueError):
            return NotImplemented
        return chordal(self, other) <= POINT_EQ_TOL

    # tolerance-based equality is incompatible with hashing; Divisor and
    # friends use chordal-matched lists instead of dicts
    __hash__ = None

    def __repr__(self):
        return "INF" if self.is_inf else f"ExtendedComplex({self.value!r})"


INF = ExtendedComplex()


def as_point(z) -> ExtendedComplex:
    """Coerce a complex-like (or INF) to an ``ExtendedComplex``."""
    if isinstance(z, ExtendedComplex):
        return z
    return ExtendedComplex(z)


def make_point(num: complex, den: complex) -> ExtendedComplex:
    """num/den as a sphere point, with den == 0 or overflow mapping to INF."""
    if den == 0:
        return INF
    q = num / den
    if math.isfinite(q.real) and math.isfinite(q.imag):
        return ExtendedComplex(q)
    return INF


def chordal(a, b) -> float:
    """Chordal distance on the sphere, valued in [0, 1].

    Equals |a-b| / (sqrt(1+|a|^2) sqrt(1+|b|^2)) for finite points and
    1 / sqrt(1+|a|^2) when b is infinite; zero iff the points coincide.
    """
    a = as_point(a)
    b = as_point(b)
    if a.is_inf and b.is_inf:
        return 0.0
    if a.is_inf:
        a, b = b, a
    if b.is_inf:
        return 1.0 / math.hypot(1.0, abs(a.value))
    num = abs(a.value - b.value)
    if num == 0.0:
        return 0.0
    return num / (math.hypot(1.0, abs(a.value)) * math.hypot(1.0, abs(b.value)))


class MobiusTransform:
    """Unit-determinant 2x2 complex matrix acting on the sphere.

    The constructor rescales the entries so that ad - bc = 1; a zero
    determinant is rejected.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d, _normalized=False):
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        if not _normalized:
            det = a * d - b * c
            if abs(det) < 1e-300:
                raise ValueError("matrix is singular; not a Moebius transform")
            s = det ** 0.5
            a, b, c, d = a / s, b / s, c / s, d / s
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls) -> "MobiusTransform":
        return cls(1.0, 0.0, 0.0, 1.0, _normalized=True)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def trace(self) -> complex:
        return self.a + self.d

    def apply(self, z) -> ExtendedComplex:
        """(az+b)/(cz+d), total on the sphere."""
        z = as_point(z)
        if z.is_inf:
            if self.c == 0:
                return INF
            return make_point(self.a, self.c)
        w = z.value
        return make_point(self.a * w + self.b, self.c * w + self.d)

    def __matmul__(self, other: "MobiusTransform") -> "MobiusTransform":
        return MobiusTransform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            _normalized=True,
        )

    def inverse(self) -> "MobiusTransform":
        return MobiusTransform(self.d, -self.b, -self.c, self.a, _normalized=True)

    def conjugate_entries(self) -> "MobiusTransform":
        return MobiusTransform(
            self.a.conjugate(),
            self.b.conjugate(),
            self.c.conjugate(),
            self.d.conjugate(),
            _normalized=True,
        )

    def __neg__(self) -> "MobiusTransform":
        return MobiusTransform(-self.a, -self.b, -self.c, -self.d, _normalized=True)

    def is_plus_minus_identity(self, tol: float = CLASSIFY_TOL) -> bool:
        for sign in (1.0, -1.0):
            if (
                abs(self.a - sign) <= tol
                and abs(self.d - sign) <= tol
                and abs(self.b) <= tol
                and abs(self.c) <= tol
            ):
                return True
        return False

    def entries(self):
        return self.a, self.b, self.c, self.d

    def __repr__(self):
        return f"MobiusTransform({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def mobius_apply(S: MobiusTransform, z) -> ExtendedComplex:
    return S.apply(z)


@dataclass(frozen=True)
class DegeneracyClass:
    """One of the four normal-form classes under conjugate similarity.

    ``parameter`` is u > 0 for the hyperbolic class and alpha in (0, pi/2]
    for the elliptic class; it is None otherwise.  ``expected_ef_count`` is
    the cardinality of the fixed set E_S predicted for the class: infinity,
    2, 0 and 1 for identity, hyperbolic, elliptic and parabolic.
    """

    tag: str
    parameter: float | None
    expected_ef_count: float

    def to_dict(self):
        return {
            "tag": self.tag,
            "parameter": self.parameter,
            "expected_ef_count": "inf" if math.isinf(self.expected_ef_count) else int(self.expected_ef_count),
        }


def classify_conjugate_similarity(S: MobiusTransform, tol: float = CLASSIFY_TOL) -> DegeneracyClass:
    """Classify S in SL(2,C) up to S -> +-conj(T) S T^{-1}.

    Uses the invariant tau = trace(conj(S) S), which is real for every S and
    is preserved by conjugate similarity (conj(S')S' = T conj(S)S T^{-1}).
    tau > 2 is hyperbolic with u = arccosh(tau/2)/2; tau = 2 splits into the
    identity class (conj(S)S = +-I) and the parabolic class; -2 <= tau < 2
    is elliptic with alpha = arccos(tau/2)/2 in (0, pi/2].
    """
    A = S.conjugate_entries() @ S
    tau = A.trace()
    if abs(tau.imag) > tol:
        raise InternalConsistencyError(
            f"trace(conj(S) S) should be real, got imaginary part {tau.imag:.3e}"
        )
    t = tau.real
    if t > 2.0 + tol:
        u = 0.5 * math.acosh(t / 2.0)
        return DegeneracyClass("hyperbolic", u, 2)
    if t >= 2.0 - tol:
        if A.is_plus_minus_identity(tol):
            return DegeneracyClass("identity", None, math.inf)
        return DegeneracyClass("parabolic", None, 1)
    if t < -2.0 - 1e-6:
        raise InternalConsistencyError(
            f"trace(conj(S) S) = {t:.6f} < -2 cannot occur for S in SL(2,C)"
        )
    alpha = 0.5 * math.acos(max(-1.0, t / 2.0))
    return DegeneracyClass("elliptic", alpha, 0)


def q11_pairing(w1, w2, dw1, dw2) -> float:
    """Metric pairing Re[4 conj(dw1) dw2 / (conj(w1) - w2)^2] on the graph chart.

    Requires w2 != conj(w1) (the point must lie in the positive quadric);
    a pairing against the point at infinity vanishes in this chart.
    """
    w1 = as_point(w1)
    w2 = as_point(w2)
    if chordal(w1.conj(), w2) <= POINT_EQ_TOL:
        raise DegeneratePointError("w2 equals conj(w1): point lies outside the positive quadric")
    if w1.is_inf or w2.is_inf:
        return 0.0
    den = (w1.value.conjugate() - w2.value) ** 2
    return (4.0 * complex(dw1).conjugate() * complex(dw2) / den).real
