"""Solver for E_f = {z on the sphere : f(z) = conj(z)} and admissibility bounds.

The key reduction: every solution is a fixed point of F = fbar o f, where
fbar has the conjugated coefficients of f, because f(z) = conj(z) implies
fbar(f(z)) = conj(f(conj(z)bar)) ... = z.  F is rational of degree at most
deg(f)^2, so its fixed points are roots of one polynomial; candidates are
then polished on the defining equation and filtered by chordal residual.
F being the identity map is exactly the anti-holomorphic-involution case,
where E_f is a full circle/line or empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cplane import INF, ExtendedComplex, as_point, chordal
from .ratfun import Polynomial, RationalFunction, roots_with_multiplicity

#: default chordal acceptance tolerance for solved points
EF_TOL = 1e-8

#: chordal radius used to merge duplicate candidates
CLUSTER_TOL = 1e-7


@dataclass(frozen=True)
class CurveLocus:
    """Fitted geometry of an infinite E_f (a circle or a line)."""

    kind: str  # "circle" | "line"
    center: complex = 0j  # circle only
    radius: float = 0.0  # circle only
    point: complex = 0j  # line only
    direction: complex = 0j  # line only (unit)

    def to_dict(self):
        if self.kind == "circle":
            return {
                "kind": "circle",
                "center": [self.center.real, self.center.imag],
                "radius": self.radius,
            }
        return {
            "kind": "line",
            "point": [self.point.real, self.point.imag],
            "direction": [self.direction.real, self.direction.imag],
        }


@dataclass
class EfSet:
    """Solution set of f(z) = conj(z); finite points, a curve, or empty."""

    kind: str  # "finite" | "curve" | "empty"
    points: tuple = ()
    curve: CurveLocus | None = None
    accepted_worst: float = 0.0  # largest residual among accepted points
    rejected_best: float | None = None  # smallest residual among rejected candidates
    samples: tuple = ()  # curve case: a few solved sample points

    @property
    def cardinality(self):
        if self.kind == "curve":
            return math.inf
        return len(self.points)

    def contains(self, z, tol: float = 1e-7) -> bool:
        z = as_point(z)
        return any(chordal(z, p) <= tol for p in self.points)

    def to_dict(self):
        out = {
            "kind": self.kind,
            "cardinality": "inf" if self.kind == "curve" else len(self.points),
            "points": [_point_json(p) for p in self.points],
            "accepted_worst_residual": self.accepted_worst,
            "rejected_best_residual": self.rejected_best,
        }
        if self.curve is not None:
            out["curve"] = self.curve.to_dict()
        return out


def _point_json(p: ExtendedComplex):
    return "inf" if p.is_inf else [p.value.real, p.value.imag]


def _residual(f: RationalFunction, z: ExtendedComplex) -> float:
    return chordal(f.eval_ext(z), z.conj())


def _gauss_newton_polish(f: RationalFunction, z0: complex, iters: int = 14) -> complex:
    """Polish a finite candidate on f(z) - conj(z) = 0.

    The map is anti-holomorphic in the conjugated part, so this is a real
    2x2 Newton iteration with Jacobian determinant |f'(z)|^2 - 1; it is only
    skipped near the resonant locus |f'| = 1.
    """
    fp = f.derivative()
    z = complex(z0)
    for _ in range(iters):
        val = complex(f(z)) - z.conjugate()
        if not (math.isfinite(val.real) and math.isfinite(val.imag)):
            return complex(z0)
        d = complex(fp(z))
        det = abs(d) ** 2 - 1.0
        if abs(det) < 1e-12 * (1.0 + abs(d) ** 2):
            break
        # solve [[Re d - 1, -Im d], [Im d, Re d + 1]] (dx, dy) = -(Re v, Im v)
        j11, j12 = d.real - 1.0, -d.imag
        j21, j22 = d.imag, d.real + 1.0
        dx = (-val.real * j22 + val.imag * j12) / det
        dy = (-val.imag * j11 + val.real * j21) / det
        step = complex(dx, dy)
        z = z + step
        if abs(step) <= 1e-16 * (1.0 + abs(z)):
            break
    return z


def _midpoint_refine(f: RationalFunction, z0: complex, iters: int = 60) -> complex:
    """Refine via z <- (z + sigma(z))/2 with sigma(z) = conj(f(z)).

    At a fixed locus of the anti-holomorphic sigma this iteration contracts
    across the locus even where |f'| = 1, which is exactly where the
    Gauss-Newton polish degenerates (reflections are resonant everywhere on
    their fixed circle).
    """
    z = complex(z0)
    for _ in range(iters):
        w = complex(f(z))
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            return complex(z0)
        nxt = 0.5 * (z + w.conjugate())
        if abs(nxt - z) <= 1e-16 * (1.0 + abs(z)):
            return nxt
        z = nxt
    return z


def _polish_candidate(f: RationalFunction, z: ExtendedComplex) -> ExtendedComplex:
    if z.is_inf:
        return z
    w = z.value
    if abs(w) <= 1.0:
        out = _gauss_newton_polish(f, w)
        if _residual(f, ExtendedComplex(out)) > 1e-12:
            alt = _midpoint_refine(f, out)
            if _residual(f, ExtendedComplex(alt)) < _residual(f, ExtendedComplex(out)):
                out = alt
        return ExtendedComplex(out)
    # far from the origin, polish in the w = 1/z chart on 1/f(1/w) = conj(w)
    g = f.reciprocal().compose(RationalFunction(Polynomial([1]), Polynomial([0, 1])))
    wv = _gauss_newton_polish(g, 1.0 / w)
    if _residual(g, ExtendedComplex(wv)) > 1e-12:
        alt = _midpoint_refine(g, wv)
        if _residual(g, ExtendedComplex(alt)) < _residual(g, ExtendedComplex(wv)):
            wv = alt
    if wv == 0:
        return INF
    return ExtendedComplex(1.0 / wv)


def _cluster(points, tol: float = CLUSTER_TOL):
    out = []
    for p in points:
        if not any(chordal(p, q) <= tol for q in out):
            out.append(p)
    return out


def _fixed_point_polynomial(F: RationalFunction) -> Polynomial:
    # roots of P_F(z) - z Q_F(z) are the finite fixed points of F
    return F.num - F.den.shifted_up(1)


def _chart_grids(n: int):
    side = np.linspace(-1.05, 1.05, n)
    g = side[:, None] + 1j * side[None, :]
    return g.ravel()


def _chordal_residual_grid(f: RationalFunction, zs: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        vals = np.asarray(f(zs))
        num = np.abs(vals - np.conjugate(zs))
        den = np.hypot(1.0, np.abs(vals)) * np.hypot(1.0, np.abs(zs))
        res = num / den
    res[~np.isfinite(res)] = np.inf
    return res


def _curve_samples(f: RationalFunction, n: int = 60, keep: int = 48):
    """Solve f(z) = conj(z) on an anti-involution locus.

    Coarse two-chart search followed by the vectorized midpoint iteration
    z <- (z + conj(f(z)))/2, which contracts transversally to the fixed
    circle/line even though |f'| = 1 there (Gauss-Newton is resonant on the
    whole locus, so it is useless here).
    """
    base = _chart_grids(n)
    with np.errstate(divide="ignore", invalid="ignore"):
        inverted = 1.0 / base
    zs = np.concatenate([base, inverted[np.isfinite(inverted)]])
    res = _chordal_residual_grid(f, zs)
    order = np.argsort(res)[: 2 * keep]
    cand = zs[order[res[order] < 0.5]]
    for _ in range(60):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            w = np.asarray(f(cand))
        ok = np.isfinite(w)
        cand = np.where(ok, 0.5 * (cand + np.conjugate(w)), cand)
    res = _chordal_residual_grid(f, cand)
    found = [ExtendedComplex(z) for z, r in zip(cand, res) if r <= 1e-10]
    if f.eval_ext(INF).is_inf:
        found.append(INF)
    return _cluster(found, 1e-6)


def _fit_curve(points) -> CurveLocus | None:
    finite = np.array([p.value for p in points if not p.is_inf], dtype=complex)
    if finite.size < 3:
        return None
    x, y = finite.real, finite.imag
    A = np.column_stack([x * x + y * y, x, y, np.ones_like(x)])
    _, _, vt = np.linalg.svd(A, full_matrices=False)
    beta = vt[-1]
    scale = float(np.max(np.abs(beta)))
    if abs(beta[0]) <= 1e-6 * scale:
        # line: beta1 x + beta2 y + beta3 = 0
        normal = complex(beta[1], beta[2])
        direction = 1j * normal / abs(normal)
        t = -beta[3].real / (abs(normal) ** 2)
        point = complex(normal * t)
        return CurveLocus("line", point=point, direction=direction)
    cx = -beta[1] / (2 * beta[0])
    cy = -beta[2] / (2 * beta[0])
    r2 = (cx * cx + cy * cy) - beta[3] / beta[0]
    radius = math.sqrt(max(float(r2.real), 0.0))
    return CurveLocus("circle", center=complex(float(cx.real), float(cy.real)), radius=radius)


def ef_solve(f: RationalFunction, tol: float = EF_TOL) -> EfSet:
    """Solve E_f = {z : f(z) = conj(z)} for a rational f.

    Finite solution sets are returned point by point, each satisfying the
    defining equation to chordal ``tol``; the anti-involution case reports a
    fitted circle/line with a few solved sample points.  Acceptance margins
    (worst accepted vs best rejected residual) are recorded so near-miss
    ambiguity is visible rather than silent.
    """
    if f.is_constant:
        c = f.constant_value()
        pt = ExtendedComplex(c.conjugate())
        return EfSet("finite", points=(pt,), accepted_worst=_residual(f, pt))

    # the gcd reduction is skipped: spurious common-factor candidates are
    # filtered by the residual test, while a chopped gcd could lose genuine
    # fixed points of F
    F = f.conjugate_coeffs().compose(f, reduce=False)
    if F.is_identity():
        samples = _curve_samples(f)
        if not samples:
            return EfSet("empty")
        return EfSet(
            "curve",
            curve=_fit_curve(samples),
            samples=tuple(samples),
            accepted_worst=max(_residual(f, p) for p in samples),
        )

    G = _fixed_point_polynomial(F)
    candidates: list[ExtendedComplex] = []
    if G.degree >= 1:
        for r, _ in roots_with_multiplicity(G):
            candidates.append(ExtendedComplex(r))
    candidates.append(INF)

    accepted, rejected = [], []
    for cand in candidates:
        z = _polish_candidate(f, cand)
        r = _residual(f, z)
        if r <= tol:
            # near-infinite representatives collapse onto the exact point
            if not z.is_inf and chordal(z, INF) <= 1e-9:
                z = INF
            accepted.append((z, r))
        else:
            rejected.append(r)

    points = _cluster([z for z, _ in accepted])
    if not points:
        return EfSet(
            "empty",
            rejected_best=min(rejected) if rejected else None,
        )
    worst = 0.0
    for p in points:
        worst = max(worst, _residual(f, p))
    return EfSet(
        "finite",
        points=tuple(points),
        accepted_worst=worst,
        rejected_best=min(rejected) if rejected else None,
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    """The three structural bounds a Gauss-map relation f must satisfy.

    Verdicts are reported individually and never merged: (a) the degree cap
    m <= 5, (b) for m >= 2 the window m-1 <= |E_f| <= (m+3)/2, and (c) the
    exceptional-value budget m - |E_f| + 3.  A failing verdict means no
    complete non-flat space-like stationary surface can realize this f, not
    that the computation failed.
    """

    m: int
    ef_count: float
    degree_bound_ok: bool
    ef_range_ok: bool | None
    exceptional_budget: float

    @property
    def admissible(self) -> bool:
        return self.degree_bound_ok and (self.ef_range_ok is not False)

    def to_dict(self):
        return {
            "m": self.m,
            "ef_count": "inf" if math.isinf(self.ef_count) else int(self.ef_count),
            "degree_bound_ok": self.degree_bound_ok,
            "ef_range_ok": self.ef_range_ok,
            "exceptional_budget": (
                "-inf" if math.isinf(self.exceptional_budget) and self.exceptional_budget < 0
                else self.exceptional_budget
            ),
            "admissible": self.admissible,
        }


def admissibility_check(m: int, ef_count) -> AdmissibilityReport:
    """Check the degree cap, the |E_f| window, and report the budget."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    ef = float(ef_count)
    degree_ok = m <= 5
    if m >= 2:
        range_ok = (m - 1 <= ef) and (ef <= (m + 3) / 2.0)
    else:
        range_ok = None
    budget = m - ef + 3
    return AdmissibilityReport(
        m=m,
        ef_count=ef,
        degree_bound_ok=degree_ok,
        ef_range_ok=range_ok,
        exceptional_budget=budget,
    )
