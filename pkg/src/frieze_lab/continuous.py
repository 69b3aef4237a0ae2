"""Continuous frieze patterns F(x, y) and their differential identities.

A closed continuous frieze satisfies the Liouville-type identity
F F_xy - F_x F_y = 1 together with the closure conditions F(x,x) = 0,
F_y(x,x) = 1, antiperiodicity F(x+T, y) = -F(x, y), and positivity on the
fundamental strip.  Every such F arises as the bracket of two points on a
unit-determinant lift, F(x,y) = [Gamma(x), Gamma(y)], equivalently as

    F(x,y) = (f(y) - f(x)) / sqrt(f'(x) f'(y))

with a branch-consistent square root.  The conformal metric -4 F^{-2} dz dzbar
in the two frieze variables has constant curvature -1 exactly when the
Liouville identity holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .curves import LiftedCurve, ProjectiveCurve, lift_curve
from .exceptions import DegenerateF, NonPositiveF
from .hill import HillPotential
from .quadrature import mixed_partial

Grid = tuple[np.ndarray, np.ndarray]


@dataclass(frozen=True)
class ContinuousFrieze:
    """Two-variable frieze function with optional analytic partials."""

    F: Callable[[float, float], float]
    Fx: Callable[[float, float], float] | None = None
    Fy: Callable[[float, float], float] | None = None
    Fxy: Callable[[float, float], float] | None = None
    period: float | None = None

    @property
    def has_partials(self) -> bool:
        return self.Fx is not None and self.Fy is not None and self.Fxy is not None


def frieze_from_curve(lift: LiftedCurve, other: LiftedCurve | None = None) -> ContinuousFrieze:
    """F(x,y) = [Gamma(x), Gamma~(y)]; one curve gives the closed frieze."""
    left = lift
    right = other if other is not None else lift

    def F(x, y):
        return left.g1(x) * right.g2(y) - left.g2(x) * right.g1(y)

    def Fx(x, y):
        return left.dg1(x) * right.g2(y) - left.dg2(x) * right.g1(y)

    def Fy(x, y):
        return left.g1(x) * right.dg2(y) - left.g2(x) * right.dg1(y)

    def Fxy(x, y):
        return left.dg1(x) * right.dg2(y) - left.dg2(x) * right.dg1(y)

    period = lift.period if other is None else None
    return ContinuousFrieze(F=F, Fx=Fx, Fy=Fy, Fxy=Fxy, period=period)


def frieze_genform(curve: ProjectiveCurve) -> ContinuousFrieze:
    """F(x,y) = (f(y)-f(x))/sqrt(f'(x)f'(y)), branch-corrected across poles of f.

    The raw positive square root flips sign each time f passes through
    infinity; the curve's pole counter restores the sign of the continuous
    lift.  Evaluators use only f and its derivatives, independently of the
    closed-form lift, so agreement with frieze_from_curve is a real check.
    """
    f = curve.f
    branches = curve.branch_count or (lambda x: 0)

    def sigma(x):
        return -1.0 if branches(x) % 2 else 1.0

    def F(x, y):
        return sigma(x) * sigma(y) * (f(y) - f(x)) / np.sqrt(f.d1(x) * f.d1(y))

    def Fx(x, y):
        root = np.sqrt(f.d1(x) * f.d1(y))
        val = -f.d1(x) / root - 0.5 * (f(y) - f(x)) * f.d2(x) / (f.d1(x) * root)
        return sigma(x) * sigma(y) * val

    def Fy(x, y):
        root = np.sqrt(f.d1(x) * f.d1(y))
        val = f.d1(y) / root - 0.5 * (f(y) - f(x)) * f.d2(y) / (f.d1(y) * root)
        return sigma(x) * sigma(y) * val

    def Fxy(x, y):
        root = np.sqrt(f.d1(x) * f.d1(y))
        val = (
            0.5 * f.d1(x) * f.d2(y) / (f.d1(y) * root)
            - 0.5 * f.d1(y) * f.d2(x) / (f.d1(x) * root)
            + 0.25 * (f(y) - f(x)) * f.d2(x) * f.d2(y) / (f.d1(x) * f.d1(y) * root)
        )
        return sigma(x) * sigma(y) * val

    return ContinuousFrieze(F=F, Fx=Fx, Fy=Fy, Fxy=Fxy, period=curve.period)


# ---------------------------------------------------------------------------
# residuals and diagnostics


def _strip_grid(period: float, n: int, margin: float | None = None) -> Grid:
    # fundamental strip x in [0,T), y = x + u with u away from the zero set;
    # x-nodes are offset half a step so chart poles sitting on round fractions
    # of the period (tan-like f at T/2) are never evaluated head-on
    delta = period / 16.0 if margin is None else margin
    xs = (np.arange(n) + 0.5) * (period / n)
    us = np.linspace(delta, period - delta, n)
    return xs, us


def liouville_residual_field(
    frieze: ContinuousFrieze,
    grid: int = 48,
    domain: tuple[tuple[float, float], tuple[float, float]] | None = None,
    h: float = 1e-3,
) -> tuple[np.ndarray, list[tuple[float, float]]]:
    """Pointwise |F F_xy - F_x F_y - 1| over the evaluation grid.

    Analytic partials are used when the frieze carries them; otherwise
    second-order central differences with step h (with correspondingly
    degraded accuracy).
    """
    if grid < 32:
        raise ValueError("grid must be at least 32x32")
    if domain is None:
        if frieze.period is None:
            raise ValueError("aperiodic frieze needs an explicit domain")
        xs, us = _strip_grid(frieze.period, grid)
        points = [(float(x), float(x + u)) for x in xs for u in us]
    else:
        (x0, x1), (y0, y1) = domain
        xs = np.linspace(x0, x1, grid)
        ys = np.linspace(y0, y1, grid)
        points = [(float(x), float(y)) for x in xs for y in ys]

    F = frieze.F
    vals = []
    if frieze.has_partials:
        for x, y in points:
            vals.append(abs(F(x, y) * frieze.Fxy(x, y) - frieze.Fx(x, y) * frieze.Fy(x, y) - 1.0))
    else:
        for x, y in points:
            fx = (F(x + h, y) - F(x - h, y)) / (2 * h)
            fy = (F(x, y + h) - F(x, y - h)) / (2 * h)
            fxy = mixed_partial(F, x, y, h)
            vals.append(abs(F(x, y) * fxy - fx * fy - 1.0))
    return np.array(vals), points


def liouville_residual(
    frieze: ContinuousFrieze,
    grid: int = 48,
    domain: tuple[tuple[float, float], tuple[float, float]] | None = None,
    h: float = 1e-3,
) -> float:
    """max |F F_xy - F_x F_y - 1| over the evaluation grid."""
    vals, _ = liouville_residual_field(frieze, grid, domain, h)
    return float(vals.max())


def boundary_check(frieze: ContinuousFrieze, T: float, grid: int = 256) -> dict:
    """Residuals of the closure conditions along the diagonal and the period."""
    xs = (np.arange(grid) + 0.5) * (2.0 * T / grid)
    us = np.linspace(T / 8.0, T - T / 8.0, 17)
    diag = max(abs(frieze.F(float(x), float(x))) for x in xs)
    if frieze.has_partials:
        dy = max(abs(frieze.Fy(float(x), float(x)) - 1.0) for x in xs)
        dx = max(abs(frieze.Fx(float(x), float(x)) + 1.0) for x in xs)
    else:
        h = 1e-5
        dy = max(
            abs((frieze.F(float(x), float(x) + h) - frieze.F(float(x), float(x) - h)) / (2 * h) - 1.0)
            for x in xs
        )
        dx = max(
            abs((frieze.F(float(x) + h, float(x)) - frieze.F(float(x) - h, float(x))) / (2 * h) + 1.0)
            for x in xs
        )
    anti = max(
        abs(frieze.F(float(x) + T, float(x) + float(u)) + frieze.F(float(x), float(x) + float(u)))
        for x in xs[: grid // 2]
        for u in us
    )
    return {
        "diagonal_zero": diag,
        "unit_slope": dy,
        "unit_slope_x": dx,
        "antiperiodicity": anti,
    }


def is_closed_frieze(frieze: ContinuousFrieze, T: float, tol: float = 1e-8) -> bool:
    res = boundary_check(frieze, T)
    return all(v <= tol for v in res.values())


def potential_from_frieze(
    frieze: ContinuousFrieze,
    c: float = 0.5,
    h: float = 1e-4,
    tol_y: float = 1e-6,
) -> HillPotential:
    """Recover kappa(x) = F_xx(x, y) / F(x, y) from second differences of F.

    The ratio is independent of y for a genuine frieze; we verify that at
    three separated y per call and fail loudly otherwise.  The returned
    potential is in curvature convention (u'' = kappa u, i.e. k = -2c kappa).
    """
    if frieze.period is None:
        raise ValueError("closed friezes only")
    T = frieze.period
    F = frieze.F

    def kappa(x):
        vals = []
        for frac in (0.3, 0.5, 0.7):
            y = x + frac * T
            base = F(x, y)
            if abs(base) < 1e-12:
                raise DegenerateF(f"F({x}, {y}) ~ 0")
            fxx = (F(x + h, y) - 2.0 * base + F(x - h, y)) / (h * h)
            vals.append(fxx / base)
        if max(vals) - min(vals) > tol_y:
            raise DegenerateF("recovered potential depends on y")
        return vals[1]

    return HillPotential(kappa=kappa, c=c, period=T)


def potential_y_spread(frieze: ContinuousFrieze, xs, h: float = 1e-4) -> float:
    """Max spread of F_xx/F over three y values; diagnostic for y-independence."""
    T = frieze.period
    F = frieze.F
    worst = 0.0
    for x in xs:
        vals = []
        for frac in (0.3, 0.5, 0.7):
            y = x + frac * T
            base = F(x, y)
            fxx = (F(x + h, y) - 2.0 * base + F(x - h, y)) / (h * h)
            vals.append(fxx / base)
        worst = max(worst, max(vals) - min(vals))
    return worst


def curvature_conformal(
    frieze: ContinuousFrieze,
    grid: int = 32,
    domain: tuple[tuple[float, float], tuple[float, float]] | None = None,
    h: float = 1e-3,
) -> tuple[np.ndarray, list[tuple[float, float]]]:
    """Gaussian curvature of the metric -4 F^{-2} dz dzbar on a grid.

    In the two frieze variables the coordinate derivatives d/dz, d/dzbar act
    as d/dx, d/dy (one quarter of the Laplacian after passing to real and
    imaginary parts), so K = -(2/lam) * d2(ln|lam|)/dxdy with lam = -4 F^{-2}.
    The mixed partial is taken by second-order central differences; K is -1
    wherever F solves the Liouville identity.
    """
    if domain is None:
        if frieze.period is None:
            raise ValueError("aperiodic frieze needs an explicit domain")
        xs, us = _strip_grid(frieze.period, grid)
        points = [(float(x), float(x + u)) for x in xs for u in us]
    else:
        (x0, x1), (y0, y1) = domain
        points = [
            (float(x), float(y))
            for x in np.linspace(x0, x1, grid)
            for y in np.linspace(y0, y1, grid)
        ]

    F = frieze.F

    def log_metric(x, y):
        val = F(x, y)
        if val <= 0.0:
            raise NonPositiveF(f"F({x}, {y}) <= 0")
        return np.log(4.0) - 2.0 * np.log(val)

    ks = []
    for x, y in points:
        val = F(x, y)
        if val <= 0.0:
            raise NonPositiveF(f"F({x}, {y}) <= 0")
        lam = -4.0 / (val * val)
        ks.append(-(2.0 / lam) * mixed_partial(log_metric, x, y, h))
    return np.array(ks), points
