"""Hill equation integration, monodromy, and the non-oscillation test.

The internal form of the equation is u'' = kappa(x) u.  The classical
parameterization 2c y'' + k(x) y = 0 corresponds to kappa = -k / (2c); a
HillPotential stores kappa together with the central constant c and exposes
the k-form through an adapter, so each caller states explicitly which
convention it consumes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import GridTooCoarse
from .quadrature import resolution

DEFAULT_STEPS = 4096


@dataclass(frozen=True)
class HillPotential:
    """Periodic potential in curvature form u'' = kappa u."""

    kappa: Callable[[float], float]
    c: float
    period: float
    dkappa: Callable[[float], float] | None = None

    def hill_k(self, x: float) -> float:
        """Potential of the same equation written as 2c y'' + k y = 0."""
        return -2.0 * self.c * self.kappa(x)

    def hill_dk(self, x: float) -> float:
        if self.dkappa is None:
            raise ValueError("potential has no analytic derivative")
        return -2.0 * self.c * self.dkappa(x)


def potential_from_constant(value: float, c: float = 0.5, period: float = np.pi) -> HillPotential:
    return HillPotential(
        kappa=lambda x: value, c=c, period=period, dkappa=lambda x: 0.0
    )


@dataclass(frozen=True)
class HillSolution:
    xs: np.ndarray
    ys: np.ndarray
    dys: np.ndarray


def _rk4(kappa, T: float, y0: float, dy0: float, steps: int) -> HillSolution:
    # classical fixed-step RK4 on (u, u') with u'' = kappa(x) u
    h = T / steps
    xs = np.empty(steps + 1)
    ys = np.empty(steps + 1)
    dys = np.empty(steps + 1)
    x, u, v = 0.0, float(y0), float(dy0)
    xs[0], ys[0], dys[0] = x, u, v
    for i in range(steps):
        k1u, k1v = v, kappa(x) * u
        k2u = v + 0.5 * h * k1v
        k2v = kappa(x + 0.5 * h) * (u + 0.5 * h * k1u)
        k3u = v + 0.5 * h * k2v
        k3v = kappa(x + 0.5 * h) * (u + 0.5 * h * k2u)
        k4u = v + h * k3v
        k4v = kappa(x + h) * (u + h * k3u)
        u += (h / 6.0) * (k1u + 2 * k2u + 2 * k3u + k4u)
        v += (h / 6.0) * (k1v + 2 * k2v + 2 * k3v + k4v)
        x = (i + 1) * h
        xs[i + 1], ys[i + 1], dys[i + 1] = x, u, v
    return HillSolution(xs=xs, ys=ys, dys=dys)


def hill_solve(
    pot: HillPotential,
    T: float | None = None,
    y0: float = 1.0,
    dy0: float = 0.0,
    steps: int | None = None,
) -> tuple[HillSolution, np.ndarray]:
    """Integrate one period and return the samples plus the monodromy matrix."""
    T = pot.period if T is None else T
    steps = resolution(steps) if steps is None else steps
    if steps < 64:
        raise ValueError("need at least 64 steps per period")
    sol = _rk4(pot.kappa, T, y0, dy0, steps)
    m = monodromy_matrix(pot, T, steps)
    return sol, m


def monodromy_matrix(pot: HillPotential, T: float | None = None, steps: int = DEFAULT_STEPS) -> np.ndarray:
    T = pot.period if T is None else T
    a = _rk4(pot.kappa, T, 1.0, 0.0, steps)
    b = _rk4(pot.kappa, T, 0.0, 1.0, steps)
    return np.array([[a.ys[-1], b.ys[-1]], [a.dys[-1], b.dys[-1]]])


def is_antiperiodic(m: np.ndarray, tol: float = 1e-6) -> bool:
    return bool(np.max(np.abs(m + np.eye(2))) <= tol)


def count_zeros(samples: np.ndarray) -> int:
    """Zeros over a half-open sample window, by sign changes and exact hits.

    A run of exact-zero samples counts as one zero (Hill solutions have simple
    zeros, so a run is one zero seen twice, not two).  Raises GridTooCoarse
    when two zeros fall within two grid cells of each other.
    """
    ys = np.asarray(samples)
    signs = np.sign(ys)
    events = []
    last = 0.0
    in_zero_run = False
    for i, s in enumerate(signs):
        if s == 0:
            if not in_zero_run:
                events.append(i)
                in_zero_run = True
            continue
        if last != 0 and s != last and not in_zero_run:
            events.append(i)
        in_zero_run = False
        last = s
    for a, b in zip(events, events[1:]):
        if b - a <= 2:
            raise GridTooCoarse("two sign changes within two grid cells")
    return len(events)


def nonoscillation_check(solution: HillSolution) -> int:
    """Zero count of one solution over [0, T): non-oscillating means exactly 1."""
    return count_zeros(solution.ys[:-1])


def is_nonoscillating(
    pot: HillPotential,
    T: float | None = None,
    steps: int = DEFAULT_STEPS,
    trials: int = 8,
    seed: int = 0,
) -> bool:
    """Every solution has exactly one zero per period, over random basis mixes."""
    T = pot.period if T is None else T
    a = _rk4(pot.kappa, T, 1.0, 0.0, steps)
    b = _rk4(pot.kappa, T, 0.0, 1.0, steps)
    rng = random.Random(seed)
    for _ in range(trials):
        alpha = rng.uniform(-1.0, 1.0)
        beta = rng.uniform(-1.0, 1.0)
        if abs(alpha) + abs(beta) < 1e-3:
            alpha = 1.0
        ys = alpha * a.ys + beta * b.ys
        if count_zeros(ys[:-1]) != 1:
            return False
    return True
