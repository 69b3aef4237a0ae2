"""The canonical cluster 2-form on the space of closed friezes.

In diagonal coordinates (a_1..a_w) the form is

    omega = sum_{i=1}^{w-1}  da_i ^ da_{i+1} / (a_i a_{i+1}),

in zigzag coordinates the same sum acquires a sign (-1)^{eps_i} that is 0 on
SE steps and 1 on SW steps, and on the fundamental polygon it is evaluated
through brackets against the distinguished vertex V_{n-1}.  All coordinate
changes are realized as exact jet pushforwards through the frieze completion,
so equality of the three evaluations is testable as identity of rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exceptions import GaugeViolation
from .frieze import (
    SE,
    DiagonalCoords,
    ZigzagCoords,
    ZigzagPath,
    _complete_rows_from_zigzag,
    _read_path,
)
from .jets import Jet, seed_jets
from .recurrence import det2


@dataclass(frozen=True)
class TangentVector:
    """Coordinate components (delta a_1 .. delta a_w) at a base chart."""

    base: DiagonalCoords | ZigzagCoords
    components: tuple

    @property
    def width(self) -> int:
        return len(self.components)


def _pair_sum(values, xi, eta, signs=None):
    total = Fraction(0)
    w = len(values)
    for i in range(w - 1):
        term = (xi[i] * eta[i + 1] - xi[i + 1] * eta[i]) / (values[i] * values[i + 1])
        if signs is not None and signs[i]:
            term = -term
        total = total + term
    return total


def omega_diagonal(a: DiagonalCoords, xi: Sequence, eta: Sequence):
    """Cluster form in diagonal coordinates; bilinear and antisymmetric."""
    xi_c = getattr(xi, "components", xi)
    eta_c = getattr(eta, "components", eta)
    return _pair_sum(a.values, xi_c, eta_c)


def omega_zigzag(z: ZigzagCoords, xi: Sequence, eta: Sequence):
    """Cluster form in zigzag coordinates, with SW steps contributing -1 signs."""
    xi_c = getattr(xi, "components", xi)
    eta_c = getattr(eta, "components", eta)
    signs = [m != SE for m in z.path.moves]
    return _pair_sum(z.values, xi_c, eta_c, signs)


# ---------------------------------------------------------------------------
# exact pushforwards


def _as_zigzag(coords) -> ZigzagCoords:
    if isinstance(coords, DiagonalCoords):
        return coords.as_zigzag()
    return coords


def _chart_transport(source, target_path: ZigzagPath):
    """One jet completion: target values and the exact Jacobian."""
    z = _as_zigzag(source)
    seeds = seed_jets(z.values)
    rows, n = _complete_rows_from_zigzag(seeds, z.path)
    out = _read_path(rows, n, target_path)
    base = ZigzagCoords(path=target_path, values=tuple(v.val for v in out))
    return base, [list(v.grad) for v in out]


def chart_jacobian(source, target_path: ZigzagPath) -> list[list[Fraction]]:
    """Exact Jacobian of the coordinate change source -> target zigzag chart."""
    return _chart_transport(source, target_path)[1]


def _apply(jac, xi_c):
    return tuple(
        sum((row[k] * xi_c[k] for k in range(len(xi_c))), Fraction(0)) for row in jac
    )


def pushforward(source, target_path: ZigzagPath, xi) -> TangentVector:
    """Tangent vector at the target chart, xi' = J xi with J the exact Jacobian."""
    xi_c = getattr(xi, "components", xi)
    base, jac = _chart_transport(source, target_path)
    return TangentVector(base=base, components=_apply(jac, xi_c))


def pushforward_many(source, target_path: ZigzagPath, vectors) -> list[TangentVector]:
    """Push several tangents through one shared completion."""
    base, jac = _chart_transport(source, target_path)
    return [
        TangentVector(base=base, components=_apply(jac, getattr(v, "components", v)))
        for v in vectors
    ]


# ---------------------------------------------------------------------------
# rank of the form


def omega_matrix(a: DiagonalCoords) -> list[list[Fraction]]:
    """Antisymmetric w x w Gram matrix of the form in diagonal coordinates."""
    w = a.width
    m = [[Fraction(0)] * w for _ in range(w)]
    for i in range(w - 1):
        v = 1 / (Fraction(a.values[i]) * Fraction(a.values[i + 1]))
        m[i][i + 1] = v
        m[i + 1][i] = -v
    return m


def exact_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals by exact Gaussian elimination (no pivot tolerance)."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c] / m[r][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def omega_rank(a: DiagonalCoords) -> int:
    """Rank of the cluster form: w for even w, w-1 for odd w."""
    return exact_rank(omega_matrix(a))


# ---------------------------------------------------------------------------
# geometric (polygon) evaluation


def _is_zero_vector(v, tol: float) -> bool:
    if all(isinstance(x, (int, Fraction)) for x in v):
        return v[0] == 0 and v[1] == 0
    return abs(v[0]) <= tol and abs(v[1]) <= tol


def omega_geometric(polygon: Sequence, xi: Sequence, eta: Sequence, gauge_tol: float = 1e-9):
    """Cluster form on a polygon with tangents in the xi_{n-1} = 0 gauge.

    Evaluates sum_{i=1}^{w-1} of

        ([V_{n-1},xi_i][V_{n-1},eta_{i+1}] - [V_{n-1},xi_{i+1}][V_{n-1},eta_i])
        / ([V_{n-1},V_i][V_{n-1},V_{i+1}]).

    Every factor appears in a product of two brackets, so the value does not
    depend on the orientation convention of the bracket.
    """
    n = len(polygon)
    w = n - 3
    vlast = polygon[n - 1]
    for t in (xi, eta):
        if not _is_zero_vector(t[n - 1], gauge_tol):
            raise GaugeViolation("tangent must vanish at the distinguished vertex")
    total = None
    for i in range(1, w):
        num = det2(vlast, xi[i]) * det2(vlast, eta[i + 1]) - det2(vlast, xi[i + 1]) * det2(
            vlast, eta[i]
        )
        den = det2(vlast, polygon[i]) * det2(vlast, polygon[i + 1])
        term = num / den
        total = term if total is None else total + term
    if total is None:
        total = Fraction(0) if isinstance(vlast[0], (int, Fraction)) else 0.0
    return total


def polygon_tangent_from_diagonal(a: DiagonalCoords, delta: Sequence):
    """Polygon and polygon tangent induced by a diagonal variation, exactly.

    The frieze completion is run in jet arithmetic seeded on the diagonal, so
    the returned tangent satisfies the bracket constraint identically and is
    automatically in the xi_{n-1} = 0 gauge (the last vertex (1,0) is constant
    in these coordinates).
    """
    w = a.width
    n = w + 3
    seeds = seed_jets(a.values)
    rows, _ = _complete_rows_from_zigzag(seeds, a.as_zigzag().path)

    def ent(i, j):
        r = j - i - 1
        if r == n - 1:
            return Jet(Fraction(0), (Fraction(0),) * w)
        x = rows[r + 1][(i + 1) % n]
        if not isinstance(x, Jet):
            x = Jet(Fraction(x), (Fraction(0),) * w)
        return x

    b = a.base % n
    shift = b - (n - 1)  # completion above is seeded at base, polygon wants base = n-1
    polygon = []
    tangent = []
    for i in range(n):
        vx = ent(shift, shift + i)
        vy = ent(b, b + 1 + i)
        polygon.append((vx.val, vy.val))
        dx = sum((g * d for g, d in zip(vx.grad, delta)), Fraction(0))
        dy = sum((g * d for g, d in zip(vy.grad, delta)), Fraction(0))
        tangent.append((dx, dy))
    return tuple(polygon), tuple(tangent)
