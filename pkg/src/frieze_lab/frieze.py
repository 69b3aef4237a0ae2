"""Closed frieze patterns over exact rationals, with diagonal and zigzag coordinates.

Conventions
-----------
The display array stores one horizontal period of each row: row -1 is the
top 0-row, row 0 the top 1-row, rows 1..w the nontrivial band, row w+1 the
closing 1-row.  Internally the entry in display row r, column j is
``e(j-1, j+r)``, where ``e(i, j)`` is the bracket of fundamental-solution
vectors i and j of the associated three-term recurrence.  In that picture

* the diamond rule  left*right - top*bottom = 1  is the Pluecker relation
  ``e(i,j) e(i+1,j+1) - e(i,j+1) e(i+1,j) = 1``,
* a South-East diagonal is ``e(i0, i0+1+k)`` for fixed ``i0``,
* the glide symmetry is ``e(i, j) == e(j, i+n)``, whose square is the
  horizontal shift by the period ``n = w + 3``.

All public constructors work over ``fractions.Fraction``; the private
completion helpers are scalar-generic so that jet (dual-number) values can be
pushed through the exact same code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exceptions import NotClosed, ZeroEntryEncountered

SE = "SE"
SW = "SW"


def as_fraction(x) -> Fraction:
    """Coerce ints, strings like '3/5', and Fractions; floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def _is_zero(x) -> bool:
    # jets compare by value part; everything else compares to 0 directly
    return getattr(x, "val", x) == 0


def _complete_rows(quiddity: Sequence, n: int) -> list[list]:
    """Propagate display rows -1..n-2 downward from the first nontrivial row.

    Scalar-generic.  Raises ZeroEntryEncountered when an interior entry turns
    zero before the band closes, NotClosed when the closing rows are wrong.
    """
    rows: list[list] = [[0] * n, [1] * n, list(quiddity)]
    for r in range(2, n):
        prev2, prev = rows[-2], rows[-1]
        nxt = []
        for j in range(n):
            denom = prev2[(j + 1) % n]
            if _is_zero(denom):
                raise ZeroEntryEncountered(
                    f"zero entry in row {r - 2}, column {(j + 1) % n}"
                )
            nxt.append((prev[j] * prev[(j + 1) % n] - 1) / denom)
        rows.append(nxt)
    if any(x != 1 for x in rows[n - 1]):
        raise NotClosed("no second row of ones at depth n-2")
    if any(x != 0 for x in rows[n]):
        raise NotClosed("closing row of ones is not followed by zeros")
    return rows[:n]


@dataclass(frozen=True)
class FriezePattern:
    """One horizontal period of a closed frieze of width ``w``."""

    width: int
    rows: tuple[tuple[Fraction, ...], ...]  # display rows -1 .. width+1

    @property
    def period(self) -> int:
        return self.width + 3

    @property
    def quiddity(self) -> tuple[Fraction, ...]:
        return self.rows[2]

    def entry(self, r: int, j: int) -> Fraction:
        """Display entry in row r (-1..w+1), column j (cyclic)."""
        return self.rows[r + 1][j % self.period]

    def ent(self, i: int, j: int) -> Fraction:
        """Bracket-indexed entry e(i, j), defined for 0 <= j - i <= n."""
        r = j - i - 1
        if r == self.period - 1:
            return Fraction(0)
        if not -1 <= r <= self.width + 1:
            raise IndexError(f"e({i},{j}) outside the fundamental band")
        return self.entry(r, i + 1)

    def diagonal(self, base: int | None = None) -> "DiagonalCoords":
        """South-East diagonal values (a_1..a_w) with left endpoint ``base``.

        The default base n-1 is the diagonal adjacent to the distinguished
        vertex of the fundamental polygon.
        """
        b = (self.period - 1) if base is None else base % self.period
        vals = tuple(self.ent(b, b + 1 + k) for k in range(1, self.width + 1))
        return DiagonalCoords(base=b, values=vals)

    def glide_partner(self, r: int, j: int) -> tuple[int, int]:
        """Index map of the glide symmetry; its square is the shift by n."""
        return self.width + 1 - r, (j + r + 1) % self.period

    def check(self) -> dict:
        """Structural diagnostics; every value must be True for a valid frieze."""
        n = self.period
        diamond_ok = all(
            self.ent(i, i + d) * self.ent(i + 1, i + 1 + d)
            - self.ent(i, i + 1 + d) * self.ent(i + 1, i + d)
            == 1
            for i in range(n)
            for d in range(1, n)
        )
        border_ok = (
            all(x == 0 for x in self.rows[0])
            and all(x == 1 for x in self.rows[1])
            and all(x == 1 for x in self.rows[n - 1])
        )
        nonzero_ok = all(
            x != 0 for r in range(1, self.width + 1) for x in self.rows[r + 1]
        )
        glide_ok = all(
            self.ent(i, i + d) == self.ent(i + d, i + n)
            for i in range(n)
            for d in range(0, n + 1)
        )
        return {
            "diamond_rule": diamond_ok,
            "border_rows": border_ok,
            "nonzero_interior": nonzero_ok,
            "glide_symmetry": glide_ok,
            "period": n,
        }

    def is_valid(self) -> bool:
        report = self.check()
        return all(v for k, v in report.items() if k != "period")


def propagate_from_quiddity(quiddity: Sequence) -> FriezePattern:
    """Build the closed frieze whose first nontrivial row is ``quiddity``."""
    c = tuple(as_fraction(x) for x in quiddity)
    n = len(c)
    if n < 3:
        raise ValueError("period must be at least 3")
    rows = _complete_rows(c, n)
    return FriezePattern(
        width=n - 3, rows=tuple(tuple(Fraction(x) for x in row) for row in rows)
    )


# ---------------------------------------------------------------------------
# diagonal coordinates


@dataclass(frozen=True)
class DiagonalCoords:
    """Values (a_1..a_w) along the SE diagonal with left endpoint ``base``."""

    base: int
    values: tuple

    @property
    def width(self) -> int:
        return len(self.values)

    def as_zigzag(self) -> "ZigzagCoords":
        path = ZigzagPath(
            start=self.base, moves=(SE,) * max(self.width - 1, 0), width=self.width
        )
        return ZigzagCoords(path=path, values=tuple(self.values))


def _quiddity_from_diagonal(values: Sequence, base: int, n: int) -> list:
    """Recover the quiddity from one SE diagonal.  Scalar-generic.

    The diagonal recurrence pins every coefficient except c_base; that one is
    read off the neighbouring diagonal, swept out by the diamond rule.
    """
    d = [0, 1, *values, 1, 0]  # e(base, base+k), k = 0..n
    c: list = [None] * n
    for j in range(1, n):
        c[(base + j) % n] = (d[j + 1] + d[j - 1]) / d[j]
    d2 = [0, 1]  # e(base+1, base+1+k)
    for k in range(2, n):
        if _is_zero(d[k]):
            raise ZeroEntryEncountered("zero diagonal value")
        d2.append((1 + d[k + 1] * d2[k - 1]) / d[k])
    # closing entry of the neighbour diagonal is 1, so c_base = e(base+1, base+n-1)
    c[base % n] = d2[n - 2]
    return c


def diagonal_to_frieze(values: Sequence, base: int | None = None) -> FriezePattern:
    """Closed frieze whose SE diagonal at ``base`` reads (1, a_1..a_w, 1).

    Defaults to base n-1 so that the input diagonal is the one attached to the
    fundamental polygon's distinguished vertex.
    """
    vals = tuple(as_fraction(x) for x in values)
    if any(v == 0 for v in vals):
        raise ZeroEntryEncountered("diagonal values must be nonzero")
    n = len(vals) + 3
    b = (n - 1) if base is None else base % n
    quiddity = _quiddity_from_diagonal(vals, b, n)
    frieze = propagate_from_quiddity(quiddity)
    if frieze.diagonal(b).values != vals:
        raise AssertionError("diagonal reconstruction mismatch")
    return frieze


def read_diagonal(frieze: FriezePattern, base: int | None = None) -> DiagonalCoords:
    return frieze.diagonal(base)


# ---------------------------------------------------------------------------
# zigzag coordinates


@dataclass(frozen=True)
class ZigzagPath:
    """Monotone-down path visiting one entry in each row 1..w.

    ``start`` is the left e-index of the row-1 vertex, i.e. the first vertex
    is e(start, start+2).  A SE move sends e(i, j) to e(i, j+1), a SW move to
    e(i-1, j).  ``width`` is stored explicitly so the empty path of a width-0
    frieze stays distinguishable from a width-1 path.
    """

    start: int
    moves: tuple[str, ...]
    width: int | None = None

    def __post_init__(self):
        w = len(self.moves) + 1 if self.width is None else self.width
        object.__setattr__(self, "width", w)
        if w > 0 and len(self.moves) != w - 1:
            raise ValueError("a width-w path needs w-1 moves")
        if any(m not in (SE, SW) for m in self.moves):
            raise ValueError("moves must be 'SE' or 'SW'")

    def vertices(self) -> list[tuple[int, int]]:
        """(i, j) e-indices of the visited entries, top to bottom."""
        if self.width == 0:
            return []
        pts = [(self.start, self.start + 2)]
        for m in self.moves:
            i, j = pts[-1]
            pts.append((i, j + 1) if m == SE else (i - 1, j))
        return pts


@dataclass(frozen=True)
class ZigzagCoords:
    path: ZigzagPath
    values: tuple

    @property
    def width(self) -> int:
        return self.path.width


def read_zigzag(frieze: FriezePattern, path: ZigzagPath) -> ZigzagCoords:
    """Frieze entries along the path, top to bottom."""
    if path.width != frieze.width:
        raise ValueError("path width does not match frieze width")
    vals = tuple(frieze.ent(i, j) for i, j in path.vertices())
    return ZigzagCoords(path=path, values=vals)


def elementary_mutation(z: ZigzagCoords, position: int) -> ZigzagCoords:
    """Flip the path vertex at ``position`` (0-based) across its diamond.

    The new value is d = (1 + b*c)/a where b and c are the on-path neighbours
    above and below (the bounding 1-rows at the endpoints).  Admissible
    positions are the two endpoints and interior corners; flipping a vertex
    inside a straight run is not a zigzag move and raises ValueError.  For
    width 1 the flip direction is not intrinsic; we move right from even start
    columns and left from odd ones, which keeps the operation an involution.
    """
    w = z.width
    p = position
    if not 0 <= p < w:
        raise ValueError(f"position {p} out of range for width {w}")
    vals = list(z.values)
    moves = list(z.path.moves)
    start = z.path.start

    a = vals[p]
    b = vals[p - 1] if p > 0 else 1
    c = vals[p + 1] if p < w - 1 else 1
    if _is_zero(a):
        raise ZeroDivisionError("zigzag value is zero")
    d = (1 + b * c) / a

    if w == 1:
        start += 1 if start % 2 == 0 else -1
    elif p == 0:
        if moves[0] == SE:
            start += 1
            moves[0] = SW
        else:
            start -= 1
            moves[0] = SE
    elif p == w - 1:
        moves[w - 2] = SW if moves[w - 2] == SE else SE
    else:
        if moves[p - 1] == moves[p]:
            raise ValueError(f"no corner at position {p}; path is straight there")
        moves[p - 1], moves[p] = moves[p], moves[p - 1]

    vals[p] = d
    path = ZigzagPath(start=start, moves=tuple(moves), width=w)
    return ZigzagCoords(path=path, values=tuple(vals))


def _straighten(z: ZigzagCoords) -> ZigzagCoords:
    """Mutate a zigzag into all-SE (diagonal) form; value arithmetic is generic."""
    cur = z
    while SW in cur.path.moves:
        k = cur.path.moves.index(SW)
        # a SW move bubbles up through corners and pops off at the top
        cur = elementary_mutation(cur, k)
    return cur


def zigzag_to_frieze(z: ZigzagCoords) -> FriezePattern:
    """Complete the frieze determined by zigzag coordinates."""
    if any(v == 0 for v in z.values):
        raise ZeroEntryEncountered("zigzag values must be nonzero")
    if z.width == 0:
        return propagate_from_quiddity((1, 1, 1))
    flat = _straighten(z)
    frieze = diagonal_to_frieze(flat.values, base=flat.path.start)
    if read_zigzag(frieze, z.path).values != z.values:
        raise AssertionError("zigzag reconstruction mismatch")
    return frieze


# ---------------------------------------------------------------------------
# scalar-generic completion used by the jet machinery


def _complete_rows_from_zigzag(values: Sequence, path: ZigzagPath) -> tuple[list, int]:
    """Rows of the frieze through generic zigzag values (e.g. jets)."""
    n = path.width + 3
    flat = _straighten(ZigzagCoords(path=path, values=tuple(values)))
    quiddity = _quiddity_from_diagonal(flat.values, flat.path.start % n, n)
    return _complete_rows(quiddity, n), n


def _read_path(rows: list, n: int, path: ZigzagPath):
    """Read generic row data along a path; mirrors FriezePattern.ent."""
    out = []
    for i, j in path.vertices():
        r = j - i - 1
        out.append(rows[r + 1][(i + 1) % n])
    return tuple(out)
