"""Build, inspect, and mutate closed frieze patterns.

A closed frieze of width w is a band of w nontrivial rows between two rows of
ones, horizontally periodic with period n = w + 3, in which every little
diamond

        b
      a   d        satisfies  a*d - b*c = 1.
        c

Everything here is exact rational arithmetic.
"""

from fractions import Fraction as Fr

import frieze_lab as fl
from frieze_lab.frieze import SW


def show(frieze):
    for r in range(0, frieze.width + 2):
        pad = "    " * r
        print(pad + "   ".join(f"{str(v):>5}" for v in frieze.rows[r + 1]))


print("A closed frieze from its quiddity row (1, 2, 2, 1, 3):\n")
f = fl.propagate_from_quiddity((1, 2, 2, 1, 3))
show(f)
print("\nvalidation:", f.check())

print("\nThe same frieze carries several coordinate systems.")
diag = f.diagonal()
print("SE diagonal at the distinguished base:", [str(v) for v in diag.values])

print("\nA zigzag path reads one entry per row; flipping a corner is a")
print("cluster mutation d = (1 + b c)/a that never leaves the frieze:")
z = fl.read_zigzag(f, fl.ZigzagPath(start=4, moves=(SW,)))
print("  zigzag (start 4, SW):", [str(v) for v in z.values])
m = fl.elementary_mutation(z, 0)
print("  after flipping position 0:", [str(v) for v in m.values], "path:", m.path.moves)
print("  mutating twice returns the original:", fl.elementary_mutation(m, 0) == z)
print("  both charts complete to the same frieze:", fl.zigzag_to_frieze(m) == f)

print("\nNon-closing quiddities are rejected:")
try:
    fl.propagate_from_quiddity((2, 2, 2, 2, 2))
except fl.NotClosed as exc:
    print("  (2,2,2,2,2):", exc)

print("\nGeneric width-2 frieze from a symbolic-looking diagonal (a1, a2) = (1/2, 3):")
g = fl.diagonal_to_frieze((Fr(1, 2), Fr(3)))
show(g)
