import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import frieze_lab as fl
from frieze_lab.frieze import SE, SW


def small_fraction(rng, lo=1, hi=6):
    v = Fr(rng.randint(lo, hi), rng.randint(lo, hi))
    return -v if rng.random() < 0.3 else v


def random_diagonal(rng, w):
    while True:
        vals = tuple(small_fraction(rng) for _ in range(w))
        try:
            return fl.diagonal_to_frieze(vals), vals
        except fl.ZeroEntryEncountered:
            continue


def test_width0_closes():
    f = fl.propagate_from_quiddity((1, 1, 1))
    assert f.width == 0
    assert f.rows == ((Fr(0),) * 3, (Fr(1),) * 3, (Fr(1),) * 3)


def test_pentagon_quiddity_closes():
    f = fl.propagate_from_quiddity((1, 2, 2, 1, 3))
    assert f.width == 2
    assert f.rows[3] == (Fr(1), Fr(3), Fr(1), Fr(2), Fr(2))
    assert f.rows[4] == (Fr(1),) * 5
    assert f.is_valid()


def test_constant_two_not_closed():
    # solutions of V_{i+1} = 2V_i - V_{i-1} are affine in i, never antiperiodic
    with pytest.raises(fl.NotClosed):
        fl.propagate_from_quiddity((2, 2, 2, 2, 2))


def test_zero_interior_entry_rejected():
    # diagonal (-1, 1) forces a zero in the quiddity row, then a division by it
    with pytest.raises(fl.ZeroEntryEncountered):
        fl.diagonal_to_frieze((-1, 1))


def test_width2_generic_entries():
    # hand-propagated generic width-2 frieze: first row cycles
    # a1, (a2+1)/a1, (a1+1)/a2, a2, (a1+a2+1)/(a1 a2)
    for a1, a2 in ((Fr(1), Fr(2)), (Fr(1), Fr(1)), (Fr(3, 2), Fr(5))):
        f = fl.diagonal_to_frieze((a1, a2))
        expected = {a1, (a2 + 1) / a1, (a1 + 1) / a2, a2, (a1 + a2 + 1) / (a1 * a2)}
        assert set(f.quiddity) == expected
        assert (a1 + a2 + 1) / (a1 * a2) in set(f.rows[3])


def test_width1_alternation():
    # c_i c_{i+1} = 2 forces the first row to alternate a, 2/a
    f = fl.diagonal_to_frieze((Fr(2),))
    assert sorted(set(f.quiddity)) == [Fr(1), Fr(2)]
    assert f.quiddity[0] != f.quiddity[1]
    assert f.quiddity[0] == f.quiddity[2]


def test_diagonal_roundtrip():
    rng = random.Random(11)
    for w in range(1, 6):
        for _ in range(5):
            f, vals = random_diagonal(rng, w)
            assert f.diagonal().values == vals
            for base in range(f.period):
                d = f.diagonal(base)
                assert fl.diagonal_to_frieze(d.values, base=base) == f


def test_quiddity_roundtrip():
    rng = random.Random(23)
    for w in range(1, 5):
        f, _ = random_diagonal(rng, w)
        assert fl.propagate_from_quiddity(f.quiddity) == f


def test_read_zigzag_diagonal_path():
    f = fl.diagonal_to_frieze((1, 2))
    d = f.diagonal()
    z = fl.read_zigzag(f, d.as_zigzag().path)
    assert z.values == (Fr(1), Fr(2))


def test_read_zigzag_sw_goes_one_column_west():
    f = fl.diagonal_to_frieze((1, 2))
    for start in range(5):
        z = fl.read_zigzag(f, fl.ZigzagPath(start=start, moves=(SW,)))
        assert z.values[0] == f.entry(1, start + 1)
        assert z.values[1] == f.entry(2, start)  # row-2 entry one column west


def test_width0_empty_path():
    f = fl.propagate_from_quiddity((1, 1, 1))
    z = fl.read_zigzag(f, fl.ZigzagPath(start=0, moves=(), width=0))
    assert z.values == ()
    assert fl.zigzag_to_frieze(z) == f


def test_zigzag_reconstruction_exhaustive():
    # every zigzag chart determines the same frieze, all paths x all starts
    rng = random.Random(5)
    for w in range(1, 7):
        f, _ = random_diagonal(rng, w)
        n = f.period
        for start in range(n):
            for bits in range(2 ** max(w - 1, 0)):
                moves = tuple(SE if bits & (1 << k) else SW for k in range(w - 1))
                z = fl.read_zigzag(f, fl.ZigzagPath(start=start, moves=moves))
                assert fl.zigzag_to_frieze(z) == f


def test_mutation_involutive():
    f = fl.diagonal_to_frieze((1, 2, 3))
    for start in (0, 2, 5):
        for moves in ((SE, SE), (SE, SW), (SW, SE), (SW, SW)):
            z = fl.read_zigzag(f, fl.ZigzagPath(start=start, moves=moves))
            for p in range(3):
                if p == 1 and moves[0] == moves[1]:
                    with pytest.raises(ValueError):
                        fl.elementary_mutation(z, p)
                    continue
                m = fl.elementary_mutation(z, p)
                assert fl.elementary_mutation(m, p) == z
                assert fl.zigzag_to_frieze(m) == f


def test_mutation_width1_involutive():
    f = fl.diagonal_to_frieze((Fr(3),))
    z = fl.read_zigzag(f, fl.ZigzagPath(start=3, moves=()))
    assert z.values == (Fr(3),)
    m = fl.elementary_mutation(z, 0)
    assert m.values[0] == Fr(2, 3)  # (1 + 1*1)/3
    assert fl.elementary_mutation(m, 0) == z
    assert fl.zigzag_to_frieze(m) == f


def test_mutation_pentagon_first_position():
    # diamond arithmetic: new first value (1 + 1*a2)/a1 = 3 on the (1,2) pentagon
    f = fl.diagonal_to_frieze((1, 2))
    z = fl.read_zigzag(f, f.diagonal().as_zigzag().path)
    m = fl.elementary_mutation(z, 0)
    assert m.values == (Fr(3), Fr(2))
    assert m.path.moves == (SW,)
    assert fl.zigzag_to_frieze(m) == f


def test_glide_symmetry_map():
    # fixed index map (r, j) -> (w+1-r, j+r+1); its square shifts by n
    for f in (fl.diagonal_to_frieze((1, 2)), fl.diagonal_to_frieze((Fr(2),))):
        n, w = f.period, f.width
        for r in range(0, w + 2):
            for j in range(n):
                r2, j2 = f.glide_partner(r, j)
                assert f.entry(r, j) == f.entry(r2, j2)
                r3, j3 = f.glide_partner(r2, j2)
                assert (r3, (j3 - j) % n) == (r, 0)


def _glide_candidates(f):
    n, w = f.period, f.width
    return [
        (u, v)
        for u in range(n)
        for v in range(n)
        if all(
            f.entry(r, j) == f.entry(w + 1 - r, j + u * r + v)
            for r in range(0, w + 2)
            for j in range(n)
        )
    ]


def test_glide_map_found_by_search():
    # brute-force derivation of the affine index map (r, j) |-> (w+1-r, j+ur+v)
    assert (1, 1) in _glide_candidates(fl.diagonal_to_frieze((1, 2)))
    assert (1, 1) in _glide_candidates(fl.diagonal_to_frieze((Fr(2),)))
    # a generic even-width frieze pins the map down uniquely; odd widths admit
    # a second representative because the middle row is half-period
    g = fl.diagonal_to_frieze((Fr(5, 2), Fr(7, 3)))
    assert _glide_candidates(g) == [(1, 1)]
    h = fl.diagonal_to_frieze((Fr(5, 2), Fr(7, 3), Fr(1, 4)))
    assert (1, 1) in _glide_candidates(h)


def test_period_cyclic_access():
    f = fl.diagonal_to_frieze((1, 2))
    for r in range(-1, f.width + 2):
        for j in range(f.period):
            assert f.entry(r, j + f.period) == f.entry(r, j)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.fractions(min_value=Fr(-4), max_value=Fr(4)).filter(lambda q: q != 0),
        min_size=1,
        max_size=4,
    )
)
def test_property_diagonal_roundtrip(vals):
    try:
        f = fl.diagonal_to_frieze(vals)
    except fl.ZeroEntryEncountered:
        return
    assert f.diagonal().values == tuple(vals)
    assert f.is_valid()


def test_read_zigzag_width_mismatch():
    f = fl.diagonal_to_frieze((1, 2))
    with pytest.raises(ValueError):
        fl.read_zigzag(f, fl.ZigzagPath(start=0, moves=(SE, SE)))


def test_zigzag_path_validation():
    with pytest.raises(ValueError):
        fl.ZigzagPath(start=0, moves=("NE",))
    with pytest.raises(ValueError):
        fl.ZigzagPath(start=0, moves=(SE,), width=3)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.fractions(min_value=Fr(-3), max_value=Fr(3)).filter(lambda q: q != 0),
        min_size=2,
        max_size=4,
    ),
    st.randoms(use_true_random=False),
)
def test_property_mutations_preserve_frieze(vals, rng):
    try:
        f = fl.diagonal_to_frieze(vals)
    except fl.ZeroEntryEncountered:
        return
    z = fl.read_zigzag(f, f.diagonal().as_zigzag().path)
    for _ in range(4):
        w = z.width
        admissible = [
            p
            for p in range(w)
            if p in (0, w - 1) or z.path.moves[p - 1] != z.path.moves[p]
        ]
        p = rng.choice(admissible)
        m = fl.elementary_mutation(z, p)
        assert fl.elementary_mutation(m, p) == z
        assert fl.zigzag_to_frieze(m) == f
        z = m
