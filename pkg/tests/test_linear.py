from fractions import Fraction

from hypothesis import given, strategies as st

from hkfsig.linear import System, bounds, feasible, make_row, remove_redundant


def box(dim, hi=1):
    s = System(dim)
    for k in range(dim):
        e = [0] * dim
        e[k] = 1
        s.add_raw(e, hi)
        e[k] = -1
        s.add_raw(e, 0)
    return s


def test_make_row_normalizes():
    assert make_row([2, -4], 6) == ((1, -2), 3)
    assert make_row([Fraction(1, 2), Fraction(1, 3)], 1) == ((3, 2), 6)
    assert make_row([0, 0], 1) is None


def test_parallel_rows_keep_tightest():
    s = System(1)
    s.add_raw([2], 4)
    s.add_raw([1], 3)
    assert dict(s.rows) == {(1,): 2}


def test_open_and_closed_feasibility():
    s = System(1)
    s.add_raw([1], 0)
    s.add_raw([-1], 0)  # the single point x = 0
    assert feasible(s)
    assert not feasible(s, open_=True)
    s.add_raw([1], -1)
    assert not feasible(s)


def test_constant_rows():
    s = System(2)
    s.add_raw([0, 0], -1)
    assert not feasible(s)
    s = System(2)
    s.add_raw([0, 0], 0)
    assert feasible(s) and not feasible(s, open_=True)


def test_bounds_of_simplex():
    s = box(3, 1)
    s.add_raw([1, 1, 1], 1)
    assert bounds(s, 2) == (0, 1)
    s.add_raw([1, 1, 2], 1)
    assert bounds(s, 2) == (0, Fraction(1, 2))


def test_remove_redundant():
    s = box(2, 1)
    s.add_raw([1, 1], 5)
    s.add_raw([1, 1], 5)
    r = remove_redundant(s)
    assert len(r) == 4


@given(
    st.lists(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4)),
        min_size=1,
        max_size=6,
    )
)
def test_feasibility_matches_vertex_search(rows):
    """A bounded nonempty polygon has a vertex; enumerate pairwise intersections."""
    s = box(2, 3)
    for a, b, c in rows:
        s.add_raw([a, b], c)
    all_rows = list(s)
    vertices = []
    for i, (c1, r1) in enumerate(all_rows):
        for c2, r2 in all_rows[i + 1:]:
            d = c1[0] * c2[1] - c1[1] * c2[0]
            if d:
                x = (r1 * c2[1] - r2 * c1[1]) / d
                y = (c1[0] * r2 - c2[0] * r1) / d
                vertices.append((x, y))
    has_vertex = any(all(c[0] * x + c[1] * y <= r for c, r in all_rows) for x, y in vertices)
    assert feasible(s) == (has_vertex and not s.infeasible)
