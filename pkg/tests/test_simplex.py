from itertools import combinations, product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from simplexgraph.field import gf
from simplexgraph.simplex import (
    adjacency_hyperplane,
    adjacent_points,
    duals_adjacent,
    expected_counts,
    hyperplane_coordinate_points,
    hyperplane_criterion,
    is_maximal_simplex_line,
    is_simplex_vector,
    nonadjacent_points_in_hyperplane,
    points_adjacent,
    scan_simplex_lines_all_pairs,
    simplex_code_count,
    simplex_polynomial_check,
)


def all_span_vectors_simplex(u, lid):
    """Oracle: every nonzero combination of the basis has exactly one zero."""
    f = u.field
    x, y = u.lines[lid].basis
    for a, b in product(f.elements, repeat=2):
        if a == b == 0:
            continue
        w = [f.add(f.mul(a, xi), f.mul(b, yi)) for xi, yi in zip(x, y)]
        if not is_simplex_vector(f, w):
            return False
    return True


@pytest.mark.parametrize("q,points,lines", [(3, 16, 8), (4, 135, 162)])
def test_counts(request, q, points, lines):
    u = request.getfixturevalue(f"u{q}")
    assert len(u.simplex_points) == points == expected_counts(q)["points"]
    assert len(u.lines) == lines == simplex_code_count(q, q + 1)
    assert {len(v) for v in u.point_to_lines.values()} == {factorial(q - 1)}


@pytest.mark.parametrize("q", [3, 4])
def test_anchored_enumeration_matches_pair_scan(request, q):
    u = request.getfixturevalue(f"u{q}")
    assert scan_simplex_lines_all_pairs(u.space, u.simplex_points) == [l.points for l in u.lines]
    assert all(all_span_vectors_simplex(u, lid) for lid in range(len(u.lines)))


@pytest.mark.slow
def test_q5_counts(u5):
    assert len(u5.simplex_points) == 1536
    assert len(u5.lines) == 6144 == simplex_code_count(5, 6)
    assert {len(v) for v in u5.point_to_lines.values()} == {24}


def test_polynomial_characterisation_exhaustive():
    f = gf(4)
    for v in product(range(4), repeat=5):
        assert is_simplex_vector(f, v) == (any(v) and simplex_polynomial_check(f, v))


def test_q3_quadratic_form():
    f = gf(3)
    for v in product(range(3), repeat=4):
        quad = sum(x * x for x in v) % 3 == 0
        assert is_simplex_vector(f, v) == (any(v) and quad)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_adjacency_criterion_matches_span(u4, data):
    p, q = data.draw(st.lists(st.sampled_from(u4.simplex_points), min_size=2, max_size=2, unique=True))
    assert points_adjacent(u4, p, q) == hyperplane_criterion(u4, p, q)


def test_adjacent_points_lie_in_hyperplane(u4):
    f = u4.field
    for p in u4.simplex_points[:20]:
        adj = adjacent_points(u4, p)
        assert len(adj) == 24
        h = adjacency_hyperplane(f, u4.rep(p))
        assert all(h.contains(f, u4.rep(a)) for a in adj)
        assert sorted(nonadjacent_points_in_hyperplane(u4, p)) == sorted(hyperplane_coordinate_points(u4, p))


def test_q5_hyperplane_has_extra_nonadjacent_points(u5):
    p = u5.space.point_id((0, 1, 1, 1, 1, 1))
    extra = set(nonadjacent_points_in_hyperplane(u5, p)) - set(hyperplane_coordinate_points(u5, p))
    assert extra
    assert all(u5.rep(t)[0] != 0 for t in extra)


def test_maximality_and_non_simplex_lines(u4):
    assert all(is_maximal_simplex_line(u4, lid) for lid in (0, 50, 161))
    sp = u4.space
    line = sp.line_through((0, 1, 1, 1, 1), (0, 1, 2, 3, 1))
    assert not u4.is_simplex_line(line)


def test_duality_on_sample(u4):
    for a, b in combinations(range(0, 162, 9), 2):
        meet = len(set(u4.lines[a].points) & set(u4.lines[b].points)) == 1
        assert duals_adjacent(u4, a, b) == meet


def test_line_text_roundtrip(u4):
    for lid in range(len(u4.lines)):
        text = u4.format_line(lid)
        assert u4.parse_line_id(text) == lid
        assert [r.index("0") for r in text.split("|")] == list(range(5))
