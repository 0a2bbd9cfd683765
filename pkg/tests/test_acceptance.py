"""Acceptance criteria 1-10, each checked exactly and reported as one PASS/FAIL line."""

from itertools import combinations, product

import pytest

from simplexgraph import graph as gr
from simplexgraph import symmetry as sym
from simplexgraph.field import gf
from simplexgraph.simplex import (
    duals_adjacent,
    hyperplane_criterion,
    is_simplex_vector,
    points_adjacent,
    simplex_polynomial_check,
)
from simplexgraph.verifier import Q5_TRIANGLE, verify_appendix

from conftest import ACCEPTANCE_LINES


def record(number: int, title: str, observed: dict, ok: bool):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} {observed}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def gl(u4, base):
    return sym.stabilizer_of_line(u4, base, sym.full_projective_group(u4))


def test_criterion_01_enumeration(u4):
    obs = {
        "points": len(u4.simplex_points),
        "lines": len(u4.lines),
        "lines_per_point": sorted({len(v) for v in u4.point_to_lines.values()}),
    }
    record(1, "q=4 points/lines/lines-per-point", obs, obs == {"points": 135, "lines": 162, "lines_per_point": [6]})


def test_criterion_02_graph_and_stratification(u4, g4):
    partitions, splits, nvals = set(), set(), set()
    for b in range(len(u4.lines)):
        s = gr.stratify(g4, u4, b, strict=False)
        partitions.add(tuple(gr.distance_partition(s.distances).values()))
        splits.add((len(s.x3_20), len(s.x1_90), len(s.x0_20)))
        nvals |= set(s.n_values.values())
    obs = {
        "connected": gr.is_connected(g4),
        "degrees": sorted(set(g4.degrees)),
        "diameter": gr.diameter(g4),
        "partitions": sorted(partitions),
        "splits": sorted(splits),
        "n_values": sorted(nvals),
    }
    expected = {
        "connected": True,
        "degrees": [25],
        "diameter": 3,
        "partitions": [(1, 25, 130, 6)],
        "splits": [(20, 90, 20)],
        "n_values": [0, 1, 3],
    }
    record(2, "connected, 25-regular, diameter 3, every base splits 1/25/130/6 and 20/90/20", obs, obs == expected)


def test_criterion_03_spread(u4, g4, base):
    s = gr.stratify(g4, u4, base)
    spread = [base] + s.six + s.x0_20
    pts = [p for lid in spread for p in u4.lines[lid].points]
    obs = {
        "lines": len(spread),
        "pairwise_disjoint": not any(u4.lines_meet(a, b) for a, b in combinations(spread, 2)),
        "covered": len(set(pts)),
        "is_spread": gr.verify_spread(u4, spread),
    }
    record(3, "{L} + six + X0_20 is a spread", obs, obs == {"lines": 27, "pairwise_disjoint": True, "covered": 135, "is_spread": True})


def test_criterion_04_group(u4, base, gl, ctx):
    pa = sym.point_action_on_line(u4, gl, base)
    obs = {
        "order": len(gl),
        "distinct_point_perms": len(set(pa)),
        "even_iff_linear": all(sym.perm_is_even(p) == m.is_linear for p, m in zip(pa, gl.elements)),
        "orbits": sorted(map(len, sym.orbits(gl))),
        "sharply_3_transitive": sym.check_sharply_3_transitive(gl, ctx.six),
    }
    expected = {
        "order": 120,
        "distinct_point_perms": 120,
        "even_iff_linear": True,
        "orbits": [1, 6, 10, 15, 20, 20, 30, 60],
        "sharply_3_transitive": True,
    }
    record(4, "|G(L)|=120, S5 point action, orbits, sharp 3-transitivity", obs, obs == expected)


def test_criterion_05_stabilizers(u4, gl, ctx):
    l136, l245 = ctx.line("L_136"), ctx.line("L_245")
    obs = {
        "G(L136)∩G(L)": len(sym.stabilizer_of_line(u4, l136, gl)),
        "G({L136,L245})∩G(L)": len(sym.setwise_stabilizer(gl, [l136, l245])),
    }
    record(5, "stabiliser orders", obs, obs == {"G(L136)∩G(L)": 6, "G({L136,L245})∩G(L)": 12})


def test_criterion_06_appendix(ctx):
    results = {r.id: r for r in verify_appendix(ctx)}
    needed = (
        "appendix_valid_simplex_lines",
        "appendix_lines_found",
        "x3_matches",
        "x3_incidence_triples",
        "bold_rows",
        "pair_table_joins",
        "x0_matches",
    )
    obs = {k: results[k].passed for k in needed}
    obs["found"] = results["appendix_lines_found"].actual
    record(6, "appendix tables reproduce X3_20, incidences, bold rows and X0_20", obs, all(obs[k] for k in needed) and obs["found"] == 40)


def test_criterion_07_exhaustive_equivalences(u4):
    f = gf(4)
    poly = sum(is_simplex_vector(f, v) == (any(v) and simplex_polynomial_check(f, v)) for v in product(range(4), repeat=5))
    pairs = list(combinations(u4.simplex_points, 2))
    adj = sum(points_adjacent(u4, p, q) == hyperplane_criterion(u4, p, q) for p, q in pairs)
    obs = {"poly_agree": poly, "adjacency_agree": adj, "pairs": len(pairs)}
    record(7, "polynomial system on 1024 vectors, adjacency criterion on all point pairs", obs, obs == {"poly_agree": 1024, "adjacency_agree": 9045, "pairs": 9045})


def test_criterion_08_q3(u3, g3):
    f = gf(3)
    quad = all(
        is_simplex_vector(f, v) == (any(v) and f.sum(f.mul(x, x) for x in v) == 0)
        for v in product(range(3), repeat=4)
    )
    obs = {
        "points": len(u3.simplex_points),
        "lines": len(u3.lines),
        "lines_per_point": sorted({len(v) for v in u3.point_to_lines.values()}),
        "K44": gr.is_complete_bipartite(g3, 4, 4),
        "quadratic": quad,
    }
    record(8, "q=3 grid, K_{4,4}, quadratic form", obs, obs == {"points": 16, "lines": 8, "lines_per_point": [2], "K44": True, "quadratic": True})


def test_criterion_09_cliques(u4, g4, u5, g5):
    sp = u5.space
    x, y, z = (sp.point_id(v) for v in Q5_TRIANGLE)
    tri = [sp.span_line(a, b) for a, b in ((x, y), (x, z), (y, z))]
    ids = [u5.line_index.get(l.points) for l in tri]
    cited = None not in ids and gr.is_clique(g5, ids) and not set.intersection(*(set(l.points) for l in tri))
    obs = {
        "q4_distinct_point_triangles": len(gr.distinct_point_triangles(g4, u4)),
        "q4_stars_maximal": all(gr.star_is_maximal_clique(g4, u4, p) for p in u4.simplex_points),
        "q5_cited_triangle": cited,
        "q5_vertices": g5.n_vertices,
        "q5_degrees": sorted(set(g5.degrees)),
    }
    expected = {
        "q4_distinct_point_triangles": 0,
        "q4_stars_maximal": True,
        "q5_cited_triangle": True,
        "q5_vertices": 6144,
        "q5_degrees": [138],
    }
    record(9, "q=4 cliques are stars, q=5 counterexample, q=5 138-regular on 6144", obs, obs == expected)


def test_criterion_10_duality(u4, g4):
    n = len(u4.lines)
    total = n * (n - 1) // 2
    agree = sum(g4.adjacent(a, b) == duals_adjacent(u4, a, b) for a in range(n) for b in range(a + 1, n))
    obs = {"agree": agree, "pairs": total}
    record(10, "adjacency iff dual codes meet in dimension n-3", obs, agree == total == 13041)
