"""Named, reportable checks of every quantitative claim about the simplex line graphs."""

from __future__ import annotations

import json
import random
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations, product
from typing import Any, Callable, Optional, Sequence

import numpy as np

from . import graph as gr
from . import symmetry as sym
from .appendix import AppendixTable, load_appendix
from .field import distinct_sum_property, gf, zero_sum_multisets
from .simplex import (
    SimplexUniverse,
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
    simplex_polynomial_check,
    universe,
)

SUITES = ("foundations", "theorem1", "theorem2", "appendix", "smallq")
Q4_SUITES = ("foundations", "theorem1", "theorem2", "appendix")

# GF(4) codes: 0, 1, a = alpha, b = alpha^2
A, B = 2, 3
EXAMPLE_POINTS = ((0, 1, 1, 1, 1), (1, 0, 1, A, B))
Q_POINTS = (
    (0, 1, 1, A, A),
    (0, 1, A, 1, A),
    (0, 1, A, A, 1),
    (0, 1, 1, B, B),
    (0, 1, B, 1, B),
    (0, 1, B, B, 1),
)
Q5_TRIANGLE = ((0, 1, 1, 1, 1, 1), (1, 0, 1, 2, 4, 3), (4, 3, 1, 4, 2, 0))


@dataclass
class CheckResult:
    id: str
    paper_claim: str
    expected: Any
    actual: Any
    passed: bool
    runtime_ms: float = 0.0

    def to_dict(self, timings: bool = True) -> dict:
        return {
            "id": self.id,
            "paper_claim": self.paper_claim,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
            "runtime_ms": round(self.runtime_ms, 3) if timings else 0,
        }


def _canon(value: Any) -> Any:
    """JSON-stable form: tuples become lists, sets become sorted lists, dict keys become strings."""
    if isinstance(value, (set, frozenset)):
        return sorted(_canon(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_canon(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _canon(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, float) and value == float("inf"):
        return "inf"
    return value


@dataclass
class Report:
    suite: str
    checks: list[CheckResult] = dc_field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self, timings: bool = True) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_dict(timings) for c in self.checks],
            "summary": {"passed": self.passed, "failed": self.failed},
        }

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(
                f"{tag}  {c.id:<34} expected={json.dumps(c.expected)} actual={json.dumps(c.actual)}  [{c.paper_claim}]"
            )
        lines.append(f"{self.suite}: {self.passed} passed, {self.failed} failed")
        return "\n".join(lines) + "\n"


class Checks:
    """Collects results; a check body that raises becomes a failing result."""

    def __init__(self):
        self.results: list[CheckResult] = []

    def add(self, cid: str, claim: str, expected: Any, fn: Callable[[], Any]) -> Any:
        t0 = time.perf_counter()
        try:
            actual = _canon(fn())
        except Exception as exc:  # noqa: BLE001 - reported, never raised
            actual = f"error: {type(exc).__name__}: {exc}"
        expected = _canon(expected)
        self.results.append(
            CheckResult(cid, claim, expected, actual, actual == expected, (time.perf_counter() - t0) * 1e3)
        )
        return actual


def _line_names(u: SimplexUniverse, table: AppendixTable) -> dict[str, int]:
    """Line ids of every named matrix that parses to a simplex line."""
    out = {}
    for name, entry in table.by_name().items():
        try:
            out[name] = u.parse_line_id(entry.text)
        except (KeyError, ValueError):
            pass
    return out


class Context:
    """Lazily built, shared state for the q = 4 suites."""

    def __init__(self, appendix_path: Optional[str] = None):
        self.appendix_path = appendix_path
        self._lock = threading.RLock()

    def _locked(fn):  # noqa: N805 - decorator used in the class body
        def wrapper(self):
            with self._lock:
                return fn(self)

        wrapper.__name__ = fn.__name__
        return cached_property(wrapper)

    @_locked
    def u(self) -> SimplexUniverse:
        return universe(4)

    @_locked
    def g(self) -> gr.SimplexGraph:
        return gr.build_graph(self.u)

    @_locked
    def base(self) -> int:
        sp = self.u.space
        return self.u.line_id(sp.span_line(sp.point_id(EXAMPLE_POINTS[0]), sp.point_id(EXAMPLE_POINTS[1])))

    @_locked
    def strat(self) -> gr.Stratification:
        return gr.stratify(self.g, self.u, self.base, strict=False)

    @_locked
    def table(self) -> AppendixTable:
        return load_appendix(self.appendix_path)

    @_locked
    def names(self) -> dict[str, int]:
        return _line_names(self.u, self.table)

    @_locked
    def six(self) -> list[int]:
        """Distance-3 lines ordered by their L_1..L_6 labels (falls back to id order)."""
        try:
            labelled = [self.names.get(e.name) for e in self.table.six]
        except (OSError, ValueError):
            return list(self.strat.six)
        if sorted(x for x in labelled if x is not None) == sorted(self.strat.six) and len(labelled) == 6:
            return labelled  # type: ignore[return-value]
        return list(self.strat.six)

    @_locked
    def full_group(self) -> sym.GroupOnLines:
        return sym.full_projective_group(self.u)

    @_locked
    def gl(self) -> sym.GroupOnLines:
        return sym.stabilizer_of_line(self.u, self.base)

    @_locked
    def edges(self) -> np.ndarray:
        return np.array(list(self.g.edges()), dtype=np.int64)

    def pid(self, v) -> int:
        return self.u.space.point_id(v)

    def line(self, name: str) -> int:
        return self.names[name]

    def x3_names(self) -> list[str]:
        return [e.name for e in self.table.x3]

    def x3_ids(self) -> list[int]:
        return [self.names[n] for n in self.x3_names()]

    def image_of_line(self, m: sym.MonomialMap, lid: int) -> int:
        f, u = self.u.field, self.u
        b0, b1 = u.lines[lid].basis
        img = u.space.line_through(m.apply(f, b0), m.apply(f, b1))
        return u.line_index.get(img.points, -1)

    def point_image(self, m: sym.MonomialMap, pid: int) -> int:
        return self.u.space.point_id(m.apply(self.u.field, self.u.rep(pid)))


def _perm_on(ctx: Context, m: sym.MonomialMap, labelled: Sequence[int], image) -> list[tuple[int, ...]]:
    """Cycles (1-based, by position in ``labelled``) of the permutation ``m`` induces on ``labelled``."""
    pos = {x: i for i, x in enumerate(labelled)}
    perm = tuple(pos[image(m, x)] for x in labelled)
    return sym.perm_cycles(perm)


# suites


def verify_foundations(ctx: Context) -> list[CheckResult]:
    c = Checks()
    u = ctx.u
    f = u.field

    def field_axioms():
        els = range(f.q)
        ok = all(f.add(a, 0) == a and f.mul(a, 1) == a for a in els)
        ok &= all(f.add(a, b) == f.add(b, a) and f.mul(a, b) == f.mul(b, a) for a in els for b in els)
        ok &= all(
            f.mul(a, f.add(b, d)) == f.add(f.mul(a, b), f.mul(a, d))
            and f.add(f.add(a, b), d) == f.add(a, f.add(b, d))
            and f.mul(f.mul(a, b), d) == f.mul(a, f.mul(b, d))
            for a in els
            for b in els
            for d in els
        )
        ok &= all(f.mul(a, f.inv(a)) == 1 for a in f.nonzero)
        ok &= f.order_of(f.primitive) == f.q - 1
        ok &= f.mul(A, A) == B and f.add(A, 1) == B
        return ok

    c.add("field_gf4_axioms", "GF(4) = {0,1,a,a^2} with a^2 = a+1", True, field_axioms)
    c.add(
        "distinct_sum_property",
        "Intro: q-1 nonzero elements sum to 0 iff distinct, only for q=3,4",
        {3: True, 4: True, 5: False},
        lambda: {q: distinct_sum_property(gf(q)) for q in (3, 4, 5)},
    )

    def poly_equiv():
        agree = 0
        for v in product(range(4), repeat=5):
            lhs = is_simplex_vector(f, v)
            rhs = any(v) and simplex_polynomial_check(f, v)
            agree += lhs == rhs
        return agree

    c.add("poly_equiv", "Sec 2.2 end: polynomial system characterises simplex vectors", 1024, poly_equiv)
    c.add(
        "example1_line",
        "Example 1: the line through <0,1,1,1,1> and <1,0,1,a,a^2>",
        "01111|101ab|110ba|1ab01|1ba10",
        lambda: u.format_line(ctx.base),
    )
    c.add(
        "example_main_hyperplanes",
        "Example exmp-main: equations (H1)-(H5)",
        ["01111", "101ba", "110ab", "1ba01", "1ab10"],
        lambda: [f.format_vector(h.coeffs) for _, h in gr.base_hyperplanes(u, ctx.base)],
    )
    c.add(
        "example_main_Q_points",
        "Example exmp-main: H1 ∩ C1 holds exactly Q1..Q6 besides P1",
        sorted(f.format_vector(q) for q in Q_POINTS),
        lambda: sorted(f.format_vector(u.rep(p)) for p in hyperplane_coordinate_points(u, u.line_rows(ctx.base)[0])),
    )

    def prop_ad():
        pts = u.simplex_points
        agree = sum(
            points_adjacent(u, p, q) == hyperplane_criterion(u, p, q) for p, q in combinations(pts, 2)
        )
        return agree

    c.add("prop_ad_iff", "Prop 3.3: adjacency iff (eq-ad) and y_i != 0 (q=4)", 135 * 134 // 2, prop_ad)
    c.add(
        "adjacent_points_per_point",
        "Prop 3.2 proof: q! = 24 simplex points adjacent to each point",
        [24],
        lambda: sorted({len(adjacent_points(u, p)) for p in u.simplex_points}),
    )
    c.add(
        "lines_per_point",
        "Prop 3.2(1): (q-1)! = 6 simplex lines through each point",
        [6],
        lambda: sorted({len(ls) for ls in u.point_to_lines.values()}),
    )

    def remark3():
        sizes, same = set(), True
        for p in u.simplex_points:
            na = nonadjacent_points_in_hyperplane(u, p)
            sizes.add(len(na))
            same &= sorted(na) == sorted(hyperplane_coordinate_points(u, p))
        return {"sizes": sizes, "all_in_coordinate_hyperplane": same}

    c.add(
        "hyperplane_nonadjacent_six",
        "Remark rem3 / rem-ad: 6 non-adjacent simplex points in H_P, all in C_i",
        {"sizes": [6], "all_in_coordinate_hyperplane": True},
        remark3,
    )

    def remark_q6():
        q_ids = [ctx.pid(q) for q in Q_POINTS]
        p1 = u.line_rows(ctx.base)[0]
        simplex_joins = collinear_triples = 0
        p1_pairs = []
        for (i, a), (j, b) in combinations(enumerate(q_ids, 1), 2):
            line = u.space.span_line(a, b)
            simplex_joins += u.is_simplex_line(line)
            collinear_triples += sum(1 for k in q_ids if k not in (a, b) and k in line.points)
            if p1 in line.points:
                p1_pairs.append((i, j))
        return {"simplex_joins": simplex_joins, "collinear": collinear_triples, "p1_on_join": p1_pairs}

    c.add(
        "remark_Q6_collinearity",
        "Remark rem-Q6: no Q_iQ_j join is simplex, no three Q collinear, P1 on Q_iQ_j iff j = i+3",
        {"simplex_joins": 0, "collinear": 0, "p1_on_join": [(1, 4), (2, 5), (3, 6)]},
        remark_q6,
    )

    def duality():
        g = ctx.g
        n = len(u.lines)
        return sum(
            g.adjacent(a, b) == duals_adjacent(u, a, b) for a in range(n) for b in range(a + 1, n)
        )

    c.add("duality_adjacency", "Remark after Thm 2: adjacent iff dual (Hamming) codes adjacent", 162 * 161 // 2, duality)

    def maximality():
        rng = random.Random(20240)
        sample = rng.sample(range(len(u.lines)), 10)
        return all(is_maximal_simplex_line(u, lid) for lid in sample)

    c.add("maximal_simplex_lines", "Sec 2.2: simplex codes are maximal all-simplex subspaces (10 sampled)", True, maximality)

    s = ctx.strat
    c.add(
        "nL_values",
        "Lemma lemma-nL: n(L') in {0,1,3} for distance-2 lines",
        [0, 1, 3],
        lambda: sorted(set(s.n_values.values())),
    )
    c.add(
        "lemma_d3",
        "Lemma lemma-d3: hyperplane criterion iff distance > 2",
        161,
        lambda: sum(
            gr.far_criterion(u, ctx.base, lid) == (s.distances[lid] >= 3)
            for lid in range(len(u.lines))
            if lid != ctx.base
        ),
    )
    c.add(
        "lemma_L_prime",
        "Lemma lemma-L': lines non-adjacent to L meet H1..H5 in distinct points",
        136,
        lambda: sum(
            gr.meets_hyperplanes_distinctly(u, ctx.base, lid)
            for lid in range(len(u.lines))
            if s.distances[lid] >= 2
        ),
    )

    def lemma_q():
        xs = gr.hyperplane_coordinate_set(u, ctx.base)
        counts = {sum(1 for l6 in ctx.six if x in u.lines[l6].points) for x in xs}
        return {"size": len(xs), "lines_through_each": counts}

    c.add("lemma_q", "Lemma lemma-q: the 30 points of the H_i ∩ C_i lie on a unique L_j", {"size": 30, "lines_through_each": [1]}, lemma_q)
    c.add("lemma_Sij", "Lemma lemma-Sij: S_ij contains no third L_k", True, lambda: gr.verify_spanned_hyperplanes(u, ctx.six))
    c.add(
        "unique_transversals",
        "Prop prop1-2: each triple L_i,L_j,L_k has exactly one transversal",
        [1] * 20,
        lambda: [len(v) for v in gr.transversals(u, ctx.six).values()],
    )
    return c.results


def verify_theorem1(ctx: Context) -> list[CheckResult]:
    c = Checks()
    u, g = ctx.u, ctx.g
    exp = expected_counts(4)
    c.add("count_points", "Thm 1(3): 135 simplex points", 135, lambda: len(u.simplex_points))
    c.add("count_lines", "Thm 1: 162 simplex lines", 162, lambda: len(u.lines))
    c.add("count_lines_formula", "Sec 2.2: n!(q-1)^n / ((q^2-1)(q^2-q))", 162, lambda: exp["lines"])
    c.add(
        "count_lines_pair_scan",
        "Sec 2.2: unrestricted point-pair scan agrees with enumeration",
        True,
        lambda: scan_simplex_lines_all_pairs(u.space, u.simplex_points) == [l.points for l in u.lines],
    )
    c.add("degree_regular", "Thm 1: every vertex has degree 25", [25], lambda: sorted(set(g.degrees)))
    c.add("edge_count", "Handshake: 162*25/2 edges", 2025, lambda: g.n_edges)
    c.add("connected", "Thm 1: Gamma is connected", True, lambda: gr.is_connected(g))
    c.add("diameter", "Thm 1: diameter 3", 3, lambda: gr.diameter(g))
    s = ctx.strat
    c.add(
        "base_distance_partition",
        "Thm 1(1)-(2): 1 + 25 + 130 + 6 lines at distance 0..3",
        {0: 1, 1: 25, 2: 130, 3: 6},
        lambda: gr.distance_partition(s.distances),
    )
    c.add(
        "stratification_counts",
        "Thm 1(2): distance-2 set splits 20/90/20",
        {"six": 6, "x3_20": 20, "x1_90": 90, "x0_20": 20, "adjacent": 25},
        lambda: {"six": len(s.six), "x3_20": len(s.x3_20), "x1_90": len(s.x1_90), "x0_20": len(s.x0_20), "adjacent": len(s.adjacent)},
    )

    def all_bases():
        ok = 0
        for b in range(len(u.lines)):
            try:
                gr.stratify(g, u, b, strict=True)
                ok += 1
            except gr.StratificationError:
                pass
        return ok

    c.add("stratification_all_bases", "Thm 1 for every base line (extension of the by-symmetry argument)", 162, all_bases)

    def meet_counts():
        return {
            "x3_20": sorted({gr.meeting_count(u, l, s.six) for l in s.x3_20}),
            "x1_90": sorted({gr.meeting_count(u, l, s.six) for l in s.x1_90}),
            "x0_20": sorted({gr.meeting_count(u, l, s.six) for l in s.x0_20}),
        }

    c.add("six_meeting_counts", "Thm 1(2): X3 meets 3 of the L_i, X1 one, X0 none", {"x3_20": [3], "x1_90": [1], "x0_20": [0]}, meet_counts)
    c.add(
        "six_pairwise_disjoint",
        "Sec 4.1: any two distinct L_i, L_j are disjoint",
        True,
        lambda: not any(u.lines_meet(a, b) for a, b in combinations(s.six, 2)),
    )
    c.add(
        "six_have_outside_neighbours",
        "Prop prop1-conn: every L_i is adjacent to a line outside {L_1..L_6}",
        True,
        lambda: all(any(v not in s.six for v in g.neighbors[l]) for l in s.six),
    )
    c.add(
        "x0_pairwise_disjoint",
        "Sec 4.2: lines of X0_20 are mutually disjoint",
        True,
        lambda: not any(u.lines_meet(a, b) for a, b in combinations(s.x0_20, 2)),
    )
    spread = [ctx.base] + s.six + s.x0_20
    c.add("spread", "Thm 1(3): {L, L_1..L_6} ∪ X0_20 is a spread", True, lambda: gr.verify_spread(u, spread))
    c.add("spread_size", "Thm 1(3): 27 lines, 27*5 = 135 points", [27, 135], lambda: [len(spread), 5 * len(spread)])
    c.add(
        "spread_rejects_x3",
        "Thm 1(3) control: X3_20 in place of X0_20 is not a spread",
        False,
        lambda: gr.verify_spread(u, [ctx.base] + s.six + s.x3_20),
    )
    c.add("clique_structure", "Prop 3.4: maximal cliques are point stars (q=4)", True, lambda: gr.verify_clique_structure(g, u))
    c.add(
        "distinct_point_triangles",
        "Prop 3.4 proof: no triangle with three distinct meeting points",
        0,
        lambda: len(gr.distinct_point_triangles(g, u)),
    )
    return c.results


def verify_theorem2(ctx: Context) -> list[CheckResult]:
    c = Checks()
    u = ctx.u
    f = u.field
    s = ctx.strat
    n = u.n

    c.add(
        "monomial_group_order",
        "Sec 2.2: n!(q-1)^n linear monomial maps, times m = 2 for semilinear",
        58320,
        lambda: len(sym.enumerate_monomial_group(f, n)),
    )
    c.add(
        "projective_group_order",
        "Sec 3: maps inducing the same projective transformation differ by a scalar",
        19440,
        lambda: len({m.projective(f) for m in sym.enumerate_monomial_group(f, n)}),
    )
    G = ctx.full_group
    c.add("action_well_defined", "Monomial semilinear maps permute simplex lines and preserve adjacency", True, lambda: sym.action_is_well_defined(u, G, ctx.edges))
    c.add(
        "transitive_points_lines",
        "Sec 2.2: transitive on simplex points and on simplex lines",
        [135, 162],
        lambda: [len(set(G.point_table[:, u.simplex_points[0]].tolist())), len(set(G.line_table[:, 0].tolist()))],
    )
    GL = ctx.gl
    c.add("GL_order", "Sec 3: G(L) ≅ PΓL(2,4) has order 120", 120, lambda: len(GL))
    c.add("GL_linear_order", "Sec 3: linear part ≅ PGL(2,4) has order 60", 60, lambda: sum(m.is_linear for m in GL.elements))
    pa = sym.point_action_on_line(u, GL, ctx.base)
    c.add("GL_point_action_bijective", "Sec 3: every permutation of the points of L extends uniquely", 120, lambda: len(set(pa)))
    c.add(
        "GL_even_iff_linear",
        "Sec 3: linear-induced iff even permutation of L",
        True,
        lambda: all(sym.perm_is_even(p) == m.is_linear for p, m in zip(pa, GL.elements)),
    )
    orbs = sym.orbits(GL)
    c.add("orbit_sizes", "Thm 2: orbit sizes 1,6,10,15,20,20,30,60", [1, 6, 10, 15, 20, 20, 30, 60], lambda: sorted(map(len, orbs)))
    orbit_sets = [set(o) for o in orbs]
    c.add(
        "named_orbits",
        "Thm 2(1): {L_1..L_6}, X3_20, X0_20 are orbits",
        [True, True, True],
        lambda: [set(x) in orbit_sets for x in (s.six, s.x3_20, s.x0_20)],
    )
    x3 = s.x3_20
    on_six = set().union(*(u.lines[l].points for l in s.six))

    def meets_off_six(a: int, b: int) -> bool:
        return bool((set(u.lines[a].points) & set(u.lines[b].points)) - on_six)

    def split(members):
        # a meeting point on some L_i is shared by every line through it, so it does not count
        meet = sorted(l for l in members if any(meets_off_six(l, t) for t in x3))
        rest = sorted(set(members) - set(meet))
        return {"meeting": len(meet), "disjoint": len(rest), "orbits": set(meet) in orbit_sets and set(rest) in orbit_sets}

    c.add("A_split_by_Lijk", "Thm 2(2), Prop prop1-6: A = 10 meeting some L_ijk + 15 disjoint", {"meeting": 10, "disjoint": 15, "orbits": True}, lambda: split(s.adjacent))
    c.add("X1_split_by_Lijk", "Thm 2(3), Prop prop1-7: X1_90 = 60 meeting some L_ijk off the L_i + 30", {"meeting": 60, "disjoint": 30, "orbits": True}, lambda: split(s.x1_90))
    c.add("sharp3trans", "Thm 2(1): action on {L_1..L_6} is sharply 3-transitive", True, lambda: sym.check_sharply_3_transitive(GL, ctx.six))
    c.add("triple_stabilizer_trivial", "Prop prop1-4: only the identity fixes an ordered triple", 1, lambda: sym.triple_stabilizer_size(GL, ctx.six))
    c.add(
        "orbit_stabilizer",
        "orbit size x stabiliser order = 120 for every orbit",
        True,
        lambda: all(len(o) * len(sym.stabilizer_of_line(u, o[0], GL)) == 120 for o in orbs),
    )

    l136, l245 = ctx.line("L_136"), ctx.line("L_245")
    c.add("stab_L136", "Lemma lemma-G: |G(L_136) ∩ G(L)| = 6", 6, lambda: len(sym.stabilizer_of_line(u, l136, GL)))
    c.add(
        "stab_L136_eq_L245",
        "Sec 4.2: G(L_136) ∩ G(L) = G(L_245) ∩ G(L)",
        True,
        lambda: {m for m in sym.stabilizer_of_line(u, l136, GL).elements} == {m for m in sym.stabilizer_of_line(u, l245, GL).elements},
    )
    c.add("stab_pair_136_245", "Sec 4.2: G({L_136, L_245}) has order 12", 12, lambda: len(sym.setwise_stabilizer(GL, [l136, l245])))
    c.add("orbit_L136", "Sec 4.2: the orbit of L_136 has 20 elements", 20, lambda: len(set(GL.line_table[:, l136].tolist())))

    # concrete maps named in the proofs
    def cyc(*cycles):
        return sym.perm_from_cycles(n, cycles)

    q_ids = [ctx.pid(q) for q in Q_POINTS]

    def lemma_q6():
        m1 = sym.MonomialMap.diag_perm((B, 1, 1, 1, 1), cyc((3, 4, 5)))
        m2 = sym.MonomialMap.diag_perm((1,) * 5, cyc((2, 5), (3, 4)))
        return [
            [ctx.image_of_line(m, ctx.base) == ctx.base for m in (m1, m2)],
            _perm_on(ctx, m1, q_ids, ctx.point_image),
            _perm_on(ctx, m2, q_ids, ctx.point_image),
        ]

    c.add(
        "lemma_q6_maps",
        "Lemma lemma-q6: d(a^2,1,1,1,1)p_(345) and p_(25)(34) fix L, act as (Q1Q2Q3)(Q4Q5Q6), (Q1Q4)(Q2Q5)",
        [[True, True], [(1, 2, 3), (4, 5, 6)], [(1, 4), (2, 5)]],
        lemma_q6,
    )

    def lemma_g_generators():
        m1 = sym.MonomialMap.diag_perm((1, 1, 1, A, B), cyc((1, 2, 3)))
        m2 = sym.MonomialMap.diag_perm((1,) * 5, cyc((2, 3), (4, 5)))
        u_map = sym.MonomialMap.from_coordinates((0, 1, 2, 4, 3), (1, 1, 1, B, B), frob=1)
        return {
            "generators_fix_L_and_L136": all(
                ctx.image_of_line(m, ctx.base) == ctx.base and ctx.image_of_line(m, l136) == l136 for m in (m1, m2)
            ),
            "u_fixes_L136_not_L": [ctx.image_of_line(u_map, l136) == l136, ctx.image_of_line(u_map, ctx.base) == ctx.base],
        }

    c.add(
        "lemma_G_maps",
        "Lemma lemma-G: generators lie in G(L_136) ∩ G(L); u is in G(L_136) but not G(L)",
        {"generators_fix_L_and_L136": True, "u_fixes_L136_not_L": [True, False]},
        lemma_g_generators,
    )

    def w_map():
        w = sym.MonomialMap.from_coordinates((0, 1, 2, 4, 3), (1,) * 5, frob=1)
        return [ctx.image_of_line(w, ctx.base) == ctx.base, ctx.image_of_line(w, l136) == l245, ctx.image_of_line(w, l245) == l136]

    c.add("w_transposes_L136_L245", "Sec 4.2: w fixes L and swaps L_136, L_245", [True, True, True], w_map)

    def named_maps():
        out = {}
        p23_45 = sym.MonomialMap.diag_perm((1,) * 5, cyc((2, 3), (4, 5)))
        out["p(23)(45) swaps L45,L54"] = [ctx.image_of_line(p23_45, ctx.line("L_45")), ctx.image_of_line(p23_45, ctx.line("L_54"))] == [ctx.line("L_54"), ctx.line("L_45")]
        t_swap = sym.MonomialMap.from_coordinates((0, 2, 1, 3, 4), (1,) * 5, frob=1)
        out["x2<->x3 swaps T1,T2"] = [
            ctx.image_of_line(t_swap, ctx.base) == ctx.base,
            ctx.image_of_line(t_swap, ctx.line("T_1")) == ctx.line("T_2"),
        ]
        s_cycle = sym.MonomialMap.diag_perm((A, 1, 1, 1, 1), cyc((2, 3, 4)))
        s_ids = [ctx.line(x) for x in ("S_1", "S_2", "S_3")]
        out["d(a,1,1,1,1)p_(234) on S"] = _perm_on(ctx, s_cycle, s_ids, ctx.image_of_line)
        return out

    c.add(
        "prop1_6_maps",
        "Props prop1-6 / Sec 4.2: maps swapping L'/L'' and T1/T2, cycling S1 S2 S3",
        {"p(23)(45) swaps L45,L54": True, "x2<->x3 swaps T1,T2": [True, True], "d(a,1,1,1,1)p_(234) on S": [(1, 2, 3)]},
        named_maps,
    )

    def f_g_maps():
        fm = sym.MonomialMap.from_coordinates((0, 3, 4, 2, 1), (1,) * 5, frob=1)
        gm = sym.MonomialMap.from_coordinates((4, 1, 0, 2, 3), (B, B, 1, A, 1), frob=1)
        l1 = ctx.six[0]
        pts = u.line_rows(l1)  # Q1, Q'2, ..., Q'5 by zero position
        fg = fm.compose(f, gm)
        return {
            "preserve": [ctx.image_of_line(m, x) == x for m in (fm, gm) for x in (ctx.base, l1)],
            "f_swaps_N1_N2": ctx.image_of_line(fm, ctx.line("N_1")) == ctx.line("N_2"),
            "f": _perm_on(ctx, fm, pts, ctx.point_image),
            "g": _perm_on(ctx, gm, pts, ctx.point_image),
            "fg": _perm_on(ctx, fg, pts, ctx.point_image),
        }

    # positions 1..5 on L_1 are Q1, Q'2, Q'3, Q'4, Q'5
    c.add(
        "prop1_7_maps",
        "Prop prop1-7: f, g fix L and L_1; f = (Q'2 Q'5 Q'3 Q'4), g = (Q1 Q'3 Q'4 Q'5), fg a 5-cycle",
        {
            "preserve": [True] * 4,
            "f_swaps_N1_N2": True,
            "f": [(2, 5, 3, 4)],
            "g": [(1, 3, 4, 5)],
            "fg": [(1, 4, 3, 2, 5)],
        },
        f_g_maps,
    )
    return c.results


def verify_appendix(ctx: Context, table: Optional[AppendixTable] = None) -> list[CheckResult]:
    c = Checks()
    u = ctx.u
    s = ctx.strat
    try:
        t = table if table is not None else ctx.table
    except (OSError, ValueError) as exc:
        message = f"error: {exc}"
        c.add("appendix_load", "Appendix: bundled line tables", "loaded", lambda: message)
        return c.results
    names = _line_names(u, t)

    c.add(
        "appendix_sizes",
        "Appendix: 6 lines L_i, 20 L_ijk, 20 L_st, 10 pair rows",
        [6, 20, 20, 10],
        lambda: [len(t.six), len(t.x3), len(t.x0), len(t.pairs)],
    )

    def all_valid():
        bad = []
        for e in t.six + t.x3 + t.x0 + t.named:
            rows = [u.field.parse_vector(r) for r in e.rows]
            try:
                lid = u.parse_line_id(e.text)
            except (KeyError, ValueError) as exc:
                bad.append(f"{e.name} (line {e.lineno}): {exc}")
                continue
            if [r.index(0) if r.count(0) == 1 else -1 for r in rows] != list(range(5)):
                bad.append(f"{e.name} (line {e.lineno}): row i must vanish in coordinate i")
            elif [u.rep(p) for p in u.line_rows(lid)] != rows:
                bad.append(f"{e.name} (line {e.lineno}): rows are not canonical representatives")
        return bad

    c.add("appendix_valid_simplex_lines", "Appendix: every matrix is a simplex line in canonical row form", [], all_valid)
    c.add(
        "appendix_lines_found",
        "Appendix: all 40 L_ijk / L_st found in the enumeration",
        40,
        lambda: sum(e.name in names for e in t.x3 + t.x0),
    )
    c.add(
        "six_labels",
        "Sec 4.1: the matrices L_1..L_6 are the lines at distance 3",
        sorted(s.six),
        lambda: sorted(names[e.name] for e in t.six),
    )
    c.add("x3_matches", "Appendix: the 20 L_ijk form X3_20", sorted(s.x3_20), lambda: sorted(names[e.name] for e in t.x3))

    # an unparsable L_i already fails six_labels; keep going with the computed order
    six = [names[e.name] for e in t.six] if all(e.name in names for e in t.six) else list(s.six)

    def incidence():
        bad = []
        for e in t.x3:
            lid = names[e.name]
            meets = tuple(i + 1 for i, l6 in enumerate(six) if u.lines_meet(lid, l6))
            if meets != e.label:
                bad.append(f"{e.name}: meets {meets}")
        return bad

    c.add("x3_incidence_triples", "Appendix: L_ijk meets exactly L_i, L_j, L_k", [], incidence)

    def off_six_rows(lid: int) -> set[int]:
        on_six = set().union(*(u.lines[l6].points for l6 in six))
        return {r + 1 for r, p in enumerate(u.line_rows(lid)) if p not in on_six}

    def bold():
        return [f"{e.name}: off-six rows {sorted(off_six_rows(names[e.name]))}" for e in t.x3 if off_six_rows(names[e.name]) != set(e.bold)]

    c.add("bold_rows", "Appendix: bolded rows are exactly the points off L_1..L_6", [], bold)
    c.add(
        "L136_row4",
        "Appendix: row 4 of L_136 is <1,a,a^2,0,a>, bolded and off all L_i",
        ["1ab0a", True, True],
        lambda: [
            u.field.format_vector(u.rep(u.point_on_row(names["L_136"], 3))),
            4 in t.x3[[e.name for e in t.x3].index("L_136")].bold,
            4 in off_six_rows(names["L_136"]),
        ],
    )

    def pair_table():
        x3 = {e.label: names[e.name] for e in t.x3}
        bad, built = [], {}
        for row in t.pairs:
            a, b = x3.get(row.first), x3.get(row.second)
            if a is None or b is None or set(row.first) & set(row.second):
                bad.append(f"line {row.lineno}: bad index triples")
                continue
            s_, t_ = row.st
            if off_six_rows(a) != {s_, t_} or off_six_rows(b) != {s_, t_}:
                bad.append(f"line {row.lineno}: (s,t) rows are not the off-six rows")
            for x, y in ((s_, t_), (t_, s_)):
                line = u.space.span_line(u.point_on_row(a, x - 1), u.point_on_row(b, y - 1))
                if not u.is_simplex_line(line):
                    bad.append(f"line {row.lineno}: join L_{x}{y} is not simplex")
                    continue
                built[f"L_{x}{y}"] = u.line_id(line)
        transcribed = {e.name: names.get(e.name) for e in t.x0}
        if built != transcribed:
            bad.append("joins disagree with the transcribed L_st matrices: " + ", ".join(
                sorted(k for k in set(built) | set(transcribed) if built.get(k) != transcribed.get(k))
            ))
        return {"problems": bad, "joins": sorted(built.values())}

    c.add("pair_table_joins", "Appendix: L_st joins point s of L_ijk to point t of L_i'j'k'", {"problems": [], "joins": sorted(s.x0_20)}, pair_table)
    c.add("x0_matches", "Appendix: the 20 L_st form X0_20", sorted(s.x0_20), lambda: sorted(names[e.name] for e in t.x0))
    c.add(
        "x0_pairwise_disjoint_appendix",
        "Sec 4.2: the listed L_st are mutually disjoint",
        True,
        lambda: not any(u.lines_meet(names[a.name], names[b.name]) for a, b in combinations(t.x0, 2)),
    )

    def l136_facts():
        l136 = names["L_136"]
        return {
            "meets_L1_at": u.field.format_vector(u.rep(u.space.intersect_lines(u.lines[l136], u.lines[six[0]]))),
            "distance": s.distances[l136],
            "n": s.n_values.get(l136),
        }

    c.add("L136_facts", "Sec 4.2: L_136 meets L_1 in Q1, is at distance 2, n = 3", {"meets_L1_at": "011aa", "distance": 2, "n": 3}, l136_facts)

    def named_lines():
        on_six = set().union(*(u.lines[l6].points for l6 in six))
        p5 = u.line_rows(ctx.base)[4]
        q1 = ctx.pid(Q_POINTS[0])

        def meet(a, b):
            return set(u.lines[a].points) & set(u.lines[b].points)

        def meets_x3_off_six(lid):
            return sorted(e.name for e in t.x3 if meet(lid, names[e.name]) - on_six)

        def point_with(a, b):
            return [u.field.format_vector(u.rep(p)) for p in sorted(meet(names[a], names[b]))]

        out = {}
        for nm in ("T_1", "T_2", "S_1", "S_2", "S_3"):
            lid = names[nm]
            out[nm] = [s.class_of(lid), p5 in u.lines[lid].points, bool(meets_x3_off_six(lid))]
        out["T_1 ∩ L_345"] = point_with("T_1", "L_345")
        out["T_2 ∩ L_126"] = point_with("T_2", "L_126")
        for nm in ("N_1", "N_2", "N_3"):
            lid = names[nm]
            out[nm] = [s.class_of(lid), q1 in u.lines[lid].points, meets_x3_off_six(lid)]
        through_q1 = sorted(l for l in u.point_to_lines[q1] if l != six[0])
        out["lines_through_Q1"] = through_q1 == sorted(names[x] for x in ("L_136", "L_125", "N_1", "N_2", "N_3"))
        return out

    c.add(
        "named_lines",
        "Props prop1-6, prop1-7: T1, T2, S1-S3 through P5; N1-N3 through Q1",
        {
            "T_1": ["adjacent", True, True],
            "T_2": ["adjacent", True, True],
            "S_1": ["adjacent", True, False],
            "S_2": ["adjacent", True, False],
            "S_3": ["adjacent", True, False],
            "T_1 ∩ L_345": ["0111a"],
            "T_2 ∩ L_126": ["0111b"],
            "N_1": ["x1_90", True, ["L_236", "L_356"]],
            "N_2": ["x1_90", True, ["L_235", "L_256"]],
            "N_3": ["x1_90", True, []],
            "lines_through_Q1": True,
        },
        named_lines,
    )
    return c.results


def verify_small_q(u3: Optional[SimplexUniverse], u5: Optional[SimplexUniverse]) -> list[CheckResult]:
    c = Checks()
    if u3 is not None:
        f3 = u3.field
        g3 = gr.build_graph(u3)
        c.add("q3_point_count", "Example 3.3: 16 simplex points", 16, lambda: len(u3.simplex_points))
        c.add("q3_line_count", "Example 3.3: 8 simplex lines", 8, lambda: len(u3.lines))
        c.add("q3_lines_per_point", "Example 3.3: each point on exactly two lines", [2], lambda: sorted({len(v) for v in u3.point_to_lines.values()}))
        c.add("q3_K44", "Example 3.3: Gamma ≅ K_{4,4}", True, lambda: gr.is_complete_bipartite(g3, 4, 4))
        c.add("q3_triangle_free", "Example 3.3: the grid graph has no triangles", 0, lambda: sum(
            1 for a, b in g3.edges() for x in g3.neighbors[a] if x > b and g3.adjacent(b, x)
        ))

        def quadratic():
            agree = 0
            for v in product(range(3), repeat=4):
                q = f3.sum(f3.mul(x, x) for x in v) == 0
                agree += (any(v) and q) == is_simplex_vector(f3, v)
            return agree

        c.add("q3_quadratic", "Example 3.3: x1^2+x2^2+x3^2+x4^2 = 0 exactly on simplex vectors", 81, quadratic)
    if u5 is not None:
        f5 = u5.field
        g5 = gr.build_graph(u5)
        exp = expected_counts(5)

        def scan_points():
            return sum(1 for v in product(range(5), repeat=6) if sum(1 for x in v if x == 0) == 1) // 4

        c.add("q5_point_count", "Oracle: brute-force scan of GF(5)^6 (no count stated)", scan_points(), lambda: len(u5.simplex_points))
        c.add("q5_line_count", "Sec 2.2 formula: 6!*4^6/(24*20)", exp["lines"], lambda: len(u5.lines))
        c.add(
            "q5_line_pair_scan",
            "Oracle: unrestricted pair scan agrees with enumeration",
            True,
            lambda: scan_simplex_lines_all_pairs(u5.space, u5.simplex_points) == [l.points for l in u5.lines],
        )
        c.add("q5_degree_regular", "Prop 3.2(2): degree (q+1)((q-1)!-1) = 138", [138], lambda: sorted(set(g5.degrees)))
        c.add("q5_vertex_count", "6144 vertices", 6144, lambda: g5.n_vertices)

        def cited_triangle():
            sp = u5.space
            x, y, z = (sp.point_id(v) for v in Q5_TRIANGLE)
            lines = [sp.span_line(a, b) for a, b in ((x, y), (x, z), (y, z))]
            ids = [u5.line_index.get(l.points) for l in lines]
            return {
                "simplex": [u5.is_simplex_line(l) for l in lines],
                "pairwise_adjacent": None not in ids and all(g5.adjacent(a, b) for a, b in combinations(ids, 2)),
                "meeting_points_distinct": len({x, y, z}) == 3 and z not in lines[0].points,
                "common_point": None not in ids and bool(set.intersection(*(set(l.points) for l in lines))),
            }

        c.add(
            "q5_triangle_exists",
            "q=5 example: x, y, z span three pairwise adjacent simplex lines",
            {"simplex": [True, True, True], "pairwise_adjacent": True, "meeting_points_distinct": True, "common_point": False},
            cited_triangle,
        )
        c.add("q5_clique_structure_fails", "q=5 example: Prop 3.4 fails", False, lambda: gr.verify_clique_structure(g5, u5))

        def witness():
            p = u5.space.point_id((0, 1, 1, 1, 1, 1))
            off = [t for t in nonadjacent_points_in_hyperplane(u5, p) if u5.rep(t)[0] != 0]
            return len(off) > 0

        c.add("q5_remark_witness", "Remark rem-ad: H_P holds non-adjacent points vanishing elsewhere (q=5)", True, witness)
        c.add(
            "q5_repeated_zero_sum",
            "Intro / Remark rem-ad: 4 nonzero elements of GF(5) with a repeat summing to 0",
            True,
            lambda: any(len(set(m)) < 4 for m in zero_sum_multisets(f5)),
        )

        def necessary_only():
            p = u5.space.point_id((0, 1, 1, 1, 1, 1))
            adj = adjacent_points(u5, p)
            h = adjacency_hyperplane(f5, u5.rep(p))
            necessary = all(h.contains(f5, u5.rep(a)) for a in adj)
            converse = all(hyperplane_criterion(u5, p, t) == (t in adj) for t in u5.simplex_points if t != p)
            return [len(adj), necessary, converse]

        c.add("q5_eq_ad_necessary_not_sufficient", "Prop 3.3: (eq-ad) is necessary; the converse needs q=4", [120, True, False], necessary_only)
    return c.results


@dataclass
class RunConfig:
    suites: tuple[str, ...] = SUITES
    q: int = 4
    appendix_path: Optional[str] = None
    threads: int = 1


def run_suites(cfg: RunConfig, ctx: Optional[Context] = None, map_fn: Optional[Callable] = None) -> Report:
    """Run the selected suites; results are ordered by suite then check, whatever the thread count.

    ``map_fn`` lets a caller that owns an executor supply its ``map``.
    """
    unknown = [s for s in cfg.suites if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    if cfg.q != 4 and any(s in Q4_SUITES for s in cfg.suites):
        raise ValueError(f"suites {', '.join(Q4_SUITES)} are defined for q=4 only")
    ctx = ctx or Context(cfg.appendix_path)

    def run_one(name: str) -> list[CheckResult]:
        if name == "foundations":
            return verify_foundations(ctx)
        if name == "theorem1":
            return verify_theorem1(ctx)
        if name == "theorem2":
            return verify_theorem2(ctx)
        if name == "appendix":
            return verify_appendix(ctx)
        qs = (3, 5) if cfg.q == 4 else (cfg.q,)
        return verify_small_q(universe(3) if 3 in qs else None, universe(5) if 5 in qs else None)

    if map_fn is not None:
        parts = list(map_fn(run_one, cfg.suites))
    elif cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            parts = list(pool.map(run_one, cfg.suites))
    else:
        parts = [run_one(name) for name in cfg.suites]
    label = "all" if tuple(cfg.suites) == SUITES else ",".join(cfg.suites)
    return Report(label, [r for part in parts for r in part])
