"""The graph of simplex lines: adjacency, distances, stratification, cliques, spreads."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Optional, Sequence

from .linalg import rank
from .projective import Hyperplane
from .simplex import SimplexUniverse, adjacency_hyperplane

UNREACHABLE = -1


class StratificationError(RuntimeError):
    pass


@dataclass
class SimplexGraph:
    """Lines are vertices; two lines are adjacent when they share exactly one point."""

    n_vertices: int
    neighbors: list[tuple[int, ...]]
    bits: list[int] = dc_field(repr=False)

    @property
    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors]

    @property
    def n_edges(self) -> int:
        return sum(self.degrees) // 2

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.bits[a] >> b & 1)

    def edges(self):
        for a, nb in enumerate(self.neighbors):
            for b in nb:
                if a < b:
                    yield a, b


def build_graph(u: SimplexUniverse) -> SimplexGraph:
    n = len(u.lines)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for star in u.point_to_lines.values():
        for a, b in combinations(star, 2):
            nbrs[a].add(b)
            nbrs[b].add(a)
    neighbors = [tuple(sorted(s)) for s in nbrs]
    bits = [sum(1 << b for b in nb) for nb in neighbors]
    return SimplexGraph(n, neighbors, bits)


def bfs_distances(g: SimplexGraph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b in g.neighbors[a]:
            if dist[b] == UNREACHABLE:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def distance_table(g: SimplexGraph) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(g.n_vertices)]


def is_connected(g: SimplexGraph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def diameter(g: SimplexGraph, table: Optional[list[list[int]]] = None) -> float:
    """Largest BFS distance; ``math.inf`` for a disconnected graph."""
    table = table if table is not None else distance_table(g)
    best = 0
    for row in table:
        if UNREACHABLE in row:
            return math.inf
        best = max(best, max(row))
    return best


def distance_partition(dist: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for d in dist:
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


@dataclass
class Stratification:
    base: int
    adjacent: list[int]
    six: list[int]
    x3_20: list[int]
    x1_90: list[int]
    x0_20: list[int]
    n_values: dict[int, int]
    distances: list[int] = dc_field(repr=False)

    @property
    def classes(self) -> dict[str, list[int]]:
        return {
            "base": [self.base],
            "adjacent": self.adjacent,
            "x3_20": self.x3_20,
            "x1_90": self.x1_90,
            "x0_20": self.x0_20,
            "six": self.six,
        }

    def class_of(self, lid: int) -> str:
        for name, ids in self.classes.items():
            if lid in ids:
                return name
        raise KeyError(lid)


def meeting_count(u: SimplexUniverse, lid: int, others: Sequence[int]) -> int:
    return sum(1 for o in others if u.lines_meet(lid, o))


def stratify(g: SimplexGraph, u: SimplexUniverse, base: int, strict: bool = True) -> Stratification:
    """Split the lines around ``base`` by distance and by how many distance-3 lines they meet.

    With ``strict`` any deviation from the expected q = 4 counts raises
    ``StratificationError``.
    """
    dist = bfs_distances(g, base)
    adjacent = [v for v, d in enumerate(dist) if d == 1]
    far = [v for v, d in enumerate(dist) if d == 2]
    six = [v for v, d in enumerate(dist) if d == 3]
    n_values = {v: meeting_count(u, v, six) for v in far}
    strat = Stratification(
        base=base,
        adjacent=adjacent,
        six=six,
        x3_20=[v for v in far if n_values[v] == 3],
        x1_90=[v for v in far if n_values[v] == 1],
        x0_20=[v for v in far if n_values[v] == 0],
        n_values=n_values,
        distances=dist,
    )
    if strict:
        got = (len(six), len(far), len(strat.x3_20), len(strat.x1_90), len(strat.x0_20), len(adjacent))
        unexpected = set(n_values.values()) - {0, 1, 3}
        if got != (6, 130, 20, 90, 20, 25) or unexpected or UNREACHABLE in dist:
            raise StratificationError(
                f"base {base}: (six, dist2, x3, x1, x0, adjacent) = {got}, "
                f"stray n-values {sorted(unexpected)}"
            )
    return strat


# cliques


def distinct_point_triangles(g: SimplexGraph, u: SimplexUniverse, limit: Optional[int] = None):
    """Triangles of mutually adjacent lines whose pairwise meets are three distinct points."""
    found = []
    for a, b in g.edges():
        (p_ab,) = set(u.lines[a].points) & set(u.lines[b].points)
        # only c > b, so each triangle is reported once
        common = (g.bits[a] & g.bits[b]) >> (b + 1)
        while common:
            low = common & -common
            common ^= low
            c = low.bit_length() + b
            if p_ab not in u.lines[c].points:
                found.append((a, b, c))
                if limit is not None and len(found) >= limit:
                    return found
    return found


def is_clique(g: SimplexGraph, vertices: Sequence[int]) -> bool:
    return all(g.adjacent(a, b) for a, b in combinations(vertices, 2))


def star_is_maximal_clique(g: SimplexGraph, u: SimplexUniverse, point: int) -> bool:
    star = u.point_to_lines[point]
    if not is_clique(g, star):
        return False
    mask = 0
    for lid in star:
        mask |= 1 << lid
    return not any(
        (g.bits[v] & mask) == mask for v in range(g.n_vertices) if not mask >> v & 1
    )


def verify_clique_structure(g: SimplexGraph, u: SimplexUniverse) -> bool:
    """Every star is a maximal clique and no triangle has three distinct meeting points."""
    if distinct_point_triangles(g, u, limit=1):
        return False
    return all(star_is_maximal_clique(g, u, p) for p in u.simplex_points)


def two_coloring(g: SimplexGraph) -> Optional[list[int]]:
    color = [-1] * g.n_vertices
    for s in range(g.n_vertices):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in g.neighbors[a]:
                if color[b] < 0:
                    color[b] = 1 - color[a]
                    queue.append(b)
                elif color[b] == color[a]:
                    return None
    return color


def is_complete_bipartite(g: SimplexGraph, left: int, right: int) -> bool:
    color = two_coloring(g)
    if color is None:
        return False
    parts = [[v for v in range(g.n_vertices) if color[v] == c] for c in (0, 1)]
    if sorted(map(len, parts)) != sorted((left, right)):
        return False
    return all(g.adjacent(a, b) for a in parts[0] for b in parts[1])


# spreads and spans


def verify_spread(u: SimplexUniverse, line_ids: Sequence[int]) -> bool:
    seen: set[int] = set()
    for lid in line_ids:
        pts = set(u.lines[lid].points)
        if pts & seen:
            return False
        seen |= pts
    return seen == set(u.simplex_points)


def span_rank(u: SimplexUniverse, line_ids: Sequence[int]) -> int:
    rows = [v for lid in line_ids for v in u.lines[lid].basis]
    return rank(u.field, rows)


def verify_spanned_hyperplanes(u: SimplexUniverse, six: Sequence[int]) -> bool:
    """Two disjoint lines of ``six`` span a hyperplane holding no third line of ``six``."""
    for i, j in combinations(six, 2):
        if u.lines_meet(i, j) or span_rank(u, [i, j]) != 4:
            return False
        for k in six:
            if k not in (i, j) and span_rank(u, [i, j, k]) == 4:
                return False
    return True


def transversals(u: SimplexUniverse, six: Sequence[int]) -> dict[tuple[int, int, int], list[int]]:
    """For each triple of ``six`` (by position), the simplex lines meeting all three."""
    out = {}
    for tri in combinations(range(len(six)), 3):
        out[tri] = [
            lid
            for lid in range(len(u.lines))
            if lid not in six and all(u.lines_meet(lid, six[t]) for t in tri)
        ]
    return out


# hyperplane characterisations around a base line


def base_hyperplanes(u: SimplexUniverse, base: int) -> list[tuple[int, Hyperplane]]:
    """``(P_i, H_i)`` for i = 1..n, ``P_i`` the point of ``base`` with zero at coordinate i."""
    return [(p, adjacency_hyperplane(u.field, u.rep(p))) for p in u.line_rows(base)]


def hyperplane_meets(u: SimplexUniverse, lid: int, h: Hyperplane) -> list[int]:
    return [p for p in u.lines[lid].points if h.contains(u.field, u.rep(p))]


def far_criterion(u: SimplexUniverse, base: int, lid: int) -> bool:
    """The line meets every ``H_i`` in a single point of ``H_i ∩ C_i`` other than ``P_i``."""
    for i, (p_i, h_i) in enumerate(base_hyperplanes(u, base)):
        hits = hyperplane_meets(u, lid, h_i)
        if len(hits) != 1:
            return False
        (r,) = hits
        if r == p_i or u.rep(r)[i] != 0:
            return False
    return True


def meets_hyperplanes_distinctly(u: SimplexUniverse, base: int, lid: int) -> bool:
    hits = []
    for _, h in base_hyperplanes(u, base):
        pts = hyperplane_meets(u, lid, h)
        if len(pts) != 1:
            return False
        hits.append(pts[0])
    return len(set(hits)) == len(hits)


def hyperplane_coordinate_set(u: SimplexUniverse, base: int) -> list[int]:
    """Simplex points lying in some ``H_i ∩ C_i`` and distinct from ``P_i``."""
    out = set()
    for i, (p_i, h_i) in enumerate(base_hyperplanes(u, base)):
        for s in u.simplex_points:
            if s != p_i and u.rep(s)[i] == 0 and h_i.contains(u.field, u.rep(s)):
                out.add(s)
    return sorted(out)
