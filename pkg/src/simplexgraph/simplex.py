"""Simplex vectors, points and lines for k = 2, n = q + 1.

A vector is simplex when it has exactly ``[k-1]_q`` zero coordinates; for
k = 2 that is exactly one zero.  A simplex line is a 2-dimensional subspace
all of whose nonzero vectors are simplex, i.e. a 2-dimensional q-ary
simplex code.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable

import numpy as np

from .field import FieldTable, gf
from .linalg import Vector, intersection_dim, nullspace
from .projective import GeometryError, Hyperplane, LineCode, ProjectiveSpace, gaussian_count

SUPPORTED_Q = (3, 4, 5)


def is_simplex_vector(f: FieldTable, v, k: int = 2) -> bool:
    return sum(1 for x in v if x == 0) == gaussian_count(f.q, k - 1)


def simplex_polynomial_check(f: FieldTable, v, k: int = 2) -> bool:
    """Evaluate the polynomial system cutting out simplex vectors.

    For ``q = p^m`` the equations are ``e_{p^j}(x_1^{q-1}, ..., x_n^{q-1}) = 0``
    for ``j = 0, ..., mk - m - 1`` where ``e_d`` is the d-th elementary
    symmetric polynomial.  The zero vector satisfies every equation; callers
    exclude it.
    """
    ys = [f.power(x, f.q - 1) if x else 0 for x in v]
    degrees = [f.p**j for j in range(f.m * k - f.m)]
    top = max(degrees)
    # e[d] = elementary symmetric polynomial of degree d in the ys seen so far
    e = [1] + [0] * top
    for y in ys:
        for d in range(top, 0, -1):
            e[d] = f.add(e[d], f.mul(e[d - 1], y))
    return all(e[d] == 0 for d in degrees if d <= len(ys))


def simplex_code_count(q: int, n: int, k: int = 2) -> int:
    """Closed-form number of q-ary simplex codes of dimension k and length n."""
    gl = 1
    for i in range(k):
        gl *= q**k - q**i
    return factorial(n) * (q - 1) ** n // gl


def adjacency_hyperplane(f: FieldTable, rep) -> Hyperplane:
    """Hyperplane ``sum_{j != i} x_j^{-1} y_j = 0`` holding every simplex point adjacent to ``<rep>``."""
    if not is_simplex_vector(f, rep):
        raise GeometryError(f"{rep} is not a simplex vector")
    return Hyperplane(tuple(f.inv(x) if x else 0 for x in rep))


def dual_code(f: FieldTable, basis) -> list[Vector]:
    """Basis of the orthogonal complement of the span of ``basis``."""
    basis = list(basis)
    return nullspace(f, basis, len(basis[0]))


@dataclass
class SimplexUniverse:
    field: FieldTable
    space: ProjectiveSpace
    simplex_points: tuple[int, ...]
    lines: tuple[LineCode, ...]
    point_to_lines: dict[int, tuple[int, ...]]
    k: int = 2

    def __post_init__(self):
        self.line_index = {line.points: i for i, line in enumerate(self.lines)}
        self.simplex_point_set = frozenset(self.simplex_points)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.space.n

    def rep(self, pid: int) -> Vector:
        return self.space.reps[pid]

    def zero_position(self, pid: int) -> int:
        return self.space.reps[pid].index(0)

    def line_id(self, line: LineCode) -> int:
        return self.line_index[line.points]

    def is_simplex_line(self, line: LineCode) -> bool:
        return all(p in self.simplex_point_set for p in line.points)

    def line_rows(self, lid: int) -> list[int]:
        """Points of a simplex line ordered by the position of their zero coordinate."""
        return sorted(self.lines[lid].points, key=self.zero_position)

    def point_on_row(self, lid: int, row: int) -> int:
        """The point of line ``lid`` whose zero sits in coordinate ``row`` (0-based)."""
        return self.line_rows(lid)[row]

    def lines_meet(self, a: int, b: int) -> bool:
        return not set(self.lines[a].points).isdisjoint(self.lines[b].points)

    def format_line(self, lid: int) -> str:
        return self.space.format_line(self.lines[lid])

    def parse_line_id(self, text: str) -> int:
        return self.line_id(self.space.parse_line(text))


def enumerate_simplex_points(space: ProjectiveSpace, k: int = 2) -> tuple[int, ...]:
    return tuple(pid for pid, rep in enumerate(space.reps) if is_simplex_vector(space.field, rep, k))


def enumerate_simplex_lines(space: ProjectiveSpace, simplex_points: Iterable[int]) -> list[LineCode]:
    """Span-and-filter over point pairs, anchored on the first two coordinates.

    The q + 1 points of a simplex line have pairwise distinct zero positions,
    so each simplex line holds exactly one point of C_1 and one of C_2.
    Pairing those two classes finds every simplex line exactly once.
    """
    f = space.field
    add, mul = f.add_table, f.mul_table
    pts = set(simplex_points)
    in_c1 = [p for p in sorted(pts) if space.reps[p][0] == 0]
    in_c2 = [p for p in sorted(pts) if space.reps[p][1] == 0]
    poc, code = space.point_of_code, space.code
    found = []
    for a in in_c1:
        u = space.reps[a]
        for b in in_c2:
            v = space.reps[b]
            ids = [a, b]
            for c in f.nonzero:
                pid = poc[code([add[x][mul[c][y]] for x, y in zip(u, v)])]
                if pid not in pts:
                    break
                ids.append(pid)
            else:
                found.append(LineCode(tuple(sorted(ids)), (u, v)))
    found.sort(key=lambda line: line.points)
    return found


def scan_simplex_lines_all_pairs(space: ProjectiveSpace, simplex_points: Iterable[int]) -> list[tuple[int, ...]]:
    """Unrestricted pair scan: span every pair of simplex points, keep simplex spans, dedupe.

    Vectorised with numpy; independent of the anchoring argument used by
    ``enumerate_simplex_lines``.
    """
    f = space.field
    add, mul = f.np_add, f.np_mul
    pts = np.array(sorted(simplex_points), dtype=np.int64)
    is_simplex = np.zeros(len(space), dtype=bool)
    is_simplex[pts] = True
    reps = space.np_reps[pts]
    w = space.np_weights
    lines = set()
    for i in range(len(pts) - 1):
        u = reps[i]
        vs = reps[i + 1 :]
        ok = np.ones(len(vs), dtype=bool)
        ids = [np.full(len(vs), pts[i]), pts[i + 1 :]]
        for c in range(1, f.q):
            comb_vec = add[u[None, :], mul[c][vs]]
            pid = space.np_point_of_code[comb_vec @ w]
            ok &= is_simplex[pid]
            ids.append(pid)
        block = np.sort(np.stack(ids, axis=1)[ok], axis=1)
        lines.update(map(tuple, block.tolist()))
    return sorted(lines)


def build_universe(q: int, k: int = 2) -> SimplexUniverse:
    if k != 2:
        raise NotImplementedError("only 2-dimensional simplex codes are supported")
    f = gf(q)
    space = ProjectiveSpace(f, q + 1)
    spts = enumerate_simplex_points(space, k)
    lines = enumerate_simplex_lines(space, spts)
    incidence: dict[int, list[int]] = {p: [] for p in spts}
    for lid, line in enumerate(lines):
        for p in line.points:
            incidence[p].append(lid)
    return SimplexUniverse(
        field=f,
        space=space,
        simplex_points=spts,
        lines=tuple(lines),
        point_to_lines={p: tuple(ls) for p, ls in incidence.items()},
        k=k,
    )


_UNIVERSES: dict[int, SimplexUniverse] = {}


def universe(q: int) -> SimplexUniverse:
    """Cached ``build_universe``."""
    if q not in SUPPORTED_Q:
        raise ValueError(f"q={q} is not supported (choose from {SUPPORTED_Q})")
    if q not in _UNIVERSES:
        _UNIVERSES[q] = build_universe(q)
    return _UNIVERSES[q]


def points_adjacent(u: SimplexUniverse, p: int, q: int) -> bool:
    """Two distinct simplex points are adjacent when their span is a simplex line."""
    if p == q:
        raise GeometryError("adjacency needs two distinct points")
    return u.is_simplex_line(u.space.span_line(p, q))


def hyperplane_criterion(u: SimplexUniverse, p: int, q: int) -> bool:
    """``q`` lies on the adjacency hyperplane of ``p`` and is nonzero where ``p`` vanishes."""
    rep_p, rep_q = u.rep(p), u.rep(q)
    h = adjacency_hyperplane(u.field, rep_p)
    return h.contains(u.field, rep_q) and rep_q[rep_p.index(0)] != 0


def adjacent_points(u: SimplexUniverse, p: int) -> set[int]:
    out = set()
    for lid in u.point_to_lines[p]:
        out.update(u.lines[lid].points)
    out.discard(p)
    return out


def nonadjacent_points_in_hyperplane(u: SimplexUniverse, p: int) -> list[int]:
    """Simplex points of the adjacency hyperplane of ``p`` that are not adjacent to ``p``.

    For q = 4 these are exactly the simplex points of ``H_p`` sharing the zero
    coordinate of ``p``; for q >= 5 some of them vanish elsewhere.
    """
    h = adjacency_hyperplane(u.field, u.rep(p))
    adj = adjacent_points(u, p)
    return [
        s for s in u.simplex_points if s != p and s not in adj and h.contains(u.field, u.rep(s))
    ]


def hyperplane_coordinate_points(u: SimplexUniverse, p: int) -> list[int]:
    """Simplex points of ``H_p`` inside the coordinate hyperplane where ``p`` vanishes, minus ``p``."""
    i = u.zero_position(p)
    h = adjacency_hyperplane(u.field, u.rep(p))
    return [
        s
        for s in u.simplex_points
        if s != p and u.rep(s)[i] == 0 and h.contains(u.field, u.rep(s))
    ]


def duals_adjacent(u: SimplexUniverse, a: int, b: int) -> bool:
    """Dual codes meet in dimension n - 3, i.e. they are adjacent in the Grassmann graph of (n-2)-spaces."""
    f = u.field
    da = dual_code(f, u.lines[a].basis)
    db = dual_code(f, u.lines[b].basis)
    return intersection_dim(f, da, db) == u.n - 3


def is_maximal_simplex_line(u: SimplexUniverse, lid: int) -> bool:
    """Every plane through the line holds a nonzero non-simplex vector."""
    f = u.field
    line = u.lines[lid]
    x, y = line.basis
    on_line = set(line.points)
    for r in range(len(u.space)):
        if r in on_line:
            continue
        z = u.rep(r)
        plane_simplex = True
        for a in f.elements:
            for b in f.elements:
                w = [f.add(f.add(zi, f.mul(a, xi)), f.mul(b, yi)) for zi, xi, yi in zip(z, x, y)]
                if not is_simplex_vector(f, w):
                    plane_simplex = False
                    break
            if not plane_simplex:
                break
        if plane_simplex:
            return False
    return True


def expected_counts(q: int) -> dict[str, int]:
    """Closed-form counts for k = 2 used as cross-checks against enumeration."""
    n = q + 1
    return {
        "points": n * (q - 1) ** (n - 1) // (q - 1),
        "lines": simplex_code_count(q, n),
        "lines_per_point": factorial(q - 1),
        "adjacent_points": factorial(q),
        "degree": (q + 1) * (factorial(q - 1) - 1),
        "point_pairs_per_line": comb(q + 1, 2),
    }
