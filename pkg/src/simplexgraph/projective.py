"""Points, lines and hyperplanes of the projective space of GF(q)^n.

Points are indexed globally by the lexicographic order of their canonical
representatives (first nonzero coordinate equal to 1).  A line is stored as
the sorted tuple of the ids of its q + 1 points, so line equality is tuple
equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Optional

import numpy as np

from .field import FieldTable
from .linalg import Vector, dot, rank


class GeometryError(ValueError):
    pass


def gaussian_count(q: int, m: int) -> int:
    """Number of 1-dimensional subspaces of an m-dimensional space over GF(q)."""
    return (q**m - 1) // (q - 1)


@dataclass(frozen=True)
class ProjPoint:
    rep: Vector

    @property
    def zero_support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.rep) if x == 0)


@dataclass(frozen=True)
class LineCode:
    points: tuple[int, ...]
    basis: tuple[Vector, Vector] = dc_field(compare=False, repr=False)

    def __contains__(self, pid: int) -> bool:
        return pid in self.points

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Hyperplane:
    coeffs: Vector

    def __post_init__(self):
        if not any(self.coeffs):
            raise GeometryError("hyperplane coefficients must not all be zero")

    def contains(self, f: FieldTable, v) -> bool:
        return dot(f, self.coeffs, v) == 0


def normalize(f: FieldTable, v) -> ProjPoint:
    """Scale ``v`` so that its first nonzero coordinate is 1."""
    lead = next((x for x in v if x), 0)
    if not lead:
        raise GeometryError("the zero vector does not span a point")
    s = f.inv(lead)
    return ProjPoint(tuple(f.mul_table[s][x] for x in v))


def enumerate_proj_points(f: FieldTable, n: int) -> list[ProjPoint]:
    """All points of GF(q)^n in lexicographic order of canonical reps."""
    pts = []
    for v in product(range(f.q), repeat=n):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            pts.append(ProjPoint(v))
    return pts


class ProjectiveSpace:
    """Indexed point set of GF(q)^n with O(1) vector-to-point lookup."""

    def __init__(self, f: FieldTable, n: int, max_vectors: int = 2_000_000):
        if f.q**n > max_vectors:
            raise GeometryError(f"GF({f.q})^{n} is too large to enumerate")
        self.field = f
        self.n = n
        self.q = f.q
        self.points = enumerate_proj_points(f, n)
        self.reps: list[Vector] = [p.rep for p in self.points]
        self._weights = [f.q ** (n - 1 - i) for i in range(n)]
        # vector code -> point id (-1 for the zero vector)
        self.point_of_code = [-1] * (f.q**n)
        for pid, rep in enumerate(self.reps):
            for c in f.nonzero:
                self.point_of_code[self.code(f.mul_table[c][x] for x in rep)] = pid
        self.np_reps = np.array(self.reps, dtype=np.int64)
        self.np_point_of_code = np.array(self.point_of_code, dtype=np.int64)
        self.np_weights = np.array(self._weights, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.points)

    def code(self, v) -> int:
        return sum(w * x for w, x in zip(self._weights, v))

    def point_id(self, v) -> int:
        pid = self.point_of_code[self.code(v)]
        if pid < 0:
            raise GeometryError("the zero vector does not span a point")
        return pid

    def rep(self, pid: int) -> Vector:
        return self.reps[pid]

    def line_through(self, u, v) -> LineCode:
        """Line spanned by two independent vectors."""
        f = self.field
        if rank(f, [u, v]) != 2:
            raise GeometryError("vectors do not span a line")
        ids = {self.point_id(v)}
        for c in f.elements:
            ids.add(self.point_id([f.add_table[x][f.mul_table[c][y]] for x, y in zip(u, v)]))
        return LineCode(tuple(sorted(ids)), (tuple(u), tuple(v)))

    def span_line(self, p: int, q: int) -> LineCode:
        if p == q:
            raise GeometryError("a line needs two distinct points")
        return self.line_through(self.reps[p], self.reps[q])

    def intersect_lines(self, a: LineCode, b: LineCode) -> Optional[int]:
        if a == b:
            raise GeometryError("intersection of a line with itself is not a point")
        common = set(a.points).intersection(b.points)
        if len(common) > 1:
            raise GeometryError("distinct lines share at most one point")
        return common.pop() if common else None

    def hyperplane_contains(self, h: Hyperplane, pid: int) -> bool:
        return h.contains(self.field, self.reps[pid])

    # text format: rows of point reps joined by '|'

    def format_line(self, line: LineCode, by_zero: bool = True) -> str:
        """Rows are sorted by zero position when every point has a single zero."""
        reps = [self.reps[p] for p in line.points]
        if by_zero and all(r.count(0) == 1 for r in reps):
            reps.sort(key=lambda r: r.index(0))
        return "|".join(self.field.format_vector(r) for r in reps)

    def parse_rows(self, text: str) -> list[Vector]:
        rows = [s.strip() for s in text.strip().split("|")]
        vecs = []
        for s in rows:
            if len(s) != self.n:
                raise GeometryError(f"row {s!r} does not have {self.n} symbols")
            vecs.append(self.field.parse_vector(s))
        return vecs

    def parse_line(self, text: str) -> LineCode:
        rows = self.parse_rows(text)
        if len(rows) != self.q + 1:
            raise GeometryError(f"a line has {self.q + 1} points, got {len(rows)} rows")
        ids = [self.point_id(r) for r in rows]
        if len(set(ids)) != len(ids):
            raise GeometryError("repeated point in line text")
        line = self.span_line(ids[0], ids[1])
        if sorted(ids) != list(line.points):
            raise GeometryError("rows do not lie on a common line")
        return line
