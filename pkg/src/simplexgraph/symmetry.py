"""Monomial semilinear maps of GF(q)^n and their action on simplex lines.

A ``MonomialMap`` with permutation ``sigma``, scalars ``s`` and Frobenius
exponent ``j`` sends ``x`` to the vector ``y`` with

    y[sigma[i]] = s[i] * x[i] ** (p ** j)

i.e. Frobenius first, then scale, then permute: ``e_i -> s[i] e_sigma(i)``
on basis vectors, twisted by the field automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Optional, Sequence

import numpy as np

from .field import FieldTable
from .simplex import SimplexUniverse

Perm = tuple[int, ...]


def perm_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Permutation of ``range(n)`` from 1-based cycles, e.g. ``[(2, 5), (3, 4)]``."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a - 1] = b - 1
    return tuple(img)


def perm_cycles(perm: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles of a 0-based permutation, 1-based, each starting at its least element."""
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def perm_compose(a: Perm, b: Perm) -> Perm:
    """``a ∘ b`` (apply ``b`` first)."""
    return tuple(a[x] for x in b)


def perm_inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def perm_is_even(a: Perm) -> bool:
    return sum(len(c) - 1 for c in perm_cycles(a)) % 2 == 0


@dataclass(frozen=True)
class MonomialMap:
    sigma: Perm
    scalars: tuple[int, ...]
    frob: int = 0

    @classmethod
    def identity(cls, n: int) -> "MonomialMap":
        return cls(tuple(range(n)), (1,) * n, 0)

    @classmethod
    def diag_perm(cls, diag: Sequence[int], sigma: Perm, frob: int = 0) -> "MonomialMap":
        """``d(diag) p_sigma``: permute basis vectors by ``sigma``, then scale by ``diag``."""
        return cls(tuple(sigma), tuple(diag[sigma[i]] for i in range(len(sigma))), frob)

    @classmethod
    def from_coordinates(cls, sources: Sequence[int], coeffs: Sequence[int], frob: int = 0) -> "MonomialMap":
        """Map with output coordinate ``j`` equal to ``coeffs[j] * frob(x[sources[j]])``."""
        n = len(sources)
        sigma, scalars = [0] * n, [0] * n
        for j, (src, c) in enumerate(zip(sources, coeffs)):
            sigma[src] = j
            scalars[src] = c
        return cls(tuple(sigma), tuple(scalars), frob)

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def is_linear(self) -> bool:
        return self.frob == 0

    def apply(self, f: FieldTable, v) -> tuple[int, ...]:
        y = [0] * self.n
        fr = f.frob_table[self.frob]
        for i, x in enumerate(v):
            y[self.sigma[i]] = f.mul_table[self.scalars[i]][fr[x]]
        return tuple(y)

    def compose(self, f: FieldTable, other: "MonomialMap") -> "MonomialMap":
        """``self ∘ other``."""
        fr = f.frob_table[self.frob]
        scalars = tuple(
            f.mul(self.scalars[other.sigma[i]], fr[other.scalars[i]]) for i in range(self.n)
        )
        return MonomialMap(perm_compose(self.sigma, other.sigma), scalars, (self.frob + other.frob) % f.m)

    def inverse(self, f: FieldTable) -> "MonomialMap":
        frob = (-self.frob) % f.m
        fr = f.frob_table[frob]
        scalars = [0] * self.n
        for i in range(self.n):
            scalars[self.sigma[i]] = f.inv(fr[self.scalars[i]])
        return MonomialMap(perm_inverse(self.sigma), tuple(scalars), frob)

    def projective(self, f: FieldTable) -> "MonomialMap":
        """Canonical representative modulo global scalars: the scalar on ``e_1`` becomes 1."""
        s = f.inv(self.scalars[0])
        return MonomialMap(self.sigma, tuple(f.mul(s, x) for x in self.scalars), self.frob)

    def text(self, f: FieldTable) -> str:
        cycles = "".join("(" + ",".join(map(str, c)) + ")" for c in perm_cycles(self.sigma)) or "()"
        scalars = ",".join(f.format_elem(x) for x in self.scalars)
        return f"frob={self.frob}; perm={cycles}; scalars=[{scalars}]"


def monomial_group_order(f: FieldTable, n: int) -> int:
    return factorial(n) * (f.q - 1) ** n * f.m


def enumerate_monomial_group(f: FieldTable, n: int, max_size: int = 200_000) -> list[MonomialMap]:
    """Every monomial semilinear automorphism of GF(q)^n."""
    if monomial_group_order(f, n) > max_size:
        raise ValueError(f"monomial group of GF({f.q})^{n} exceeds {max_size} elements")
    return [
        MonomialMap(sigma, scalars, j)
        for j in range(f.m)
        for sigma in permutations(range(n))
        for scalars in product(f.nonzero, repeat=n)
    ]


def projective_monomial_group(f: FieldTable, n: int) -> list[MonomialMap]:
    """One canonical representative per projective transformation (scalar on ``e_1`` fixed to 1)."""
    return [
        MonomialMap(sigma, (1,) + rest, j)
        for j in range(f.m)
        for sigma in permutations(range(n))
        for rest in product(f.nonzero, repeat=n - 1)
    ]


def point_permutations(u: SimplexUniverse, maps: Sequence[MonomialMap], chunk: int = 2048) -> np.ndarray:
    """Row ``e`` is the permutation of all projective points induced by ``maps[e]``."""
    f, space = u.field, u.space
    out = np.empty((len(maps), len(space)), dtype=np.int64)
    frobbed = [f.np_frob[j][space.np_reps] for j in range(f.m)]
    w = space.np_weights
    for start in range(0, len(maps), chunk):
        block = maps[start : start + chunk]
        for j in range(f.m):
            idx = [k for k, mp in enumerate(block) if mp.frob == j]
            if not idx:
                continue
            scal = np.array([block[k].scalars for k in idx], dtype=np.int64)
            wperm = w[np.array([block[k].sigma for k in idx], dtype=np.int64)]
            scaled = f.np_mul[scal[:, None, :], frobbed[j][None, :, :]]
            codes = np.einsum("bpi,bi->bp", scaled, wperm)
            out[start + np.array(idx)] = space.np_point_of_code[codes]
    return out


class LineLookup:
    """Maps a set of point ids to the simplex line it spans, vectorised."""

    def __init__(self, u: SimplexUniverse):
        self.u = u
        npts = len(u.space)
        self.sp_index = np.full(npts, -1, dtype=np.int64)
        self.sp_index[list(u.simplex_points)] = np.arange(len(u.simplex_points))
        s = len(u.simplex_points)
        self.pair_line = np.full((s, s), -1, dtype=np.int32)
        self.lines = np.array([line.points for line in u.lines], dtype=np.int64)
        for lid, pts in enumerate(self.lines):
            ix = self.sp_index[pts]
            self.pair_line[np.ix_(ix, ix)] = lid

    def line_images(self, point_perms: np.ndarray) -> np.ndarray:
        """``table[e, l]`` = image of line ``l`` under element ``e``, or -1 if it is not a simplex line."""
        img = point_perms[:, self.lines]  # (elements, lines, q+1)
        a = self.sp_index[img[..., 0]]
        b = self.sp_index[img[..., 1]]
        valid = (a >= 0) & (b >= 0)
        lid = np.where(valid, self.pair_line[np.maximum(a, 0), np.maximum(b, 0)], -1).astype(np.int64)
        same = (np.sort(img, axis=2) == self.lines[np.maximum(lid, 0)]).all(axis=2)
        return np.where((lid >= 0) & same, lid, -1)


@dataclass
class GroupOnLines:
    """Projective transformations together with their point and line actions."""

    elements: list[MonomialMap]
    point_table: np.ndarray
    line_table: np.ndarray

    def __len__(self) -> int:
        return len(self.elements)

    def subgroup(self, mask) -> "GroupOnLines":
        idx = np.flatnonzero(mask)
        return GroupOnLines(
            [self.elements[i] for i in idx], self.point_table[idx], self.line_table[idx]
        )

    def is_identity(self, e: int) -> bool:
        return bool((self.point_table[e] == np.arange(self.point_table.shape[1])).all())


def group_on_lines(u: SimplexUniverse, maps: Sequence[MonomialMap], lookup: Optional[LineLookup] = None) -> GroupOnLines:
    pts = point_permutations(u, maps)
    lookup = lookup or LineLookup(u)
    return GroupOnLines(list(maps), pts, lookup.line_images(pts))


def full_projective_group(u: SimplexUniverse) -> GroupOnLines:
    return group_on_lines(u, projective_monomial_group(u.field, u.n))


def stabilizer_of_line(u: SimplexUniverse, lid: int, group: Optional[GroupOnLines] = None) -> GroupOnLines:
    """All projective monomial transformations fixing line ``lid`` setwise."""
    if group is None:
        maps = projective_monomial_group(u.field, u.n)
        pts = point_permutations(u, maps)
        line = np.array(u.lines[lid].points)
        keep = (np.sort(pts[:, line], axis=1) == line).all(axis=1)
        idx = np.flatnonzero(keep)
        maps = [maps[i] for i in idx]
        return GroupOnLines(maps, pts[idx], LineLookup(u).line_images(pts[idx]))
    return group.subgroup(group.line_table[:, lid] == lid)


def setwise_stabilizer(group: GroupOnLines, line_set: Iterable[int]) -> GroupOnLines:
    target = sorted(set(line_set))
    images = np.sort(group.line_table[:, target], axis=1)
    return group.subgroup((images == np.array(target)).all(axis=1))


def orbits(group: GroupOnLines, line_ids: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Orbit partition of ``line_ids`` (default: all lines), each orbit sorted, ordered by least member."""
    ids = sorted(line_ids) if line_ids is not None else list(range(group.line_table.shape[1]))
    assigned: set[int] = set()
    out = []
    for lid in ids:
        if lid in assigned:
            continue
        orb = sorted(set(group.line_table[:, lid].tolist()))
        assigned.update(orb)
        out.append(orb)
    return out


def point_action_on_line(u: SimplexUniverse, group: GroupOnLines, lid: int) -> list[Perm]:
    """Permutation of row positions (zero coordinates) of line ``lid`` for each element fixing it."""
    rows = u.line_rows(lid)
    pos = {p: i for i, p in enumerate(rows)}
    return [tuple(pos[int(group.point_table[e, p])] for p in rows) for e in range(len(group))]


def action_on_set(group: GroupOnLines, members: Sequence[int]) -> list[Perm]:
    pos = {m: i for i, m in enumerate(members)}
    return [tuple(pos[int(group.line_table[e, m])] for m in members) for e in range(len(group))]


def check_sharply_3_transitive(group: GroupOnLines, six: Sequence[int]) -> bool:
    """The action on ordered triples of distinct members of ``six`` is regular."""
    k = len(six)
    if any(set(p) != set(range(k)) for p in action_on_set(group, six)):
        return False
    triples = {p[:3] for p in action_on_set(group, six)}
    n_triples = k * (k - 1) * (k - 2)
    return len(group) == n_triples and len(triples) == n_triples


def triple_stabilizer_size(group: GroupOnLines, six: Sequence[int]) -> int:
    return sum(1 for p in action_on_set(group, six) if p[:3] == (0, 1, 2))


def action_is_well_defined(u: SimplexUniverse, group: GroupOnLines, edges: np.ndarray) -> bool:
    """Simplex lines go to simplex lines bijectively and adjacency is preserved."""
    table = group.line_table
    nlines = table.shape[1]
    if (table < 0).any():
        return False
    if not (np.sort(table, axis=1) == np.arange(nlines)).all():
        return False
    adj = np.zeros((nlines, nlines), dtype=bool)
    adj[edges[:, 0], edges[:, 1]] = True
    adj[edges[:, 1], edges[:, 0]] = True
    return bool(adj[table[:, edges[:, 0]], table[:, edges[:, 1]]].all())
