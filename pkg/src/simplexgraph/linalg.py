"""Row reduction over a FieldTable."""

from __future__ import annotations

from .field import FieldTable

Vector = tuple[int, ...]


def rref(f: FieldTable, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns ``(nonzero_rows, pivot_columns)``."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    add, mul = f.add_table, f.mul_table
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        s = f.inv(work[r][c])
        work[r] = [mul[s][x] for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                t = f.neg(work[i][c])
                work[i] = [add[x][mul[t][y]] for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(f: FieldTable, rows) -> int:
    return len(rref(f, rows)[1])


def in_span(f: FieldTable, v, rows) -> bool:
    rows = list(rows)
    return rank(f, rows + [v]) == rank(f, rows)


def nullspace(f: FieldTable, rows, ncols: int) -> list[Vector]:
    """Basis of ``{y : sum_j r_j y_j = 0 for every row r}``."""
    reduced, pivots = rref(f, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        y = [0] * ncols
        y[fc] = 1
        for row, pc in zip(reduced, pivots):
            y[pc] = f.neg(row[fc])
        basis.append(tuple(y))
    return basis


def intersection_dim(f: FieldTable, basis_a, basis_b) -> int:
    a, b = list(basis_a), list(basis_b)
    return rank(f, a) + rank(f, b) - rank(f, a + b)


def dot(f: FieldTable, u, v) -> int:
    s = 0
    for x, y in zip(u, v):
        s = f.add_table[s][f.mul_table[x][y]]
    return s
