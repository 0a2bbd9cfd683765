"""Table-driven arithmetic in small finite fields GF(p^m), p^m <= 25.

Elements are integer codes in ``range(q)``.  For an extension field the code
of ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` is ``sum(c_i * p**i)``, so in
GF(4) (modulus x^2 + x + 1) the codes are 0, 1, alpha = 2, alpha^2 = 3 and
addition is XOR of the codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations_with_replacement

import numpy as np

MAX_ORDER = 25

# Monic moduli, coefficients low degree first.  All are primitive polynomials,
# so the class of x generates the multiplicative group.
_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (3, 2): (2, 2, 1),  # x^2 + 2x + 2
    (5, 2): (2, 4, 1),  # x^2 + 4x + 2
}

_GF4_SYMBOLS = "01ab"
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``(p, m)`` with ``q == p**m``; raise if ``q`` is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1 or not is_prime(p):
                break
            return p, m
    raise FieldError(f"{q} is not a prime power")


@dataclass(frozen=True, eq=False)
class FieldTable:
    p: int
    m: int
    q: int
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    neg_table: tuple[int, ...]
    inv_table: tuple[int, ...]  # inv_table[0] is the sentinel -1, never returned
    frob_table: tuple[tuple[int, ...], ...]
    primitive: int
    modulus: tuple[int, ...] = dc_field(default=())

    def __repr__(self) -> str:
        return f"FieldTable(GF({self.q}))"

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def nonzero(self) -> range:
        return range(1, self.q)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative inverse")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_table[a][self.inv(b)]

    def frobenius(self, a: int, j: int) -> int:
        """Return ``a ** (p ** j)`` for ``0 <= j < m``."""
        if not 0 <= j < self.m:
            raise FieldError(f"Frobenius exponent {j} outside [0, {self.m})")
        return self.frob_table[j][a]

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul_table[r][a]
            a = self.mul_table[a][a]
            e >>= 1
        return r

    def alpha_power(self, e: int) -> int:
        return self.power(self.primitive, e % (self.q - 1))

    def order_of(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul_table[x][a]
            k += 1
        return k

    def sum(self, values) -> int:
        s = 0
        for v in values:
            s = self.add_table[s][v]
        return s

    # text encoding

    def format_elem(self, a: int) -> str:
        if self.q == 4:
            return _GF4_SYMBOLS[a]
        return _DIGITS[a]

    def parse_elem(self, ch: str) -> int:
        alphabet = _GF4_SYMBOLS if self.q == 4 else _DIGITS[: self.q]
        idx = alphabet.find(ch)
        if idx < 0 or len(ch) != 1:
            raise FieldError(f"{ch!r} is not an element symbol of GF({self.q})")
        return idx

    def format_vector(self, v) -> str:
        return "".join(self.format_elem(a) for a in v)

    def parse_vector(self, s: str) -> tuple[int, ...]:
        return tuple(self.parse_elem(ch) for ch in s)

    # numpy views for vectorised inner loops

    @cached_property
    def np_add(self) -> np.ndarray:
        return np.array(self.add_table, dtype=np.int64)

    @cached_property
    def np_mul(self) -> np.ndarray:
        return np.array(self.mul_table, dtype=np.int64)

    @cached_property
    def np_inv(self) -> np.ndarray:
        inv = np.array(self.inv_table, dtype=np.int64)
        inv[0] = 0
        return inv

    @cached_property
    def np_frob(self) -> np.ndarray:
        return np.array(self.frob_table, dtype=np.int64)


def _poly_mulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce with the monic modulus, highest degree first
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            for k in range(m + 1):
                prod[d - m + k] = (prod[d - m + k] - c * modulus[k]) % p
    return prod[:m]


def build_field(p: int, m: int = 1) -> FieldTable:
    """Build the arithmetic tables of GF(p^m).

    Extension fields use the fixed moduli in ``_MODULI`` so that element codes
    are stable across runs.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1 or p**m > MAX_ORDER:
        raise FieldError(f"GF({p}^{m}) is outside the supported range (order <= {MAX_ORDER})")
    q = p**m

    if m == 1:
        modulus: tuple[int, ...] = ()
        add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    else:
        modulus = _MODULI[(p, m)]
        digits = [[(c // p**i) % p for i in range(m)] for c in range(q)]

        def code(ds) -> int:
            return sum(d * p**i for i, d in enumerate(ds))

        add = tuple(
            tuple(code([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q))
            for a in range(q)
        )
        mul = tuple(
            tuple(code(_poly_mulmod(digits[a], digits[b], modulus, p)) for b in range(q))
            for a in range(q)
        )

    neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
    inv = [-1] * q
    for a in range(1, q):
        hits = [b for b in range(1, q) if mul[a][b] == 1]
        if len(hits) != 1:
            raise FieldError(f"modulus for GF({q}) is not irreducible")
        inv[a] = hits[0]

    def power(a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = mul[r][a]
        return r

    frob = tuple(tuple(power(a, p**j) for a in range(q)) for j in range(m))

    def order(a: int) -> int:
        k, x = 1, a
        while x != 1:
            x = mul[x][a]
            k += 1
        return k

    primitive = next(a for a in range(1, q) if order(a) == q - 1)

    return FieldTable(
        p=p,
        m=m,
        q=q,
        add_table=add,
        mul_table=mul,
        neg_table=neg,
        inv_table=tuple(inv),
        frob_table=frob,
        primitive=primitive,
        modulus=modulus,
    )


_FIELD_CACHE: dict[int, FieldTable] = {}


def gf(q: int) -> FieldTable:
    """Cached ``build_field`` keyed by the field order."""
    if q not in _FIELD_CACHE:
        p, m = prime_power(q)
        _FIELD_CACHE[q] = build_field(p, m)
    return _FIELD_CACHE[q]


def zero_sum_multisets(f: FieldTable, size: int | None = None) -> list[tuple[int, ...]]:
    """All multisets of ``size`` (default ``q - 1``) nonzero elements summing to zero."""
    size = f.q - 1 if size is None else size
    return [c for c in combinations_with_replacement(f.nonzero, size) if f.sum(c) == 0]


def distinct_sum_property(f: FieldTable) -> bool:
    """True iff ``q - 1`` nonzero elements sum to zero exactly when they are mutually distinct.

    This holds for q = 3 and q = 4 only; the adjacency-hyperplane criterion
    relies on it.
    """
    size = f.q - 1
    for c in combinations_with_replacement(f.nonzero, size):
        distinct = len(set(c)) == size
        if (f.sum(c) == 0) != distinct:
            return False
    return True
