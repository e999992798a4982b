"""Slow reference implementations used to cross-check the library.

Nothing here imports the library's arithmetic: field multiplication is
schoolbook polynomial multiplication modulo an explicit modulus, and weights
come from enumerating every message.
"""

from __future__ import annotations

import itertools
import math


class RefField:
    """GF(p^s) with elements encoded as sum(c_i p^i) and an explicit modulus."""

    def __init__(self, p: int, modulus: tuple[int, ...]):
        self.p = p
        self.s = len(modulus) - 1
        self.modulus = list(modulus)
        self.q = p**self.s

    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.s)]

    def undigits(self, d) -> int:
        return sum(c * self.p**i for i, c in enumerate(d))

    def add(self, a: int, b: int) -> int:
        return self.undigits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        return self.undigits([(-x) % self.p for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.s - 1)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % self.p
        lead_inv = pow(self.modulus[-1], -1, self.p)
        for top in range(len(prod) - 1, self.s - 1, -1):
            c = prod[top] * lead_inv % self.p
            if c:
                for i, m in enumerate(self.modulus):
                    prod[top - self.s + i] = (prod[top - self.s + i] - c * m) % self.p
        return self.undigits(prod[: self.s])

    def inv(self, a: int) -> int:
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError


def ref_field_for(F) -> RefField:
    return RefField(F.p, tuple(F.modulus))


def span(rf: RefField, rows: list[list[int]]):
    """Yield every codeword spanned by ``rows`` (with the message)."""
    n = len(rows[0]) if rows else 0
    for msg in itertools.product(range(rf.q), repeat=len(rows)):
        word = [0] * n
        for c, row in zip(msg, rows):
            if c:
                for j, x in enumerate(row):
                    if x:
                        word[j] = rf.add(word[j], rf.mul(c, x))
        yield msg, word


def brute_min_weight(rf: RefField, rows) -> int | float:
    best = math.inf
    for msg, word in span(rf, [list(map(int, r)) for r in rows]):
        if any(msg):
            best = min(best, sum(1 for x in word if x))
    return best


def in_span(rf: RefField, rows, vec) -> bool:
    """Membership by listing the whole span."""
    target = tuple(int(x) for x in vec)
    return any(tuple(w) == target for _, w in span(rf, [list(map(int, r)) for r in rows]))


def brute_relative_weight(rf: RefField, rows_c, rows_d) -> int | float:
    """min weight over span(rows_c) minus span(rows_d)."""
    d_words = {tuple(w) for _, w in span(rf, [list(map(int, r)) for r in rows_d])} if len(rows_d) else {
        tuple([0] * len(rows_c[0]))}
    best = math.inf
    for _, w in span(rf, [list(map(int, r)) for r in rows_c]):
        if tuple(w) not in d_words:
            best = min(best, sum(1 for x in w if x))
    return best


def brute_dual_dim(rf: RefField, rows, n: int) -> int:
    """Dimension of the dual by counting orthogonal vectors (tiny n only)."""
    rows = [list(map(int, r)) for r in rows]
    count = 0
    for v in itertools.product(range(rf.q), repeat=n):
        ok = True
        for r in rows:
            acc = 0
            for a, b in zip(r, v):
                if a and b:
                    acc = rf.add(acc, rf.mul(a, b))
            if acc:
                ok = False
                break
        count += ok
    return round(math.log(count, rf.q))


def cyclotomic_coset(x: int, n: int, q: int) -> set[int]:
    return {x * q**i % n for i in range(n)}


def mult_order(n: int, q: int) -> int:
    m, y = 1, q % n
    while y != 1 % n:
        y = y * q % n
        m += 1
    return m
