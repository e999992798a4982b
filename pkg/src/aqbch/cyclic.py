"""Cyclotomic cosets and cyclic codes: BCH, Reed-Solomon, and general defining sets.

A cyclic code of length n over GF(q) (gcd(n, q) = 1) is identified by its
defining set T, a union of q-cyclotomic cosets mod n: the code is the set of
c(x) with c(beta^j) = 0 for j in T, where beta is the fixed primitive n-th root
of unity ``gamma^((q^m - 1) / n)`` of GF(q^m), m = ord_n(q), and gamma the
field's primitive element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import DeltaOutOfRange, NotCoprime, NotCosetClosed, PreconditionError, PreconditionViolated
from .gf import FieldElement, FiniteField, extension, field_of_order, ord_n_q
from .linear_code import LinearCode
from .poly import Poly, minimal_polynomial, x_n_minus_1


def cyclotomic_coset(x: int, n: int, q: int) -> frozenset[int]:
    """S_x = {x q^i mod n : i >= 0}."""
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    x %= n
    out = {x}
    y = x * q % n
    while y != x:
        out.add(y)
        y = y * q % n
    return frozenset(out)


@lru_cache(maxsize=None)
def cyclotomic_cosets(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    """All cosets mod n as sorted tuples, ordered by their minimum element."""
    seen: set[int] = set()
    out = []
    for x in range(n):
        if x not in seen:
            c = cyclotomic_coset(x, n, q)
            seen |= c
            out.append(tuple(sorted(c)))
    return tuple(out)


@dataclass(frozen=True)
class DefiningSet:
    n: int
    q: int
    elements: frozenset[int]

    def __post_init__(self):
        if math.gcd(self.n, self.q) != 1:
            raise NotCoprime(f"gcd({self.n}, {self.q}) != 1")
        if any(not 0 <= t < self.n for t in self.elements):
            raise PreconditionError(f"defining set elements must lie in Z_{self.n}")
        for t in self.elements:
            if t * self.q % self.n not in self.elements:
                raise NotCosetClosed(f"{t * self.q % self.n} missing from the coset of {t}")

    @classmethod
    def from_cosets(cls, n: int, q: int, reps: Iterable[int]) -> DefiningSet:
        elems: set[int] = set()
        for x in reps:
            elems |= cyclotomic_coset(x, n, q)
        return cls(n, q, frozenset(elems))

    @property
    def cosets(self) -> tuple[int, ...]:
        """Coset representatives (minimum elements), ascending."""
        return tuple(c[0] for c in cyclotomic_cosets(self.n, self.q) if c[0] in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, t: int) -> bool:
        return t in self.elements

    def sorted(self) -> list[int]:
        return sorted(self.elements)

    def inverse(self) -> DefiningSet:
        """T^{-1} = {-t mod n}."""
        return DefiningSet(self.n, self.q, frozenset((-t) % self.n for t in self.elements))

    def __or__(self, other: DefiningSet) -> DefiningSet:
        return DefiningSet(self.n, self.q, self.elements | other.elements)

    def __and__(self, other: DefiningSet) -> DefiningSet:
        return DefiningSet(self.n, self.q, self.elements & other.elements)

    def __sub__(self, other: DefiningSet) -> DefiningSet:
        return DefiningSet(self.n, self.q, self.elements - other.elements)


def dual_defining_set(T: DefiningSet) -> DefiningSet:
    """Defining set of the Euclidean dual code: Z_n minus (-T)."""
    neg = {(-t) % T.n for t in T.elements}
    return DefiningSet(T.n, T.q, frozenset(range(T.n)) - neg)


def bch_bound(T: DefiningSet) -> int:
    """Lower bound on the distance of the cyclic code with defining set T.

    Longest run {b, b+s, ..., b+(l-1)s} inside T with gcd(s, n) = 1 gives
    d >= l + 1.
    """
    n = T.n
    if len(T) == n:
        return math.inf  # zero code
    best = 0
    for s in range(1, n):
        if math.gcd(s, n) != 1:
            continue
        for b in T.elements:
            if (b - s) % n in T.elements:
                continue  # not the start of a run
            ln, t = 0, b
            while t in T.elements and ln < n:
                ln += 1
                t = (t + s) % n
            best = max(best, ln)
    return best + 1


@dataclass(frozen=True, eq=False)
class CyclicCode:
    code: LinearCode
    gen_poly: Poly
    defining_set: DefiningSet
    designed_distance: int | None = None

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def q(self) -> int:
        return self.code.q

    @property
    def field(self) -> FiniteField:
        return self.code.field

    @property
    def name(self) -> str | None:
        return self.code.name

    def __eq__(self, other) -> bool:
        other_code = getattr(other, "code", other)
        return self.code == other_code

    def __hash__(self) -> int:
        return hash(self.code)

    def __repr__(self) -> str:
        return f"CyclicCode({self.name or ''} [{self.n},{self.k}]_{self.q})"

    def distance_lower_bound(self) -> int:
        return max(self.designed_distance or 1, bch_bound(self.defining_set))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "gen_poly": list(self.gen_poly.coeffs),
            "defining_set": list(self.defining_set.cosets),
            "designed_distance": self.designed_distance,
        }


def root_of_unity(n: int, q: int) -> FieldElement:
    """beta = gamma^((q^m - 1)/n) in GF(q^m), m = ord_n(q)."""
    base = field_of_order(q)
    m = ord_n_q(n, q)
    ext, _ = extension(base, m)
    return ext(ext.exp((ext.order - 1) // n))


def _generator_matrix(g: Poly, n: int) -> np.ndarray:
    k = n - g.degree
    G = np.zeros((k, n), dtype=g.field.dtype)
    for i in range(k):
        G[i, i : i + g.degree + 1] = g.coeffs
    return G


def cyclic_from_defining_set(n: int, q: int, T: DefiningSet | Iterable[int], designed_distance: int | None = None,
                             name: str | None = None) -> CyclicCode:
    """Cyclic code whose zeros are exactly {beta^j : j in T}."""
    if not isinstance(T, DefiningSet):
        T = DefiningSet(n, q, frozenset(int(t) % n for t in T))
    if (T.n, T.q) != (n, q):
        raise PreconditionError("defining set belongs to a different (n, q)")
    base = field_of_order(q)
    beta = root_of_unity(n, q)
    g = Poly(base, (1,))
    for rep in T.cosets:
        g = g * minimal_polynomial(beta**rep, base)
    if g.degree != len(T) or not (x_n_minus_1(base, n) % g).is_zero():
        raise AssertionError("generator polynomial does not divide x^n - 1")
    if len(T) == n:
        code = LinearCode(base, np.zeros((0, n), base.dtype), n, name=name)
    else:
        code = LinearCode(base, _generator_matrix(g, n), n, name=name)
    return CyclicCode(code, g, T, designed_distance)


def bch_defining_set(n: int, q: int, delta: int, b: int = 1) -> DefiningSet:
    return DefiningSet.from_cosets(n, q, range(b, b + delta - 1))


def bch_code(n: int, q: int, delta: int, b: int = 1) -> CyclicCode:
    """Narrow-sense (b = 1) BCH code of designed distance delta."""
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    if not 2 <= delta <= n:
        raise DeltaOutOfRange(f"designed distance {delta} outside [2, {n}]")
    T = bch_defining_set(n, q, delta, b)
    suffix = "" if b == 1 else f",b={b}"
    return cyclic_from_defining_set(n, q, T, designed_distance=delta, name=f"BCH({n},{q},{delta}{suffix})")


def rs_code(q: int, delta: int) -> CyclicCode:
    """Reed-Solomon code of length q - 1 with zeros alpha, ..., alpha^(delta-1)."""
    n = q - 1
    if not 2 <= delta <= n:
        raise DeltaOutOfRange(f"designed distance {delta} outside [2, {n}]")
    T = bch_defining_set(n, q, delta)
    return cyclic_from_defining_set(n, q, T, designed_distance=delta, name=f"RS({q},{delta})")


def cyclic_dual(C: CyclicCode) -> CyclicCode:
    name = f"{C.name}^perp" if C.name else None
    return cyclic_from_defining_set(C.n, C.q, dual_defining_set(C.defining_set), name=name)


def _ceil_term(delta: int, q: int) -> int:
    # ceil((delta - 1)(1 - 1/q)) in exact integers
    return (delta - 1) - (delta - 1) // q


def delta_max(n: int, q: int, m: int | None = None) -> int:
    """min{floor(n q^ceil(m/2) / (q^m - 1)), n}."""
    m = ord_n_q(n, q) if m is None else m
    return min(n * q ** ((m + 1) // 2) // (q**m - 1), n)


def delta_max_star(n: int, q: int, m: int | None = None) -> Fraction:
    """Upper end of the Euclidean dual-containing range of narrow-sense BCH codes."""
    m = ord_n_q(n, q) if m is None else m
    odd = 1 if m % 2 else 0
    return Fraction(n, q**m - 1) * (q ** ((m + 1) // 2) - 1 - (q - 2) * odd)


def in_length_range(n: int, q: int, m: int | None = None) -> bool:
    """q^floor(m/2) < n <= q^m - 1."""
    m = ord_n_q(n, q) if m is None else m
    return q ** (m // 2) < n <= q**m - 1


def bch_dimension_formula(n: int, q: int, delta: int, check_range: bool = True) -> int:
    """n - m * ceil((delta - 1)(1 - 1/q)) for narrow-sense BCH codes in range.

    With ``check_range=False`` the bare formula is returned without validating
    the range on which it is guaranteed to equal the true dimension.
    """
    m = ord_n_q(n, q)
    if not check_range:
        return n - m * _ceil_term(delta, q)
    if not in_length_range(n, q, m):
        raise PreconditionViolated(f"n={n} outside ({q}^{m // 2}, {q}^{m} - 1]")
    dm = delta_max(n, q, m)
    if not 2 <= delta <= dm:
        raise PreconditionViolated(f"delta={delta} outside [2, {dm}]")
    return n - m * _ceil_term(delta, q)
