"""Dense univariate polynomials over a :class:`~aqbch.gf.FiniteField`."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionByZero, FieldMismatch
from .gf import FieldElement, FiniteField, embedding


def _strip(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the integer-encoded coefficient of x^i.

    The zero polynomial has ``coeffs == ()`` and ``degree is None``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[int | FieldElement] = ()):
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.owner is not field:
                    raise FieldMismatch(f"coefficient from {c.owner}, expected {field}")
                c = c.value
            if not 0 <= c < field.order:
                raise FieldMismatch(f"{c} is not an element of {field}")
            vals.append(int(c))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _strip(vals))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, field: FiniteField) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FiniteField, d: int, c: int = 1) -> Poly:
        return cls(field, [0] * d + [c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coeffs)

    def _same(self, other: Poly) -> None:
        if other.field is not self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> Poly:
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scale(self, c: int) -> Poly:
        return Poly(self.field, [self.field.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._same(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lead = F.inv(b[-1])
        quot = [0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            c = F.mul(r[-1], inv_lead)
            shift = len(r) - 1 - db
            quot[shift] = c
            for i, y in enumerate(b):
                r[shift + i] = F.sub(r[shift + i], F.mul(c, y))
            while r and r[-1] == 0:
                r.pop()
        return Poly(F, quot), Poly(F, r)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def __call__(self, x: int | FieldElement) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.owner is not self.field:
                raise FieldMismatch(f"{x.owner} vs {self.field}")
            x = x.value
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return FieldElement(F, acc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and other.field is self.field and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {str(self)!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    a._same(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def x_n_minus_1(field: FiniteField, n: int) -> Poly:
    return Poly(field, [field.neg(1)] + [0] * (n - 1) + [1])


def from_roots(field: FiniteField, roots: Sequence[int | FieldElement]) -> Poly:
    """Monic polynomial whose roots are exactly ``roots`` (with multiplicity)."""
    g = Poly(field, (1,))
    for r in roots:
        if isinstance(r, FieldElement):
            if r.owner is not field:
                raise FieldMismatch(f"root from {r.owner}, expected {field}")
            r = r.value
        g = g * Poly(field, (field.neg(r), 1))
    return g


def minimal_polynomial(element: FieldElement, base: FiniteField) -> Poly:
    """Minimal polynomial over ``base`` of an element of an extension of it.

    Computed as the product of (x - element^(q^i)) over the conjugates, then
    mapped coefficient-wise into ``base``.
    """
    ext = element.owner
    emb = embedding(base, ext)
    q = base.order
    conj = []
    y = element.value
    while y not in conj:
        conj.append(y)
        y = ext.pow(y, q)
    g = from_roots(ext, conj)
    return Poly(base, [emb.to_base(c) for c in g.coeffs])


def map_to_base(g: Poly, base: FiniteField) -> Poly:
    emb = embedding(base, g.field)
    return Poly(base, [emb.to_base(c) for c in g.coeffs])
