"""Arithmetic in finite fields GF(p^s).

Elements are encoded as integers: the polynomial-basis coefficient vector
``(c_0, ..., c_{s-1})`` over GF(p) is stored as ``sum(c_i * p**i)``.  With this
encoding 0 is the additive and 1 the multiplicative identity, and ordering
codewords lexicographically by their integer symbols is well defined.

Fields are cached per ``(p, s)`` so that equal fields are the same object.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import (
    CoefficientNotInBaseField,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotCoprime,
    NotPrime,
    PreconditionError,
    ZeroElement,
)

DEFAULT_MAX_ORDER = 2**20
TABLE_MAX_ORDER = 256  # full q x q add/mul tables below this size


def is_prime(p: int) -> bool:
    """Deterministic primality test (Miller-Rabin, exact for p < 3.3e24)."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for b in small:
        if p % b == 0:
            return p == b
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**s``; raises :class:`NotPrime` if q is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = ps[0]
    s = round(math.log(q, p))
    if p**s != q:
        raise NotPrime(f"{q} is not a prime power")
    return p, s


def ord_n_q(n: int, q: int) -> int:
    """Multiplicative order of q modulo n."""
    if n < 1:
        raise PreconditionError("n must be positive")
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    if n == 1:
        return 1
    m, x = 1, q % n
    while x != 1:
        x = x * q % n
        m += 1
    return m


# --- polynomials over the prime field, as little-endian int lists -------------

def _strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _strip(out)


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % p
        _strip(a)
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _strip(out)


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    s = len(f) - 1
    if s < 1:
        return False
    if s == 1:
        return True
    x = [0, 1]
    for r in prime_factors(s):
        h = _ppowmod(x, p ** (s // r), f, p)
        if len(_pgcd(f, _psub(h, x, p), p)) != 1:
            return False
    return not _psub(_ppowmod(x, p**s, f, p), x, p)


def _digits(v: int, p: int, s: int) -> list[int]:
    out = []
    for _ in range(s):
        v, d = divmod(v, p)
        out.append(d)
    return out


def _undigits(d: list[int], p: int) -> int:
    v = 0
    for c in reversed(d):
        v = v * p + c
    return v


def _smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    for tail in range(p**s):
        f = _digits(tail, p, s) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FiniteField:
    """The field GF(p^s) with a fixed modulus and primitive element.

    Use :func:`field_create` or :func:`field_of_order` rather than the
    constructor; they choose the lexicographically smallest irreducible
    modulus and primitive element and cache the result.
    """

    def __init__(self, p: int, s: int, modulus: tuple[int, ...]):
        self.p = p
        self.s = s
        self.order = p**s
        self.modulus = modulus
        self.dtype = np.uint8 if self.order <= 256 else np.int64
        self._mod_list = list(modulus)
        self.primitive = self._find_primitive()
        q = self.order
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, self.primitive)
        exp[q - 1:] = exp[: q - 1]
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        if q <= TABLE_MAX_ORDER:
            idx = np.arange(q)
            a, b = np.meshgrid(idx, idx, indexing="ij")
            self._add_table = self._digit_add(a, b).astype(self.dtype)
            self._mul_table = self._log_mul(a, b).astype(self.dtype)
            self._neg_table = self._digit_neg(idx).astype(self.dtype)
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
            self._inv_table = inv.astype(self.dtype)
        else:
            self._add_table = None

    # -- construction helpers -------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        if p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> s:
                    a ^= _undigits(self._mod_list, 2)
            return r
        prod = _pmul(_strip(_digits(a, p, s)), _strip(_digits(b, p, s)), p)
        return _undigits(_pmod(prod, self._mod_list, p), p)

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _find_primitive(self) -> int:
        q = self.order
        if q == 2:
            return 1
        exps = [(q - 1) // r for r in prime_factors(q - 1)]
        for g in range(1, q):
            if all(self._slow_pow(g, e) != 1 for e in exps):
                return g
        raise AssertionError("no primitive element found")  # unreachable

    # -- vectorised arithmetic on integer encodings -----------------------------

    def _digit_add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.s == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        w = 1
        for _ in range(self.s):
            out += ((a // w % self.p + b // w % self.p) % self.p) * w
            w *= self.p
        return out

    def _digit_neg(self, a):
        if self.p == 2:
            return np.asarray(a)
        if self.s == 1:
            return (-np.asarray(a)) % self.p
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros_like(a)
        w = 1
        for _ in range(self.s):
            out += ((-(a // w % self.p)) % self.p) * w
            w *= self.p
        return out

    def _log_mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self._log[a], self._log[b]
        out = self._exp[(la + lb) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vadd(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._digit_add(a, b)

    def vneg(self, a) -> np.ndarray:
        if self.p == 2:
            return np.asarray(a)
        if self._add_table is not None:
            return self._neg_table[a]
        return self._digit_neg(a)

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        if self._add_table is not None:
            return self._mul_table[a, b]
        return self._log_mul(a, b)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        if self._add_table is not None:
            return self._inv_table[a]
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def array(self, values) -> np.ndarray:
        arr = np.asarray(values, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.order):
            raise FieldMismatch(f"values outside GF({self.order})")
        return arr.astype(self.dtype)

    # -- scalar arithmetic on integer encodings --------------------------------

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise FieldMismatch(f"{a} is not an element of GF({self.order})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.s == 1:
            return (a + b) % self.p
        return int(self.vadd(a, b))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.s == 1:
            return -a % self.p
        return int(self.vneg(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp_list[(self.order - 1 - self._log_list[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete logarithm to the base of the primitive element."""
        if a == 0:
            raise ZeroElement("log of zero")
        return self._log_list[a]

    def exp(self, i: int) -> int:
        return self._exp_list[i % (self.order - 1)]

    def order_of(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("zero has no multiplicative order")
        return (self.order - 1) // math.gcd(self._log_list[a], self.order - 1)

    # -- element-level API -------------------------------------------------------

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, self._check(int(value)))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self.primitive)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.order):
            yield FieldElement(self, v)

    @property
    def modulus_poly(self):
        from .poly import Poly

        return Poly(prime_subfield(self.p), self.modulus)

    def __repr__(self) -> str:
        return f"GF({self.order})"

    def __reduce__(self):
        return field_create, (self.p, self.s)


@dataclass(frozen=True)
class FieldElement:
    owner: FiniteField
    value: int

    @property
    def rep(self) -> tuple[int, ...]:
        """Coefficient vector over GF(p), lowest degree first."""
        return tuple(_digits(self.value, self.owner.p, self.owner.s))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.owner is not self.owner:
                raise FieldMismatch(f"{self.owner} vs {other.owner}")
            return other.value
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.sub(self.value, b))

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.div(self.value, b))

    def __pow__(self, e: int):
        return FieldElement(self.owner, self.owner.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.owner, self.owner.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.owner!r}({self.value})"


def element_order(a: FieldElement) -> int:
    """Smallest t >= 1 with a**t == 1."""
    return a.owner.order_of(a.value)


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, s: int) -> FiniteField:
    return FiniteField(p, s, _smallest_irreducible(p, s))


def field_create(p: int, s: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> FiniteField:
    """GF(p^s) with the lexicographically smallest irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if s < 1:
        raise PreconditionError("extension degree must be positive")
    if p**s > max_order:
        raise FieldTooLarge(f"GF({p}^{s}) exceeds the size cap {max_order}")
    return _cached_field(p, s)


def field_of_order(q: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteField:
    p, s = prime_power(q)
    return field_create(p, s, max_order)


def prime_subfield(p: int) -> FiniteField:
    return field_create(p, 1)


class FieldEmbedding:
    """Embedding of ``base`` = GF(q) into ``ext`` = GF(q^m).

    The image of the base field's generator ``x`` is the smallest root of the
    base modulus lying in ext; coefficients map linearly from there.
    """

    def __init__(self, base: FiniteField, ext: FiniteField):
        if base.p != ext.p or ext.s % base.s:
            raise FieldMismatch(f"{base} is not a subfield of {ext}")
        self.base = base
        self.ext = ext
        if base.s == 1:
            theta = 0
        else:
            step = (ext.order - 1) // (base.order - 1)
            sub = sorted(ext.exp(j * step) for j in range(base.order - 1))
            theta = next(t for t in sub if self._eval_modulus(t) == 0)
        self.theta = theta
        powers = [1]
        for _ in range(base.s - 1):
            powers.append(ext.mul(powers[-1], theta))
        table = []
        for v in range(base.order):
            acc = 0
            for c, pw in zip(_digits(v, base.p, base.s), powers):
                acc = ext.add(acc, ext.mul(c, pw))
            table.append(acc)
        self._to_ext = table
        self._to_base = {e: v for v, e in enumerate(table)}

    def _eval_modulus(self, t: int) -> int:
        acc = 0
        for c in reversed(self.base.modulus):
            acc = self.ext.add(self.ext.mul(acc, t), c)
        return acc

    def to_ext(self, v: int) -> int:
        return self._to_ext[v]

    def to_base(self, e: int) -> int:
        try:
            return self._to_base[e]
        except KeyError:
            raise CoefficientNotInBaseField(f"{e} of {self.ext} is not in {self.base}") from None


@functools.lru_cache(maxsize=None)
def embedding(base: FiniteField, ext: FiniteField) -> FieldEmbedding:
    return FieldEmbedding(base, ext)


def extension(base: FiniteField, m: int, max_order: int = DEFAULT_MAX_ORDER) -> tuple[FiniteField, FieldEmbedding]:
    """GF(q^m) together with the embedding of GF(q) into it."""
    ext = field_create(base.p, base.s * m, max_order)
    return ext, embedding(base, ext)
