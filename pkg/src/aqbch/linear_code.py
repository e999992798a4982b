"""Linear [n, k]_q codes held in canonical (reduced row-echelon) form."""

from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .errors import FieldMismatch, LengthMismatch
from .gf import FiniteField


def rref(field: FiniteField, matrix) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form over ``field``.

    Returns ``(R, rank, pivots)`` where ``R`` keeps only the nonzero rows.
    """
    M = field.array(matrix).copy()
    if M.ndim != 2:
        M = M.reshape(-1, M.shape[-1] if M.ndim else 0)
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        lead = int(M[r, c])
        if lead != 1:
            M[r] = field.vmul(field.inv(lead), M[r])
        others = np.flatnonzero(M[:, c])
        others = others[others != r]
        if others.size:
            if field.p == 2 and field.s == 1:
                M[others] ^= M[r]
            else:
                factors = M[others, c][:, None]
                M[others] = field.vsub(M[others], field.vmul(factors, M[r][None, :]))
        pivots.append(c)
        r += 1
    return M[:r], r, pivots


def nullspace(field: FiniteField, matrix, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : matrix @ x = 0}."""
    R, rank, pivots = rref(field, matrix)
    if n is None:
        n = R.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    out = np.zeros((len(free), n), dtype=field.dtype)
    for i, f in enumerate(free):
        out[i, f] = 1
        if rank:
            out[i, pivots] = field.vneg(R[:, f])
    return out


class LinearCode:
    """An [n, k]_q linear code; ``gen`` is the unique RREF generator matrix.

    Two codes are equal iff their fields and canonical generators agree.
    """

    def __init__(self, field: FiniteField, generator, n: int | None = None, name: str | None = None):
        G = np.asarray(generator)
        if G.ndim == 1:
            G = G.reshape(0 if G.size == 0 else 1, -1)
        if n is None:
            if G.shape[1] == 0 and G.shape[0] == 0:
                raise LengthMismatch("cannot infer length of an empty generator matrix")
            n = G.shape[1]
        if G.size == 0:
            G = np.zeros((0, n), dtype=field.dtype)
        if G.shape[1] != n:
            raise LengthMismatch(f"generator has {G.shape[1]} columns, expected {n}")
        R, k, pivots = rref(field, G)
        R.setflags(write=False)
        self.field = field
        self.n = n
        self.k = k
        self.gen = R
        self.pivots = tuple(pivots)
        self.name = name

    @property
    def q(self) -> int:
        return self.field.order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and other.field is self.field
            and other.n == self.n
            and np.array_equal(other.gen, self.gen)
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.n, self.gen.tobytes()))

    def __repr__(self) -> str:
        label = f"[{self.n},{self.k}]_{self.q}"
        return f"LinearCode({self.name} {label})" if self.name else f"LinearCode({label})"

    @property
    def parity_check(self) -> np.ndarray:
        return dual(self).gen

    def encode(self, message) -> np.ndarray:
        m = self.field.array(message)
        acc = np.zeros(self.n, dtype=self.field.dtype)
        for c, row in zip(m, self.gen):
            if c:
                acc = self.field.vadd(acc, self.field.vmul(int(c), row))
        return acc

    def codewords(self) -> Iterator[np.ndarray]:
        """All q^k codewords, message-lexicographic order (small codes only)."""
        for msg in itertools.product(range(self.q), repeat=self.k):
            yield self.encode(msg)

    def syndrome(self, vectors) -> np.ndarray:
        """H @ v for each row v of ``vectors``."""
        H = self.parity_check
        V = self.field.array(vectors)
        if V.ndim == 1:
            V = V[None, :]
        out = np.zeros((V.shape[0], H.shape[0]), dtype=self.field.dtype)
        for j in range(self.n):
            col = H[:, j]
            out = self.field.vadd(out, self.field.vmul(V[:, j][:, None], col[None, :]))
        return out

    def __contains__(self, vector) -> bool:
        return not np.any(self.syndrome(vector))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "generator": [[int(x) for x in row] for row in self.gen],
        }

    def with_name(self, name: str) -> LinearCode:
        other = object.__new__(LinearCode)
        other.__dict__.update(self.__dict__)
        other.name = name
        return other


def _same_space(C: LinearCode, D: LinearCode) -> None:
    if C.field is not D.field:
        raise FieldMismatch(f"{C.field} vs {D.field}")
    if C.n != D.n:
        raise LengthMismatch(f"lengths {C.n} and {D.n} differ")


def dual(C: LinearCode) -> LinearCode:
    """Euclidean dual {x : x . c = 0 for all c in C}."""
    name = f"{C.name}^perp" if C.name else None
    if C.k == 0:
        return LinearCode(C.field, np.eye(C.n, dtype=C.field.dtype), C.n, name=name)
    return LinearCode(C.field, nullspace(C.field, C.gen, C.n), C.n, name=name)


def contains(C: LinearCode, D: LinearCode) -> bool:
    """True iff D is a subcode of C."""
    _same_space(C, D)
    if D.k > C.k:
        return False
    if D.k == 0:
        return True
    _, rank, _ = rref(C.field, np.vstack([C.gen, D.gen]))
    return rank == C.k


def non_member_row(C: LinearCode, D: LinearCode) -> np.ndarray | None:
    """A generator row of D that is not in C, or None if D is a subcode of C."""
    _same_space(C, D)
    for row in D.gen:
        if row not in C:
            return row
    return None


def code_sum(C: LinearCode, D: LinearCode) -> LinearCode:
    _same_space(C, D)
    return LinearCode(C.field, np.vstack([C.gen, D.gen]), C.n)


def intersection(C: LinearCode, D: LinearCode) -> LinearCode:
    """C intersect D, computed as the dual of dual(C) + dual(D)."""
    _same_space(C, D)
    return dual(code_sum(dual(C), dual(D)))


def complement_basis(C: LinearCode, sub: LinearCode) -> np.ndarray:
    """Rows completing a basis of ``sub`` (a subcode of C) to a basis of C."""
    _same_space(C, sub)
    F = C.field
    if sub.k == 0:
        return C.gen.copy()
    S = sub.gen
    piv = list(sub.pivots)
    resid = C.gen.copy()
    # clear the subcode's pivot columns; what remains spans C modulo sub
    for i, c in enumerate(piv):
        f = resid[:, c].copy()
        nz = np.flatnonzero(f)
        if nz.size:
            resid[nz] = F.vsub(resid[nz], F.vmul(f[nz][:, None], S[i][None, :]))
    R, rank, _ = rref(F, resid)
    if rank != C.k - sub.k:
        raise LengthMismatch("sub is not a subcode of C")
    return R
