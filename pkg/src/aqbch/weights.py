"""Exhaustive minimum-weight computations.

Two exact strategies are available and ``kernel="auto"`` picks between them:

* message sweep: run over every message of C (outside the subcode being
  excluded), one representative per scalar multiple when q > 2.  Binary codes
  of length <= 64 are bit-packed, with a Gray-code and a plain
  linear-combination enumerator that must agree.
* weight ball: run over error patterns of weight 1, 2, ... and keep those
  with zero syndrome for C and nonzero syndrome for the excluded subcode.
  Stops at the first weight that yields a qualifying vector.

Both report the lexicographically smallest minimum-weight vector (scaled so
its first nonzero symbol is 1), so the result never depends on the strategy.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import TooLargeToEnumerate
from .gf import FiniteField
from .linear_code import LinearCode, _same_space, complement_basis, dual, intersection

INFINITY = math.inf
DEFAULT_CAP = 2**22
_BATCH = 1 << 20
_TABLE_ROWS = 1 << 14


@dataclass(frozen=True)
class WeightReport:
    min_weight: int | float
    witness: tuple[int, ...] | None
    enumerated: int
    method: str

    @property
    def is_infinite(self) -> bool:
        return self.min_weight == INFINITY

    def to_json(self) -> dict:
        return {
            "min_weight": "infinity" if self.is_infinite else int(self.min_weight),
            "witness": list(self.witness) if self.witness is not None else None,
            "enumerated": self.enumerated,
            "method": self.method,
        }


def message_count(q: int, k_outer: int, k_inner: int) -> int:
    """Vectors visited by the message sweep (one per projective class if q > 2)."""
    if k_outer == 0:
        return 0
    return (q**k_outer - 1) // (q - 1) * q**k_inner


class _Best:
    """Running (weight, lexicographically smallest normalised witness)."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.weight = INFINITY
        self.witness: np.ndarray | None = None

    def offer(self, weight: int, candidates: np.ndarray) -> None:
        if weight > self.weight:
            return
        cands = _normalise(self.field, candidates)
        order = np.lexsort(cands.T[::-1])
        best = cands[order[0]]
        if weight < self.weight or tuple(best.tolist()) < tuple(self.witness.tolist()):
            self.weight = weight
            self.witness = best.copy()

    def report(self, enumerated: int, method: str) -> WeightReport:
        if self.witness is None:
            return WeightReport(INFINITY, None, enumerated, method)
        return WeightReport(int(self.weight), tuple(int(x) for x in self.witness), enumerated, method)


def _normalise(field: FiniteField, vecs: np.ndarray) -> np.ndarray:
    if field.order == 2:
        return vecs
    first = np.argmax(vecs != 0, axis=1)
    lead = vecs[np.arange(len(vecs)), first]
    return field.vmul(field.vinv(lead)[:, None], vecs)


# --- binary bit-packed message sweep -----------------------------------------

def _pack(rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1]
    weights = np.array([1 << (n - 1 - j) for j in range(n)], dtype=np.uint64)
    return (rows.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64) if len(rows) else np.zeros(0, np.uint64)


def _unpack(word: int, n: int) -> np.ndarray:
    return np.array([(int(word) >> (n - 1 - j)) & 1 for j in range(n)], dtype=np.uint8)


def _combine(packed: np.ndarray, m: int) -> np.uint64:
    acc = 0
    j = 0
    while m:
        if m & 1:
            acc ^= int(packed[j])
        m >>= 1
        j += 1
    return np.uint64(acc)


def _binary_offer(best: _Best, words: np.ndarray, n: int) -> None:
    if not len(words):
        return
    w = np.bitwise_count(words)
    lo = int(w.min())
    if lo <= best.weight:
        smallest = words[w == lo].min()
        best.offer(lo, _unpack(smallest, n)[None, :])


def _sweep_binary_naive(packed: np.ndarray, k_inner: int, n: int, best: _Best) -> None:
    k = len(packed)
    a = min(k, 16)
    table = np.zeros(1, dtype=np.uint64)
    for j in range(a):
        table = np.concatenate([table, table ^ packed[j]])
    blocks = 1 << (k - a)
    first = (1 << k_inner) >> a
    per = max(1, _BATCH >> a)
    for b0 in range(first, blocks, per):
        bs = np.arange(b0, min(b0 + per, blocks))
        heads = np.array([_combine(packed, int(b) << a) for b in bs], dtype=np.uint64)
        words = (heads[:, None] ^ table[None, :]).ravel()
        if b0 << a < (1 << k_inner):
            msgs = (bs[:, None].astype(np.int64) << a) + np.arange(1 << a)[None, :]
            words = words[msgs.ravel() >= (1 << k_inner)]
        _binary_offer(best, words, n)


def _sweep_binary_gray(packed: np.ndarray, k_inner: int, n: int, best: _Best) -> None:
    k = len(packed)
    start, stop = 1 << k_inner, 1 << k
    for s in range(start, stop, _BATCH):
        e = min(s + _BATCH, stop)
        first = _combine(packed, s ^ (s >> 1))
        idx = np.arange(s + 1, e, dtype=np.int64)
        ctz = np.bitwise_count((idx & -idx) - 1).astype(np.int64)
        steps = np.concatenate([np.array([first], dtype=np.uint64), packed[ctz]])
        _binary_offer(best, np.bitwise_xor.accumulate(steps), n)


# --- generic message sweep -----------------------------------------------------

def _digits(z: np.ndarray, q: int, width: int) -> np.ndarray:
    out = np.empty((len(z), width), dtype=np.int64)
    for j in range(width):
        z, out[:, j] = np.divmod(z, q)
    return out


def _combos(field: FiniteField, digits: np.ndarray, rows: np.ndarray, n: int) -> np.ndarray:
    acc = np.zeros((len(digits), n), dtype=field.dtype)
    for j in range(rows.shape[0]):
        d = digits[:, j].astype(field.dtype)
        acc = field.vadd(acc, field.vmul(d[:, None], rows[j][None, :]))
    return acc


def _span(field: FiniteField, rows: np.ndarray, n: int) -> np.ndarray:
    words = np.zeros((1, n), dtype=field.dtype)
    for row in rows:
        mults = field.vmul(np.arange(field.order, dtype=field.dtype)[:, None], row[None, :])
        words = field.vadd(words[None, :, :], mults[:, None, :]).reshape(-1, n)
    return words


def _sweep_generic(field: FiniteField, outer: np.ndarray, inner: np.ndarray, n: int, best: _Best) -> None:
    q = field.order
    a = len(inner)
    while a and q**a > _TABLE_ROWS:
        a -= 1
    table = _span(field, inner[:a], n)
    inner_hi = inner[a:]
    per = max(1, (_BATCH * 4) // (len(table) * max(n, 1)))
    for t in range(len(outer)):
        free = np.vstack([outer[:t], inner_hi]) if t or len(inner_hi) else np.zeros((0, n), field.dtype)
        total = q ** len(free)
        for z0 in range(0, total, per):
            z = np.arange(z0, min(z0 + per, total), dtype=np.int64)
            heads = field.vadd(_combos(field, _digits(z, q, len(free)), free, n), outer[t][None, :])
            words = field.vadd(heads[:, None, :], table[None, :, :]).reshape(-1, n)
            w = np.count_nonzero(words, axis=1)
            lo = int(w.min())
            if lo <= best.weight:
                best.offer(lo, words[w == lo])


# --- weight-ball sweep -----------------------------------------------------------

def _ball_layer_size(n: int, w: int, q: int) -> int:
    return math.comb(n, w) * (q - 1) ** (w - 1)


def _combo_batches(n: int, w: int):
    it = itertools.combinations(range(n), w)
    while True:
        chunk = np.fromiter(itertools.chain.from_iterable(itertools.islice(it, _BATCH)), dtype=np.int64)
        if not chunk.size:
            return
        yield chunk.reshape(-1, w)


def _ball_sweep(C: LinearCode, I: LinearCode | None, budget: int, best: _Best) -> tuple[bool, int, int]:
    """Search weights 1, 2, ... while the running count stays within ``budget``.

    Returns ``(found, enumerated, next_weight)``; when nothing was found every
    weight below ``next_weight`` has been ruled out.
    """
    F, n, q = C.field, C.n, C.field.order
    HC = dual(C).gen
    HI = dual(I).gen if I is not None else np.zeros((0, n), F.dtype)
    rc, ri = HC.shape[0], HI.shape[0]
    enumerated = 0
    for w in range(1, n + 1):
        size = _ball_layer_size(n, w, q)
        if enumerated + size > budget:
            return False, enumerated, w
        enumerated += size
        hits: list[np.ndarray] = []
        if q == 2:
            pc = np.packbits(HC.T, axis=1) if rc else np.zeros((n, 0), np.uint8)
            pi = np.packbits(HI.T, axis=1) if ri else np.zeros((n, 0), np.uint8)
            for combos in _combo_batches(n, w):
                sc = np.bitwise_xor.reduce(pc[combos], axis=1) if rc else np.zeros((len(combos), 0), np.uint8)
                ok = ~sc.any(axis=1)
                if ri:
                    si = np.bitwise_xor.reduce(pi[combos[ok]], axis=1)
                    good = combos[ok][si.any(axis=1)]
                else:
                    good = combos[ok]
                if len(good):
                    vecs = np.zeros((len(good), n), dtype=F.dtype)
                    np.put_along_axis(vecs, good, 1, axis=1)
                    hits.append(vecs)
        else:
            cols = np.vstack([HC, HI]).T  # n x (rc + ri)
            scaled = F.vmul(np.arange(q, dtype=F.dtype)[:, None, None], cols[None, :, :])
            for combos in _combo_batches(n, w):
                for tail in itertools.product(range(1, q), repeat=w - 1):
                    vals = (1,) + tail
                    s = scaled[vals[0]][combos[:, 0]]
                    for t in range(1, w):
                        s = F.vadd(s, scaled[vals[t]][combos[:, t]])
                    ok = ~s[:, :rc].any(axis=1)
                    if ri:
                        ok &= s[:, rc:].any(axis=1)
                    good = combos[ok]
                    if len(good):
                        vecs = np.zeros((len(good), n), dtype=F.dtype)
                        np.put_along_axis(vecs, good, np.array(vals, dtype=F.dtype)[None, :].repeat(len(good), 0), axis=1)
                        hits.append(vecs)
        if hits:
            best.offer(w, np.vstack(hits))
            return True, enumerated, w
    return True, enumerated, n + 1


# --- public entry points -------------------------------------------------------

def _search(C: LinearCode, I: LinearCode | None, cap: int | None, kernel: str) -> WeightReport:
    cap = DEFAULT_CAP if cap is None else cap
    F, n, q = C.field, C.n, C.field.order
    inner = I.gen if I is not None else np.zeros((0, n), F.dtype)
    outer = complement_basis(C, I) if I is not None else C.gen
    best = _Best(F)
    if len(outer) == 0:
        return best.report(0, "exhaustive")
    count = message_count(q, len(outer), len(inner))

    if kernel in ("auto", "ball"):
        budget = min(cap, count) if kernel == "auto" else cap
        found, examined, reached = _ball_sweep(C, I, budget, best)
        if found:
            return best.report(examined, "exhaustive-ball")
        if kernel == "ball" or count > cap:
            raise TooLargeToEnumerate(max(count, examined), cap, lower_bound=reached)
        best = _Best(F)
    elif count > cap:
        raise TooLargeToEnumerate(count, cap)

    binary_packed = q == 2 and n <= 64
    if kernel in ("gray", "naive") and not binary_packed:
        raise ValueError(f"kernel {kernel!r} needs a binary code of length <= 64")
    if binary_packed and kernel != "generic":
        packed = _pack(np.vstack([inner, outer]))
        if kernel == "naive":
            _sweep_binary_naive(packed, len(inner), n, best)
        else:
            _sweep_binary_gray(packed, len(inner), n, best)
    else:
        _sweep_generic(F, outer, inner, n, best)
    return best.report(count, "exhaustive")


def min_weight(C: LinearCode, cap: int | None = None, kernel: str = "auto") -> WeightReport:
    """Minimum Hamming weight of the nonzero codewords of C.

    ``kernel`` is one of ``auto``, ``ball``, ``gray``, ``naive``, ``generic``.
    Raises :class:`TooLargeToEnumerate` beyond ``cap`` examined vectors.
    """
    C = getattr(C, "code", C)
    return _search(C, None, cap, kernel)


def relative_min_weight(C: LinearCode, D: LinearCode, cap: int | None = None, kernel: str = "auto") -> WeightReport:
    """Minimum weight over codewords of C that do not lie in D.

    Returns an infinite report when C is contained in D.
    """
    C = getattr(C, "code", C)
    D = getattr(D, "code", D)
    _same_space(C, D)
    return _search(C, intersection(C, D), cap, kernel)
