"""Published parameter claims and their reproduction.

Each row is rebuilt from its parent codes and tagged MATCH, MISMATCH,
UNRESOLVED (the row contradicts itself or its parents cannot be built) or
LOWER-BOUND-ONLY (dimensions agree, distances only bounded).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable

from .cyclic import bch_code
from .errors import ParseError
from .linear_code import contains, dual
from .quantum import (
    AqecParams,
    SubsystemParams,
    asymmetric_subsystem,
    code_label,
    css_aqec,
    euclidean_subsystem,
)

MATCH, MISMATCH, UNRESOLVED, LOWER = "MATCH", "MISMATCH", "UNRESOLVED", "LOWER-BOUND-ONLY"

_SUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_CLAIM = re.compile(r"^\[\[(?P<body>[^\]]*)\]\](?:_?\{?(?P<q>\d+)\}?)?$")
_NUM = re.compile(r"^(?:>=|≥)?\d+$")


@dataclass(frozen=True)
class Claim:
    n: int
    k: int
    r: int | None
    d_z: int
    d_x: int
    q: int | None
    asymmetric: bool
    text: str

    def __str__(self) -> str:
        return self.text


def _int(tok: str, text: str) -> int:
    tok = tok.strip()
    if not _NUM.match(tok):
        raise ParseError(f"bad number {tok!r} in {text!r}")
    return int(tok.lstrip(">=≥"))


def parse_claim(text: str) -> Claim:
    """Parse ``[[n,k,d]]_q``, ``[[n,k,dz/dx]]_q``, ``[[n,k,r,d]]_q`` or ``[[n,k,r,dz/dx]]_q``."""
    s = text.strip().translate(_SUB).replace(" ", "")
    m = _CLAIM.match(s)
    if not m:
        raise ParseError(f"cannot parse claim {text!r}")
    parts = m["body"].split(",")
    if len(parts) not in (3, 4):
        raise ParseError(f"expected 3 or 4 fields in {text!r}")
    n, k = _int(parts[0], text), _int(parts[1], text)
    r = _int(parts[2], text) if len(parts) == 4 else None
    dist = parts[-1].split("/")
    if len(dist) == 1:
        dz = dx = _int(dist[0], text)
    elif len(dist) == 2:
        dz, dx = _int(dist[0], text), _int(dist[1], text)
    else:
        raise ParseError(f"bad distance field {parts[-1]!r} in {text!r}")
    q = int(m["q"]) if m["q"] else None
    return Claim(n, k, r, dz, dx, q, len(dist) == 2, text)


def compare(P: AqecParams | SubsystemParams, claim: Claim) -> tuple[str, list[dict]]:
    """MATCH, MISMATCH or LOWER-BOUND-ONLY, plus the list of disagreements."""
    diffs = []
    exact = {"n": P.n, "k": P.k}
    if claim.r is not None:
        exact["r"] = getattr(P, "r", 0)
    if claim.q is not None:
        exact["q"] = P.q
    for key, val in exact.items():
        if getattr(claim, key) != val:
            diffs.append({"field": key, "claimed": getattr(claim, key), "derived": val})
    symmetric = getattr(P, "symmetric", False) or not getattr(P, "asymmetric", True)
    pairs = [("d_x", P.d_x), ("d_z", P.d_x if symmetric else P.d_z)]
    bounded = False
    for key, dist in pairs:
        want = getattr(claim, key)
        if dist.exact:
            if dist.value != want:
                diffs.append({"field": key, "claimed": want, "derived": _num(dist.value),
                              "witness": list(dist.witness) if dist.witness else None})
        else:
            bounded = True
            if dist.value > want:
                diffs.append({"field": key, "claimed": want, "derived": f">={_num(dist.value)}"})
    if diffs:
        return MISMATCH, diffs
    return (LOWER if bounded else MATCH), []


def _num(v):
    return "infinity" if v == math.inf else int(v)


# --- parent code recipes ----------------------------------------------------------

@dataclass(frozen=True)
class Parent:
    """A classical code listed as [n, k, d]_q with a recipe to rebuild it."""

    n: int
    k: int
    d: int
    q: int
    build: Callable[[], object]
    recipe: str

    @property
    def text(self) -> str:
        return f"[{self.n},{self.k},{self.d}]_{self.q}"


def bch_parent(n: int, k: int, d: int, q: int = 2) -> Parent:
    return Parent(n, k, d, q, lambda: bch_code(n, q, d), f"BCH({n},{q},{d})")


def dual_bch_parent(n: int, k: int, d: int, delta: int, q: int = 2) -> Parent:
    def build():
        C = bch_code(n, q, delta)
        return dual(C.code).with_name(f"BCH({n},{q},{delta})^perp")
    return Parent(n, k, d, q, build, f"BCH({n},{q},{delta})^perp")


def _k(C) -> int:
    return getattr(C, "k")


def _narrow_sense_dims(n: int, q: int) -> dict[int, int]:
    """Dimension -> smallest designed distance for narrow-sense BCH codes of length n."""
    out: dict[int, int] = {}
    for delta in range(2, n + 1):
        out.setdefault(bch_code(n, q, delta).k, delta)
    return out


def _build_parent(p: Parent) -> tuple[object | None, str | None]:
    C = p.build()
    if _k(C) == p.k:
        return C, None
    dims = _narrow_sense_dims(p.n, p.q)
    note = f"{p.recipe} has k={_k(C)}, not {p.k}"
    if p.k not in dims:
        note += f"; no narrow-sense BCH code of length {p.n} over GF({p.q}) has dimension {p.k}"
    return None, note


# --- table1: asymmetric CSS codes from BCH pairs -----------------------------------

TABLE1 = [
    (bch_parent(15, 11, 3), bch_parent(15, 7, 5), "[[15,3,5/3]]_2"),
    (dual_bch_parent(15, 8, 4, 5), bch_parent(15, 7, 5), "[[15,0,5/4]]_2"),
    (bch_parent(31, 21, 5), bch_parent(31, 16, 7), "[[31,6,7/5]]_2"),
    (bch_parent(31, 26, 3), bch_parent(31, 16, 7), "[[31,11,7/3]]_2"),
    (bch_parent(31, 26, 3), bch_parent(31, 16, 7), "[[31,10,8/3]]_2"),
    (bch_parent(31, 26, 3), bch_parent(31, 11, 11), "[[31,6,11/3]]_2"),
    (bch_parent(31, 26, 3), bch_parent(31, 6, 15), "[[31,1,15/3]]_2"),
    (bch_parent(127, 113, 5), bch_parent(127, 78, 15), "[[127,64,15/5]]_2"),
    (bch_parent(127, 106, 7), bch_parent(127, 77, 27), "[[127,56,25/7]]_2"),
]


def _row_table1(p1: Parent, p2: Parent, text: str, cap: int | None) -> dict:
    claim = parse_claim(text)
    row = {"claim": text, "parents": [p1.text, p2.text], "notes": [], "mismatches": [], "derived": None}
    k_rows = p1.k + p2.k - p1.n
    if k_rows != claim.k:
        row["status"] = UNRESOLVED
        row["notes"].append(f"listed parents give k = {p1.k} + {p2.k} - {p1.n} = {k_rows}, claim has k = {claim.k}")
    C1, note1 = _build_parent(p1)
    C2, note2 = _build_parent(p2)
    for note in (note1, note2):
        if note:
            row["status"] = UNRESOLVED
            row["notes"].append(note)
    if C1 is None or C2 is None:
        built = [p.build() for p in (p1, p2)]
        row["counter_witness"] = {"field": "k", "claimed": claim.k,
                                  "derived": _k(built[0]) + _k(built[1]) - p1.n,
                                  "codes": [code_label(C) for C in built]}
        return row
    P = css_aqec(C1, C2, cap)
    row["derived"] = P.to_json()
    status, diffs = compare(P, claim)
    row["mismatches"] = diffs
    if row.get("status") == UNRESOLVED and P.k != claim.k:
        row["counter_witness"] = {"field": "k", "claimed": claim.k, "derived": P.k,
                                  "codes": [code_label(C1), code_label(C2)]}
    row.setdefault("status", status)
    return row


def reproduce_table1(cap: int | None = None) -> list[dict]:
    return [_row_table1(p1, p2, text, cap) for p1, p2, text in TABLE1]


# --- table2: Euclidean subsystem codes ----------------------------------------------

TABLE2 = [
    (bch_parent(15, 7, 5), "[[15,4,3,3]]_2", True),
    (bch_parent(15, 5, 7), "[[15,6,1,3]]_2", True),
    (bch_parent(31, 11, 11), "[[31,10,1,5]]_2", True),
    (bch_parent(31, 6, 15), "[[31,20,1,3]]_2", True),
    (bch_parent(63, 39, 9), "[[63,6,21,7]]_2", False),
    (bch_parent(63, 36, 11), "[[63,6,15,7]]_2", False),
    (bch_parent(63, 30, 13), "[[63,6,3,7]]_2", False),
    (bch_parent(63, 24, 15), "[[63,18,3,7]]_2", False),
    (bch_parent(63, 18, 21), "[[63,30,3,5]]_2", False),
    (bch_parent(63, 16, 23), "[[63,32,1,5]]_2", False),
    (bch_parent(63, 10, 27), "[[63,44,1,3]]_2", False),
    (bch_parent(63, 7, 31), "[[63,50,1,3]]_2", False),
    (bch_parent(15, 9, 5, 4), "[[15,2,5,3]]_4", True),
    (bch_parent(15, 8, 6, 4), "[[15,2,3,3]]_4", True),
    (bch_parent(15, 6, 7, 4), "[[15,4,1,3]]_4", True),
    (bch_parent(15, 4, 10, 4), "[[15,8,1,3]]_4", True),
    (bch_parent(31, 11, 11, 4), "[[31,10,1,5]]_4", True),
    (bch_parent(31, 6, 15, 4), "[[31,20,1,3]]_4", True),
    (bch_parent(63, 30, 15, 4), "[[63,12,9,7]]_4", False),
    (bch_parent(63, 27, 21, 4), "[[63,18,9,7]]_4", False),
    (bch_parent(63, 26, 22, 4), "[[63,18,7,7]]_4", False),
]


def _row_table2(p: Parent, text: str, enumerate_: bool, cap: int | None) -> dict:
    claim = parse_claim(text)
    row = {"claim": text, "parents": [p.text], "notes": [], "mismatches": [], "derived": None}
    C, note = _build_parent(p)
    if C is None:
        row["status"] = UNRESOLVED
        row["notes"].append(note)
        return row
    if not enumerate_:
        row["notes"].append("parameter-only row: distance is a BCH-bound lower bound")
    first, second = euclidean_subsystem(C, cap if enumerate_ else 0)
    best = None
    for variant in (first, second):
        status, diffs = compare(variant, claim)
        if best is None or (status != MISMATCH and best[1] == MISMATCH):
            best = (variant, status, diffs)
    P, status, diffs = best
    if P is second:
        row["notes"].append("matches the variant with k and r exchanged")
    row.update(status=status, mismatches=diffs, derived=P.to_json())
    return row


def reproduce_table2(cap: int | None = None) -> list[dict]:
    return [_row_table2(p, text, enum, cap) for p, text, enum in TABLE2]


# --- worked example ----------------------------------------------------------------

def _matrix(C) -> list[str]:
    return [" ".join(str(int(x)) for x in row) for row in getattr(C, "code", C).gen]


def reproduce_example(cap: int | None = None) -> dict:
    C1, C2 = bch_code(15, 2, 3), bch_code(15, 2, 5)
    D1, D2 = dual(C1.code), dual(C2.code)
    P = css_aqec(C1, C2, cap)
    ssc, _ = euclidean_subsystem(C2, cap)
    assc, assc_swapped = asymmetric_subsystem(C1, C2, cap)
    checks = {
        "C2perp_in_C1": contains(C1.code, D2),
        "C1perp_in_C2": contains(C2.code, D1),
        "C2_in_C1": contains(C1.code, C2.code),
    }
    rows = []
    for derived, text in ((P, "[[15,3,5/3]]_2"), (ssc, "[[15,4,3,3]]_2"), (assc, "[[15,4,3,5/3]]_2")):
        status, diffs = compare(derived, parse_claim(text))
        rows.append({"claim": text, "status": status, "mismatches": diffs, "derived": derived.to_json()})
    return {
        "codes": {
            "C1": {"name": code_label(C1), "n": 15, "k": C1.k, "generator": _matrix(C1)},
            "C2": {"name": code_label(C2), "n": 15, "k": C2.k, "generator": _matrix(C2)},
            "C1perp": {"name": code_label(D1), "n": 15, "k": D1.k, "generator": _matrix(D1)},
            "C2perp": {"name": code_label(D2), "n": 15, "k": D2.k, "generator": _matrix(D2)},
        },
        "nesting": checks,
        "d_x": P.d_x.value,
        "d_z": P.d_z.value,
        "rows": rows,
        "assc_swapped": assc_swapped.label,
    }


def summarize(rows: list[dict]) -> dict:
    out: dict[str, int] = {}
    for row in rows:
        out[row["status"]] = out.get(row["status"], 0) + 1
    return dict(sorted(out.items()))
