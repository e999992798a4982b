"""Quantum code parameters derived from classical codes.

Every record carries the exact-versus-lower-bound status of each distance.
A distance is exact only when it came out of a completed enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Union

from .cyclic import (
    CyclicCode,
    DefiningSet,
    _ceil_term,
    bch_code,
    bch_defining_set,
    bch_bound,
    cyclic_from_defining_set,
    delta_max,
    delta_max_star,
    dual_defining_set,
    in_length_range,
    rs_code,
)
from .errors import (
    CosetCollision,
    DimensionViolation,
    IntersectionMismatch,
    KTooSmall,
    NonpositiveK,
    NotNested,
    NotPure,
    NotSelfOrthogonal,
    PreconditionViolated,
    RangeViolation,
    TNotInWindow,
    TooLargeToEnumerate,
)
from .gf import ord_n_q
from .linear_code import LinearCode, contains, dual, intersection, non_member_row
from .weights import min_weight, relative_min_weight

Code = Union[LinearCode, CyclicCode]
SCHEMA = "derived-code/1"


def _lin(C: Code) -> LinearCode:
    return getattr(C, "code", C)


def code_label(C: Code) -> str:
    L = _lin(C)
    return L.name or f"[{L.n},{L.k}]_{L.q}"


def _dist_text(d, exact: bool) -> str:
    if d == math.inf:
        return "inf"
    return str(int(d)) if exact else f">={int(d)}"


def _json_num(d):
    return "infinity" if d == math.inf else int(d)


@dataclass(frozen=True)
class Distance:
    """A distance value, whether it is exact, and a witness when one is known."""

    value: int | float
    exact: bool
    witness: tuple[int, ...] | None = None
    capped: bool = field(default=False, compare=False)  # enumeration stopped at the cap

    def __str__(self) -> str:
        return _dist_text(self.value, self.exact)


def _lower_bound(C: Code) -> int:
    if isinstance(C, CyclicCode):
        return C.distance_lower_bound()
    return 1


def _relative(C: Code, D: LinearCode, cap: int | None, floor: int = 1) -> Distance:
    try:
        rep = relative_min_weight(_lin(C), D, cap=cap)
    except TooLargeToEnumerate as exc:
        return Distance(max(floor, _lower_bound(C), exc.lower_bound or 1), False, capped=True)
    return Distance(rep.min_weight, True, rep.witness)


def _plain(C: Code, cap: int | None, floor: int = 1) -> Distance:
    try:
        rep = min_weight(_lin(C), cap=cap)
    except TooLargeToEnumerate as exc:
        return Distance(max(floor, _lower_bound(C), exc.lower_bound or 1), False, capped=True)
    return Distance(rep.min_weight, True, rep.witness)


def _purity(C: Code, d: Distance, cap: int | None) -> bool | None:
    """True iff wt(C) equals the relative weight d; None when undecidable."""
    if not d.exact:
        return None
    w = _plain(C, cap)
    return w.value == d.value if w.exact else None


@dataclass(frozen=True)
class AqecParams:
    """[[n, k, d_z/d_x]]_q, or [[n, k, d]]_q when ``symmetric``."""

    n: int
    k: int
    d_z: Distance
    d_x: Distance
    q: int
    pure_x: bool | None = None
    pure_z: bool | None = None
    symmetric: bool = False
    construction: str = field(default="css_aqec", compare=False)
    provenance: dict = field(default_factory=dict, compare=False)
    warnings: tuple[str, ...] = field(default=(), compare=False)

    r = 0

    @property
    def certified(self) -> str:
        return "exact" if self.d_x.exact and (self.symmetric or self.d_z.exact) else "lower-bound"

    @property
    def pure(self) -> bool | None:
        if self.symmetric:
            return self.pure_x
        if self.pure_x is None or self.pure_z is None:
            return None
        return self.pure_x and self.pure_z

    @property
    def label(self) -> str:
        if self.symmetric:
            return f"[[{self.n},{self.k},{self.d_x}]]_{self.q}"
        return f"[[{self.n},{self.k},{self.d_z}/{self.d_x}]]_{self.q}"

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        from .bounds import check_bounds

        out = {
            "schema": SCHEMA,
            "construction": self.construction,
            "label": self.label,
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "certified": self.certified,
            "provenance": dict(self.provenance),
            "bounds": check_bounds(self).to_json(),
            "warnings": list(self.warnings),
            "witnesses": _witnesses(self),
        }
        if self.symmetric:
            out["d"] = _json_num(self.d_x.value)
            out["pure"] = self.pure_x
        else:
            out.update(d_x=_json_num(self.d_x.value), d_z=_json_num(self.d_z.value),
                       pure_x=self.pure_x, pure_z=self.pure_z)
        return out


@dataclass(frozen=True)
class SubsystemParams:
    """[[n, k, r, d]]_q, [[n, k, r, d_z/d_x]]_q, or a stabilizer [[n, k, d]]_q."""

    n: int
    k: int
    r: int
    d_z: Distance
    d_x: Distance
    q: int
    pure: bool | None = None
    asymmetric: bool = False
    stabilizer: bool = False
    construction: str = field(default="euclidean_ssc", compare=False)
    provenance: dict = field(default_factory=dict, compare=False)
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.k < 0 or self.r < 0 or self.k + self.r > self.n:
            raise DimensionViolation(f"invalid subsystem dimensions k={self.k}, r={self.r}, n={self.n}")

    @property
    def d(self) -> Distance:
        return self.d_x

    @property
    def certified(self) -> str:
        return "exact" if self.d_x.exact and self.d_z.exact else "lower-bound"

    @property
    def label(self) -> str:
        dist = f"{self.d_z}/{self.d_x}" if self.asymmetric else str(self.d_x)
        if self.stabilizer:
            return f"[[{self.n},{self.k},{dist}]]_{self.q}"
        return f"[[{self.n},{self.k},{self.r},{dist}]]_{self.q}"

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        from .bounds import check_bounds

        out = {
            "schema": SCHEMA,
            "construction": self.construction,
            "label": self.label,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "q": self.q,
            "certified": self.certified,
            "pure": self.pure,
            "provenance": dict(self.provenance),
            "bounds": check_bounds(self).to_json(),
            "warnings": list(self.warnings),
            "witnesses": _witnesses(self),
        }
        if self.asymmetric:
            out.update(d_x=_json_num(self.d_x.value), d_z=_json_num(self.d_z.value))
        else:
            out["d"] = _json_num(self.d_x.value)
        return out


def hit_cap(P) -> bool:
    """True if any distance of P is a bound only because enumeration hit its cap."""
    return P.d_x.capped or P.d_z.capped


def _witnesses(P) -> dict:
    out = {}
    for key in ("d_x", "d_z"):
        w = getattr(P, key).witness
        if w is not None:
            out[key] = list(w)
    return out


# --- CSS constructions -------------------------------------------------------------

def _check_nested(C1: Code, C2: Code) -> None:
    A, B = _lin(C1), _lin(C2)
    for big, small, text in ((A, dual(B), "C2^perp in C1"), (B, dual(A), "C1^perp in C2")):
        if not contains(big, small):
            row = non_member_row(big, small)
            raise NotNested(f"{text} fails for {code_label(C1)}, {code_label(C2)}",
                            witness=tuple(int(x) for x in row))


def css_aqec(C1: Code, C2: Code, cap: int | None = None) -> AqecParams:
    """Asymmetric CSS code from a pair with C2^perp inside C1."""
    A, B = _lin(C1), _lin(C2)
    _check_nested(C1, C2)
    n, k = A.n, A.k + B.k - A.n
    if k < 0:
        raise NonpositiveK(f"k1 + k2 - n = {k}")
    warnings = []
    w1 = _relative(C1, dual(B), cap)  # wt(C1 \ C2^perp)
    w2 = _relative(C2, dual(A), cap)  # wt(C2 \ C1^perp)
    if w1.value == math.inf and w2.value == math.inf:
        # k = 0: no logical operators, fall back to the plain weights
        w1, w2 = _plain(C1, cap), _plain(C2, cap)
        p1 = p2 = True if (w1.exact and w2.exact) else None
        warnings.append("zero-dimensional code; distances are the minimum weights of C1 and C2")
    else:
        p1, p2 = _purity(C1, w1, cap), _purity(C2, w2, cap)
    if (w1.value, not w1.exact) <= (w2.value, not w2.exact):
        dx, dz, px, pz = w1, w2, p1, p2
    else:
        dx, dz, px, pz = w2, w1, p2, p1
    if dx.exact and dz.exact and dx.value == dz.value:
        warnings.append("d_z equals d_x; the code is not genuinely asymmetric")
    prov = {"c1": code_label(C1), "c2": code_label(C2), "rule": "css_aqec"}
    return AqecParams(n, k, dz, dx, A.q, px, pz, False, "css_aqec", prov, tuple(warnings))


def css_qec(C1: Code, C2: Code, cap: int | None = None) -> AqecParams:
    """Symmetric CSS code [[n, k1 + k2 - n, d_x]]."""
    P = css_aqec(C1, C2, cap)
    prov = dict(P.provenance, rule="css_qec")
    return replace(P, symmetric=True, construction="css_qec", provenance=prov)


def aqec_to_subsystem(P: AqecParams) -> SubsystemParams:
    """View [[n, k, d_z/d_x]] as the r = 0 symmetric subsystem code [[n, k, 0, d_x]]."""
    return SubsystemParams(P.n, P.k, 0, P.d_x, P.d_x, P.q, P.pure_x, False, False,
                           "css_qec", dict(P.provenance), P.warnings)


def euclidean_subsystem(C1: Code, cap: int | None = None) -> tuple[SubsystemParams, SubsystemParams]:
    """Both subsystem codes from C1 and its hull C1 ∩ C1^perp."""
    A = _lin(C1)
    n = A.n
    hull = intersection(A, dual(A))
    k1, k2 = A.k, hull.k
    if k1 + k2 >= n:
        raise DimensionViolation(f"k' + k'' = {k1 + k2} >= n = {n}")
    floor = 1
    if isinstance(C1, CyclicCode):
        # hull^perp = C1 + C1^perp is cyclic with defining set T1 ∩ T1^perp
        T = C1.defining_set & dual_defining_set(C1.defining_set)
        floor = bch_bound(T)
    d = _relative(dual(hull), A, cap, floor)
    pure = None
    if d.exact:
        w = _plain(C1, cap)
        if w.exact or w.value >= d.value:
            pure = w.value >= d.value
    prov = {"c1": code_label(C1), "c2": f"{code_label(C1)} hull", "rule": "euclidean_ssc"}
    first = SubsystemParams(n, n - k1 - k2, k1 - k2, d, d, A.q, pure, construction="euclidean_ssc",
                            provenance=prov)
    second = SubsystemParams(n, k1 - k2, n - k1 - k2, d, d, A.q, pure, construction="euclidean_ssc",
                             provenance=dict(prov, variant="swapped"))
    return first, second


def _assc_orientation(A: LinearCode, B: LinearCode) -> bool:
    Bd = dual(B)
    return intersection(A, dual(A)) == Bd and contains(B, Bd)


def asymmetric_subsystem(C1: Code, C2: Code, cap: int | None = None) -> tuple[SubsystemParams, SubsystemParams]:
    """Asymmetric subsystem codes from a pair with C2^perp = C1 ∩ C1^perp inside C2.

    The argument order is normalised: if the condition holds only with the roles
    exchanged, the codes are swapped.
    """
    A, B = _lin(C1), _lin(C2)
    if not _assc_orientation(A, B):
        if not _assc_orientation(B, A):
            raise IntersectionMismatch(
                f"neither ordering of {code_label(C1)}, {code_label(C2)} has C2^perp equal to the hull of C1")
        C1, C2, A, B = C2, C1, B, A
    n = A.n
    k, r = B.k - A.k, A.k + B.k - n
    if k <= 0:
        raise NonpositiveK(f"k2 - k1 = {k}")
    w1 = _relative(C1, dual(B), cap)
    w2 = _relative(C2, dual(A), cap)
    dx, dz = sorted((w1, w2), key=lambda w: (w.value, not w.exact))
    pure = None
    if dx.exact:
        p1, p2 = _purity(C1, w1, cap), _purity(C2, w2, cap)
        pure = None if p1 is None or p2 is None else (p1 and p2)
    prov = {"c1": code_label(C1), "c2": code_label(C2), "rule": "asymmetric_ssc"}
    first = SubsystemParams(n, k, r, dz, dx, A.q, pure, True, construction="asymmetric_ssc", provenance=prov)
    second = SubsystemParams(n, r, k, dz, dx, A.q, pure, True, construction="asymmetric_ssc",
                             provenance=dict(prov, variant="swapped"))
    return first, second


# --- gauge trading --------------------------------------------------------------

def _lower(d: Distance) -> Distance:
    return Distance(d.value, False, None, d.capped)


def trade_dimension(P: SubsystemParams | AqecParams, direction: str = "shrink") -> SubsystemParams:
    """[[n,k,r,d]] -> [[n,k-1,r+1,>=d]] (``shrink``) or pure [[n,k,r,d]] -> [[n,k+r,d]] (``merge``)."""
    if isinstance(P, AqecParams):
        P = aqec_to_subsystem(P)
    prov = dict(P.provenance, traded_from=P.label)
    if direction == "shrink":
        if P.k <= 1:
            raise KTooSmall(f"k = {P.k}; trading needs k > 1")
        return SubsystemParams(P.n, P.k - 1, P.r + 1, _lower(P.d_z), _lower(P.d_x), P.q, P.pure,
                               P.asymmetric, False, "trade_shrink", prov)
    if direction == "merge":
        if not P.pure:
            raise NotPure(f"{P.label} is not known to be pure")
        return SubsystemParams(P.n, P.k + P.r, 0, P.d_z, P.d_x, P.q, True, P.asymmetric, True,
                               "trade_merge", prov)
    raise ValueError(f"unknown direction {direction!r}")


def trade_chain(P: SubsystemParams | AqecParams) -> list[SubsystemParams]:
    """P followed by every shrink step until k = 1."""
    if isinstance(P, AqecParams):
        P = aqec_to_subsystem(P)
    out = [P]
    while out[-1].k > 1:
        out.append(trade_dimension(out[-1]))
    return out


# --- BCH and RS families ------------------------------------------------------------

def aqec_bch_family(n: int, q: int, delta1: int, delta2: int, cap: int | None = None) -> AqecParams:
    """AQEC from the narrow-sense BCH pair of designed distances delta1 < delta2."""
    m = ord_n_q(n, q)
    if not in_length_range(n, q, m):
        raise PreconditionViolated(f"n={n} outside ({q}^{m // 2}, {q}^{m} - 1]")
    if not 2 <= delta1 < delta2:
        raise PreconditionViolated(f"need 2 <= delta1 < delta2, got {delta1}, {delta2}")
    if bch_defining_set(n, q, delta1) == bch_defining_set(n, q, delta2):
        raise CosetCollision(f"delta {delta1} and {delta2} give the same defining set")
    warnings = []
    dm = delta_max(n, q, m)
    C1, C2 = bch_code(n, q, delta1), bch_code(n, q, delta2)
    P = css_aqec(C1, C2, cap)
    if delta2 > dm:
        warnings.append(f"delta2={delta2} exceeds delta_max={dm}; dimension formula not applicable")
    else:
        k_formula = n - m * _ceil_term(delta1, q) - m * _ceil_term(delta2, q)
        if k_formula != P.k:
            raise AssertionError(f"dimension formula gives {k_formula}, construction gives {P.k}")
    prov = dict(P.provenance, rule="aqec_bch")
    return replace(P, construction="aqec_bch", provenance=prov, warnings=P.warnings + tuple(warnings))


def rs_pairs(q: int) -> list[tuple[int, int]]:
    """All (d1, d2) with 2 <= d1 < d2 < n - d1, n = q - 1."""
    n = q - 1
    return [(a, b) for a in range(2, n) for b in range(a + 1, n - a)]


def aqec_rs(q: int, d1: int, d2: int, cap: int | None = None) -> AqecParams:
    """[[q-1, n-d1-d2+2, d2/d1]]_q from two Reed-Solomon codes."""
    n = q - 1
    if not 2 <= d1 < d2 < n - d1:
        raise RangeViolation(f"need 2 <= d1 < d2 < n - d1 = {n - d1}, got d1={d1}, d2={d2}")
    P = css_aqec(rs_code(q, d1), rs_code(q, d2), cap)
    if P.k != n - d1 - d2 + 2:
        raise AssertionError(f"RS dimension {P.k} != {n - d1 - d2 + 2}")
    return replace(P, construction="aqec_rs", provenance=dict(P.provenance, rule="aqec_rs"))


def subsystem_bch_designed(n: int, q: int, delta: int, r: int) -> SubsystemParams:
    """[[n, n - 2m ceil((delta-1)(1-1/q)) - r, r, >=delta]]_q for dual-containing BCH codes."""
    m = ord_n_q(n, q)
    if not in_length_range(n, q, m):
        raise RangeViolation(f"n={n} outside ({q}^{m // 2}, {q}^{m} - 1]")
    top = delta_max_star(n, q, m)
    if not 2 <= delta <= top:
        raise RangeViolation(f"delta={delta} outside [2, {top}]")
    base = n - 2 * m * _ceil_term(delta, q)
    if not 0 <= r < base:
        raise RangeViolation(f"r={r} outside [0, {base})")
    if delta <= delta_max(n, q, m):
        C = bch_code(n, q, delta)
        if n - 2 * (n - C.k) != base:
            raise AssertionError("dimension formula disagrees with the constructed BCH code")
    d = Distance(delta, False)
    prov = {"c1": f"BCH({n},{q},{delta})", "c2": None, "rule": "subsystem_bch"}
    return SubsystemParams(n, base - r, r, d, d, q, None, False, False, "subsystem_bch", prov)


def subsystem_bch_hermitian_params(n: int, q: int, delta: int, r: int) -> SubsystemParams:
    """Formula-level parameters of the Hermitian subsystem BCH family (no linear algebra)."""
    m = ord_n_q(n, q * q)
    top = n * (q**m - 1) // (q ** (2 * m) - 1)
    if not 2 <= delta <= top:
        raise RangeViolation(f"delta={delta} outside [2, {top}]")
    base = n - 2 * m * _ceil_term(delta, q * q)
    if not 0 <= r < base:
        raise RangeViolation(f"r={r} outside [0, {base})")
    d = Distance(delta, False)
    prov = {"c1": f"BCH({n},{q * q},{delta})", "c2": None, "rule": "subsystem_bch_hermitian"}
    return SubsystemParams(n, base - r, r, d, d, q, True, False, False, "subsystem_bch_hermitian", prov)


def cyclic_subsystem_from_T(C2: CyclicCode, T: DefiningSet | set[int] | frozenset[int],
                            cap: int | None = None) -> SubsystemParams:
    """Subsystem code from a self-orthogonal cyclic code and a gauge set T."""
    n, q = C2.n, C2.q
    if not isinstance(T, DefiningSet):
        T = DefiningSet(n, q, frozenset(T))
    if not contains(dual(C2.code), C2.code):
        raise NotSelfOrthogonal(f"{code_label(C2)} is not self-orthogonal")
    T2 = C2.defining_set
    window = T2 - dual_defining_set(T2)
    if not T.elements <= window.elements:
        bad = sorted(T.elements - window.elements)
        raise TNotInWindow(f"elements {bad} are not in T_C2 minus T_C2perp")
    gauge = T | T.inverse()
    k, r = C2.k, len(gauge)
    if not r < n - 2 * k:
        raise RangeViolation(f"r={r} must be below n - 2k = {n - 2 * k}")
    C1 = cyclic_from_defining_set(n, q, T2 - gauge, name=f"C1(T={list(gauge.cosets)})")
    hull = intersection(C1.code, dual(C1.code))
    if hull != C2.code or C1.k != k + r:
        raise IntersectionMismatch("C1 ∩ C1^perp differs from C2")
    floor = bch_bound(C1.defining_set & dual_defining_set(C1.defining_set))
    d = _relative(dual(C2.code), C1.code, cap, floor)
    pure = None
    if d.exact:
        w = _plain(C1, cap)
        pure = w.value >= d.value if w.exact else None
    prov = {"c1": code_label(C1), "c2": code_label(C2), "rule": "cyclic_ssc"}
    return SubsystemParams(n, n - 2 * k - r, r, d, d, q, pure, False, r == 0, "cyclic_ssc", prov)
