"""Bound checks for derived quantum codes, in exact integer arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BoundReport:
    singleton: str  # pass | tight | fail
    subsystem_singleton: str  # pass | tight | fail | n/a
    hamming: str  # pass | fail | n/a
    slack: int | None

    @property
    def mds(self) -> bool:
        return self.singleton == "tight"

    @property
    def ok(self) -> bool:
        return "fail" not in (self.singleton, self.subsystem_singleton, self.hamming)

    def to_json(self) -> dict:
        return {
            "singleton": self.singleton,
            "subsystem_singleton": self.subsystem_singleton,
            "hamming": self.hamming,
            "mds": self.mds,
            "slack": self.slack,
        }


def _dists(P) -> tuple[int | float, int | float]:
    dx = P.d_x.value
    dz = dx if getattr(P, "symmetric", False) else P.d_z.value
    return dx, dz


def check_asym_singleton(P) -> tuple[str, int | None]:
    """d_x + d_z <= n - k + 2 and, for k >= 1, 2 d_x <= n - k + 2.

    Returns the verdict and the slack n - k + 2 - d_x - d_z.
    """
    dx, dz = _dists(P)
    if math.inf in (dx, dz):
        return "n/a", None
    rhs = P.n - P.k + 2
    slack = rhs - dx - dz
    if slack < 0 or (P.k >= 1 and 2 * dx > rhs):
        return "fail", slack
    return ("tight" if slack == 0 else "pass"), slack


def check_asym_subsystem_singleton(P) -> str:
    """k + r <= n - d_x - d_z + 2, stated for 0 <= r < k only."""
    r = getattr(P, "r", 0)
    if not 0 <= r < P.k:
        return "n/a"
    dx, dz = _dists(P)
    if math.inf in (dx, dz):
        return "n/a"
    rhs = P.n - dx - dz + 2
    lhs = P.k + r
    if lhs > rhs:
        return "fail"
    return "tight" if lhs == rhs else "pass"


def hamming_sum(n: int, q: int, d_x: int) -> int:
    t = (d_x - 1) // 2
    return sum(math.comb(n, j) * (q * q - 1) ** j for j in range(t + 1))


def check_asym_hamming(P, pure: bool | None = None) -> str:
    """Pure asymmetric Hamming bound; impure or unknown purity gives n/a."""
    pure = P.pure if pure is None else pure
    if not pure:
        return "n/a"
    dx, _ = _dists(P)
    if dx == math.inf:
        return "n/a"
    r = getattr(P, "r", 0)
    return "pass" if hamming_sum(P.n, P.q, int(dx)) <= P.q ** (P.n - P.k - r) else "fail"


def check_bounds(P) -> BoundReport:
    singleton, slack = check_asym_singleton(P)
    return BoundReport(singleton, check_asym_subsystem_singleton(P), check_asym_hamming(P), slack)
