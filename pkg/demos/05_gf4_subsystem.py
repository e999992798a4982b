"""Subsystem codes over GF(4) with distances found by exhaustive search."""

from __future__ import annotations

from aqbch import bch_code, cyclic_dual, cyclic_subsystem_from_T, euclidean_subsystem


def main() -> None:
    for delta in (5, 6, 7, 10):
        C = bch_code(15, 4, delta)
        first, second = euclidean_subsystem(C)
        print(f"{C.name:<14} k={C.k:<3} -> {first.label:<18} {second.label}")

    # a self-orthogonal binary cyclic code plus a gauge defining set
    C2 = cyclic_dual(bch_code(15, 2, 3))
    for T in ({0}, {5, 10}, {3, 6, 9, 12}):
        print(f"T={sorted(T)}: {cyclic_subsystem_from_T(C2, T).label}")


if __name__ == "__main__":
    main()
