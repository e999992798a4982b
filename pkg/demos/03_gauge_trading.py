"""Trade logical dimension for gauge dimension, then merge back.

Starting from the designed parameters of the dual-containing BCH(15,2,3)
code, each shrink step moves one qudit from the logical to the gauge
subsystem. An explicit subsystem code realizes one point of the chain and,
being pure, merges into a stabilizer code.
"""

from __future__ import annotations

from aqbch import bch_code, euclidean_subsystem, subsystem_bch_designed, trade_chain, trade_dimension


def main() -> None:
    start = subsystem_bch_designed(15, 2, 3, 0)
    for P in trade_chain(start):
        print(f"{P.label:<22} k + r = {P.k + P.r}")

    explicit, swapped = euclidean_subsystem(bch_code(15, 2, 5))
    print(f"\nexplicit construction: {explicit.label} (pure={explicit.pure}); swapped: {swapped.label}")
    print("merged:", trade_dimension(explicit, "merge").label)


if __name__ == "__main__":
    main()
