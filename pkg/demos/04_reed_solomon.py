"""Every valid Reed-Solomon pair gives an asymmetric code meeting the Singleton bound."""

from __future__ import annotations

from aqbch import aqec_rs
from aqbch.quantum import rs_pairs


def main() -> None:
    for q in (4, 5, 7, 8, 9, 11, 13):
        pairs = rs_pairs(q)
        if not pairs:
            print(f"q={q}: no pair satisfies 2 <= d1 < d2 < q - 1 - d1")
            continue
        for d1, d2 in pairs:
            P = aqec_rs(q, d1, d2)
            b = P.to_json()["bounds"]
            print(f"q={q:<2} d1={d1} d2={d2}  {P.label:<20} singleton={b['singleton']:<6} {P.certified}")


if __name__ == "__main__":
    main()
