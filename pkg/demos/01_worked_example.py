"""Walk through the length-15 binary example step by step.

Two narrow-sense BCH codes are nested, their relative weights give the two
error-correction capabilities, and the pair yields an asymmetric CSS code.
"""

from __future__ import annotations

from aqbch import bch_code, contains, css_aqec, dual, min_weight, relative_min_weight


def show(name, C):
    rep = min_weight(C)
    print(f"{name}: [{C.n},{C.k},{rep.min_weight}]_{C.q}  witness {rep.witness}")


def main() -> None:
    C1, C2 = bch_code(15, 2, 3), bch_code(15, 2, 5)
    D1, D2 = dual(C1.code), dual(C2.code)
    for name, C in (("C1", C1), ("C2", C2), ("C1^perp", D1), ("C2^perp", D2)):
        show(name, C)

    print("\nC2^perp inside C1:", contains(C1.code, D2))
    print("C1^perp inside C2:", contains(C2.code, D1))

    # bit flips are caught by C1 minus C2^perp, phase flips by C2 minus C1^perp
    dx = relative_min_weight(C1, D2)
    dz = relative_min_weight(C2, D1)
    print(f"\nwt(C1 minus C2^perp) = {dx.min_weight}")
    print(f"wt(C2 minus C1^perp) = {dz.min_weight}")

    P = css_aqec(C1, C2)
    print(f"\nasymmetric CSS code: {P.label}  pure={P.pure}")
    print("bounds:", P.to_json()["bounds"])


if __name__ == "__main__":
    main()
