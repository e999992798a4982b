from __future__ import annotations

import numpy as np
import pytest

from aqbch.cyclic import bch_code, cyclic_dual, rs_code
from aqbch.errors import (
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
)
from aqbch.linear_code import dual
from aqbch.quantum import (
    SCHEMA,
    Distance,
    SubsystemParams,
    aqec_bch_family,
    aqec_rs,
    aqec_to_subsystem,
    asymmetric_subsystem,
    css_aqec,
    css_qec,
    cyclic_subsystem_from_T,
    euclidean_subsystem,
    hit_cap,
    rs_pairs,
    subsystem_bch_designed,
    subsystem_bch_hermitian_params,
    trade_chain,
    trade_dimension,
)
from oracles import brute_min_weight, brute_relative_weight, ref_field_for


def test_worked_example():
    C1, C2 = bch_code(15, 2, 3), bch_code(15, 2, 5)
    P = css_aqec(C1, C2)
    assert P.label == "[[15,3,5/3]]_2"
    assert (P.d_x.value, P.d_z.value) == (3, 5)
    assert P.certified == "exact" and P.pure
    assert not hit_cap(P)


def test_worked_example_against_oracle():
    C1, C2 = bch_code(15, 2, 3), bch_code(15, 2, 5)
    rf = ref_field_for(C1.field)
    A, B = C1.code, C2.code
    dx = brute_relative_weight(rf, A.gen, dual(B).gen)
    dz = brute_relative_weight(rf, B.gen, dual(A).gen)
    P = css_aqec(C1, C2)
    assert (P.d_x.value, P.d_z.value) == (dx, dz)
    assert P.pure_x == (brute_min_weight(rf, A.gen) == dx)
    assert P.pure_z == (brute_min_weight(rf, B.gen) == dz)


@pytest.mark.parametrize("delta1,delta2,label", [
    (5, 7, "[[31,6,7/5]]_2"),
    (3, 7, "[[31,11,7/3]]_2"),
    (3, 11, "[[31,6,11/3]]_2"),
    (3, 15, "[[31,1,15/3]]_2"),
])
def test_bch_family_length_31(delta1, delta2, label):
    P = aqec_bch_family(31, 2, delta1, delta2)
    assert P.label == label and P.certified == "exact"


def test_bch_family_warns_beyond_delta_max():
    P = aqec_bch_family(15, 2, 3, 5)
    assert any("delta_max" in w for w in P.warnings)


def test_bch_family_errors():
    with pytest.raises(CosetCollision):
        aqec_bch_family(31, 2, 2, 3)
    with pytest.raises(PreconditionViolated):
        aqec_bch_family(31, 2, 5, 3)
    with pytest.raises(PreconditionViolated):
        aqec_bch_family(13, 4, 2, 3)


def test_zero_dimensional_fallback():
    P = css_aqec(dual(bch_code(15, 2, 5).code), bch_code(15, 2, 5))
    assert P.k == 0
    assert P.label == "[[15,0,5/4]]_2"
    assert P.warnings


def test_symmetric_label():
    assert css_qec(bch_code(15, 2, 3), bch_code(15, 2, 5)).label == "[[15,3,3]]_2"
    P = css_qec(bch_code(15, 2, 3), bch_code(15, 2, 3))
    assert P.label == "[[15,7,3]]_2"


def test_role_swap_symmetry():
    a = css_aqec(bch_code(15, 2, 3), bch_code(15, 2, 5))
    b = css_aqec(bch_code(15, 2, 5), bch_code(15, 2, 3))
    assert (a.n, a.k, a.d_x, a.d_z) == (b.n, b.k, b.d_x, b.d_z)


def test_not_nested_has_witness():
    C1, C2 = bch_code(15, 2, 5), bch_code(15, 2, 7)
    with pytest.raises(NotNested) as info:
        css_aqec(C1, C2)
    w = np.array(info.value.witness)
    assert w in dual(C2.code) and w not in C1.code


def test_nonpositive_k():
    F = bch_code(15, 2, 3).field
    from aqbch.linear_code import LinearCode
    full = LinearCode(F, np.eye(15, dtype=int))
    # full space paired with the zero code: nested, k = 15 + 0 - 15 = 0; shrink one more
    Z = LinearCode(F, np.zeros((0, 15), dtype=int), 15)
    assert css_aqec(full, Z).k == 0
    C = bch_code(15, 2, 3).code
    with pytest.raises((NonpositiveK, NotNested)):
        css_aqec(C, Z)


def test_euclidean_subsystem_binary():
    first, second = euclidean_subsystem(bch_code(15, 2, 5))
    assert first.label == "[[15,4,3,3]]_2" and first.pure
    assert second.label == "[[15,3,4,3]]_2"
    assert first.k + first.r == 7
    assert [p.label for p in euclidean_subsystem(bch_code(15, 2, 7))] == ["[[15,6,1,3]]_2", "[[15,1,6,3]]_2"]


@pytest.mark.parametrize("delta,label", [(5, "[[15,2,5,3]]_4"), (7, "[[15,4,1,3]]_4")])
def test_euclidean_subsystem_gf4(delta, label):
    assert euclidean_subsystem(bch_code(15, 4, delta))[0].label == label


def test_euclidean_dimension_violation():
    with pytest.raises(DimensionViolation):
        euclidean_subsystem(bch_code(15, 2, 3))


def test_asymmetric_subsystem_either_order():
    a = asymmetric_subsystem(bch_code(15, 2, 3), bch_code(15, 2, 5))
    b = asymmetric_subsystem(bch_code(15, 2, 5), bch_code(15, 2, 3))
    assert [p.label for p in a] == [p.label for p in b] == ["[[15,4,3,5/3]]_2", "[[15,3,4,5/3]]_2"]


def test_asymmetric_subsystem_mismatch():
    with pytest.raises(IntersectionMismatch):
        asymmetric_subsystem(bch_code(15, 2, 5), bch_code(15, 2, 7))
    with pytest.raises(NonpositiveK):
        asymmetric_subsystem(bch_code(15, 2, 3), bch_code(15, 2, 3))


def test_rs_codes():
    P = aqec_rs(7, 2, 3)
    assert P.label == "[[6,3,3/2]]_7"
    assert P.d_x.value + P.d_z.value == P.n - P.k + 2
    assert aqec_rs(8, 2, 3).label == "[[7,4,3/2]]_8"
    assert rs_pairs(4) == [] and rs_pairs(5) == []
    with pytest.raises(RangeViolation):
        aqec_rs(7, 3, 4)


def test_rs_code_is_mds():
    C = rs_code(9, 4)
    assert C.k == 8 - 3


def test_designed_subsystem_family():
    P = subsystem_bch_designed(15, 2, 3, 3)
    assert P.label == "[[15,4,3,>=3]]_2" and P.certified == "lower-bound"
    with pytest.raises(RangeViolation):
        subsystem_bch_designed(15, 2, 3, 7)
    with pytest.raises(RangeViolation):
        subsystem_bch_designed(15, 2, 9, 0)


def test_hermitian_params():
    assert subsystem_bch_hermitian_params(15, 2, 3, 1).label == "[[15,6,1,>=3]]_2"
    with pytest.raises(RangeViolation):
        subsystem_bch_hermitian_params(15, 2, 3, 99)


def test_cyclic_subsystem_from_T():
    C2 = cyclic_dual(bch_code(15, 2, 3))
    assert cyclic_subsystem_from_T(C2, {5, 10}).label == "[[15,5,2,3]]_2"
    assert cyclic_subsystem_from_T(C2, {0}).label == "[[15,6,1,3]]_2"
    with pytest.raises(TNotInWindow):
        cyclic_subsystem_from_T(C2, {1, 2, 4, 8})
    with pytest.raises(NotSelfOrthogonal):
        cyclic_subsystem_from_T(bch_code(15, 2, 3), {5, 10})


def test_trade_chain_and_merge():
    start = subsystem_bch_designed(15, 2, 3, 0)
    chain = trade_chain(start)
    assert [p.r for p in chain] == list(range(7))
    assert all(p.k + p.r == 7 for p in chain)
    assert chain[3].label == "[[15,4,3,>=3]]_2"
    with pytest.raises(KTooSmall):
        trade_dimension(chain[-1])
    with pytest.raises(NotPure):
        trade_dimension(start, "merge")
    S = euclidean_subsystem(bch_code(15, 2, 5))[0]
    merged = trade_dimension(S, "merge")
    assert merged.label == "[[15,7,3]]_2" and merged.d.exact
    shrunk = trade_dimension(S)
    assert shrunk.label == "[[15,3,4,>=3]]_2"


def test_trade_from_aqec():
    P = css_aqec(bch_code(15, 2, 3), bch_code(15, 2, 5))
    S = aqec_to_subsystem(P)
    assert S.r == 0 and S.d.value == 3
    assert trade_dimension(P).label == "[[15,2,1,>=3]]_2"


def test_subsystem_dimension_check():
    d = Distance(3, True)
    with pytest.raises(DimensionViolation):
        SubsystemParams(5, 4, 2, d, d, 2)


def test_capped_distances_are_lower_bounds():
    P = css_aqec(bch_code(15, 2, 3), bch_code(15, 2, 5), cap=0)
    assert P.certified == "lower-bound" and hit_cap(P)
    assert P.d_x.value <= 3 and P.d_z.value <= 5
    assert ">=" in P.label


def test_json_shape():
    d = css_aqec(bch_code(15, 2, 3), bch_code(15, 2, 5)).to_json()
    assert d["schema"] == SCHEMA
    assert (d["d_x"], d["d_z"], d["k"]) == (3, 5, 3)
    assert d["bounds"]["singleton"] == "pass"
    assert sum(d["witnesses"]["d_x"]) == 3
