from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aqbch.cyclic import bch_code
from aqbch.errors import TooLargeToEnumerate
from aqbch.gf import field_of_order
from aqbch.linear_code import LinearCode, contains
from aqbch.weights import INFINITY, message_count, min_weight, relative_min_weight
from oracles import brute_min_weight, brute_relative_weight, ref_field_for


def random_code(rng, q, n, rows):
    F = field_of_order(q)
    return LinearCode(F, rng.integers(0, q, size=(rows, n)), n)


def check_witness(C, rep, outside=None):
    w = np.array(rep.witness)
    assert int(np.count_nonzero(w)) == rep.min_weight
    assert w in C
    if outside is not None:
        assert w not in outside
    assert w[np.flatnonzero(w)[0]] == 1  # normalised


def test_message_count():
    assert message_count(2, 11, 0) == 2**11 - 1
    assert message_count(4, 3, 2) == 21 * 16
    assert message_count(3, 0, 5) == 0


@pytest.mark.parametrize("kernel", ["auto", "gray", "naive", "generic", "ball"])
def test_hamming_code(kernel):
    rep = min_weight(bch_code(15, 2, 3), kernel=kernel)
    assert rep.min_weight == 3
    check_witness(bch_code(15, 2, 3).code, rep)


def test_gray_and_naive_agree_on_random_binary_codes():
    rng = np.random.default_rng(2024)
    for _ in range(60):
        n = int(rng.integers(4, 24))
        C = random_code(rng, 2, n, int(rng.integers(1, min(n, 12) + 1)))
        g, v = min_weight(C, kernel="gray"), min_weight(C, kernel="naive")
        assert g.min_weight == v.min_weight
        assert g.witness == v.witness


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_against_oracle(q):
    rng = np.random.default_rng(100 + q)
    rf = ref_field_for(field_of_order(q))
    for _ in range(8):
        C = random_code(rng, q, 6, int(rng.integers(1, 4)))
        want = brute_min_weight(rf, C.gen[: C.k])
        for kernel in ("auto", "generic", "ball"):
            rep = min_weight(C, kernel=kernel)
            assert rep.min_weight == want
            check_witness(C, rep)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_relative_against_oracle(q):
    rng = np.random.default_rng(200 + q)
    F = field_of_order(q)
    rf = ref_field_for(F)
    for _ in range(8):
        C = random_code(rng, q, 6, 3)
        D = random_code(rng, q, 6, 2)
        want = brute_relative_weight(rf, C.gen[: C.k], D.gen[: D.k])
        for kernel in ("auto", "generic"):
            rep = relative_min_weight(C, D, kernel=kernel)
            assert rep.min_weight == want
            if rep.witness is not None:
                check_witness(C, rep, outside=D)


def test_relative_infinite_when_contained():
    C = bch_code(15, 2, 5).code
    D = bch_code(15, 2, 3).code
    assert contains(D, C)
    rep = relative_min_weight(C, D)
    assert rep.is_infinite and rep.min_weight == INFINITY and rep.witness is None
    assert min_weight(LinearCode(C.field, np.zeros((0, 15), dtype=int), 15)).is_infinite


def test_witness_is_lex_smallest():
    F = field_of_order(2)
    C = LinearCode(F, [[0, 0, 1, 1], [1, 1, 0, 0]])
    for kernel in ("gray", "naive", "generic", "ball"):
        assert min_weight(C, kernel=kernel).witness == (0, 0, 1, 1)


def test_cap_raises_with_lower_bound():
    C = bch_code(31, 2, 3).code  # k = 26
    with pytest.raises(TooLargeToEnumerate) as info:
        min_weight(C, cap=10)
    err = info.value
    assert err.cap == 10 and err.required > 10
    assert err.lower_bound is None or err.lower_bound <= 3


def test_ball_sweep_handles_large_k():
    # q^k = 2^26 is beyond the default cap; syndrome balls still find d = 3
    rep = min_weight(bch_code(31, 2, 3))
    assert rep.min_weight == 3 and rep.method == "exhaustive-ball"


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_kernels_agree_gf4(seed):
    rng = np.random.default_rng(seed)
    C = random_code(rng, 4, 7, 3)
    a, b = min_weight(C, kernel="generic"), min_weight(C, kernel="ball")
    assert a.min_weight == b.min_weight
    assert a.witness == b.witness
    if not a.is_infinite:
        assert 1 <= a.min_weight <= 7 - C.k + 1


def test_report_json():
    rep = min_weight(bch_code(15, 2, 5))
    d = rep.to_json()
    assert d["min_weight"] == 5 and len(d["witness"]) == 15
    assert relative_min_weight(bch_code(15, 2, 5), bch_code(15, 2, 3)).to_json()["min_weight"] == "infinity"
