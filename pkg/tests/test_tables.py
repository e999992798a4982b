from __future__ import annotations

import pytest

from aqbch.cyclic import bch_code
from aqbch.errors import ParseError
from aqbch.quantum import css_aqec, euclidean_subsystem
from aqbch.tables import (
    LOWER,
    MATCH,
    MISMATCH,
    UNRESOLVED,
    compare,
    parse_claim,
    reproduce_example,
    reproduce_table1,
    reproduce_table2,
    summarize,
)
from example_matrices import G1, G1_DUAL, G2, G2_DUAL, parse


@pytest.mark.parametrize("text,fields", [
    ("[[15,3,5/3]]_2", (15, 3, None, 5, 3, 2, True)),
    ("[[15,7,3]]", (15, 7, None, 3, 3, None, False)),
    ("[[15,4,3,3]]₂", (15, 4, 3, 3, 3, 2, False)),
    ("[[ 127, 64, >=15/>=5 ]]_2", (127, 64, None, 15, 5, 2, True)),
    ("[[15,2,5,3]]_{4}", (15, 2, 5, 3, 3, 4, False)),
    ("[[15,4,3,≥5/3]]4", (15, 4, 3, 5, 3, 4, True)),
])
def test_parse_claim(text, fields):
    c = parse_claim(text)
    assert (c.n, c.k, c.r, c.d_z, c.d_x, c.q, c.asymmetric) == fields


@pytest.mark.parametrize("bad", ["", "[15,3,5]", "[[15,3]]", "[[15,3,a]]", "[[15,3,5/3/1]]", "[[1,2,3,4,5]]"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_claim(bad)


def test_compare():
    P = css_aqec(bch_code(15, 2, 3), bch_code(15, 2, 5))
    assert compare(P, parse_claim("[[15,3,5/3]]_2")) == (MATCH, [])
    status, diffs = compare(P, parse_claim("[[15,3,5/4]]_2"))
    assert status == MISMATCH and diffs[0]["field"] == "d_x" and diffs[0]["witness"]
    status, diffs = compare(P, parse_claim("[[15,3,5/3]]_4"))
    assert status == MISMATCH and diffs[0]["field"] == "q"
    low = css_aqec(bch_code(15, 2, 3), bch_code(15, 2, 5), cap=0)
    assert compare(low, parse_claim("[[15,3,5/3]]_2"))[0] == LOWER


def test_example_matrices_are_canonical():
    C1, C2 = bch_code(15, 2, 3), bch_code(15, 2, 5)
    from aqbch.linear_code import dual
    assert (C1.code.gen == parse(G1)).all()
    assert (C2.code.gen == parse(G2)).all()
    assert (dual(C1.code).gen == parse(G1_DUAL)).all()
    assert (dual(C2.code).gen == parse(G2_DUAL)).all()


def test_reproduce_example():
    out = reproduce_example()
    assert all(out["nesting"].values())
    assert (out["d_x"], out["d_z"]) == (3, 5)
    assert [r["status"] for r in out["rows"]] == [MATCH] * 3
    assert out["assc_swapped"] == "[[15,3,4,5/3]]_2"


def test_table1():
    rows = {r["claim"]: r for r in reproduce_table1()}
    for text in ("[[15,3,5/3]]_2", "[[15,0,5/4]]_2", "[[31,6,7/5]]_2", "[[31,11,7/3]]_2",
                 "[[31,6,11/3]]_2", "[[31,1,15/3]]_2"):
        assert rows[text]["status"] == MATCH, text
    for text in ("[[31,10,8/3]]_2", "[[127,56,25/7]]_2"):
        row = rows[text]
        assert row["status"] == UNRESOLVED
        cw = row["counter_witness"]
        assert cw["field"] == "k" and cw["derived"] != cw["claimed"]
    assert rows["[[31,10,8/3]]_2"]["counter_witness"]["derived"] == 11
    big = rows["[[127,64,15/5]]_2"]
    assert big["status"] == LOWER and big["derived"]["k"] == 64


def test_table2():
    rows = reproduce_table2()
    by = {r["claim"]: r for r in rows}
    for text in ("[[15,4,3,3]]_2", "[[15,6,1,3]]_2", "[[31,10,1,5]]_2", "[[31,20,1,3]]_2",
                 "[[15,2,5,3]]_4", "[[15,2,3,3]]_4", "[[15,4,1,3]]_4", "[[15,8,1,3]]_4"):
        assert by[text]["status"] == MATCH, text
    for r in rows:
        assert r["status"] in (MATCH, LOWER)
        if r["claim"].startswith("[[63"):
            assert r["status"] == LOWER
    assert sum(summarize(rows).values()) == len(rows)


def test_swapped_variant_is_reported():
    rows = {r["claim"]: r for r in reproduce_table2()}
    first, second = euclidean_subsystem(bch_code(31, 2, 15))
    assert "[[31,20,1,3]]_2" in (first.label, second.label)
    assert rows["[[31,20,1,3]]_2"]["derived"]["label"] == "[[31,20,1,3]]_2"
