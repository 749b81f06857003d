import math
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

import orbitlab.analysis as analysis
from orbitlab.analysis import (
    THEOREMS,
    ProductTieError,
    classify,
    conjecture3,
    lexidynamic_permutation,
    lexiprod_permutation,
    run_check,
    sorted_orbit,
    theorem1,
    theorem2,
    theorem4,
    theorem5,
    theorem6,
    verify_partial_product_extreme,
    verify_product_extremes,
    verify_sum_extremes,
)
from orbitlab.orbits import Base2Orbit

from oracles import all_reps, base2, orbit_words, sigma_k

W49_PRODUCTS = {
    "000001111": 17057310054912000000,
    "000010111": 69309861547173120000,
    "000011011": 106107230996504524800,
    "000011101": 103115999585285683200,
    "000100111": 184709385608811148800,
    "000101011": 294762710705942322432,
    "000101101": 287935726164372000000,
    "000110011": 288046371229598615040,
    "000110101": 359572755909315080448,
    "000111001": 225726106934040832512,
    "001001011": 450633542546718000000,
    "001001101": 480928605792476688000,
    "001010011": 524261153928446022528,
    "001010101": 678501146123915400000,
}


@pytest.mark.parametrize(
    "w, perm",
    [("00011", (1, 2, 3, 5, 4)), ("01", (1, 2)), ("0101", (1, 3, 2, 4)), ("00101", (1, 3, 5, 2, 4))],
)
def test_lexidynamic_examples(w, perm):
    assert lexidynamic_permutation(w) == perm


@given(st.text(alphabet="01", min_size=1, max_size=12))
def test_lexidynamic_is_consistent_permutation(w):
    pi = lexidynamic_permutation(w)
    assert sorted(pi) == list(range(1, len(w) + 1))
    ordered = [x.bits for x in sorted_orbit(w)]
    for k, rank in enumerate(pi):
        assert ordered[rank - 1] == sigma_k(w, k)


def test_lexiprod_4_9():
    perm = lexiprod_permutation(4, 9)
    assert {w.bits: prod for w, prod in zip(perm.orbits, perm.products)} == W49_PRODUCTS
    assert perm.mapping == (1, 2, 4, 3, 5, 9, 7, 8, 10, 6, 11, 12, 13, 14)
    assert perm.by_class("over") == ["000011101", "000111001"]
    assert perm.by_class("under") == ["000011011", "000101011", "000110101"]
    assert len(perm.by_class("equal")) == 9
    assert perm.mapping[5] == 9  # 000101011


def test_lexiprod_small():
    assert lexiprod_permutation(2, 5).mapping == (1, 2)
    perm = lexiprod_permutation(1, 2)
    assert perm.m == 1 and perm.classes == ("equal",)
    assert perm.rows() == [
        {"lex_rank": 1, "orbit": "01", "product": "2", "product_rank": 1, "class": "equal"}
    ]


@pytest.mark.parametrize("p, q", [(p, q) for q in range(2, 12) for p in range(1, q)])
def test_lexiprod_fixes_endpoints_when_coprime(p, q):
    perm = lexiprod_permutation(p, q)
    assert sorted(perm.mapping) == list(range(1, perm.m + 1))
    assert perm.mapping[0] == 1
    if gcd(p, q) == 1:
        assert perm.mapping[-1] == perm.m


def test_classify():
    assert classify(5, 3) == "over"
    assert classify(3, 5) == "under"
    assert classify(4, 4) == "equal"


def test_product_tie_raises(monkeypatch):
    monkeypatch.setattr(analysis, "base2_orbit", lambda w: Base2Orbit((1, 2, 3), 1))
    with pytest.raises(ProductTieError) as info:
        lexiprod_permutation(2, 5)
    assert info.value.pair == ("00011", "00101") and info.value.product == 6


def _oracle_sums(p, q):
    return {w: [sum(v[: i + 1]) for i in range(q)] for w in all_reps(p, q)
            for v in [[base2(x) for x in orbit_words(w)]]}


def _oracle_products(p, q):
    return {w: math.prod(base2(x) for x in orbit_words(w)) for w in all_reps(p, q)}


@pytest.mark.parametrize("p, q", [(p, q) for q in range(2, 11) for p in range(1, q)])
def test_theorems_against_oracle(p, q):
    sums = _oracle_sums(p, q)
    u = "0" * (q - p) + "1" * p
    t4 = theorem4(p, q)
    assert t4.holds == all(a >= b for s in sums.values() for a, b in zip(s, sums[u]))
    assert t4.orbits_checked == len(sums)

    totals = _oracle_products(p, q)
    t5 = theorem5(p, q)
    assert t5.details["argmin"] == [w for w, v in totals.items() if v == min(totals.values())]
    assert t5.in_hypothesis == (p < q - p)

    if gcd(p, q) == 1:
        t2 = theorem2(p, q)
        top = max(totals, key=totals.get)
        assert t2.details["extreme"] == top and t2.holds
        assert theorem1(p, q).holds


def test_reports_3_8():
    assert theorem4(3, 8).holds and theorem4(3, 8).orbits_checked == 7
    assert theorem6(3, 8).holds and conjecture3(3, 8).holds
    t5 = theorem5(4, 9)
    assert t5.details["minimum"] == "17057310054912000000"
    assert t5.details["argmin"] == ["000001111"]
    t2 = theorem2(4, 9)
    assert t2.details["maximum"] == "678501146123915400000"
    assert t2.details["argmax"] == ["001010101"]


def test_non_coprime_reports():
    t4 = theorem4(2, 4)
    assert t4.holds and t4.in_hypothesis
    t1 = theorem1(2, 4)
    assert not t1.in_hypothesis and t1.details["extreme"] == "0101"
    t1 = theorem1(2, 6)
    assert t1.holds and not t1.in_hypothesis and t1.details["extreme"] == "001001"
    assert not t1.violation


def test_merged_reports():
    r = verify_sum_extremes(3, 8)
    assert r.holds and set(r.details) == {"t1", "t4"}
    assert set(verify_sum_extremes(2, 4).details) == {"t4"}
    r = verify_product_extremes(4, 9)
    assert r.holds and set(r.details) == {"t5", "t2"}
    r = verify_partial_product_extreme(3, 8)
    assert r.holds and r.details["c3"]["holds"]
    assert verify_partial_product_extreme(1, 2).holds


def test_report_json_and_violation():
    r = theorem4(2, 5)
    record = r.to_json()
    assert record["theorem"] == "t4" and record["holds"] and record["counterexamples"] == []
    assert not r.violation
    c3 = conjecture3(3, 8)
    assert c3.conjecture and not c3.violation


def test_run_check():
    assert THEOREMS == ("t1", "t2", "c3", "t4", "t5", "t6")
    assert run_check("t4", 2, 5).theorem == "t4"
    with pytest.raises(ValueError):
        run_check("t9", 2, 5)
