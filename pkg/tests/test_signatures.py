from fractions import Fraction
from math import floor

import pytest

from prodquot.baskets import Basket, basket_invariants, enumerate_baskets, gorenstein_index
from prodquot.signatures import (
    alpha,
    candidate_signatures,
    format_signature,
    group_order,
    list_of_types,
    make_signature,
    parse_signature,
    signatures_for_basket,
    theta,
)

from helpers import table_rows

P = parse_signature


def test_text_forms():
    assert P("2^3, 4") == (4, 2, 2, 2)
    assert P("{2,4,7}") == (7, 4, 2)
    assert P("3^2 7") == (7, 3, 3)
    assert format_signature((7, 3, 3)) == "3^2, 7"
    assert format_signature((4, 2, 2, 2), " ") == "2^3 4"
    with pytest.raises(ValueError):
        make_signature([1, 3])


def test_theta_and_alpha():
    assert theta((7, 3, 2)) == Fraction(1, 42)
    assert theta((5, 5, 5)) == Fraction(2, 5)
    b = Basket.parse("1/7, 2/7^2")
    assert alpha(P("3^2, 7"), b) == 9
    assert alpha(P("2, 4, 7"), b) == 16
    with pytest.raises(ValueError):
        alpha((2, 2, 2), Basket())


@pytest.mark.parametrize("t1, t2, basket, order", [
    ("2, 5^2", "2, 3^3", "1/2^2", 60),
    ("2^4, 4", "2, 4, 6", "1/2^2", 48),
    ("3^2, 7", "2, 4, 7", "1/7, 2/7^2", 168),
])
def test_group_order_examples(t1, t2, basket, order):
    assert group_order(P(t1), P(t2), Basket.parse(basket)) == order


def test_group_order_of_every_table_row():
    for r in table_rows():
        assert group_order(r.t1, r.t2, r.basket) == r.order, r


def test_candidate_signatures_examples():
    got = candidate_signatures(0, 3, 12, 12)
    assert got == {make_signature(c) for c in
                   ((a, b, c) for a in range(2, 73) for b in range(a, 73) for c in range(b, 73))}
    got = candidate_signatures(2, 4, 2, 4)
    assert all(max(t) <= 8 for t in got)
    assert all(sum(1 for m in t if m > 4) <= 1 for t in got)
    assert (8, 4, 2, 2) in got and (8, 8, 2, 2) not in got
    assert candidate_signatures(1, 5, 3, 30) == candidate_signatures(0, 5, 3, 3)


def test_signatures_for_basket_examples():
    six = signatures_for_basket(Basket.parse("1/2^2"))
    for t in ["2, 5^2", "2, 3^3", "2, 4, 10", "2, 4, 6", "2, 7^2", "3^2, 4", "2, 4, 5", "2^4, 4", "2^3, 4"]:
        assert P(t) in six, t
    fg = signatures_for_basket(Basket.parse("1/7, 2/7^2"))
    assert {P("3^2, 7"), P("2, 4, 7")} <= fg
    eight = signatures_for_basket(Basket())
    assert {P("5^3"), P("2^5")} <= eight


def test_list_of_types_examples():
    lt8 = list_of_types(8)
    assert len(lt8) == 1 and lt8[0][0] == Basket()
    needed = {r.t1 for r in table_rows() if r.k2 == 8} | {r.t2 for r in table_rows() if r.k2 == 8}
    assert needed <= lt8[0][1]
    lt5 = dict(list_of_types(5))
    assert P("2, 4, 6") in lt5[Basket.parse("1/3, 2/3")]
    with pytest.raises(ValueError):
        list_of_types(9)


def test_table_pairs_are_admissible():
    for r in table_rows():
        sigs = signatures_for_basket(r.basket)
        assert r.t1 in sigs and r.t2 in sigs, r


@pytest.mark.parametrize("k2", range(1, 9))
def test_output_bounds(k2):
    for b, sigs in list_of_types(k2):
        _, _, k = basket_invariants(b)
        for t in sigs:
            a = alpha(t, b)
            assert a.denominator == 1 and a >= 1
            assert len(t) <= (k2 + k) / 2 + 4


def brute_force_signatures(b: Basket, max_entry: int = 100, max_len: int = 10) -> set:
    """All signatures meeting the stated post-conditions, found without the entry bounds.

    alpha = maxTh / Theta must be an integer and every entry divides 2*alpha*I,
    so we loop over alpha and draw entries from the divisors of 2*alpha*I.
    Theta >= 1/42 for any hyperbolic signature bounds alpha.
    """
    B, _, k = basket_invariants(b)
    max_th = (8 - B / 3 + k) / 4
    I = gorenstein_index(b)
    max_len = min(max_len, floor(2 * max_th + 4))
    out = set()
    for a in range(1, int(42 * max_th) + 1):
        target = max_th / a + 2  # sum of (1 - 1/m)
        divs = [m for m in range(2, max_entry + 1) if (2 * a * I) % m == 0]

        def walk(start, acc, seq):
            if len(seq) >= 3 and acc == target:
                t = make_signature(seq)
                if 2 * sum(1 for m in t if a % m) <= len(b):
                    out.add(t)
            if len(seq) == max_len:
                return
            for i in range(start, len(divs)):
                nxt = acc + 1 - Fraction(1, divs[i])
                if nxt > target:
                    break
                walk(i, nxt, seq + [divs[i]])

        walk(0, Fraction(0), [])
    return out


@pytest.mark.parametrize("basket", sorted(enumerate_baskets(6)), ids=str)
def test_filter_equivalence_oracle(basket):
    assert signatures_for_basket(basket) == brute_force_signatures(basket)
