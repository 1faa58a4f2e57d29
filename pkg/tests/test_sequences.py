import math
import random

import pytest
from hypothesis import given, strategies as st

from ordseq.catalog import catalog, supported_orders
from ordseq.errors import LengthMismatch, ParseError, PreconditionError
from ordseq.groups import abelian, alternating, cyclic, dicyclic, direct_product, symmetric
from ordseq.sequences import (
    OrderSequence,
    comparable,
    dominates,
    nilpotent_from_sequence,
    order_sequence,
    parse_sequence,
    plausibility_violation,
    plausible,
    psi,
    psi_k,
    realize,
    rho,
    seq_join,
    seq_product,
    strictly_dominates,
    strong_domination,
    strongly_dominates,
)


def test_parse_and_str_round_trip():
    assert str(parse_sequence("1:1,2:3,4:4")) == "1:1,2:3,4:4"
    assert parse_sequence(" 1:1 , 2:3 ") == parse_sequence("1:1,2:3")
    # repeated orders merge
    assert parse_sequence("1:1,2:1,2:2") == parse_sequence("1:1,2:3")


@pytest.mark.parametrize("text", ["", "1", "1:x", "1:1,,2:1", "a:b"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_sequence(text)


@pytest.mark.parametrize("text", ["0:1", "1:0", "1:-2"])
def test_nonpositive_entries_rejected(text):
    with pytest.raises(PreconditionError):
        parse_sequence(text)


def test_constructor_accepts_mappings():
    s = OrderSequence({1: 1, 2: 3})
    assert s == parse_sequence("1:1,2:3")
    with pytest.raises(PreconditionError):
        OrderSequence([])


def test_cyclic_six_invariants():
    s = order_sequence(cyclic(6))
    assert str(s) == "1:1,2:1,3:2,6:2"
    assert s.total == 6
    assert s.expanded() == (1, 2, 3, 3, 6, 6)
    assert s.orders == (1, 2, 3, 6)
    assert s.multiplicity(6) == 2
    assert s.multiplicity(4) == 0
    assert psi(s) == 21
    assert psi_k(s, 2) == 95
    assert rho(s) == 648


def test_count_up_to():
    s = order_sequence(cyclic(6))
    assert [s.count_up_to(t) for t in range(1, 7)] == [1, 2, 4, 4, 4, 6]


def test_psi_rho_spot_values():
    assert psi(order_sequence(cyclic(4))) == 11
    assert psi(order_sequence(abelian([2, 2]))) == 7
    assert rho(order_sequence(cyclic(8))) == 2**17
    assert rho(order_sequence(dicyclic(8))) == 2**13
    assert rho(order_sequence(symmetric(3))) == 72


def test_dominates():
    c6 = order_sequence(cyclic(6))
    s3 = order_sequence(symmetric(3))
    assert dominates(c6, s3)
    assert not dominates(s3, c6)
    assert strictly_dominates(c6, s3)
    assert dominates(c6, c6)
    assert not strictly_dominates(c6, c6)
    assert comparable(c6, s3)


def test_dominates_needs_equal_length():
    with pytest.raises(LengthMismatch):
        dominates(order_sequence(cyclic(4)), order_sequence(cyclic(6)))


def test_incomparable_pairs():
    assert not comparable(order_sequence(abelian([2, 6])), order_sequence(dicyclic(12)))
    assert not comparable(
        order_sequence(abelian([4, 3, 3])), order_sequence(abelian([2, 2, 9]))
    )


def test_strong_domination_plan():
    top = order_sequence(cyclic(12))
    low = order_sequence(dicyclic(12))
    ok, plan = strong_domination(top, low)
    assert ok
    assert sum(amount for _, _, amount in plan) == 12
    for a_order, b_order, amount in plan:
        assert amount >= 1
        assert a_order % b_order == 0
    # every target multiplicity is used up exactly
    for d, m in low.pairs:
        assert sum(amount for _, b_order, amount in plan if b_order == d) == m
    assert strongly_dominates(top, order_sequence(alternating(4)))


def test_hall_certificate():
    ok, cert = strong_domination(order_sequence(dicyclic(12)), order_sequence(alternating(4)))
    assert not ok
    assert cert.need == 8
    assert cert.have == 4
    assert tuple(sorted(cert.a_orders)) == (1, 2, 4)
    assert tuple(sorted(cert.b_orders)) == (1, 2)
    assert cert.need > cert.have


def test_strong_implies_domination():
    for n in (12, 16):
        seqs = [order_sequence(g) for _, g in catalog(n)]
        for a in seqs:
            for b in seqs:
                ok, _ = strong_domination(a, b)
                if ok:
                    assert dominates(a, b)


def _random_catalog_group(rng, max_order=21):
    orders = [n for n in supported_orders() if 2 <= n <= max_order]
    n = rng.choice(orders)
    return rng.choice(catalog(n))[1]


def test_join_matches_direct_product():
    rng = random.Random(7)
    for _ in range(50):
        g = _random_catalog_group(rng)
        h = _random_catalog_group(rng)
        if g.size * h.size > 400:
            continue
        sa, sb = order_sequence(g), order_sequence(h)
        joined = seq_join(sa, sb)
        assert order_sequence(direct_product(g, h)) == joined
        if math.gcd(g.size, h.size) == 1:
            assert seq_product(sa, sb) == joined
        else:
            assert seq_product(sa, sb) != joined


def test_coprime_psi_rho_multiplicativity():
    rng = random.Random(11)
    done = 0
    while done < 20:
        g = _random_catalog_group(rng)
        h = _random_catalog_group(rng)
        if math.gcd(g.size, h.size) != 1:
            continue
        sa, sb = order_sequence(g), order_sequence(h)
        joined = seq_join(sa, sb)
        assert psi(joined) == psi(sa) * psi(sb)
        assert rho(joined) == rho(sa) ** h.size * rho(sb) ** g.size
        done += 1


def test_noncoprime_product_is_implausible():
    rng = random.Random(13)
    done = 0
    while done < 20:
        g = _random_catalog_group(rng)
        h = _random_catalog_group(rng)
        if math.gcd(g.size, h.size) == 1:
            continue
        s = seq_product(order_sequence(g), order_sequence(h))
        tag, _ = plausibility_violation(s, g.size * h.size)
        assert tag == "mod-p"
        done += 1


@pytest.mark.parametrize(
    "text,n,tag",
    [
        ("1:1,2:1,3:2,6:2", 7, "length"),
        ("1:2,2:4", 6, "identity"),
        ("1:1,4:5", 6, "divides"),
        ("1:1,2:2,3:3", 6, "mod-p"),
        ("1:1,2:3,4:2,8:2", 8, "phi"),
    ],
)
def test_plausibility_rule_order(text, n, tag):
    violation = plausibility_violation(parse_sequence(text), n)
    assert violation is not None
    assert violation[0] == tag


def test_plausible_sequences_pass():
    s = order_sequence(cyclic(6))
    assert plausibility_violation(s, 6) is None
    assert plausible(s, 6) == (True, None)
    # the default length is the sequence total
    assert plausibility_violation(s) is None


def test_nilpotence_from_sequence_matches_groups():
    for n in (6, 8, 12, 16):
        for _, g in catalog(n):
            assert nilpotent_from_sequence(order_sequence(g)) == g.is_nilpotent()


def test_realize():
    same = order_sequence(abelian([4, 4]))
    assert realize(same, 16) == ["C4xC4", "Q8xC2", "C4:C4"]
    assert realize(parse_sequence("1:1,2:3,3:2"), 6) == ["S3"]
    assert realize(parse_sequence("1:1,2:2,3:3"), 6) == []


@given(
    st.dictionaries(
        st.integers(min_value=1, max_value=60),
        st.integers(min_value=1, max_value=30),
        min_size=1,
    )
)
def test_text_round_trip(counts):
    s = OrderSequence(counts)
    assert parse_sequence(str(s)) == s


_SIXTEEN = [order_sequence(g) for _, g in catalog(16)]


@given(st.sampled_from(_SIXTEEN), st.sampled_from(_SIXTEEN), st.sampled_from(_SIXTEEN))
def test_domination_is_transitive(a, b, c):
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)
