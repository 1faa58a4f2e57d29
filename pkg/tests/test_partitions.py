import math

import pytest

from ordseq.errors import (
    NotAbelianPGroupSequence,
    NotMajorized,
    PreconditionError,
    SizeLimitError,
    SizeMismatch,
)
from ordseq.groups import abelian, symmetric
from ordseq.partitions import (
    abelian_order_sequence,
    box_move_chain,
    conjugate,
    cyclic_subgroup_counts,
    defining_partition,
    majorizes,
    partition,
    partitions_of,
)
from ordseq.numth import euler_phi
from ordseq.sequences import order_sequence, parse_sequence


def test_partition_validation():
    assert partition([4, 1, 1]) == (4, 1, 1)
    assert partition(()) == ()
    with pytest.raises(PreconditionError):
        partition((0,))
    # parts must already be non-increasing
    with pytest.raises(PreconditionError):
        partition((1, 4, 1))


def test_conjugate():
    assert conjugate((4, 1, 1)) == (3, 1, 1, 1)
    assert conjugate(()) == ()
    for lam in partitions_of(8):
        assert conjugate(conjugate(lam)) == lam
        assert sum(conjugate(lam)) == 8


def test_majorizes():
    assert majorizes((4,), (2, 2))
    assert not majorizes((2, 2), (4,))
    assert not majorizes((4, 1, 1), (3, 3))
    assert not majorizes((3, 3), (4, 1, 1))
    for lam in partitions_of(7):
        assert majorizes(lam, lam)


def test_majorization_flips_under_conjugation():
    parts = partitions_of(7)
    for a in parts:
        for b in parts:
            assert majorizes(a, b) == majorizes(conjugate(b), conjugate(a))
            if a != b:
                assert not (majorizes(a, b) and majorizes(b, a))


def test_partitions_of():
    rows = partitions_of(10)
    assert len(rows) == 42
    assert rows[0] == (10,)
    assert rows[-1] == (1,) * 10
    assert all(rows[i] > rows[i + 1] for i in range(len(rows) - 1))
    assert partitions_of(0) == [()]


def test_partitions_of_limits():
    with pytest.raises(SizeLimitError):
        partitions_of(61)
    with pytest.raises(PreconditionError):
        partitions_of(-1)


def test_abelian_order_sequence_frozen():
    s = abelian_order_sequence(2, (4, 1, 1))
    assert str(s) == "1:1,2:7,4:8,8:16,16:32"


@pytest.mark.parametrize("p", [2, 3])
def test_abelian_order_sequence_matches_group(p):
    for n in range(1, 6):
        for lam in partitions_of(n):
            g = abelian([p**k for k in lam])
            assert abelian_order_sequence(p, lam) == order_sequence(g)


def test_cyclic_subgroup_counts():
    c = cyclic_subgroup_counts(2, (4, 1, 1))
    assert c.total == 20
    assert c.part_product == 20
    assert sum(c.element_counts) == 2**6 - 1
    for j, (elems, subs) in enumerate(zip(c.element_counts, c.subgroup_counts), start=1):
        assert subs * euler_phi(2**j) == elems

    c = cyclic_subgroup_counts(2, (3, 3))
    assert c.total == 22
    assert c.part_product == 16


def test_cyclic_counts_agree_with_sequence():
    for lam in partitions_of(5):
        c = cyclic_subgroup_counts(3, lam)
        s = abelian_order_sequence(3, lam)
        for j, count in enumerate(c.element_counts, start=1):
            assert count == s.multiplicity(3**j)


def _part_product(parts):
    return math.prod(r + 1 for r in parts)


def test_box_move_chain_endpoints():
    chain = box_move_chain((4, 1, 1), (2, 2, 2))
    assert chain[0] == (4, 1, 1)
    assert chain[-1] == (2, 2, 2)
    assert box_move_chain((3, 1), (3, 1)) == []


def test_box_move_chain_steps_everywhere():
    parts = partitions_of(6)
    for b in parts:
        for c in parts:
            if not majorizes(b, c) or b == c:
                continue
            chain = box_move_chain(b, c)
            assert chain[0] == b and chain[-1] == c
            for x, y in zip(chain, chain[1:]):
                assert sum(x) == sum(y)
                assert majorizes(x, y) and x != y
                # one box moves per step, raising the subgroup count product
                width = max(len(x), len(y))
                padded_x = x + (0,) * (width - len(x))
                padded_y = y + (0,) * (width - len(y))
                assert sum(abs(a - b2) for a, b2 in zip(padded_x, padded_y)) == 2
                assert _part_product(y) > _part_product(x)


def test_box_move_chain_errors():
    with pytest.raises(SizeMismatch):
        box_move_chain((3,), (2, 2))
    with pytest.raises(NotMajorized):
        box_move_chain((3, 3), (4, 1, 1))


@pytest.mark.parametrize("p", [2, 3])
def test_defining_partition_round_trip(p):
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert defining_partition(abelian_order_sequence(p, lam), p) == lam


def test_defining_partition_rejects_non_p_groups():
    with pytest.raises(NotAbelianPGroupSequence):
        defining_partition(order_sequence(symmetric(3)), 2)
    with pytest.raises(NotAbelianPGroupSequence):
        defining_partition(parse_sequence("1:1,4:12"), 2)
    with pytest.raises(PreconditionError):
        defining_partition(parse_sequence("1:1,2:3"), 6)
