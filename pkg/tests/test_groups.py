from collections import Counter

import pytest

from ordseq.errors import (
    ActionNotAutomorphism,
    ActionNotHomomorphism,
    NotNormal,
    NotSubgroup,
    PreconditionError,
)
from ordseq.groups import (
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    heisenberg,
    inversion_action,
    permutation_group,
    power_action,
    semidirect_product,
    symmetric,
)
from ordseq.sequences import order_sequence


def test_cyclic_basics():
    g = cyclic(6)
    assert g.size == 6
    assert sorted(g.element_orders()) == [1, 2, 3, 3, 6, 6]
    assert g.exponent() == 6
    assert g.is_abelian()


def test_abelian_products():
    v4 = abelian([2, 2])
    assert all(g == 0 or v4.element_order(g) == 2 for g in range(4))
    assert abelian([]).size == 1
    assert abelian([4, 3]).is_isomorphic(cyclic(12))


def test_dihedral_and_dicyclic_sequences():
    assert str(order_sequence(dihedral(12))) == "1:1,2:7,3:2,6:2"
    assert str(order_sequence(dicyclic(12))) == "1:1,2:1,3:2,4:6,6:2"


def test_dihedral_rejects_odd_order():
    with pytest.raises(PreconditionError):
        dihedral(7)


def test_dicyclic_needs_multiple_of_four():
    with pytest.raises(PreconditionError):
        dicyclic(6)


def test_symmetric_and_alternating():
    s3 = symmetric(3)
    assert s3.size == 6
    assert order_sequence(s3).expanded() == (1, 2, 2, 2, 3, 3)
    assert str(order_sequence(alternating(4))) == "1:1,2:3,3:8"
    assert alternating(5).size == 60
    # degenerate degrees still give a group
    assert symmetric(1).size == 1
    assert alternating(2).size == 1


def test_power_and_inverse():
    g = symmetric(3)
    for a in range(g.size):
        assert g.power(a, -1) == g.inv(a)
        assert g.power(a, 0) == 0
        assert g.mul(a, g.inv(a)) == 0
    assert g.element_order(0) == 1


def test_subgroup_and_quotient():
    g = cyclic(6)
    h = g.closure([2])
    assert set(h) == {0, 2, 4}
    assert g.is_subgroup(h)
    assert g.is_normal(h)
    q = g.quotient(h)
    assert q.size == 2
    with pytest.raises(NotSubgroup):
        g.subgroup([0, 2])


def test_quotient_needs_normal_subgroup():
    g = symmetric(3)
    a = next(x for x in range(g.size) if g.element_order(x) == 2)
    h = g.closure([a])
    assert len(h) == 2
    with pytest.raises(NotNormal):
        g.quotient(h)


def test_center_and_classes():
    d8 = dihedral(8)
    assert len(d8.center()) == 2
    assert not d8.is_abelian()
    s3 = symmetric(3)
    assert sorted(len(c) for c in s3.conjugacy_classes()) == [1, 2, 3]
    assert len(s3.derived_subgroup()) == 3
    assert len(s3.center()) == 1


def test_sylow_and_nilpotency():
    s4 = symmetric(4)
    assert len(s4.sylow_subgroup(2)) == 8
    assert len(s4.sylow_subgroup(3)) == 3
    assert not s4.is_nilpotent()
    assert dicyclic(8).is_nilpotent()
    assert abelian([4, 3]).is_nilpotent()
    assert not symmetric(3).is_nilpotent()


def test_direct_product():
    g = direct_product(cyclic(2), cyclic(3))
    assert g.size == 6
    assert g.is_isomorphic(cyclic(6))
    assert direct_product(symmetric(3), cyclic(2)).size == 12


def test_semidirect_inversion_gives_dihedral():
    act = inversion_action(cyclic(5), cyclic(2))
    g = semidirect_product(act)
    assert g.size == 10
    assert order_sequence(g) == order_sequence(dihedral(10))


def test_action_validation():
    # x -> x**2 is not injective mod 4
    with pytest.raises(ActionNotAutomorphism):
        power_action(cyclic(4), cyclic(2), 2).validate()
    # squaring mod 5 is an automorphism of order 4, too big for C2
    with pytest.raises(ActionNotHomomorphism):
        power_action(cyclic(5), cyclic(2), 2).validate()


def test_isomorphism_checks():
    assert cyclic(4).is_isomorphic(abelian([4]))
    assert not cyclic(4).is_isomorphic(abelian([2, 2]))
    assert dihedral(6).is_isomorphic(symmetric(3))
    assert not dihedral(8).is_isomorphic(dicyclic(8))


def test_permutation_group():
    g = permutation_group([(1, 2, 0)])
    assert g.size == 3
    assert g.is_isomorphic(cyclic(3))


def test_generating_sequence_closes():
    for g in [cyclic(12), symmetric(3), dicyclic(8)]:
        gens = g.generating_sequence()
        assert set(g.closure(gens)) == set(range(g.size))


def test_heisenberg():
    g = heisenberg(3)
    assert g.size == 27
    assert g.exponent() == 3
    assert not g.is_abelian()
    assert g.is_nilpotent()
    assert Counter(g.element_orders())[3] == 26
