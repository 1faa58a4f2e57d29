import os

import pytest

from ordseq.catalog import (
    KNOWN_GROUP_COUNTS,
    abelian_groups_of_order,
    catalog,
    elementary_product,
    frobenius20,
    frobenius21,
    group_by_name,
    modular16,
    nilpotent_groups_of_order,
    semidihedral16,
    standard_family,
    supported_orders,
)
from ordseq.errors import PreconditionError, UnsupportedOrderError
from ordseq.sequences import order_sequence


def test_known_counts_table():
    assert KNOWN_GROUP_COUNTS == {
        1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
        11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 20: 5, 21: 2, 60: 13,
    }
    assert supported_orders() == tuple(sorted(KNOWN_GROUP_COUNTS))


@pytest.mark.parametrize("n", sorted(KNOWN_GROUP_COUNTS))
def test_catalog_is_complete(n):
    pairs = catalog(n)
    assert len(pairs) == KNOWN_GROUP_COUNTS[n]
    names = [name for name, _ in pairs]
    assert len(set(names)) == len(names)
    assert all(g.size == n for _, g in pairs)


def test_group_by_name():
    g = group_by_name(16, "M16")
    assert g.size == 16
    with pytest.raises(UnsupportedOrderError):
        group_by_name(16, "nope")


def test_unsupported_orders():
    with pytest.raises(UnsupportedOrderError):
        catalog(17)
    with pytest.raises(UnsupportedOrderError):
        catalog(0)


def test_order16_names():
    assert {name for name, _ in catalog(16)} == {
        "C16", "C8xC2", "C4xC4", "C4xC2xC2", "C2xC2xC2xC2", "D16", "Q16",
        "SD16", "M16", "D8xC2", "Q8xC2", "C4:C4", "(C2xC2):C4", "D8*C4",
    }


def test_order60_names():
    assert {name for name, _ in catalog(60)} == {
        "C60", "C2xC30", "A5", "D60", "Dic60", "C3xD20", "C5xD12",
        "C3xDic20", "C5xDic12", "C3xF20", "C15:C4", "S3xD10", "C5xA4",
    }
    assert str(order_sequence(group_by_name(60, "A5"))) == "1:1,2:15,3:20,5:24"


def test_nilpotent_products():
    groups = nilpotent_groups_of_order(60)
    assert len(groups) == 2
    assert all(g.size == 60 for g in groups)
    assert {str(order_sequence(g)) for g in groups} == {
        str(order_sequence(group_by_name(60, "C60"))),
        str(order_sequence(group_by_name(60, "C2xC30"))),
    }
    assert len(nilpotent_groups_of_order(12)) == 2
    # every group of order 16 is nilpotent
    assert len(nilpotent_groups_of_order(16)) == 14


def test_abelian_filter():
    assert len(abelian_groups_of_order(16)) == 5
    # works beyond the catalog orders
    assert len(abelian_groups_of_order(36)) == 4
    assert all(g.size == 36 for g in abelian_groups_of_order(36))


def test_elementary_product():
    g = elementary_product(12)
    assert g.size == 12
    assert g.exponent() == 6
    assert elementary_product(8).exponent() == 2
    assert elementary_product(1).size == 1


def test_named_constructions():
    assert str(order_sequence(frobenius20())) == "1:1,2:5,4:10,5:4"
    assert str(order_sequence(frobenius21())) == "1:1,3:14,7:6"
    assert str(order_sequence(modular16())) == "1:1,2:3,4:4,8:8"
    assert str(order_sequence(semidihedral16())) == "1:1,2:5,4:6,8:4"


def test_standard_family():
    assert standard_family("dihedral", (8,)).size == 8
    assert standard_family("F20").size == 20
    with pytest.raises(PreconditionError):
        standard_family("nope")
    with pytest.raises(PreconditionError):
        standard_family("dihedral", (8, 2))


def test_catalog_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("ORDSEQ_CACHE_DIR", str(tmp_path))
    catalog.cache_clear()
    try:
        first = [(name, str(order_sequence(g))) for name, g in catalog(20)]
        assert any(p.suffix == ".json" for p in tmp_path.iterdir())
        catalog.cache_clear()
        second = [(name, str(order_sequence(g))) for name, g in catalog(20)]
        assert first == second
    finally:
        catalog.cache_clear()
