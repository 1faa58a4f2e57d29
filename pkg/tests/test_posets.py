import json

import pytest

from ordseq.catalog import catalog
from ordseq.errors import AntisymmetryViolation, ParseError, PreconditionError
from ordseq.numth import divisors
from ordseq.posets import (
    build_poset,
    extremes,
    hasse,
    hasse_from_json,
    render,
    sanitize_identifier,
)
from ordseq.sequences import dominates, order_sequence


def _divisor_poset(n):
    items = [(str(d), d) for d in divisors(n)]
    return build_poset(items, lambda a, b: b % a == 0)


def test_divisor_poset_structure():
    poset = _divisor_poset(12)
    assert len(poset.names) == 6
    assert poset.leq("2", "4")
    assert not poset.leq("4", "2")
    assert len(hasse(poset)) == 7
    maximal, minimal, unique_max = extremes(poset)
    assert maximal == ["12"]
    assert minimal == ["1"]
    assert unique_max == "12"


def test_collapse_merges_equal_values():
    poset = build_poset([("b", 0), ("a", 0), ("c", 1)], lambda x, y: x <= y)
    assert "a=b" in poset.names
    assert "c" in poset.names
    assert len(poset.names) == 2


def test_antisymmetry_violation_without_collapse():
    with pytest.raises(AntisymmetryViolation):
        build_poset([("a", 0), ("b", 0)], lambda x, y: x <= y, collapse=False)


def test_build_poset_preconditions():
    with pytest.raises(PreconditionError):
        build_poset([("a", 1), ("a", 2)], lambda x, y: x <= y)
    with pytest.raises(PreconditionError):
        build_poset([("a", 1), ("b", 2)], lambda x, y: x < y)


def _sixteen_poset():
    items = [(name, order_sequence(g)) for name, g in catalog(16)]
    return build_poset(items, lambda a, b: dominates(b, a))


def test_order16_domination_poset():
    poset = _sixteen_poset()
    assert len(poset.names) == 9
    _, _, unique_max = extremes(poset)
    assert unique_max == "C16"
    assert "C4:C4=C4xC4=Q8xC2" in poset.names


def test_render_dot():
    text = render(_sixteen_poset(), "dot")
    assert text.startswith("digraph {")
    assert "rankdir=BT;" in text
    assert '[label="C4:C4=C4xC4=Q8xC2"]' in text
    # identifiers stay DOT-safe even for decorated names
    assert "C2xC2_C4" in text
    assert text.rstrip().endswith("}")


def test_render_dot_numeric_names():
    text = render(_divisor_poset(12), "dot")
    assert "n_12" in text


def test_render_json_round_trip():
    poset = _sixteen_poset()
    payload = hasse_from_json(render(poset, "json"))
    assert len(payload["items"]) == 9
    names = [item["name"] for item in payload["items"]]
    assert names == sorted(names)
    members = [m for item in payload["items"] for m in item["members"]]
    assert len(members) == 14
    k = len(payload["items"])
    assert all(0 <= a < k and 0 <= b < k for a, b in payload["covers"])


def test_render_unknown_format():
    with pytest.raises(PreconditionError):
        render(_divisor_poset(6), "svg")


def test_hasse_from_json_errors():
    with pytest.raises(ParseError):
        hasse_from_json("not json")
    with pytest.raises(ParseError):
        hasse_from_json(json.dumps({"items": []}))
    bad = {"items": [{"name": "a", "members": ["a"]}], "covers": [[0, 5]]}
    with pytest.raises(ParseError):
        hasse_from_json(json.dumps(bad))


def test_sanitize_identifier():
    assert sanitize_identifier("(C2xC2):C4") == "C2xC2_C4"
    assert sanitize_identifier("***") == "item"
    assert sanitize_identifier("C16") == "C16"
