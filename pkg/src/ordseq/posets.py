"""Finite posets built from a comparison callable, with Hasse diagrams.

Items compare through a user relation that is only assumed reflexive and
transitive; mutually comparable items are collapsed into one class unless
the caller forbids that.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import AntisymmetryViolation, ParseError, PreconditionError


@dataclass(frozen=True)
class Poset:
    """Collapsed partial order; names label classes, members list items."""

    names: tuple[str, ...]
    members: tuple[tuple[str, ...], ...]
    relation: tuple[tuple[bool, ...], ...]

    def index(self, name: str) -> int:
        for i, nm in enumerate(self.names):
            if nm == name or name in self.members[i]:
                return i
        raise PreconditionError(f"{name} is not in the poset")

    def leq(self, a: str, b: str) -> bool:
        return self.relation[self.index(a)][self.index(b)]


def build_poset(items, leq, collapse: bool = True) -> Poset:
    """Build a poset from (name, value) pairs under the given relation.

    When collapse is set, values comparable both ways share a class named
    by joining their sorted item names with '='; otherwise such a pair
    raises AntisymmetryViolation.
    """
    items = list(items)
    names = [name for name, _ in items]
    if len(set(names)) != len(names):
        raise PreconditionError("item names must be distinct")
    k = len(items)
    rel = [[leq(items[i][1], items[j][1]) for j in range(k)] for i in range(k)]
    for i in range(k):
        if not rel[i][i]:
            raise PreconditionError(f"relation is not reflexive at {names[i]}")
    cls_of = list(range(k))
    for i in range(k):
        for j in range(i + 1, k):
            if rel[i][j] and rel[j][i]:
                if not collapse:
                    raise AntisymmetryViolation(f"{names[i]} and {names[j]} compare below each other")
                root = min(cls_of[i], cls_of[j])
                old_i, old_j = cls_of[i], cls_of[j]
                for t in range(k):
                    if cls_of[t] in (old_i, old_j):
                        cls_of[t] = root
    reps = sorted(set(cls_of))
    members = tuple(tuple(sorted(names[t] for t in range(k) if cls_of[t] == r)) for r in reps)
    class_names = tuple("=".join(m) for m in members)
    cr = len(reps)
    crel = [[False] * cr for _ in range(cr)]
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            crel[a][b] = rel[ra][rb]
    for a in range(cr):
        for b in range(cr):
            for c in range(cr):
                if crel[a][b] and crel[b][c] and not crel[a][c]:
                    raise PreconditionError("relation is not transitive")
    for a in range(cr):
        for b in range(cr):
            if a != b and crel[a][b] and crel[b][a]:
                raise AssertionError("collapsing must leave an antisymmetric relation")
    return Poset(class_names, members, tuple(tuple(row) for row in crel))


def hasse(poset: Poset) -> list[tuple[int, int]]:
    """Cover pairs (lower, higher) of the transitive reduction."""
    k = len(poset.names)
    rel = poset.relation
    covers = []
    for a in range(k):
        for b in range(k):
            if a == b or not rel[a][b]:
                continue
            if any(rel[a][c] and rel[c][b] for c in range(k) if c not in (a, b)):
                continue
            covers.append((a, b))
    # the reduction must regenerate the original order
    reach = [[a == b for b in range(k)] for a in range(k)]
    for a, b in covers:
        reach[a][b] = True
    for mid in range(k):
        for a in range(k):
            if reach[a][mid]:
                for b in range(k):
                    if reach[mid][b]:
                        reach[a][b] = True
    if any(reach[a][b] != rel[a][b] for a in range(k) for b in range(k)):
        raise AssertionError("transitive reduction must close back to the relation")
    return covers


def extremes(poset: Poset):
    """(maximal names, minimal names, unique maximum name or None)."""
    k = len(poset.names)
    rel = poset.relation
    maximal = [poset.names[a] for a in range(k) if not any(rel[a][b] for b in range(k) if b != a)]
    minimal = [poset.names[a] for a in range(k) if not any(rel[b][a] for b in range(k) if b != a)]
    unique_max = maximal[0] if len(maximal) == 1 else None
    return maximal, minimal, unique_max


def render(poset: Poset, fmt: str = "dot") -> str:
    """Render the Hasse diagram, with classes listed in name order."""
    order = sorted(range(len(poset.names)), key=lambda i: poset.names[i])
    pos = {old: new for new, old in enumerate(order)}
    covers = sorted((pos[a], pos[b]) for a, b in hasse(poset))
    names = [poset.names[i] for i in order]
    members = [poset.members[i] for i in order]
    if fmt == "dot":
        ids = []
        used: dict[str, int] = {}
        for name in names:
            ident = sanitize_identifier(name)
            if ident[0].isdigit():
                ident = "n_" + ident
            used[ident] = used.get(ident, 0) + 1
            ids.append(ident if used[ident] == 1 else f"{ident}_{used[ident]}")
        lines = ["digraph {", "  rankdir=BT;"]
        for ident, name in zip(ids, names):
            label = name.replace('"', "'")
            lines.append(f'  {ident} [label="{label}"];')
        for a, b in covers:
            lines.append(f"  {ids[a]} -> {ids[b]};")
        lines.append("}")
        return "\n".join(lines)
    if fmt == "json":
        payload = {
            "items": [
                {"name": name, "members": list(mem)}
                for name, mem in zip(names, members)
            ],
            "covers": [[a, b] for a, b in covers],
        }
        return json.dumps(payload, indent=2)
    raise PreconditionError(f"unknown render format {fmt!r}")


def hasse_from_json(text: str) -> dict:
    """Parse and validate the JSON rendering; returns the payload dict."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict) or "items" not in payload or "covers" not in payload:
        raise ParseError("expected an object with items and covers")
    items = payload["items"]
    if not all(isinstance(it, dict) and "name" in it and "members" in it for it in items):
        raise ParseError("each item needs a name and members")
    k = len(items)
    for pair in payload["covers"]:
        if len(pair) != 2 or not all(isinstance(x, int) and 0 <= x < k for x in pair):
            raise ParseError(f"cover {pair} does not index the items")
    return payload


def sanitize_identifier(name: str) -> str:
    """Collapse a free-form name into an identifier-safe token."""
    return re.sub(r"[^0-9A-Za-z]+", "_", name).strip("_") or "item"
