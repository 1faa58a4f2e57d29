"""Complete catalogs of the groups of supported orders.

Each catalog lists one (name, group) pair per isomorphism type, built
from the formula-backed constructors.  Orders are limited to those with
complete hand-checkable lists; anything else raises
UnsupportedOrderError.  Set ORDSEQ_CACHE_DIR to persist catalogs as
multiplication tables between runs.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from itertools import product
from pathlib import Path

from .errors import PreconditionError, UnsupportedOrderError
from .groups import (
    CyclicGroup,
    DicyclicGroup,
    FiniteGroup,
    SemidirectProductGroup,
    TableGroup,
    abelian,
    alternating,
    cyclic,
    cyclic_action,
    dihedral,
    direct_product,
    heisenberg,
    inversion_action,
    power_action,
    symmetric,
)
from .numth import factorize

KNOWN_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
    11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 20: 5, 21: 2, 60: 13,
}

# Cross-reference ids in the standard small-group library numbering,
# recorded as documentation only; nothing computes from them.  Ids 9,
# 10 and 11 at order 60 are, as a set, C5xA4, C3xD20 and C5xD12.
SMALL_GROUP_IDS = {
    "Dic12": (12, 1),
    "A4": (12, 3),
    "C60": (60, 4),
    "A5": (60, 5),
    "C2xC30": (60, 13),
}

_CACHE_VERSION = "v1"
_CACHE_TABLE_LIMIT = 1024


def supported_orders() -> tuple[int, ...]:
    return tuple(sorted(KNOWN_GROUP_COUNTS))


def frobenius20() -> SemidirectProductGroup:
    """Order 20, a five-cycle twisted by an order-4 multiplier."""
    return SemidirectProductGroup(power_action(CyclicGroup(5), CyclicGroup(4), 2), "F20")


def frobenius21() -> SemidirectProductGroup:
    """Order 21, a seven-cycle twisted by an order-3 multiplier."""
    return SemidirectProductGroup(power_action(CyclicGroup(7), CyclicGroup(3), 2), "F21")


def modular16() -> SemidirectProductGroup:
    """The modular group of order 16: C8 twisted by the fifth-power map."""
    return SemidirectProductGroup(power_action(CyclicGroup(8), CyclicGroup(2), 5), "M16")


def semidihedral16() -> SemidirectProductGroup:
    """The semidihedral group of order 16: C8 twisted by the cube map."""
    return SemidirectProductGroup(power_action(CyclicGroup(8), CyclicGroup(2), 3), "SD16")


_FAMILIES = {
    "dihedral": (1, lambda m: dihedral(m)),
    "dicyclic": (1, lambda m: DicyclicGroup(m)),
    "symmetric": (1, lambda m: symmetric(m)),
    "alternating": (1, lambda m: alternating(m)),
    "heisenberg": (1, lambda p: heisenberg(p)),
    "modular16": (0, modular16),
    "semidihedral16": (0, semidihedral16),
    "F20": (0, frobenius20),
    "F21": (0, frobenius21),
}


def standard_family(name: str, params: tuple[int, ...] = ()) -> FiniteGroup:
    """Build a named standard group; parametric families take their size."""
    if name not in _FAMILIES:
        raise PreconditionError(f"unknown standard family {name!r}")
    arity, build = _FAMILIES[name]
    if len(params) != arity:
        raise PreconditionError(f"family {name} takes {arity} parameter(s), got {len(params)}")
    return build(*params)


def _order16() -> list[FiniteGroup]:
    c4_on_c4 = SemidirectProductGroup(inversion_action(CyclicGroup(4), CyclicGroup(4)), "C4:C4")
    swap = (0, 2, 1, 3)
    v4_by_c4 = SemidirectProductGroup(cyclic_action(abelian([2, 2]), CyclicGroup(4), swap), "(C2xC2):C4")
    d8xc4 = direct_product(dihedral(8), cyclic(4))
    # the rotation square in the left factor paired with the square in the
    # right factor spans the order-2 subgroup glued over
    glued = d8xc4.quotient(d8xc4.closure([4 * 4 + 2]), "D8*C4")
    return [
        cyclic(16),
        abelian([8, 2]),
        abelian([4, 4]),
        abelian([4, 2, 2]),
        abelian([2, 2, 2, 2]),
        dihedral(16),
        DicyclicGroup(16, "Q16"),
        semidihedral16(),
        modular16(),
        direct_product(dihedral(8), cyclic(2), "D8xC2"),
        direct_product(DicyclicGroup(8, "Q8"), cyclic(2), "Q8xC2"),
        c4_on_c4,
        v4_by_c4,
        glued,
    ]


def _order60() -> list[FiniteGroup]:
    return [
        cyclic(60),
        abelian([2, 30], "C2xC30"),
        alternating(5),
        dihedral(60),
        DicyclicGroup(60),
        direct_product(cyclic(3), dihedral(20), "C3xD20"),
        direct_product(cyclic(5), dihedral(12), "C5xD12"),
        direct_product(cyclic(3), DicyclicGroup(20), "C3xDic20"),
        direct_product(cyclic(5), DicyclicGroup(12), "C5xDic12"),
        direct_product(cyclic(3), frobenius20(), "C3xF20"),
        SemidirectProductGroup(power_action(CyclicGroup(15), CyclicGroup(4), 2), "C15:C4"),
        direct_product(symmetric(3), dihedral(10), "S3xD10"),
        direct_product(cyclic(5), alternating(4), "C5xA4"),
    ]


def _build_catalog(n: int) -> list[FiniteGroup]:
    if n in (1, 2, 3, 5, 7, 11, 13):
        return [cyclic(n)]
    if n == 6:
        return [cyclic(6), symmetric(3)]
    if n in (10, 14):
        return [cyclic(n), dihedral(n)]
    if n == 4:
        return [cyclic(4), abelian([2, 2])]
    if n == 9:
        return [cyclic(9), abelian([3, 3])]
    if n == 15:
        return [cyclic(15)]
    if n == 8:
        return [cyclic(8), abelian([4, 2]), abelian([2, 2, 2]), dihedral(8), DicyclicGroup(8, "Q8")]
    if n == 12:
        return [cyclic(12), abelian([2, 6], "C2xC6"), dihedral(12), DicyclicGroup(12), alternating(4)]
    if n == 16:
        return _order16()
    if n == 20:
        return [cyclic(20), abelian([2, 10], "C2xC10"), dihedral(20), DicyclicGroup(20), frobenius20()]
    if n == 21:
        return [cyclic(21), frobenius21()]
    if n == 60:
        return _order60()
    raise UnsupportedOrderError(f"no complete catalog for order {n}")


def _cache_path(n: int) -> Path | None:
    root = os.environ.get("ORDSEQ_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"catalog-{_CACHE_VERSION}-{n}.json"


def _load_cached(path: Path, n: int):
    try:
        entries = json.loads(path.read_text())
        pairs = tuple((e["name"], TableGroup(e["table"], e["name"])) for e in entries)
    except Exception:
        return None
    if len(pairs) != KNOWN_GROUP_COUNTS[n] or any(g.size != n for _, g in pairs):
        return None
    return pairs


def _save_cached(path: Path, pairs) -> None:
    if any(g.size > _CACHE_TABLE_LIMIT for _, g in pairs):
        return
    entries = [
        {"name": name, "table": [[g.mul(a, b) for b in range(g.size)] for a in range(g.size)]}
        for name, g in pairs
    ]
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(entries))
        os.replace(tmp, path)
    except OSError:
        pass


@lru_cache(maxsize=None)
def catalog(n: int) -> tuple[tuple[str, FiniteGroup], ...]:
    """All groups of order n up to isomorphism, as (name, group) pairs."""
    if n not in KNOWN_GROUP_COUNTS:
        raise UnsupportedOrderError(f"no complete catalog for order {n}")
    path = _cache_path(n)
    if path is not None and path.exists():
        cached = _load_cached(path, n)
        if cached is not None:
            return cached
    pairs = tuple((g.name, g) for g in _build_catalog(n))
    if len(pairs) != KNOWN_GROUP_COUNTS[n]:
        raise AssertionError(f"catalog for order {n} has the wrong length")
    if len({name for name, _ in pairs}) != len(pairs):
        raise AssertionError(f"catalog for order {n} has duplicate names")
    if path is not None:
        _save_cached(path, pairs)
    return pairs


def group_by_name(n: int, name: str) -> FiniteGroup:
    for entry, g in catalog(n):
        if entry == name:
            return g
    raise UnsupportedOrderError(f"order {n} has no catalog entry named {name}")


def _p_group_list(p: int, a: int) -> list[FiniteGroup]:
    if a == 1:
        return [cyclic(p)]
    if a == 2:
        return [cyclic(p * p), abelian([p, p])]
    if p == 2 and a in (3, 4):
        return [g for _, g in catalog(2**a)]
    raise UnsupportedOrderError(f"no complete p-group list for {p}**{a}")


@lru_cache(maxsize=None)
def nilpotent_groups_of_order(n: int) -> tuple[FiniteGroup, ...]:
    """All nilpotent groups of order n: products of one group per prime."""
    if n == 1:
        return (cyclic(1),)
    layers = [_p_group_list(p, a) for p, a in factorize(n)]
    out = []
    for combo in product(*layers):
        g = combo[0]
        for extra in combo[1:]:
            g = direct_product(g, extra)
        out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def abelian_groups_of_order(n: int) -> tuple[FiniteGroup, ...]:
    """All abelian groups of order n via partitions of each prime exponent."""
    from .partitions import partitions_of

    if n == 1:
        return (cyclic(1),)
    per_prime = []
    for p, a in factorize(n):
        per_prime.append([tuple(p**part for part in shape) for shape in partitions_of(a)])
    out = []
    for combo in product(*per_prime):
        moduli = [m for shape in combo for m in shape]
        out.append(abelian(moduli))
    return tuple(out)


def elementary_product(n: int) -> FiniteGroup:
    """The product of elementary abelian Sylow subgroups for order n."""
    moduli = [p for p, a in factorize(n) for _ in range(a)]
    return abelian(moduli)
