"""Partitions, majorization, and abelian p-group order sequences.

A partition is a tuple of positive parts in non-increasing order.  For a
prime p, the partition (a_1, ..., a_r) describes the abelian group with
cyclic factors of order p**a_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    NotAbelianPGroupSequence,
    NotMajorized,
    PreconditionError,
    SizeLimitError,
    SizeMismatch,
)
from .numth import is_prime
from .sequences import OrderSequence

MAX_PARTITION_TOTAL = 60


def partition(parts) -> tuple[int, ...]:
    """Validate and normalize a partition given as an iterable of parts."""
    parts = tuple(int(x) for x in parts)
    if any(x < 1 for x in parts):
        raise PreconditionError("parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise PreconditionError("parts must be non-increasing")
    return parts


def conjugate(a) -> tuple[int, ...]:
    """Transpose of the partition diagram."""
    a = partition(a)
    if not a:
        return ()
    return tuple(sum(1 for x in a if x >= k) for k in range(1, a[0] + 1))


def majorizes(a, b) -> bool:
    """Whether every prefix sum of a is at least the matching one of b."""
    a, b = partition(a), partition(b)
    if sum(a) != sum(b):
        raise SizeMismatch(f"partitions have sizes {sum(a)} and {sum(b)}")
    ca = cb = 0
    for i in range(max(len(a), len(b))):
        ca += a[i] if i < len(a) else 0
        cb += b[i] if i < len(b) else 0
        if ca < cb:
            return False
    return True


def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise PreconditionError("cannot partition a negative total")
    if n > MAX_PARTITION_TOTAL:
        raise SizeLimitError(f"partition enumeration is capped at {MAX_PARTITION_TOTAL}")
    out: list[tuple[int, ...]] = []

    def gen(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            out.append(prefix)
            return
        for part in range(min(rest, cap), 0, -1):
            gen(rest - part, part, prefix + (part,))

    gen(n, n, ())
    return out


def abelian_order_sequence(p: int, a) -> OrderSequence:
    """Order sequence of the abelian p-group with cyclic factors p**a_i.

    The count of elements of order dividing p**j is p to the j-th prefix
    sum of the conjugate partition.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    a = partition(a)
    counts = {1: 1}
    sigma = 0
    for j, s in enumerate(conjugate(a), start=1):
        prev = sigma
        sigma += s
        counts[p**j] = p**sigma - p**prev
    return OrderSequence(counts)


@dataclass(frozen=True)
class CyclicCounts:
    """Cyclic subgroup statistics of an abelian p-group.

    element_counts[j-1] and subgroup_counts[j-1] count the elements and
    the cyclic subgroups of order p**j; total includes the trivial
    subgroup.  part_product is the product of (part + 1) over the
    defining partition, which counts something different in general.
    """

    element_counts: tuple[int, ...]
    subgroup_counts: tuple[int, ...]
    total: int
    part_product: int


def cyclic_subgroup_counts(p: int, a) -> CyclicCounts:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    a = partition(a)
    s = conjugate(a)
    element_counts = []
    subgroup_counts = []
    sigma = 0
    for j, sj in enumerate(s, start=1):
        elems = p**sigma * (p**sj - 1)
        sigma += sj
        element_counts.append(elems)
        phi = p ** (j - 1) * (p - 1)
        if elems % phi:
            raise AssertionError("order-p**j elements split evenly into cyclic subgroups")
        subgroup_counts.append(elems // phi)
    part_product = math.prod(x + 1 for x in a)
    return CyclicCounts(
        element_counts=tuple(element_counts),
        subgroup_counts=tuple(subgroup_counts),
        total=1 + sum(subgroup_counts),
        part_product=part_product,
    )


def box_move_chain(b, c) -> list[tuple[int, ...]]:
    """A chain of single-box moves from b down to c, inclusive.

    Each step moves one box from an earlier row to a later row, stays a
    valid partition, and still majorizes c.  Returns [] when b == c.
    """
    b, c = partition(b), partition(c)
    if sum(b) != sum(c):
        raise SizeMismatch(f"partitions have sizes {sum(b)} and {sum(c)}")
    if not majorizes(b, c):
        raise NotMajorized(f"{b} does not majorize {c}")
    if b == c:
        return []
    chain = [b]
    cur = b
    while cur != c:
        padded_c = c + (0,) * max(0, len(cur) - len(c))
        i = next(k for k in range(len(cur)) if cur[k] != (padded_c[k] if k < len(padded_c) else 0))
        r = max(k for k in range(len(cur)) if cur[k] == cur[i])
        moved = None
        for s in range(len(cur), r, -1):
            cand = list(cur) + [0] * (s + 1 - len(cur))
            cand[r] -= 1
            cand[s] += 1
            if any(cand[k] < cand[k + 1] for k in range(len(cand) - 1)):
                continue
            while cand and cand[-1] == 0:
                cand.pop()
            if majorizes(tuple(cand), c):
                moved = tuple(cand)
                break
        if moved is None:
            raise AssertionError("a legal box move always exists strictly above the target")
        chain.append(moved)
        cur = moved
    return chain


def defining_partition(seq: OrderSequence, p: int) -> tuple[int, ...]:
    """Invert abelian_order_sequence: recover the partition from a sequence.

    Raises NotAbelianPGroupSequence when no abelian p-group fits.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if seq.multiplicity(1) != 1:
        raise NotAbelianPGroupSequence("a group has exactly one identity")
    js = []
    for d, _ in seq.pairs:
        if d == 1:
            continue
        j = 0
        while d % p == 0:
            d //= p
            j += 1
        if d != 1:
            raise NotAbelianPGroupSequence("every order must be a power of the prime")
        js.append(j)
    if js != list(range(1, len(js) + 1)):
        raise NotAbelianPGroupSequence("orders must be consecutive powers of the prime")
    s = []
    cum = 1
    sigma = 0
    for j in js:
        cum += seq.multiplicity(p**j)
        # the count of elements of order dividing p**j must be a p-power
        step = 0
        t = cum
        while t % p == 0:
            t //= p
            step += 1
        if t != 1:
            raise NotAbelianPGroupSequence(f"{cum} elements of order dividing p**{j} is not a p-power")
        if step <= sigma:
            raise NotAbelianPGroupSequence("cumulative counts must strictly increase")
        s.append(step - sigma)
        sigma = step
    if any(s[i] < s[i + 1] for i in range(len(s) - 1)):
        raise NotAbelianPGroupSequence("layer sizes must be non-increasing")
    return conjugate(tuple(s))
