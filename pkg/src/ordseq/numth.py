"""Small number-theoretic helpers used throughout the package.

Everything here works on plain Python ints and stays exact; inputs are
desk scale so trial division is plenty.
"""

from __future__ import annotations

import math
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Return True when n is prime, by trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Return the prime factorization of n as ((p, exponent), ...) with p ascending."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: list[tuple[int, int]] = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return tuple(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    """Return the distinct primes dividing n, ascending."""
    return tuple(p for p, _ in factorize(n))


def divisors(n: int) -> list[int]:
    """Return all positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    """Return the count of integers in 1..n coprime to n."""
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Return the least k >= 1 with a**k == 1 mod n; a must be a unit mod n."""
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    for k in divisors(euler_phi(n)):
        if pow(a, k, n) == 1:
            return k
    raise AssertionError("order must divide phi(n)")
