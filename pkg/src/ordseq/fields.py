"""Finite fields of prime-power order and the groups built on them.

Field elements are integer codes 0..q-1 whose base-p digits are the
coefficients of a polynomial, constant digit first.  The modulus is the
first monic irreducible polynomial in code order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NoSuchOrder, PreconditionError, SizeLimitError
from .groups import FiniteGroup
from .numth import divisors, factorize, is_prime

FIELD_SIZE_LIMIT = 4096
_TABLE_LIMIT = 256


def _digits_of(code: int, length: int, p: int) -> list[int]:
    out = []
    for _ in range(length):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _poly_divisible(dividend, divisor, p: int) -> bool:
    """Whether a monic divisor divides the polynomial, both little-endian."""
    rem = list(dividend)
    dv = len(divisor) - 1
    for i in range(len(rem) - 1, dv - 1, -1):
        c = rem[i]
        if c:
            for j in range(dv + 1):
                rem[i - dv + j] = (rem[i - dv + j] - c * divisor[j]) % p
    return not any(rem)


class FiniteField:
    """Field with p**d elements and arithmetic on integer codes."""

    def __init__(self, p: int, d: int):
        if not is_prime(p) or d < 1:
            raise PreconditionError("field order must be a prime power")
        if p**d > FIELD_SIZE_LIMIT:
            raise SizeLimitError(f"field order {p**d} exceeds the cap {FIELD_SIZE_LIMIT}")
        self.p = p
        self.d = d
        self.order = p**d
        self.modulus = self._find_modulus()
        self._add_table: list[list[int]] | None = None
        self._mul_table: list[list[int]] | None = None
        if self.order <= _TABLE_LIMIT:
            self._add_table = [[self._add(a, b) for b in range(self.order)] for a in range(self.order)]
            self._mul_table = [[self._mul(a, b) for b in range(self.order)] for a in range(self.order)]

    def __repr__(self) -> str:
        return f"<FiniteField of order {self.order}>"

    def _find_modulus(self) -> tuple[int, ...]:
        p, d = self.p, self.d
        if d == 1:
            return (0,)
        for m in range(self.order):
            low = _digits_of(m, d, p)
            poly = low + [1]
            composite = False
            for k in range(1, d):
                for t in range(p**k):
                    if _poly_divisible(poly, _digits_of(t, k, p) + [1], p):
                        composite = True
                        break
                if composite:
                    break
            if not composite:
                return tuple(low)
        raise AssertionError("an irreducible polynomial always exists")

    def _add(self, a: int, b: int) -> int:
        p = self.p
        da, db = _digits_of(a, self.d, p), _digits_of(b, self.d, p)
        code = 0
        for x, y in zip(reversed(da), reversed(db)):
            code = code * p + (x + y) % p
        return code

    def _mul(self, a: int, b: int) -> int:
        p, d = self.p, self.d
        da, db = _digits_of(a, d, p), _digits_of(b, d, p)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, mj in enumerate(self.modulus):
                    prod[i - d + j] = (prod[i - d + j] - c * mj) % p
        code = 0
        for x in reversed(prod[:d]):
            code = code * p + x
        return code

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add(a, b)

    def neg(self, a: int) -> int:
        p = self.p
        code = 0
        for x in reversed(_digits_of(a, self.d, p)):
            code = code * p + -x % p
        return code

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = 1
        while k:
            if k & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            k >>= 1
        return out

    def element_order(self, a: int) -> int:
        if a == 0:
            raise PreconditionError("0 has no multiplicative order")
        for k in divisors(self.order - 1):
            if self.pow(a, k) == 1:
                return k
        raise AssertionError("the order divides the size of the unit group")


@dataclass(frozen=True)
class FieldElement:
    """Wrapper giving field codes ordinary operator syntax."""

    field: FiniteField
    code: int

    def _lift(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise PreconditionError("elements live in different fields")
            return other.code
        return other % self.field.p

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._lift(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._lift(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._lift(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(self._lift(other))))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.code, k))

    def order(self) -> int:
        return self.field.element_order(self.code)


@lru_cache(maxsize=None)
def make_field(q: int) -> FiniteField:
    fact = factorize(q)
    if len(fact) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    p, d = fact[0]
    return FiniteField(p, d)


def element_of_order(field: FiniteField, r: int) -> FieldElement:
    """The lowest-coded field element of multiplicative order r."""
    if r < 1 or (field.order - 1) % r:
        raise NoSuchOrder(f"no element of order {r} in a unit group of size {field.order - 1}")
    for a in range(1, field.order):
        if field.element_order(a) == r:
            return FieldElement(field, a)
    raise AssertionError("a cyclic unit group has elements of every dividing order")


class AffineGroup(FiniteGroup):
    """Maps x -> a*x + b over a finite field, with a in a chosen cyclic
    subgroup of the units.

    An element (i, b) is the map x -> w**i * x + b for a fixed unit w;
    the index is i * q + b.
    """

    def __init__(self, field: FiniteField, mult_order: int, name: str | None = None):
        w = element_of_order(field, mult_order).code
        q = field.order
        super().__init__(mult_order * q, name or f"Aff({q},{mult_order})")
        self.field = field
        ws = [1]
        for _ in range(mult_order - 1):
            ws.append(field.mul(ws[-1], w))
        self.ws = tuple(ws)
        self._finalize()

    def mul(self, x: int, y: int) -> int:
        q = self.field.order
        i1, b1 = divmod(x, q)
        i2, b2 = divmod(y, q)
        b = self.field.add(self.field.mul(self.ws[i1], b2), b1)
        return (i1 + i2) % len(self.ws) * q + b

    def inv(self, x: int) -> int:
        q = self.field.order
        i, b = divmod(x, q)
        j = -i % len(self.ws)
        return j * q + self.field.neg(self.field.mul(self.ws[j], b))


def affine_frobenius_group(p: int, d: int, q: int) -> AffineGroup:
    """The affine maps x -> a*x + b with a of multiplicative order q."""
    return AffineGroup(make_field(p**d), q)


def _matmul(f: FiniteField, a, b) -> tuple[int, ...]:
    out = []
    for i in range(3):
        for j in range(3):
            s = 0
            for k in range(3):
                s = f.add(s, f.mul(a[3 * i + k], b[3 * k + j]))
            out.append(s)
    return tuple(out)


def _adjugate(f: FiniteField, m) -> tuple[int, ...]:
    # transpose of the cofactor matrix; in characteristic 2 no signs arise
    def minor(r1, r2, c1, c2):
        return f.sub(f.mul(m[3 * r1 + c1], m[3 * r2 + c2]), f.mul(m[3 * r1 + c2], m[3 * r2 + c1]))

    rows = (1, 2), (0, 2), (0, 1)
    out = [0] * 9
    for i in range(3):
        for j in range(3):
            r1, r2 = rows[j]
            c1, c2 = rows[i]
            out[3 * i + j] = minor(r1, r2, c1, c2)
    return tuple(out)


class PSL34Group(FiniteGroup):
    """Projective special linear group of 3x3 matrices over the 4-element
    field, with conjugates of a matrix by scalars collapsed to one coset.

    Elements are the lexicographically least members of their scalar
    cosets, found by closing six elementary transvections.
    """

    def __init__(self):
        f = make_field(4)
        self.field = f
        x = element_of_order(f, 3).code
        self._scalars = (x, f.mul(x, x))

        def canonical(m):
            best = m
            for s in self._scalars:
                c = tuple(f.mul(s, e) for e in m)
                if c < best:
                    best = c
            return best

        self._canonical = canonical
        ident = (1, 0, 0, 0, 1, 0, 0, 0, 1)
        gens = []
        for pos in (1, 5, 6):
            for c in (1, x):
                m = list(ident)
                m[pos] = c
                gens.append(tuple(m))
        elems = [canonical(ident)]
        index = {elems[0]: 0}
        head = 0
        while head < len(elems):
            cur = elems[head]
            head += 1
            for g in gens:
                y = canonical(_matmul(f, cur, g))
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
        if len(elems) != 20160:
            raise PreconditionError(f"transvection closure found {len(elems)} cosets, not 20160")
        self._elems = elems
        self._index = index
        super().__init__(len(elems), "PSL(3,4)")
        self._finalize()

    def mul(self, a: int, b: int) -> int:
        return self._index[self._canonical(_matmul(self.field, self._elems[a], self._elems[b]))]

    def inv(self, a: int) -> int:
        return self._index[self._canonical(_adjugate(self.field, self._elems[a]))]


@lru_cache(maxsize=None)
def psl_3_4() -> PSL34Group:
    return PSL34Group()
