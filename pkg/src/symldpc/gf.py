"""Lookup-table arithmetic for the finite fields GF(p^m).

Field elements are canonical integer indices in [0, q) with q = p^m: the
base-p encoding of the polynomial coefficient vector, constant term least
significant.  Index 0 is the additive zero and index 1 the multiplicative
identity.  Each field uses one fixed monic irreducible modulus, the
lexicographically smallest by coefficient vector (constant term first), so
element indices are stable across runs and platforms.

Arithmetic is fully table-driven.  Tables take O(q^2) memory, which is the
practical limit well before the hard q <= 2^16 constructor cap; every
instance this package builds geometry for has q <= 16.
"""

from __future__ import annotations

from functools import lru_cache

from .exceptions import (
    BadParametersError,
    DivideByZeroError,
    NotPrimeError,
    TooLargeError,
)

FIELD_SIZE_CAP = 1 << 16


def _is_prime(n: int) -> bool:
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


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise BadParametersError."""
    if q < 2:
        raise BadParametersError(f"field size must be >= 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise BadParametersError(f"{q} is not a prime power")
    return p, m


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); den must be monic. Low-to-high coeffs."""
    rem = list(num)
    dd = len(den) - 1
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        for i in range(dd + 1):
            rem[k - dd + i] = (rem[k - dd + i] - c * den[i]) % p
    return rem[:dd]


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    m = len(coeffs) - 1
    if coeffs[0] == 0:
        return False
    for deg in range(1, m // 2 + 1):
        for enc in range(p**deg):
            den = _digits(enc, p, deg) + [1]
            if not any(_poly_rem(coeffs, den, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Coefficients are returned low-to-high (constant term first, leading 1
    last); candidates are ordered by the base-p integer encoding of the
    non-leading coefficients.  For m = 1 the polynomial x is returned.
    """
    if m == 1:
        return (0, 1)
    for enc in range(p**m):
        coeffs = _digits(enc, p, m) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldTable:
    """Immutable arithmetic tables for GF(p^m).

    Attributes
    ----------
    p, m, q : characteristic, extension degree, field size q = p^m.
    modulus : coefficients of the monic irreducible modulus, low-to-high.
    add_table, mul_table : q x q tuples of tuples.
    neg_table, inv_table : q-entry tuples (inv_table[0] is None).
    primitive : canonical index of the smallest element of
        multiplicative order q - 1.
    """

    __slots__ = (
        "p",
        "m",
        "q",
        "modulus",
        "add_table",
        "mul_table",
        "neg_table",
        "inv_table",
        "primitive",
    )

    def __init__(self, p: int, m: int = 1):
        if not _is_prime(p):
            raise NotPrimeError(f"characteristic {p} is not prime")
        if m < 1:
            raise BadParametersError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > FIELD_SIZE_CAP:
            raise TooLargeError(f"field size {q} exceeds cap {FIELD_SIZE_CAP}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = smallest_irreducible(p, m)

        digits = [_digits(e, p, m) for e in range(q)]

        add = []
        for a in range(q):
            da = digits[a]
            row = []
            for b in range(q):
                db = digits[b]
                s = 0
                for i in range(m - 1, -1, -1):
                    s = s * p + (da[i] + db[i]) % p
                row.append(s)
            add.append(tuple(row))
        self.add_table = tuple(add)
        self.neg_table = tuple(self._index_of([(-d) % p for d in digits[a]]) for a in range(q))

        # x^k mod modulus for k up to 2(m-1), as coefficient vectors
        xpow = [[0] * m for _ in range(2 * m - 1)]
        cur = [0] * m
        cur[0] = 1
        for k in range(2 * m - 1):
            xpow[k] = list(cur)
            # multiply cur by x
            carry = cur[m - 1]
            cur = [0] + cur[:-1]
            if carry:
                for i in range(m):
                    cur[i] = (cur[i] - carry * self.modulus[i]) % p

        mul = []
        for a in range(q):
            da = digits[a]
            row = []
            for b in range(q):
                db = digits[b]
                acc = [0] * m
                for i in range(m):
                    ci = da[i]
                    if ci == 0:
                        continue
                    for j in range(m):
                        cj = db[j]
                        if cj == 0:
                            continue
                        pw = xpow[i + j]
                        c = ci * cj
                        for t in range(m):
                            if pw[t]:
                                acc[t] = (acc[t] + c * pw[t]) % p
                row.append(self._index_of(acc))
            mul.append(tuple(row))
        self.mul_table = tuple(mul)

        inv: list[int | None] = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul_table[a][b] == 1:
                    inv[a] = b
                    break
        self.inv_table = tuple(inv)

        self.primitive = self._find_primitive()

    def _index_of(self, coeffs: list[int]) -> int:
        s = 0
        for c in reversed(coeffs):
            s = s * self.p + c
        return s

    def _find_primitive(self) -> int:
        target = self.q - 1
        for a in range(1, self.q):
            x, order = a, 1
            while x != 1:
                x = self.mul_table[x][a]
                order += 1
            if order == target:
                return a
        raise AssertionError("no primitive element")  # unreachable

    # -- element operations -------------------------------------------------

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise BadParametersError(f"element index {a} outside [0, {self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        self._check(a)
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivideByZeroError("zero has no multiplicative inverse")
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def primitive_powers(self) -> list[int]:
        """[alpha^0, alpha^1, ..., alpha^(q-2)] for the designated primitive alpha."""
        out = [1]
        for _ in range(self.q - 2):
            out.append(self.mul_table[out[-1]][self.primitive])
        return out

    def __repr__(self) -> str:
        return f"FieldTable(p={self.p}, m={self.m})"


@lru_cache(maxsize=None)
def field_table(p: int, m: int = 1) -> FieldTable:
    """Cached FieldTable constructor."""
    return FieldTable(p, m)


@lru_cache(maxsize=None)
def field_of_size(q: int) -> FieldTable:
    """Cached FieldTable for the field with q elements."""
    p, m = factor_prime_power(q)
    return field_table(p, m)
