"""Exact arithmetic in prime fields F_p and extension fields F_{p^m}.

Extension fields use a polynomial basis modulo an explicit monic irreducible
modulus; no discrete-log tables.  All arithmetic is total and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BudgetExceeded,
    DivisionByZero,
    FieldMismatch,
    NoBuiltinModulus,
    NotPrime,
    ReducibleModulus,
)

BUILTIN_MODULUS_LIMIT = 2**20
DEFAULT_ENUMERATION_BUDGET = 2**20


def is_prime(p):
    """Trial division; desk-scale characteristics only."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over Z/p (coefficient lists, index = degree)

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and _poly_trim(a):
        if not a:
            break
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, c in enumerate(mod):
            a[i + shift] = (a[i + shift] - factor * c) % p
        _poly_trim(a)
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _poly_trim(out)


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a = _poly_mod(a, b, p)
        # make b monic before using as divisor next round
        a, b = b, a
    return a


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_mod(list(base), mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _is_irreducible(mod, p):
    """Monic polynomial irreducibility over F_p.

    Uses gcd(x^{p^i} - x, f) = 1 for i < m together with x^{p^m} = x mod f.
    """
    m = len(mod) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xp = list(x)
    for _ in range(m - 1):
        xp = _poly_powmod(xp, p, mod, p)
        g = _poly_gcd(mod, _poly_sub(xp, x, p), p)
        if len(g) - 1 > 0:
            return False
    xp = _poly_powmod(xp, p, mod, p)
    return not _poly_sub(xp, x, p)


@lru_cache(maxsize=None)
def builtin_modulus(p, m):
    """First monic irreducible of degree m over F_p in counting order.

    Deterministic so that default extension fields are reproducible.
    """
    if p**m > BUILTIN_MODULUS_LIMIT:
        raise NoBuiltinModulus(f"no built-in modulus for p={p}, m={m}", p=p, m=m)
    for idx in range(p**m):
        low = []
        v = idx
        for _ in range(m):
            low.append(v % p)
            v //= p
        cand = low + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise NoBuiltinModulus(f"no irreducible of degree {m} over F_{p}", p=p, m=m)


@dataclass(frozen=True)
class Field:
    """A finite field F_{p^m} in polynomial-basis representation."""

    p: int
    m: int
    modulus: tuple  # length m+1, monic; (0, 1) placeholder for m == 1

    @property
    def order(self):
        return self.p**self.m

    def element(self, value):
        """Coerce an int (reduced mod p, constant) or coefficient sequence."""
        if isinstance(value, FqElement):
            if value.field is not self and value.field != self:
                raise FieldMismatch("element from a different field")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.m - 1)
            return FqElement(self, tuple(coeffs))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            raise FieldMismatch(f"representative longer than degree {self.m}")
        coeffs += [0] * (self.m - len(coeffs))
        return FqElement(self, tuple(coeffs))

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def from_index(self, idx):
        """Element with base-p digits of idx as representative (0 -> 0, 1 -> 1)."""
        coeffs = []
        for _ in range(self.m):
            coeffs.append(idx % self.p)
            idx //= self.p
        return FqElement(self, tuple(coeffs))

    def elements(self, budget=DEFAULT_ENUMERATION_BUDGET):
        """All field elements in the fixed enumeration order (0 first, 1 second)."""
        if self.order > budget:
            raise BudgetExceeded(
                f"field of order {self.order} exceeds enumeration budget {budget}",
                order=self.order, budget=budget,
            )
        return [self.from_index(i) for i in range(self.order)]

    def binomial(self, m, j):
        """binom(m, j) reduced into the field, via Pascal's rule mod p."""
        if j < 0 or j > m:
            return self.zero()
        return self.element(_pascal_row(self.p, m)[j])

    def __repr__(self):
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}"


@lru_cache(maxsize=4096)
def _pascal_row(p, m):
    row = (1,)
    for _ in range(m):
        prev = row
        row = tuple(
            ((prev[j - 1] if j > 0 else 0) + (prev[j] if j < len(prev) else 0)) % p
            for j in range(len(prev) + 1)
        )
    return row


def field_make(p, m=1, modulus=None):
    """Validated Field; built-in irreducible modulus lookup when omitted."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime", p=p)
    if m < 1:
        raise ReducibleModulus("extension degree must be positive", m=m)
    if m == 1:
        return Field(p, 1, (0, 1))
    if modulus is None:
        modulus = builtin_modulus(p, m)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ReducibleModulus("modulus must be monic of degree m", modulus=modulus)
    if not _is_irreducible(list(modulus), p):
        raise ReducibleModulus("modulus is reducible", modulus=modulus)
    return Field(p, m, modulus)


class FqElement:
    """Canonical representative: tuple of m integers in [0, p)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, FqElement):
            other = self.field.element(other)
        if other.field != self.field:
            raise FieldMismatch("operands from different fields")
        return other

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FqElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        p = self.field.p
        return FqElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FqElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        if F.m == 1:
            return FqElement(F, ((self.coeffs[0] * other.coeffs[0]) % F.p,))
        prod = _poly_mul(list(self.coeffs), list(other.coeffs), F.p)
        prod = _poly_mod(prod, list(F.modulus), F.p)
        prod += [0] * (F.m - len(prod))
        return FqElement(F, tuple(prod))

    __radd__ = __add__
    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        F = self.field
        if F.m == 1:
            return FqElement(F, (pow(self.coeffs[0], F.p - 2, F.p),))
        # extended Euclid on representatives
        a, b = list(F.modulus), _poly_trim(list(self.coeffs))
        s0, s1 = [], [1]
        while b:
            q, r = _poly_divmod(a, b, F.p)
            a, b = b, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, F.p), F.p)
        # a is now the gcd (a nonzero constant since modulus is irreducible)
        inv_c = pow(a[0], F.p - 2, F.p)
        out = [(c * inv_c) % F.p for c in s0]
        out = _poly_mod(out, list(F.modulus), F.p)
        out += [0] * (F.m - len(out))
        return FqElement(F, tuple(out))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.element(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def to_index(self):
        """Integer encoding sum c_i p^i (inverse of Field.from_index)."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.p + c
        return v

    def __repr__(self):
        if self.field.m == 1:
            return str(self.coeffs[0])
        return str(list(self.coeffs))


def _poly_divmod(a, b, p):
    a = list(a)
    q = [0] * max(1, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], p - 2, p)
    while a and len(a) >= len(b):
        shift = len(a) - len(b)
        factor = (a[-1] * inv_lead) % p
        q[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * c) % p
        _poly_trim(a)
    return _poly_trim(q), a
