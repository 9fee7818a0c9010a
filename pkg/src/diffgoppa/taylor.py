"""The truncated Taylor group: units and reparametrizations at a point.

An element is a pair (a, sigma) with a a unit series and sigma a
reparametrization, both at precision exactly n.  The group law is
(a1, s1) (a2, s2) = (a1 * (a2 after substituting s1), s1 then s2), and the
fundamental representation sends (a, sigma) to the matrix of r -> a sigma(r).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .code import GoppaCode
from .errors import NotAReparametrization, NotAUnit, OrderMismatch
from .matrix import FqMatrix
from .series import (
    TruncatedSeries,
    matrix_rho,
    ts_compose,
    ts_inv,
    ts_mul,
    ts_reversion,
)


@dataclass(frozen=True)
class TaylorElement:
    a: TruncatedSeries
    sigma: TruncatedSeries

    def __post_init__(self):
        if not self.a.is_unit():
            raise NotAUnit("unit part has vanishing constant term")
        # at order 1 the reparametrization is degenerate: only c_0 = 0 remains
        if self.sigma.precision == 1:
            if not self.sigma.coeffs[0].is_zero():
                raise NotAReparametrization("need c_0 = 0")
        elif not self.sigma.is_reparametrization():
            raise NotAReparametrization("need c_0 = 0 and c_1 != 0")
        if self.a.precision != self.sigma.precision:
            raise OrderMismatch("unit and reparametrization at different precisions",
                                a=self.a.precision, sigma=self.sigma.precision)

    @property
    def order(self):
        return self.a.precision

    @classmethod
    def identity(cls, F, n):
        return cls(TruncatedSeries.one(F, n), TruncatedSeries.identity(F, n))

    def rho(self):
        """Matrix of r -> a sigma(r) on Hasse-coefficient columns."""
        if self.order == 1:
            return FqMatrix(self.a.field, 1, 1, [self.a.coeffs[0]])
        return matrix_rho(self.a, self.sigma, self.order)


def tg_compose(g1, g2):
    if g1.order != g2.order or g1.a.field != g2.a.field:
        raise OrderMismatch("Taylor elements of different orders or fields")
    a = ts_mul(g1.a, ts_compose(g2.a, g1.sigma))
    sigma = ts_compose(g2.sigma, g1.sigma)
    return TaylorElement(a, sigma)


def tg_inverse(g):
    if g.order == 1:
        return TaylorElement(ts_inv(g.a), g.sigma)
    sigma_inv = ts_reversion(g.sigma)
    a_inv = ts_compose(ts_inv(g.a), sigma_inv)
    return TaylorElement(a_inv, sigma_inv)


def act_on_code(code, elements):
    """Transform each block by the fundamental representation of its element.

    Takes one Taylor element per block, each of order equal to the block size;
    block dimension and the block, last-position, and rank weights of every
    codeword are preserved.
    """
    sizes = code.block_sizes
    if len(elements) != len(sizes):
        raise OrderMismatch("one Taylor element per block required",
                            blocks=len(sizes), elements=len(elements))
    rhos = []
    for g, n in zip(elements, sizes):
        if g.order != n:
            raise OrderMismatch("element order must equal block size",
                                order=g.order, block=n)
        rhos.append(g.rho())
    G = code.generator
    rows = []
    for r in range(G.rows):
        row = G.row(r)
        out = []
        i = 0
        for rho, n in zip(rhos, sizes):
            out.extend(rho.apply(row[i:i + n]))
            i += n
        rows.append(out)
    return GoppaCode(FqMatrix.from_rows(G.field, rows), sizes, code.spec)


def orbit_sizes(q, n):
    """(|G_n|, |GL_n|, exact ratio) for the order-n group over a q-element field."""
    g = (q - 1) ** 2 * q ** (2 * n - 2) if n >= 2 else q - 1
    gl = 1
    for i in range(n):
        gl *= q**n - q**i
    return g, gl, Fraction(g, gl)


def full_group_elements(F, n):
    """All pairs (unit mod t^n, reparametrization mod t^{n+1}) of order n.

    The automorphism group of the order-n jet ring carries one coefficient
    more than the n x n representation can see; enumerating at this precision
    is what matches the closed-form count (q-1)^2 q^{2n-2}.
    """
    from itertools import product

    elems = F.elements()
    nonzero = [e for e in elems if not e.is_zero()]
    out = []
    for a0 in nonzero:
        for a_rest in product(elems, repeat=n - 1):
            for s1 in nonzero:
                for s_rest in product(elems, repeat=n - 1):
                    a = TruncatedSeries(F, (a0,) + a_rest)
                    sigma = TruncatedSeries(F, (F.zero(), s1) + s_rest)
                    out.append((a, sigma))
    return out


def full_identity(F, n):
    return (TruncatedSeries.one(F, n), TruncatedSeries.identity(F, n + 1))


def full_compose(g1, g2):
    a1, s1 = g1
    a2, s2 = g2
    return (ts_mul(a1, ts_compose(a2, s1)), ts_compose(s2, s1))


def full_inverse(g):
    a, s = g
    s_inv = ts_reversion(s)
    return (ts_compose(ts_inv(a), s_inv), s_inv)


def enumerate_group(F, n):
    """Taylor elements at representation precision, in deterministic order."""
    from itertools import product

    elems = F.elements()
    nonzero = [e for e in elems if not e.is_zero()]
    if n == 1:
        zero = TruncatedSeries(F, (F.zero(),))
        return [TaylorElement(TruncatedSeries(F, (a0,)), zero) for a0 in nonzero]
    out = []
    for a0 in nonzero:
        for a_rest in product(elems, repeat=n - 1):
            for s1 in nonzero:
                for s_rest in product(elems, repeat=max(0, n - 2)):
                    a = TruncatedSeries(F, (a0,) + a_rest)
                    sigma = TruncatedSeries(F, (F.zero(), s1) + s_rest)
                    out.append(TaylorElement(a, sigma))
    return out
