"""Truncated power series and Laurent series over finite fields.

Coefficient j of a truncated series is by definition the order-j Hasse
derivative of the represented germ.  The matrices S, T, rho are defined as the
matrices of the corresponding series operations acting on coefficient columns
(output_m = sum_j M[m][j] * input_j); the series operations are the ground
truth, not the other way around.
"""

from __future__ import annotations

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonvanishingConstantTerm,
    NotAReparametrization,
    NotAUnit,
    PrecisionUnderflow,
)
from .matrix import FqMatrix


class TruncatedSeries:
    """Power series known modulo t^N; N = number of stored coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(field.element(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("precision must be positive")

    @property
    def precision(self):
        return len(self.coeffs)

    @classmethod
    def identity(cls, field, precision):
        """The series t, the identity reparametrization."""
        c = [0] * precision
        if precision > 1:
            c[1] = 1
        return cls(field, c)

    @classmethod
    def one(cls, field, precision):
        return cls(field, [1] + [0] * (precision - 1))

    def truncate(self, n):
        if n > self.precision:
            raise PrecisionUnderflow(
                f"precision {self.precision} below requested {n}",
                have=self.precision, want=n)
        return TruncatedSeries(self.field, self.coeffs[:n])

    def pad(self, n):
        """Extend with zero coefficients; only valid when the tail is known zero."""
        if n <= self.precision:
            return self
        return TruncatedSeries(self.field, self.coeffs + (self.field.zero(),) * (n - self.precision))

    def is_unit(self):
        return not self.coeffs[0].is_zero()

    def is_reparametrization(self):
        return self.coeffs[0].is_zero() and self.precision >= 2 and not self.coeffs[1].is_zero()

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)})"


def _common(f, g):
    if f.field != g.field:
        raise FieldMismatch("series over different fields")
    return min(f.precision, g.precision)


def ts_add(f, g):
    n = _common(f, g)
    return TruncatedSeries(f.field, [f.coeffs[i] + g.coeffs[i] for i in range(n)])


def ts_mul(f, g):
    """Cauchy product truncated to the smaller precision."""
    n = _common(f, g)
    zero = f.field.zero()
    out = [zero] * n
    for i in range(n):
        fi = f.coeffs[i]
        if fi.is_zero():
            continue
        for j in range(n - i):
            out[i + j] = out[i + j] + fi * g.coeffs[j]
    return TruncatedSeries(f.field, out)


def ts_scale(c, f):
    c = f.field.element(c)
    return TruncatedSeries(f.field, [c * a for a in f.coeffs])


def ts_inv(f):
    """Multiplicative inverse of a unit series, same precision."""
    if not f.is_unit():
        raise NotAUnit("constant term is zero")
    n = f.precision
    inv0 = f.coeffs[0].inverse()
    out = [inv0]
    for k in range(1, n):
        acc = f.field.zero()
        for i in range(1, k + 1):
            acc = acc + f.coeffs[i] * out[k - i]
        out.append(-inv0 * acc)
    return TruncatedSeries(f.field, out)


def ts_compose(g, sigma):
    """g(sigma(t)) truncated, by Horner evaluation in the truncated ring."""
    if not sigma.coeffs[0].is_zero():
        raise NonvanishingConstantTerm("substituted series must vanish at 0")
    n = _common(g, sigma)
    zero = g.field.zero()
    acc = TruncatedSeries(g.field, [g.coeffs[n - 1]] + [zero] * (n - 1))
    sig = sigma.truncate(n)
    for i in range(n - 2, -1, -1):
        acc = ts_mul(acc, sig)
        acc = TruncatedSeries(g.field, (acc.coeffs[0] + g.coeffs[i],) + acc.coeffs[1:])
    return acc


def ts_shift_down(f, m):
    """Divide by t^m assuming the first m coefficients vanish."""
    if any(not c.is_zero() for c in f.coeffs[:m]):
        raise ValueError("series not divisible by t^m")
    return TruncatedSeries(f.field, f.coeffs[m:])


def ts_reversion(sigma):
    """Compositional inverse: ts_compose(result, sigma) = t, same precision.

    Column j of the substitution matrix holds the coefficients of sigma^j, so
    the inverse coefficients d solve the triangular system T(sigma) d = e_1.
    """
    if not sigma.is_reparametrization():
        raise NotAReparametrization("need c_0 = 0 and c_1 != 0")
    n = sigma.precision
    F = sigma.field
    T = matrix_T(sigma, n)
    zero = F.zero()
    d = [zero] * n
    for m in range(n):
        rhs = F.one() if m == 1 else zero
        for j in range(m):
            rhs = rhs - T[m, j] * d[j]
        d[m] = rhs * T[m, m].inverse() if m >= 1 else zero
    return TruncatedSeries(F, d)


class LaurentSeries:
    """Finitely many known coefficients starting at a valuation.

    The certified window is [val, val + len(coeffs)); ``exact`` marks a
    finite sum of terms whose coefficients vanish outside the window on both
    sides, which makes disjoint-support addition and full products lossless.
    Coefficients below val are genuinely zero in all cases.
    """

    __slots__ = ("field", "val", "coeffs", "exact")

    def __init__(self, field, val, coeffs, exact=False):
        coeffs = [field.element(c) for c in coeffs]
        # normalize: strip leading zeros, adjusting the valuation
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            val += 1
        if exact:
            while coeffs and coeffs[-1].is_zero():
                coeffs.pop()
        self.field = field
        self.val = val
        self.coeffs = tuple(coeffs)
        self.exact = exact

    def is_zero(self):
        return not self.coeffs

    @property
    def end(self):
        """First degree past the certified window (None = certified forever)."""
        if self.exact:
            return None
        return self.val + len(self.coeffs)

    def coefficient(self, d):
        """Coefficient at degree d; PrecisionUnderflow outside the window."""
        if d < self.val:
            return self.field.zero()
        if self.end is not None and d >= self.end:
            raise PrecisionUnderflow(f"degree {d} beyond certified window", degree=d, end=self.end)
        idx = d - self.val
        if idx >= len(self.coeffs):
            return self.field.zero()
        return self.coeffs[idx]

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.field == other.field and self.val == other.val
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"LaurentSeries(val={self.val}, coeffs={list(self.coeffs)}, exact={self.exact})"


def laurent_from_ts(ts, val=0, exact=False):
    return LaurentSeries(ts.field, val, list(ts.coeffs), exact=exact)


def laurent_mul(f, g):
    if f.field != g.field:
        raise FieldMismatch("series over different fields")
    if f.is_zero() or g.is_zero():
        return LaurentSeries(f.field, 0, [], exact=True)
    start = f.val + g.val
    ends = []
    if f.end is not None:
        ends.append(f.end + g.val)
    if g.end is not None:
        ends.append(g.end + f.val)
    if ends:
        end = min(ends)
        length = end - start
    else:
        length = len(f.coeffs) + len(g.coeffs) - 1
    zero = f.field.zero()
    out = [zero] * length
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(g.coeffs):
            if i + j < length:
                out[i + j] = out[i + j] + a * b
    return LaurentSeries(f.field, start, out, exact=not ends)


def laurent_inv(f, precision=None):
    """Inverse Laurent series over a window of the given length."""
    if f.is_zero():
        raise DivisionByZero("inverse of the zero series")
    window = len(f.coeffs) if precision is None else precision
    if window > len(f.coeffs) and f.end is not None:
        raise PrecisionUnderflow("operand window too small for requested inverse",
                                 have=len(f.coeffs), want=window)
    unit_coeffs = list(f.coeffs) + [f.field.zero()] * max(0, window - len(f.coeffs))
    unit = TruncatedSeries(f.field, unit_coeffs[:window])
    inv = ts_inv(unit)
    exact = f.exact and len(f.coeffs) == 1
    return LaurentSeries(f.field, -f.val, list(inv.coeffs), exact=exact)


def laurent_add(f, g):
    if f.field != g.field:
        raise FieldMismatch("series over different fields")
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    start = min(f.val, g.val)
    ends = [e for e in (f.end, g.end) if e is not None]
    if ends:
        end = min(ends)
        exact = False
    else:
        end = max(f.val + len(f.coeffs), g.val + len(g.coeffs))
        exact = True
    out = []
    for d in range(start, end):
        a = f.coeffs[d - f.val] if 0 <= d - f.val < len(f.coeffs) else f.field.zero()
        b = g.coeffs[d - g.val] if 0 <= d - g.val < len(g.coeffs) else g.field.zero()
        out.append(a + b)
    return LaurentSeries(f.field, start, out, exact=exact)


def laurent_scale(c, f):
    c = f.field.element(c)
    return LaurentSeries(f.field, f.val, [c * a for a in f.coeffs], exact=f.exact)


def laurent_shift(f, m):
    """Multiply by t^m."""
    return LaurentSeries(f.field, f.val + m, list(f.coeffs), exact=f.exact)


def residue(eta):
    """Coefficient of degree -1 of the local differential (series) dt."""
    if eta.val > -1:
        return eta.field.zero()
    if eta.end is not None and eta.end <= -1:
        raise PrecisionUnderflow("window does not certify degree -1",
                                 val=eta.val, end=eta.end)
    return eta.coefficient(-1)


def matrix_S(f, n):
    """Matrix of v(t) -> f(t) v(t) on coefficient columns, size n.

    Lower triangular with entry (m, j) the order (m - j) Hasse derivative of f.
    """
    if not f.is_unit():
        raise NotAUnit("constant term is zero")
    if f.precision < n:
        raise PrecisionUnderflow("unit precision below matrix size",
                                 have=f.precision, want=n)
    zero = f.field.zero()
    entries = []
    for m in range(n):
        for j in range(n):
            entries.append(f.coeffs[m - j] if 0 <= m - j else zero)
    return FqMatrix(f.field, n, n, entries)


def matrix_T(sigma, n):
    """Matrix of g -> g(sigma(t)): column j holds coefficients of sigma^j."""
    if not sigma.is_reparametrization():
        raise NotAReparametrization("need c_0 = 0 and c_1 != 0")
    if sigma.precision < n:
        raise PrecisionUnderflow("reparametrization precision below matrix size",
                                 have=sigma.precision, want=n)
    F = sigma.field
    sig = sigma.truncate(n)
    power = TruncatedSeries.one(F, n)
    cols = [list(power.coeffs)]
    for _ in range(1, n):
        power = ts_mul(power, sig)
        cols.append(list(power.coeffs))
    return FqMatrix(F, n, n, [cols[j][m] for m in range(n) for j in range(n)])


def matrix_rho(a, sigma, n):
    """Matrix of r -> a * sigma(r): the product matrix_S(a) matrix_T(sigma)."""
    return matrix_S(a, n) * matrix_T(sigma, n)
