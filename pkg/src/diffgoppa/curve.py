"""Curve models: the projective line and short-Weierstrass elliptic curves.

Provides rational-point enumeration, the monomial bases of the section spaces
H^0(O((k-1) * base)), local expansions of those bases at rational points in
canonical local data, and local expansions of dual differential bases.

Canonical local data: on the line, t - alpha with identity trivialization at
affine points and u = 1/t with s -> t^{1-k} s at infinity; on an elliptic
curve, x - alpha with identity trivialization at affine points (beta != 0
required) and u = -x/y with s -> u^{k-1} s at the identity point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    NegativeDualDegree,
    TwoTorsionPoint,
    Unsupported,
)
from .series import (
    LaurentSeries,
    TruncatedSeries,
    laurent_inv,
    laurent_mul,
    laurent_scale,
    laurent_shift,
    ts_inv,
    ts_mul,
)

P1 = "p1"
ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class CurveModel:
    kind: str
    field: object
    A: object = None  # elliptic only
    B: object = None


def curve_make(field, kind, A=None, B=None):
    if kind == P1:
        return CurveModel(P1, field)
    if kind != ELLIPTIC:
        raise Unsupported(f"unknown curve kind {kind!r}", kind=kind)
    if field.p in (2, 3):
        raise Unsupported("elliptic model requires characteristic not 2 or 3", p=field.p)
    A = field.element(A if A is not None else 0)
    B = field.element(B if B is not None else 0)
    disc = field.element(4) * A * A * A + field.element(27) * B * B
    if disc.is_zero():
        raise Unsupported("singular Weierstrass equation", )
    return CurveModel(ELLIPTIC, field, A, B)


@dataclass(frozen=True)
class CurvePoint:
    """Either the point at infinity / identity, or an affine point."""

    at_infinity: bool
    alpha: object = None
    beta: object = None  # elliptic affine only

    @classmethod
    def infinity(cls):
        return cls(True)

    @classmethod
    def affine(cls, alpha, beta=None):
        return cls(False, alpha, beta)

    def __repr__(self):
        if self.at_infinity:
            return "inf"
        if self.beta is None:
            return f"({self.alpha!r})"
        return f"({self.alpha!r}, {self.beta!r})"


def validate_point(curve, point):
    if point.at_infinity:
        return
    F = curve.field
    if curve.kind == P1:
        if point.beta is not None:
            raise Unsupported("line points have a single coordinate")
        return
    a, b = F.element(point.alpha), F.element(point.beta if point.beta is not None else 0)
    if b * b != a * a * a + curve.A * a + curve.B:
        raise Unsupported("point not on the curve", alpha=repr(a), beta=repr(b))


def rational_points(curve, budget=2**20):
    """All rational points; identity/infinity first, affines in field order."""
    F = curve.field
    if F.order > budget:
        raise BudgetExceeded("field too large to enumerate points",
                             order=F.order, budget=budget)
    pts = [CurvePoint.infinity()]
    if curve.kind == P1:
        pts.extend(CurvePoint.affine(a) for a in F.elements(budget))
        return pts
    for a in F.elements(budget):
        rhs = a * a * a + curve.A * a + curve.B
        for b in F.elements(budget):
            if b * b == rhs:
                pts.append(CurvePoint.affine(a, b))
    return pts


def section_basis(curve, k):
    """Monomial descriptors for H^0(O((k-1) * base)).

    Line: ("t", m) for m < k.  Elliptic: ("x", m) for m <= (k-1)//2 and
    ("xy", m) for m <= (k-4)//2 (no y-monomials when k < 4).
    """
    if curve.kind == P1:
        return [("t", m) for m in range(k)]
    a = (k - 1) // 2
    basis = [("x", m) for m in range(a + 1)]
    if k >= 4:
        b = (k - 4) // 2
        basis.extend(("xy", m) for m in range(b + 1))
    return basis


# ---------------------------------------------------------------------------
# local expansions of basis sections

def _binomial_expansion(F, alpha, m, precision):
    """Coefficients of (alpha + u)^m in u, truncated."""
    out = []
    for j in range(precision):
        if j > m:
            out.append(F.zero())
        else:
            out.append(F.binomial(m, j) * alpha ** (m - j))
    return TruncatedSeries(F, out)


def elliptic_y_expansion(curve, alpha, beta, precision):
    """Coefficients of y as a series in v = x - alpha at a point with beta != 0.

    Determined by matching coefficients of y^2 = (alpha+v)^3 + A(alpha+v) + B.
    """
    F = curve.field
    if beta.is_zero():
        raise TwoTorsionPoint("no canonical local data at a two-torsion point")
    rhs = [beta * beta,
           F.element(3) * alpha * alpha + curve.A,
           F.element(3) * alpha,
           F.one()]
    inv2b = (F.element(2) * beta).inverse()
    c = [beta]
    for m in range(1, precision):
        acc = rhs[m] if m < 4 else F.zero()
        for r in range(1, m):
            acc = acc - c[r] * c[m - r]
        c.append(inv2b * acc)
    return TruncatedSeries(F, c)


def elliptic_w_expansion(curve, precision):
    """The unit series w(u) with x = w/u^2, y = -w/u^3 at the identity point.

    Substituting into the Weierstrass equation gives w^2 = w^3 + A u^4 w +
    B u^6; the fixed-point iteration w <- 1 - u^4 (A w + B u^2) / w^2 gains at
    least four orders of agreement per step.
    """
    F = curve.field
    zero = F.zero()
    u2 = TruncatedSeries(F, [zero, zero, F.one()] + [zero] * max(0, precision - 3)).truncate(precision) \
        if precision >= 3 else TruncatedSeries(F, [zero] * precision)
    w = TruncatedSeries.one(F, precision)
    steps = precision // 4 + 2
    for _ in range(steps):
        aw = TruncatedSeries(F, [curve.A * c for c in w.coeffs])
        bu2 = TruncatedSeries(F, [curve.B * c for c in u2.coeffs])
        num = TruncatedSeries(F, [a + b for a, b in zip(aw.coeffs, bu2.coeffs)])
        frac = ts_mul(num, ts_inv(ts_mul(w, w)))
        shifted = [zero] * precision
        for i, cf in enumerate(frac.coeffs):
            if i + 4 < precision:
                shifted[i + 4] = cf
        w = TruncatedSeries(F, [(F.one() if i == 0 else zero) - shifted[i]
                                for i in range(precision)])
    return w


def expand_basis_at(curve, k, point, precision):
    """Truncated expansions of the canonically trivialized basis at a point."""
    F = curve.field
    validate_point(curve, point)
    basis = section_basis(curve, k)
    zero = F.zero()
    out = []
    if curve.kind == P1:
        if point.at_infinity:
            # gamma(t^m) = u^{k-1-m}
            for _, m in basis:
                c = [zero] * precision
                e = k - 1 - m
                if e < precision:
                    c[e] = F.one()
                out.append(TruncatedSeries(F, c))
            return out
        alpha = F.element(point.alpha)
        return [_binomial_expansion(F, alpha, m, precision) for _, m in basis]

    if point.at_infinity:
        # x^m -> u^{k-1-2m} w^m ; x^m y -> -u^{k-4-2m} w^{m+1}
        w = elliptic_w_expansion(curve, precision)
        powers = [TruncatedSeries.one(F, precision)]
        max_pow = max((m for kind, m in basis if kind == "x"), default=0)
        max_pow = max(max_pow, max((m + 1 for kind, m in basis if kind == "xy"), default=0))
        for _ in range(max_pow):
            powers.append(ts_mul(powers[-1], w))
        for kind, m in basis:
            if kind == "x":
                e, wm, sign = k - 1 - 2 * m, powers[m], F.one()
            else:
                e, wm, sign = k - 4 - 2 * m, powers[m + 1], -F.one()
            c = [zero] * precision
            for i, cf in enumerate(wm.coeffs):
                if 0 <= e + i < precision:
                    c[e + i] = sign * cf
            out.append(TruncatedSeries(F, c))
        return out

    alpha = F.element(point.alpha)
    beta = F.element(point.beta)
    y = elliptic_y_expansion(curve, alpha, beta, precision)
    for kind, m in basis:
        xm = _binomial_expansion(F, alpha, m, precision)
        out.append(xm if kind == "x" else ts_mul(xm, y))
    return out


# ---------------------------------------------------------------------------
# dual differential bases

def p1_dual_differential_basis(curve, k, divisor, precision):
    """Local expansions of the n - k dual differentials on the line.

    divisor: list of (CurvePoint, multiplicity).  Section r is
    t^r dt / prod_affine (t - alpha_i)^{n_i}; the result[r][i] is its Laurent
    expansion at divisor point i in the canonical uniformizer, with the
    canonical trivialization factor absorbed at infinity, written as
    (series) du.
    """
    F = curve.field
    M = sum(n for _, n in divisor)
    if M - k < 0:
        raise NegativeDualDegree("dual bundle has negative degree", M=M, k=k)
    affine = [(F.element(p.alpha), n) for p, n in divisor if not p.at_infinity]
    rows = []
    for r in range(M - k):
        per_point = []
        for p, n_i in divisor:
            window = n_i + precision
            if p.at_infinity:
                # t = 1/u, dt = -u^{-2} du, trivialization t^{k-1} = u^{1-k}
                denom = TruncatedSeries.one(F, window)
                for alpha_j, n_j in affine:
                    lin = TruncatedSeries(F, [F.one()] + [-alpha_j] + [F.zero()] * (window - 2))
                    for _ in range(n_j):
                        denom = ts_mul(denom, lin)
                unit = ts_inv(denom)
                exponent = (M - n_i) - r - 2 + (1 - k)
                eta = LaurentSeries(F, exponent, [-c for c in unit.coeffs])
            else:
                alpha_i = F.element(p.alpha)
                numer = _binomial_expansion(F, alpha_i, r, window)
                denom = TruncatedSeries.one(F, window)
                for alpha_j, n_j in affine:
                    if alpha_j == alpha_i:
                        continue
                    lin = TruncatedSeries(
                        F, [alpha_i - alpha_j] + [F.one()] + [F.zero()] * (window - 2))
                    for _ in range(n_j):
                        denom = ts_mul(denom, lin)
                unit = ts_mul(numer, ts_inv(denom))
                eta = LaurentSeries(F, -n_i, list(unit.coeffs))
            per_point.append(eta)
        rows.append(per_point)
    return rows


def elliptic_monomial_dual_basis(m):
    """Monomials spanning functions with pole order at most m at the identity."""
    basis = [("x", i) for i in range(m // 2 + 1) if 2 * i <= m]
    basis += [("xy", i) for i in range((m - 3) // 2 + 1) if 2 * i + 3 <= m] if m >= 3 else []
    basis.sort(key=lambda d: 2 * d[1] if d[0] == "x" else 2 * d[1] + 3)
    return basis


def elliptic_dual_differential_basis(curve, k, n, precision=None):
    """Dual differentials h (dx/y) at the identity for a one-point divisor n e.

    Returns the Laurent expansions in u = -x/y of u^{1-k} h (dx/y)/du, the
    local differentials with the canonical trivialization absorbed, with a
    window covering degrees -n .. n-1.
    """
    F = curve.field
    mprime = n - k + 1
    if mprime < 0:
        raise NegativeDualDegree("dual bundle has negative degree", n=n, k=k)
    if mprime == 0:
        return []
    P = precision if precision is not None else 2 * n + k + 8
    w = elliptic_w_expansion(curve, P)
    # dx/y in u: 2 - u w'/w, a unit series with constant term 2
    wprime = TruncatedSeries(F, [F.element(i + 1) * w.coeffs[i + 1] for i in range(P - 1)] + [F.zero()])
    ratio = ts_mul(wprime, ts_inv(w))
    zero = F.zero()
    dxy = [F.element(2)] + [-ratio.coeffs[i - 1] for i in range(1, P)]
    dxy_l = LaurentSeries(F, 0, dxy)
    basis = elliptic_monomial_dual_basis(mprime)
    out = []
    wpow = {0: TruncatedSeries.one(F, P)}
    maxp = max((i if kind == "x" else i + 1) for kind, i in basis)
    for j in range(1, maxp + 1):
        wpow[j] = ts_mul(wpow[j - 1], w)
    for kind, i in basis:
        if kind == "x":
            h = LaurentSeries(F, -2 * i, list(wpow[i].coeffs))
        else:
            h = LaurentSeries(F, -2 * i - 3, [-c for c in wpow[i + 1].coeffs])
        eta = laurent_shift(laurent_mul(h, dxy_l), 1 - k)
        out.append(eta)
    return out


# ---------------------------------------------------------------------------
# section-space dimensions and the elliptic group law

def ell_p1(d):
    """dim H^0(P1, O(d))."""
    return max(0, d + 1)


def elliptic_add(curve, P, Q):
    """Group law with the identity at infinity."""
    F = curve.field
    if P.at_infinity:
        return Q
    if Q.at_infinity:
        return P
    x1, y1 = F.element(P.alpha), F.element(P.beta)
    x2, y2 = F.element(Q.alpha), F.element(Q.beta)
    if x1 == x2 and y1 == -y2:
        return CurvePoint.infinity()
    if x1 == x2:
        lam = (F.element(3) * x1 * x1 + curve.A) / (F.element(2) * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return CurvePoint.affine(x3, y3)


def elliptic_scalar(curve, n, P):
    acc = CurvePoint.infinity()
    add = P
    while n:
        if n & 1:
            acc = elliptic_add(curve, acc, add)
        add = elliptic_add(curve, add, add)
        n >>= 1
    return acc


def ell_elliptic(curve, d, offsets=()):
    """dim H^0(E, O(d e - sum n_i p_i)) given as (degree, point multiset).

    offsets is a list of (CurvePoint, n_i) subtracted from d e.  Degree-zero
    bundles contribute 1 exactly when the divisor class is trivial, decided by
    the group law.
    """
    deg = d - sum(n for _, n in offsets)
    if deg < 0:
        return 0
    if deg > 0:
        return deg
    acc = CurvePoint.infinity()
    for p, n in offsets:
        acc = elliptic_add(curve, acc, elliptic_scalar(curve, n, p))
    # class of d e - sum n_i p_i is trivial iff sum [n_i] p_i = identity
    return 1 if acc.at_infinity else 0
