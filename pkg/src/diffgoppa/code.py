"""Differential Goppa code construction, metrics, and duality.

A code is built from (curve, bundle parameter k, effective divisor, local
units and reparametrizations, optional section-combination matrix).  Block i
of a codeword holds the first n_i Hasse-derivative coefficients of the
trivialized section at divisor point i, after multiplying by the local unit
and substituting the local reparametrization.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .curve import (
    ELLIPTIC,
    P1,
    CurvePoint,
    ell_elliptic,
    ell_p1,
    elliptic_dual_differential_basis,
    expand_basis_at,
    p1_dual_differential_basis,
    section_basis,
    validate_point,
)
from .errors import (
    BlockMismatch,
    BudgetExceeded,
    NonUniformBlocks,
    RankDeficiency,
    Unsupported,
)
from .matrix import FqMatrix, kernel_basis, rank, row_space_equal, rref
from .series import (
    LaurentSeries,
    TruncatedSeries,
    laurent_from_ts,
    laurent_mul,
    residue,
    ts_compose,
    ts_inv,
    ts_mul,
)

DEFAULT_DISTANCE_BUDGET = 10**6


@dataclass(frozen=True)
class Divisor:
    """Ordered effective divisor; block order follows the written order."""

    points: tuple  # of (CurvePoint, multiplicity)

    def __post_init__(self):
        seen = []
        for p, n in self.points:
            if n < 1:
                raise Unsupported("multiplicities must be positive", mult=n)
            if p in seen:
                raise Unsupported("divisor points must be distinct")
            seen.append(p)

    @property
    def M(self):
        return sum(n for _, n in self.points)

    @property
    def n_max(self):
        return max(n for _, n in self.points)

    @property
    def s(self):
        return len(self.points)

    @property
    def block_sizes(self):
        return tuple(n for _, n in self.points)


@dataclass(frozen=True)
class LocalData:
    """Per-point unit (c_0 != 0) and reparametrization (c_0 = 0, c_1 != 0)."""

    unit: TruncatedSeries
    reparam: TruncatedSeries

    @classmethod
    def default(cls, F, n):
        return cls(TruncatedSeries.one(F, n), TruncatedSeries.identity(F, max(n, 2)))

    def is_identity(self):
        one = TruncatedSeries.one(self.unit.field, self.unit.precision)
        t = TruncatedSeries.identity(self.reparam.field, self.reparam.precision)
        return self.unit == one and self.reparam == t


@dataclass(frozen=True)
class CodeSpec:
    field: object
    curve: object
    k: int
    divisor: Divisor
    local: tuple = ()  # of LocalData, one per divisor point; empty = defaults
    gamma: object = None  # optional FqMatrix of section combinations

    def local_data(self):
        if self.local:
            return self.local
        return tuple(LocalData.default(self.field, max(n, 2))
                     for _, n in self.divisor.points)

    def with_local(self, local):
        return CodeSpec(self.field, self.curve, self.k, self.divisor,
                        tuple(local), self.gamma)


@dataclass
class GoppaCode:
    generator: FqMatrix
    block_sizes: tuple
    spec: CodeSpec

    @property
    def length(self):
        return self.generator.cols

    @property
    def dimension(self):
        return rank(self.generator)


@dataclass
class DistanceReport:
    metric: str
    value: int
    method: str
    enumerated: int


def split_blocks(word, block_sizes):
    blocks = []
    i = 0
    for n in block_sizes:
        blocks.append(list(word[i:i + n]))
        i += n
    if i != len(word):
        raise BlockMismatch("word length does not match block structure",
                            length=len(word), blocks=list(block_sizes))
    return blocks


def expected_rank(spec):
    """ell(L) - ell(L(-D)) for the full section basis."""
    k, M = spec.k, spec.divisor.M
    if spec.curve.kind == P1:
        return ell_p1(k - 1) - ell_p1(k - 1 - M)
    offs = list(spec.divisor.points)
    return (ell_elliptic(spec.curve, k - 1)
            - ell_elliptic(spec.curve, k - 1, offs))


def build_code(spec):
    """Generator matrix with columns grouped in divisor-order blocks."""
    F = spec.field
    for p, _ in spec.divisor.points:
        validate_point(spec.curve, p)
    locals_ = spec.local_data()
    if len(locals_) != spec.divisor.s:
        raise BlockMismatch("one local datum required per divisor point")
    basis_size = len(section_basis(spec.curve, spec.k))
    if spec.gamma is not None:
        if spec.gamma.cols != basis_size:
            raise BlockMismatch("section-combination columns must match basis size",
                                cols=spec.gamma.cols, basis=basis_size)
        if rank(spec.gamma) != spec.gamma.rows:
            raise RankDeficiency("section-combination matrix must have full row rank")
    n_rows = spec.gamma.rows if spec.gamma is not None else basis_size
    rows = [[] for _ in range(n_rows)]
    for (point, n_i), loc in zip(spec.divisor.points, locals_):
        prec = max(n_i, 2)
        expansions = expand_basis_at(spec.curve, spec.k, point, prec)
        if spec.gamma is not None:
            combined = []
            for r in range(spec.gamma.rows):
                acc = [F.zero()] * prec
                for b, exp in enumerate(expansions):
                    coef = spec.gamma[r, b]
                    if not coef.is_zero():
                        for j in range(prec):
                            acc[j] = acc[j] + coef * exp.coeffs[j]
                combined.append(TruncatedSeries(F, acc))
            expansions = combined
        unit = loc.unit.truncate(min(loc.unit.precision, prec)).pad(prec)
        rep = loc.reparam.truncate(min(loc.reparam.precision, prec)).pad(prec)
        for r, g in enumerate(expansions):
            local_word = ts_compose(ts_mul(unit, g), rep)
            rows[r].extend(local_word.coeffs[:n_i])
    G = FqMatrix.from_rows(F, rows) if rows else FqMatrix(F, 0, spec.divisor.M, [])
    if spec.gamma is None:
        want = expected_rank(spec)
        have = rank(G)
        if have != want:
            raise RankDeficiency("generator rank disagrees with the dimension law",
                                 have=have, want=want)
    return GoppaCode(G, spec.divisor.block_sizes, spec)


# ---------------------------------------------------------------------------
# weights and distances

def weight(word, metric, block_sizes):
    blocks = split_blocks(word, block_sizes)
    if metric == "hamming":
        return sum(1 for c in word if not c.is_zero())
    if metric == "block":
        return sum(1 for b in blocks if any(not c.is_zero() for c in b))
    if metric == "rt":
        # per-block weight n_i - (first nonzero derivative order): the first
        # nonzero index is the vanishing order of the section at the point,
        # so this weight is invariant under changes of local data
        total = 0
        for b in blocks:
            for j, c in enumerate(b):
                if not c.is_zero():
                    total += len(b) - j
                    break
        return total
    if metric == "rank":
        sizes = set(block_sizes)
        if len(sizes) != 1:
            raise NonUniformBlocks("rank metric needs uniform block sizes",
                                   blocks=list(block_sizes))
        F = word[0].field if word else None
        M = FqMatrix.from_rows(F, blocks)
        return rank(M)
    raise Unsupported(f"unknown metric {metric!r}", metric=metric)


def iter_codewords(G, include_zero=False):
    """All words in the row space, via the reduced independent rows."""
    R, pivots = rref(G)
    k = len(pivots)
    F = G.field
    elems = F.elements()
    base_rows = [R.row(r) for r in range(k)]
    for combo in product(elems, repeat=k):
        if not include_zero and all(c.is_zero() for c in combo):
            continue
        word = [F.zero()] * G.cols
        for c, row in zip(combo, base_rows):
            if c.is_zero():
                continue
            for j in range(G.cols):
                word[j] = word[j] + c * row[j]
        yield word


def min_distance(code, metric="hamming", budget=DEFAULT_DISTANCE_BUDGET,
                 method="exhaustive", subset_cap=None):
    G = code.generator
    k = rank(G)
    if k == 0:
        raise Unsupported("zero code has no minimum distance")
    if method == "minor-certificate":
        if metric != "hamming":
            raise Unsupported("minor certificates apply to the Hamming metric only")
        from .matrix import DEFAULT_SUBSET_CAP, all_column_subsets_full_rank
        cap = subset_cap if subset_cap is not None else DEFAULT_SUBSET_CAP
        R, pivots = rref(G)
        Gk = FqMatrix.from_rows(G.field, [R.row(r) for r in range(k)])
        d = 0
        checked = 0
        while d + 1 <= G.cols - k + 1:
            ok, _ = all_column_subsets_full_rank(Gk, G.cols - (d + 1) + 1, cap)
            checked += 1
            if not ok:
                break
            d += 1
        return DistanceReport(metric, d, "minor-certificate", checked)
    total = code.spec.field.order ** k - 1
    if total > budget:
        raise BudgetExceeded("row space too large for exhaustive distance",
                             words=total, budget=budget)
    best = None
    count = 0
    for word in iter_codewords(G):
        count += 1
        w = weight(word, metric, code.block_sizes)
        if best is None or w < best:
            best = w
    return DistanceReport(metric, best, "exhaustive", count)


# ---------------------------------------------------------------------------
# the blockwise-reversal pairing and duals

def h_pairing(c, cprime, block_sizes):
    bc = split_blocks(c, block_sizes)
    bd = split_blocks(cprime, block_sizes)
    F = c[0].field
    acc = F.zero()
    for b1, b2 in zip(bc, bd):
        n = len(b1)
        for j in range(n):
            acc = acc + b1[j] * b2[n - 1 - j]
    return acc


def reversal_permute(word, block_sizes):
    """The involution making the pairing a plain dot product."""
    out = []
    for b in split_blocks(word, block_sizes):
        out.extend(reversed(b))
    return out


def h_dual_linear(code):
    """Basis of the dual under the blockwise-reversal pairing."""
    ker = kernel_basis(code.generator)
    if ker.rows == 0:
        return FqMatrix(code.generator.field, 0, code.length, [])
    rows = [reversal_permute(ker.row(r), code.block_sizes) for r in range(ker.rows)]
    return FqMatrix.from_rows(code.generator.field, rows)


def _dual_etas(spec, guard=4):
    """Local dual differentials per (section, divisor point), unit-adjusted."""
    F = spec.field
    locals_ = spec.local_data()
    for loc in locals_:
        t = TruncatedSeries.identity(F, loc.reparam.precision)
        if loc.reparam != t:
            raise Unsupported("residue dual requires identity reparametrizations")
    k, div = spec.k, spec.divisor
    if spec.curve.kind == P1:
        etas = p1_dual_differential_basis(spec.curve, k, list(div.points), div.M + guard)
    else:
        if div.s != 1 or not div.points[0][0].at_infinity:
            raise Unsupported("elliptic residue dual needs a one-point divisor "
                              "at the identity")
        n = div.points[0][1]
        per = elliptic_dual_differential_basis(spec.curve, k, n)
        etas = [[eta] for eta in per]
    adjusted = []
    for per_point in etas:
        row = []
        for eta, (point_mult, loc) in zip(per_point, zip(div.points, locals_)):
            n_i = point_mult[1]
            prec = max(n_i, 2)
            unit = loc.unit.truncate(min(loc.unit.precision, prec)).pad(prec)
            inv_unit = laurent_from_ts(ts_inv(unit))
            row.append(laurent_mul(eta, inv_unit))
        adjusted.append(row)
    return adjusted


def dual_code_residue(spec, guard=4):
    """Dual generator whose rows are residue coordinate vectors."""
    F = spec.field
    etas = _dual_etas(spec, guard)
    rows = []
    for per_point in etas:
        row = []
        for eta, (_, n_i) in zip(per_point, spec.divisor.points):
            for j in range(n_i):
                # Res(t^{n_i-1-j} eta) is the coefficient at degree j - n_i
                row.append(eta.coefficient(j - n_i))
        rows.append(row)
    if not rows:
        return GoppaCode(FqMatrix(F, 0, spec.divisor.M, []),
                         spec.divisor.block_sizes, spec)
    return GoppaCode(FqMatrix.from_rows(F, rows), spec.divisor.block_sizes, spec)


def verify_duality(spec, sample_limit=6):
    """Exact duality verification; returns a report dict.

    Checks: (a) pairwise orthogonality of primal and residue-dual rows under
    the blockwise-reversal pairing; (b) row-space equality of the residue dual
    and the linear-algebra dual; (c) dual dimension = length - dim; (d) the
    residue-convolution identity per point on sampled row pairs; (e) on the
    line, residues of each global pairing sum to zero over the divisor.
    """
    primal = build_code(spec)
    dual = dual_code_residue(spec)
    G, Gd = primal.generator, dual.generator
    checks = {}
    witness = {}

    ok = True
    for r in range(G.rows):
        for rd in range(Gd.rows):
            val = h_pairing(G.row(r), Gd.row(rd), primal.block_sizes)
            if not val.is_zero():
                ok = False
                witness["orthogonality"] = {"primal_row": r, "dual_row": rd,
                                            "pairing": repr(val)}
                break
        if not ok:
            break
    checks["a_orthogonality"] = ok

    lin = h_dual_linear(primal)
    checks["b_row_space"] = (row_space_equal(Gd, lin) if Gd.rows or lin.rows
                             else True)

    checks["c_dimension"] = rank(Gd) == primal.length - primal.dimension

    # (d)/(e): recompute pairings directly from Laurent products
    etas = _dual_etas(spec)
    conv_ok = True
    sum_ok = True
    locals_ = spec.local_data()
    pairs = 0
    for xi_idx, per_point in enumerate(etas):
        if pairs >= sample_limit:
            break
        for r in range(G.rows):
            if pairs >= sample_limit:
                break
            pairs += 1
            total = spec.field.zero()
            col = 0
            for (point, n_i), loc, eta in zip(spec.divisor.points, locals_, per_point):
                prec = max(n_i, 2)
                expansions = expand_basis_at(spec.curve, spec.k, point, prec)
                if spec.gamma is not None:
                    acc = [spec.field.zero()] * prec
                    for b, exp in enumerate(expansions):
                        coef = spec.gamma[r, b]
                        for j in range(prec):
                            acc[j] = acc[j] + coef * exp.coeffs[j]
                    g = TruncatedSeries(spec.field, acc)
                else:
                    g = expansions[r]
                unit = loc.unit.truncate(min(loc.unit.precision, prec)).pad(prec)
                local_section = ts_mul(unit, g)
                lhs = residue(laurent_mul(laurent_from_ts(local_section), eta))
                # Res(t^j eta) sits at reversed position n_i - 1 - j of the
                # dual coordinate block, so the contraction is the blockwise
                # index-reversed pairing of the two coefficient vectors
                rhs = spec.field.zero()
                for j in range(n_i):
                    rhs = rhs + local_section.coeffs[j] * Gd[xi_idx, col + n_i - 1 - j]
                if lhs != rhs:
                    conv_ok = False
                    witness["convolution"] = {"dual_row": xi_idx, "primal_row": r,
                                              "point": repr(point)}
                total = total + lhs
                col += n_i
            if spec.curve.kind == P1 and not total.is_zero():
                sum_ok = False
                witness["residue_sum"] = {"dual_row": xi_idx, "primal_row": r,
                                          "sum": repr(total)}
    checks["d_convolution"] = conv_ok
    checks["e_residue_sum"] = sum_ok if spec.curve.kind == P1 else True

    report = {"passes": all(checks.values()), "checks": checks}
    if witness:
        report["witness"] = witness
    return report
