"""Constructive algorithms: sparsification, distance design, realization,
the strong-code numerical obstruction, and the named example matrices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, isqrt

from .code import (
    CodeSpec,
    Divisor,
    GoppaCode,
    LocalData,
    build_code,
    min_distance,
    split_blocks,
    weight,
)
from .curve import CurvePoint, curve_make
from .errors import (
    FieldTooSmall,
    InputError,
    NotPrime,
    RankDeficient,
    ZeroVector,
)
from .field import field_make, is_prime
from .matrix import FqMatrix, all_column_subsets_full_rank, rank, rref
from .series import TruncatedSeries, matrix_S, ts_compose, ts_inv, ts_mul, ts_reversion


def sparsify_local(v, n=None):
    """Unit f with f * v = t^m truncated, m the first nonzero position of v.

    v is a coefficient sequence of field elements; the returned unit has the
    same length and a nonzero constant term.
    """
    v = list(v)
    n = len(v) if n is None else n
    m = next((i for i, c in enumerate(v) if not c.is_zero()), None)
    if m is None:
        raise ZeroVector("cannot sparsify the zero block")
    F = v[0].field
    unit_part = TruncatedSeries(F, v[m:])
    f = ts_inv(unit_part)
    coeffs = list(f.coeffs) + [F.zero()] * (n - f.precision)
    return TruncatedSeries(F, coeffs[:n])


def achieve_block_distance(spec, budget=10**6):
    """Units making the Hamming distance drop to the block distance.

    Finds a codeword of minimal block weight exhaustively, sparsifies each of
    its nonzero blocks, and transports the sparsifying units through the
    reparametrizations.  Blocks outside the support keep their local data.
    """
    code = build_code(spec)
    blk_report = min_distance(code, "block", budget)
    best_word = None
    from .code import iter_codewords
    for word in iter_codewords(code.generator):
        if weight(word, "block", code.block_sizes) == blk_report.value:
            best_word = word
            break
    blocks = split_blocks(best_word, code.block_sizes)
    locals_ = list(spec.local_data())
    new_locals = []
    for block, loc, n_i in zip(blocks, locals_, code.block_sizes):
        if all(c.is_zero() for c in block):
            new_locals.append(loc)
            continue
        f = sparsify_local(block, n_i)
        if n_i == 1:
            new_unit = ts_mul(f, loc.unit.truncate(1))
        else:
            rep = loc.reparam.truncate(n_i)
            transported = ts_compose(f, ts_reversion(rep))
            new_unit = ts_mul(transported, loc.unit.truncate(n_i))
        new_locals.append(LocalData(new_unit.pad(max(n_i, 2)),
                                    loc.reparam))
    new_spec = spec.with_local(new_locals)
    new_code = build_code(new_spec)
    d_h = min_distance(new_code, "hamming", budget)
    d_blk = min_distance(new_code, "block", budget)
    certificate = {
        "block_distance": d_blk.value,
        "hamming_distance": d_h.value,
        "achieved": d_h.value == d_blk.value,
    }
    return new_spec, certificate


@dataclass
class SearchConfig:
    target_distance: int
    trials: int = 200
    seed: int = 0
    method: str = "exhaustive"  # or "minors"
    budget: int = 10**6


def search_parameters(spec, config):
    """Randomized search for units giving Hamming distance >= the target.

    Samples unit coefficients per point with the seeded generator, transforms
    the generator blockwise by the multiplication matrices, and certifies the
    distance.  Absence of success is reported, never raised.
    """
    code = build_code(spec)
    k = code.dimension
    M = code.length
    d = config.target_distance
    if not 1 <= d <= M - k + 1:
        raise InputError("target distance violates the Singleton range",
                         d=d, M=M, k=k)
    F = spec.field
    q = F.order
    delta = k * comb(M, d - 1)
    rng = random.Random(config.seed)
    elems = F.elements()
    nonzero = [e for e in elems if not e.is_zero()]
    report = {
        "seed": config.seed,
        "trials_run": 0,
        "delta_bound": delta,
        "q_exceeds_delta": q > delta,
        "success": False,
        "units": None,
    }
    for trial in range(config.trials):
        report["trials_run"] = trial + 1
        units = []
        for n_i in code.block_sizes:
            coeffs = [rng.choice(nonzero)] + [rng.choice(elems) for _ in range(n_i - 1)]
            units.append(TruncatedSeries(F, coeffs))
        rows = []
        s_blocks = [matrix_S(u, n_i) if n_i > 1 else None
                    for u, n_i in zip(units, code.block_sizes)]
        for r in range(code.generator.rows):
            row = code.generator.row(r)
            out = []
            i = 0
            for u, S, n_i in zip(units, s_blocks, code.block_sizes):
                seg = row[i:i + n_i]
                out.extend(S.apply(seg) if S is not None else [u.coeffs[0] * seg[0]])
                i += n_i
            rows.append(out)
        G = FqMatrix.from_rows(F, rows)
        cand = GoppaCode(G, code.block_sizes, spec)
        if config.method == "minors":
            R, pivots = rref(G)
            Gk = FqMatrix.from_rows(F, [R.row(r) for r in range(len(pivots))])
            ok, _ = all_column_subsets_full_rank(Gk, M - d + 1)
            achieved = d if ok else 0
        else:
            achieved = min_distance(cand, "hamming", config.budget).value
        if achieved >= d:
            report["success"] = True
            report["units"] = [[c.to_index() for c in u.coeffs] for u in units]
            report["distance"] = achieved if config.method != "minors" else d
            report["certification"] = config.method
            return units, report
    return None, report


def realize_linear_code(G_C):
    """One-point projective-line spec whose code is the given row space.

    The evaluation matrix at an order-n infinity point is the anti-diagonal
    involution, so each section row is the reversed codeword row.
    """
    F = G_C.field
    if rank(G_C) != G_C.rows:
        raise RankDeficient("input generator must have full row rank",
                            rows=G_C.rows, rank=rank(G_C))
    n = G_C.cols
    curve = curve_make(F, "p1")
    divisor = Divisor(((CurvePoint.infinity(), n),))
    gamma = FqMatrix.from_rows(F, [list(reversed(G_C.row(r)))
                                   for r in range(G_C.rows)])
    return CodeSpec(F, curve, n, divisor, (), gamma)


def prime_power(q):
    """(p, m) with q = p^m, or raise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power", q=q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m = 0
    v = q
    while v % p == 0:
        v //= p
        m += 1
    if v != 1 or not is_prime(p):
        raise NotPrime(f"{q} is not a prime power", q=q)
    return p, m


def t_threshold(q, n):
    """Least genus compatible with n rational points by the point-count bound.

    Zero when n <= q + 1; otherwise the least t >= 1 with
    (2t)^2 q >= (n - q - 1)^2, the exact integer form of the ceiling of
    (n - q - 1) / (2 sqrt(q)).
    """
    if n <= q + 1:
        return 0
    rhs = (n - q - 1) ** 2
    t = 1
    while (2 * t) ** 2 * q < rhs:
        t += 1
    return t


def strong_obstruction(q, n, k):
    """Classify (q, n, k) against the genus threshold; emit a witness spec."""
    if not 1 <= k < n:
        raise InputError("need 1 <= k < n", k=k, n=n)
    t = t_threshold(q, n)
    admissible = t <= k <= n - t
    result = {"t": t, "admissible": admissible, "witness": None}
    if not admissible and n >= q + 2 + isqrt(4 * q):
        p, m = prime_power(q)
        F = field_make(p, m)
        curve = curve_make(F, "p1")
        divisor = Divisor(((CurvePoint.infinity(), n),))
        result["witness"] = CodeSpec(F, curve, k, divisor)
    return result


def roth_lempel(k, q):
    """The k x (q+2) matrix of Vandermonde columns plus two unit columns.

    Rows carry descending powers; the unit columns have their 1 in the rows
    of powers k-1 and k-2.
    """
    if q < k:
        raise FieldTooSmall("need q >= k distinct evaluation points", q=q, k=k)
    p, m = prime_power(q)
    F = field_make(p, m)
    elems = F.elements()
    rows = []
    for i in range(k):
        e = k - 1 - i
        row = [a ** e for a in elems]
        row.append(F.one() if i == 0 else F.zero())
        row.append(F.one() if i == 1 else F.zero())
        rows.append(row)
    return FqMatrix.from_rows(F, rows)


def nmds_g4(q):
    """The 4 x (q+3) matrix of cubic Vandermonde columns plus three unit columns."""
    if q < 4:
        raise FieldTooSmall("need q >= 4 distinct evaluation points", q=q)
    p, m = prime_power(q)
    F = field_make(p, m)
    elems = F.elements()
    rows = []
    for i in range(4):
        e = 3 - i
        row = [a ** e for a in elems]
        row.extend(F.one() if i == j else F.zero() for j in range(3))
        rows.append(row)
    return FqMatrix.from_rows(F, rows)
