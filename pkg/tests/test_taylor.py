import random
from fractions import Fraction

import pytest

from diffgoppa.code import CodeSpec, Divisor, LocalData, build_code, min_distance
from diffgoppa.curve import CurvePoint, curve_make
from diffgoppa.errors import OrderMismatch
from diffgoppa.field import field_make
from diffgoppa.matrix import FqMatrix
from diffgoppa.series import TruncatedSeries
from diffgoppa.taylor import (
    TaylorElement,
    act_on_code,
    enumerate_group,
    full_compose,
    full_group_elements,
    full_identity,
    full_inverse,
    orbit_sizes,
    tg_compose,
    tg_inverse,
)

F2 = field_make(2)
F5 = field_make(5)
P1_5 = curve_make(F5, "p1")


def elem(F, a, sigma):
    return TaylorElement(TruncatedSeries(F, a), TruncatedSeries(F, sigma))


def rand_elem(F, n, rng):
    elems = F.elements()
    nz = [e for e in elems if not e.is_zero()]
    a = [rng.choice(nz)] + [rng.choice(elems) for _ in range(n - 1)]
    s = [F.zero(), rng.choice(nz)] + [rng.choice(elems) for _ in range(n - 2)]
    return elem(F, a, s)


def test_compose_identity():
    g = elem(F5, [2, 1, 0], [0, 3, 1])
    e = TaylorElement.identity(F5, 3)
    for h in (tg_compose(g, e), tg_compose(e, g)):
        assert h.a == g.a and h.sigma == g.sigma


def test_compose_scaling_subgroup():
    g1 = elem(F5, [1, 0], [0, 2])
    g2 = elem(F5, [1, 0], [0, 3])
    h = tg_compose(g1, g2)
    assert h.sigma == TruncatedSeries(F5, [0, 1])  # 2 * 3 = 6 = 1


def test_compose_example():
    g1 = elem(F5, [1, 1, 0], [0, 1, 0])
    g2 = elem(F5, [1, 0, 0], [0, 1, 1])
    h = tg_compose(g1, g2)
    assert h.a == TruncatedSeries(F5, [1, 1, 0])
    assert h.sigma == TruncatedSeries(F5, [0, 1, 1])


def test_inverse_examples():
    e = TaylorElement.identity(F5, 3)
    inv = tg_inverse(e)
    assert inv.a == e.a and inv.sigma == e.sigma
    g = elem(F5, [2, 0], [0, 1])
    assert tg_inverse(g).a == TruncatedSeries(F5, [3, 0])
    g = elem(F5, [1, 0, 0], [0, 1, 1])
    assert tg_inverse(g).sigma == TruncatedSeries(F5, [0, 1, 4])


def test_inverse_random():
    rng = random.Random(0)
    for _ in range(30):
        g = rand_elem(F5, 5, rng)
        h = tg_compose(g, tg_inverse(g))
        e = TaylorElement.identity(F5, 5)
        assert h.a == e.a and h.sigma == e.sigma
        h = tg_compose(tg_inverse(g), g)
        assert h.a == e.a and h.sigma == e.sigma


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        tg_compose(TaylorElement.identity(F5, 3), TaylorElement.identity(F5, 4))


def test_group_count_matches_formula():
    for q, F in ((2, F2), (3, field_make(3))):
        for n in (2, 3):
            assert len(full_group_elements(F, n)) == orbit_sizes(q, n)[0]


def test_group_axioms_exhaustive_q2():
    for n in (2, 3):
        g = full_group_elements(F2, n)
        key = lambda x: (x[0].coeffs, x[1].coeffs)
        keys = set(map(key, g))
        assert len(keys) == len(g)
        ident = full_identity(F2, n)
        for x in g:
            assert key(full_compose(x, ident)) == key(x)
            assert key(full_compose(ident, x)) == key(x)
            assert key(full_compose(x, full_inverse(x))) == key(ident)
            for y in g:
                assert key(full_compose(x, y)) in keys
        # associativity on a deterministic sample of triples
        for i, x in enumerate(g):
            for j, y in enumerate(g):
                z = g[(i + j) % len(g)]
                assert (key(full_compose(full_compose(x, y), z))
                        == key(full_compose(x, full_compose(y, z))))


def test_orbit_sizes_examples():
    assert orbit_sizes(2, 3)[:2] == (16, 168)
    assert orbit_sizes(3, 2)[:2] == (36, 48)
    g, gl, ratio = orbit_sizes(7, 1)
    assert g == gl == 6 and ratio == Fraction(1)


def test_representation_homomorphism():
    rng = random.Random(1)
    for q in (2, 3, 5):
        F = field_make(q)
        for n in (2, 4, 6):
            for _ in range(10):
                g1, g2 = rand_elem(F, n, rng), rand_elem(F, n, rng)
                assert tg_compose(g1, g2).rho() == g1.rho() * g2.rho()


def test_faithfulness_small():
    for n in (2, 3):
        g = enumerate_group(F2, n)
        images = {tuple(e.to_index() for e in x.rho().entries) for x in g}
        assert len(images) == len(g)


def test_simple_transitivity_q2_n2():
    g = enumerate_group(F2, 2)
    images = [x.rho() for x in g]
    keys = {tuple(e.to_index() for e in m.entries) for m in images}
    assert len(keys) == len(g)
    # the image is a subgroup acting freely on itself by translation
    for m1 in images:
        translated = {tuple(e.to_index() for e in (m1 * m2).entries)
                      for m2 in images}
        assert translated == keys


def test_act_identity():
    spec = CodeSpec(F5, P1_5, 2, Divisor(((CurvePoint.affine(F5.element(1)), 2),
                                          (CurvePoint.affine(F5.element(2)), 2))))
    code = build_code(spec)
    moved = act_on_code(code, [TaylorElement.identity(F5, 2)] * 2)
    assert moved.generator == code.generator


def test_act_unit_on_double_point():
    # k=1, D = 2 p_0, unit 1 + t: (1,0) -> (1,1)
    spec = CodeSpec(F5, P1_5, 1, Divisor(((CurvePoint.affine(F5.element(0)), 2),)))
    code = build_code(spec)
    g = elem(F5, [1, 1], [0, 1])
    moved = act_on_code(code, [g])
    assert moved.generator == FqMatrix.from_rows(F5, [[1, 1]])


def test_act_multiplicity_one_scaling():
    spec = CodeSpec(F5, P1_5, 2, Divisor(tuple(
        (CurvePoint.affine(a), 1) for a in F5.elements()[:3])))
    code = build_code(spec)
    gs = [TaylorElement(TruncatedSeries(F5, [c]), TruncatedSeries(F5, [0]))
          for c in (2, 3, 4)]
    moved = act_on_code(code, gs)
    for j, c in enumerate((2, 3, 4)):
        for r in range(2):
            assert moved.generator[r, j] == F5.element(c) * code.generator[r, j]


def test_act_preserves_invariant_metrics():
    rng = random.Random(2)
    spec = CodeSpec(F5, P1_5, 2, Divisor(((CurvePoint.affine(F5.element(1)), 2),
                                          (CurvePoint.affine(F5.element(3)), 2))))
    code = build_code(spec)
    before = {m: min_distance(code, m).value for m in ("block", "rt", "rank")}
    for _ in range(10):
        gs = [rand_elem(F5, 2, rng), rand_elem(F5, 2, rng)]
        moved = act_on_code(code, gs)
        assert moved.dimension == code.dimension
        for m in ("block", "rt"):
            assert min_distance(moved, m).value == before[m]
        # rank needs the same element at every point: per-row maps differ
        g = rand_elem(F5, 2, rng)
        moved = act_on_code(code, [g, g])
        assert min_distance(moved, "rank").value == before["rank"]


def test_act_can_change_rank_distance():
    # regression: independent per-point units break jet proportionality,
    # so the rank distance is only invariant under a common element
    spec = CodeSpec(F5, P1_5, 2, Divisor(((CurvePoint.affine(F5.element(1)), 2),
                                          (CurvePoint.affine(F5.element(3)), 2))))
    code = build_code(spec)
    assert min_distance(code, "rank").value == 1  # the constant section
    gs = [TaylorElement.identity(F5, 2), elem(F5, [3, 1], [0, 3])]
    moved = act_on_code(code, gs)
    assert min_distance(moved, "rank").value == 2


def test_act_can_change_hamming_distance():
    # regression: a unit spreads a sparse block, strictly raising d_H
    spec = CodeSpec(F5, P1_5, 1, Divisor(((CurvePoint.affine(F5.element(0)), 2),)))
    code = build_code(spec)
    assert min_distance(code, "hamming").value == 1
    g = elem(F5, [1, 1], [0, 1])
    moved = act_on_code(code, [g])
    assert min_distance(moved, "hamming").value == 2
