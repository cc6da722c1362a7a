"""Genus series, root classes, lambda/gamma operations, weight coefficients."""

from fractions import Fraction

import pytest

from chigenus.genus import (
    BundleRoots,
    GenusSpec,
    ch_twisted,
    chern_series,
    class_of_roots,
    gamma_powers,
    l_series,
    lambda_gamma,
    lambda_powers,
    q_series,
    tilde_lambda_class,
    tilde_lambda_coeffs,
    todd_series,
)
from chigenus.polynomials import PolyRing, series_at
from chigenus.scalars import LaurentScalar, ONE, ONE_PLUS_Y, Y, ZERO
from chigenus.series import TruncSeries

HALF = Fraction(1, 2)
TWELFTH = Fraction(1, 12)


def test_q_series_order_two_frozen():
    q = q_series(2)
    assert q.coefficient(0) == ONE
    assert q.coefficient(1) == (ONE - Y) * HALF
    assert q.coefficient(2) == ONE_PLUS_Y * ONE_PLUS_Y * TWELFTH


def test_q_series_constant_term_is_one():
    for order in range(6):
        assert q_series(order).coefficient(0) == ONE


def test_specialization_chern():
    # y = -1 collapses to 1 + a exactly, all higher coefficients zero
    q = q_series(8).eval_y(-1)
    assert q == chern_series(8)
    for k in range(2, 9):
        assert not q.coefficient(k)


def test_specialization_todd():
    assert q_series(8).eval_y(0) == todd_series(8)


def test_specialization_l_class():
    q = q_series(8).eval_y(1)
    assert q == l_series(8)
    assert q.coefficient(1) == ZERO
    assert q.coefficient(2) == LaurentScalar.constant(Fraction(1, 3))


def test_defining_identity_of_q():
    """Q_y(a) * (1 - e^{-a(1+y)}) == a(1+y) - a*y*(1 - e^{-a(1+y)})."""
    order = 8
    q = q_series(order)
    one_minus_exp = TruncSeries.one(order) - (
        -TruncSeries.identity(order) * ONE_PLUS_Y
    ).exp()
    lhs = q * one_minus_exp
    a_term = TruncSeries([ZERO, ONE_PLUS_Y], order=order)
    rhs = a_term - TruncSeries([ZERO, Y], order=order) * one_minus_exp
    assert lhs == rhs


def test_custom_genus_requires_normalization():
    with pytest.raises(ValueError):
        GenusSpec.custom(TruncSeries([2, 1], order=4))
    spec = GenusSpec.custom(TruncSeries([1, 5], order=4))
    assert spec.series(3).coefficient(1) == LaurentScalar.constant(5)
    with pytest.raises(ValueError):
        spec.series(6)  # custom series too short


def test_class_of_single_root():
    ring = PolyRing(["h"], caps=[2])
    h = ring.var("h")
    cls = class_of_roots(BundleRoots(ring, (h,)), GenusSpec.hirzebruch())
    assert cls == ring.one() + h.scale((ONE - Y) * HALF)


def test_todd_class_of_two_equal_roots_frozen():
    # brute-force oracle: (1 + h/2 + h^2/12)^2 collected mod h^3
    ring = PolyRing(["h"], caps=[3])
    h = ring.var("h")
    cls = class_of_roots(BundleRoots(ring, (h, h)), GenusSpec.todd())
    assert cls == ring.one() + h + (h * h).scale(
        LaurentScalar.constant(Fraction(5, 12))
    )


def test_class_of_empty_roots_is_one():
    ring = PolyRing(["h"], caps=[3])
    assert class_of_roots(BundleRoots(ring), GenusSpec.todd()) == ring.one()


def test_class_multiplicativity_over_disjoint_union():
    ring = PolyRing(["x1", "x2", "x3"], degree_cap=4)
    r1 = BundleRoots(ring, (ring.var("x1"), ring.var("x2")))
    r2 = BundleRoots(ring, (ring.var("x3"),), (ring.zero(),))
    g = GenusSpec.hirzebruch()
    assert class_of_roots(r1.disjoint_union(r2), g) == class_of_roots(r1, g) * class_of_roots(r2, g)


def test_roots_must_be_degree_one():
    ring = PolyRing(["h"], caps=[3])
    h = ring.var("h")
    with pytest.raises(ValueError):
        BundleRoots(ring, (h * h,))
    with pytest.raises(ValueError):
        BundleRoots(ring, (ring.one(),))


def test_ch_twisted_single_root():
    ring = PolyRing(["h"], caps=[2])
    h = ring.var("h")
    for k in (1, 3, -2):
        roots = BundleRoots(ring, (h * k,))
        assert ch_twisted(roots) == ring.one() + h.scale(ONE_PLUS_Y * k)


def test_ch_twisted_trivial_rank():
    ring = PolyRing(["h"], caps=[2])
    roots = BundleRoots(ring, (ring.zero(), ring.zero()))
    assert ch_twisted(roots) == ring.one() * 2


def test_ch_twisted_negated_root():
    ring = PolyRing(["h"], caps=[2])
    h = ring.var("h")
    assert ch_twisted(BundleRoots(ring, (-h,))) == ring.one() - h.scale(ONE_PLUS_Y)


def test_ch_twisted_additive():
    ring = PolyRing(["x1", "x2"], degree_cap=3)
    a = BundleRoots(ring, (ring.var("x1"),))
    b = BundleRoots(ring, (ring.var("x2"),), (ring.zero(),))
    assert ch_twisted(a.disjoint_union(b)) == ch_twisted(a) + ch_twisted(b)


def test_lambda_of_line_class():
    ring = PolyRing(["x"], caps=[3])
    x = ring.var("x")
    total = lambda_gamma(BundleRoots(ring, (x,)), "lambda")
    expected = ring.one() + series_at(TruncSeries.identity(2).exp(), x).scale(Y)
    assert total == expected


def test_lambda_of_trivial_rank_two():
    ring = PolyRing(["x"], caps=[2])
    roots = BundleRoots(ring, (ring.zero(), ring.zero()))
    assert lambda_gamma(roots, "lambda") == ring.const(ONE_PLUS_Y * ONE_PLUS_Y)


def test_gamma_one_of_normalized_line_bundle():
    # gamma^1(E* - 1) for a line bundle has image e^{-x} - 1
    ring = PolyRing(["x"], caps=[4])
    x = ring.var("x")
    gammas = gamma_powers([-x], ring)
    expected = series_at(TruncSeries.identity(3).exp(), -x) - ring.one()
    assert gammas[1] == expected


def test_gamma_requires_rank_normalization():
    ring = PolyRing(["x"], caps=[3])
    x = ring.var("x")
    with pytest.raises(ValueError):
        lambda_gamma(BundleRoots(ring, (x,)), "gamma")
    with pytest.raises(ValueError):
        lambda_gamma(BundleRoots(ring, (x,), (x,)), "gamma")


def test_gamma_equals_lambda_substitution():
    """(1-y)^rank * lambda_{y/(1-y)} == gamma_y, as the finite identity
    sum_i lambda^i y^i (1-y)^(r-i) == sum_i gamma^i y^i."""
    for rank in (1, 2, 3):
        ring = PolyRing([f"x{i}" for i in range(rank)], degree_cap=rank + 2)
        roots = [ring.var(f"x{i}") for i in range(rank)]
        lam = lambda_powers(roots, ring)
        norm = BundleRoots(ring, tuple(roots), tuple(ring.zero() for _ in roots))
        gam_total = lambda_gamma(norm, "gamma")
        lhs = ring.zero()
        one_minus_y = ONE - Y
        for i in range(rank + 1):
            lhs = lhs + lam[i].scale(Y**i * one_minus_y ** (rank - i))
        assert lhs == gam_total


def test_tilde_lambda_coeffs_frozen():
    assert tilde_lambda_coeffs(0) == [ONE]
    assert tilde_lambda_coeffs(1) == [
        LaurentScalar({-1: 1, 0: 1}),
        -Y,
    ]
    w2 = tilde_lambda_coeffs(2)
    assert w2[2] == Y * Y
    assert w2[0] == LaurentScalar({-2: 1, -1: 2, 0: 1})
    assert w2[1] == -(ONE + Y)


def test_tilde_lambda_class_normalization():
    """tilde-lambda of E times y^rank equals the lambda class of E*."""
    for rank in (1, 2, 3):
        ring = PolyRing([f"x{i}" for i in range(rank)], degree_cap=rank + 2)
        roots = [ring.var(f"x{i}") for i in range(rank)]
        tl = tilde_lambda_class(roots, ring)
        lam_dual = lambda_gamma(BundleRoots(ring, tuple(-r for r in roots)), "lambda")
        assert tl.scale(LaurentScalar.y_power(rank)) == lam_dual
