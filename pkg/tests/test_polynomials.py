"""Multivariate truncated polynomial kernel."""

import random
from fractions import Fraction

import pytest

from chigenus.polynomials import MultiPoly, PolyRing, elementary_symmetric, series_at
from chigenus.scalars import ExactDivisionError, LaurentScalar, ONE, ONE_PLUS_Y, Y
from chigenus.series import TruncSeries


def test_nilpotence_examples():
    ring = PolyRing(["h"], caps=[2])
    h = ring.var("h")
    assert not h * h
    ring3 = PolyRing(["h"], caps=[3])
    h = ring3.var("h")
    assert str((ring3.one() + h) ** 3) == "1 + 3*h + 3*h^2"


def test_two_variable_expansion():
    ring = PolyRing(["a1", "a2"], degree_cap=4)
    a1, a2 = ring.var("a1"), ring.var("a2")
    product = (ring.one() + a1) * (ring.one() + a2)
    assert product == ring.one() + a1 + a2 + a1 * a2
    assert product.coefficient_of({"a1": 1, "a2": 1}) == ONE


def test_degree_cap_truncates():
    ring = PolyRing(["x"], degree_cap=2)
    x = ring.var("x")
    assert not x ** 3
    assert (ring.one() + x) ** 5 == ring.one() + x * 5 + x * x * 10


def _random_poly(ring, rng, max_terms=4):
    out = ring.zero()
    for _ in range(rng.randint(0, max_terms)):
        mono = tuple(rng.randint(0, 2) for _ in ring.vars)
        coeff = LaurentScalar(
            {rng.randint(-1, 1): Fraction(rng.randint(-5, 5))}
        )
        out = out + MultiPoly(ring, {mono: coeff})
    return out


def test_ring_axioms_random():
    ring = PolyRing(["x", "z"], caps=[4, 3], degree_cap=5)
    rng = random.Random(7)
    for _ in range(120):
        a, b, c = (_random_poly(ring, rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ring.zero() == a
        assert a * ring.one() == a


def test_arity_mismatch_rejected():
    ring = PolyRing(["x", "z"])
    with pytest.raises(ValueError):
        MultiPoly(ring, {(1,): ONE})


def test_variable_set_mismatch_rejected():
    r1 = PolyRing(["x"], degree_cap=3)
    r2 = PolyRing(["z"], degree_cap=3)
    with pytest.raises(ValueError):
        r1.var("x") + r2.var("z")


def test_series_at_exponential():
    ring = PolyRing(["h"], caps=[3])
    h = ring.var("h")
    e = series_at(TruncSeries.identity(2).exp(), h)
    assert e == ring.one() + h + h * h * Fraction(1, 2)


def test_series_at_rejects_constant_terms_and_short_series():
    ring = PolyRing(["h"], caps=[4])
    h = ring.var("h")
    with pytest.raises(ValueError):
        series_at(TruncSeries.identity(3), ring.one())
    with pytest.raises(ValueError):
        series_at(TruncSeries.identity(2), h)  # h^3 != 0 but order stops at 2


def test_exact_div_round_trip():
    ring = PolyRing(["h"], caps=[4])
    h = ring.var("h")
    a = ring.one() + h * ONE_PLUS_Y + h * h * Y
    b = ring.one() - h * Y
    assert (a * b).exact_div(b) == a


def test_exact_div_unit_constant_one():
    ring = PolyRing(["h"], caps=[3])
    h = ring.var("h")
    inv = ring.one().exact_div(ring.one() + h)
    assert inv == ring.one() - h + h * h


def test_exact_div_with_one_plus_y_constant():
    # (1 + y e^{-h})^2 / (1+y) on h^2 = 0 is Laurent: (1+y) - 2yh
    ring = PolyRing(["h"], caps=[2])
    h = ring.var("h")
    lam = (ring.one() + (ring.one() - h).scale(Y)) ** 2
    quotient = lam.exact_div(ring.const(ONE_PLUS_Y))
    assert quotient == ring.const(ONE_PLUS_Y) - h.scale(Y * 2)


def test_exact_div_failure_raises():
    ring = PolyRing(["h"], caps=[2])
    h = ring.var("h")
    with pytest.raises(ExactDivisionError):
        (ring.one() + h).exact_div(ring.const(ONE_PLUS_Y))


def test_substitute_is_ring_homomorphism():
    src = PolyRing(["x", "z"], degree_cap=4)
    dst = PolyRing(["s", "t"], degree_cap=4)
    images = {"x": dst.var("s") + dst.var("t"), "z": dst.var("t") * 2}
    rng = random.Random(11)
    for _ in range(40):
        a, b = _random_poly(src, rng), _random_poly(src, rng)
        assert (a * b).substitute(images, dst) == a.substitute(images, dst) * b.substitute(images, dst)
        assert (a + b).substitute(images, dst) == a.substitute(images, dst) + b.substitute(images, dst)


def test_degree_part_decomposition():
    ring = PolyRing(["x", "z"], degree_cap=3)
    rng = random.Random(3)
    p = _random_poly(ring, rng, max_terms=6)
    total = ring.zero()
    for k in range(4):
        part = p.degree_part(k)
        assert all(sum(m) == k for m in part.terms)
        total = total + part
    assert total == p


def test_elementary_symmetric():
    ring = PolyRing(["x", "z"], degree_cap=4)
    x, z = ring.var("x"), ring.var("z")
    e = elementary_symmetric([x, z], ring)
    assert e[0] == ring.one()
    assert e[1] == x + z
    assert e[2] == x * z


def test_coefficient_extraction_example():
    ring = PolyRing(["h"], caps=[2])
    h = ring.var("h")
    p = ring.one() + h * 3
    assert p.coefficient_of({"h": 1}) == LaurentScalar.constant(3)


def test_empty_polynomial_is_additive_zero():
    ring = PolyRing(["h"], caps=[3])
    zero = ring.zero()
    h = ring.var("h")
    assert zero + h == h
    assert not zero * h
    assert zero.total_degree() == 0
