"""Chow models: integration, pushforward, tangent data, genus classes."""

import random
from fractions import Fraction

import pytest

from chigenus.chow import ChowPresentation, hypersurface_chi
from chigenus.genus import GenusSpec
from chigenus.scalars import ExactDivisionError, LaurentScalar, ONE, Y, ZERO
from chigenus.polynomials import MultiPoly


def alternating(n):
    out = ZERO
    for i in range(n + 1):
        out = out + LaurentScalar.y_power(i, (-1) ** i)
    return out


def test_integrate_basics():
    p2 = ChowPresentation.projective_space(2)
    h = p2.gen("h")
    assert p2.integrate(h * h) == ONE
    assert p2.integrate(h) == ZERO
    assert p2.integrate((p2.one() + h) ** 3) == LaurentScalar.constant(3)

    p11 = ChowPresentation.product([1, 1])
    h1, h2 = p11.gen("h1"), p11.gen("h2")
    assert p11.integrate(h1 * h2) == ONE
    assert p11.integrate(h1 * h1) == ZERO


def test_integrate_is_linear_and_vanishes_below_top():
    p3 = ChowPresentation.projective_space(3)
    h = p3.gen("h")
    rng = random.Random(5)
    for _ in range(20):
        a = LaurentScalar({rng.randint(-2, 2): Fraction(rng.randint(-9, 9))})
        b = LaurentScalar({rng.randint(-2, 2): Fraction(rng.randint(-9, 9))})
        x = h ** rng.randint(0, 3)
        z = h ** rng.randint(0, 3)
        assert p3.integrate(x * a + z * b) == p3.integrate(x) * a + p3.integrate(z) * b
    for k in range(3):
        assert p3.integrate(h**k) == ZERO


def test_pushforward_trivial_bundle_over_point():
    pt = ChowPresentation.point()
    pe = pt.projective_bundle([pt.zero(), pt.zero()])
    xi = pe.gen("xi")
    assert pe.pb_pushforward(xi) == pt.one()
    assert pe.pb_pushforward(pe.one()) == pt.zero()


def test_pushforward_grothendieck_relation():
    base = ChowPresentation.projective_space(1)
    h = base.gen("h")
    pe = base.projective_bundle([base.zero(), h])
    xi = pe.gen("xi")
    # xi^2 reduces to h*xi, so its pushforward is h
    assert (xi * xi).poly == (pe.pullback_from_base(h) * xi).poly
    assert pe.pb_pushforward(xi * xi) == h


def test_pushforward_linearity():
    base = ChowPresentation.projective_space(1)
    h = base.gen("h")
    pe = base.projective_bundle([base.zero(), h])
    rng = random.Random(9)
    gens = pe.gens()
    for _ in range(25):
        a = rng.choice(gens) * rng.randint(-3, 3) + pe.one() * rng.randint(-2, 2)
        b = rng.choice(gens) * rng.choice(gens) + rng.choice(gens)
        assert pe.pb_pushforward(a + b) == pe.pb_pushforward(a) + pe.pb_pushforward(b)


def test_pushforward_functoriality_to_point():
    """Integrating over the tower equals integrating the pushforward."""
    base = ChowPresentation.projective_space(1)
    h = base.gen("h")
    pe = base.projective_bundle([base.zero(), h])
    rng = random.Random(21)
    for _ in range(25):
        e = pe.one() * rng.randint(-2, 2)
        for name in pe.ring.vars:
            e = e + pe.gen(name) * rng.randint(-3, 3)
        e = e * e
        assert pe.integrate(e) == base.integrate(pe.pb_pushforward(e))


def test_projection_formula():
    base = ChowPresentation.projective_space(1)
    h = base.gen("h")
    pe = base.projective_bundle([base.zero(), h])
    xi = pe.gen("xi")
    rng = random.Random(2)
    for _ in range(25):
        e = xi * rng.randint(-3, 3) + pe.pullback_from_base(h) * rng.randint(-3, 3)
        b = base.one() * rng.randint(-2, 2) + h * rng.randint(-3, 3)
        lhs = pe.pb_pushforward(e * pe.pullback_from_base(b))
        rhs = pe.pb_pushforward(e) * b
        assert lhs == rhs


def test_tangent_data_examples():
    p2 = ChowPresentation.projective_space(2)
    roots = p2.tangent_data()
    h = p2.ring.var("h")
    assert list(roots.plus) == [h, h, h]
    assert len(roots.minus) == 1 and not roots.minus[0]

    p11 = ChowPresentation.product([1, 1])
    roots = p11.tangent_data()
    h1, h2 = p11.ring.var("h1"), p11.ring.var("h2")
    assert list(roots.plus) == [h1, h1, h2, h2]
    assert len(roots.minus) == 2

    assert ChowPresentation.point().tangent_data().plus == ()


def test_hirzebruch_class_of_projective_spaces():
    assert ChowPresentation.projective_space(1).chi_y() == ONE - Y
    assert ChowPresentation.projective_space(2).chi_y() == ONE - Y + Y * Y
    assert ChowPresentation.point().chi_y() == ONE
    for n in range(7):
        pres = ChowPresentation.projective_space(n) if n else ChowPresentation.point()
        assert pres.chi_y() == alternating(n)


def test_genus_specializations_on_models():
    p3 = ChowPresentation.projective_space(3)
    assert p3.chi_y(GenusSpec.chern()) == LaurentScalar.constant(4)  # Euler
    assert p3.chi_y(GenusSpec.todd()) == ONE  # arithmetic genus
    assert p3.chi_y(GenusSpec.l_class()) == ZERO  # signature of P^3
    p2 = ChowPresentation.projective_space(2)
    assert p2.chi_y(GenusSpec.l_class()) == ONE  # signature of P^2


def test_chi_y_degree_bound():
    for pres in (
        ChowPresentation.projective_space(4),
        ChowPresentation.product([2, 1]),
        ChowPresentation.projective_space(1).projective_bundle(
            [ChowPresentation.projective_space(1).zero(),
             ChowPresentation.projective_space(1).gen("h")]
        ),
    ):
        chi = pres.chi_y()
        assert chi.max_exp <= pres.dim


def test_chi_y_multiplicative_in_bundle_stages():
    """The fibration multiplicativity that pins the relative tangent model."""
    base = ChowPresentation.projective_space(1)
    h = base.gen("h")
    f1 = base.projective_bundle([base.zero(), h])
    assert f1.chi_y() == (ONE - Y) ** 2

    rank3 = base.projective_bundle([base.zero(), h, h * 2])
    assert rank3.chi_y() == (ONE - Y) * alternating(2)

    tower = f1.projective_bundle([f1.zero(), f1.gen("xi")])
    assert tower.chi_y() == (ONE - Y) ** 3


def test_product_chi_multiplicativity():
    p21 = ChowPresentation.product([2, 1])
    assert p21.chi_y() == alternating(2) * alternating(1)


def test_todd_twist_point_and_linearity():
    pt = ChowPresentation.point()
    assert pt.todd_transform_twist(pt.one()) == pt.one()

    p1 = ChowPresentation.projective_space(1)
    h = p1.gen("h")
    g1 = p1.cotangent_lambda_class()
    g2 = p1.one() - p1.exp_class(-h)  # character image of a point sheaf
    a = LaurentScalar({0: 2, 1: -3})
    b = LaurentScalar({-1: 1})
    lhs = p1.todd_transform_twist(g1 * a + g2 * b)
    rhs = p1.todd_transform_twist(g1) * a + p1.todd_transform_twist(g2) * b
    assert lhs == rhs
    # the point sheaf twists to the point class itself
    assert p1.todd_transform_twist(g2) == h


def test_todd_twist_reproduces_hirzebruch_class():
    for n in (1, 2, 3):
        pres = ChowPresentation.projective_space(n)
        assert pres.todd_transform_twist(pres.cotangent_lambda_class()) == pres.hirzebruch_class()


def test_todd_twist_domain_error_when_not_laurent():
    # ch image of O(1) on P^1: the twist needs (1+y)^-1, not Laurent
    p1 = ChowPresentation.projective_space(1)
    g = p1.exp_class(p1.gen("h"))
    with pytest.raises(ExactDivisionError):
        p1.todd_transform_twist(g)


def test_fundamental_g_class_grading():
    p2 = ChowPresentation.projective_space(2)
    assert p2.fundamental_g_class() == p2.one() * LaurentScalar.y_power(2)


def test_hypersurface_chi_values():
    assert hypersurface_chi(2, 1) == ONE - Y            # a line is P^1
    assert hypersurface_chi(2, 3) == ZERO               # elliptic curve
    assert hypersurface_chi(3, 2) == (ONE - Y) ** 2     # quadric = P^1 x P^1
    # K3 quartic: 2 - 20y + 2y^2
    assert hypersurface_chi(3, 4) == LaurentScalar({0: 2, 1: -20, 2: 2})
    # cubic surface = P^2 blown up in 6 points: chi_y = 1 - 7y + y^2
    assert hypersurface_chi(3, 3) == LaurentScalar({0: 1, 1: -7, 2: 1})
    with pytest.raises(ValueError):
        hypersurface_chi(0, 1)
    with pytest.raises(ValueError):
        hypersurface_chi(2, 0)


def test_exp_class_and_duals():
    p2 = ChowPresentation.projective_space(2)
    h = p2.gen("h")
    e = p2.exp_class(h)
    d = p2.exp_class(-h)
    assert e * d == p2.one()
    assert e == p2.one() + h + h * h * Fraction(1, 2)


def test_presentation_validation():
    with pytest.raises(ValueError):
        ChowPresentation([-1])
    base = ChowPresentation.projective_space(1)
    with pytest.raises(ValueError):
        base.projective_bundle([])
    p2 = ChowPresentation.projective_space(2)
    with pytest.raises(ValueError):
        p2.projective_bundle([p2.gen("h") * p2.gen("h")])
    with pytest.raises(ValueError):
        ChowPresentation.point().pb_pushforward(ChowPresentation.point().one())
