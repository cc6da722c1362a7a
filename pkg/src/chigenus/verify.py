"""Exact verification of the closed-form identities, against independent oracles.

Each check compares two sides computed along genuinely different routes and
reports exact polynomial equality; there are no tolerances.  The left-hand
oracles (cohomological Euler characteristics via binomials and the
exterior-power recursion of the Euler sequence) never touch the class
machinery they test.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .chow import ChowPresentation
from .genus import (
    BundleRoots,
    GenusSpec,
    class_of_roots,
    gamma_powers,
    lambda_gamma,
    lambda_powers,
    operator_chern_images,
    q_series,
    tilde_lambda_class,
    tilde_lambda_coeffs,
)
from .motivic import (
    BlowUp,
    DeclRegistry,
    Proj,
    check_blowup_relation,
    chi_y,
    hodge_characteristic,
)
from .polynomials import MultiPoly, PolyRing, series_at
from .scalars import ExactDivisionError, LaurentScalar, ONE, ONE_PLUS_Y, Y, ZERO
from .series import TruncSeries


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one identity check; passed iff left == right exactly."""

    identity: str
    params: tuple
    left: str
    right: str
    passed: bool

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        args = ", ".join(str(p) for p in self.params)
        head = f"{status} {self.identity}({args})"
        if self.passed:
            return head
        return f"{head}: left = {self.left} ; right = {self.right}"


def report_pair(identity: str, params: tuple, left, right) -> VerifyReport:
    return VerifyReport(identity, params, str(left), str(right), left == right)


def report_pairs(identity: str, params: tuple, pairs: list[tuple]) -> VerifyReport:
    left = "[" + "; ".join(str(l) for l, _ in pairs) + "]"
    right = "[" + "; ".join(str(r) for _, r in pairs) + "]"
    passed = all(l == r for l, r in pairs)
    return VerifyReport(identity, params, left, right, passed)


# -- cohomology oracles ------------------------------------------------------------


def euler_char_O(n: int, k: int) -> int:
    """Euler characteristic of O(k) on P^n: the binomial C(n+k, n) read as a
    polynomial in k, hence valid for every integer k."""
    if n < 0:
        raise ValueError("need n >= 0")
    num = 1
    for i in range(1, n + 1):
        num *= k + i
    return num // factorial(n)


def euler_char_Omega(n: int, p: int, k: int) -> int:
    """Euler characteristic of Omega^p(k) on P^n.

    Exterior powers of the Euler sequence give the recursion
    chi(Omega^p(k)) = C(n+1, p) * chi(O(k-p)) - chi(Omega^(p-1)(k)).
    """
    if p < 0 or p > n:
        return 0
    if p == 0:
        return euler_char_O(n, k)
    return comb(n + 1, p) * euler_char_O(n, k - p) - euler_char_Omega(n, p - 1, k)


# -- shared model builders ----------------------------------------------------------


def _free_ring(d: int, order: int) -> PolyRing:
    """d independent degree-1 roots, truncated at total degree ``order``."""
    return PolyRing([f"x{i+1}" for i in range(d)], degree_cap=order)


def _base_model(r: int, base: str) -> ChowPresentation:
    """P(E) for a split rank-r bundle over pt or P^1 (roots 0, h, 2h, ...)."""
    if base == "pt":
        pres = ChowPresentation.point()
        roots = [pres.zero() for _ in range(r)]
    elif base == "p1":
        pres = ChowPresentation.projective_space(1)
        h = pres.gen("h")
        roots = [h * i for i in range(r)]
    else:
        raise ValueError(f"unknown base {base!r}; expected 'pt' or 'p1'")
    return pres.projective_bundle(roots)


# -- identity checks ------------------------------------------------------------------


def ghrr_check(n: int, k: int) -> VerifyReport:
    """Riemann-Roch for O(k) on P^n.

    Left: the cohomology oracle sum_p chi(Omega^p(k)) y^p.  Right: the
    integral of the Hirzebruch class against the root-scaled Chern character
    exp(k*h*(1+y)).
    """
    lhs = ZERO
    for p in range(n + 1):
        lhs = lhs + LaurentScalar.y_power(p, euler_char_Omega(n, p, k))
    pres = ChowPresentation.projective_space(n)
    h = pres.gen("h")
    exp_s = TruncSeries.identity(max(pres.dim, 1)).exp()
    twisted = pres.element(series_at(exp_s, h.poly.scale(ONE_PLUS_Y * k)))
    rhs = pres.integrate(pres.hirzebruch_class() * twisted)
    return report_pair("ghrr", (n, k), lhs, rhs)


def yokura_identity(d: int, order: int) -> VerifyReport:
    """Twisted Todd product identity behind the genus factorization.

    Checks, as symmetric series in d independent roots to the given order,
    that prod_i (1 + y e^{-x_i(1+y)}) * x_i(1+y)/(1 - e^{-x_i(1+y)}),
    divided exactly by (1+y)^d, equals prod_i Q_y(x_i).
    """
    ring = _free_ring(d, order)
    q = q_series(order)
    exp_neg = (-(TruncSeries.identity(order) * ONE_PLUS_Y)).exp()
    t_scaled = TruncSeries.identity(order + 1) * ONE_PLUS_Y
    todd_scaled = t_scaled.div(TruncSeries.one(order + 1) - (-t_scaled).exp())
    lhs = ring.one()
    rhs = ring.one()
    for i in range(d):
        x = ring.var(f"x{i+1}")
        factor = ring.one() + series_at(exp_neg, x).scale(Y)
        lhs = lhs * factor * series_at(todd_scaled, x)
        rhs = rhs * series_at(q, x)
    try:
        lhs = lhs.scalar_div(ONE_PLUS_Y**d)
    except ExactDivisionError:
        return VerifyReport(
            "yokura", (d, order), str(lhs), str(rhs) + " (division inexact)", False
        )
    return report_pair("yokura", (d, order), lhs, rhs)


def reform_identity(d: int) -> VerifyReport:
    """Weighted-operator normalization of the motivic class in rank d.

    In the character model with d independent tangent roots, applying
    sum_j w_j(y) c~_j to the fundamental G-class y^d must reproduce the
    total lambda class of the cotangent bundle.
    """
    order = d + 3
    ring = _free_ring(d, order)
    roots = [ring.var(f"x{i+1}") for i in range(d)]
    lhs = tilde_lambda_class(roots, ring).scale(LaurentScalar.y_power(d))
    rhs = lambda_gamma(
        BundleRoots(ring, tuple(-r for r in roots)), "lambda"
    )
    return report_pair("reform", (d,), lhs, rhs)


def lambda_gamma_identities(r: int) -> VerifyReport:
    """Finite conversion between exterior powers and gamma operations.

    Checks sum_i gamma^(r-i)(E*-r) (1+y)^i == sum_i lambda^(r-i)(E*) y^i and
    lambda^i(E*) == sum_j gamma^j(E*-r) C(r-j, r-i) on a split rank-r model.
    """
    order = r + 3
    ring = _free_ring(r, order)
    duals = [-ring.var(f"x{i+1}") for i in range(r)]
    lam = lambda_powers(duals, ring)
    gam = gamma_powers(duals, ring)
    left_total = ring.zero()
    right_total = ring.zero()
    for i in range(r + 1):
        left_total = left_total + gam[r - i].scale(ONE_PLUS_Y**i)
        right_total = right_total + lam[r - i].scale(Y**i)
    pairs = [(left_total, right_total)]
    for i in range(r + 1):
        rhs = ring.zero()
        for j in range(i + 1):
            rhs = rhs + gam[j].scale(LaurentScalar.constant(comb(r - j, r - i)))
        pairs.append((lam[i], rhs))
    return report_pairs("lambda-gamma", (r,), pairs)


def gamma_pb_relation(r: int, base: str) -> VerifyReport:
    """Defining relation of the projective bundle in gamma form.

    On P(E) the sum of gamma^i(E* - r) (1 - [O(1)*])^(r-i) reduces to zero
    modulo the bundle relation.
    """
    pres = _base_model(r, base)
    stage = pres.stages[-1]
    ring = pres.ring
    gam = gamma_powers([-root for root in stage.roots], ring)
    xi = ring.var(stage.name)
    one_minus_dual = pres.one() - pres.exp_class(-xi)
    total = pres.zero()
    for i in range(r + 1):
        total = total + pres.element(gam[i]) * one_minus_dual ** (r - i)
    return report_pair("gamma", (r, base), total, pres.zero())


def higher_chern_check(r: int, base: str) -> VerifyReport:
    """Grothendieck-style defining equation of the operator Chern classes.

    sum_i (-1)^i c~_i(E) c~_1(O(1))^(r-i) == 0 on P(E), with the operators
    expressed through gamma classes and the y-grading.
    """
    pres = _base_model(r, base)
    stage = pres.stages[-1]
    cherns = operator_chern_images(list(stage.roots), pres.ring)
    xi = pres.ring.var(stage.name)
    c1 = pres.c1_operator(pres.element(xi))
    total = pres.zero()
    for i in range(r + 1):
        sign = LaurentScalar.constant((-1) ** i)
        total = total + pres.element(cherns[i]) * c1 ** (r - i) * sign
    return report_pair("higher-chern", (r, base), total, pres.zero())


def vrr_projection(n: int, m: int) -> VerifyReport:
    """Verdier-style Riemann-Roch for the projection P^n x P^m -> P^m.

    Checks the genus form (relative Hirzebruch class times the pulled-back
    class of the target equals the class of the product) and the motivic
    form in the character model, the latter both with the plain pullback
    paired with the lambda class of the relative cotangent bundle and with
    the degree-twisted pullback (multiplication by y^n) paired with the
    weighted class; the two pairings agree by the rank normalization.
    """
    prod = ChowPresentation.product([n, m], ["h1", "h2"])
    target = ChowPresentation.projective_space(m)
    var_map = {"h": "h2"}

    relative = BundleRoots(
        prod.ring,
        tuple([prod.ring.var("h1")] * (n + 1)),
        (prod.ring.zero(),),
    )

    ty_lhs = prod.element(
        class_of_roots(relative, GenusSpec.hirzebruch(), reduce=prod.reduce)
    ) * prod.pullback(target.hirzebruch_class(), var_map)
    ty_rhs = prod.hirzebruch_class()

    mc_pull = prod.pullback(target.cotangent_lambda_class(), var_map)
    lam_rel = prod.element(
        lambda_gamma(relative.negated(), "lambda", reduce=prod.reduce)
    )
    mc_rhs = prod.cotangent_lambda_class()
    mc_lhs_plain = lam_rel * mc_pull
    tilde_rel = prod.element(_tilde_class_virtual(relative))
    mc_lhs_twisted = tilde_rel * mc_pull * LaurentScalar.y_power(n)

    pairs = [(ty_lhs, ty_rhs), (mc_lhs_plain, mc_rhs), (mc_lhs_twisted, mc_rhs)]
    return report_pairs("vrr", (n, m), pairs)


def _tilde_class_virtual(roots: BundleRoots) -> MultiPoly:
    """Weighted operator class of a virtual bundle with trivial minus-roots.

    The weights depend only on the virtual rank, and the gamma operations of
    the rank-normalized dual come from the honest plus-roots alone because
    gamma of (trivial - 1) is 1.
    """
    if any(r for r in roots.minus):
        raise ValueError("only trivial minus-roots are supported")
    rank = roots.rank
    ring = roots.ring
    gam = gamma_powers([-r for r in roots.plus], ring)
    weights = tilde_lambda_coeffs(rank)
    out = ring.zero()
    for j in range(rank + 1):
        cj = gam[j].scale(LaurentScalar.y_power(-j, (-1) ** j))
        out = out + cj.scale(weights[j])
    return out


def composition_check(n: int) -> VerifyReport:
    """Factorization of the Hirzebruch class through the Todd transformation.

    Applying the (1+y)-twisted Todd transformation to the character image of
    the total cotangent lambda class on P^n must return the Hirzebruch class.
    """
    pres = (
        ChowPresentation.projective_space(n) if n > 0 else ChowPresentation.point()
    )
    twisted = pres.todd_transform_twist(pres.cotangent_lambda_class())
    return report_pair("composition", (n,), twisted, pres.hirzebruch_class())


def blowup_check(n: int, m: int, reg: DeclRegistry | None = None) -> VerifyReport:
    """Blow-up of P^n along a linear P^m: closed formula and scissor relation.

    chi_y of the blow-up must equal chi_y(P^n) + chi_y(P^m)(-y + ... +
    (-y)^(c-1)) with c = n - m, the arithmetic genus (y = 0) must be
    unchanged, and the class-level blow-up relation must hold on Hodge data.
    """
    if not 0 <= m < n:
        raise ValueError("need 0 <= m < n")
    c = n - m
    expr = BlowUp(Proj(n), Proj(m), c)
    left = chi_y(expr, reg)
    correction = ZERO
    for i in range(1, c):
        correction = correction + LaurentScalar.y_power(i, (-1) ** i)
    right = chi_y(Proj(n), reg) + chi_y(Proj(m), reg) * correction
    pairs = [(left, right)]
    pairs.append((left.eval_at(0), chi_y(Proj(n), reg).eval_at(0)))
    pairs.append((check_blowup_relation(Proj(n), Proj(m), c, reg), True))
    return report_pairs("blowup", (n, m), pairs)


def chi_proj_three_routes(n: int) -> VerifyReport:
    """chi_y(P^n) by scissor Hodge data, Chow integration, and the gHRR oracle."""
    expected = ZERO
    for i in range(n + 1):
        expected = expected + LaurentScalar.y_power(i, (-1) ** i)
    scissor = chi_y(Proj(n))
    chow = ChowPresentation.projective_space(n).chi_y()
    oracle = ZERO
    for p in range(n + 1):
        oracle = oracle + LaurentScalar.y_power(p, euler_char_Omega(n, p, 0))
    pairs = [(scissor, expected), (chow, expected), (oracle, expected)]
    return report_pairs("chi-proj-three-routes", (n,), pairs)
