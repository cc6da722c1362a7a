"""Characteristic-class power series and class builders.

The central object is the normalized series

    Q_y(a) = a*(1+y) / (1 - exp(-a*(1+y))) - a*y,

whose specializations at y = -1, 0, 1 are the total Chern factor 1 + a, the
Todd series a/(1 - exp(-a)) and the L-series a/tanh(a).  Multiplying Q_y
over the Chern roots of a tangent bundle produces the Hirzebruch class, the
one-parameter family interpolating Chern, Todd and L classes.

Bundles enter through their root collections: a virtual bundle is a list of
degree-1 "plus" roots and a list of "minus" roots, the latter contributing
by exact series division (the splitting principle makes this model
sufficient for every identity verified in this package).

Lambda and gamma operations are computed through their Chern-character
images: for a split bundle with roots x_j the total lambda class has image
prod_j (1 + y*exp(x_j)), and the gamma operations of a rank-0 virtual class
E - rk(E) are the elementary symmetric functions of exp(x_j) - 1, which is a
finite expansion keeping every value inside Q[y, y^-1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .polynomials import MultiPoly, PolyRing, elementary_symmetric, series_at
from .scalars import LaurentScalar, ONE, ONE_PLUS_Y, Y, ZERO
from .series import TruncSeries


def todd_series(order: int) -> TruncSeries:
    """a / (1 - exp(-a)) up to the given order."""
    a = TruncSeries.identity(order + 1)
    denom = TruncSeries.one(order + 1) - (-a).exp()
    return a.div(denom)


def chern_series(order: int) -> TruncSeries:
    """1 + a (all higher coefficients vanish)."""
    return TruncSeries([ONE, ONE], order=order)


def l_series(order: int) -> TruncSeries:
    """a / tanh(a), the characteristic series of the signature."""
    a = TruncSeries.identity(order + 1)
    half = Fraction(1, 2)
    cosh = (a.exp() + (-a).exp()) * half
    sinh = (a.exp() - (-a).exp()) * half
    return (a * cosh).div(sinh)


def q_series(order: int) -> TruncSeries:
    """The normalized Hirzebruch series Q_y to the given truncation order.

    Computed by substituting a*(1+y) into the Todd series and subtracting
    a*y, so a single well-tested inversion kernel covers all genera.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    scaled = TruncSeries([ZERO, ONE_PLUS_Y], order=order)
    base = todd_series(order).compose(scaled) if order else TruncSeries.one(0)
    return base - TruncSeries([ZERO, Y], order=order)


@dataclass(frozen=True)
class GenusSpec:
    """Selector for the multiplicative genus driving a class computation."""

    kind: str
    custom_series: TruncSeries | None = None

    def __post_init__(self):
        if self.kind not in ("hirzebruch", "chern", "todd", "l", "custom"):
            raise ValueError(f"unknown genus kind {self.kind!r}")
        if self.kind == "custom":
            if self.custom_series is None:
                raise ValueError("custom genus needs a series")
            if self.custom_series.constant_term() != ONE:
                raise ValueError("genus series must be normalized: constant term 1")

    @classmethod
    def hirzebruch(cls) -> "GenusSpec":
        return cls("hirzebruch")

    @classmethod
    def chern(cls) -> "GenusSpec":
        return cls("chern")

    @classmethod
    def todd(cls) -> "GenusSpec":
        return cls("todd")

    @classmethod
    def l_class(cls) -> "GenusSpec":
        return cls("l")

    @classmethod
    def custom(cls, series: TruncSeries) -> "GenusSpec":
        return cls("custom", custom_series=series)

    def series(self, order: int) -> TruncSeries:
        if self.kind == "hirzebruch":
            return q_series(order)
        if self.kind == "chern":
            return chern_series(order)
        if self.kind == "todd":
            return todd_series(order)
        if self.kind == "l":
            return l_series(order)
        if self.custom_series.order < order:
            raise ValueError(
                f"custom series order {self.custom_series.order} < required {order}"
            )
        return self.custom_series.truncate(order)


@dataclass(frozen=True)
class BundleRoots:
    """A virtual bundle presented by Chern roots in a fixed ambient ring.

    Every root must be of pure degree one (or zero).  The rank is
    #plus - #minus and may vanish.
    """

    ring: PolyRing
    plus: tuple[MultiPoly, ...] = ()
    minus: tuple[MultiPoly, ...] = ()

    def __post_init__(self):
        for root in (*self.plus, *self.minus):
            if root.ring != self.ring:
                raise ValueError("root outside the ambient ring")
            if root and not root.is_pure_degree_one():
                raise ValueError(f"root {root} is not of pure degree 1")

    @property
    def rank(self) -> int:
        return len(self.plus) - len(self.minus)

    def negated(self) -> "BundleRoots":
        """Roots of the dual bundle."""
        return BundleRoots(
            self.ring,
            tuple(-r for r in self.plus),
            tuple(-r for r in self.minus),
        )

    def disjoint_union(self, other: "BundleRoots") -> "BundleRoots":
        if self.ring != other.ring:
            raise ValueError("roots live in different rings")
        return BundleRoots(self.ring, self.plus + other.plus, self.minus + other.minus)


def _series_order(ring: PolyRing, order: int | None) -> int:
    if order is not None:
        return order
    bound = ring.effective_degree_bound()
    if bound is None:
        raise ValueError("an explicit order is required in an unbounded ring")
    return bound


def class_of_roots(
    roots: BundleRoots,
    genus: GenusSpec,
    order: int | None = None,
    reduce: Callable[[MultiPoly], MultiPoly] | None = None,
) -> MultiPoly:
    """Multiplicative genus class: prod of the genus series over the roots.

    Minus-roots contribute by exact division, which always succeeds because
    every genus series has constant term 1.
    """
    n = _series_order(roots.ring, order)
    s = genus.series(n)
    num = roots.ring.one()
    for root in roots.plus:
        num = num * series_at(s, root)
    den = roots.ring.one()
    for root in roots.minus:
        den = den * series_at(s, root)
    if den == roots.ring.one():
        return num
    return num.exact_div(den, reduce=reduce)


def ch_twisted(roots: BundleRoots, order: int | None = None) -> MultiPoly:
    """Chern character with roots scaled by (1+y): sum of exp((1+y)*root)."""
    n = _series_order(roots.ring, order)
    exp_s = TruncSeries.identity(n).exp()
    out = roots.ring.zero()
    for root in roots.plus:
        out = out + series_at(exp_s, root.scale(ONE_PLUS_Y))
    for root in roots.minus:
        out = out - series_at(exp_s, root.scale(ONE_PLUS_Y))
    return out


def _exp_images(root_list: Sequence[MultiPoly], ring: PolyRing, order: int) -> list[MultiPoly]:
    exp_s = TruncSeries.identity(order).exp()
    return [series_at(exp_s, r) for r in root_list]


def lambda_powers(
    roots: Sequence[MultiPoly], ring: PolyRing, order: int | None = None
) -> list[MultiPoly]:
    """Character images of the exterior powers of a split bundle.

    Entry i is e_i(exp(x_1), ..., exp(x_r)), the image of the i-th exterior
    power of the bundle with the given roots.
    """
    n = _series_order(ring, order)
    return elementary_symmetric(_exp_images(roots, ring, n), ring)


def gamma_powers(
    roots: Sequence[MultiPoly], ring: PolyRing, order: int | None = None
) -> list[MultiPoly]:
    """Character images of the gamma operations of E - rk(E).

    Entry i is e_i(exp(x_1) - 1, ..., exp(x_r) - 1); the expansion is finite
    because the rank-0 normalization turns the gamma series into a degree-r
    polynomial.
    """
    n = _series_order(ring, order)
    shifted = [img - ring.one() for img in _exp_images(roots, ring, n)]
    return elementary_symmetric(shifted, ring)


def lambda_gamma(
    roots: BundleRoots,
    which: str,
    order: int | None = None,
    reduce: Callable[[MultiPoly], MultiPoly] | None = None,
) -> MultiPoly:
    """Total lambda or gamma class, as a polynomial in y over the ring.

    For ``lambda`` the image is prod(1 + y*exp(x_j)) over plus-roots divided
    by the same product over minus-roots.  For ``gamma`` the argument must be
    rank-normalized: rank 0 with trivial minus-roots, i.e. of the shape
    E - rk(E); the caller passes e.g. the roots of E* against zero roots.
    """
    n = _series_order(roots.ring, order)
    if which == "lambda":
        num = roots.ring.one()
        for img in _exp_images(roots.plus, roots.ring, n):
            num = num * (roots.ring.one() + img.scale(Y))
        den = roots.ring.one()
        for img in _exp_images(roots.minus, roots.ring, n):
            den = den * (roots.ring.one() + img.scale(Y))
        if den == roots.ring.one():
            return num
        return num.exact_div(den, reduce=reduce)
    if which == "gamma":
        if roots.rank != 0 or any(r for r in roots.minus):
            raise ValueError(
                "gamma needs a rank-normalized argument: pass E* - rk E "
                "(zero minus-roots, rank 0)"
            )
        out = roots.ring.one()
        for img in _exp_images(roots.plus, roots.ring, n):
            out = out * (roots.ring.one() + (img - roots.ring.one()).scale(Y))
        return out
    raise ValueError(f"unknown operation {which!r}; expected 'lambda' or 'gamma'")


def tilde_lambda_coeffs(d: int) -> list[LaurentScalar]:
    """Weights w_0..w_d attached to the operator Chern classes in rank d.

    w_j = sum_{i=j}^{d} (-1)^j * C(d-j, d-i) * y^(i+j-d).
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    out = []
    for j in range(d + 1):
        acc = ZERO
        for i in range(j, d + 1):
            acc = acc + LaurentScalar.y_power(i + j - d, (-1) ** j * comb(d - j, d - i))
        out.append(acc)
    return out


def operator_chern_images(
    roots: Sequence[MultiPoly], ring: PolyRing, order: int | None = None
) -> list[MultiPoly]:
    """Images of the first-Chern-class-operator powers c~_i of a split bundle.

    In the K-theoretic homology model c~_i(E) acts as multiplication by
    (-1)^i * gamma^i(E* - rk E) * y^(-i).
    """
    duals = [-r for r in roots]
    gammas = gamma_powers(duals, ring, order)
    return [
        g.scale(LaurentScalar.y_power(-i, (-1) ** i)) for i, g in enumerate(gammas)
    ]


def tilde_lambda_class(
    roots: Sequence[MultiPoly], ring: PolyRing, order: int | None = None
) -> MultiPoly:
    """The weighted total class sum_j w_j * c~_j for a split bundle.

    Multiplying it by y^rank reproduces the total lambda class of the dual
    bundle, which is the normalization this class exists to encode.
    """
    weights = tilde_lambda_coeffs(len(roots))
    cherns = operator_chern_images(roots, ring, order)
    out = ring.zero()
    for w, c in zip(weights, cherns):
        out = out + c.scale(w)
    return out
