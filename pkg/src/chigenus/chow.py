"""Finite models of Chow rings for projective-space towers.

A presentation describes a product of projective spaces P^{n_1} x ... x
P^{n_s} optionally extended by split projective-bundle stages.  The ring is

    Q[y,y^-1][h_1, ..., h_s, xi_1, ..., xi_t]

with h_i^{n_i + 1} = 0 and, for each bundle stage over declared split root
classes x_1..x_r, the quotient relation

    prod_j (xi - x_j) = 0,

i.e. sum_i (-1)^i c_i(E) xi^{r-i} = 0 where xi is the first Chern class of
the canonical quotient line bundle O(1).  All monomials of total degree
above the dimension vanish.  Elements are kept in the reduced normal form
with xi-exponents below the bundle rank, so integration reads off the
coefficient of the unique top monomial.

Smooth models identify homology with the ring itself (the fundamental class
is 1, Poincare-dually), and cap products become ring products.  K-theory
and G-theory classes are carried through their Chern-character images: a
line bundle with first Chern root x is recorded as exp(x), its dual as
exp(-x), and the fundamental G-class of a d-fold is y^d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .genus import BundleRoots, GenusSpec, class_of_roots, lambda_gamma
from .polynomials import MultiPoly, Monomial, PolyRing, elementary_symmetric, series_at
from .scalars import LaurentScalar, ONE, ONE_PLUS_Y, ZERO
from .series import TruncSeries


@dataclass(frozen=True)
class BundleStage:
    """A split projective bundle P(E): generator name and root polynomials."""

    name: str
    roots: tuple[MultiPoly, ...]

    @property
    def rank(self) -> int:
        return len(self.roots)


class ChowPresentation:
    """An explicit tower: projective-space factors plus split bundle stages."""

    def __init__(
        self,
        factors: Sequence[int],
        factor_names: Sequence[str] | None = None,
        stages: Sequence[tuple[str, Sequence[dict]]] = (),
        _base: "ChowPresentation | None" = None,
    ):
        if factor_names is None:
            factor_names = (
                ["h"] if len(factors) == 1 else [f"h{i+1}" for i in range(len(factors))]
            )
        if any(n < 0 for n in factors):
            raise ValueError("projective factors need non-negative dimension")
        self.factors = tuple(int(n) for n in factors)
        self.factor_names = tuple(factor_names)
        self._base = _base

        stage_names = [name for name, _ in stages]
        dim = sum(self.factors) + sum(
            len(roots) - 1 for _, roots in stages
        )
        self.dim = dim
        variables = list(self.factor_names) + stage_names
        caps: list[int | None] = [n + 1 for n in self.factors] + [None] * len(stages)
        self.ring = PolyRing(variables, caps=caps, degree_cap=dim)

        built: list[BundleStage] = []
        rules: dict[int, tuple[int, MultiPoly]] = {}
        arity = len(variables)
        for name, raw_roots in stages:
            # Root data may come from a smaller base ring whose variables are
            # a prefix of this ring's; pad monomials with zero exponents.
            roots = tuple(
                MultiPoly(
                    self.ring,
                    {m + (0,) * (arity - len(m)): c for m, c in terms.items()},
                )
                for terms in raw_roots
            )
            if any(r and not r.is_pure_degree_one() for r in roots):
                raise ValueError("bundle roots must have pure degree 1")
            if not roots:
                raise ValueError("a bundle stage needs at least one root (rank >= 1)")
            stage = BundleStage(name, roots)
            built.append(stage)
            # xi^r rewrites to sum_{i>=1} (-1)^(i+1) e_i(roots) xi^(r-i).
            es = elementary_symmetric(list(roots), self.ring)
            xi = self.ring.var(name)
            rhs = self.ring.zero()
            for i in range(1, stage.rank + 1):
                rhs = rhs + (es[i] * xi ** (stage.rank - i)).scale(
                    LaurentScalar.constant((-1) ** (i + 1))
                )
            rules[self.ring.index(name)] = (stage.rank, rhs)
        self.stages = tuple(built)
        self._rules = rules

    # -- construction ---------------------------------------------------------

    @classmethod
    def point(cls) -> "ChowPresentation":
        return cls([], [])

    @classmethod
    def projective_space(cls, n: int, name: str = "h") -> "ChowPresentation":
        return cls([n], [name])

    @classmethod
    def product(
        cls, dims: Sequence[int], names: Sequence[str] | None = None
    ) -> "ChowPresentation":
        return cls(dims, names)

    def projective_bundle(
        self, roots: Sequence["ChowElement | MultiPoly"], name: str | None = None
    ) -> "ChowPresentation":
        """Extend the tower by P(E) for the split bundle with these roots."""
        if name is None:
            name = "xi" if not self.stages else f"xi{len(self.stages) + 1}"
        raw = []
        for root in roots:
            poly = root.poly if isinstance(root, ChowElement) else root
            if poly.ring != self.ring:
                raise ValueError("bundle roots must live on the base presentation")
            raw.append(poly.terms)
        stage_data = [
            (s.name, [r.terms for r in s.roots]) for s in self.stages
        ] + [(name, raw)]
        return ChowPresentation(
            self.factors, self.factor_names, stage_data, _base=self
        )

    @property
    def base(self) -> "ChowPresentation":
        if self._base is None:
            raise ValueError("presentation has no bundle stage to push down from")
        return self._base

    def __repr__(self) -> str:
        parts = [f"P^{n}" for n in self.factors] or ["pt"]
        desc = " x ".join(parts)
        for s in self.stages:
            desc = f"P(rank-{s.rank} bundle over {desc})"
        return f"ChowPresentation({desc})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChowPresentation):
            return NotImplemented
        return (
            self.factors == other.factors
            and self.factor_names == other.factor_names
            and [(s.name, s.roots) for s in self.stages]
            == [(s.name, s.roots) for s in other.stages]
        )

    __hash__ = None  # type: ignore[assignment]

    # -- normal form ------------------------------------------------------------

    def reduce(self, poly: MultiPoly) -> MultiPoly:
        """Rewrite until every stage generator has exponent below its rank."""
        if not self._rules:
            return poly
        terms = dict(poly.terms)
        while True:
            target = None
            for mono in terms:
                for idx in sorted(self._rules, reverse=True):
                    rank, _ = self._rules[idx]
                    if mono[idx] >= rank:
                        target = (mono, idx)
                        break
                if target:
                    break
            if target is None:
                return MultiPoly(self.ring, terms)
            mono, idx = target
            coeff = terms.pop(mono)
            rank, rhs = self._rules[idx]
            rest = list(mono)
            rest[idx] -= rank
            remainder = MultiPoly(self.ring, {tuple(rest): coeff})
            for m, c in (remainder * rhs).terms.items():
                cur = terms.get(m)
                total = c if cur is None else cur + c
                if total:
                    terms[m] = total
                elif m in terms:
                    del terms[m]

    # -- elements ----------------------------------------------------------------

    def element(self, value) -> "ChowElement":
        if isinstance(value, ChowElement):
            if value.pres is not self and value.pres != self:
                raise ValueError("element belongs to a different presentation")
            return value
        if isinstance(value, MultiPoly):
            return ChowElement(self, self.reduce(value))
        return ChowElement(self, self.ring.const(LaurentScalar.coerce(value)))

    def zero(self) -> "ChowElement":
        return self.element(self.ring.zero())

    def one(self) -> "ChowElement":
        return self.element(self.ring.one())

    def gen(self, name: str) -> "ChowElement":
        return self.element(self.ring.var(name))

    def gens(self) -> list["ChowElement"]:
        return [self.gen(name) for name in self.ring.vars]

    def top_monomial(self) -> Monomial:
        """The unique basis monomial of top degree."""
        mono = [0] * len(self.ring.vars)
        for i, n in enumerate(self.factors):
            mono[i] = n
        for k, stage in enumerate(self.stages):
            mono[len(self.factors) + k] = stage.rank - 1
        return tuple(mono)

    # -- operations ---------------------------------------------------------------

    def integrate(self, e: "ChowElement") -> LaurentScalar:
        """Degree against the fundamental class: top-monomial coefficient."""
        e = self.element(e)
        return LaurentScalar.coerce(e.poly.coefficient(self.top_monomial()))

    def pb_pushforward(self, e: "ChowElement") -> "ChowElement":
        """Push a class on the last bundle stage down to the base.

        In the reduced basis sum_{i<r} xi^i a_i the pushforward is a_{r-1}.
        """
        base = self.base
        stage = self.stages[-1]
        idx = self.ring.index(stage.name)
        e = self.element(e)
        out: dict[Monomial, object] = {}
        for mono, coeff in e.poly.terms.items():
            if mono[idx] != stage.rank - 1:
                continue
            base_mono = tuple(v for i, v in enumerate(mono) if i != idx)
            out[base_mono] = coeff
        return base.element(MultiPoly(base.ring, out))

    def pullback_from_base(self, e: "ChowElement") -> "ChowElement":
        """Pull a base class up the last bundle stage (variable-preserving)."""
        base = self.base
        e = base.element(e)
        images = {name: self.ring.var(name) for name in base.ring.vars}
        return self.element(e.poly.substitute(images, self.ring))

    def pullback(self, e: "ChowElement", var_map: dict[str, str]) -> "ChowElement":
        """Pull back along a projection, renaming generators via var_map."""
        images = {src: self.ring.var(dst) for src, dst in var_map.items()}
        return self.element(e.poly.substitute(images, self.ring))

    def tangent_data(self) -> BundleRoots:
        """Virtual tangent roots of the tower.

        Each factor P^n contributes n+1 copies of its hyperplane class minus
        one trivial root (the Euler sequence).  Each split bundle stage P(E)
        contributes the relative tangent bundle, which in the quotient
        convention for O(1) used here (relation prod_j (xi - x_j) = 0) is
        O(1) (x) E^dual - O, i.e. roots xi - x_j minus one trivial root.
        This pairing is forced by chi_y multiplicativity in the fibration:
        the dual pairing {xi + x_j} belongs to the sub convention
        prod_j (xi + x_j) = 0 and fails it.
        """
        plus: list[MultiPoly] = []
        minus: list[MultiPoly] = []
        for i, n in enumerate(self.factors):
            h = self.ring.var(self.factor_names[i])
            plus.extend([h] * (n + 1))
            minus.append(self.ring.zero())
        for stage in self.stages:
            xi = self.ring.var(stage.name)
            for root in stage.roots:
                plus.append(xi - root)
            minus.append(self.ring.zero())
        return BundleRoots(self.ring, tuple(plus), tuple(minus))

    def hirzebruch_class(self, genus: GenusSpec | None = None) -> "ChowElement":
        """The genus class of the tangent bundle capped with [X]."""
        genus = genus or GenusSpec.hirzebruch()
        raw = class_of_roots(self.tangent_data(), genus, reduce=self.reduce)
        return self.element(raw)

    def chi_y(self, genus: GenusSpec | None = None) -> LaurentScalar:
        return self.integrate(self.hirzebruch_class(genus))

    # -- G-theory images --------------------------------------------------------

    def exp_class(self, x: "ChowElement | MultiPoly") -> "ChowElement":
        """Character image exp(x) of the line bundle with first Chern root x."""
        poly = x.poly if isinstance(x, ChowElement) else x
        if poly.constant_term():
            raise ValueError("a first Chern root has no constant part")
        exp_s = TruncSeries.identity(self.dim).exp()
        return self.element(series_at(exp_s, self.reduce(poly)))

    def fundamental_g_class(self) -> "ChowElement":
        """[O_X] * y^dim, the fundamental class in the graded G-theory model."""
        return self.element(LaurentScalar.y_power(self.dim))

    def cotangent_lambda_class(self) -> "ChowElement":
        """Character image of the total lambda class of the cotangent bundle.

        This is the normalized motivic class of the identity on a smooth
        model: sum_i [Lambda^i T*X] y^i read through the Chern character.
        """
        raw = lambda_gamma(
            self.tangent_data().negated(), "lambda", reduce=self.reduce
        )
        return self.element(raw)

    def c1_operator(self, x: "ChowElement | MultiPoly") -> "ChowElement":
        """First-Chern-class operator (1 - [L*]) y^-1 of a line bundle, as a
        multiplier in the character model."""
        dual = self.exp_class(-(x.poly if isinstance(x, ChowElement) else x))
        return (self.one() - dual) * LaurentScalar.y_power(-1)

    def todd_transform_twist(self, g: "ChowElement") -> "ChowElement":
        """Todd transformation with the degree-i homology part scaled by (1+y)^-i.

        Computes ch(g) * td(TX) cap [X], then divides the dimension-i
        component exactly by (1+y)^i.  The division is exact on every class
        in scope (images of lambda-class twists on smooth models); anything
        else raises ExactDivisionError.
        """
        g = self.element(g)
        td = self.hirzebruch_class(GenusSpec.todd())
        total = g * td
        out = self.zero()
        for codim in range(self.dim + 1):
            part = total.degree_part(codim)
            if not part:
                continue
            hom_degree = self.dim - codim
            out = out + part.scalar_div(ONE_PLUS_Y**hom_degree)
        return out


class ChowElement:
    """A ring element kept in reduced normal form."""

    __slots__ = ("pres", "poly")

    def __init__(self, pres: ChowPresentation, poly: MultiPoly):
        self.pres = pres
        self.poly = poly

    def _coerce(self, other) -> "ChowElement":
        if isinstance(other, ChowElement):
            if other.pres is not self.pres and other.pres != self.pres:
                raise ValueError("elements belong to different presentations")
            return other
        return self.pres.element(other)

    def __add__(self, other) -> "ChowElement":
        other = self._coerce(other)
        return ChowElement(self.pres, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self) -> "ChowElement":
        return ChowElement(self.pres, -self.poly)

    def __sub__(self, other) -> "ChowElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ChowElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "ChowElement":
        if isinstance(other, (ChowElement, MultiPoly)):
            other = self._coerce(other)
            return ChowElement(self.pres, self.pres.reduce(self.poly * other.poly))
        scalar = LaurentScalar.coerce(other)
        return ChowElement(self.pres, self.poly.scale(scalar))

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "ChowElement":
        result = self.pres.one()
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, (ChowElement, MultiPoly, LaurentScalar, int)):
            return NotImplemented
        return self.poly == self._coerce(other).poly

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.poly)

    def degree_part(self, k: int) -> "ChowElement":
        return ChowElement(self.pres, self.poly.degree_part(k))

    def scalar_div(self, scalar: LaurentScalar) -> "ChowElement":
        return ChowElement(self.pres, self.poly.scalar_div(scalar))

    def exact_div(self, other: "ChowElement") -> "ChowElement":
        other = self._coerce(other)
        return ChowElement(
            self.pres, self.poly.exact_div(other.poly, reduce=self.pres.reduce)
        )

    def integrate(self) -> LaurentScalar:
        return self.pres.integrate(self)

    def render(self) -> str:
        return self.poly.render()

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ChowElement({self.render()!r})"


def hypersurface_chi(n: int, d: int) -> LaurentScalar:
    """chi_y of a smooth degree-d hypersurface in P^n.

    By adjunction and the projection formula the genus integrates over the
    ambient space:  integral over P^n of d*h * Q_y(h)^(n+1) / Q_y(d*h).
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    pres = ChowPresentation.projective_space(n)
    h = pres.gen("h")
    q = GenusSpec.hirzebruch().series(pres.dim)
    ambient = pres.one()
    for _ in range(n + 1):
        ambient = ambient * pres.element(series_at(q, h.poly))
    normal = pres.element(series_at(q, h.poly.scale(LaurentScalar.constant(d))))
    cls = (ambient * h * d).exact_div(normal)
    return pres.integrate(cls)
