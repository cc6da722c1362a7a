"""Formal group laws for oriented homology theories.

A law is a truncated bivariate polynomial F(u, v) with F(u, 0) = u,
F(0, v) = v and F symmetric; it records how the first Chern class of a
tensor product of line bundles is assembled from the factors.  The additive
law u + v belongs to ordinary (Chow) homology; the multiplicative periodic
law u + v - y*u*v belongs to the graded G-theory model, where the Chern
class operator of a line bundle L acts as (1 - [L*]) y^-1.  The cross-term
coefficient -y is forced by that operator: with u = (1-a)/y, v = (1-b)/y
one gets u + v - y*u*v = (1 - a*b)/y, and -y sits in degree 1 as the
grading of the coefficients a_{ij} (degree i+j-1) demands.

The universal law carries symbolic coefficients a_{ij} = a_{ji} of degree
i+j-1; expanding its associativity residual yields the relations every
concrete law must satisfy, which is the only piece of the universal
classification used here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .chow import ChowElement, ChowPresentation
from .polynomials import MultiPoly, PolyRing
from .scalars import LaurentScalar, ONE, Y, ZERO
from .series import TruncSeries
from .verify import VerifyReport, report_pair, report_pairs

Symbol = tuple[int, int]
SymMonomial = tuple[Symbol, ...]


class SymPoly:
    """A polynomial with rational coefficients in the symbols a_{ij}, i <= j.

    Monomials are sorted tuples of symbols (with repetition for powers).
    The grading puts a_{ij} in degree i + j - 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[SymMonomial, Fraction | int] | None = None):
        cleaned: dict[SymMonomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                frac = Fraction(coeff)
                if frac:
                    cleaned[tuple(sorted(mono))] = frac
        self.terms = cleaned

    @classmethod
    def constant(cls, value: Fraction | int) -> "SymPoly":
        return cls({(): value})

    @classmethod
    def generator(cls, i: int, j: int) -> "SymPoly":
        if i < 1 or j < 1:
            raise ValueError("generators a_ij need i, j >= 1")
        sym = (min(i, j), max(i, j))
        return cls({(sym,): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == SymPoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SymPoly | int | Fraction") -> "SymPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return SymPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "SymPoly":
        return SymPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SymPoly | int | Fraction") -> "SymPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SymPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "SymPoly | int | Fraction") -> "SymPoly":
        if isinstance(other, (int, Fraction)):
            return SymPoly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, SymPoly):
            return NotImplemented
        out: dict[SymMonomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return SymPoly(out)

    __rmul__ = __mul__

    @staticmethod
    def _coerce(value) -> "SymPoly":
        if isinstance(value, SymPoly):
            return value
        return SymPoly.constant(value)

    def grades(self) -> set[int]:
        """Degrees of the monomials under deg a_{ij} = i + j - 1."""
        return {sum(i + j - 1 for i, j in mono) for mono in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def substitute(self, images: Mapping[Symbol, LaurentScalar]) -> LaurentScalar:
        """Map each symbol to a scalar (unlisted symbols go to zero)."""
        total = ZERO
        for mono, coeff in self.terms.items():
            value = LaurentScalar.constant(coeff)
            for sym in mono:
                value = value * images.get(sym, ZERO)
            total = total + value
        return total

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in sorted(self.terms.items()):
            names = [f"a{i}{j}" for i, j in mono]
            body = "*".join(names) if names else ""
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not pieces:
                pieces.append(text if coeff > 0 else "-" + text)
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + text)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SymPoly({self.render()!r})"


class FGLaw:
    """A truncated formal group law with scalar or symbolic coefficients."""

    def __init__(self, kind: str, coeffs: Mapping[tuple[int, int], object], degree: int, scalar_one):
        self.kind = kind
        self.degree = degree
        self.scalar_one = scalar_one
        self.coeffs = {
            key: value for key, value in coeffs.items() if value
        }
        zero = scalar_one - scalar_one
        if self.coeffs.get((1, 0), zero) != scalar_one or self.coeffs.get((0, 1), zero) != scalar_one:
            raise ValueError("a law starts with u + v")
        for (i, j), c in self.coeffs.items():
            if (i == 0 and j != 1) or (j == 0 and i != 1):
                raise ValueError("F(u,0) = u and F(0,v) = v must hold")
            if self.coeffs.get((j, i), zero) != c:
                raise ValueError("a law is commutative: a_ij = a_ji")

    def apply(self, a, b):
        """Evaluate F on two elements of any common ring model.

        The elements must support +, *, integer powers and scalar
        multiplication by this law's coefficients.
        """
        total = None
        for (i, j), coeff in self.coeffs.items():
            term = (a**i) * (b**j) * coeff
            total = term if total is None else total + term
        return total

    def poly(self, ring: PolyRing, u_name: str = "u", v_name: str = "v") -> MultiPoly:
        return self.apply(ring.var(u_name), ring.var(v_name))

    def __repr__(self) -> str:
        return f"FGLaw({self.kind!r}, degree={self.degree})"


def fgl_make(kind: str, degree: int = 8) -> FGLaw:
    """Build the additive, multiplicative, or universal law to a degree.

    additive:        u + v
    multiplicative:  u + v - y*u*v   (periodic: y is invertible)
    universal:       u + v + sum over 2 <= i+j <= degree of a_ij u^i v^j
    """
    if kind == "additive":
        coeffs = {(1, 0): ONE, (0, 1): ONE}
        return FGLaw(kind, coeffs, degree, ONE)
    if kind == "multiplicative":
        coeffs = {(1, 0): ONE, (0, 1): ONE, (1, 1): -Y}
        return FGLaw(kind, coeffs, degree, ONE)
    if kind == "universal":
        if degree < 2:
            raise ValueError("universal law needs degree >= 2")
        one = SymPoly.constant(1)
        coeffs: dict[tuple[int, int], object] = {(1, 0): one, (0, 1): one}
        for i in range(1, degree):
            for j in range(1, degree - i + 1):
                coeffs[(i, j)] = SymPoly.generator(i, j)
        return FGLaw(kind, coeffs, degree, one)
    raise ValueError(f"unknown law kind {kind!r}")


def fgl_axioms(law: FGLaw, degree: int) -> VerifyReport:
    """Unit, commutativity and associativity residuals up to total degree."""
    if degree > law.degree:
        raise ValueError("law is not truncated finely enough for this check")
    tri = PolyRing(["u", "v", "w"], degree_cap=degree, scalar_one=law.scalar_one)
    u, v, w = tri.var("u"), tri.var("v"), tri.var("w")
    unit = law.apply(u, tri.zero()) - u
    commut = law.apply(u, v) - law.apply(v, u)
    assoc = law.apply(law.apply(u, v), w) - law.apply(u, law.apply(v, w))
    pairs = [(unit, tri.zero()), (commut, tri.zero()), (assoc, tri.zero())]
    return report_pairs("fgl-axioms", (law.kind, degree), pairs)


def fgl_inverse(law: FGLaw, degree: int) -> TruncSeries:
    """The formal inverse: the series i(u) with F(u, i(u)) = 0 mod degree+1.

    Computed by the standard contraction i <- i - F(u, i), which gains one
    order per step because dF/dv = 1 + higher terms.
    """
    ring = PolyRing(["u"], degree_cap=degree, scalar_one=law.scalar_one)
    u = ring.var("u")
    inv = -u
    for _ in range(degree):
        residual = law.apply(u, inv)
        if not residual:
            break
        inv = inv - residual
    if law.apply(u, inv):
        raise ArithmeticError("formal inverse iteration failed to converge")
    coeffs = [inv.coefficient((k,)) for k in range(degree + 1)]
    return TruncSeries(coeffs, order=degree, var="u")


def c1_tensor_check(
    root1: "ChowElement", root2: "ChowElement", pres: ChowPresentation
) -> VerifyReport:
    """Tensor-product compatibility of the Chern class operator.

    The operator (1 - [L*]) y^-1 of L1 (x) L2 must equal the multiplicative
    law evaluated on the operators of the factors, exactly in the model ring.
    """
    law = fgl_make("multiplicative", degree=max(pres.dim, 2))
    u1 = pres.c1_operator(root1)
    u2 = pres.c1_operator(root2)
    lhs = pres.c1_operator(root1 + root2)
    rhs = law.apply(u1, u2)
    return report_pair("c1-tensor", (str(root1), str(root2)), lhs, rhs)


def universal_relations(degree: int) -> list[SymPoly]:
    """Coefficients of the associativity residual of the universal law.

    Every concrete law satisfies these relations; the additive and
    multiplicative specializations are the sanity anchors.  Each relation is
    homogeneous for deg a_{ij} = i + j - 1.
    """
    law = fgl_make("universal", degree)
    tri = PolyRing(["u", "v", "w"], degree_cap=degree, scalar_one=law.scalar_one)
    u, v, w = tri.var("u"), tri.var("v"), tri.var("w")
    residual = law.apply(law.apply(u, v), w) - law.apply(u, law.apply(v, w))
    seen: dict = {}
    for mono, coeff in residual.sorted_terms():
        key = frozenset(coeff.terms.items())
        if key not in seen:
            seen[key] = coeff
    return list(seen.values())


#: Substitutions sending the universal coefficients to a concrete law.
ADDITIVE_SPECIALIZATION: dict[Symbol, LaurentScalar] = {}
MULTIPLICATIVE_SPECIALIZATION: dict[Symbol, LaurentScalar] = {(1, 1): -Y}
