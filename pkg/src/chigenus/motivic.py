"""Scissor calculus on classes of varieties over a point.

Expressions denote classes in the Grothendieck group of varieties: they are
built from a point, affine spaces, projective spaces, the torus Gm, powers
of the Lefschetz class L = [A^1] (negative powers localize by L), declared
generators with user-supplied Hodge data, sums, differences, products,
projective bundles and blow-ups.  The evaluator computes the Hodge
characteristic

    Hc = sum (-1)^i (-1)^(p+q) dim gr_F^p gr_{p+q}^W H^i_c * u^p v^q,

a ring homomorphism to Z[u, v].  The sign factor (-1)^(p+q) is part of the
convention here; with it the Hodge characteristic of a smooth complete
variety has the Hodge numbers themselves as coefficients (an elliptic curve
gives (1+u)(1+v)).  Substituting (u, v) = (y, -1) yields chi_y, (w, w) the
weight characteristic, and (-1, -1) the Euler characteristic.

Expressions denote classes only: the evaluator implements the scissor and
blow-up relations and never checks that a declared center embeds anywhere.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .scalars import LaurentScalar, ZERO


class UnknownDeclarationError(KeyError):
    """A Declared(name) node has no entry in the registry."""


class DeclarationError(ValueError):
    """Declared Hodge data failed validation or parsing."""


# -- expression nodes -----------------------------------------------------------


class VarietyExpr:
    """Base class for expression-tree nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Pt(VarietyExpr):
    pass


@dataclass(frozen=True)
class Affine(VarietyExpr):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("affine space needs n >= 0")


@dataclass(frozen=True)
class Proj(VarietyExpr):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("projective space needs n >= 0")


@dataclass(frozen=True)
class Torus(VarietyExpr):
    pass


@dataclass(frozen=True)
class Lefschetz(VarietyExpr):
    k: int = 1


@dataclass(frozen=True)
class Declared(VarietyExpr):
    name: str


@dataclass(frozen=True)
class Sum(VarietyExpr):
    a: VarietyExpr
    b: VarietyExpr


@dataclass(frozen=True)
class Diff(VarietyExpr):
    a: VarietyExpr
    b: VarietyExpr


@dataclass(frozen=True)
class Prod(VarietyExpr):
    a: VarietyExpr
    b: VarietyExpr


@dataclass(frozen=True)
class ProjBundle(VarietyExpr):
    base: VarietyExpr
    fiber_dim: int

    def __post_init__(self):
        if self.fiber_dim < 0:
            raise ValueError("fiber dimension must be >= 0")


@dataclass(frozen=True)
class BlowUp(VarietyExpr):
    base: VarietyExpr
    center: VarietyExpr
    codim: int

    def __post_init__(self):
        if self.codim < 1:
            raise ValueError("blow-up codimension must be >= 1")


# -- Hodge polynomials ----------------------------------------------------------


class HodgePolynomial:
    """Integer polynomial in u, v; Laurent in the product uv when localized."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        cleaned: dict[tuple[int, int], int] = {}
        if terms:
            for (p, q), c in terms.items():
                if c:
                    cleaned[(int(p), int(q))] = int(c)
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "HodgePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "HodgePolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def uv_power(cls, k: int, coeff: int = 1) -> "HodgePolynomial":
        return cls({(k, k): coeff})

    @classmethod
    def uv_geometric(cls, lo: int, hi: int) -> "HodgePolynomial":
        """(uv)^lo + ... + (uv)^hi (empty when hi < lo)."""
        return cls({(i, i): 1 for i in range(lo, hi + 1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return HodgePolynomial(out)

    def __neg__(self) -> "HodgePolynomial":
        return HodgePolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        return self + (-other)

    def __mul__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self.terms.items():
            for (p2, q2), c2 in other.terms.items():
                key = (p1 + p2, q1 + q2)
                out[key] = out.get(key, 0) + c1 * c2
        return HodgePolynomial(out)

    def coefficient(self, p: int, q: int) -> int:
        return self.terms.get((p, q), 0)

    def is_symmetric(self) -> bool:
        return all(
            c == self.terms.get((q, p), 0) for (p, q), c in self.terms.items()
        )

    def max_total_degree(self) -> int | None:
        """Largest p+q over stored monomials; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(p + q for p, q in self.terms)

    def max_u_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(p for p, _ in self.terms)

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for (p, q), c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0][1])):
            factors = []
            if p:
                factors.append("u" if p == 1 else f"u^{p}")
            if q:
                factors.append("v" if q == 1 else f"v^{q}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"HodgePolynomial({self.render()!r})"


def conventional_e_polynomial(h: HodgePolynomial) -> HodgePolynomial:
    """Strip the (-1)^(p+q) sign factor, giving the usual E-polynomial."""
    return HodgePolynomial(
        {(p, q): c * (-1 if (p + q) % 2 else 1) for (p, q), c in h.terms.items()}
    )


# -- registry of declared generators ---------------------------------------------


ELLIPTIC_CURVE_HC = HodgePolynomial({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})


class DeclRegistry:
    """Named generators with fixed dimension and Hodge characteristic."""

    def __init__(self):
        self._entries: dict[str, tuple[int, HodgePolynomial]] = {}

    @classmethod
    def with_builtins(cls) -> "DeclRegistry":
        """Registry preloaded with the built-in generators.

        ``elliptic`` is the class of an elliptic curve, the standard witness
        that the full Hodge characteristic is not multiplicative in finite
        coverings: Hc = (1+u)(1+v) but chi_y = 0.
        """
        reg = cls()
        reg.register("elliptic", 1, ELLIPTIC_CURVE_HC)
        return reg

    def register(
        self,
        name: str,
        dim: int,
        hc: HodgePolynomial,
        allow_invalid: bool = False,
    ) -> None:
        problems = []
        if not hc.is_symmetric():
            problems.append("Hodge data is not symmetric under u <-> v")
        top = hc.max_total_degree()
        if top is not None and top > 2 * dim:
            problems.append(f"degree {top} exceeds 2*dim = {2 * dim}")
        if problems:
            message = f"declaration {name!r}: " + "; ".join(problems)
            if not allow_invalid:
                raise DeclarationError(message)
            warnings.warn(message, stacklevel=2)
        self._entries[name] = (dim, hc)

    def lookup(self, name: str) -> tuple[int, HodgePolynomial]:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownDeclarationError(name) from None

    def names(self) -> list[str]:
        return sorted(self._entries)

    def load_json(self, path: str, allow_invalid: bool = False) -> None:
        """Load declarations from a JSON list of {name, dim, hc} objects.

        ``hc`` is a list of [p, q, coeff] integer triples; duplicate (p, q)
        pairs are an error.
        """
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise DeclarationError("declaration file must contain a JSON list")
        for entry in data:
            try:
                name = entry["name"]
                dim = int(entry["dim"])
                rows = entry["hc"]
            except (TypeError, KeyError) as exc:
                raise DeclarationError(f"malformed declaration entry: {entry!r}") from exc
            terms: dict[tuple[int, int], int] = {}
            for row in rows:
                if len(row) != 3:
                    raise DeclarationError(f"{name!r}: hc rows must be [p, q, coeff]")
                p, q, c = (int(x) for x in row)
                if (p, q) in terms:
                    raise DeclarationError(f"{name!r}: duplicate Hodge entry ({p}, {q})")
                terms[(p, q)] = c
            self.register(name, dim, HodgePolynomial(terms), allow_invalid=allow_invalid)


# -- evaluation -------------------------------------------------------------------


def dimension(e: VarietyExpr, reg: DeclRegistry | None = None) -> int:
    """Virtual dimension attached to an expression."""
    if isinstance(e, Pt):
        return 0
    if isinstance(e, Affine):
        return e.n
    if isinstance(e, Proj):
        return e.n
    if isinstance(e, Torus):
        return 1
    if isinstance(e, Lefschetz):
        return e.k
    if isinstance(e, Declared):
        if reg is None:
            raise UnknownDeclarationError(e.name)
        return reg.lookup(e.name)[0]
    if isinstance(e, (Sum, Diff)):
        return max(dimension(e.a, reg), dimension(e.b, reg))
    if isinstance(e, Prod):
        return dimension(e.a, reg) + dimension(e.b, reg)
    if isinstance(e, ProjBundle):
        return dimension(e.base, reg) + e.fiber_dim
    if isinstance(e, BlowUp):
        return dimension(e.base, reg)
    raise TypeError(f"not a variety expression: {e!r}")


def hodge_characteristic(
    e: VarietyExpr, reg: DeclRegistry | None = None
) -> HodgePolynomial:
    """Evaluate the Hodge characteristic of an expression."""
    if isinstance(e, Pt):
        return HodgePolynomial.one()
    if isinstance(e, Affine):
        return HodgePolynomial.uv_power(e.n)
    if isinstance(e, Proj):
        return HodgePolynomial.uv_geometric(0, e.n)
    if isinstance(e, Torus):
        return HodgePolynomial({(1, 1): 1, (0, 0): -1})
    if isinstance(e, Lefschetz):
        return HodgePolynomial.uv_power(e.k)
    if isinstance(e, Declared):
        if reg is None:
            raise UnknownDeclarationError(e.name)
        return reg.lookup(e.name)[1]
    if isinstance(e, Sum):
        return hodge_characteristic(e.a, reg) + hodge_characteristic(e.b, reg)
    if isinstance(e, Diff):
        return hodge_characteristic(e.a, reg) - hodge_characteristic(e.b, reg)
    if isinstance(e, Prod):
        return hodge_characteristic(e.a, reg) * hodge_characteristic(e.b, reg)
    if isinstance(e, ProjBundle):
        fiber = HodgePolynomial.uv_geometric(0, e.fiber_dim)
        return hodge_characteristic(e.base, reg) * fiber
    if isinstance(e, BlowUp):
        exceptional = HodgePolynomial.uv_geometric(1, e.codim - 1)
        return hodge_characteristic(e.base, reg) + (
            hodge_characteristic(e.center, reg) * exceptional
        )
    raise TypeError(f"not a variety expression: {e!r}")


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def specialize(h: HodgePolynomial, target: str):
    """Specialize Hodge data: chi_y at (y,-1), weight at (w,w), euler at (-1,-1)."""
    if target == "chi_y":
        out = ZERO
        for (p, q), c in h.terms.items():
            out = out + LaurentScalar.y_power(p, c * _sign(q))
        return out
    if target == "weight":
        out = ZERO
        for (p, q), c in h.terms.items():
            out = out + LaurentScalar.y_power(p + q, c)
        return out
    if target == "euler":
        return sum(c * _sign(p + q) for (p, q), c in h.terms.items())
    raise ValueError(f"unknown specialization {target!r}")


def chi_y(e: VarietyExpr, reg: DeclRegistry | None = None) -> LaurentScalar:
    """chi_y of an expression; Laurent in y once negative Lefschetz powers occur."""
    return specialize(hodge_characteristic(e, reg), "chi_y")


def check_blowup_relation(
    base: VarietyExpr, center: VarietyExpr, codim: int, reg: DeclRegistry | None = None
) -> bool:
    """Verify [Bl] - [exceptional bundle] == [base] - [center] on Hodge data."""
    left = hodge_characteristic(
        BlowUp(base, center, codim), reg
    ) - hodge_characteristic(ProjBundle(center, codim - 1), reg)
    right = hodge_characteristic(base, reg) - hodge_characteristic(center, reg)
    return left == right
