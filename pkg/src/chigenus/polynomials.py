"""Truncated multivariate polynomials with nilpotent degree-1 generators.

These model graded rings of the form R[x_1, ..., x_n] / (x_i^{c_i}, all
monomials of total degree > D), the finite stand-ins for cohomology rings
and multi-root series expansions.  Every generator has degree one.  A
monomial is an exponent tuple aligned with the ring's variable list, and a
polynomial maps monomials to nonzero coefficients.

Coefficients default to ``LaurentScalar`` but only ring operations
(+, -, *, ==, bool) are assumed, so the same kernel also runs over the
symbolic coefficient rings used for universal formal group laws.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .scalars import ExactDivisionError, LaurentScalar, ONE

Monomial = tuple[int, ...]


class PolyRing:
    """A fixed list of degree-1 variables with truncation data.

    ``caps[i]`` is the nilpotence exponent of variable i (x^cap == 0), or
    None for no per-variable bound.  ``degree_cap`` kills every monomial of
    total degree strictly greater than the cap; None disables it.  At least
    one bound must make high powers vanish before series are evaluated here.
    """

    __slots__ = ("vars", "caps", "degree_cap", "scalar_one")

    def __init__(
        self,
        variables: Sequence[str],
        caps: Sequence[int | None] | None = None,
        degree_cap: int | None = None,
        scalar_one=ONE,
    ):
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        if caps is None:
            caps = [None] * len(self.vars)
        if len(caps) != len(self.vars):
            raise ValueError("one nilpotence cap per variable required")
        self.caps = tuple(caps)
        self.degree_cap = degree_cap
        self.scalar_one = scalar_one

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyRing):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.caps == other.caps
            and self.degree_cap == other.degree_cap
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PolyRing(vars={self.vars}, caps={self.caps}, degree_cap={self.degree_cap})"

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(f"no variable named {name!r} in {self.vars}") from None

    def admits(self, mono: Monomial) -> bool:
        """True when the monomial survives both truncation rules."""
        if self.degree_cap is not None and sum(mono) > self.degree_cap:
            return False
        for e, cap in zip(mono, self.caps):
            if cap is not None and e >= cap:
                return False
        return True

    def effective_degree_bound(self) -> int | None:
        """Largest total degree any monomial of this ring can have, if finite."""
        if self.degree_cap is not None:
            return self.degree_cap
        if all(cap is not None for cap in self.caps):
            return sum(cap - 1 for cap in self.caps)
        return None

    # -- element constructors -------------------------------------------------

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(self.scalar_one)

    def const(self, scalar) -> "MultiPoly":
        return MultiPoly(self, {(0,) * len(self.vars): scalar})

    def var(self, name: str) -> "MultiPoly":
        mono = [0] * len(self.vars)
        mono[self.index(name)] = 1
        return MultiPoly(self, {tuple(mono): self.scalar_one})

    def monomial(self, exponents: Mapping[str, int], coeff=None) -> "MultiPoly":
        mono = [0] * len(self.vars)
        for name, e in exponents.items():
            mono[self.index(name)] = e
        return MultiPoly(self, {tuple(mono): coeff if coeff is not None else self.scalar_one})


class MultiPoly:
    """A truncated polynomial over its ring; the empty dict is zero."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object]):
        cleaned: dict[Monomial, object] = {}
        arity = len(ring.vars)
        for mono, coeff in terms.items():
            if len(mono) != arity:
                raise ValueError(
                    f"monomial {mono} has arity {len(mono)}, ring has {arity} variables"
                )
            if coeff and ring.admits(mono):
                cleaned[mono] = coeff
        self.ring = ring
        self.terms = cleaned

    # -- structure --------------------------------------------------------------

    def coefficient(self, mono: Monomial):
        zero = self.ring.scalar_one - self.ring.scalar_one
        return self.terms.get(tuple(mono), zero)

    def coefficient_of(self, exponents: Mapping[str, int]):
        mono = [0] * len(self.ring.vars)
        for name, e in exponents.items():
            mono[self.ring.index(name)] = e
        return self.coefficient(tuple(mono))

    def constant_term(self):
        return self.coefficient((0,) * len(self.ring.vars))

    def total_degree(self) -> int:
        """Maximal total degree of a stored monomial (zero polynomial: 0)."""
        return max((sum(m) for m in self.terms), default=0)

    def degree_part(self, k: int) -> "MultiPoly":
        return MultiPoly(
            self.ring, {m: c for m, c in self.terms.items() if sum(m) == k}
        )

    def is_pure_degree_one(self) -> bool:
        return all(sum(m) == 1 for m in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- ring operations -----------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            cur = out.get(mono)
            out[mono] = coeff if cur is None else cur + coeff
        return MultiPoly(self.ring, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            out: dict[Monomial, object] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = tuple(a + b for a, b in zip(m1, m2))
                    if not self.ring.admits(mono):
                        continue
                    prod = c1 * c2
                    cur = out.get(mono)
                    out[mono] = prod if cur is None else cur + prod
            return MultiPoly(self.ring, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, scalar) -> "MultiPoly":
        return MultiPoly(self.ring, {m: c * scalar for m, c in self.terms.items()})

    def __pow__(self, power: int) -> "MultiPoly":
        if power < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = self.ring.one()
        for _ in range(power):
            result = result * self
        return result

    # -- division ------------------------------------------------------------------

    def exact_div(
        self,
        divisor: "MultiPoly",
        reduce: Callable[["MultiPoly"], "MultiPoly"] | None = None,
    ) -> "MultiPoly":
        """Solve q * divisor == self degree by degree.

        The divisor needs a nonzero constant coefficient; each step divides a
        scalar exactly (LaurentScalar.exact_div), so the quotient exists iff
        it has Laurent coefficients.  ``reduce`` is applied after products so
        quotient rings (Chow presentations) can divide in normal form.
        """
        self._check(divisor)
        red = reduce if reduce is not None else (lambda p: p)
        lead = divisor.constant_term()
        if not lead:
            raise ExactDivisionError("divisor has no constant coefficient")
        cap = self.ring.effective_degree_bound()
        if cap is None:
            cap = max(self.total_degree(), divisor.total_degree())
        quotient = self.ring.zero()
        for k in range(cap + 1):
            residue = red(self - quotient * divisor).degree_part(k)
            if not residue:
                continue
            step = MultiPoly(
                self.ring,
                {m: _scalar_exact_div(c, lead) for m, c in residue.terms.items()},
            )
            quotient = quotient + step
        if red(quotient * divisor - self):
            raise ExactDivisionError("inexact polynomial division")
        return quotient

    def scalar_div(self, scalar) -> "MultiPoly":
        """Divide every coefficient exactly by a scalar."""
        return MultiPoly(
            self.ring, {m: _scalar_exact_div(c, scalar) for m, c in self.terms.items()}
        )

    # -- substitution -------------------------------------------------------------

    def substitute(
        self, images: Mapping[str, "MultiPoly"], ring: PolyRing | None = None
    ) -> "MultiPoly":
        """Apply the ring map sending each variable to its image.

        Unmapped variables must exist in the target ring under the same name.
        Coefficients are carried over unchanged.
        """
        if ring is None:
            rings = {id(img.ring): img.ring for img in images.values()}
            if len(rings) > 1:
                raise ValueError("images live in different rings")
            ring = next(iter(rings.values())) if rings else self.ring
        cache: dict[str, MultiPoly] = dict(images)
        out = ring.zero()
        for mono, coeff in self.terms.items():
            term = ring.const(coeff)
            for name, e in zip(self.ring.vars, mono):
                if e == 0:
                    continue
                img = cache.get(name)
                if img is None:
                    img = ring.var(name)
                    cache[name] = img
                term = term * img**e
            out = out + term
        return out

    # -- rendering ------------------------------------------------------------------

    def sorted_terms(self) -> Iterator[tuple[Monomial, object]]:
        return iter(sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])))

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.vars, mono):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            body = _coeff_prefix(coeff, "*".join(factors))
            if not pieces:
                pieces.append(body)
            elif body.startswith("-"):
                pieces.append("- " + body[1:])
            else:
                pieces.append("+ " + body)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r})"


def _scalar_exact_div(coeff, scalar):
    if hasattr(coeff, "exact_div"):
        return coeff.exact_div(scalar)
    raise ExactDivisionError("coefficient ring does not support exact division")


def _coeff_prefix(coeff, monomial_str: str) -> str:
    text = str(coeff)
    if not monomial_str:
        return text
    if text == "1":
        return monomial_str
    if text == "-1":
        return f"-{monomial_str}"
    if " " in text:
        return f"({text})*{monomial_str}"
    return f"{text}*{monomial_str}"


def series_at(series, element: MultiPoly) -> MultiPoly:
    """Evaluate a TruncSeries at a polynomial with zero constant term.

    The element must be nilpotent under the ring's truncation by the time the
    series order runs out; otherwise the evaluation would silently lose terms
    and a ValueError is raised instead.
    """
    if element.constant_term():
        raise ValueError("series evaluation needs a zero constant term")
    ring = element.ring
    result = ring.zero()
    power = ring.one()
    for k in range(series.order + 1):
        if k:
            power = power * element
            if not power:
                break
        result = result + power.scale(series.coefficient(k))
    else:
        if power * element:
            raise ValueError(
                f"series order {series.order} too small for this ring truncation"
            )
    return result


def elementary_symmetric(values: Sequence[MultiPoly], ring: PolyRing) -> list[MultiPoly]:
    """All elementary symmetric polynomials e_0..e_n of the given elements."""
    es = [ring.one()]
    for v in values:
        es.append(ring.zero())
        for i in range(len(es) - 1, 0, -1):
            es[i] = es[i] + es[i - 1] * v
    return es
