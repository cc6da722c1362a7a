"""Exact scalar arithmetic: rationals and Laurent polynomials in y.

The coefficient ring of everything in this package is Q[y, y^-1], the ring
of Laurent polynomials in a single parameter y with rational coefficients.
A scalar is stored sparsely as a map from integer exponents of y to nonzero
``fractions.Fraction`` values, so structural equality coincides with
mathematical equality and no floating point ever appears.

Scalars are immutable; all operations return new values and are safe to
share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

#: Exact rational numbers.  ``fractions.Fraction`` already guarantees lowest
#: terms, a positive denominator and arbitrary precision, which is precisely
#: the contract needed here.
Rational = Fraction

RationalLike = Union[int, Fraction]


class DomainError(ArithmeticError):
    """Raised when an evaluation point lies outside a scalar's domain."""


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class LaurentScalar:
    """An element of Q[y, y^-1], stored as {exponent: nonzero Fraction}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | None = None):
        cleaned: dict[int, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                frac = _as_fraction(coeff)
                if frac:
                    cleaned[int(exp)] = frac
        self._terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: RationalLike) -> "LaurentScalar":
        return cls({0: value})

    @classmethod
    def y_power(cls, exp: int, coeff: RationalLike = 1) -> "LaurentScalar":
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, value: "LaurentScalar | RationalLike") -> "LaurentScalar":
        if isinstance(value, LaurentScalar):
            return value
        return cls.constant(value)

    # -- structure ---------------------------------------------------------

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        """Yield (exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero scalar has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero scalar has no exponents")
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentScalar.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentScalar | RationalLike") -> "LaurentScalar":
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.constant(other)
        elif not isinstance(other, LaurentScalar):
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            out[exp] = out.get(exp, Fraction(0)) + coeff
        return LaurentScalar(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentScalar | RationalLike") -> "LaurentScalar":
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.constant(other)
        elif not isinstance(other, LaurentScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> "LaurentScalar":
        return LaurentScalar.constant(other) - self

    def __mul__(self, other: "LaurentScalar | RationalLike") -> "LaurentScalar":
        if isinstance(other, (int, Fraction)):
            frac = _as_fraction(other)
            return LaurentScalar({e: c * frac for e, c in self._terms.items()})
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return LaurentScalar(out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentScalar":
        if power < 0:
            if not self.is_monomial():
                raise ExactDivisionError(
                    "negative powers exist only for monomials c*y^k"
                )
            exp, coeff = next(iter(self._terms.items()))
            return LaurentScalar({exp * power: coeff**power})
        result = LaurentScalar.constant(1)
        base = self
        n = power
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- division and evaluation --------------------------------------------

    def exact_div(self, other: "LaurentScalar | RationalLike") -> "LaurentScalar":
        """Divide exactly in Q[y, y^-1]; raise ExactDivisionError otherwise.

        Both operands are shifted by their minimal exponents, reduced to
        ordinary polynomial long division, and the remainder must vanish.
        """
        other = LaurentScalar.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero scalar")
        if not self:
            return LaurentScalar()
        shift = self.min_exp - other.min_exp
        num = _dense(self, self.min_exp, self.max_exp)
        den = _dense(other, other.min_exp, other.max_exp)
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        if len(num) < len(den):
            raise ExactDivisionError(f"({self}) is not divisible by ({other})")
        rem = list(num)
        lead = den[-1]
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + len(den) - 1] / lead
            quot[i] = q
            if q:
                for j, d in enumerate(den):
                    rem[i + j] -= q * d
        if any(rem):
            raise ExactDivisionError(f"({self}) is not divisible by ({other})")
        return LaurentScalar({shift + i: c for i, c in enumerate(quot)})

    def eval_at(self, value: RationalLike) -> Fraction:
        """Evaluate at a rational value of y."""
        point = _as_fraction(value)
        if point == 0 and self._terms and self.min_exp < 0:
            raise DomainError("cannot evaluate negative powers of y at y = 0")
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            total += coeff * point**exp
        return total

    # -- rendering -----------------------------------------------------------

    def render(self, var: str = "y") -> str:
        """Render with terms in ascending exponent order, e.g. ``1 - 1/2*y + y^2``."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exp, coeff in self.terms():
            body = _format_term(coeff, ((var, exp),))
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentScalar({self.render()!r})"


def _dense(s: LaurentScalar, lo: int, hi: int) -> list[Fraction]:
    return [s.coefficient(e) for e in range(lo, hi + 1)]


def _format_term(coeff: Fraction, powers: Iterable[tuple[str, int]]) -> str:
    """Format |coeff| * prod(var^exp), omitting unit factors."""
    factors = []
    for var, exp in powers:
        if exp == 0:
            continue
        factors.append(var if exp == 1 else f"{var}^{exp}")
    mag = abs(coeff)
    if not factors:
        return str(mag)
    if mag == 1:
        return "*".join(factors)
    return "*".join([str(mag)] + factors)


ZERO = LaurentScalar()
ONE = LaurentScalar.constant(1)
Y = LaurentScalar.y_power(1)
ONE_PLUS_Y = ONE + Y
