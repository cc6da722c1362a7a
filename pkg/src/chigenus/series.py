"""Truncated one-variable power series over the Laurent scalar ring.

A series carries its own truncation order N and stores the coefficients
c_0..c_N exactly.  Arithmetic propagates the minimum order of the operands,
so "valid up to order N" is machine-checkable.  Division cancels a common
valuation in the series variable first (the quotient t/(1 - e^-t) needs
this), then solves coefficientwise; each solve step divides scalars exactly
and fails loudly if the quotient does not exist in Q[y, y^-1].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import LaurentScalar, RationalLike, ZERO, ONE


class TruncSeries:
    """A polynomial-with-remainder-dropped: sum of c_k * var^k for k <= order."""

    __slots__ = ("var", "order", "coeffs")

    def __init__(
        self,
        coeffs: Sequence[LaurentScalar | RationalLike],
        order: int | None = None,
        var: str = "a",
    ):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        # Coefficients are Laurent scalars in ordinary use; other exact
        # coefficient rings (symbolic formal-group coefficients) pass through.
        padded = [
            LaurentScalar.coerce(c) if isinstance(c, (int, Fraction)) else c
            for c in coeffs[: order + 1]
        ]
        zero = padded[0] * 0 if padded else ZERO
        padded.extend([zero] * (order + 1 - len(padded)))
        self.coeffs: tuple[LaurentScalar, ...] = tuple(padded)
        self.order = order
        self.var = var

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, order: int, var: str = "a") -> "TruncSeries":
        return cls([], order=order, var=var)

    @classmethod
    def one(cls, order: int, var: str = "a") -> "TruncSeries":
        return cls([ONE], order=order, var=var)

    @classmethod
    def identity(cls, order: int, var: str = "a") -> "TruncSeries":
        """The series var itself."""
        return cls([ZERO, ONE], order=order, var=var)

    # -- structure -----------------------------------------------------------

    def coefficient(self, k: int) -> LaurentScalar:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def constant_term(self) -> LaurentScalar:
        return self.coeffs[0]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1], order=order, var=self.var)

    def __eq__(self, other: object) -> bool:
        """Equality up to the shared truncation order."""
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic ------------------------------------------------------------

    def _binary(self, other: "TruncSeries") -> int:
        if self.var != other.var:
            raise ValueError(f"series variables differ: {self.var} vs {other.var}")
        return min(self.order, other.order)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._binary(other)
        return TruncSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n, self.var
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._binary(other)
        return TruncSeries(
            [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)], n, self.var
        )

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs], self.order, self.var)

    def __mul__(self, other: "TruncSeries | LaurentScalar | RationalLike") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            s = LaurentScalar.coerce(other)
            return TruncSeries([c * s for c in self.coeffs], self.order, self.var)
        n = self._binary(other)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            ci = self.coeffs[i]
            if not ci:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] = out[i + j] + ci * cj
        return TruncSeries(out, n, self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by var^k (k >= 0), keeping the truncation order."""
        if k < 0:
            raise ValueError("shift exponent must be non-negative")
        return TruncSeries([ZERO] * k + list(self.coeffs), self.order, self.var)

    def div(self, other: "TruncSeries") -> "TruncSeries":
        """Exact series division, cancelling a common valuation first.

        The result order is min(order) - valuation(divisor).  Every
        coefficient solve divides by the divisor's lowest coefficient via
        exact Laurent division, so quotients stay in Q[y, y^-1] or fail.
        """
        n = self._binary(other)
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by the zero series")
        if any(self.coeffs[k] for k in range(min(v, self.order + 1))):
            raise ValueError("dividend valuation is smaller than divisor valuation")
        num = self.coeffs[v : n + 1]
        den = other.coeffs[v : n + 1]
        m = n - v
        if m < 0:
            raise ValueError("truncation order too small for this division")
        lead = den[0]
        out: list[LaurentScalar] = []
        for k in range(m + 1):
            acc = num[k] if k < len(num) else ZERO
            for j in range(k):
                acc = acc - out[j] * den[k - j]
            out.append(acc.exact_div(lead))
        return TruncSeries(out, m, self.var)

    def __truediv__(self, other: "TruncSeries") -> "TruncSeries":
        return self.div(other)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """Substitute ``inner`` (zero constant term) for the variable."""
        if inner.constant_term():
            raise ValueError("compose requires an inner series without constant term")
        n = min(self.order, inner.order)
        result = TruncSeries.zero(n, inner.var)
        for k in range(min(self.order, n), -1, -1):
            result = result * inner.truncate(n) + TruncSeries(
                [self.coeffs[k]], order=n, var=inner.var
            )
        return result

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term."""
        if self.constant_term():
            raise ValueError("exp requires a zero constant term")
        n = self.order
        result = TruncSeries.one(n, self.var)
        power = TruncSeries.one(n, self.var)
        fact = 1
        for k in range(1, n + 1):
            power = power * self
            fact *= k
            result = result + power * Fraction(1, fact)
        return result

    # -- specialization and rendering ------------------------------------------

    def eval_y(self, value: RationalLike) -> "TruncSeries":
        """Substitute a rational value for y in every coefficient."""
        return TruncSeries(
            [LaurentScalar.constant(c.eval_at(value)) for c in self.coeffs],
            self.order,
            self.var,
        )

    def render(self) -> str:
        pieces: list[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            body = c.render()
            if k > 0:
                var = self.var if k == 1 else f"{self.var}^{k}"
                if body == "1":
                    body = var
                elif body == "-1":
                    body = f"-{var}"
                elif " " in body:
                    body = f"({body})*{var}"
                else:
                    body = f"{body}*{var}"
            if not pieces:
                pieces.append(body)
            elif body.startswith("-"):
                pieces.append("- " + body[1:])
            else:
                pieces.append("+ " + body)
        if not pieces:
            return "0"
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TruncSeries({self.render()!r}, order={self.order})"
