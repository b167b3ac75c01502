"""Truncated power series over the rationals, with exact arithmetic.

A ``TruncatedSeries`` stores coefficients c_0..c_order as Fractions.
Binary operations truncate to the smaller order of the two operands.
Everything here is exact; floats never appear.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

DEFAULT_ORDER = 16

_Coeff = Union[int, Fraction]


class IntPolynomial:
    """A polynomial with integer coefficients, ascending by degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        vals = [int(c) for c in coeffs]
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        if not vals:
            vals = [0]
        self._coeffs = tuple(vals)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        if self._coeffs == (0,):
            return -1
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"


def _as_poly(p: "IntPolynomial | Sequence[int]") -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial(p)


class TruncatedSeries:
    """A power series known through x**order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[_Coeff], order: int | None = None):
        vals = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError(f"order must be nonnegative, got {order}")
            vals = vals[: order + 1]
            vals.extend([Fraction(0)] * (order + 1 - len(vals)))
        if not vals:
            raise ValueError("a series needs at least its constant term")
        self._coeffs = tuple(vals)

    @classmethod
    def from_polynomial(
        cls, poly: "IntPolynomial | Sequence[int]", order: int = DEFAULT_ORDER
    ) -> "TruncatedSeries":
        return cls(_as_poly(poly).coeffs, order)

    @classmethod
    def constant(cls, value: _Coeff, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([value], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self._coeffs[n]

    def integer_coefficients(self) -> list[int]:
        """The coefficients as ints; raises if any is not an integer."""
        out = []
        for i, c in enumerate(self._coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of x^{i} is not an integer: {c}")
            out.append(c.numerator)
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    # ------------------------------------------------------------------
    # Arithmetic; binary operations return the smaller order.

    def _coerce(self, other: "TruncatedSeries | _Coeff") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other: "TruncatedSeries | _Coeff") -> "TruncatedSeries":
        o = self._coerce(other)
        order = min(self.order, o.order)
        return TruncatedSeries(
            [self._coeffs[i] + o._coeffs[i] for i in range(order + 1)]
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs])

    def __sub__(self, other: "TruncatedSeries | _Coeff") -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: _Coeff) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other: "TruncatedSeries | _Coeff") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            f = Fraction(other)
            return TruncatedSeries([c * f for c in self._coeffs])
        order = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries | _Coeff") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            f = Fraction(other)
            if f == 0:
                raise ZeroDivisionError("division of a series by zero")
            return TruncatedSeries([c / f for c in self._coeffs])
        if other._coeffs[0] == 0:
            raise ZeroDivisionError("division by a series with zero constant term")
        order = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out: list[Fraction] = []
        for n in range(order + 1):
            acc = a[n]
            for i in range(1, n + 1):
                acc -= b[i] * out[n - i]
            out.append(acc / b[0])
        return TruncatedSeries(out)

    def __rtruediv__(self, other: _Coeff) -> "TruncatedSeries":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError(f"negative power {exponent}; divide instead")
        result = TruncatedSeries([1], self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def sqrt(self) -> "TruncatedSeries":
        """Principal square root; the constant term must be the square
        of a rational."""
        c0 = self._coeffs[0]
        root0 = _rational_sqrt(c0)
        if root0 is None:
            raise ValueError(f"constant term {c0} is not the square of a rational")
        out = [root0]
        for n in range(1, self.order + 1):
            acc = self._coeffs[n]
            for i in range(1, n):
                acc -= out[i] * out[n - i]
            out.append(acc / (2 * root0))
        return TruncatedSeries(out)

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series is unknown")
        return TruncatedSeries(
            [(n + 1) * self._coeffs[n + 1] for n in range(self.order)]
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(x^{self.order + 1})"


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def from_rational(
    num: "IntPolynomial | Sequence[int]",
    den: "IntPolynomial | Sequence[int]",
    order: int = DEFAULT_ORDER,
) -> TruncatedSeries:
    """Expand num(x)/den(x); den must have a nonzero constant term."""
    n = TruncatedSeries.from_polynomial(num, order)
    d = TruncatedSeries.from_polynomial(den, order)
    return n / d


def monomial(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The series x."""
    return TruncatedSeries.from_polynomial([0, 1], order)


def residual_thm314(series: TruncatedSeries) -> TruncatedSeries:
    """Residual of the functional equation A = 1 + x*A/(1 - x*A^2).

    Feeding in a truncation of the catalogue entry thm-3.14's
    generating function must give the zero series.
    """
    x = monomial(series.order)
    return series - 1 - (x * series) / (1 - x * series * series)


_THM316_POLYS = (
    (4, IntPolynomial([-1, 8, 2])),
    (3, IntPolynomial([5, -46, 4, 1])),
    (2, IntPolynomial([-9, 94, -21, 3])),
    (1, IntPolynomial([7, -82, 12, 1])),
    (0, IntPolynomial([-2, 26, 3])),
)


def residual_thm316(series: TruncatedSeries) -> TruncatedSeries:
    """Residual of the quartic polynomial identity satisfied by the
    catalogue entry thm-3.16's generating function.

    The identity has the form sum_d p_d(x) * A(x)**d = 0 with the five
    integer polynomials p_4..p_0 fixed; the result is the left side,
    which must vanish when A truncates the true generating function.
    """
    order = series.order
    total = TruncatedSeries.constant(0, order)
    for power, poly in _THM316_POLYS:
        total = total + TruncatedSeries.from_polynomial(poly, order) * series**power
    return total
