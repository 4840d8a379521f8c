"""Dense univariate polynomials with exact rational coefficients.

A polynomial is a tuple of ``Fraction`` coefficients in ascending degree
order, so ``coeffs[i]`` multiplies ``X**i``.  The zero polynomial is the
empty tuple; its degree is ``None`` rather than any integer, so it can
never be mistaken for a genuine degree.  No floating point is accepted
anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coefficients are not allowed; use Fraction or int")
    return Fraction(value)


class Poly:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def is_integral(self) -> bool:
        """True iff every coefficient has denominator 1."""
        return all(c.denominator == 1 for c in self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    # -- ring arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        n = max(len(self.coeffs), len(q.coeffs))
        return Poly(self.coefficient(i) + q.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero or q.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(q.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self.coeffs == q.coeffs

    # Scalar comparison above makes a content-based hash unsound; Poly values
    # are never used as dict keys, so drop hashing entirely.
    __hash__ = None  # type: ignore[assignment]

    # -- evaluation and substitution -----------------------------------------

    def __call__(self, x):
        """Evaluate at a rational point, or compose when ``x`` is a Poly.

        Horner's scheme works verbatim in both cases because Poly supports
        mixed arithmetic with scalars.
        """
        if isinstance(x, Poly):
            acc: Poly | Fraction = Poly()
        else:
            acc = Fraction(0)
            x = _as_fraction(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_arg(self, r: Scalar) -> "Poly":
        """Return p(rX): the coefficient of X^i is multiplied by r^i."""
        r = _as_fraction(r)
        if r == 0:
            raise ValueError("argument scaling by 0 is degenerate")
        return Poly(c * r**i for i, c in enumerate(self.coeffs))

    def denominator_lcm(self) -> int:
        """Least common multiple of the coefficient denominators.

        Substituting m*X for X with this m clears every denominator.  The
        constant term must already be an integer, since the substitution
        leaves it untouched.
        """
        if self.coeffs and self.coeffs[0].denominator != 1:
            raise ValueError(
                f"constant term {self.coeffs[0]} is not an integer; "
                "denominators cannot be cleared by argument scaling"
            )
        return math.lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        """JSON form ``{"coeffs": ["c0", ...]}`` with string-encoded rationals."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("polynomial JSON must be an object with a 'coeffs' list")
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list) or not all(isinstance(c, str) for c in coeffs):
            raise ValueError("polynomial coefficients must be a list of strings")
        try:
            return cls(Fraction(c) for c in coeffs)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad coefficient in polynomial JSON: {exc}") from exc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                term = str(mag)
            else:
                var = "X" if i == 1 else f"X^{i}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if sign == "+" else f"-{term}")
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly('{self}')"
