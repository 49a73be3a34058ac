"""Fraction field of the Laurent polynomial ring in the index variable.

Canonical form: the denominator is an ordinary polynomial with nonzero
constant term and leading coefficient 1 (monomial order: descending
exponent), and shares no factor with the polynomial part of the numerator.
Unit factors w^k are pushed into the numerator, so is_constant() detects a
genuine scalar and not merely a monomial quotient.
"""

from __future__ import annotations

from .errors import NotInvertibleError, RingMismatchError
from .gaussian import GaussianRational
from .laurent import LaurentPolynomial, laurent_exact_div, laurent_gcd


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial):
        if num.var != den.var:
            raise RingMismatchError(f"variable mismatch: {num.var!r} vs {den.var!r}")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        var = num.var
        if num.is_zero():
            self.num = LaurentPolynomial.zero(var)
            self.den = LaurentPolynomial.one(var)
            return
        # strip denominator units into the numerator
        vd = den.valuation()
        den = den.shift(-vd)
        num = num.shift(-vd)
        vn = num.valuation()
        p = num.shift(-vn)
        g = laurent_gcd(p, den)
        if not g.is_constant():  # monic, so a constant gcd is exactly 1
            p = laurent_exact_div(p, g)
            den = laurent_exact_div(den, g)
        lc = den.leading_coefficient()
        if not (lc.re == 1 and lc.im == 0):
            inv = GaussianRational(1) / lc
            den = den.scale(inv)
            p = p.scale(inv)
        self.num = p.shift(vn)
        self.den = den

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial) -> "RationalFunction":
        return cls(p, LaurentPolynomial.one(p.var))

    @classmethod
    def constant(cls, var: str, c) -> "RationalFunction":
        return cls.from_laurent(LaurentPolynomial.constant(var, c))

    @classmethod
    def zero(cls, var: str) -> "RationalFunction":
        return cls.from_laurent(LaurentPolynomial.zero(var))

    @classmethod
    def one(cls, var: str) -> "RationalFunction":
        return cls.from_laurent(LaurentPolynomial.one(var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        """True iff the reduced form is a scalar (exponent-0 numerator over 1)."""
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.num.constant_value()

    def _check(self, other: "RationalFunction"):
        if self.var != other.var:
            raise RingMismatchError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.from_laurent(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        self._check(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.from_laurent(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        r = RationalFunction.__new__(RationalFunction)
        r.num, r.den = -self.num, self.den
        return r

    def __mul__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.from_laurent(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        self._check(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.from_laurent(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self * other.invert()

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        result = RationalFunction.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert(self) -> "RationalFunction":
        if self.is_zero():
            raise NotInvertibleError("zero has no inverse")
        return RationalFunction(self.den, self.num)

    def scale(self, c) -> "RationalFunction":
        r = RationalFunction.__new__(RationalFunction)
        r.num, r.den = self.num.scale(c), self.den
        if r.num.is_zero():
            r.den = LaurentPolynomial.one(self.var)
        return r

    def substitute_inverse(self) -> "RationalFunction":
        """The image under variable -> 1/variable, re-canonicalized."""
        return RationalFunction(self.num.invert_variable(), self.den.invert_variable())

    def evaluate(self, value: complex) -> complex:
        return self.num.evaluate(value) / self.den.evaluate(value)

    def has_pole_at_one(self) -> bool:
        return self.den.sum_of_coefficients().is_zero()

    def value_at_one(self) -> GaussianRational:
        d = self.den.sum_of_coefficients()
        if d.is_zero():
            raise ZeroDivisionError("pole at 1")
        return self.num.sum_of_coefficients() / d

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.from_laurent(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"<RatFunc {self}>"
