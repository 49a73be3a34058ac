"""Coefficient rings a truncated series can be taken over.

A ring object supplies identity elements, zero-tests and inversion for its
coefficient type; series arithmetic refuses to mix distinct rings.
"""

from __future__ import annotations

from .errors import NotInvertibleError
from .gaussian import GaussianRational, ONE, ZERO
from .laurent import LaurentPolynomial
from .ratfunc import RationalFunction


class CoefficientRing:
    name: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def is_zero(self, c) -> bool:
        raise NotImplementedError

    def invert(self, c):
        raise NotImplementedError

    def coerce_scalar(self, x):
        """Lift an exact scalar (int / GaussianRational) into this ring."""
        raise NotImplementedError

    def contains(self, c) -> bool:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<ring {self.name}>"


class GaussianRationalRing(CoefficientRing):
    name = "Q(i)"

    def zero(self):
        return ZERO

    def one(self):
        return ONE

    def is_zero(self, c):
        return c.is_zero()

    def invert(self, c):
        if c.is_zero():
            raise NotInvertibleError("zero scalar")
        return ONE / c

    def coerce_scalar(self, x):
        return x if isinstance(x, GaussianRational) else GaussianRational(x)

    def contains(self, c):
        return isinstance(c, GaussianRational)


class LaurentRing(CoefficientRing):
    def __init__(self, var: str):
        self.var = var
        self.name = f"Q(i)[{var},{var}^-1]"

    def zero(self):
        return LaurentPolynomial.zero(self.var)

    def one(self):
        return LaurentPolynomial.one(self.var)

    def is_zero(self, c):
        return c.is_zero()

    def invert(self, c):
        return c.invert()

    def coerce_scalar(self, x):
        return LaurentPolynomial.constant(self.var, x)

    def contains(self, c):
        return isinstance(c, LaurentPolynomial) and c.var == self.var


class RationalFunctionRing(CoefficientRing):
    def __init__(self, var: str):
        self.var = var
        self.name = f"Q(i)({var})"

    def zero(self):
        return RationalFunction.zero(self.var)

    def one(self):
        return RationalFunction.one(self.var)

    def is_zero(self, c):
        return c.is_zero()

    def invert(self, c):
        return c.invert()

    def coerce_scalar(self, x):
        return RationalFunction.constant(self.var, x)

    def contains(self, c):
        return isinstance(c, RationalFunction) and c.var == self.var


class ComplexRing(CoefficientRing):
    """Floating-point coefficients, for final numeric evaluation only."""

    name = "C(float)"

    def zero(self):
        return 0j

    def one(self):
        return 1 + 0j

    def is_zero(self, c):
        return c == 0

    def invert(self, c):
        if c == 0:
            raise NotInvertibleError("zero complex coefficient")
        return 1 / c

    def coerce_scalar(self, x):
        return complex(x)

    def contains(self, c):
        return isinstance(c, complex)


QI = GaussianRationalRing()
LAURENT_W = LaurentRing("w")
RATFUNC_W = RationalFunctionRing("w")
COMPLEX = ComplexRing()
