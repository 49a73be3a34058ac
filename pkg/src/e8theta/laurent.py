"""Laurent polynomials in one variable over the Gaussian rationals.

The exponent map stores no zero coefficients, so equality is a structural
comparison.  The variable is a free-form tag; mixing tags raises.
"""

from __future__ import annotations

from .errors import NotInvertibleError, RingMismatchError
from .gaussian import ONE, ZERO, GaussianRational


class LaurentPolynomial:
    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: dict[int, GaussianRational] | None = None):
        self.var = var
        clean: dict[int, GaussianRational] = {}
        if coeffs:
            for e, c in coeffs.items():
                if not isinstance(c, GaussianRational):
                    c = GaussianRational(c)
                if not c.is_zero():
                    clean[int(e)] = c
        self.coeffs = clean

    # construction helpers

    @classmethod
    def zero(cls, var: str) -> "LaurentPolynomial":
        return cls(var)

    @classmethod
    def one(cls, var: str) -> "LaurentPolynomial":
        return cls(var, {0: ONE})

    @classmethod
    def constant(cls, var: str, c) -> "LaurentPolynomial":
        return cls(var, {0: c})

    @classmethod
    def monomial(cls, var: str, c, e: int) -> "LaurentPolynomial":
        return cls(var, {e: c})

    # structure

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return set(self.coeffs) <= {0}

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.coeffs.get(0, ZERO)

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self.coeffs)

    def span(self) -> int:
        """Laurent-degree span: degree minus valuation (0 for monomials)."""
        return self.degree() - self.valuation()

    def coefficient(self, e: int) -> GaussianRational:
        return self.coeffs.get(e, ZERO)

    def leading_coefficient(self) -> GaussianRational:
        return self.coeffs[self.degree()]

    def _check_var(self, other: "LaurentPolynomial"):
        if self.var != other.var:
            raise RingMismatchError(
                f"variable mismatch: {self.var!r} vs {other.var!r}"
            )

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_var(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, ZERO) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        r = LaurentPolynomial.__new__(LaurentPolynomial)
        r.var, r.coeffs = self.var, out
        return r

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        r = LaurentPolynomial.__new__(LaurentPolynomial)
        r.var = self.var
        r.coeffs = {e: -c for e, c in self.coeffs.items()}
        return r

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_var(other)
        out: dict[int, GaussianRational] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        r = LaurentPolynomial.__new__(LaurentPolynomial)
        r.var, r.coeffs = self.var, out
        return r

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers live in the fraction field")
        result = LaurentPolynomial.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "LaurentPolynomial":
        if not isinstance(c, GaussianRational):
            c = GaussianRational(c)
        if c.is_zero():
            return LaurentPolynomial.zero(self.var)
        r = LaurentPolynomial.__new__(LaurentPolynomial)
        r.var = self.var
        r.coeffs = {e: v * c for e, v in self.coeffs.items()}
        return r

    def invert(self) -> "LaurentPolynomial":
        """Invert a unit (a single monomial); anything else raises."""
        if len(self.coeffs) != 1:
            raise NotInvertibleError(
                "only monomials are invertible in the Laurent ring"
            )
        (e, c), = self.coeffs.items()
        return LaurentPolynomial.monomial(self.var, ONE / c, -e)

    # substitutions

    def substitute_power(self, m: int) -> "LaurentPolynomial":
        """Map the variable to its m-th power; m = 0 collapses to a constant."""
        out: dict[int, GaussianRational] = {}
        for e, c in self.coeffs.items():
            k = e * m
            s = out.get(k, ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        r = LaurentPolynomial.__new__(LaurentPolynomial)
        r.var, r.coeffs = self.var, out
        return r

    def invert_variable(self) -> "LaurentPolynomial":
        return self.substitute_power(-1)

    def shift(self, k: int) -> "LaurentPolynomial":
        r = LaurentPolynomial.__new__(LaurentPolynomial)
        r.var = self.var
        r.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return r

    # evaluation

    def evaluate(self, value: complex) -> complex:
        return sum((complex(c) * value**e for e, c in self.coeffs.items()), 0j)

    def sum_of_coefficients(self) -> GaussianRational:
        """Exact value at variable = 1."""
        total = ZERO
        for c in self.coeffs.values():
            total = total + c
        return total

    def exponent_weighted_sum(self) -> GaussianRational:
        """Exact value of (v d/dv) applied to self, at variable = 1."""
        total = ZERO
        for e, c in self.coeffs.items():
            total = total + c * e
        return total

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, tuple(sorted((e, c.re, c.im) for e, c in self.coeffs.items()))))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            cs = str(c)
            if e == 0:
                parts.append(cs)
            else:
                ve = self.var if e == 1 else f"{self.var}^{e}"
                if cs == "1":
                    parts.append(ve)
                elif cs == "-1":
                    parts.append(f"-{ve}")
                elif c.im != 0 and c.re != 0:
                    parts.append(f"({cs})*{ve}")
                else:
                    parts.append(f"{cs}*{ve}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<Laurent {self}>"


# dense polynomial helpers for gcd; the unit part w^valuation is stripped first


def _to_dense(p: LaurentPolynomial) -> list[GaussianRational]:
    v = p.valuation()
    d = p.degree()
    return [p.coefficient(e) for e in range(v, d + 1)]


def _dense_trim(a: list[GaussianRational]) -> list[GaussianRational]:
    while a and a[-1].is_zero():
        a.pop()
    return a


def _dense_mod(a: list[GaussianRational], b: list[GaussianRational]) -> list[GaussianRational]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] / lb
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - f * bc
        _dense_trim(a)
        if not a:
            break
    return a


def laurent_gcd(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Monic gcd over the Gaussian rationals, with unit factors w^k stripped.

    The result is an ordinary polynomial (valuation 0) whose leading
    coefficient is 1; gcd(0, q) is the monic polynomial part of q.
    """
    if p.var != q.var:
        raise RingMismatchError(f"variable mismatch: {p.var!r} vs {q.var!r}")
    var = p.var
    if p.is_zero() and q.is_zero():
        return LaurentPolynomial.zero(var)
    a = _to_dense(p) if not p.is_zero() else []
    b = _to_dense(q) if not q.is_zero() else []
    while b:
        a, b = b, _dense_mod(a, b)
    lc = a[-1]
    return LaurentPolynomial(var, {i: c / lc for i, c in enumerate(a)})


def laurent_exact_div(p: LaurentPolynomial, d: LaurentPolynomial) -> LaurentPolynomial:
    """Exact division; raises if d does not divide p."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return LaurentPolynomial.zero(p.var)
    if p.var != d.var:
        raise RingMismatchError(f"variable mismatch: {p.var!r} vs {d.var!r}")
    vp, vd = p.valuation(), d.valuation()
    a = _to_dense(p)
    b = _to_dense(d)
    db, lb = len(b) - 1, b[-1]
    out: dict[int, GaussianRational] = {}
    while a:
        da = len(a) - 1
        if da < db:
            raise ValueError("not an exact division")
        f = a[-1] / lb
        out[da - db] = f
        shift = da - db
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - f * bc
        _dense_trim(a)
    return LaurentPolynomial(p.var, out).shift(vp - vd)
