"""Exact truncated series on the u = q^(1/24) exponent lattice.

Every expansion in the package lives on a single global lattice:
q = u^24, q^(1/2) = u^12, q^(1/8) = u^3.  A series stores the sparse map
{u-exponent: coefficient} together with an inclusive validity order M:
coefficients at exponents <= M are exact, nothing is known beyond M.

Validity propagation is conservative and never overstates what was
computed: sums are valid to the smaller operand order, and a product of
a (valid to Ma, lowest exponent ma) with b (valid to Mb, lowest mb) is
valid to min(Ma + mb, Mb + ma).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .errors import BeyondTruncationError, ExponentLatticeError, RingMismatchError
from .rings import QI, CoefficientRing

U_PER_Q = 24


class TruncatedSeries:
    __slots__ = ("ring", "coeffs", "order")

    def __init__(self, ring: CoefficientRing, coeffs: dict, order: int):
        self.ring = ring
        self.order = int(order)
        clean = {}
        for e, c in coeffs.items():
            e = int(e)
            if e > self.order:
                raise BeyondTruncationError(
                    f"coefficient at u^{e} beyond validity order {self.order}"
                )
            if not ring.is_zero(c):
                clean[e] = c
        self.coeffs = clean

    # constructors

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> "TruncatedSeries":
        return cls(ring, {}, order)

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> "TruncatedSeries":
        return cls(ring, {0: ring.one()}, order)

    @classmethod
    def monomial(cls, ring: CoefficientRing, coeff, exponent: int, order: int) -> "TruncatedSeries":
        return cls(ring, {exponent: coeff}, order)

    # structure

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def base_exponent(self):
        """Lowest stored exponent, or None for a zero series."""
        return min(self.coeffs) if self.coeffs else None

    def _effective_base(self) -> int:
        # a zero series is known-zero through its whole validity range
        return min(self.coeffs) if self.coeffs else self.order

    def coefficient(self, exponent: int):
        if exponent > self.order:
            raise BeyondTruncationError(
                f"u^{exponent} requested, series only valid through u^{self.order}"
            )
        return self.coeffs.get(exponent, self.ring.zero())

    def q_coefficient(self, n: int):
        return self.coefficient(U_PER_Q * n)

    def q_coefficients(self, through: int) -> list:
        return [self.q_coefficient(n) for n in range(through + 1)]

    def whole_q_powers(self) -> bool:
        return all(e % U_PER_Q == 0 for e in self.coeffs)

    def _check_ring(self, other: "TruncatedSeries"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"coefficient ring mismatch: {self.ring.name} vs {other.ring.name}"
            )

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_ring(other)
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if e <= order}
        zero = self.ring.zero()
        for e, c in other.coeffs.items():
            if e > order:
                continue
            s = out.get(e, zero) + c
            if self.ring.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return TruncatedSeries(self.ring, out, order)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TruncatedSeries(self.ring, {e: -c for e, c in self.coeffs.items()}, self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_ring(other)
        order = min(
            self.order + other._effective_base(),
            other.order + self._effective_base(),
        )
        out: dict = {}
        zero = self.ring.zero()
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e > order:
                    continue
                s = out.get(e, zero) + c1 * c2
                if self.ring.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return TruncatedSeries(self.ring, out, order)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use invert() for negative powers")
        if n == 0:
            return TruncatedSeries.one(self.ring, self.order)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse up to truncation.

        The lowest coefficient must be invertible in the coefficient ring;
        the result has base exponent -m0 and validity M - 2*m0.
        """
        if self.is_zero():
            raise ZeroDivisionError("cannot invert the zero series")
        m0 = self.base_exponent
        rel_order = self.order - m0
        a = {e - m0: c for e, c in self.coeffs.items()}
        inv0 = self.ring.invert(a[0])
        b = {0: inv0}
        zero = self.ring.zero()
        for r in range(1, rel_order + 1):
            acc = zero
            for i, ai in a.items():
                if 0 < i <= r:
                    bj = b.get(r - i)
                    if bj is not None:
                        acc = acc + ai * bj
            if not self.ring.is_zero(acc):
                b[r] = -(inv0 * acc)
        out = {e - m0: c for e, c in b.items()}
        return TruncatedSeries(self.ring, out, self.order - 2 * m0)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise BeyondTruncationError(
                f"cannot extend validity from u^{self.order} to u^{order}"
            )
        return TruncatedSeries(
            self.ring, {e: c for e, c in self.coeffs.items() if e <= order}, order
        )

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by u^k (validity shifts along)."""
        return TruncatedSeries(
            self.ring, {e + k: c for e, c in self.coeffs.items()}, self.order + k
        )

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by c (a ring element or exact scalar)."""
        if not self.ring.contains(c):
            c = self.ring.coerce_scalar(c)
        if self.ring.is_zero(c):
            return TruncatedSeries.zero(self.ring, self.order)
        return TruncatedSeries(self.ring, {e: v * c for e, v in self.coeffs.items()}, self.order)

    def times_one_plus(self, coeff, exponent: int) -> "TruncatedSeries":
        """Multiply by (1 + coeff * u^exponent) without changing validity.

        Intended for expanding infinite products: factors whose exponent
        exceeds the validity order do not alter any stored coefficient.
        """
        if exponent <= 0:
            raise ValueError("factor exponent must be positive")
        out = dict(self.coeffs)
        zero = self.ring.zero()
        for e, c in self.coeffs.items():
            k = e + exponent
            if k > self.order:
                continue
            s = out.get(k, zero) + c * coeff
            if self.ring.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return TruncatedSeries(self.ring, out, self.order)

    def map_coefficients(self, fn: Callable, ring: CoefficientRing) -> "TruncatedSeries":
        return TruncatedSeries(ring, {e: fn(c) for e, c in self.coeffs.items()}, self.order)

    def agrees_with(self, other: "TruncatedSeries", through: int | None = None) -> bool:
        """Exact coefficient agreement through min validity (or `through`)."""
        bound = min(self.order, other.order)
        if through is not None:
            bound = min(bound, through)
        for e in set(self.coeffs) | set(other.coeffs):
            if e > bound:
                continue
            if self.coeffs.get(e) != other.coeffs.get(e):
                a, b = self.coeffs.get(e), other.coeffs.get(e)
                if a is None and self.ring.is_zero(b):
                    continue
                if b is None and self.ring.is_zero(a):
                    continue
                return False
        return True

    def first_difference(self, other: "TruncatedSeries", through: int | None = None):
        """Lowest exponent where the two series differ, or None."""
        bound = min(self.order, other.order)
        if through is not None:
            bound = min(bound, through)
        for e in sorted(set(self.coeffs) | set(other.coeffs)):
            if e > bound:
                continue
            a = self.coeffs.get(e, self.ring.zero())
            b = other.coeffs.get(e, other.ring.zero())
            if a != b:
                return e
        return None

    def evaluate(self, u_value: complex, coeff_value: Callable = complex) -> complex:
        return sum((coeff_value(c) * u_value**e for e, c in self.coeffs.items()), 0j)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.coeffs == other.coeffs

    def __str__(self):
        return format_series(self, fractional=True)

    def __repr__(self):
        return f"<series[{self.ring.name}] {format_series(self, fractional=True)}>"


def phi_series(order: int, ring: CoefficientRing = QI) -> TruncatedSeries:
    """The Euler product (1-q)(1-q^2)... expanded exactly through q^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    validity = U_PER_Q * order + U_PER_Q - 1
    s = TruncatedSeries.one(ring, validity)
    minus_one = -ring.one()
    for n in range(1, order + 1):
        s = s.times_one_plus(minus_one, U_PER_Q * n)
    return s


def _format_exponent(e: int, var: str) -> str:
    f = Fraction(e, U_PER_Q)
    if f == 1:
        return var
    if f.denominator == 1:
        return f"{var}^{f.numerator}"
    return f"{var}^({f.numerator}/{f.denominator})"


def format_series(series: TruncatedSeries, fractional: bool = False, var: str = "q") -> str:
    """Render a series ordered by ascending q-exponent with exact coefficients.

    Without `fractional`, any stored exponent off the whole-power lattice
    raises ExponentLatticeError rather than printing a wrong power.
    """
    if not fractional:
        bad = [e for e in series.coeffs if e % U_PER_Q != 0]
        if bad:
            raise ExponentLatticeError(
                f"exponent u^{min(bad)} is not a whole power of {var}; "
                "request fractional display"
            )
    parts = []
    for e in sorted(series.coeffs):
        c = series.coeffs[e]
        cs = str(c)
        needs_parens = any(ch in cs[1:] for ch in "+- ") or cs.startswith("(")
        if e == 0:
            parts.append(f"({cs})" if needs_parens and not cs.startswith("(") else cs)
            continue
        ve = _format_exponent(e, var)
        if cs == "1":
            parts.append(ve)
        elif cs == "-1":
            parts.append(f"-{ve}")
        elif needs_parens:
            parts.append(f"({cs})*{ve}" if not cs.startswith("(") else f"{cs}*{ve}")
        else:
            parts.append(f"{cs}*{ve}")
    if not parts:
        body = "0"
    else:
        body = parts[0]
        for p in parts[1:]:
            body += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    tail = _format_exponent(series.order + 1, var) if fractional else f"q^{(series.order // U_PER_Q) + 1}"
    return f"{body} + O({tail})"
