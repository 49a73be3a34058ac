"""Shared helpers: independent brute-force oracles the tests freeze values from."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from e8theta.fixtures import FixedPoint, FixedPointFixture


def naive_q_product(factors, order):
    """Expand prod (1 + c * q^e) over plain dicts {q-exponent: Fraction}.

    `factors` is a list of (coefficient, exponent) pairs with integer
    exponents in whole q-units.  Independent of the package's series code.
    """
    poly = {0: Fraction(1)}
    for c, e in factors:
        out = dict(poly)
        for k, v in poly.items():
            if k + e <= order:
                out[k + e] = out.get(k + e, Fraction(0)) + v * c
        poly = {k: v for k, v in out.items() if v and k <= order}
    return poly


def naive_euler_phi(order):
    """Coefficients of prod_{n>=1} (1 - q^n) as {exponent: Fraction}."""
    return naive_q_product([(Fraction(-1), n) for n in range(1, order + 1)], order)


def naive_partition_power(order, power):
    """Coefficients of prod (1-q^n)^(-power) by divisor-sum recurrence.

    Uses  n*a_n = sum_{m=1..n} power*sigma_1(m)*a_{n-m},  the logarithmic
    derivative of the Euler product; entirely independent of series code.
    """
    sigma = [0] * (order + 1)
    for d in range(1, order + 1):
        for m in range(d, order + 1, d):
            sigma[m] += d
    a = [Fraction(1)] + [Fraction(0)] * order
    for n in range(1, order + 1):
        total = Fraction(0)
        for m in range(1, n + 1):
            total += power * sigma[m] * a[n - m]
        a[n] = total / n
    return a


def brute_force_e8_shell(m):
    """All lattice points of half-norm exactly m by scanning coordinate boxes.

    Integer vectors with even coordinate sum and |gamma|^2 = 2m, plus
    all-half-integer vectors with even sum; returned as doubled coordinates.
    """
    target = 8 * m  # sum of squared doubled coordinates
    out = set()
    r = int(target**0.5)
    ints = [v for v in range(-r, r + 1) if v % 2 == 0]
    halfs = [v for v in range(-r, r + 1) if v % 2 != 0]
    for values in (ints, halfs):
        if not values:
            continue
        for vec in itertools.product(values, repeat=8):
            if sum(x * x for x in vec) == target and sum(vec) % 4 == 0:
                out.add(vec)
    return sorted(out)


def random_fixture(rng: random.Random, max_k=3, max_points=3, spread=2):
    k = rng.randint(1, max_k)
    pts = []
    for _ in range(rng.randint(1, max_points)):
        alpha = tuple(rng.choice([a for a in range(-spread, spread + 1) if a]) for _ in range(k))
        c = rng.randint(-spread, spread)
        beta = tuple(rng.randint(-spread, spread) for _ in range(8))
        pts.append(FixedPoint(alpha, c, beta))
    return FixedPointFixture(k=k, points=tuple(pts), label="randomized")


@pytest.fixture
def rng():
    return random.Random(20260808)
