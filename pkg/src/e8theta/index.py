"""Equivariant index series for circle actions with isolated fixed points.

Per fixed point the series is a product of three blocks, all exact on the
u = q^(1/24) lattice with rational-function coefficients in w = e^(pi i t):

* tangent block: over the rotation weights alpha_j, the quotient
  theta'(0,tau) / (2 pi i theta(alpha_j t, tau)), implemented as the
  identity  phi(q)^2 / ((w^a - w^-a) prod_m (1 - w^(2a) q^m)(1 - w^(-2a) q^m));
  the 2 pi i cancels symbolically, and the identity is asserted against a
  numeric evaluation once per process before first use.
* line-bundle block: for the even tower ("I") the product of the ratios
  theta_i(c t)/theta_i(0) over i = 1, 2, 3; for the odd tower ("J") the
  single quotient i * theta(c t) / (theta_1 theta_2 theta_3)(0).  The i
  normalizes the odd tower so that every summed coefficient is a real
  index; in particular the order-zero coefficient is the honest Lefschetz
  number of the (1 - Lbar)-twisted operator.
* lattice block: the full sum of the four 8-fold theta products at
  z_l = beta_l t (twice the specialized lattice theta function).

Only whole powers of q survive per point; both that and the reality of all
summed coefficients are asserted on construction.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .bundles import BundleExpr, order_one_twist
from .e8 import DEFAULT_BUDGET
from .fixtures import FixedPoint, FixedPointFixture, IndexFlavor
from .gaussian import GaussianRational, I as GAUSS_I
from .laurent import LaurentPolynomial
from .ratfunc import RationalFunction
from .report import ReportItem, VerificationReport
from .rings import LAURENT_W, RATFUNC_W
from .series import TruncatedSeries, U_PER_Q, phi_series
from .theta import ThetaKind, theta_eval, theta_prime_zero, theta_series


@dataclass(frozen=True)
class AnomalyResult:
    """Per-point values of sum(beta^2) + (3 or 1) c^2 - sum(alpha^2)."""

    flavor: IndexFlavor
    per_point: tuple[int, ...]
    consistent: bool
    n: int | None


def anomaly(fixture: FixedPointFixture, flavor: IndexFlavor) -> AnomalyResult:
    coeff = 3 if flavor is IndexFlavor.I_SERIES else 1
    values = tuple(
        sum(b * b for b in p.beta) + coeff * p.c * p.c - sum(a * a for a in p.alpha)
        for p in fixture.points
    )
    consistent = len(set(values)) == 1
    return AnomalyResult(flavor, values, consistent, values[0] if consistent else None)


@dataclass
class IndexSeries:
    flavor: IndexFlavor
    fixture: FixedPointFixture
    series: TruncatedSeries  # rational-function coefficients, whole q-powers
    order: int

    def q_coefficient(self, n: int) -> RationalFunction:
        return self.series.q_coefficient(n)


def _w_monomials(coeffs: dict[int, int]) -> LaurentPolynomial:
    return LaurentPolynomial("w", {e: GaussianRational(n) for e, n in coeffs.items()})


def _tangent_denominator(alpha: tuple[int, ...], validity: int) -> TruncatedSeries:
    """(prod_j (w^a - w^-a)) * prod_j prod_m (1 - w^(2a) q^m)(1 - w^(-2a) q^m)."""
    lead = LaurentPolynomial.one("w")
    for a in alpha:
        lead = lead * _w_monomials({a: 1, -a: -1})
    s = TruncatedSeries.monomial(LAURENT_W, lead, 0, validity)
    for a in alpha:
        m = 1
        while U_PER_Q * m <= validity:
            s = s.times_one_plus(_w_monomials({2 * a: -1}), U_PER_Q * m)
            s = s.times_one_plus(_w_monomials({-2 * a: -1}), U_PER_Q * m)
            m += 1
    return s


def _laurent_to_ratfunc(series: TruncatedSeries) -> TruncatedSeries:
    return series.map_coefficients(RationalFunction.from_laurent, RATFUNC_W)


def _scalar_theta_product_at_zero(order: int) -> TruncatedSeries:
    """theta_1(0) theta_2(0) theta_3(0) as a series with constant coefficients."""
    prod = None
    for kind in (ThetaKind.THETA1, ThetaKind.THETA2, ThetaKind.THETA3):
        factor = theta_series(kind, order).scaled(0)
        prod = factor if prod is None else prod * factor
    return prod


def _line_block(flavor: IndexFlavor, c: int, order: int) -> TruncatedSeries:
    if flavor is IndexFlavor.I_SERIES:
        num = None
        for kind in (ThetaKind.THETA1, ThetaKind.THETA2, ThetaKind.THETA3):
            factor = theta_series(kind, order).scaled(c)
            num = factor if num is None else num * factor
    else:
        num = theta_series(ThetaKind.THETA, order).scaled(c).scale(GAUSS_I)
    return num * _scalar_theta_product_at_zero(order).invert()


def _lattice_block(beta: tuple[int, ...], order: int) -> TruncatedSeries:
    """Full sum of the four 8-fold theta products at z_l = beta_l t."""
    total = None
    for kind in (ThetaKind.THETA, ThetaKind.THETA1, ThetaKind.THETA2, ThetaKind.THETA3):
        expansion = theta_series(kind, order)
        prod = None
        for b in beta:
            factor = expansion.scaled(b)
            prod = factor if prod is None else prod * factor
            if prod.is_zero():
                break
        total = prod if total is None else total + prod
    return total


_factor_identity_checked = False


def _assert_quotient_identity():
    """One-shot numeric check of the tangent-block series identity."""
    global _factor_identity_checked
    if _factor_identity_checked:
        return
    order = 6
    validity = U_PER_Q * order
    den = _tangent_denominator((1,), validity)
    phi2 = phi_series(order) ** 2
    quotient = _laurent_to_ratfunc(den).invert() * _laurent_to_ratfunc(
        phi2.map_coefficients(lambda s: LaurentPolynomial.constant("w", s), LAURENT_W)
    )
    t, tau = 0.23, 1.3j
    w = cmath.exp(1j * cmath.pi * t)
    u = cmath.exp(2j * cmath.pi * tau / U_PER_Q)
    lhs = quotient.evaluate(u, lambda c: c.evaluate(w))
    rhs = theta_prime_zero(tau) / (2j * cmath.pi * theta_eval(ThetaKind.THETA, t, tau))
    if abs(lhs - rhs) > 1e-9 * max(1.0, abs(rhs)):
        raise AssertionError(
            f"tangent-block series identity failed numerically: {lhs} vs {rhs}"
        )
    _factor_identity_checked = True


def point_contribution(
    point: FixedPoint, k: int, flavor: IndexFlavor, order: int
) -> TruncatedSeries:
    """Exact series of one fixed point's summand, through q^order."""
    _assert_quotient_identity()
    work_order = order + 1
    validity = U_PER_Q * work_order
    den = _tangent_denominator(point.alpha, validity)
    tangent = _laurent_to_ratfunc(den).invert()
    phi_2k = phi_series(work_order) ** (2 * k)
    laurent_part = phi_2k.map_coefficients(
        lambda c: LaurentPolynomial.constant("w", c), LAURENT_W
    )
    laurent_part = laurent_part * _line_block(flavor, point.c, work_order)
    laurent_part = laurent_part * _lattice_block(point.beta, work_order)
    out = tangent * _laurent_to_ratfunc(laurent_part)
    target = U_PER_Q * order
    if out.order < target:
        raise AssertionError(f"validity shortfall: {out.order} < {target}")
    return out.truncate(target)


def index_series(
    fixture: FixedPointFixture,
    flavor: IndexFlavor,
    order: int,
    budget: int = DEFAULT_BUDGET,
) -> IndexSeries:
    """Sum of the fixed-point contributions, with structural assertions."""
    if order < 0:
        raise ValueError("order must be >= 0")
    # budget is accepted for interface parity; the lattice block runs over
    # theta products, not shell enumeration, so it never bites here
    total = None
    for p in fixture.points:
        contrib = point_contribution(p, fixture.k, flavor, order)
        total = contrib if total is None else total + contrib
    if not total.whole_q_powers():
        bad = min(e for e in total.coeffs if e % U_PER_Q)
        raise AssertionError(f"fractional q-power u^{bad} survived point summation")
    for e, c in total.coeffs.items():
        if not _ratfunc_is_real(c):
            raise AssertionError(f"non-real coefficient at u^{e}: {c}")
    return IndexSeries(flavor, fixture, total, order)


def _ratfunc_is_real(r: RationalFunction) -> bool:
    return all(c.im == 0 for c in r.num.coeffs.values()) and all(
        c.im == 0 for c in r.den.coeffs.values()
    )


def lefschetz_number(
    point: FixedPoint, k: int, expr: BundleExpr, flavor: IndexFlavor
) -> RationalFunction:
    """Fixed-point contribution of the twisted operator, as a rational function.

    The twist is (1 + Lbar) x expr for the even tower and (1 - Lbar) x expr
    for the odd one; with the half-weight of the spinor bundle the numerator
    reads (w^c +/- w^-c) * ch(expr), over the tangent factor
    prod_j (w^(alpha_j) - w^(-alpha_j)).  The convention matches the
    order-zero coefficient of the index series on the same point.
    """
    if len(point.alpha) != k:
        raise ValueError(f"point has {len(point.alpha)} weights, expected k={k}")
    sign = 1 if flavor is IndexFlavor.I_SERIES else -1
    spinor: dict[int, int] = {point.c: 1}
    spinor[-point.c] = spinor.get(-point.c, 0) + sign
    num = _w_monomials(spinor) * expr.char_at(point.alpha, point.c, point.beta)
    den = LaurentPolynomial.one("w")
    for a in point.alpha:
        den = den * _w_monomials({a: 1, -a: -1})
    return RationalFunction(num, den)


def verify_qexpansion(
    fixture: FixedPointFixture, flavor: IndexFlavor, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Check the q^0 and q^1 coefficients against direct Lefschetz numbers.

    The two routes are independent: the series comes from theta quotients,
    the Lefschetz numbers from equivariant characters of the named twists.
    Also checks the square of the rank-reduced line bundle against its
    expansion in the atoms.
    """
    ixs = index_series(fixture, flavor, 1, budget)
    even = flavor is IndexFlavor.I_SERIES
    items = []

    lef0 = _sum_lefschetz(fixture, BundleExpr.const(1), flavor)
    ok0 = ixs.q_coefficient(0) == lef0
    items.append(
        ReportItem(
            "q^0 = Lefschetz number of the bare twist",
            "pass" if ok0 else "fail",
            coefficient=None if ok0 else f"{ixs.q_coefficient(0)} vs {lef0}",
        )
    )

    twist = order_one_twist(even, fixture.k)
    lef1 = _sum_lefschetz(fixture, twist, flavor)
    ok1 = ixs.q_coefficient(1) == lef1
    items.append(
        ReportItem(
            "q^1 = Lefschetz number of the order-one twist",
            "pass" if ok1 else "fail",
            coefficient=None if ok1 else f"{ixs.q_coefficient(1)} vs {lef1}",
        )
    )

    square = BundleExpr.line_reduced() * BundleExpr.line_reduced()
    expanded = (
        BundleExpr.L2()
        + BundleExpr.Lbar2()
        - 4 * (BundleExpr.L() + BundleExpr.Lbar())
        + BundleExpr.const(6)
    )
    ok2 = _sum_lefschetz(fixture, square, flavor) == _sum_lefschetz(fixture, expanded, flavor)
    items.append(
        ReportItem("squared reduced line bundle expands in the atoms", "pass" if ok2 else "fail")
    )

    ok = ok0 and ok1 and ok2
    return VerificationReport(
        verdict="pass" if ok else "fail",
        ok=ok,
        items=items,
        meta={"flavor": flavor.value, "k": fixture.k, "label": fixture.label},
    )


def _sum_lefschetz(
    fixture: FixedPointFixture, expr: BundleExpr, flavor: IndexFlavor
) -> RationalFunction:
    total = RationalFunction.zero("w")
    for p in fixture.points:
        total = total + lefschetz_number(p, fixture.k, expr, flavor)
    return total


def check_rigidity(
    fixture: FixedPointFixture,
    flavor: IndexFlavor,
    order: int,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Classify each q-coefficient as zero / constant / w-dependent.

    Verdicts: VANISHING if every coefficient is zero, RIGID if every
    coefficient is a constant, otherwise NON-RIGID when the anomaly is
    consistent and INDETERMINATE when it is not (the theorems' hypothesis
    fails, so non-constancy refutes nothing).  The first offending
    coefficient is always named.
    """
    an = anomaly(fixture, flavor)
    ixs = index_series(fixture, flavor, order, budget)
    items = []
    all_zero = True
    all_const = True
    offender = None
    for i in range(order + 1):
        c = ixs.q_coefficient(i)
        if c.is_zero():
            items.append(ReportItem(f"q^{i}", "pass", detail="zero"))
            continue
        all_zero = False
        if c.is_constant():
            items.append(ReportItem(f"q^{i}", "pass", detail=f"constant {c.constant_value()}"))
        else:
            all_const = False
            if offender is None:
                offender = i
            items.append(ReportItem(f"q^{i}", "fail", coefficient=str(c)))
    if all_zero:
        verdict, ok = "VANISHING", True
    elif all_const:
        verdict, ok = "RIGID", True
    elif an.consistent:
        verdict, ok = "NON-RIGID", False
    else:
        verdict, ok = "INDETERMINATE", False
    meta = {
        "flavor": flavor.value,
        "k": fixture.k,
        "order": order,
        "label": fixture.label,
        "anomaly_consistent": an.consistent,
        "n": an.n,
        "per_point_n": list(an.per_point),
    }
    if offender is not None:
        meta["first_offending_coefficient"] = offender
    return VerificationReport(verdict=verdict, ok=ok, items=items, meta=meta)


def evaluate_at_identity(ixs: IndexSeries) -> VerificationReport:
    """Evaluate every coefficient at w = 1; poles are reported, not patched.

    A pole at w = 1 in a reduced coefficient means the fixture is not the
    fixed-point data of a closed manifold.  Values must come out as real
    integers (the ordinary indices).
    """
    items = []
    values = []
    ok = True
    for i in range(ixs.order + 1):
        c = ixs.q_coefficient(i)
        if c.has_pole_at_one():
            items.append(ReportItem(f"q^{i}", "fail", coefficient=str(c), detail="pole at w=1"))
            ok = False
            continue
        v = c.value_at_one()
        if not v.is_integer():
            items.append(
                ReportItem(f"q^{i}", "fail", coefficient=str(v), detail="non-integer value")
            )
            ok = False
            continue
        values.append(v.as_integer())
        items.append(ReportItem(f"q^{i}", "pass", detail=str(v.as_integer())))
    return VerificationReport(
        verdict="pass" if ok else "fail",
        ok=ok,
        items=items,
        meta={
            "flavor": ixs.flavor.value,
            "label": ixs.fixture.label,
            "order": ixs.order,
            "values": values if ok else None,
        },
    )


# numeric evaluation and the transformation laws


def point_value(
    point: FixedPoint,
    k: int,
    flavor: IndexFlavor,
    t: complex,
    tau: complex,
    order: int | None = None,
) -> complex:
    """Floating-point value of one fixed point's summand."""
    value = (1 / (2j * cmath.pi)) ** k
    tp = theta_prime_zero(tau, order)
    for a in point.alpha:
        value *= tp / theta_eval(ThetaKind.THETA, a * t, tau, order)
    if flavor is IndexFlavor.I_SERIES:
        for kind in (ThetaKind.THETA1, ThetaKind.THETA2, ThetaKind.THETA3):
            value *= theta_eval(kind, point.c * t, tau, order) / theta_eval(kind, 0, tau, order)
    else:
        denom = 1
        for kind in (ThetaKind.THETA1, ThetaKind.THETA2, ThetaKind.THETA3):
            denom *= theta_eval(kind, 0, tau, order)
        value *= 1j * theta_eval(ThetaKind.THETA, point.c * t, tau, order) / denom
    bracket = 0j
    for kind in (ThetaKind.THETA, ThetaKind.THETA1, ThetaKind.THETA2, ThetaKind.THETA3):
        prod = 1 + 0j
        for b in point.beta:
            prod *= theta_eval(kind, b * t, tau, order)
        bracket += prod
    return value * bracket


def index_value(
    fixture: FixedPointFixture,
    flavor: IndexFlavor,
    t: complex,
    tau: complex,
    order: int | None = None,
) -> complex:
    return sum(point_value(p, fixture.k, flavor, t, tau, order) for p in fixture.points)


def check_transform_laws(
    fixture: FixedPointFixture,
    flavor: IndexFlavor,
    t: complex,
    tau: complex,
    a: int,
    b: int,
    tol: float = 1e-8,
    order: int | None = None,
) -> VerificationReport:
    """Numeric residuals of the three transformation laws, summand-wise.

    tau -> tau + 1 leaves the series fixed; tau -> -1/tau has weight k + 4
    for the even tower and k + 3 for the odd one, with the Gaussian factor
    e^(pi i n t^2 / tau); for the lattice shift t -> t + a tau + b (a, b
    even) two candidate multipliers are tried and the one that holds is
    reported: the standard e^(-pi i n (a^2 tau + 2 a t)) and the variant
    e^(-pi i n (b^2 tau + 2 b tau)).  Each law holds per point with that
    point's own anomaly value n; totals are checked when the fixture is
    anomaly-consistent.  Residuals are relative: the lattice multipliers
    are exponentially large in n, a and Im(tau).
    """
    t, tau = complex(t), complex(tau)
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half plane")
    if a % 2 or b % 2:
        raise ValueError("lattice shifts use even integers a, b")
    an = anomaly(fixture, flavor)
    weight = fixture.k + (4 if flavor is IndexFlavor.I_SERIES else 3)
    items = []
    std_ok = True
    printed_ok = True

    def factors(n: int):
        f_s = tau**weight * cmath.exp(1j * cmath.pi * n * t * t / tau)
        f_std = cmath.exp(-1j * cmath.pi * n * (a * a * tau + 2 * a * t))
        f_printed = cmath.exp(-1j * cmath.pi * n * (b * b * tau + 2 * b * tau))
        return f_s, f_std, f_printed

    def emit(label: str, lhs, rhs, law: str, scale: float = 1.0) -> float:
        r = abs(lhs - rhs) / max(1.0, abs(rhs), scale)
        items.append(ReportItem(f"{label} {law}", "pass" if r < tol else "fail", residual=r))
        return r

    per_point = []
    for idx, p in enumerate(fixture.points):
        base = point_value(p, fixture.k, flavor, t, tau, order)
        v_t = point_value(p, fixture.k, flavor, t, tau + 1, order)
        v_s = point_value(p, fixture.k, flavor, t / tau, -1 / tau, order)
        v_l = point_value(p, fixture.k, flavor, t + a * tau + b, tau, order)
        per_point.append((base, v_t, v_s, v_l))
        f_s, f_std, f_printed = factors(an.per_point[idx])
        emit(f"point {idx}", v_t, base, "T-law")
        emit(f"point {idx}", v_s, f_s * base, "S-law")
        r_std = emit(f"point {idx}", v_l, f_std * base, "lattice law (standard exponent)")
        r_printed = emit(f"point {idx}", v_l, f_printed * base, "lattice law (printed exponent)")
        std_ok = std_ok and r_std < tol
        printed_ok = printed_ok and r_printed < tol
    if an.consistent and len(fixture.points) > 1:
        # the sum can cancel to zero while its summands are exponentially
        # large; the attainable precision scales with the largest summand
        f_s, f_std, f_printed = factors(an.n)
        base, v_t, v_s, v_l = (sum(vs) for vs in zip(*per_point))
        for law, lhs, rhs, col in (
            ("T-law", v_t, base, 1),
            ("S-law", v_s, f_s * base, 2),
            ("lattice law (standard exponent)", v_l, f_std * base, 3),
            ("lattice law (printed exponent)", v_l, f_printed * base, 3),
        ):
            scale = max(abs(vals[col]) for vals in per_point)
            r = emit("total", lhs, rhs, law, scale=scale)
            if law.endswith("(standard exponent)"):
                std_ok = std_ok and r < tol
            elif law.endswith("(printed exponent)"):
                printed_ok = printed_ok and r < tol

    resolved = (
        "both"
        if std_ok and printed_ok
        else "standard"
        if std_ok
        else "printed"
        if printed_ok
        else "neither"
    )
    lattice_pass = std_ok or printed_ok
    t_s_pass = all(
        i.status == "pass" for i in items if "T-law" in i.name or "S-law" in i.name
    )
    ok = t_s_pass and lattice_pass
    return VerificationReport(
        verdict="pass" if ok else "fail",
        ok=ok,
        items=items,
        meta={
            "flavor": flavor.value,
            "k": fixture.k,
            "label": fixture.label,
            "t": str(t),
            "tau": str(tau),
            "a": a,
            "b": b,
            "tol": tol,
            "weight": weight,
            "lattice_law_resolved": resolved,
            "anomaly_consistent": an.consistent,
            "n": an.n,
            "per_point_n": list(an.per_point),
        },
    )


_BRANCH_TABLE_NOTE = "vanishing parity: odd k for the even tower, even k for the odd tower"


def classify(
    fixture: FixedPointFixture,
    flavor: IndexFlavor,
    order: int,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Predict the theorem branch from n and k, then compare with observation.

    Branches (even tower; the odd tower flips the k parity):
    (i) n < 0: the series vanishes identically; (ii) n = 0: rigid, and
    vanishing for odd k; (iii) n = 2 with odd k: vanishing.  Other (n, k)
    carry no prediction.  An inconsistent anomaly also carries none.
    """
    an = anomaly(fixture, flavor)
    odd_parity_vanishes = flavor is IndexFlavor.I_SERIES
    branch = "none"
    predicted = None
    if an.consistent:
        n = an.n
        k_vanishing = (fixture.k % 2 == 1) if odd_parity_vanishes else (fixture.k % 2 == 0)
        if n < 0:
            branch, predicted = "i", "VANISHING"
        elif n == 0:
            branch, predicted = "ii", "VANISHING" if k_vanishing else "RIGID"
        elif n == 2 and k_vanishing:
            branch, predicted = "iii", "VANISHING"
    rigidity = check_rigidity(fixture, flavor, order, budget)
    observed = rigidity.verdict
    if predicted is None:
        ok = True
        consistency = "no prediction"
    elif predicted == "VANISHING":
        ok = observed == "VANISHING"
        consistency = "consistent" if ok else "inconsistent"
    else:  # RIGID predicted; vanishing is rigid too
        ok = observed in ("RIGID", "VANISHING")
        consistency = "consistent" if ok else "inconsistent"
    n_str = f"n={an.n}" if an.consistent else f"n inconsistent {list(an.per_point)}"
    verdict = f"{observed} (branch {branch}, {n_str}): {consistency}"
    items = [
        ReportItem(
            "branch prediction",
            "info",
            detail=f"branch {branch}: predicted {predicted or 'nothing'} ({_BRANCH_TABLE_NOTE})",
        )
    ]
    if (
        flavor is IndexFlavor.I_SERIES
        and branch == "i"
        and all(p.c == 0 for p in fixture.points)
    ):
        items.append(
            ReportItem(
                "spin case note",
                "info",
                detail=(
                    "c = 0 everywhere: the constant value of the series equals "
                    "minus the index of the Rarita-Schwinger operator "
                    "(tangent-bundle twist of the Dirac operator)"
                ),
            )
        )
    items.extend(rigidity.items)
    return VerificationReport(
        verdict=verdict,
        ok=ok,
        items=items,
        meta={
            **rigidity.meta,
            "branch": branch,
            "predicted": predicted,
            "observed": observed,
            "consistency": consistency,
        },
    )
