"""Exact checks of the index-series machinery.

The heavy oracle here expands the twisting tower directly with geometric
series (no theta functions anywhere): per fixed point,

    [w^c (1 +/- w^(-2c)) / prod_j (w^(a_j) - w^(-a_j))]
        * ch(tower at the point) * (lattice theta series along beta)

with the tower character assembled from its defining product over
exterior/symmetric powers.  Agreement with the production series, which
comes from theta quotients, validates both routes at every order.
"""

import pytest

from conftest import random_fixture

from e8theta.bundles import BundleExpr
from e8theta.e8 import theta_e8
from e8theta.fixtures import FixedPoint, FixedPointFixture, IndexFlavor
from e8theta.gaussian import GaussianRational
from e8theta.laurent import LaurentPolynomial
from e8theta.ratfunc import RationalFunction
from e8theta.rings import LAURENT_W, RATFUNC_W
from e8theta.series import TruncatedSeries, U_PER_Q
from e8theta.index import (
    anomaly,
    check_rigidity,
    evaluate_at_identity,
    index_series,
    lefschetz_number,
    point_contribution,
    verify_qexpansion,
)

Z8 = (0,) * 8


def W(coeffs):
    return LaurentPolynomial("w", {e: GaussianRational(c) for e, c in coeffs.items()})


def fixture(k, *points, label="test"):
    return FixedPointFixture(k=k, points=tuple(FixedPoint(*p) for p in points), label=label)


S2 = fixture(1, ((1,), 0, Z8), ((-1,), 0, Z8), label="sphere")
S2XS2 = fixture(2, ((1, 1), 0, Z8), ((1, -1), 0, Z8), ((-1, 1), 0, Z8), ((-1, -1), 0, Z8))
CP1_SPINC = fixture(1, ((1,), 1, Z8), ((-1,), -1, Z8))
CP2 = fixture(2, ((1, 2), 3, Z8), ((-1, 1), 0, Z8), ((-2, -1), -3, Z8))
SINGLE = fixture(1, ((1,), 0, Z8))


# independent tower oracle


def _tower_series(point: FixedPoint, k: int, flavor: IndexFlavor, order: int) -> TruncatedSeries:
    """Character of the twisting tower at one point, by geometric expansion."""
    validity = U_PER_Q * (order + 1)
    num = TruncatedSeries.one(LAURENT_W, validity)
    den = TruncatedSeries.one(LAURENT_W, validity)
    c2, c2m = W({2 * point.c: 1}), W({-2 * point.c: 1})
    one = LaurentPolynomial.one("w")

    m = 1
    while U_PER_Q * m <= validity:
        e = U_PER_Q * m
        for a in point.alpha:  # symmetric powers of the reduced tangent bundle
            den = den.times_one_plus(W({2 * a: -1}), e)
            den = den.times_one_plus(W({-2 * a: -1}), e)
        num = num.times_one_plus(-one, e)
        num = num.times_one_plus(-one, e)  # (1 - q^m)^(2k) per plane
        if k > 1:
            for _ in range(k - 1):
                num = num.times_one_plus(-one, e)
                num = num.times_one_plus(-one, e)
        if flavor is IndexFlavor.I_SERIES:  # exterior powers of the reduced line bundle
            num = num.times_one_plus(c2, e)
            num = num.times_one_plus(c2m, e)
            den = den.times_one_plus(one, e)
            den = den.times_one_plus(one, e)
        else:
            num = num.times_one_plus(-c2, e)
            num = num.times_one_plus(-c2m, e)
            den = den.times_one_plus(-one, e)
            den = den.times_one_plus(-one, e)
        m += 1
    if flavor is IndexFlavor.I_SERIES:
        h = 1
        while U_PER_Q * h - 12 <= validity:  # the two half-integer towers
            e = U_PER_Q * h - 12
            for sign in (-1, 1):
                sc = GaussianRational(sign)
                num = num.times_one_plus(c2.scale(sc), e)
                num = num.times_one_plus(c2m.scale(sc), e)
                den = den.times_one_plus(one.scale(sc), e)
                den = den.times_one_plus(one.scale(sc), e)
            h += 1
    return num * den.invert()


def oracle_contribution(point, k, flavor, order):
    tower = _tower_series(point, k, flavor, order)
    lattice = theta_e8(point.beta, order + 1)
    spinor = W({point.c: 1}) + W({-point.c: 1 if flavor is IndexFlavor.I_SERIES else -1})
    tangent = LaurentPolynomial.one("w")
    for a in point.alpha:
        tangent = tangent * W({a: 1, -a: -1})
    prefactor = RationalFunction(spinor, tangent)
    combined = (tower * lattice).map_coefficients(RationalFunction.from_laurent, RATFUNC_W)
    return combined.scale(prefactor).truncate(U_PER_Q * order)


@pytest.mark.parametrize("flavor", list(IndexFlavor))
@pytest.mark.parametrize(
    "point,k",
    [
        (FixedPoint((1,), 0, Z8), 1),
        (FixedPoint((1,), 1, Z8), 1),
        (FixedPoint((2,), -1, (1, 0, 0, 0, 0, 0, 0, 0)), 1),
        (FixedPoint((1, 2), 3, Z8), 2),
        (FixedPoint((-1, 1, -2), 2, (1, -1, 0, 2, 0, 0, 1, 0)), 3),
    ],
)
def test_point_series_matches_tower_oracle(point, k, flavor):
    order = 2
    got = point_contribution(point, k, flavor, order)
    expected = oracle_contribution(point, k, flavor, order)
    assert got.agrees_with(expected), (
        f"{flavor}: mismatch at u^{got.first_difference(expected)}"
    )


# anomaly


def test_anomaly_sphere():
    a = anomaly(S2, IndexFlavor.I_SERIES)
    assert a.consistent and a.n == -1


def test_anomaly_cp1_spinc_both_flavors():
    assert anomaly(CP1_SPINC, IndexFlavor.I_SERIES).n == 2
    assert anomaly(CP1_SPINC, IndexFlavor.J_SERIES).n == 0


def test_anomaly_inconsistent_is_report_not_error():
    mixed = fixture(1, ((1,), 0, (1, 0, 0, 0, 0, 0, 0, 0)), ((1,), 0, Z8))
    a = anomaly(mixed, IndexFlavor.I_SERIES)
    assert not a.consistent
    assert a.n is None
    assert a.per_point == (0, -1)


def test_anomaly_cp2_is_inconsistent():
    assert anomaly(CP2, IndexFlavor.I_SERIES).per_point == (22, -2, 22)
    assert anomaly(CP2, IndexFlavor.J_SERIES).per_point == (4, -2, 4)


# index series


def test_sphere_series_vanishes():
    ixs = index_series(S2, IndexFlavor.I_SERIES, 4)
    assert ixs.series.is_zero()


def test_product_of_spheres_vanishes():
    ixs = index_series(S2XS2, IndexFlavor.I_SERIES, 3)
    assert ixs.series.is_zero()


def test_single_point_q0_is_nonconstant():
    ixs = index_series(SINGLE, IndexFlavor.I_SERIES, 1)
    q0 = ixs.q_coefficient(0)
    assert not q0.is_constant()
    assert q0 == RationalFunction(W({0: 2}), W({1: 1, -1: -1}))


def test_whole_powers_and_reality_hold(rng):
    for _ in range(3):
        fx = random_fixture(rng)
        for flavor in IndexFlavor:
            ixs = index_series(fx, flavor, 1)
            assert ixs.series.whole_q_powers()


def test_negating_all_weights_substitutes_w_inverse(rng):
    for _ in range(3):
        fx = random_fixture(rng, max_points=2)
        neg = FixedPointFixture(
            k=fx.k,
            points=tuple(
                FixedPoint(tuple(-a for a in p.alpha), -p.c, tuple(-b for b in p.beta))
                for p in fx.points
            ),
            label="negated",
        )
        for flavor in IndexFlavor:
            direct = index_series(neg, flavor, 1).series
            flipped = index_series(fx, flavor, 1).series.map_coefficients(
                lambda c: c.substitute_inverse(), RATFUNC_W
            )
            assert direct.agrees_with(flipped)


# Lefschetz numbers and the q-expansion cross-check


def test_lefschetz_constant_twist_matches_q0_summand():
    for flavor in IndexFlavor:
        for point, k in [(FixedPoint((1,), 1, Z8), 1), (FixedPoint((1, 2), 3, Z8), 2)]:
            lef = lefschetz_number(point, k, BundleExpr.const(1), flavor)
            q0 = point_contribution(point, k, flavor, 0).q_coefficient(0)
            assert lef == q0


def test_lefschetz_trivial_adjoint_is_248():
    point = FixedPoint((1, 2), 1, Z8)
    lef_w = lefschetz_number(point, 2, BundleExpr.adjoint(), IndexFlavor.I_SERIES)
    lef_1 = lefschetz_number(point, 2, BundleExpr.const(248), IndexFlavor.I_SERIES)
    assert lef_w == lef_1


def test_line_square_identity():
    point = FixedPoint((1, -2), 2, (1, 0, -1, 0, 0, 2, 0, 0))
    sq = BundleExpr.line_reduced() * BundleExpr.line_reduced()
    expanded = (
        BundleExpr.L2()
        + BundleExpr.Lbar2()
        - 4 * (BundleExpr.L() + BundleExpr.Lbar())
        + BundleExpr.const(6)
    )
    for flavor in IndexFlavor:
        assert lefschetz_number(point, 2, sq, flavor) == lefschetz_number(
            point, 2, expanded, flavor
        )


def test_qexpansion_sphere_all_zero():
    report = verify_qexpansion(S2, IndexFlavor.I_SERIES)
    assert report.ok


def test_qexpansion_single_point_with_lattice_direction():
    fx = fixture(1, ((1,), 0, (1, 0, 0, 0, 0, 0, 0, 0)))
    for flavor in IndexFlavor:
        report = verify_qexpansion(fx, flavor)
        assert report.ok, report.summary()


def test_qexpansion_randomized(rng):
    for _ in range(10):
        fx = random_fixture(rng)
        for flavor in IndexFlavor:
            report = verify_qexpansion(fx, flavor)
            assert report.ok, f"{fx}\n{report.summary()}"


# rigidity and classification behavior


def test_rigidity_sphere_vanishing():
    report = check_rigidity(S2, IndexFlavor.I_SERIES, 5)
    assert report.verdict == "VANISHING" and report.ok


def test_rigidity_cp1_spinc_vanishing_even_tower():
    report = check_rigidity(CP1_SPINC, IndexFlavor.I_SERIES, 5)
    assert report.verdict == "VANISHING"


def test_rigidity_cp1_spinc_rigid_odd_tower():
    # anomaly 0 with the odd tower: rigid and visibly nonzero
    report = check_rigidity(CP1_SPINC, IndexFlavor.J_SERIES, 3)
    assert report.verdict == "RIGID"
    values = evaluate_at_identity(index_series(CP1_SPINC, IndexFlavor.J_SERIES, 3))
    assert values.ok
    assert values.meta["values"][0] == 2


def test_rigidity_cp2_even_tower_observed():
    """The projective-plane fixture has inconsistent anomaly {22, -2, 22} and
    its order-one coefficient genuinely depends on w; verdict INDETERMINATE
    with the offender named.  Locked against two independent computations."""
    report = check_rigidity(CP2, IndexFlavor.I_SERIES, 2)
    assert report.verdict == "INDETERMINATE"
    assert report.meta["per_point_n"] == [22, -2, 22]
    assert report.meta["first_offending_coefficient"] == 1
    q1 = index_series(CP2, IndexFlavor.I_SERIES, 1).q_coefficient(1)
    expected = {0: 468}
    for e, n in ((2, -2), (4, -4), (6, -4), (8, -4), (10, -2), (12, -2)):
        expected[e] = n
        expected[-e] = n
    assert q1 == RationalFunction.from_laurent(W(expected))


def test_rigidity_cp2_odd_tower_vanishes():
    report = check_rigidity(CP2, IndexFlavor.J_SERIES, 3)
    assert report.verdict == "VANISHING"


def test_rigidity_negative_control_names_offender(rng):
    mixed = fixture(1, ((1,), 0, Z8), ((2,), 0, Z8), label="anomaly-inconsistent")
    report = check_rigidity(mixed, IndexFlavor.I_SERIES, 2)
    assert report.verdict in ("NON-RIGID", "INDETERMINATE")
    failure = report.first_failure
    assert failure is not None
    assert failure.coefficient  # the offending coefficient is printed


# classification: branch prediction against observed behavior


def test_classify_sphere_branch_i():
    from e8theta.index import classify

    report = classify(S2, IndexFlavor.I_SERIES, 5)
    assert report.verdict == "VANISHING (branch i, n=-1): consistent"
    assert report.ok


def test_classify_cp1_spinc_branch_iii():
    from e8theta.index import classify

    report = classify(CP1_SPINC, IndexFlavor.I_SERIES, 5)
    assert report.verdict == "VANISHING (branch iii, n=2): consistent"
    assert report.ok


def test_classify_no_prediction_outside_branches():
    from e8theta.index import classify

    # n = 4 - 1 = 3 hits no branch; whatever is observed is only reported
    fx = fixture(1, ((1,), 0, (2, 0, 0, 0, 0, 0, 0, 0)))
    report = classify(fx, IndexFlavor.I_SERIES, 1)
    assert report.meta["branch"] == "none"
    assert report.meta["predicted"] is None
    assert report.ok


def test_classify_spin_case_carries_rarita_schwinger_note():
    from e8theta.index import classify

    report = classify(S2, IndexFlavor.I_SERIES, 2)
    assert any("Rarita-Schwinger" in (i.detail or "") for i in report.items)


# evaluation at the identity


def test_identity_values_sphere_zero():
    report = evaluate_at_identity(index_series(S2, IndexFlavor.I_SERIES, 3))
    assert report.ok and report.meta["values"] == [0, 0, 0, 0]


def test_identity_values_cp2_are_integers():
    report = evaluate_at_identity(index_series(CP2, IndexFlavor.I_SERIES, 3))
    assert report.ok
    # order zero: Euler characteristics of the sheaf and its Serre twist, 1 + 1
    assert report.meta["values"][0] == 2
    assert report.meta["values"][1] == 432


def test_identity_single_point_reports_pole():
    report = evaluate_at_identity(index_series(SINGLE, IndexFlavor.I_SERIES, 1))
    assert not report.ok
    assert "pole" in report.first_failure.detail
