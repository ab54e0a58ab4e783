"""Bound kit, brute-force oracle, sign scans, and the appendix tables.

Oracles here are deliberately primitive: literal re-typings of the finite
series parts, Wronskians of those parts multiplied out at runtime, dense
finite-difference grids, and the closed-form minimizer as the counterpart
of the brute grid search.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticetheta import DomainError, HalfPlanePoint
from latticetheta import polydata
from latticetheta.functionals import FunctionalKind, XYABKind, minimizer, w_eval, xyab
from latticetheta.verifier import (
    appendix_margins,
    appendix_poly,
    bound_kit,
    brute_minimize,
    case_c_margin,
    case_d_margin,
    delta_q,
    eval_table,
    mu,
    n0_of,
    over_theta,
    q_of,
    run_suite,
    series_split,
    sigma_bound,
    theta_w1_lower,
    theta_w2_lower,
    under_theta,
    x_monotonicity_scan,
)

W1, W2 = FunctionalKind.W1, FunctionalKind.W2
SQRT3_HALF = math.sqrt(3.0) / 2.0

# the three printed constants our recomputation genuinely misses at 1e-6
DOCUMENTED_MARGIN_MISSES = {"v3_pair_main", "v3_pair_envelope", "pxy_minus_deriv"}
# printed thresholds carrying fewer correct digits than their display
DOCUMENTED_THRESHOLD_MISSES = {"rho1", "rho2", "sigma2b", "alpha0", "theta_alpha0"}


# ---------------------------------------------------------------------------
# bound kit


class TestBoundKit:
    def test_mu_frozen_and_decreasing(self):
        assert mu(1.0) == pytest.approx(3.2279817973522893e-4, rel=1e-12)
        grid = np.linspace(0.25, 4.0, 200)
        vals = [mu(float(x)) for x in grid]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    @given(st.floats(min_value=0.21, max_value=6.0))
    def test_envelope_pair_brackets_center(self, X):
        center = 4 * math.pi * math.exp(-math.pi * X)
        assert under_theta(X) <= center <= over_theta(X)
        assert under_theta(X) > 0

    def test_envelope_pair_needs_large_argument(self):
        with pytest.raises(DomainError):
            under_theta(0.15)
        with pytest.raises(DomainError):
            over_theta(0.2)

    def test_delta_q_frozen(self):
        assert q_of(0.5) == pytest.approx(math.pi, abs=1e-15)
        assert delta_q(0.5) == pytest.approx(0.18882258522, abs=1e-10)

    @given(st.floats(min_value=0.05, max_value=0.9))
    def test_delta_q_increases_with_x(self, x):
        assert delta_q(x) < delta_q(x + 0.05)

    def test_n0_steps_past_the_peak(self):
        assert n0_of(0.5) == 2
        assert n0_of(0.2) == 3
        with pytest.raises(DomainError):
            n0_of(0.6)

    @given(st.floats(min_value=0.01, max_value=0.5))
    def test_n0_exceeds_half_reciprocal(self, x):
        assert n0_of(x) > 1 / (2 * x)

    def test_sigma_frozen_values(self):
        assert sigma_bound(1, SQRT3_HALF) == pytest.approx(2.7813754e-6, rel=1e-7)
        assert sigma_bound(2, SQRT3_HALF) == pytest.approx(1.1410573e-3, rel=1e-7)
        assert sigma_bound(3, SQRT3_HALF) == pytest.approx(5.0038878e-3, rel=1e-7)
        assert sigma_bound(4, SQRT3_HALF) == pytest.approx(3.2550113e-7, rel=1e-7)
        with pytest.raises(DomainError):
            sigma_bound(5, 1.0)

    def test_sigma_decreasing_in_y(self):
        for j in (1, 2, 3, 4):
            vals = [sigma_bound(j, y) for y in np.linspace(0.6, 3.0, 50)]
            assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_case_margins_frozen(self):
        assert case_c_margin() == pytest.approx(0.15562380609, abs=1e-9)
        assert case_d_margin() == pytest.approx(0.7866071958, abs=1e-8)
        # the faithful long-side endpoint is smaller but still positive
        assert case_d_margin(0.5) == pytest.approx(0.55157729763, abs=1e-9)

    def test_case_margins_positive_on_their_intervals(self):
        # short-side case covers x <= 2/5, long-side case x in [1/3, 1/2]
        for x in np.linspace(0.02, 0.4, 60):
            assert case_c_margin(float(x)) > 0
        for x in np.linspace(1 / 3, 0.5, 60):
            assert case_d_margin(float(x)) > 0

    def test_case_bounds_agree_at_the_interface(self):
        # short-side bound at x = 1/3 equals long-side bound at x = 1/2
        assert case_c_margin(1 / 3) == pytest.approx(case_d_margin(0.5), rel=1e-14)

    def test_w1_lower_bound_frozen_and_positive(self):
        assert theta_w1_lower(SQRT3_HALF, 0.05) == pytest.approx(0.19333973, abs=1e-8)
        for y in np.linspace(SQRT3_HALF, 10.0, 80):
            assert theta_w1_lower(float(y), 0.05) > 0

    def test_w2_lower_bound_frozen_triple(self):
        assert theta_w2_lower(0.0, math.sqrt(15.0) / 4, 20) == pytest.approx(
            0.0450964128, abs=1e-8
        )
        assert theta_w2_lower(0.25, math.sqrt(55.0) / 8, 20) == pytest.approx(
            0.1583739562, abs=1e-8
        )
        assert theta_w2_lower(0.375, SQRT3_HALF, 20) == pytest.approx(
            0.3525036217, abs=1e-8
        )

    def test_bundle_matches_scalars(self):
        kit = bound_kit(0.5, 0.4, 1.0)
        assert kit.mu == mu(0.5)
        assert kit.under_theta == under_theta(0.5)
        assert kit.over_theta == over_theta(0.5)
        assert kit.delta == delta_q(0.4)
        assert kit.q == q_of(0.4)
        assert kit.n0 == n0_of(0.4)
        assert kit.sigma3 == sigma_bound(3, 1.0)


# ---------------------------------------------------------------------------
# brute-force minimization oracle


class TestBruteMinimize:
    @pytest.mark.parametrize(
        "kind, rho",
        [(W1, 0.03), (W1, 0.7), (W1, 2.0), (W2, 0.5), (W2, 10.0)],
    )
    def test_matches_closed_form(self, kind, rho):
        z, val = brute_minimize(kind, rho, grid_n=120)
        ref = minimizer(kind, rho)
        mesh = 2 * max(1.0 / 120, 3.25 / 120)
        assert abs(z.x - ref.z.x) <= mesh
        assert abs(z.y - ref.z.y) <= mesh
        # the refinement actually lands much closer than the mesh guarantee
        assert abs(z.x - ref.z.x) <= 1e-6
        assert abs(z.y - ref.z.y) <= 1e-6
        assert val == pytest.approx(w_eval(kind, rho, ref.z), rel=1e-10)

    def test_plateau_weight_lands_on_the_corner(self):
        z, _ = brute_minimize(W1, 0.05, grid_n=110)
        assert abs(z.x - 0.0) <= 1e-6
        assert abs(z.y - 1.0) <= 1e-6

    def test_value_is_certified_at_the_returned_point(self):
        z, val = brute_minimize(W2, 2.0, grid_n=100)
        assert val == pytest.approx(w_eval(W2, 2.0, z), rel=1e-12)

    def test_rejects_coarse_grids(self):
        with pytest.raises(DomainError):
            brute_minimize(W1, 1.0, grid_n=50)


# ---------------------------------------------------------------------------
# x-monotonicity scans


class TestMonotonicityScan:
    @pytest.mark.parametrize(
        "target, region, kwargs",
        [
            ("theta_shifted", "D_G2", {}),
            ("theta", "Omega_C1", {}),
            ("w1", "R2", {"rho": 0.05}),
            ("w2", "R2", {"rho": 20.0}),
            ("w1", "R_L", {"rho": 0.5}),
            ("w2", "R_L", {"rho": 2.0}),
        ],
    )
    def test_expected_sign_everywhere(self, target, region, kwargs):
        assert x_monotonicity_scan(target, region, grid_n=60, **kwargs) == []

    def test_wrong_claim_is_detected(self):
        # theta decreases in x left of 1/2, so claiming growth on R2 must fail
        violations = x_monotonicity_scan("theta", "R2", grid_n=60)
        assert len(violations) > 100
        assert all(v.derivative < 0 for v in violations)

    def test_validation(self):
        with pytest.raises(DomainError):
            x_monotonicity_scan("theta", "R3")
        with pytest.raises(DomainError):
            x_monotonicity_scan("w3", "R2")
        with pytest.raises(DomainError):
            x_monotonicity_scan("w1", "R2", grid_n=20)


# ---------------------------------------------------------------------------
# appendix tables


def _series(terms, y, order):
    """Derivative of sum c*sqrt(y)*exp(-r*pi*y/4), literal Leibniz form."""
    coeffs = (1.0, 0.5, -0.25, 0.375, -0.9375)
    total = 0.0
    for r, c in terms:
        rate = r * math.pi / 4
        for i in range(order + 1):
            total += (
                c
                * math.comb(order, i)
                * coeffs[i]
                * y ** (0.5 - i)
                * (-rate) ** (order - i)
                * math.exp(-rate * y)
            )
    return total


class TestAppendixTables:
    @pytest.mark.parametrize("y", [1.0, 1.38, 2.2])
    def test_pxy_table_is_the_weighted_wronskian(self, y):
        lhs = eval_table(polydata.PXY_PLUS + polydata.PXY_MINUS, y)
        rhs = (16 * y / math.pi) * math.exp(math.pi * y / 4) * (
            _series(polydata.YA_TERMS, y, 2) * _series(polydata.XA_TERMS, y, 1)
            - _series(polydata.XA_TERMS, y, 2) * _series(polydata.YA_TERMS, y, 1)
        )
        assert lhs == pytest.approx(rhs, rel=1e-11)

    @pytest.mark.parametrize("y", [1.0, 1.38, 2.2])
    def test_pab_table_is_the_weighted_wronskian(self, y):
        lhs = eval_table(polydata.PAB_PLUS + polydata.PAB_MINUS, y)
        rhs = (4 * y / math.pi) * math.exp(math.pi * y / 2) * (
            _series(polydata.BA_TERMS, y, 2) * _series(polydata.AA_MONOMIALS, y, 1)
            - _series(polydata.AA_MONOMIALS, y, 2) * _series(polydata.BA_TERMS, y, 1)
        )
        assert lhs == pytest.approx(rhs, rel=1e-11)

    @pytest.mark.parametrize("y", [1.0, 1.11, 1.7])
    def test_fxy_table_is_the_weighted_wronskian(self, y):
        lhs = eval_table(polydata.FXY_WEIGHTED, y)
        rhs = (512 * y**4 / math.pi) * math.exp(math.pi * y / 4) * (
            _series(polydata.YA_TERMS, y, 4) * _series(polydata.XA_TERMS, y, 2)
            - _series(polydata.YA_TERMS, y, 2) * _series(polydata.XA_TERMS, y, 4)
        )
        assert lhs == pytest.approx(rhs, rel=1e-11)

    @pytest.mark.parametrize("y", [1.0, 1.12, 1.7])
    def test_fab_tables_match_their_two_variants(self, y):
        five_term = tuple(t for t in polydata.AA_MONOMIALS if t[0] != 16)

        def wronskian(terms):
            return (32 * y**4 / math.pi) * math.exp(math.pi * y / 2) * (
                _series(polydata.BA_TERMS, y, 4) * _series(terms, y, 2)
                - _series(polydata.BA_TERMS, y, 2) * _series(terms, y, 4)
            )

        assert eval_table(polydata.FAB_WEIGHTED, y) == pytest.approx(
            wronskian(five_term), rel=1e-11
        )
        assert eval_table(polydata.FAB_DERIVED, y) == pytest.approx(
            wronskian(polydata.AA_MONOMIALS), rel=1e-11
        )

    def test_appendix_poly_dispatch_and_derivative(self):
        h = 1e-5
        for name in (
            "PXY_plus",
            "PXY_minus",
            "PAB_plus",
            "PAB_minus",
            "FXY_weighted",
            "FAB_weighted",
        ):
            fd = (appendix_poly(name, 1.4 + h) - appendix_poly(name, 1.4 - h)) / (2 * h)
            assert appendix_poly(name, 1.4, order=1) == pytest.approx(fd, rel=1e-8)

    def test_appendix_poly_validation(self):
        with pytest.raises(DomainError):
            appendix_poly("PXY", 1.5)
        with pytest.raises(DomainError):
            appendix_poly("PXY_plus", 0.9)
        with pytest.raises(DomainError):
            appendix_poly("PXY_plus", 1.5, order=2)

    def test_margin_rows_match_print_except_documented(self):
        rows = appendix_margins()
        assert len(rows) == 19
        assert len({m.name for m in rows}) == 19
        for m in rows:
            if m.name in DOCUMENTED_MARGIN_MISSES:
                assert m.tol < m.diff < 3e-6, m
            else:
                assert m.diff <= m.tol, m

    def test_pxy_total_increasing_on_500_points(self):
        table = polydata.PXY_PLUS + polydata.PXY_MINUS
        for y in np.linspace(1.0, 10.0, 500):
            assert eval_table(table, float(y), order=1) > 0

    def test_fxy_weighted_decreasing_near_one(self):
        for y in np.linspace(1.001, 1.2, 120):
            assert eval_table(polydata.FXY_WEIGHTED, float(y), order=1) < 0

    def test_positivity_margins_hold_out_to_ten(self):
        pxy = polydata.PXY_PLUS + polydata.PXY_MINUS
        pab = polydata.PAB_PLUS + polydata.PAB_MINUS
        for y in np.linspace(1.1, 10.0, 300):
            y = float(y)
            tail = 16 * y * (44 * math.pi + 18 + 36 * y) * math.exp(-4 * math.pi * y)
            assert eval_table(pxy, y) - tail > 0
        for y in np.linspace(1.05, 10.0, 300):
            y = float(y)
            tail = 1352 * math.pi * y**1.5 * math.exp(-6 * math.pi * y)
            assert eval_table(pab, y) - tail > 0


# ---------------------------------------------------------------------------
# series splits


class TestSeriesSplit:
    def test_x_finite_part_is_the_printed_quadrinomial(self):
        y = 1.3
        e = math.exp
        literal = math.sqrt(y) * (
            1 + 4 * e(-math.pi * y) + 4 * e(-2 * math.pi * y) + 4 * e(-4 * math.pi * y)
        )
        assert series_split("Xa", y)[0] == pytest.approx(literal, rel=1e-14)

    def test_y_finite_part_is_the_printed_octonomial(self):
        y = 1.3
        e = math.exp
        literal = math.sqrt(y) * (
            1
            + 2 * e(-math.pi * y / 4)
            + 4 * e(-math.pi * y)
            - 4 * e(-5 * math.pi * y / 4)
            + 4 * e(-2 * math.pi * y)
            + 2 * e(-9 * math.pi * y / 4)
            - 4 * e(-13 * math.pi * y / 4)
            + 4 * e(-4 * math.pi * y)
        )
        assert series_split("Ya", y)[0] == pytest.approx(literal, rel=1e-14)

    def test_a_finite_part_is_monomials_plus_tails(self):
        y = 1.3
        sq, e = math.sqrt(y), math.exp
        v = e(-math.pi * y / 2)
        literal = sq * (1 + 2 * v + 4 * v**4 + 4 * v**5 + 4 * v**8 + 2 * v**9)
        literal += 2 * sq * sum(e(-2 * math.pi * n * n * y) for n in range(2, 8))
        literal += 2 * sq * sum(e(-math.pi * n * n * y / 2) for n in range(4, 12))
        assert series_split("Aa", y)[0] == pytest.approx(literal, rel=1e-14)

    def test_b_finite_part_is_the_printed_quadrinomial(self):
        y = 1.3
        v = math.exp(-math.pi * y / 2)
        literal = math.sqrt(y) * (2 * v - 4 * v**2 + 4 * v**5 + 2 * v**9)
        assert series_split("Ba", y)[0] == pytest.approx(literal, rel=1e-14)

    def test_split_sums_to_certified_value(self):
        for which, kind in (("Xa", XYABKind.X), ("Ya", XYABKind.Y), ("Aa", XYABKind.A), ("Ba", XYABKind.B)):
            for order in (0, 1, 2, 3, 4):
                a, e = series_split(which, 1.45, order)
                assert a + e == pytest.approx(xyab(kind, 1.45, order), rel=1e-12)

    def test_error_signs_at_one(self):
        assert series_split("Xe", 1.0)[1] > 0
        assert series_split("Ye", 1.0)[1] > 0
        assert series_split("Ae", 1.0)[1] > 0
        assert series_split("Be", 1.0)[1] < 0

    @pytest.mark.parametrize("y", [1.0, 1.2, 1.5])
    def test_error_envelopes(self, y):
        # additive slack absorbs binary64 cancellation in full - approx
        slack = 1e-11
        sq = math.sqrt(y)
        for j in range(5):
            _, xe = series_split("Xe", y, j)
            assert abs(xe) <= 10 * (5 * math.pi) ** j * sq * math.exp(-5 * math.pi * y) + slack
            _, ye = series_split("Ye", y, j)
            assert (
                abs(ye)
                <= 5 * (17 * math.pi / 4) ** j * sq * math.exp(-17 * math.pi * y / 4) + slack
            )
            _, ae = series_split("Ae", y, j)
            assert (
                abs(ae)
                <= 6 * (13 * math.pi / 2) ** j * sq * math.exp(-13 * math.pi * y / 2) + slack
            )
            _, be = series_split("Be", y, j)
            assert abs(be) <= 9 * (5 * math.pi) ** j * sq * math.exp(-5 * math.pi * y) + slack

    @pytest.mark.parametrize("y", [1.0, 1.3, 2.0])
    def test_x_tail_explicit_derivative_constants(self, y):
        slack = 1e-12
        sq = math.sqrt(y)
        assert abs(series_split("Xe", y, 1)[1]) <= 41 * math.pi * sq * math.exp(
            -5 * math.pi * y
        ) + slack
        assert abs(series_split("Xe", y, 2)[1]) <= 201 * math.pi**2 * sq * math.exp(
            -5 * math.pi * y
        ) + slack

    def test_y_tail_printed_constants_are_slightly_optimistic(self):
        # The per-term constants 18*pi and 290*pi^2/4 undershoot the true
        # first and second derivative tails near y = 1 by 12-17%; only the
        # looser 5*(17 pi/4)^j coefficient (asserted above) is valid there.
        ye1 = abs(series_split("Ye", 1.0, 1)[1])
        ye2 = abs(series_split("Ye", 1.0, 2)[1])
        assert ye1 > 18 * math.pi * math.exp(-17 * math.pi / 4)
        assert ye2 > (290 * math.pi**2 / 4) * math.exp(-17 * math.pi / 4)
        # past y = 2 the printed constants do hold
        assert abs(series_split("Ye", 2.0, 1)[1]) <= 18 * math.pi * math.sqrt(2) * math.exp(
            -17 * math.pi * 2 / 4
        )

    @pytest.mark.parametrize("y", [1.0, 1.2, 1.5, 2.0, 3.0])
    def test_cross_wronskian_tail_bound(self, y):
        # the statement the per-term constants feed into: the tail part of
        # the XY Wronskian is below (44 pi^2 + 18 pi + 36 pi y) e^{-17 pi y/4}
        ye1 = series_split("Ye", y, 1)[1]
        ye2 = series_split("Ye", y, 2)[1]
        xe1 = series_split("Xe", y, 1)[1]
        xe2 = series_split("Xe", y, 2)[1]
        xp = xyab(XYABKind.X, y, 1)
        xpp = xyab(XYABKind.X, y, 2)
        yap = series_split("Ya", y, 1)[0]
        yapp = series_split("Ya", y, 2)[0]
        lhs = abs(ye2 * xp - ye1 * xpp + yapp * xe1 - xe2 * yap)
        rhs = (44 * math.pi**2 + 18 * math.pi + 36 * math.pi * y) * math.exp(
            -17 * math.pi * y / 4
        )
        assert lhs <= rhs + 1e-12  # slack absorbs cancellation roundoff

    def test_validation(self):
        with pytest.raises(DomainError):
            series_split("Qa", 1.5)
        with pytest.raises(DomainError):
            series_split("Xa", 0.8)
        with pytest.raises(DomainError):
            series_split("Xa", 1.5, order=5)


# ---------------------------------------------------------------------------
# suites


class TestSuites:
    def test_identities_all_pass(self):
        rows = run_suite("identities")
        assert rows and all(r.passed for r in rows)

    def test_thresholds_fail_pattern_is_documented(self):
        rows = run_suite("thresholds")
        failed = {r.name for r in rows if not r.passed}
        assert failed == DOCUMENTED_THRESHOLD_MISSES

    def test_appendix_fail_pattern_is_documented(self):
        rows = run_suite("appendix")
        failed = {r.name for r in rows if not r.passed}
        assert failed == DOCUMENTED_MARGIN_MISSES

    def test_oracle_suite_passes_on_a_modest_grid(self):
        rows = run_suite("oracle", grid_n=110)
        assert len(rows) == 12
        assert all(r.passed for r in rows)

    def test_all_concatenates(self):
        rows = run_suite("all", grid_n=110)
        names = [r.name for r in rows]
        assert "melin_scaling" in names and "rho1" in names
        assert "delta_q_half" in names and "W2_rho100" in names

    def test_unknown_suite(self):
        with pytest.raises(DomainError):
            run_suite("everything")
