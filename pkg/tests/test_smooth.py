import math
import random
from decimal import Decimal

import pytest

from conftest import A_PRINTED, AREA_PREFIX, B0_PRINTED, B1_PRINTED, B2_PRINTED
from rulecover import numerics
from rulecover.highprec import DecimalBackend, truncate_digits
from rulecover.involute import involute_cover, validate_chain
from rulecover.smooth import (
    SMOOTH_BRACKET,
    SpeedPositivityError,
    cap_antiderivative_288,
    check_speed_positivity,
    curve_point,
    curve_speed,
    discretize_smooth,
    ell_squared_antiderivative,
    involute_points,
    optimize_smooth,
    reproduce_appendix,
    smooth_area,
    smooth_area_parts,
    solve_coefficients,
    unwrapped_length,
)

A_REF = float(Decimal(A_PRINTED))


class TestCoefficients:
    def test_reference_values(self):
        co = solve_coefficients(A_REF)
        assert abs(co.b0 - float(Decimal(B0_PRINTED))) <= 1e-13
        assert abs(co.b1 - float(Decimal(B1_PRINTED))) <= 1e-13
        assert abs(co.b2 - float(Decimal(B2_PRINTED))) <= 1e-13

    def test_constraint_residuals_reference(self):
        co = solve_coefficients(A_REF)
        a = co.a
        # unit length: 2 h(a) = 1
        assert abs(2 * unwrapped_length(co, a) - 2.0) <= 1e-12  # ell(a) = 1
        assert abs(2 * (co.b0 * a + co.b1 * math.sin(a)
                        + co.b2 * math.sin(2 * a) / 2) - 1.0) <= 1e-12
        # zero curvature radius at the ends: g(+-a) = 0
        assert abs(curve_speed(co, a)) <= 1e-12
        assert abs(curve_speed(co, -a)) <= 1e-12
        # tangency: x0(a) = cos a
        assert abs(curve_point(co, a)[0] - math.cos(a)) <= 1e-12

    def test_constraint_residuals_on_grid(self):
        for k in range(100):
            a = 0.9 + 0.4 * k / 99
            co = solve_coefficients(a)
            assert abs(2 * (co.b0 * a + co.b1 * math.sin(a)
                            + co.b2 * math.sin(2 * a) / 2) - 1.0) <= 1e-12
            assert abs(curve_speed(co, a)) <= 1e-12
            assert abs(curve_point(co, a)[0] - math.cos(a)) <= 1e-12

    def test_speed_positivity_window(self):
        check_speed_positivity(solve_coefficients(A_REF))
        with pytest.raises(SpeedPositivityError):
            check_speed_positivity(solve_coefficients(0.95))


class TestCurve:
    def test_through_origin(self):
        co = solve_coefficients(A_REF)
        x, y = curve_point(co, 0.0)
        assert abs(x) <= 1e-15 and abs(y) <= 1e-15

    def test_symmetry(self):
        co = solve_coefficients(A_REF)
        rng = random.Random(11)
        for _ in range(100):
            t = (2 * rng.random() - 1) * co.a
            xp, yp = curve_point(co, t)
            xm, ym = curve_point(co, -t)
            assert abs(xp + xm) <= 1e-14
            assert abs(yp - ym) <= 1e-14

    def test_domain_error(self):
        co = solve_coefficients(A_REF)
        with pytest.raises(ValueError):
            curve_point(co, co.a * 1.01)

    def test_speed_is_derivative(self):
        co = solve_coefficients(A_REF)
        rng = random.Random(5)
        h = 1e-5
        for _ in range(100):
            t = (2 * rng.random() - 1) * (co.a - 2 * h)
            xm, ym = curve_point(co, t - h)
            xp, yp = curve_point(co, t + h)
            speed_fd = math.hypot(xp - xm, yp - ym) / (2 * h)
            assert abs(speed_fd - curve_speed(co, t)) <= 1e-10


class TestInvolutePoints:
    def test_left_end_unwraps_nothing(self):
        co = solve_coefficients(A_REF)
        c1, _ = involute_points(co, -co.a)
        u = curve_point(co, -co.a)
        assert math.dist(c1, u) <= 1e-12
        assert abs(unwrapped_length(co, -co.a)) <= 1e-12

    def test_right_end_reaches_apex(self):
        co = solve_coefficients(A_REF)
        c1, _ = involute_points(co, co.a)
        v = curve_point(co, co.a)
        assert abs(unwrapped_length(co, co.a) - 1.0) <= 1e-12
        assert abs(math.dist(c1, v) - 1.0) <= 1e-12
        assert abs(c1[0]) <= 1e-12  # the apex sits on the symmetry axis

    def test_unit_offset_between_involutes(self):
        co = solve_coefficients(A_REF)
        rng = random.Random(3)
        for _ in range(100):
            t = (2 * rng.random() - 1) * co.a
            c1, c2 = involute_points(co, t)
            assert abs(math.dist(c1, c2) - 1.0) <= 1e-15


class TestArea:
    def test_reference_area_prefix(self):
        co = solve_coefficients(A_REF)
        assert f"{smooth_area(co):.12f}"[:10] == AREA_PREFIX

    def test_cap_antiderivative_zero_at_origin(self):
        co = solve_coefficients(A_REF)
        assert cap_antiderivative_288(co, 0.0) == 0.0

    def test_ell_squared_quadrature_oracle(self):
        co = solve_coefficients(A_REF)
        int_l2, _, _ = smooth_area_parts(co)
        quad = numerics.integrate(lambda t: unwrapped_length(co, t) ** 2,
                                  -co.a, co.a, tol=1e-12)
        assert abs(int_l2 - quad) <= 1e-9
        # and the indefinite form integrates to the same definite value
        definite = (ell_squared_antiderivative(co, co.a)
                    - ell_squared_antiderivative(co, -co.a))
        assert abs(int_l2 - definite) <= 1e-12

    def test_cap_quadrature_oracle(self):
        co = solve_coefficients(A_REF)
        _, _, a_uv = smooth_area_parts(co)

        def integrand(t):
            x0 = curve_point(co, t)[0]
            y0p = -curve_speed(co, t) * math.sin(t)
            return -2.0 * x0 * y0p

        quad = numerics.integrate(integrand, 0.0, co.a, tol=1e-12)
        assert abs(a_uv - quad) <= 1e-9

    def test_apex_triangle(self):
        co = solve_coefficients(A_REF)
        _, a_uvw, _ = smooth_area_parts(co)
        assert abs(a_uvw - math.cos(co.a) * math.sin(co.a)) <= 1e-15


class TestOptimize:
    def test_native_recovers_reference(self, smooth_optimum):
        a, co, area = smooth_optimum
        assert abs(a - A_REF) <= 1e-8
        assert abs(area - 0.5553603686466261) <= 1e-8

    def test_unimodal_on_bracket(self):
        values = [smooth_area(solve_coefficients(0.8 + 0.6 * k / 200))
                  for k in range(201)]
        drops = sum(values[i + 1] < values[i] for i in range(200))
        rises = sum(values[i + 1] > values[i] for i in range(200))
        # strictly down then strictly up: exactly one sign change
        flips = sum((values[i + 1] - values[i]) * (values[i] - values[i - 1]) < 0
                    for i in range(1, 200))
        assert flips == 1 and drops > 0 and rises > 0

    def test_sub_brackets_agree(self, smooth_optimum):
        a_ref = smooth_optimum[0]
        for bracket in ((0.8, 1.2), (1.0, 1.4)):
            a, _, _ = optimize_smooth(tol=1e-12, bracket=bracket)
            assert abs(a - a_ref) <= 1e-8

    def test_area_below_four_edge(self, smooth_optimum):
        from conftest import FOUR_REF_AREA, THREE_REF_AREA, TWO_OPT_AREA

        assert smooth_optimum[2] < FOUR_REF_AREA < THREE_REF_AREA < TWO_OPT_AREA


class TestDiscretize:
    def test_small_chain_admissible(self, smooth_optimum):
        _, co, _ = smooth_optimum
        chain = discretize_smooth(co, 2)
        assert validate_chain(chain) == []
        involute_cover(chain)

    def test_unit_length(self, smooth_optimum):
        _, co, _ = smooth_optimum
        for n in (2, 7, 33):
            chain = discretize_smooth(co, n)
            assert chain.n_edges == n
            assert abs(chain.total_length - 1.0) <= 1e-12

    def test_convergence(self, smooth_optimum):
        _, co, area = smooth_optimum
        errors = []
        for n in (64, 128, 256, 512):
            chain = discretize_smooth(co, n)
            errors.append(abs(involute_cover(chain).area - area))
        assert all(errors[i + 1] < errors[i] for i in range(len(errors) - 1))

    def test_rejects_tiny_n(self, smooth_optimum):
        _, co, _ = smooth_optimum
        with pytest.raises(ValueError):
            discretize_smooth(co, 1)


class TestHighPrecision:
    def test_reference_coefficients_at_40_digits(self):
        be = DecimalBackend(40)
        co = solve_coefficients(Decimal(A_PRINTED), be)
        assert truncate_digits(co.b0, 20) == truncate_digits(Decimal(B0_PRINTED), 20)
        assert truncate_digits(co.b1, 20) == truncate_digits(Decimal(B1_PRINTED), 20)
        assert truncate_digits(co.b2, 20) == truncate_digits(Decimal(B2_PRINTED), 20)
        assert str(smooth_area(co, be)).startswith(AREA_PREFIX)

    def test_reproduce_self_consistency(self):
        r20 = reproduce_appendix(20)
        r40 = reproduce_appendix(40)
        assert r40.area.startswith(r20.area[:19])  # 18 digits + the dot
        assert r40.a.startswith(r20.a[:19])

    def test_reproduce_rejects_low_digits(self):
        with pytest.raises(ValueError):
            reproduce_appendix(10)

    def test_report_text_layout(self):
        rep = reproduce_appendix(20)
        lines = rep.as_text().strip().splitlines()
        assert len(lines) == 6
        assert lines[1].startswith("a  = 1.110732136771472114")


def test_default_bracket_contains_reference():
    assert SMOOTH_BRACKET[0] < A_REF < SMOOTH_BRACKET[1]
