import cmath

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nfeseq.analytic import (
    CROSS_CHECK_TOL,
    IM_BOUND,
    EvaluationDomain,
    default_domain,
    evaluate_complex,
    identity_i,
    principal_complex,
    random_coefficients,
    theta,
    verify_binet,
    verify_principal_equivalence,
    verify_recurrence,
)
from nfeseq.fibonacci import fib
from nfeseq.golden import PHI_FLOAT, golden_to_float
from nfeseq.sequence import PRINCIPAL, NfeCoefficients, evaluate_exact, principal_exact

mpmath.mp.dps = 40
MP_PHI = (1 + mpmath.sqrt(5)) / 2

re_part = st.floats(-8, 8, allow_nan=False)
im_part = st.floats(-2, 2, allow_nan=False)
points = st.builds(complex, re_part, im_part)
coefficient = st.builds(complex, st.floats(-5, 5), st.floats(-5, 5))


def mp_omega(eta, gamma, n):
    """Omega in 40-digit arithmetic straight from the definition."""
    n = mpmath.mpc(n)

    def I(z):
        return mpmath.exp(1j * mpmath.pi * z)

    def Theta(z):
        return (mpmath.exp(z * mpmath.log(MP_PHI)) - I(-z) * mpmath.exp(-z * mpmath.log(MP_PHI))) / mpmath.sqrt(5)

    return eta * I(n - 1) * Theta(n) + gamma * I(n) * Theta(n - 1) * MP_PHI


def close(a, b, rel):
    return abs(complex(a) - complex(b)) <= rel * max(1.0, abs(complex(b)))


class TestIdentity:
    def test_examples(self):
        assert identity_i(0) == 1
        assert identity_i(1) == -1
        assert identity_i(0.5) == 1j
        oracle = complex(mpmath.exp(1j * mpmath.pi / 2))
        assert close(identity_i(0.5), oracle, 1e-15)

    @settings(max_examples=300)
    @given(points)
    def test_matches_extended_precision(self, n):
        assert close(identity_i(n), mpmath.exp(1j * mpmath.pi * mpmath.mpc(n)), 1e-13)

    def test_periodicity_on_grid(self):
        z = default_domain().points()
        here = identity_i(z)
        assert np.all(np.abs(identity_i(z + 2) - here) <= 1e-12 * np.abs(here))
        assert np.all(np.abs(identity_i(z + 1) + here) <= 1e-12 * np.abs(here))

    def test_overflow(self):
        with pytest.raises(OverflowError):
            identity_i(complex(0, -300))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            identity_i(complex("nan"))

    def test_array_shape(self):
        out = identity_i(np.array([[0, 1], [0.5, 2]]))
        assert out.shape == (2, 2) and out.dtype == np.complex128


class TestTheta:
    def test_examples(self):
        assert close(theta(1), 1, 1e-15)
        assert theta(0) == 0
        assert close(theta(10), fib(10), 1e-12)

    def test_integer_consistency(self):
        for n in range(-70, 71):
            exact = fib(n)
            assert abs(theta(n) - exact) <= 1e-10 * max(1, abs(exact))

    @settings(max_examples=200)
    @given(points)
    def test_recurrence_forward(self, n):
        # Theta itself satisfies the Fibonacci recurrence, not the nFe one
        lhs, rhs = theta(n), theta(n - 1) + theta(n - 2)
        assert abs(lhs - rhs) <= 1e-10 * max(1, abs(theta(n - 1)), abs(theta(n - 2)))


class TestEvaluateComplex:
    def test_examples(self):
        assert close(evaluate_complex(PRINCIPAL, 1), 1, 1e-15)
        assert close(evaluate_complex((1, 1), 2), PHI_FLOAT - 1, 1e-15)
        n = 0.5 + 0.5j
        expected = PHI_FLOAT ** 0.5 * cmath.exp(-0.5j * cmath.log(PHI_FLOAT))
        assert close(evaluate_complex((1, 1), n), expected, 1e-12)
        assert close(evaluate_complex((1, 1), n), principal_complex(n), 1e-12)

    @settings(max_examples=200)
    @given(coefficient, coefficient, points)
    def test_matches_extended_precision(self, eta, gamma, n):
        got = evaluate_complex((eta, gamma), n)
        ref = mp_omega(eta, gamma, n)
        scale = max(1.0, abs(eta), abs(gamma)) * max(1.0, float(abs(mp_omega(1, 0, n))), float(abs(mp_omega(0, 1, n))))
        assert abs(got - complex(ref)) <= 1e-11 * scale

    def test_integer_points_match_exact_path(self):
        c = NfeCoefficients(eta=3, gamma="1/2 - 2*phi")
        for n in range(-20, 21):
            exact = golden_to_float(evaluate_exact(c, n))
            assert close(evaluate_complex(c, n), exact, 1e-10)

    def test_real_axis_is_real_for_principal(self):
        x = np.linspace(-8, 8, 161)
        values = evaluate_complex(PRINCIPAL, x)
        assert np.all(np.abs(values.imag) <= 1e-9 * np.maximum(1, np.abs(values)))

    @settings(max_examples=100)
    @given(coefficient, coefficient, coefficient, coefficient, points)
    def test_linearity(self, e1, g1, e2, g2, n):
        lhs = evaluate_complex((e1 + e2, g1 + g2), n)
        rhs = evaluate_complex((e1, g1), n) + evaluate_complex((e2, g2), n)
        basis = max(abs(evaluate_complex((1, 0), n)), abs(evaluate_complex((0, 1), n)), 1.0)
        assert abs(lhs - rhs) <= 1e-10 * basis * max(1, abs(e1), abs(e2), abs(g1), abs(g2))


class TestPrincipalComplex:
    def test_examples(self):
        assert principal_complex(1) == 1
        assert close(principal_complex(3), golden_to_float(principal_exact(3)), 1e-15)
        oracle = mpmath.exp((1 - 1j) * mpmath.log(MP_PHI))
        assert close(principal_complex(1j), oracle, 1e-15)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            principal_complex(-2000)


class TestDomain:
    def test_default(self):
        d = default_domain()
        assert d.counts == (33, 9) and len(d) == 297
        z = d.points()
        assert z.real.min() == -8 and z.real.max() == 8
        assert z.imag.min() == -2 and z.imag.max() == 2

    def test_im_cap(self):
        EvaluationDomain((-1, 1), (-IM_BOUND, IM_BOUND), (3, 3))
        with pytest.raises(ValueError):
            EvaluationDomain((-1, 1), (-6.5, 0), (3, 3))

    def test_validation(self):
        with pytest.raises(ValueError):
            EvaluationDomain((1, -1), (0, 0), (3, 1))
        with pytest.raises(ValueError):
            EvaluationDomain((0, 1), (0, 0), (0, 1))
        with pytest.raises(ValueError):
            EvaluationDomain.from_step((0, 1), (0, 0), 0)


class TestVerification:
    def test_principal_recurrence(self):
        d = EvaluationDomain((-5, 5), (-2, 2), (21, 9))
        report = verify_recurrence(PRINCIPAL, d, 1e-9)
        assert report.passed and report.cases == 189

    def test_zero_coefficients(self):
        report = verify_recurrence((0, 0), default_domain())
        assert report.max_residual == 0.0

    def test_complex_coefficients(self):
        d = EvaluationDomain((-5, 5), (-2, 2), (21, 9))
        assert verify_recurrence((3 + 2j, -1), d, 1e-9).passed

    def test_random_coefficients(self):
        report = verify_recurrence(random_coefficients(100, seed=7), default_domain(), 1e-9)
        assert report.passed and report.cases == 100 * 297
        assert report.max_residual <= 1e-9

    def test_unreachable_tolerance_reports_failures(self):
        report = verify_recurrence(random_coefficients(5), default_domain(), 1e-30)
        assert not report.passed
        assert all(f.residual > 1e-30 for f in report.failures)

    def test_larger_imaginary_band(self):
        d = EvaluationDomain.from_step((-8, 8), (-6, 6), 0.5)
        assert verify_recurrence(random_coefficients(10, seed=3), d, 1e-9).passed

    def test_principal_equivalence(self):
        report = verify_principal_equivalence(default_domain(), 1e-9)
        assert report.passed
        # grid points plus the 17 integer cross-checks
        assert report.cases == 297 + 17

    def test_principal_at_one(self):
        assert abs(evaluate_complex(PRINCIPAL, 1) - principal_complex(1)) <= 2.3e-16

    def test_integer_subgrid_cross_check(self):
        for n in range(-8, 9):
            assert close(evaluate_complex(PRINCIPAL, n), golden_to_float(principal_exact(n)), CROSS_CHECK_TOL)

    def test_binet(self):
        report = verify_binet(-70, 70, 1e-10)
        assert report.passed and report.cases == 141

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            verify_recurrence(PRINCIPAL, default_domain(), 0)
