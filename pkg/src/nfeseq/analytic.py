"""Complex-argument extension of the closed form.

``(-1)**n`` is taken as ``exp(i*pi*n)`` and ``phi**n`` as ``exp(n*ln(phi))``
with the real logarithm.  With that pairing of branches

    Theta(n) = (phi**n - (-phi)**(-n)) / sqrt(5)
    Omega(n) = eta * I(n-1) * Theta(n) + gamma * I(n) * Theta(n-1) * phi

satisfies ``Omega(n) = Omega(n-2) - Omega(n-1)`` for every complex ``n`` and
``Omega`` with ``eta = gamma = 1`` equals ``phi**(1-n)``.  The ``verify_*``
helpers sample these identities on a rectangular grid and return a
:class:`VerificationReport` instead of raising.

All evaluation functions accept a scalar or an array of points.  Scalars
come back as ``complex``, arrays as ``numpy.ndarray`` of ``complex128``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .fibonacci import fib
from .golden import PHI_FLOAT, golden_to_float
from .sequence import PRINCIPAL, NfeCoefficients, principal_exact

LN_PHI = math.log(PHI_FLOAT)
SQRT5 = math.sqrt(5.0)

#: Largest ``|Im(n)|`` a verification grid may reach; ``exp(pi*6)`` ~ 1.5e8.
IM_BOUND = 6.0

DEFAULT_TOL = 1e-9
#: Tolerance for comparing the complex path with exact values at integers.
CROSS_CHECK_TOL = 1e-12


def _points(n) -> tuple[np.ndarray, bool]:
    arr = np.asarray(n, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise ValueError("evaluation points must be finite")
    return arr, arr.ndim == 0


def _result(arr: np.ndarray, scalar: bool):
    if not np.all(np.isfinite(arr)):
        raise OverflowError("result is not representable in double precision")
    return complex(arr) if scalar else arr


def _cispi(x: np.ndarray) -> np.ndarray:
    """``exp(i*pi*x)`` for real ``x`` with exact values at multiples of 1/2."""
    r = x - 2.0 * np.round(x / 2.0)
    q = np.round(2.0 * r)
    s = np.pi * (r - q / 2.0)
    c, sn = np.cos(s), np.sin(s)
    quad = np.mod(q, 4.0)
    re = np.select([quad == 0, quad == 1, quad == 2], [c, -sn, -c], sn)
    im = np.select([quad == 0, quad == 1, quad == 2], [sn, c, -sn], -c)
    return re + 1j * im


def _identity(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        mag = np.exp(-np.pi * z.imag)
    if not np.all(np.isfinite(mag)):
        raise OverflowError("exp(-pi*Im(n)) overflows")
    return mag * _cispi(z.real)


def _phi_pow(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        return np.exp(z * LN_PHI)


def _theta(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore", invalid="ignore"):
        return (_phi_pow(z) - _identity(-z) * _phi_pow(-z)) / SQRT5


def identity_i(n):
    """``(-1)**n`` extended to complex ``n`` as ``exp(i*pi*n)``."""
    z, scalar = _points(n)
    return _result(_identity(z), scalar)


def theta(n):
    """Continuous Binet function; equals ``F(n)`` at integers."""
    z, scalar = _points(n)
    return _result(_theta(z), scalar)


def _coeffs(coeffs) -> NfeCoefficients:
    if isinstance(coeffs, NfeCoefficients):
        return coeffs
    eta, gamma = coeffs
    return NfeCoefficients.of(eta, gamma)


def _omega(c: NfeCoefficients, z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore", invalid="ignore"):
        first = _identity(z - 1.0) * _theta(z)
        second = _identity(z) * _theta(z - 1.0) * PHI_FLOAT
        return c.eta_c * first + c.gamma_c * second


def evaluate_complex(coeffs, n):
    """``Omega(n)`` for complex ``n`` in double precision.

    ``coeffs`` is an :class:`NfeCoefficients` or an ``(eta, gamma)`` pair.
    """
    z, scalar = _points(n)
    return _result(_omega(_coeffs(coeffs), z), scalar)


def principal_complex(n):
    """``phi**(1 - n)`` on the real-logarithm branch."""
    z, scalar = _points(n)
    return _result(_phi_pow(1.0 - z), scalar)


@dataclass(frozen=True)
class EvaluationDomain:
    """Rectangular grid ``re_range x im_range`` with ``counts`` samples per axis."""

    re_range: tuple[float, float]
    im_range: tuple[float, float]
    counts: tuple[int, int]

    def __post_init__(self):
        for name in ("re_range", "im_range"):
            lo, hi = (float(v) for v in getattr(self, name))
            if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
                raise ValueError(f"{name} must be a finite interval with lo <= hi")
            object.__setattr__(self, name, (lo, hi))
        if max(abs(v) for v in self.im_range) > IM_BOUND:
            raise ValueError(f"|Im(n)| is capped at {IM_BOUND} on verification grids")
        n_re, n_im = (int(c) for c in self.counts)
        if n_re < 1 or n_im < 1:
            raise ValueError("grid counts must be positive")
        object.__setattr__(self, "counts", (n_re, n_im))

    @classmethod
    def from_step(cls, re_range, im_range, step: float) -> EvaluationDomain:
        """Grid with spacing ``step`` on both axes, endpoints included."""
        if not step > 0:
            raise ValueError("step must be positive")

        def count(rng):
            lo, hi = rng
            return int(round((hi - lo) / step)) + 1

        return cls(tuple(re_range), tuple(im_range), (count(re_range), count(im_range)))

    def points(self) -> np.ndarray:
        re = np.linspace(*self.re_range, self.counts[0])
        im = np.linspace(*self.im_range, self.counts[1])
        return (re[:, None] + 1j * im[None, :]).ravel()

    def __len__(self):
        return self.counts[0] * self.counts[1]


def default_domain() -> EvaluationDomain:
    """Re in [-8, 8] and Im in [-2, 2], step 0.5."""
    return EvaluationDomain.from_step((-8.0, 8.0), (-2.0, 2.0), 0.5)


class Failure(NamedTuple):
    point: complex
    residual: float
    detail: str = ""


@dataclass
class VerificationReport:
    """Outcome of a residual check over a set of sample points."""

    name: str
    tol: float
    cases: int = 0
    max_residual: float = 0.0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, points, residuals, detail: str = "") -> None:
        points = np.ravel(points)
        residuals = np.ravel(residuals)
        self.cases += residuals.size
        if residuals.size:
            self.max_residual = max(self.max_residual, float(np.max(residuals)))
        for k in np.flatnonzero(~(residuals <= self.tol)):
            self.failures.append(Failure(complex(points[k]), float(residuals[k]), detail))

    def merge(self, other: VerificationReport) -> None:
        self.cases += other.cases
        self.max_residual = max(self.max_residual, other.max_residual)
        self.failures.extend(other.failures)


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise ValueError("tolerance must be positive")


def _recurrence_residual(c: NfeCoefficients, z: np.ndarray) -> np.ndarray:
    here = _omega(c, z)
    back2 = _omega(c, z - 2.0)
    back1 = _omega(c, z - 1.0)
    scale = np.maximum(1.0, np.maximum(np.abs(back2), np.abs(back1)))
    return np.abs(here - (back2 - back1)) / scale


def verify_recurrence(coeffs, domain: EvaluationDomain, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Check ``Omega(n) = Omega(n-2) - Omega(n-1)`` at every grid point.

    ``coeffs`` may be one coefficient set or a sequence of them; the report
    aggregates over all of them.  Residuals are relative to
    ``max(1, |Omega(n-2)|, |Omega(n-1)|)``.
    """
    _check_tol(tol)
    if isinstance(coeffs, NfeCoefficients) or _is_pair(coeffs):
        coeffs = [coeffs]
    z = domain.points()
    report = VerificationReport("recurrence", tol)
    for k, c in enumerate(coeffs):
        c = _coeffs(c)
        res = _recurrence_residual(c, z)
        report.record(z, res, f"coeffs[{k}] eta={c.eta_c} gamma={c.gamma_c}")
    return report


def _is_pair(obj) -> bool:
    return (
        isinstance(obj, tuple)
        and len(obj) == 2
        and not any(isinstance(x, (NfeCoefficients, tuple)) for x in obj)
    )


def verify_principal_equivalence(domain: EvaluationDomain, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Compare ``Omega`` with ``eta = gamma = 1`` against ``phi**(1 - n)``.

    Real integer grid points are additionally compared with the exact
    principal term at :data:`CROSS_CHECK_TOL`.
    """
    _check_tol(tol)
    z = domain.points()
    omega = _omega(PRINCIPAL, z)
    target = _phi_pow(1.0 - z)
    scale = np.maximum(1.0, np.maximum(np.abs(omega), np.abs(target)))
    report = VerificationReport("principal", tol)
    report.record(z, np.abs(omega - target) / scale, "Omega_{1,1} vs phi^(1-n)")

    integer = (z.imag == 0) & (z.real == np.round(z.real))
    cross = VerificationReport("principal-exact", CROSS_CHECK_TOL)
    for point, value in zip(z[integer], omega[integer]):
        exact = golden_to_float(principal_exact(int(point.real)))
        residual = abs(value - exact) / max(1.0, abs(exact))
        cross.record([point], [residual], "complex path vs exact principal term")
    report.merge(cross)
    return report


def verify_binet(n_min: int = -70, n_max: int = 70, tol: float = 1e-10) -> VerificationReport:
    """Compare ``theta`` with exact ``fib`` at every integer in ``[n_min, n_max]``."""
    _check_tol(tol)
    if n_min > n_max:
        raise ValueError("empty integer range")
    ns = np.arange(n_min, n_max + 1)
    approx = _theta(ns.astype(np.complex128))
    exact = [fib(int(k)) for k in ns]
    residuals = [abs(a - e) / max(1.0, abs(e)) for a, e in zip(approx, exact)]
    report = VerificationReport("binet", tol)
    report.record(ns.astype(np.complex128), np.array(residuals), "theta(n) vs F(n)")
    return report


def random_coefficients(count: int, seed: int | None = 0, scale: float = 5.0) -> list[NfeCoefficients]:
    """``count`` numeric coefficient sets with components uniform in ``[-scale, scale]``."""
    rng = np.random.default_rng(seed)
    raw = rng.uniform(-scale, scale, size=(count, 4))
    return [
        NfeCoefficients(eta_c=complex(a, b), gamma_c=complex(c, d))
        for a, b, c, d in raw
    ]

