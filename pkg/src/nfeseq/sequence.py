"""Natural complete nFe-sequences and the exact closed form.

An nFe-sequence obeys ``w(n) = w(n-2) - w(n-1)``.  Given the initial values
``w1`` and ``w2`` the closed form

    Omega(n) = eta * F(-n) + gamma * F(-n+1) * phi

reproduces the sequence at every integer ``n`` when the coefficients are

    eta = w1,    gamma = (w1 + w2) / phi.

All values on this path are :class:`~nfeseq.golden.GoldenNumber` instances,
so every identity is checked with exact equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .complexvalue import as_complex
from .errors import DomainError
from .fibonacci import fib_pair
from .golden import ONE, PHI, GoldenNumber, golden_to_float, phi_power

_INV_PHI = PHI.inverse()


def _is_exact_like(value) -> bool:
    if isinstance(value, bool):
        return False
    return isinstance(value, (GoldenNumber, int, Fraction))


def _agree(exact: GoldenNumber, approx: complex) -> bool:
    x = golden_to_float(exact)
    scale = max(1.0, abs(x), abs(approx))
    return abs(approx - x) <= 4 * math.ulp(scale)


@dataclass(frozen=True)
class NfeCoefficients:
    """The coefficient pair ``(eta, gamma)`` that indexes a closed form.

    The exact fields hold GoldenNumbers and are ``None`` for coefficients
    that only exist numerically.  The complex fields are always populated;
    when both are supplied they must agree to a few ulps.
    """

    eta: GoldenNumber | None = None
    gamma: GoldenNumber | None = None
    eta_c: complex | None = None
    gamma_c: complex | None = None

    def __post_init__(self):
        if (self.eta is None) != (self.gamma is None):
            raise ValueError("eta and gamma must both be exact or both be omitted")
        if self.eta is not None:
            eta = GoldenNumber.coerce(self.eta)
            gamma = GoldenNumber.coerce(self.gamma)
            object.__setattr__(self, "eta", eta)
            object.__setattr__(self, "gamma", gamma)
            for name, exact in (("eta_c", eta), ("gamma_c", gamma)):
                given = getattr(self, name)
                if given is None:
                    object.__setattr__(self, name, complex(golden_to_float(exact)))
                else:
                    z = as_complex(given)
                    if not _agree(exact, z):
                        raise ValueError(f"{name}={z!r} disagrees with exact value {exact}")
                    object.__setattr__(self, name, z)
        else:
            if self.eta_c is None or self.gamma_c is None:
                raise ValueError("coefficients need exact or numeric values")
            object.__setattr__(self, "eta_c", as_complex(self.eta_c))
            object.__setattr__(self, "gamma_c", as_complex(self.gamma_c))

    @classmethod
    def of(cls, eta, gamma) -> NfeCoefficients:
        """Build exact coefficients when both inputs are exact, numeric otherwise."""
        if _is_exact_like(eta) and _is_exact_like(gamma):
            return cls(eta=eta, gamma=gamma)
        return cls(eta_c=eta, gamma_c=gamma)

    @property
    def is_exact(self) -> bool:
        return self.eta is not None


PRINCIPAL = NfeCoefficients(eta=ONE, gamma=ONE)


def solve_coefficients(omega1, omega2) -> NfeCoefficients:
    """Coefficients whose closed form starts with ``omega1, omega2``.

    >>> c = solve_coefficients(1, GoldenNumber(-1, 1))
    >>> print(c.eta, c.gamma)
    1 1
    """
    w1 = GoldenNumber.coerce(omega1)
    w2 = GoldenNumber.coerce(omega2)
    return NfeCoefficients(eta=w1, gamma=(w1 + w2) * _INV_PHI)


@dataclass(frozen=True)
class NfeSequence:
    """A natural complete nFe-sequence fixed by its first two terms."""

    omega1: GoldenNumber
    omega2: GoldenNumber
    coeffs: NfeCoefficients = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "omega1", GoldenNumber.coerce(self.omega1))
        object.__setattr__(self, "omega2", GoldenNumber.coerce(self.omega2))
        object.__setattr__(self, "coeffs", solve_coefficients(self.omega1, self.omega2))

    def terms(self, count: int) -> list[GoldenNumber]:
        return generate_recurrence(self, count)

    def __call__(self, n: int) -> GoldenNumber:
        """Term ``n`` (any integer) through the closed form."""
        return evaluate_exact(self.coeffs, n)


def generate_recurrence(seq: NfeSequence, count: int) -> list[GoldenNumber]:
    """First ``count`` terms by direct recurrence; element ``k - 1`` is term ``k``."""
    if count < 1:
        raise ValueError("count must be at least 1")
    terms = [seq.omega1, seq.omega2][:count]
    while len(terms) < count:
        terms.append(terms[-2] - terms[-1])
    return terms


def evaluate_exact(coeffs: NfeCoefficients, n: int) -> GoldenNumber:
    """``eta * F(-n) + gamma * F(-n+1) * phi`` in exact arithmetic."""
    if not coeffs.is_exact:
        raise DomainError("exact evaluation needs GoldenNumber coefficients")
    f0, f1 = fib_pair(-n)
    eta, gphi = coeffs.eta, coeffs.gamma.times_phi()
    return GoldenNumber._raw(eta.a * f0 + gphi.a * f1, eta.b * f0 + gphi.b * f1)


def principal_exact(n: int) -> GoldenNumber:
    """Term ``n`` of the principal sequence, ``phi**(1 - n)``."""
    return phi_power(1 - n)
