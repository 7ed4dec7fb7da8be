"""negaFibonacci-esque sequences: exact Q(sqrt 5) arithmetic, the explicit
closed form and its complex extension, and golden-spiral geometry."""

from .analytic import (
    EvaluationDomain,
    VerificationReport,
    default_domain,
    evaluate_complex,
    identity_i,
    principal_complex,
    theta,
    verify_binet,
    verify_principal_equivalence,
    verify_recurrence,
)
from .errors import DomainError, IndexOverflow, IoError, NfeError, ParseError, ResolutionError
from .fibonacci import fib, fib_pair, index_limit, set_index_limit
from .golden import (
    ONE,
    PHI,
    ZERO,
    GoldenNumber,
    golden_add,
    golden_inv,
    golden_mul,
    golden_to_float,
    parse_golden,
    phi_power,
)
from .sequence import (
    PRINCIPAL,
    NfeCoefficients,
    NfeSequence,
    evaluate_exact,
    generate_recurrence,
    principal_exact,
    solve_coefficients,
)
from .spiral import SpiralModel, SpiralSegment, build_spiral, segment_recurrence_check

__version__ = "0.1.0"
