from fractions import Fraction

from hypothesis import strategies as st

from nfeseq.golden import GoldenNumber

small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def golden_numbers(draw, coefficients=small_fractions):
    return GoldenNumber(draw(coefficients), draw(coefficients))


nonzero_golden = golden_numbers().filter(bool)


def golden(a, b=0) -> GoldenNumber:
    return GoldenNumber(Fraction(a), Fraction(b))
