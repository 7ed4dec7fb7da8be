"""Exact arithmetic with a + b*phi.

Run with ``python demos/01_golden_arithmetic.py``.
"""

# %% [markdown]
# Every number here is stored as a pair of rationals on the basis {1, phi}.
# Multiplication folds phi**2 back into phi + 1, so nothing is ever rounded.

# %%
from nfeseq import PHI, ONE, GoldenNumber, fib, golden_to_float, parse_golden, phi_power

print("phi^2      =", PHI * PHI)
print("1/phi      =", 1 / PHI)
print("phi^-2     =", PHI ** -2)
print("(3/2 + phi)^-1 =", 1 / GoldenNumber("3/2", 1))

# %% [markdown]
# Powers of phi are Fibonacci pairs: phi**n = F(n-1) + F(n)*phi, for
# negative n too, where the negaFibonacci numbers take over.

# %%
for n in (-6, -1, 0, 1, 9, 40):
    p = phi_power(n)
    print(f"phi^{n:<3} = {p!s:<28} ~ {golden_to_float(p):.12g}")

# %% [markdown]
# Exactness matters at the small end: phi**-60 has coefficients near 1e12
# with opposite signs, yet both the sign test and the float conversion
# are exact / correctly scaled.

# %%
tiny = phi_power(-60)
print(tiny, "> 0 ?", tiny > 0, " value:", golden_to_float(tiny))

# %% [markdown]
# The integer engine uses fast doubling; a million-index Fibonacci number
# takes well under a second.

# %%
import time

t0 = time.perf_counter()
big = fib(10**6)
print(f"F(10^6) has {big.bit_length()} bits ({time.perf_counter() - t0:.2f}s), last digits {big % 10**12}")
print("parse round-trip:", parse_golden("13 - 8phi") == phi_power(-6) == ONE / phi_power(6))
