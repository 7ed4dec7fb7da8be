"""Natural nFe-sequences and their closed form, in exact arithmetic."""

# %% [markdown]
# An nFe-sequence runs the Fibonacci rule backwards: w(n) = w(n-2) - w(n-1).
# Pick any two starting values and generate terms directly.

# %%
from nfeseq import NfeSequence, PHI, evaluate_exact, generate_recurrence, solve_coefficients

seq = NfeSequence(5, 2)
print("recurrence:", [str(t) for t in seq.terms(10)])

# %% [markdown]
# The coefficients eta = w1 and gamma = (w1 + w2)/phi turn the sequence
# into a closed form eta*F(-n) + gamma*F(-n+1)*phi that agrees term by term
# and extends to all integers.

# %%
c = solve_coefficients(5, 2)
print("eta =", c.eta, " gamma =", c.gamma)
print("closed form:", [str(evaluate_exact(c, n)) for n in range(1, 11)])
print("backwards  :", [str(evaluate_exact(c, n)) for n in range(-4, 1)])

# %% [markdown]
# Starting from 1 and phi - 1 gives the principal sequence 1/phi**(n-1),
# with eta = gamma = 1.  Its terms are exactly the table of phi powers.

# %%
principal = NfeSequence(1, PHI - 1)
print("coefficients:", principal.coeffs.eta, principal.coeffs.gamma)
for n in range(-8, 9):
    print(f"n = {n:>2}   phi^{1 - n:<3} = {principal(n)}")
