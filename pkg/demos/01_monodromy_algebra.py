# %% [markdown]
# # Monodromy data of the Ablowitz-Segur family
#
# The decaying solutions of u'' = x u + 2u^3 - alpha are labelled by (alpha, k).
# Their Stokes multipliers are s1 = -sin(pi alpha) - i k, s2 = 0, s3 = -sin(pi alpha) + i k.
# This script checks the cyclic relation and the closed forms built from these data.

# %%
import math

from pii_totals import matrix2 as m2
from pii_totals import monodromy as md

alpha, k = 0.25, 0.35
s = md.stokes_from_ak(alpha, k)
print("Stokes triple:", s)
print("constraint residual:", md.constraint_residual(s, alpha))

# %% [markdown]
# The connection matrix E ties the Stokes matrices to the formal monodromy M.

# %%
S1, S2, S3 = md.stokes_matrices(s)
E, M = md.connection_E(alpha), md.matrix_M(alpha)
lhs = m2.mat_mul(E, S1, S2, S3)
rhs = m2.mat_mul(m2.SIGMA2, m2.inv(M), E, m2.SIGMA2)
print("connection residual:", m2.frobenius(lhs - rhs))

# %% [markdown]
# K, defined as a product of connection and Stokes factors, turns out diagonal.
# Its diagonal entries encode g = cos^2(pi alpha) - k^2.

# %%
Kd = md.matrix_K_definition(alpha, k)
print("K (definition):\n", Kd)
print("K (closed form):\n", md.matrix_K_closed(alpha, k))

# %% [markdown]
# The total integral follows from the (2,2)-type entry of the limit matrix H.

# %%
H, hp, hm = md.matrix_H_and_limit(alpha, k)
print("2 h_- =", 2 * hm)
print("exp of predicted total =", md.predicted_exp_total(alpha, k))
print("predicted total =", md.predicted_total_integral(alpha, k))
c = math.cos(math.pi * alpha)
print("by hand: ", 0.5 * math.log((c + k) / (c - k)))

# %% [markdown]
# Parameters on the boundary |k| = cos(pi alpha) are refused.

# %%
print(md.classify_family(0, 1))
try:
    md.predicted_total_integral(0, 1)
except md.DivergentFormulaError as exc:
    print("refused:", exc)
