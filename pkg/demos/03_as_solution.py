# %% [markdown]
# # Computing an Ablowitz-Segur solution on the real line
#
# The solution is anchored at x = 12, where it is an exponentially small
# Airy perturbation of a slowly decaying background, and integrated to the left.

# %%
import numpy as np

from pii_totals import PIIProblem, SolverConfig, integrate

problem = PIIProblem.from_values(0.25, 0.35)
traj = integrate(problem, -60.0)
for x in (-60, -30, -10, 0, 5, 12):
    print(f"u({x:>4}) = {traj(x).real: .12f}")

# %% [markdown]
# The answer should not depend on where the anchor sits.

# %%
for L in (10, 12, 14):
    print(L, integrate(problem, -1.0, SolverConfig(anchor_L=L))(0.0).real)

# %% [markdown]
# For x -> -infinity the solution oscillates with amplitude ~ (-x)^{-1/4}.

# %%
xs = np.linspace(-60, -50, 2001)
print("max |u| * 60^{1/4} on [-60, -50]:", np.max(np.abs(traj(xs))) * 60**0.25)

# %% [markdown]
# Purely imaginary parameters give a purely imaginary solution.

# %%
t = integrate(PIIProblem.from_values(0.3j, 0.4j), -20.0)
print(t(0.0), t(-20.0))
