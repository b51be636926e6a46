# %% [markdown]
# # Total integrals
#
# F(X) = int_{-X}^{X} u converges slowly: the remainder oscillates like X^{-3/4}.
# Averaging F over one period of the phase (2/3) X^{3/2} removes the oscillation.

# %%
import math

import numpy as np

from pii_totals import PIIProblem, integrate
from pii_totals.totals import envelope, period_averaged_total, symmetric_integral, tail_fit_total

problem = PIIProblem.from_values(0, 0.5)
target = 0.5 * math.log(3)
traj = integrate(problem, -410.0)
for X in (50, 100, 200, 400):
    print(f"X={X:>3}: raw error {abs(symmetric_integral(traj, X) - target):.2e}, envelope {envelope(traj, X, target):.2e}")

# %%
avg = period_averaged_total(problem, 150.0, 8, traj=traj)
fit = tail_fit_total(problem, 150.0, traj=traj)
print("averaged error:", avg.abs_error)
print("tail-fit error:", fit.abs_error)

# %% [markdown]
# The same machinery checks the real-alpha closed form and the imaginary family.

# %%
for a, k in [(0.25, 0.35), (0.1, -0.6), (0.3j, 0.4j)]:
    r = period_averaged_total(PIIProblem.from_values(a, k), 150.0, 8)
    print(a, k, r.averaged, r.predicted, r.abs_error)

# %% [markdown]
# Envelope slope on a log-log scale, expected near -3/4.

# %%
Xs = np.geomspace(40, 400, 9)
env = [envelope(traj, X, target) for X in Xs]
print("slope:", np.polyfit(np.log(Xs), np.log(env), 1)[0])
