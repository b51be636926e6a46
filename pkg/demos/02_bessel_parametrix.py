# %% [markdown]
# # The Bessel parametrix near the origin
#
# Phi0(z) = B(z) [[v1, v2], [v1', v2']] is built from two entire series.
# Sector functions Phi^k are right multiples of Phi0.

# %%
import cmath
import math

import numpy as np

from pii_totals import matrix2 as m2
from pii_totals import parametrix as px
from pii_totals.specfun import bessel_pair

alpha = 0.3
for z in (0.5, 2.0, 1 + 1j):
    v1, v1p, v2, v2p = bessel_pair(z, alpha)
    print(f"z={z}: Wronskian - (1 - 2 alpha) = {v1 * v2p - v2 * v1p - (1 - 2 * alpha):.2e}")

# %% [markdown]
# Rotating by pi maps sector k+1 onto sector k after conjugation with sigma2.

# %%
for k in (1, 2):
    print(k, max(px.rotation_residual(k, 0.8 * cmath.exp(1j * t), alpha) for t in np.linspace(-1, 4, 9) if px.sector_window(k).lo < t < px.sector_window(k).hi))

# %% [markdown]
# Near zero, Phi0 z^{-alpha sigma3} tends to a constant matrix.

# %%
print(px.phi0_limit_extrapolated(alpha))
print(px.phi0_regularized_limit(alpha))

# %% [markdown]
# At large |z|, Phi^k e^{-z sigma3} approaches I - i alpha/(2z) sigma1.
# The first correction also has a diagonal piece -alpha^2/(2z) sigma3,
# so the off-diagonal model alone leaves an O(1/z) remainder.

# %%
for r in (10, 20, 40):
    z = r * cmath.exp(1j * math.pi / 2)
    print(r, px.large_z_expansion_residual(1, z, alpha), px.large_z_expansion_residual(1, z, alpha, include_diagonal=True))
