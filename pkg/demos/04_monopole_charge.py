"""
Numerical Chern numbers
=======================

Classical limit q = 1, midpoint grid in (theta, psi).  Convergence is
checked by halving the spacing.
"""

# %%
import numpy as np

from ncsphere.bundle import chern_number, projector_defects

# %%
for n in (1, -1, 2, 3):
    c200, c400 = chern_number(n, 200), chern_number(n, 400)
    print(f"n={n:+d}  grid200={c200:.10f}  grid400={c400:.10f}  drift={abs(c400 - c200):.1e}")

# %% convergence for charge one
grids = np.array([25, 50, 100, 200])
errs = np.array([abs(chern_number(1, g) + 1) for g in grids])
print(np.c_[grids, errs])

# %% the classical matrices really are projectors
print(projector_defects(2, 64))
