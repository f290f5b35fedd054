"""
Strong connection and projectors
================================

s(f) = sum over degrees of (f_n (x) 1) ell(n).  The legs of ell(n) give an
idempotent matrix over the degree-zero subalgebra.
"""

# %%
from ncsphere.bundle import projector, verify_projector
from ncsphere.connection import strong_s, verify_connection
from ncsphere.ncalg import a, b_star, z

# %%
print(strong_s(a))
print(strong_s(z * b_star))
print(verify_connection(4, 100, 42).summary())

# %% charge one is the Bott projector
print(projector(1).show())

# %% higher charges: exact idempotency and unit trace
for n in (2, 3, -2):
    print(verify_projector(n).summary())
print(projector(2).show())
