"""
The canonical map and its inverse
=================================

can sends f (x) g to f g_n (x) Z^n for g of degree n; chi is the proposed
inverse.  One direction is a plain identity, the other only holds modulo the
balanced-tensor relations, so it is checked by reduction or linear algebra.
"""

# %%
from ncsphere.galois import TensorPP, can_lift, chi, ell, kernel_certificate, reduce_right_leg, verify_chi_can
from ncsphere.hopf import monomial_tensor, tensor
from ncsphere.ncalg import Monomial, a, a_star, b, one

# %% chi on 1 (x) Z^n
for n in (1, 2, -1):
    print(n, chi(tensor(one, n)))

# %% can o chi = id on a sample pair
t = monomial_tensor(Monomial(1, 0, 0, 2), 3)
print(can_lift(chi(t)) == t)

# %% the other direction needs the relations: chi(can(1 (x) a))
back = chi(can_lift(TensorPP.from_pair(one, a)))
print(back)
print("reduced:", reduce_right_leg(back))
print("matches 1 (x) a directly:", reduce_right_leg(back) == TensorPP.from_pair(one, a))

# %% spanning-family check and exact kernel certificate
print(verify_chi_can(4).summary())
print(kernel_certificate(3).summary())
print(kernel_certificate(2, "i").to_json())
