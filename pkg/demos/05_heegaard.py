"""
Gluing two solid tori
=====================

Pairs (f, g) of solid-torus elements whose boundary values agree after the
gluing map.  S and T generate; the check is that they satisfy the sphere
relations.
"""

# %%
from ncsphere.heegaard import (
    MINUS,
    PLUS,
    a_generator,
    d_normalize,
    pi_theta,
    rho_theta,
    sphere_generators,
    verify_boundary_maps,
    verify_pair_presentation,
)

# %%
print(d_normalize(PLUS, ["v", "y"]))
print(d_normalize(MINUS, ["u", "x"]))

# %% gluing swaps the torus generators
print(rho_theta(a_generator(MINUS, "U")), rho_theta(a_generator(MINUS, "V") * a_generator(MINUS, "U")))

# %%
S, T = sphere_generators()
print(S.is_compatible(), T.is_compatible(), pi_theta(T.right))
print(verify_pair_presentation().to_json())
print(verify_boundary_maps(100, 42).summary())
