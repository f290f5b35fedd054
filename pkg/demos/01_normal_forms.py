"""
Normal forms on the deformed three-sphere
=========================================

Elements are sums of normal monomials a^p a*^q b^r b*^s (r s = 0) with
Laurent-polynomial coefficients in the formal parameter q.
"""

# %%
import random

from ncsphere.ncalg import a, a_star, b, b_star, lam, normalize, rewrite, star, x_minus, x_plus, z
from ncsphere.parsing import parse_expr, print_b_expr, print_expr

# %% commuting b past a costs a phase
print(print_expr(b * a))
print(print_expr(normalize("b a a' b'")))

# %% the rewriting engine reaches the same answer in any rule order
w = "b' b a' b a b'"
for seed in range(3):
    nf, steps = rewrite(w, rng=random.Random(seed))
    print(seed, steps, print_expr(nf))
print("closed form:", print_expr(normalize(w)))

# %% star is an anti-homomorphism
f = a * b + lam * b_star
print(print_expr(star(f)))

# %% the degree-zero part is generated by z, x+, x-
print(print_b_expr(z * z + x_plus * x_minus))
print(print_expr(x_plus * x_minus), "==", print_expr(z - z * z))

# %% text in, text out
g = parse_expr("(1/2) i a^2 + q' b a")
print(print_expr(g))
