"""
From Weierstrass data to a surface point
========================================

Enneper's surface comes from f = 1, g = z.  We build the null curve phi,
look at its complex square, and integrate it to a point of the surface.
"""

import numpy as np

from wrep import cvec_square, first_derivs, integrate_phi, make_phi, phi_at, surface_point

d = make_phi("1", "z")
for k, p in enumerate(d.phi, 1):
    print(f"phi{k} = {p}")

# phi(2) = (-3, 5i, 4): a complex vector whose (non-Hermitian) square vanishes
p = phi_at(d, 2)
print("phi(2) =", p, " phi(2)^2 =", cvec_square(p))

# Phi(1) by adaptive Gauss-Legendre along the segment from the basepoint 0;
# the antiderivative (z - z^3/3, i(z + z^3/3), z^2) gives (2/3, 4i/3, 1)
print("Phi(1) =", integrate_phi(d, 1))
print("x(1)   =", surface_point(d, 1))

# x_u = Re phi and x_v = -Im phi are orthogonal and of equal length everywhere
z = np.array([0.3 + 0.4j, -0.7 + 0.1j, 0.2 - 0.9j])
x_u, x_v = first_derivs(d, z)
print("x_u . x_v  =", np.einsum("ij,ij->i", x_u, x_v))
print("|x_u|^2 - |x_v|^2 =", np.einsum("ij,ij->i", x_u, x_u) - np.einsum("ij,ij->i", x_v, x_v))
