"""
Weierstrass data with a pole in g
=================================

f = z^2, g = 1/z has a pole at 0, yet f g^2 = 1 is analytic and the
cancelled phi = (z^2 - 1, i(z^2 + 1), 2z) is entire.  Supplying phi directly
avoids the pole altogether; the raw (f, g) form can only be evaluated away
from it.
"""

import numpy as np

from wrep import (
    ParamDomain, SingularEvaluationError, from_phi, make_phi, phi_at, sample_grid, triangulate,
)

raw = make_phi("z^2", "1/z", basepoint=0.5)
cancelled = from_phi("z^2 - 1", "i*(z^2 + 1)", "2*z", note="f=z^2, g=1/z")

z = np.array([0.5 + 0.5j, -0.3 + 0.8j])
print("raw vs cancelled phi agree:", np.allclose(phi_at(raw, z), phi_at(cancelled, z)))

try:
    phi_at(raw, 0)
except SingularEvaluationError as exc:
    print("raw form at the pole:", exc)
print("cancelled form at 0:", phi_at(cancelled, 0))

# excluding a disk around the pole drops the center sample and its fan
dom = ParamDomain.disk(1.0, 16, 16, excluded=[(0, 0.01)])
grid = sample_grid(cancelled, dom)
mesh = triangulate(grid)
print("skipped:", grid.skip_counts, "faces:", len(mesh.faces))
