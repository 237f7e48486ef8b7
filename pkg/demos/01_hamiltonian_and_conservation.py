"""Build the hybrid Hamiltonian and check what it conserves.

The probe Q and mediator M share one conserved quantity, the total z
polarisation. Flip-flop terms move an excitation between Q and M without
changing that total, which is why H is block diagonal in the {|01>, |10>}
sector.
"""

import numpy as np

from temporal_witness import HamiltonianParams, build_hqm, check_conservation
from temporal_witness.hamiltonians import conserved_observable

np.set_printoptions(precision=3, suppress=True)

p = HamiltonianParams(a=0.4, b=-0.2, c=1.0, f=0.7, g=0.3, r=0.1)
h = build_hqm(p)
print("H_QM (basis |QM> = 00, 01, 10, 11):")
print(h)

print("\n|[H, Sigma_z]| =", check_conservation(h))
print("Sigma_z diagonal:", np.diag(conserved_observable()).real)

# Only the middle block mixes; its splitting sets the oscillation frequency.
block = h[1:3, 1:3]
w = np.linalg.eigvalsh(block)
omega = np.sqrt((p.a - p.b) ** 2 + 4 * (p.f**2 + p.g**2))
print("\nflip-flop block eigenvalue gap:", w[1] - w[0], " 2*Omega:", 2 * omega)

# Weighting the two z terms differently breaks the conservation law.
weighted = np.diag([1.0, 0.5, -0.5, -1.0])
print("|[H, a qz + b mz]| with a != b:", np.max(np.abs(h @ weighted - weighted @ h)))
