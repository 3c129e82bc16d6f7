"""Escaping local minima of a two-parameter ansatz with several basins.

Extending the hydrogen entangler with exp(-i t2 (2 X0 + 1.5 X1)) breaks
particle-number conservation unless t2 = 0, so the true ground state
always sits on the t2 = 0 plane while spurious minima appear away from
it.  Descent started inside such a trap stays there; the collective run
pulls every bond length back onto the symmetry plane.
"""

import numpy as np

from snakevqe import (
    HamiltonianFamily,
    SnakeConfig,
    VQEFamily,
    builtin,
    gd_run,
    grid_local_minima,
    grid_scan_min,
    snake_run,
    synth_h2_family,
)

family = synth_h2_family(54, 0.25, 2.85)
ansatz = builtin("h2_nonconvex")
vqe = VQEFamily(family, ansatz)

member = 13
ham = family.hamiltonians[member]
_, best = grid_scan_min(ansatz, ham, 256)
traps = [(th, e) for th, e in grid_local_minima(ansatz, ham, 256) if abs(th[1]) > 0.5]
print(f"member {member} (lambda = {family.lambdas[member]:.2f}): "
      f"{len(traps)} local basins away from the t2 = 0 plane, global E = {best:.5f}")

trap_theta, trap_energy = traps[0]
single = HamiltonianFamily(family.parameter_name, (family.points[member],))
gd = gd_run(VQEFamily(single, ansatz), eta=0.02, max_iters=5000, grad_tol=1e-10,
            init=trap_theta.reshape(1, 2))
print(f"descent from the trap at {np.round(trap_theta, 3)} stays at "
      f"t2 = {gd.theta[0, 1]:+.3f}, E - E* = {gd.values[0] - best:.3e}")

config = SnakeConfig(alpha=2.0, beta=100.0, eta=0.05, gamma=2e-3, max_iters=3000,
                     grad_tol=1e-6, boundary="clamped", seed=0)
snake = snake_run(vqe, config)
print(f"snake over all 54 members: max |t2| = {np.max(np.abs(snake.theta[:, 1])):.2e}, "
      f"worst E - E* = {np.max(snake.values - [grid_scan_min(ansatz, h, 256)[1] for h in family.hamiltonians]):.2e}")
