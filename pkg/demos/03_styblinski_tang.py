"""Gradient descent vs the snake on a family of double-well objectives.

Each member m minimizes f(x; t_m) = (x^4 - 16 x^2 + t_m x) / 2, which has
a global minimum on the negative side and a nearly-as-deep trap on the
positive side.  Plain descent commits to whichever side it starts on;
the coupled snake drags nearly every member into the global basin.
"""

import numpy as np

from snakevqe import STFamily, SnakeConfig, gd_run, snake_run, st_minima

family = STFamily.default(61)
rng = np.random.default_rng(3)
init = rng.uniform(-4.0, 4.0, size=(61, 1))

gd = gd_run(family, eta=0.01, max_iters=1500, grad_tol=1e-6, init=init.copy())

config = SnakeConfig(alpha=2.0, beta=1000.0, eta=0.05, gamma=2e-4,
                     max_iters=18000, grad_tol=1e-6, boundary="clamped", seed=3)
snake = snake_run(family, config, init=init.copy())


def global_fraction(theta):
    hits = 0
    for m in range(1, 61):  # skip t = 0 where both wells are equally deep
        x_global, x_local = st_minima(family.label(m))
        hits += abs(theta[m, 0] - x_global) < abs(theta[m, 0] - x_local)
    return hits / 60


print(f"gradient descent: {100 * global_fraction(gd.theta):5.1f}% of members in the global basin")
print(f"snake:            {100 * global_fraction(snake.theta):5.1f}%")
print("\n   t    init      gd final   snake final")
for m in range(0, 61, 6):
    print(f" {family.label(m):4.1f}  {init[m, 0]: 6.2f}   {gd.theta[m, 0]: 8.4f}  {snake.theta[m, 0]: 8.4f}")
