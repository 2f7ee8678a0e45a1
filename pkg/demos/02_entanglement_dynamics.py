"""Entanglement dynamics on bounded lines and their sensitivity to the coin bias.

Reproduces the qualitative behaviour of the balanced and biased runs: regular
oscillation on tiny graphs, irregular quasi-periodic curves on |G| = 3 and 5,
and steady growth on a long line until the walker reaches the walls.
"""

import numpy as np

from qwalk import assign_uniform, build_unitary, hadamard_biased, localized_state, make_line
from qwalk.entanglement import shannon_entropy
from qwalk.evolution import default_start, iter_states, symmetric_start


def entropy_series(n, delta, steps, start=None):
    g = make_line(n)
    U = build_unitary(g, assign_uniform(g, hadamard_biased(delta)))
    s0 = localized_state(g, *default_start(g)) if start is None else start(g)
    return np.array([shannon_entropy(s) for s in iter_states(U, s0, steps)])


for n in (2, 3, 5):
    e = entropy_series(n, 0.5, 24)
    print(f"|G|={n}: ", " ".join(f"{v:.2f}" for v in e), f"(ceiling {np.log2(n * n):.2f})")

# long line, symmetric coin start: monotone growth until the boundary
e = entropy_series(100, 0.5, 400, start=lambda g: symmetric_start(g, 50))
print("\n|G|=100 every 25 steps:", " ".join(f"{v:.2f}" for v in e[::25]))

# coin bias: delta = 0 never spreads, small delta is slow and regular
for delta in (0.0, 0.01, 0.2, 0.5):
    e = entropy_series(5, delta, 300)
    print(f"|G|=5 delta={delta:<4}: mean E {e.mean():.3f}, max E {e.max():.3f}")

# two nearby biases drift apart quickly
a, b = entropy_series(5, 0.5, 200), entropy_series(5, 0.51, 200)
gap = np.abs(a - b)
print(f"\ndelta 0.5 vs 0.51: gap first exceeds 0.1 at t={np.argmax(gap > 0.1)}, max gap {gap.max():.2f}")
