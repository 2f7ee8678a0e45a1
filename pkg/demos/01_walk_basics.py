"""Single walker on a two-position line.

Builds the one-step unitary for balanced Hadamard coins, steps a localised
walker and watches it pass through a Bell-like state, a four-way W state and
back to where it started.
"""

import numpy as np

from qwalk import assign_uniform, build_unitary, evolve_series, hadamard_biased, localized_state, make_line
from qwalk.entanglement import position_marginal, shannon_entropy

np.set_printoptions(precision=3, suppress=True)

g = make_line(2)
print("neighbourhoods:", g.neighborhoods)

U = build_unitary(g, assign_uniform(g, hadamard_biased(0.5)))
print("sqrt(2) * U =\n", (np.sqrt(2) * U.matrix).real)

for t, s in enumerate(evolve_series(U, localized_state(g, 1, 1), 4)):
    print(f"t={t}  amplitudes={s.real}  positions={position_marginal(s)}  E={shannon_entropy(s):.3f}")

# Three positions: the unreachable pairs (1,3) and (3,1) swap into each other
# and (2,2) stays put, which is what keeps the dense matrix unitary.
g3 = make_line(3)
U3 = build_unitary(g3, assign_uniform(g3, hadamard_biased(0.5)))
print("\nsqrt(2) * U (three positions) =\n", (np.sqrt(2) * U3.matrix).real)
