"""Two indistinguishable photons and post-selection.

The two-photon amplitudes are a bilinear function of the single-photon
unitary, so evolution stays linear even when one photon is measured.
"""

import numpy as np

from qwalk import assign_uniform, build_unitary, hadamard_biased, make_line
from qwalk.entanglement import meyer_wallach_single
from qwalk.evolution import default_start, iter_states, localized_state
from qwalk.multiwalker import evolve_two, evolve_two_series, meyer_wallach_two, outcome_distribution, post_select, two_photon_input

bs = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
out = evolve_two(bs, two_photon_input(1, 2, 2))
print("50:50 coupler, one photon per input:")
print("  |1,1> amplitude", out.amplitude(1, 2), " |2,0>", out.amplitude(1, 1), " |0,2>", out.amplitude(2, 2))
print("  P(exactly one photon in mode 1) =", post_select(bs, 1, 2, 1).probability)

g = make_line(5)
U = build_unitary(g, assign_uniform(g, hadamard_biased(0.5)))
x, c = default_start(g)
i, j = (x - 1) * 5 + g.in_coins(x)[0], (x - 1) * 5 + g.in_coins(x)[1]
one = [meyer_wallach_single(s) for s in iter_states(U, localized_state(g, x, c), 60)]
two = [meyer_wallach_two(s) for s in evolve_two_series(U, two_photon_input(i, j, 25), 60)]
print("\nMeyer-Wallach, |G|=5, every 5 steps")
print("  one walker:", " ".join(f"{v:.3f}" for v in one[::5]))
print("  two walkers:", " ".join(f"{v:.3f}" for v in two[::5]))

# One step puts both photons through the same Hadamard coin: they bunch.
print("\noutcomes after one step:", outcome_distribution(evolve_two(U, two_photon_input(i, j, 25))))

# After three steps, condition on one photon in the busiest mode.
U3 = np.linalg.matrix_power(U.matrix, 3)
s3 = evolve_two(U3, two_photon_input(i, j, 25))
m = max(range(1, 26), key=lambda k: sum(p for pair, p in outcome_distribution(s3).items() if k in pair and pair[0] != pair[1]))
res = post_select(U3, i, j, m)
print(f"post-selecting one photon in mode {res.mode} at t=3: probability {res.probability:.4f}")
print("  remaining photon occupies modes", [int(k) + 1 for k in np.nonzero(np.abs(res.conditional_state) > 1e-12)[0]])
