"""Eigenphases of the step unitary decide between periodic and quasi-periodic motion.

Even line lengths 2 and 4 have only rational eigenphases and repeat exactly;
odd lengths carry irrational phases, so the walker only ever comes back
approximately.
"""

from qwalk import analyze, assign_uniform, build_unitary, hadamard_biased, localized_state, make_line, revival_time
from qwalk.evolution import default_start

for n in (2, 3, 4, 5):
    g = make_line(n)
    U = build_unitary(g, assign_uniform(g, hadamard_biased(0.5)))
    res = analyze(U)
    phases = sorted({pq for pq in res.rational_approx if pq})
    missing = sum(pq is None for pq in res.rational_approx)
    print(f"|G|={n}: {res.classification.value:<13} T={res.predicted_period}  "
          f"rational phases {phases}  unmatched {missing}")
    hit = revival_time(U, localized_state(g, *default_start(g)), 0.99, 100_000)
    print(f"        first return with fidelity >= 0.99: {hit}")

# The verdict is relative to the tolerance: loosen it and |G| = 3 looks periodic.
g = make_line(3)
U = build_unitary(g, assign_uniform(g, hadamard_biased(0.5)))
print("\n|G|=3 with eps=1e-3, q_max=50:", analyze(U, q_max=50, eps=1e-3).classification.value)
