"""Walk to linear-optics mapping.

Each position becomes a bundle of |G| spatial modes; the coin is a
block-diagonal layer of bundle unitaries and the step a fixed permutation.
"""

import numpy as np

from qwalk import assign_uniform, build_unitary, circuit_unitary, export_circuit, hadamard_biased, make_line, to_circuit
from qwalk.optical import load_circuit

g = make_line(3)
coins = assign_uniform(g, hadamard_biased(0.5))
circ = to_circuit(g, coins)
print("modes:", circ.n_modes)
print("step permutation:", circ.layers[1].mapping)
print("bundle 1 block:\n", np.round(circ.layers[0].blocks[0].real, 3))

dev = np.max(np.abs(circuit_unitary(circ).matrix - build_unitary(g, coins).matrix))
print("max |circuit - walk unitary| =", dev)

text = export_circuit(circ)
print("JSON size:", len(text), "bytes; reloads to the same unitary:",
      np.array_equal(circuit_unitary(load_circuit(text)).matrix, circuit_unitary(circ).matrix))
