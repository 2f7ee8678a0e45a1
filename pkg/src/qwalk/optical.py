"""Mapping walks to linear-optical networks.

Walker state ``(x, c)`` becomes spatial mode ``n = (x - 1) d + c`` with
``d = |G|``. Modes of position ``x`` form a bundle; the coin is a layer of
per-bundle unitaries and the step is a fixed mode permutation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

import numpy as np

from .coin import CoinAssignment, is_unitary
from .evolution import GlobalUnitary, completion_map
from .graph import Graph, flat_index, is_physical


class CircuitError(ValueError):
    pass


@dataclass(frozen=True)
class CoinLayer:
    """Block-diagonal layer; ``blocks[k]`` acts on the modes ``bundles[k]`` (1-based)."""

    bundles: tuple[tuple[int, ...], ...]
    blocks: tuple[np.ndarray, ...]

    def matrix(self, n_modes: int) -> np.ndarray:
        m = np.eye(n_modes, dtype=complex)
        for modes, b in zip(self.bundles, self.blocks):
            idx = np.asarray(modes) - 1
            m[np.ix_(idx, idx)] = b
        return m


@dataclass(frozen=True)
class StepLayer:
    """Permutation sending input mode ``k`` to output mode ``mapping[k - 1]``."""

    mapping: tuple[int, ...]

    def matrix(self, n_modes: int) -> np.ndarray:
        m = np.zeros((n_modes, n_modes), dtype=complex)
        m[np.asarray(self.mapping) - 1, np.arange(n_modes)] = 1.0
        return m


Layer = Union[CoinLayer, StepLayer]


@dataclass(frozen=True)
class OpticalCircuit:
    n_modes: int
    layers: tuple[Layer, ...]

    def __post_init__(self) -> None:
        for layer in self.layers:
            if isinstance(layer, StepLayer):
                if sorted(layer.mapping) != list(range(1, self.n_modes + 1)):
                    raise CircuitError("step layer is not a permutation of the modes")
            else:
                seen = [k for modes in layer.bundles for k in modes]
                if len(seen) != len(set(seen)) or any(not 1 <= k <= self.n_modes for k in seen):
                    raise CircuitError("coin layer bundles overlap or leave the mode range")
                for modes, b in zip(layer.bundles, layer.blocks):
                    if b.shape != (len(modes), len(modes)) or not is_unitary(b):
                        raise CircuitError(f"bundle on modes {list(modes)} is not a unitary block")


def to_circuit(g: Graph, coins: CoinAssignment) -> OpticalCircuit:
    """Coin layer followed by the ``(x, c) -> (c, x)`` step permutation."""
    if coins.graph != g:
        raise ValueError("coin assignment was built for a different graph")
    d = g.n_vertices
    bundles, blocks = [], []
    for x in range(1, d + 1):
        a = coins[x]
        ins, outs = g.in_coins(x), g.neighbors(x)
        partner = completion_map(g, x)
        b = np.zeros((d, d), dtype=complex)
        for c in range(1, d + 1):
            if c in ins:
                for k, j in enumerate(outs):
                    b[j - 1, c - 1] = a[ins.index(c), k]
            else:
                b[partner[c] - 1, c - 1] = 1.0
        bundles.append(tuple(range((x - 1) * d + 1, x * d + 1)))
        blocks.append(b)
    swap = tuple(flat_index(d, c, x) for x in range(1, d + 1) for c in range(1, d + 1))
    return OpticalCircuit(d * d, (CoinLayer(tuple(bundles), tuple(blocks)), StepLayer(swap)))


def circuit_unitary(circ: OpticalCircuit) -> GlobalUnitary:
    """Product of the layer matrices, first layer acting first."""
    u = np.eye(circ.n_modes, dtype=complex)
    for layer in circ.layers:
        u = layer.matrix(circ.n_modes) @ u
    return GlobalUnitary(u)


def _encode_matrix(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def circuit_to_dict(circ: OpticalCircuit) -> dict:
    layers = []
    for layer in circ.layers:
        if isinstance(layer, StepLayer):
            layers.append({"type": "permutation", "map": list(layer.mapping)})
        else:
            layers.append(
                {
                    "type": "coin",
                    "bundles": [
                        {"modes": list(modes), "matrix": _encode_matrix(b)}
                        for modes, b in zip(layer.bundles, layer.blocks)
                    ],
                }
            )
    return {"n_modes": circ.n_modes, "layers": layers}


def export_circuit(circ: OpticalCircuit) -> str:
    """JSON text; floats use ``repr`` so a reload is bit-exact."""
    return json.dumps(circuit_to_dict(circ), indent=1)


def circuit_from_dict(doc: dict) -> OpticalCircuit:
    layers: list[Layer] = []
    for entry in doc["layers"]:
        if entry["type"] == "permutation":
            layers.append(StepLayer(tuple(int(k) for k in entry["map"])))
        elif entry["type"] == "coin":
            bundles, blocks = [], []
            for bundle in entry["bundles"]:
                arr = np.asarray(bundle["matrix"], dtype=float)
                bundles.append(tuple(int(k) for k in bundle["modes"]))
                blocks.append(arr[..., 0] + 1j * arr[..., 1])
            layers.append(CoinLayer(tuple(bundles), tuple(blocks)))
        else:
            raise CircuitError(f"unknown layer type {entry['type']!r}")
    return OpticalCircuit(int(doc["n_modes"]), tuple(layers))


def load_circuit(text: str) -> OpticalCircuit:
    return circuit_from_dict(json.loads(text))


def circuits_equal(a: OpticalCircuit, b: OpticalCircuit) -> bool:
    """Exact structural equality (no tolerance)."""
    if a.n_modes != b.n_modes or len(a.layers) != len(b.layers):
        return False
    for la, lb in zip(a.layers, b.layers):
        if type(la) is not type(lb):
            return False
        if isinstance(la, StepLayer):
            if la.mapping != lb.mapping:
                return False
        elif la.bundles != lb.bundles or not all(np.array_equal(x, y) for x, y in zip(la.blocks, lb.blocks)):
            return False
    return True


def physical_slots(g: Graph, x: int) -> list[int]:
    """Bundle-local slots of position ``x`` that a physical walker can occupy."""
    return [c for c in range(1, g.n_vertices + 1) if is_physical(g, x, c)]
