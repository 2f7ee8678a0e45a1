"""Coin operators and their per-vertex assignment.

A coin at vertex ``x`` is a square unitary ``A`` whose rows are indexed by the
incoming coin values ``{c : x in n_c}`` and whose columns are indexed by the
out-neighbours ``n_x``, both in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .graph import Graph

UNITARY_TOL = 1e-12


class CoinError(ValueError):
    pass


class NonUnitaryCoinError(CoinError):
    pass


def hadamard_biased(delta: float) -> np.ndarray:
    """Biased Hadamard coin ``[[sqrt(d), sqrt(1-d)], [sqrt(1-d), -sqrt(d)]]``.

    ``delta = 1/2`` is the balanced Hadamard, ``delta = 1`` is Pauli Z and
    ``delta = 0`` is Pauli X.
    """
    delta = float(delta)
    if not 0.0 <= delta <= 1.0 or np.isnan(delta):
        raise CoinError(f"coin bias must lie in [0, 1], got {delta}")
    a, b = np.sqrt(delta), np.sqrt(1.0 - delta)
    return np.array([[a, b], [b, -a]], dtype=complex)


def is_unitary(m: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])), initial=0.0) < tol)


@dataclass(frozen=True)
class CoinAssignment:
    """One local unitary per vertex of ``graph``."""

    graph: Graph
    coins: tuple[np.ndarray, ...]

    def __getitem__(self, x: int) -> np.ndarray:
        return self.coins[x - 1]


def assign_per_vertex(g: Graph, coins: Mapping[int, np.ndarray]) -> CoinAssignment:
    """Attach ``coins[x]`` to each vertex ``x`` after checking shape and unitarity."""
    out = []
    for x in range(1, g.n_vertices + 1):
        if x not in coins:
            raise CoinError(f"no coin given for vertex {x}")
        m = np.array(coins[x], dtype=complex)
        k = g.degree(x)
        if m.shape != (k, k):
            raise CoinError(f"vertex {x} has degree {k} but its coin has shape {m.shape}")
        if not is_unitary(m):
            raise NonUnitaryCoinError(f"coin at vertex {x} is not unitary")
        m.setflags(write=False)
        out.append(m)
    extra = set(coins) - set(range(1, g.n_vertices + 1))
    if extra:
        raise CoinError(f"coins given for unknown vertices {sorted(extra)}")
    return CoinAssignment(g, tuple(out))


def assign_uniform(g: Graph, coin: np.ndarray) -> CoinAssignment:
    """Same coin at every vertex; every vertex must have matching degree."""
    coin = np.asarray(coin)
    bad = [x for x in range(1, g.n_vertices + 1) if g.degree(x) != coin.shape[0]]
    if bad:
        raise CoinError(f"coin of dimension {coin.shape[0]} does not fit vertices {bad}")
    return assign_per_vertex(g, {x: coin for x in range(1, g.n_vertices + 1)})


def coins_from_json(g: Graph, doc: Mapping) -> CoinAssignment:
    """Parse ``{"type": "hadamard", "delta": d}`` or ``{"type": "explicit", "matrices": {...}}``.

    Explicit matrices are nested lists of ``[re, im]`` pairs keyed by vertex.
    """
    kind = doc.get("type")
    if kind == "hadamard":
        if "delta" not in doc:
            raise CoinError("hadamard coin needs 'delta'")
        return assign_uniform(g, hadamard_biased(doc["delta"]))
    if kind == "explicit":
        mats = {}
        for key, rows in doc.get("matrices", {}).items():
            arr = np.asarray(rows, dtype=float)
            if arr.ndim != 3 or arr.shape[-1] != 2:
                raise CoinError(f"matrix for vertex {key} must be rows of [re, im] pairs")
            mats[int(key)] = arr[..., 0] + 1j * arr[..., 1]
        return assign_per_vertex(g, mats)
    raise CoinError(f"unknown coin type {kind!r}")
