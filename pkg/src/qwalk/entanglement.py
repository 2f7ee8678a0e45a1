"""Entanglement metrics for walker states."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

NORM_TOL = 1e-6

SHANNON = "shannon"
MEYER_WALLACH = "meyer_wallach"


class NormalizationError(ValueError):
    pass


def _probabilities(s: np.ndarray) -> np.ndarray:
    p = np.abs(np.asarray(s)) ** 2
    total = p.sum()
    if abs(total - 1.0) > NORM_TOL:
        raise NormalizationError(f"state norm^2 is {total:.3g}, expected 1")
    return p


def shannon_entropy(s: np.ndarray) -> float:
    """Entropy in bits of the basis-state probability distribution.

    Zero-probability entries contribute exactly zero.
    """
    p = _probabilities(s)
    nz = p[p > 0]
    # round-off can push a lone probability above 1 and the sum below 0
    return max(0.0, float(-(nz * np.log2(nz)).sum()))


def meyer_wallach_single(s: np.ndarray) -> float:
    """Meyer-Wallach measure of a single excitation spread over ``len(s)`` modes.

    Each mode's reduced state is ``diag(1 - p, p)``, so the average impurity
    reduces to ``(2/N) * sum p (1 - p)``.
    """
    p = _probabilities(s)
    return max(0.0, float(2.0 / p.size * np.sum(p * (1.0 - p))))


def meyer_wallach_fock(amplitudes: Mapping[tuple[int, ...], complex], n_modes: int) -> float:
    """Meyer-Wallach measure of a Fock-space state by explicit partial traces.

    ``amplitudes`` maps occupation tuples (length ``n_modes``) to amplitudes.
    Each mode's reduced density matrix is accumulated over the configurations
    of the remaining modes.
    """
    total = sum(abs(a) ** 2 for a in amplitudes.values())
    if abs(total - 1.0) > NORM_TOL:
        raise NormalizationError(f"state norm^2 is {total:.3g}, expected 1")
    levels = 1 + max((max(occ) for occ in amplitudes), default=0)
    purity = 0.0
    for i in range(n_modes):
        blocks: dict[tuple[int, ...], np.ndarray] = defaultdict(lambda: np.zeros(levels, dtype=complex))
        for occ, amp in amplitudes.items():
            blocks[occ[:i] + occ[i + 1 :]][occ[i]] += amp
        rho = np.zeros((levels, levels), dtype=complex)
        for v in blocks.values():
            rho += np.outer(v, v.conj())
        purity += float(np.real(np.trace(rho @ rho)))
    return 1.0 - purity / n_modes


def position_marginal(s: np.ndarray) -> np.ndarray:
    """Probability of each position, summing over coin values."""
    p = np.abs(np.asarray(s)) ** 2
    d = int(round(np.sqrt(p.size)))
    if d * d != p.size:
        raise ValueError(f"state length {p.size} is not a square")
    return p.reshape(d, d).sum(axis=1)


@dataclass(frozen=True)
class EntanglementSeries:
    metric_name: str
    values: np.ndarray
    max_reference: float

    def __len__(self) -> int:
        return len(self.values)


_METRICS = {SHANNON: shannon_entropy, MEYER_WALLACH: meyer_wallach_single}


def max_reference(metric: str, n_modes: int) -> float:
    """Ceiling of ``metric`` over ``n_modes`` basis states (balanced W state)."""
    if metric == SHANNON:
        return float(np.log2(n_modes))
    if metric == MEYER_WALLACH:
        return 2.0 * (n_modes - 1) / n_modes**2
    raise ValueError(f"unknown metric {metric!r}")


def series(metric: str, states: Sequence[np.ndarray]) -> EntanglementSeries:
    if metric not in _METRICS:
        raise ValueError(f"unknown metric {metric!r}; choose from {sorted(_METRICS)}")
    if len(states) == 0:
        raise ValueError("need at least one state")
    f = _METRICS[metric]
    vals = np.array([f(s) for s in states])
    return EntanglementSeries(metric, vals, max_reference(metric, len(states[0])))
