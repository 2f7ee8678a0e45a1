"""Two indistinguishable bosonic walkers (photons) under a shared unitary.

States are stored as an upper-triangular coefficient array ``c[k, l]`` with
``k <= l`` (0-based modes): ``c[k, l]`` for ``k < l`` is the amplitude of
``|1_k 1_l>`` and ``c[k, k]`` the amplitude of ``|2_k>``. Normalisation is
``sum |c|^2 = 1``.

A photon in mode ``i`` evolves as ``a_i^+ -> sum_k U[k, i] a_k^+``, the same
column convention used for single walkers, so one photon alone follows
``alpha -> U alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import meyer_wallach_fock
from .evolution import GlobalUnitary

SQRT2 = np.sqrt(2.0)
ZERO_PROB = 1e-12


@dataclass(frozen=True)
class TwoWalkerState:
    coeffs: np.ndarray

    @property
    def n_modes(self) -> int:
        return self.coeffs.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def amplitude(self, k: int, l: int) -> complex:
        """Fock amplitude for photons in 1-based modes ``k`` and ``l``."""
        k, l = sorted((k, l))
        return complex(self.coeffs[k - 1, l - 1])

    def __add__(self, other: "TwoWalkerState") -> "TwoWalkerState":
        return TwoWalkerState(self.coeffs + other.coeffs)

    def __rmul__(self, a: complex) -> "TwoWalkerState":
        return TwoWalkerState(a * self.coeffs)

    def fock_amplitudes(self) -> dict[tuple[int, ...], complex]:
        """Occupation tuple -> amplitude for every nonzero component."""
        n = self.n_modes
        out = {}
        for k, l in zip(*np.nonzero(self.coeffs)):
            occ = [0] * n
            occ[k] += 1
            occ[l] += 1
            out[tuple(occ)] = complex(self.coeffs[k, l])
        return out


@dataclass(frozen=True)
class PostSelectionResult:
    mode: int
    probability: float
    conditional_state: np.ndarray | None
    raw_amplitudes: np.ndarray


def _matrix(u: GlobalUnitary | np.ndarray) -> np.ndarray:
    return u.matrix if isinstance(u, GlobalUnitary) else np.asarray(u)


def to_symmetric(s: TwoWalkerState) -> np.ndarray:
    """Symmetric ``S`` with ``|psi> = sum_{kl} S[k, l] a_k^+ a_l^+ |0>``."""
    c = s.coeffs
    off = np.triu(c, 1) / 2.0
    return off + off.T + np.diag(np.diag(c) / SQRT2)


def from_symmetric(sym: np.ndarray) -> TwoWalkerState:
    c = np.triu(sym + sym.T, 1)
    c = c + np.diag(np.diag(sym) * SQRT2)
    return TwoWalkerState(c)


def two_photon_input(i: int, j: int, n_modes: int) -> TwoWalkerState:
    """Normalised ``a_i^+ a_j^+ |0>`` (1-based modes, order irrelevant)."""
    if not (1 <= i <= n_modes and 1 <= j <= n_modes):
        raise IndexError(f"modes ({i}, {j}) out of range [1, {n_modes}]")
    c = np.zeros((n_modes, n_modes), dtype=complex)
    k, l = sorted((i, j))
    c[k - 1, l - 1] = 1.0
    return TwoWalkerState(c)


def evolve_two(u: GlobalUnitary | np.ndarray, s: TwoWalkerState) -> TwoWalkerState:
    m = _matrix(u)
    if m.shape != (s.n_modes, s.n_modes):
        raise ValueError(f"unitary {m.shape} does not act on {s.n_modes} modes")
    return from_symmetric(m @ to_symmetric(s) @ m.T)


def evolve_two_series(u: GlobalUnitary | np.ndarray, s0: TwoWalkerState, t_max: int) -> list[TwoWalkerState]:
    m = _matrix(u)
    out = [s0]
    sym = to_symmetric(s0)
    for _ in range(t_max):
        sym = m @ sym @ m.T
        out.append(from_symmetric(sym))
    return out


def outcome_distribution(s: TwoWalkerState) -> dict[tuple[int, int], float]:
    """Detection probabilities keyed by 1-based mode pair ``(k, l)``, ``k <= l``."""
    p = np.abs(s.coeffs) ** 2 / s.norm() ** 2
    return {(int(k) + 1, int(l) + 1): float(p[k, l]) for k, l in zip(*np.nonzero(p))}


def raw_postselection_amplitudes(u: GlobalUnitary | np.ndarray, i: int, j: int, m: int) -> np.ndarray:
    """Coefficients of ``a_m^+ a_k^+`` for the input ``a_i^+ a_j^+``.

    ``M'[k] = U[m, i] U[k, j] + U[m, j] U[k, i]``; the ``k = m`` entry belongs
    to the doubly occupied outcome.
    """
    mat = _matrix(u)
    i, j, m = i - 1, j - 1, m - 1
    return mat[m, i] * mat[:, j] + mat[m, j] * mat[:, i]


def post_select(u: GlobalUnitary | np.ndarray, i: int, j: int, m: int) -> PostSelectionResult:
    """Condition the evolved pair ``(i, j)`` on exactly one photon in mode ``m``.

    The conditional single-photon state lives on the same modes with zero
    amplitude on ``m``; it is ``None`` when the outcome has zero probability.
    """
    mat = _matrix(u)
    n = mat.shape[0]
    s = evolve_two(mat, two_photon_input(i, j, n))
    c = s.coeffs
    row = np.array([c[min(m - 1, k), max(m - 1, k)] for k in range(n)])
    row[m - 1] = 0.0
    prob = float(np.sum(np.abs(row) ** 2) / s.norm() ** 2)
    raw = raw_postselection_amplitudes(mat, i, j, m)
    if prob < ZERO_PROB:
        return PostSelectionResult(m, 0.0, None, raw)
    return PostSelectionResult(m, prob, row / np.linalg.norm(row), raw)


def meyer_wallach_two(s: TwoWalkerState) -> float:
    """Meyer-Wallach measure over per-mode occupation spaces (levels 0, 1, 2)."""
    return meyer_wallach_fock(s.fock_amplitudes(), s.n_modes)
