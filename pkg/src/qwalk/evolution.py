"""Global one-step unitary and single-walker time evolution."""

from __future__ import annotations

import warnings

import numpy as np
import scipy.sparse as sp

from .coin import CoinAssignment, is_unitary
from .graph import Graph, flat_index, is_physical

NORM_TOL = 1e-9


class UnphysicalStateWarning(UserWarning):
    pass


class GlobalUnitary:
    """One time step ``E = S C`` in the flat (position, coin) basis.

    Stored sparse (a column has at most ``deg(x)`` entries); :attr:`matrix`
    gives the dense ``|G|^2 x |G|^2`` array on demand.
    """

    def __init__(self, matrix, graph: Graph | None = None):
        if sp.issparse(matrix):
            self.sparse = sp.csr_matrix(matrix, dtype=complex)
            self._dense = None
        else:
            dense = np.array(matrix, dtype=complex)
            dense.setflags(write=False)
            self._dense = dense
            self.sparse = sp.csr_matrix(dense)
        self.graph = graph

    @property
    def matrix(self) -> np.ndarray:
        if self._dense is None:
            dense = self.sparse.toarray()
            dense.setflags(write=False)
            self._dense = dense
        return self._dense

    @property
    def dim(self) -> int:
        return self.sparse.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.sparse.shape

    def __matmul__(self, other):
        return self.sparse @ other


def completion_map(g: Graph, x: int) -> dict[int, int]:
    """Coin slots that unphysical pairs ``(x, c)`` are routed to inside bundle ``x``.

    Unused incoming slots of bundle ``x`` are paired in ascending order with the
    slots that no out-neighbour occupies. On undirected graphs both sets are the
    same so every unphysical pair keeps its slot and the step sends it to ``(c, x)``.
    """
    d = g.n_vertices
    ins, outs = set(g.in_coins(x)), set(g.neighbors(x))
    free_in = [k for k in range(1, d + 1) if k not in ins]
    free_out = [k for k in range(1, d + 1) if k not in outs]
    return dict(zip(free_in, free_out))


def build_unitary(g: Graph, coins: CoinAssignment) -> GlobalUnitary:
    """Assemble ``E = S C`` as a matrix.

    A physical column ``(x, c)`` is sent to ``sum_j A^(x)[c, j] (j, x)`` over
    ``j in n_x``; unphysical columns are completed by a unit-amplitude swap so
    the matrix is square and unitary on the dense space.
    """
    if coins.graph != g:
        raise ValueError("coin assignment was built for a different graph")
    d = g.n_vertices
    rows, cols, vals = [], [], []
    for x in range(1, d + 1):
        a = coins[x]
        ins = g.in_coins(x)
        outs = g.neighbors(x)
        partner = completion_map(g, x)
        for c in range(1, d + 1):
            col = flat_index(d, x, c) - 1
            if c in ins:
                r = ins.index(c)
                for k, j in enumerate(outs):
                    rows.append(flat_index(d, j, x) - 1)
                    cols.append(col)
                    vals.append(a[r, k])
            else:
                rows.append(flat_index(d, partner[c], x) - 1)
                cols.append(col)
                vals.append(1.0)
    u = sp.csr_matrix((np.asarray(vals, dtype=complex), (rows, cols)), shape=(d * d, d * d))
    return GlobalUnitary(u, g)


def localized_state(g: Graph, x: int, c: int) -> np.ndarray:
    """Unit vector on basis state ``(x, c)``."""
    n = flat_index(g.n_vertices, x, c)
    if not is_physical(g, x, c):
        warnings.warn(f"({x}, {c}) is not a reachable walker state", UnphysicalStateWarning, stacklevel=2)
    s = np.zeros(g.dim, dtype=complex)
    s[n - 1] = 1.0
    return s


def symmetric_start(g: Graph, x: int) -> np.ndarray:
    """Walker at ``x`` in ``(|x, c1> + i |x, c2>) / sqrt(2)`` over its two lowest incoming coins.

    The standard symmetric initial coin of the Hadamard walk: on a line it
    spreads without left/right bias.
    """
    c1, c2 = g.in_coins(x)[:2]
    s = np.zeros(g.dim, dtype=complex)
    s[flat_index(g.n_vertices, x, c1) - 1] = 1 / np.sqrt(2)
    s[flat_index(g.n_vertices, x, c2) - 1] = 1j / np.sqrt(2)
    return s


def default_start(g: Graph) -> tuple[int, int]:
    """Middle position ``ceil(|G|/2)`` with the left neighbour (or itself at x=1) as coin.

    On custom graphs where that pair is unreachable the smallest incoming coin is used.
    """
    x = (g.n_vertices + 1) // 2
    c = max(x - 1, 1)
    if not is_physical(g, x, c):
        c = g.in_coins(x)[0]
    return x, c


def _operator(u):
    return u.sparse if isinstance(u, GlobalUnitary) else np.asarray(u)


def step(u: GlobalUnitary | np.ndarray, s: np.ndarray) -> np.ndarray:
    m = _operator(u)
    s = np.asarray(s)
    if s.shape != (m.shape[1],):
        raise ValueError(f"state of shape {s.shape} does not match unitary of shape {m.shape}")
    return m @ s


def evolve_series(u: GlobalUnitary | np.ndarray, s0: np.ndarray, t_max: int) -> list[np.ndarray]:
    """States at ``t = 0 .. t_max`` by repeated application of ``u``."""
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    out = [np.asarray(s0, dtype=complex)]
    for _ in range(t_max):
        out.append(step(u, out[-1]))
    return out


def iter_states(u: GlobalUnitary | np.ndarray, s0: np.ndarray, t_max: int):
    """Generator form of :func:`evolve_series` for long runs."""
    if t_max < 0:
        raise ValueError("t_max must be non-negative")
    m = _operator(u)
    s = np.asarray(s0, dtype=complex)
    if s.shape != (m.shape[1],):
        raise ValueError(f"state of shape {s.shape} does not match unitary of shape {m.shape}")
    yield s
    for _ in range(t_max):
        s = m @ s
        yield s


def check_unitary(u: GlobalUnitary, tol: float = 1e-12) -> bool:
    return is_unitary(u.matrix, tol)


def physical_mask(g: Graph) -> np.ndarray:
    """Boolean mask over flat indices marking reachable ``(x, c)`` pairs."""
    d = g.n_vertices
    return np.array([is_physical(g, x, c) for x in range(1, d + 1) for c in range(1, d + 1)])
