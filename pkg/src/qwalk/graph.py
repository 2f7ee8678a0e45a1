"""Walk topologies and the (position, coin) basis.

Vertices are 1-based. A walker state ``w(x, c)`` lives at position ``x`` and
remembers the vertex ``c`` it arrived from. The flat basis index of ``(x, c)``
is ``(x - 1) * d + c`` with ``d = n_vertices``, so the state space always has
``n_vertices ** 2`` entries (physical pairs plus their unphysical completion).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class GraphError(ValueError):
    """Raised for malformed or non-unitary-capable topologies."""


class InvalidSizeError(GraphError):
    pass


class UnbalancedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable walk topology.

    Attributes
    ----------
    n_vertices : int
        Number of positions ``|G|``.
    neighborhoods : tuple of tuple of int
        ``neighborhoods[x - 1]`` is the ascending out-neighbourhood ``n_x``.
    """

    n_vertices: int
    neighborhoods: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _validate(self.n_vertices, self.neighborhoods)

    @property
    def dim(self) -> int:
        """Size of the dense (position, coin) state space."""
        return self.n_vertices**2

    def neighbors(self, x: int) -> tuple[int, ...]:
        return self.neighborhoods[x - 1]

    def in_coins(self, x: int) -> tuple[int, ...]:
        """Coin values a walker at ``x`` can carry, i.e. ``{c : x in n_c}``."""
        return tuple(c for c in range(1, self.n_vertices + 1) if x in self.neighborhoods[c - 1])

    def degree(self, x: int) -> int:
        return len(self.neighborhoods[x - 1])

    def is_undirected(self) -> bool:
        return all(x in self.neighbors(y) for x in range(1, self.n_vertices + 1) for y in self.neighbors(x))

    def flat_index(self, x: int, c: int) -> int:
        return flat_index(self.n_vertices, x, c)

    def unflat(self, n: int) -> tuple[int, int]:
        return unflat(self.n_vertices, n)

    def to_json(self) -> dict:
        return {"n_vertices": self.n_vertices, "neighborhoods": [list(nb) for nb in self.neighborhoods]}


def _validate(n_vertices: int, neighborhoods: tuple[tuple[int, ...], ...]) -> None:
    if n_vertices < 1:
        raise InvalidSizeError(f"graph needs at least one vertex, got {n_vertices}")
    if len(neighborhoods) != n_vertices:
        raise GraphError(f"expected {n_vertices} neighbourhoods, got {len(neighborhoods)}")
    for x, nb in enumerate(neighborhoods, start=1):
        if not nb:
            raise GraphError(f"vertex {x} has an empty neighbourhood")
        if any(not 1 <= j <= n_vertices for j in nb):
            raise GraphError(f"vertex {x} has a neighbour outside [1, {n_vertices}]: {list(nb)}")
        if any(a >= b for a, b in zip(nb, nb[1:])):
            raise GraphError(f"neighbourhood of vertex {x} is not strictly ascending: {list(nb)}")
    in_count = [0] * n_vertices
    for nb in neighborhoods:
        for j in nb:
            in_count[j - 1] += 1
    for x in range(1, n_vertices + 1):
        if in_count[x - 1] != len(neighborhoods[x - 1]):
            raise UnbalancedGraphError(
                f"vertex {x}: {in_count[x - 1]} incoming coin values but out-degree "
                f"{len(neighborhoods[x - 1])}; the global step would not be unitary"
            )


def flat_index(d: int, x: int, c: int) -> int:
    """1-based flat index ``(x - 1) * d + c``."""
    if not (1 <= x <= d and 1 <= c <= d):
        raise IndexError(f"basis pair ({x}, {c}) out of range for d={d}")
    return (x - 1) * d + c


def unflat(d: int, n: int) -> tuple[int, int]:
    if not 1 <= n <= d * d:
        raise IndexError(f"flat index {n} out of range [1, {d * d}]")
    x, c = divmod(n - 1, d)
    return x + 1, c + 1


def make_line(n: int) -> Graph:
    """Bounded line ``1 - 2 - ... - n`` with reflecting ends.

    Each endpoint carries a self-loop, so every vertex has out-degree two.
    """
    if n < 2:
        raise InvalidSizeError(f"a line needs at least 2 vertices, got {n}")
    nbs = [(1, 2)]
    nbs += [(x - 1, x + 1) for x in range(2, n)]
    nbs.append((n - 1, n))
    return Graph(n, tuple(nbs))


def make_custom(neighborhoods: Sequence[Sequence[int]]) -> Graph:
    """Build a graph from arbitrary neighbourhood lists (order is canonicalised)."""
    nbs = []
    for x, nb in enumerate(neighborhoods, start=1):
        if len(set(nb)) != len(nb):
            raise GraphError(f"vertex {x} lists a neighbour twice: {list(nb)}")
        nbs.append(tuple(sorted(int(j) for j in nb)))
    return Graph(len(nbs), tuple(nbs))


def graph_from_json(doc: dict) -> Graph:
    try:
        n = int(doc["n_vertices"])
        nbs = doc["neighborhoods"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"graph JSON needs 'n_vertices' and 'neighborhoods': {exc}") from None
    g = make_custom(nbs)
    if g.n_vertices != n:
        raise GraphError(f"n_vertices={n} but {g.n_vertices} neighbourhoods given")
    return g


def is_physical(g: Graph, x: int, c: int) -> bool:
    """True iff the walker can sit at ``x`` having come from ``c``."""
    flat_index(g.n_vertices, x, c)
    return x in g.neighbors(c)
