"""Figure-style experiments as pure functions returning row tables.

Each ``run_*`` takes a validated :class:`~qwalk.config.RunConfig` and returns
an :class:`ExperimentResult`; writing files is left to the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import entanglement as ent
from .config import RunConfig
from .evolution import build_unitary, default_start, iter_states, localized_state, symmetric_start
from .graph import Graph, flat_index
from .multiwalker import evolve_two_series, meyer_wallach_two, two_photon_input
from .optical import circuit_unitary, export_circuit, to_circuit
from .spectral import analyze


@dataclass
class Table:
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)

    def column(self, name: str) -> np.ndarray:
        k = self.columns.index(name)
        return np.array([r[k] for r in self.rows])


@dataclass
class ExperimentResult:
    tables: dict[str, Table] = field(default_factory=dict)
    documents: dict[str, dict | str] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)


def start_state(g: Graph, cfg: RunConfig) -> tuple[tuple[int, int], np.ndarray]:
    """Starting ``(position, coin)`` and state vector.

    ``middle-symmetric`` reports the coin as 0 since it is a coin superposition.
    """
    if cfg.initial == "middle-symmetric":
        x, _ = default_start(g)
        return (x, 0), symmetric_start(g, x)
    if cfg.initial == "middle":
        x, c = default_start(g)
    else:
        x, c = cfg.initial["position"], cfg.initial["coin"]
    return (x, c), localized_state(g, x, c)


def two_photon_modes(g: Graph, cfg: RunConfig) -> tuple[int, int]:
    """Configured modes, or both photons at the middle position on its two lowest coin slots."""
    if cfg.two_photon != "middle":
        i, j = cfg.two_photon["modes"]
        return i, j
    x, _ = default_start(g)
    ins = g.in_coins(x)
    c1, c2 = (ins[0], ins[1]) if len(ins) > 1 else (ins[0], ins[0])
    return flat_index(g.n_vertices, x, c1), flat_index(g.n_vertices, x, c2)


def _metric(name: str):
    return ent.shannon_entropy if name == ent.SHANNON else ent.meyer_wallach_single


def run_simulate(cfg: RunConfig) -> ExperimentResult:
    g = cfg.build_graph()
    u = build_unitary(g, cfg.build_coins(g))
    start, s0 = start_state(g, cfg)
    f = _metric(cfg.metric)
    e_max = ent.max_reference(cfg.metric, g.dim)
    series = Table(("t", "E", "E_max"))
    heat = Table(("t", "position", "probability"))
    amps = Table(("t", "x", "c", "re", "im", "prob"))
    d = g.n_vertices
    for t, s in enumerate(iter_states(u, s0, cfg.t_max)):
        series.rows.append((t, f(s), e_max))
        for x, p in enumerate(ent.position_marginal(s), start=1):
            heat.rows.append((t, x, float(p)))
        if cfg.dump_amplitudes:
            for n, a in enumerate(s):
                x, c = divmod(n, d)
                amps.rows.append((t, x + 1, c + 1, float(a.real), float(a.imag), float(abs(a) ** 2)))
    res = ExperimentResult(tables={"series.csv": series, "heatmap.csv": heat})
    if cfg.dump_amplitudes:
        res.tables["amplitudes.csv"] = amps
    res.meta = {
        "initial_state": {"position": start[0], "coin": start[1]},
        "E_max_dense": e_max,
        "E_max_physical": ent.max_reference(cfg.metric, 2 * g.n_vertices) if cfg.metric == ent.SHANNON else None,
    }
    return res


def run_spectrum(cfg: RunConfig) -> ExperimentResult:
    g = cfg.build_graph()
    u = build_unitary(g, cfg.build_coins(g))
    spec = analyze(u, cfg.q_max, cfg.eps)
    eig = Table(("re", "im"), [(float(z.real), float(z.imag)) for z in spec.eigenvalues])
    return ExperimentResult(
        tables={"eigenvalues.csv": eig},
        documents={"spectrum.json": spec.to_json()},
        meta={"classification": spec.classification.value, "predicted_period": spec.predicted_period},
    )


def sensitivity_series(g: Graph, cfg: RunConfig, delta_a: float, delta_b: float) -> Table:
    _, s0 = start_state(g, cfg)
    f = _metric(cfg.metric)
    ua = build_unitary(g, cfg.build_coins(g, delta_a))
    ub = build_unitary(g, cfg.build_coins(g, delta_b))
    out = Table(("t", "E_a", "E_b", "abs_diff"))
    for t, (sa, sb) in enumerate(zip(iter_states(ua, s0, cfg.t_max), iter_states(ub, s0, cfg.t_max))):
        ea, eb = f(sa), f(sb)
        out.rows.append((t, ea, eb, abs(ea - eb)))
    return out


def run_sensitivity(cfg: RunConfig) -> ExperimentResult:
    g = cfg.build_graph()
    tab = sensitivity_series(g, cfg, cfg.delta_a, cfg.delta_b)
    start, _ = start_state(g, cfg)
    return ExperimentResult(
        tables={"sensitivity.csv": tab},
        meta={"initial_state": {"position": start[0], "coin": start[1]}, "max_abs_diff": float(tab.column("abs_diff").max())},
    )


def run_two_walker(cfg: RunConfig) -> ExperimentResult:
    g = cfg.build_graph()
    u = build_unitary(g, cfg.build_coins(g))
    start, s0 = start_state(g, cfg)
    i, j = two_photon_modes(g, cfg)
    one = [ent.meyer_wallach_single(s) for s in iter_states(u, s0, cfg.t_max)]
    two = [meyer_wallach_two(s) for s in evolve_two_series(u, two_photon_input(i, j, g.dim), cfg.t_max)]
    return ExperimentResult(
        tables={
            "two_walker.csv": Table(("t", "E_meyer_wallach"), [(t, e) for t, e in enumerate(two)]),
            "comparison.csv": Table(("t", "E_one", "E_two"), [(t, a, b) for t, (a, b) in enumerate(zip(one, two))]),
        },
        meta={"initial_state": {"position": start[0], "coin": start[1]}, "two_photon_modes": [i, j]},
    )


def run_export_circuit(cfg: RunConfig) -> ExperimentResult:
    g = cfg.build_graph()
    coins = cfg.build_coins(g)
    circ = to_circuit(g, coins)
    dev = float(np.max(np.abs(circuit_unitary(circ).matrix - build_unitary(g, coins).matrix)))
    return ExperimentResult(documents={"circuit.json": export_circuit(circ)}, meta={"max_deviation": dev})


RUNNERS = {
    "simulate": run_simulate,
    "spectrum": run_spectrum,
    "sensitivity": run_sensitivity,
    "two-walker": run_two_walker,
    "export-circuit": run_export_circuit,
}
