"""Run configuration shared by the CLI and its manifests."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from .coin import CoinAssignment, CoinError, coins_from_json
from .graph import Graph, GraphError, graph_from_json, make_line
from .spectral import DEFAULT_EPS, DEFAULT_QMAX

EXPERIMENTS = ("simulate", "spectrum", "sensitivity", "two-walker", "export-circuit")
METRICS = ("shannon", "meyer_wallach")
INITIAL_PRESETS = ("middle", "middle-symmetric")


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending field."""


@dataclass
class RunConfig:
    experiment: str = "simulate"
    graph: dict[str, Any] = field(default_factory=lambda: {"line": 5})
    coin: dict[str, Any] = field(default_factory=lambda: {"type": "hadamard", "delta": 0.5})
    initial: Any = "middle"
    t_max: int = 100
    metric: str = "shannon"
    q_max: int = DEFAULT_QMAX
    eps: float = DEFAULT_EPS
    delta_a: float | None = None
    delta_b: float | None = None
    two_photon: Any = "middle"
    dump_amplitudes: bool = False
    out: str = "out"

    def to_json(self) -> dict:
        return asdict(self)

    def build_graph(self) -> Graph:
        try:
            if "line" in self.graph:
                return make_line(int(self.graph["line"]))
            return graph_from_json(self.graph)
        except (GraphError, TypeError, ValueError) as exc:
            raise ConfigError(f"graph: {exc}") from None

    def build_coins(self, g: Graph, delta: float | None = None) -> CoinAssignment:
        spec = dict(self.coin)
        if delta is not None:
            spec = {"type": "hadamard", "delta": delta}
        try:
            return coins_from_json(g, spec)
        except (CoinError, TypeError, ValueError) as exc:
            raise ConfigError(f"coin: {exc}") from None


def _check(cond: bool, fieldname: str, msg: str) -> None:
    if not cond:
        raise ConfigError(f"{fieldname}: {msg}")


def validate(cfg: RunConfig) -> RunConfig:
    """Reject bad configs before any computation; also builds graph and coins once."""
    _check(cfg.experiment in EXPERIMENTS, "experiment", f"must be one of {EXPERIMENTS}")
    _check(isinstance(cfg.t_max, int) and cfg.t_max >= 0, "t_max", "must be a non-negative integer")
    _check(cfg.metric in METRICS, "metric", f"must be one of {METRICS}")
    _check(isinstance(cfg.q_max, int) and cfg.q_max >= 1, "q_max", "must be a positive integer")
    _check(isinstance(cfg.eps, (int, float)) and cfg.eps > 0, "eps", "must be positive")
    _check(isinstance(cfg.graph, dict), "graph", "must be an object")
    _check(isinstance(cfg.coin, dict), "coin", "must be an object")
    g = cfg.build_graph()
    cfg.build_coins(g)
    if cfg.initial not in INITIAL_PRESETS:
        _check(
            isinstance(cfg.initial, dict) and {"position", "coin"} <= set(cfg.initial),
            "initial",
            "must be 'middle', 'middle-symmetric' or {'position': x, 'coin': c}",
        )
        for key in ("position", "coin"):
            v = cfg.initial[key]
            _check(isinstance(v, int) and 1 <= v <= g.n_vertices, f"initial.{key}", f"must be in [1, {g.n_vertices}]")
    if cfg.experiment == "sensitivity":
        for name in ("delta_a", "delta_b"):
            v = getattr(cfg, name)
            _check(isinstance(v, (int, float)), name, "required for the sensitivity experiment")
            _check(0.0 <= v <= 1.0, name, "must lie in [0, 1]")
    if cfg.two_photon != "middle":
        modes = cfg.two_photon.get("modes") if isinstance(cfg.two_photon, dict) else None
        _check(
            isinstance(modes, list) and len(modes) == 2 and all(isinstance(m, int) and 1 <= m <= g.dim for m in modes),
            "two_photon.modes",
            f"must be two mode indices in [1, {g.dim}]",
        )
    return cfg


def load_config(path: str | Path) -> RunConfig:
    """Read a JSON config; unknown keys are rejected."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config: not valid JSON ({exc})") from None
    return config_from_dict(doc)


def config_from_dict(doc: dict) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config: top level must be an object")
    known = set(RunConfig.__dataclass_fields__)
    unknown = set(doc) - known
    if unknown:
        raise ConfigError(f"{sorted(unknown)[0]}: unknown config field")
    return RunConfig(**doc)
