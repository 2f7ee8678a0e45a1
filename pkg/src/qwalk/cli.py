"""Command-line experiment runner.

    qwalk simulate --size 2 --delta 0.5 --steps 8 --out runs/g2
    qwalk spectrum --config spectrum.json
    qwalk sensitivity --size 5 --delta-a 0.5 --delta-b 0.51 --steps 200

Exit status: 0 success, 2 invalid configuration, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import __version__
from .coin import CoinError
from .config import ConfigError, RunConfig, load_config, validate
from .experiments import RUNNERS, ExperimentResult
from .graph import GraphError

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3


def fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def write_table(path: Path, columns, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([fmt(v) for v in r])


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_result(out: Path, cfg: RunConfig, res: ExperimentResult) -> list[str]:
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, tab in res.tables.items():
        write_table(out / name, tab.columns, tab.rows)
        written.append(name)
    for name, doc in res.documents.items():
        (out / name).write_text(doc if isinstance(doc, str) else dump_json(doc))
        written.append(name)
    manifest = {
        "tool": "qwalk",
        "version": __version__,
        "config": cfg.to_json(),
        "outputs": sorted(written),
        "results": res.meta,
    }
    (out / "manifest.json").write_text(dump_json(manifest))
    return written + ["manifest.json"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON run configuration")
    common.add_argument("--out", help="output directory")
    common.add_argument("--steps", type=int, help="number of time steps (t_max)")
    common.add_argument("--size", type=int, help="use a bounded line with this many positions")
    common.add_argument("--delta", type=float, help="biased Hadamard coin parameter")
    common.add_argument("--qmax", type=int, help="largest eigenphase denominator")
    common.add_argument("--eps", type=float, help="eigenphase rationalisation tolerance")
    common.add_argument("--metric", choices=("shannon", "meyer_wallach"))
    common.add_argument("--start", type=int, nargs=2, metavar=("X", "C"), help="initial position and coin")
    common.add_argument("--symmetric-start", action="store_true", help="middle position, symmetric coin superposition")

    p = argparse.ArgumentParser(prog="qwalk", description="Discrete-time quantum walks on bounded graphs")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="experiment", required=True)
    sim = sub.add_parser("simulate", parents=[common], help="entanglement series and position heatmap")
    sim.add_argument("--amplitudes", action="store_true", help="also dump every amplitude")
    sub.add_parser("spectrum", parents=[common], help="eigenvalues and periodicity classification")
    sens = sub.add_parser("sensitivity", parents=[common], help="compare two coin biases")
    sens.add_argument("--delta-a", type=float)
    sens.add_argument("--delta-b", type=float)
    two = sub.add_parser("two-walker", parents=[common], help="one- vs two-walker Meyer-Wallach series")
    two.add_argument("--modes", type=int, nargs=2, metavar=("I", "J"), help="two-photon input modes")
    sub.add_parser("export-circuit", parents=[common], help="linear-optical network JSON")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    cfg.experiment = args.experiment
    if args.out is not None:
        cfg.out = args.out
    if args.steps is not None:
        cfg.t_max = args.steps
    if args.size is not None:
        cfg.graph = {"line": args.size}
    if args.delta is not None:
        cfg.coin = {"type": "hadamard", "delta": args.delta}
    if args.qmax is not None:
        cfg.q_max = args.qmax
    if args.eps is not None:
        cfg.eps = args.eps
    if args.metric is not None:
        cfg.metric = args.metric
    if args.start is not None:
        cfg.initial = {"position": args.start[0], "coin": args.start[1]}
    if args.symmetric_start:
        cfg.initial = "middle-symmetric"
    if getattr(args, "amplitudes", False):
        cfg.dump_amplitudes = True
    if getattr(args, "delta_a", None) is not None:
        cfg.delta_a = args.delta_a
    if getattr(args, "delta_b", None) is not None:
        cfg.delta_b = args.delta_b
    if getattr(args, "modes", None) is not None:
        cfg.two_photon = {"modes": list(args.modes)}
    return cfg


def run(cfg: RunConfig) -> list[str]:
    validate(cfg)
    return write_result(Path(cfg.out), cfg, RUNNERS[cfg.experiment](cfg))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        written = run(cfg)
    except (ConfigError, GraphError, CoinError, TypeError) as exc:
        print(f"qwalk: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"qwalk: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {', '.join(written)} to {cfg.out}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
