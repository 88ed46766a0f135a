"""Command-line entry point: one subcommand per table or figure dataset.

Every run writes its artifacts plus a JSON manifest (version, flags,
input checksums, seed) into ``--out``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .diff import DEFAULT_TOP, diff_maps
from .errors import InvalidParams, IoError, ParseError, TopologyError
from .generator import BaParams, generate_ba
from .io import read_edge_list, write_curve_csv, write_edge_list
from .metrics import cycle_coefficients, link_rank_matrix, rich_club_at, rich_club_curve, summarize
from .resilience import attack_trace, error_trace

USAGE_ERRORS = (ParseError, IoError, InvalidParams)


def _sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _flags(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "handler"}


class Run:
    """Collects outputs of one subcommand and writes the manifest."""

    def __init__(self, args, inputs=()):
        self.args = args
        self.out = Path(args.out)
        try:
            self.out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise IoError(f"cannot create output directory {self.out}: {exc.strerror}") from exc
        self.inputs = list(inputs)
        self.outputs: list[str] = []

    def path(self, name: str) -> Path:
        self.outputs.append(name)
        return self.out / name

    def load(self, path):
        return read_edge_list(path)[0]

    def finish(self, stem: str) -> None:
        manifest = {
            "tool": "asmaps",
            "version": __version__,
            "command": self.args.command,
            "flags": _flags(self.args),
            "inputs": [{"path": str(p), "sha256": _sha256(p)} for p in self.inputs],
            "seed": getattr(self.args, "seed", None),
            "outputs": self.outputs,
            "created": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        }
        target = self.out / f"{stem}.{self.args.command}.manifest.json"
        try:
            target.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot write {target}: {exc.strerror}") from exc


def _stem(path) -> str:
    return Path(path).stem


def cmd_summary(args) -> int:
    run = Run(args, [args.input])
    graph = run.load(args.input)
    summary = summarize(graph, with_gamma=args.gamma).to_dict()
    stem = _stem(args.input)
    if args.format == "json":
        text = json.dumps(summary, indent=2) + "\n"
        run.path(f"{stem}.summary.json").write_text(text, encoding="utf-8")
        sys.stdout.write(text)
    else:
        header, row = list(summary), [summary[k] if summary[k] is not None else "" for k in summary]
        write_curve_csv(header, [row], run.path(f"{stem}.summary.csv"))
        write_curve_csv(header, [row], sys.stdout)
    run.finish(stem)
    return 0


def cmd_richclub(args) -> int:
    run = Run(args, [args.input])
    graph = run.load(args.input)
    stem = _stem(args.input)
    curve = rich_club_curve(graph)
    write_curve_csv(["r", "phi"], curve.sampled(args.points), run.path(f"{stem}.richclub.csv"))
    if args.at is not None:
        print(repr(rich_club_at(graph, args.at)))
    run.finish(stem)
    return 0


def cmd_linkdist(args) -> int:
    run = Run(args, [args.input])
    graph = run.load(args.input)
    stem = _stem(args.input)
    write_curve_csv(["bin_i", "bin_j", "count"], link_rank_matrix(graph).rows(),
                    run.path(f"{stem}.linkdist.csv"))
    run.finish(stem)
    return 0


def cmd_cycles(args) -> int:
    run = Run(args, [args.input])
    graph = run.load(args.input)
    stem = _stem(args.input)
    table = cycle_coefficients(graph)
    write_curve_csv(["rank", "kt"], table.kt_curve(), run.path(f"{stem}.kt.csv"))
    write_curve_csv(["rank", "kr"], table.kr_curve(), run.path(f"{stem}.kr.csv"))
    run.finish(stem)
    return 0


def cmd_generate(args) -> int:
    params = BaParams(args.n, args.m, args.m0, args.seed)
    params.validate()
    run = Run(args)
    name = args.name or f"ba_n{args.n}_m{args.m}_seed{args.seed}.edges"
    write_edge_list(generate_ba(params), run.path(name))
    run.finish(_stem(name))
    return 0


def cmd_attack(args) -> int:
    run = Run(args, [args.input])
    graph = run.load(args.input)
    stem = _stem(args.input)
    trace = attack_trace(graph, args.fmax, args.step, recompute_degrees=args.recompute)
    write_curve_csv(["f", "S", "mode", "seed"], trace.rows(), run.path(f"{stem}.attack.csv"))
    run.finish(stem)
    return 0


def cmd_error(args) -> int:
    run = Run(args, [args.input])
    graph = run.load(args.input)
    stem = _stem(args.input)
    trace = error_trace(graph, args.fmax, args.step, seed=args.seed, trials=args.trials)
    write_curve_csv(["f", "S", "mode", "seed"], trace.rows(), run.path(f"{stem}.error.csv"))
    run.finish(stem)
    return 0


def cmd_diff(args) -> int:
    run = Run(args, [args.map_a, args.map_b])
    report = diff_maps(run.load(args.map_a), run.load(args.map_b))
    stem = f"{_stem(args.map_a)}_vs_{_stem(args.map_b)}"
    text = json.dumps(report.to_dict(args.top), indent=2) + "\n"
    run.path(f"{stem}.diff.json").write_text(text, encoding="utf-8")
    write_curve_csv(["bin_i", "bin_j", "count"], report.missing_bin_matrix.rows(),
                    run.path(f"{stem}.missing_bins.csv"))
    sys.stdout.write(text)
    run.finish(stem)
    return 0


def _fraction(text: str) -> float:
    value = float(text)
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"{text} is not in (0, 1]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asmaps", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help, inputs=("input",)):
        p = sub.add_parser(name, help=help)
        for arg in inputs:
            p.add_argument(arg, help="edge-list file")
        p.add_argument("--out", default=".", help="artifact directory (default: cwd)")
        p.set_defaults(handler=handler)
        return p

    p = add("summary", cmd_summary, "N, L, degrees and Kt/Kr statistics")
    p.add_argument("--gamma", action="store_true", help="include the CCDF power-law fit")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = add("richclub", cmd_richclub, "rich-club coefficient against normalized rank")
    p.add_argument("--points", type=int, default=100, help="log-spaced samples; 0 keeps all")
    p.add_argument("--at", type=_fraction, help="print phi at this normalized rank")

    add("linkdist", cmd_linkdist, "link counts between 5%% rank bins")
    add("cycles", cmd_cycles, "triangle and rectangle coefficients by rank")

    p = add("generate", cmd_generate, "Barabasi-Albert graph as an edge list", inputs=())
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--m0", type=int, default=None, help="seed clique size (default m+1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--name", help="output file name inside --out")

    for name, handler, help in (("attack", cmd_attack, "remove nodes by decreasing degree"),
                                ("error", cmd_error, "remove nodes uniformly at random")):
        p = add(name, handler, help)
        p.add_argument("--fmax", type=_fraction, default=0.1)
        p.add_argument("--step", type=int, default=None, help="removals between samples")
        if name == "attack":
            p.add_argument("--recompute", action="store_true", help="re-rank degrees after each removal")
        else:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--trials", type=int, default=1)

    p = add("diff", cmd_diff, "classify links of map B missing from map A", inputs=("map_a", "map_b"))
    p.add_argument("--top", type=_fraction, nargs="+", default=[DEFAULT_TOP],
                   help="top-rank fractions for the rich-rich share")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except USAGE_ERRORS as exc:
        print(f"asmaps: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except TopologyError as exc:
        print(f"asmaps: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
