"""Batch command-line frontend.

Subcommands: analyze, coeffs, disc, factorize, stability, crossings,
ensemble.  Exit codes: 0 success, 1 input error, 2 internal-consistency
fault.  Rationals are serialized as "p/q" strings; floats appear only for
intrinsically approximate quantities (eigenvalues, gap).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import crossing, discriminants, ensemble, spectral, stability
from .errors import InputError, InternalConsistencyError
from .graph import ORACLE_MAX_VERTICES, component_counts, is_connected, parse_graph


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; keep 1 for input errors
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _load_graph(path: str):
    if path is None:
        raise InputError("--input is required")
    return parse_graph(_read_json(path))


def _parse_fractions(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip() != ""]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational vector {text!r}") from exc


def _emit(payload: dict, output: str | None):
    text = json.dumps(payload, indent=2)
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _cmd_analyze(args) -> dict:
    g = _load_graph(args.input)
    c_all, c_plus, c_minus = component_counts(g)
    out = {
        "n": g.n,
        "black_count": g.black_count,
        "red_count": g.red_count,
        "components": {"full": c_all, "black": c_plus, "red": c_minus},
    }
    if is_connected(g):
        small, large = spectral.index_limits(g)
        out["tau"] = spectral.crossing_count(g)
        out["index_limits"] = {"small_t": list(small), "large_t": list(large)}
    else:
        out["tau"] = None
        out["index_limits"] = None
    if args.t is not None:
        t = _parse_fractions(args.t)
        lap = spectral.laplacian(g, t)
        out["t"] = [str(x) for x in t]
        out["index"] = list(spectral.inertia(lap))
        out["eigenvalues"] = [float(x) for x in spectral.eigenvalues(lap)]
    return out


def _cmd_coeffs(args) -> dict:
    g = _load_graph(args.input)
    return crossing.crossing_polynomial(g).to_json_dict()


def _cmd_disc(args) -> dict:
    g = _load_graph(args.input)
    p = crossing.crossing_polynomial(g)
    delta = discriminants.discriminant(p)
    point = discriminants.degenerate_point(p)
    out = {
        "delta": str(delta),
        "gap": discriminants.gap(p),
        "degenerate_point": None if point is None else [str(point[0]), str(point[1])],
        "forest_sum": None,
        "cycle_minor": None,
    }
    if g.n <= ORACLE_MAX_VERTICES:
        try:
            out["forest_sum"] = str(discriminants.forest_sum(g))
        except InputError:
            pass  # enumeration too large for this graph; leave null
    if all(w == 1 for _, _, w in g.black_edges):
        cm = discriminants.cycle_basis_minor(g)
        out["cycle_minor"] = None if cm is None else str(cm)
    return out


def _cmd_factorize(args) -> dict:
    g = _load_graph(args.input)
    p = crossing.crossing_polynomial(g)
    fac = discriminants.factorize(p)
    if fac is None:
        return {"factorizable": False}
    return {"alpha": str(fac.alpha), "C": [str(c) for c in fac.c]}


def _cmd_stability(args) -> dict:
    g = _load_graph(args.input)
    out = {"thresholds": [_frac(w) for w in stability.axis_thresholds(g)]}
    if args.t is not None:
        report = stability.certify(g, _parse_fractions(args.t))
        out.update(
            {
                "certified": report.certified,
                "boundary": report.boundary,
                "margin": _frac(report.certificate_margin),
                "verified_index": list(report.verified_index),
            }
        )
    return out


def _cmd_crossings(args) -> dict:
    g = _load_graph(args.input)
    if args.ray is None:
        raise InputError("--ray a1,a2,... is required")
    if not is_connected(g):
        raise InputError("ray crossings require a connected graph")
    alpha = _parse_fractions(args.ray)
    p = crossing.crossing_polynomial(g)
    q = crossing.ray_polynomial(p, alpha)
    result = crossing.ray_crossings(p, alpha)
    return {
        "ray": [str(a) for a in alpha],
        "ray_polynomial": [str(c) for c in q],
        "roots": [
            {
                "value": _frac(r.value),
                "interval": [str(r.lo), str(r.hi)],
                "midpoint": r.midpoint,
                "multiplicity": r.multiplicity,
            }
            for r in result.roots
        ],
    }


def _cmd_ensemble(args) -> dict:
    raw = _read_json(args.input)
    if args.seed is not None:
        raw["seed"] = args.seed
    cfg = ensemble.config_from_dict(raw)
    if args.output is None:
        raise InputError("--output CSV path is required for ensemble runs")
    records = ensemble.generate_records(cfg, threads=args.threads)
    ensemble.write_csv(records, args.output)
    base = args.output[:-4] if args.output.endswith(".csv") else args.output
    summary_path = base + ".summary.json"
    ensemble.write_summary(ensemble.summarize(records), summary_path)
    return {"csv": args.output, "summary": summary_path, "records": len(records)}


_COMMANDS = {
    "analyze": _cmd_analyze,
    "coeffs": _cmd_coeffs,
    "disc": _cmd_disc,
    "factorize": _cmd_factorize,
    "stability": _cmd_stability,
    "crossings": _cmd_crossings,
    "ensemble": _cmd_ensemble,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="signedlap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    common = _Parser(add_help=False)
    common.add_argument("--input", help="input graph/config JSON path")
    common.add_argument("--output", help="output path (default: stdout JSON)")
    common.add_argument("--seed", type=int, help="override the config master seed (ensemble)")
    common.add_argument("--threads", type=int, default=1, help="worker threads (ensemble)")
    for name in _COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("analyze", "stability"):
            p.add_argument("--t", help="red magnitudes, comma-separated rationals")
        if name == "crossings":
            p.add_argument("--ray", help="ray direction, comma-separated positive rationals")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors / --help
        return exc.code if isinstance(exc.code, int) else 1
    handler = _COMMANDS[args.command]
    try:
        payload = handler(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency fault: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.command == "ensemble":
        print(json.dumps(payload, indent=2))
    else:
        _emit(payload, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
