"""Command-line front end: ``sweep``, ``trace``, ``circuit`` and ``verify``.

Parameters may come from flags or from a flat ``key = value`` file passed with
``--config``; flags win. Output goes to ``--out`` or, by default, to a file in
``$TEMPORAL_WITNESS_OUTDIR`` (current directory if unset).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bell import MediatorState
from .circuit import CIRCUIT_HEADER, ProtocolSpec, circuit_rows, run_protocol
from .hamiltonians import HamiltonianParams
from .output import csv_text, json_text, rows_as_records, write_text
from .scenarios import FIG4_PRESETS, NO_ROTATION, ROTATE_90_X, fig4_preset
from .sweep import (
    DEFAULT_GRID_N,
    DEFAULT_T_MAX,
    DEFAULT_T_STEPS,
    SWEEP_HEADER,
    TRACE_HEADER,
    SweepConfig,
    max_over_time,
    run_sweep,
    trace_curve,
)
from .tolerances import CLASSICAL_BOUND, Tolerances
from .verify import SUITES, run_all

OUTDIR_ENV = "TEMPORAL_WITNESS_OUTDIR"

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

PREPS = {"identity": NO_ROTATION, "90x": ROTATE_90_X}

DEFAULTS = {
    "a": 0.0, "b": 0.0, "c": 1.0, "r": 0.0, "f": 0.0, "g": 0.0,
    "alpha": None, "beta": None, "gamma": None, "state": None,
    "t_max": DEFAULT_T_MAX, "t_steps": None, "format": "csv", "seed": 0,
    "threads": 1, "method": "numeric", "out": None,
    "grid": DEFAULT_GRID_N, "f_range": "-2:2", "g_range": "-2:2",
    "preset": None, "prep": None, "prep_theta": None, "prep_phi": 0.0,
    "basis1": None, "basis2": None, "t": None, "damping": 0.0,
    "draws": 200, "tol": None, "suite": None,
}

# Config-file values arrive as strings and are converted with these.
CONVERTERS = {
    **{k: float for k in ("a", "b", "c", "r", "f", "g", "alpha", "beta", "gamma",
                          "t_max", "prep_theta", "prep_phi", "t", "damping", "tol")},
    **{k: int for k in ("t_steps", "seed", "threads", "grid", "draws")},
}


class UsageError(Exception):
    pass


def read_config(path) -> dict:
    """Parse a flat ``key = value`` file; ``#`` starts a comment."""
    cfg = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                cfg[key] = CONVERTERS.get(key, str)(value)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: bad value {value!r} for {key}") from None
    return cfg


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="flat key = value file; flags override it")
    for name in ("a", "b", "c", "r", "f", "g"):
        p.add_argument(f"--{name}", type=float, help=f"Hamiltonian coefficient {name}")
    for name in ("alpha", "beta", "gamma"):
        p.add_argument(f"--{name}", type=float, help=f"mediator Bloch component {name}")
    p.add_argument("--state", choices=["z+", "z-", "y+", "y-", "x+", "x-", "mixed"])
    p.add_argument("--t-max", type=float)
    p.add_argument("--t-steps", type=int)
    p.add_argument("--method", choices=["numeric", "closed_form"])
    p.add_argument("--out", help="output file path")
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="temporal-witness",
        description="Temporal Bell witnesses of mediator non-classicality.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sweep", help="max_t B(t) over an (f, g) grid")
    _add_common(sp)
    sp.add_argument("--grid", type=int, help="points per axis")
    sp.add_argument("--f-range", help="lo:hi")
    sp.add_argument("--g-range", help="lo:hi")

    tp = sub.add_parser("trace", help="B(t) on a uniform time grid")
    _add_common(tp)
    tp.add_argument("--preset", help=f"one of {sorted(FIG4_PRESETS)}")

    cp = sub.add_parser("circuit", help="three-qubit ancilla circuit emulation")
    _add_common(cp)
    cp.add_argument("--preset", help=f"one of {sorted(FIG4_PRESETS)}")
    cp.add_argument("--prep", choices=sorted(PREPS), help="mediator preparation")
    cp.add_argument("--prep-theta", type=float)
    cp.add_argument("--prep-phi", type=float)
    cp.add_argument("--basis1", choices=["z", "x"])
    cp.add_argument("--basis2", choices=["z", "x"])
    cp.add_argument("--t", type=float, help="single mixing time")
    cp.add_argument("--damping", type=float, help="per-pulse decay rate; factor exp(-rate)")

    vp = sub.add_parser("verify", help="run randomised property suites")
    _add_common(vp)
    vp.add_argument("--draws", type=int)
    vp.add_argument("-t", "--tol", type=float, help="override every tolerance")
    vp.add_argument("--suite", action="append", choices=sorted(SUITES))
    return parser


def resolve(args: argparse.Namespace) -> dict:
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    merged = {}
    for key, default in DEFAULTS.items():
        flag = getattr(args, key, None)
        merged[key] = flag if flag is not None else cfg.get(key, default)
    merged["command"] = args.command
    merged["explicit_fg"] = any(
        getattr(args, k, None) is not None or k in cfg for k in ("f", "g")
    )
    return merged


def _interval(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(x) for x in str(text).split(":"))
    except ValueError:
        raise UsageError(f"range must look like lo:hi, got {text!r}") from None
    return lo, hi


def _params(o) -> HamiltonianParams:
    return HamiltonianParams(o["a"], o["b"], o["c"], o["f"], o["g"], o["r"])


def _state(o, default: MediatorState) -> MediatorState:
    components = (o["alpha"], o["beta"], o["gamma"])
    if o["state"] is not None and any(c is not None for c in components):
        raise UsageError("use either --state or --alpha/--beta/--gamma, not both")
    if o["state"] is not None:
        return MediatorState.from_label(o["state"])
    if any(c is not None for c in components):
        return MediatorState(*(0.0 if c is None else c for c in components))
    return default


def _output_path(o, stem: str) -> Path:
    if o["out"]:
        return Path(o["out"])
    base = Path(os.environ.get(OUTDIR_ENV, "."))
    return base / f"{stem}.{o['format']}"


def _emit(o, stem, header, rows, meta: dict) -> list[Path]:
    path = _output_path(o, stem)
    if o["format"] == "json":
        return [write_text(path, json_text({**meta, "rows": rows_as_records(header, rows)}))]
    written = [write_text(path, csv_text(header, rows))]
    if meta:
        written.append(write_text(path.with_suffix(".summary.json"), json_text(meta)))
    return written


def cmd_sweep(o) -> int:
    state = _state(o, MediatorState(beta=1.0))
    t_steps = o["t_steps"] or DEFAULT_T_STEPS
    if o["explicit_fg"]:
        p = _params(o)
        best, arg = max_over_time(p, state, o["t_max"], t_steps, o["method"])
        rows = [(p.f, p.g, best, arg)]
        meta = {
            "mode": "single_point",
            "params": p.as_dict(),
            "state": {"alpha": state.alpha, "beta": state.beta, "gamma": state.gamma},
            "t_max": o["t_max"],
            "t_steps": t_steps,
            "max_B": best,
            "argmax_t": arg,
            "violates_classical_bound": best > CLASSICAL_BOUND,
        }
    else:
        cfg = SweepConfig(
            f_range=_interval(o["f_range"]),
            g_range=_interval(o["g_range"]),
            grid_n=o["grid"],
            t_max=o["t_max"],
            t_steps=t_steps,
            a=o["a"], b=o["b"], c=o["c"], r=o["r"],
            state=state,
            method=o["method"],
        )
        result = run_sweep(cfg, threads=o["threads"])
        rows = result.rows()
        meta = {"mode": "grid", **result.summary()}
    meta["version"] = __version__
    for path in _emit(o, "sweep", SWEEP_HEADER, rows, meta):
        print(path)
    return EXIT_OK


def cmd_trace(o) -> int:
    if o["preset"]:
        preset = fig4_preset(o["preset"])
        p, state = preset.params, preset.state
    else:
        p, state = _params(o), _state(o, MediatorState(beta=1.0))
    tr = trace_curve(p, state, o["t_max"], o["t_steps"] or 200, o["method"])
    rows = list(zip(tr.times.tolist(), tr.values.tolist()))
    meta = {
        "preset": o["preset"],
        "params": p.as_dict(),
        "state": {"alpha": state.alpha, "beta": state.beta, "gamma": state.gamma},
        "max_B": tr.max_value,
        "argmax_t": tr.argmax_t,
        "exceeds_classical_bound": tr.max_value > CLASSICAL_BOUND,
        "version": __version__,
    }
    for path in _emit(o, "trace", TRACE_HEADER, rows, meta):
        print(path)
    return EXIT_OK


def _circuit_prep(o):
    if o["prep_theta"] is not None:
        if o["prep"] is not None:
            raise UsageError("use either --prep or --prep-theta/--prep-phi, not both")
        return (o["prep_theta"], o["prep_phi"])
    if o["prep"] is not None:
        if o["prep"] not in PREPS:
            raise UsageError(f"unknown prep {o['prep']!r}; choose from {sorted(PREPS)}")
        return PREPS[o["prep"]]
    return None


def cmd_circuit(o) -> int:
    if o["damping"] < 0:
        raise UsageError("--damping must be non-negative")
    factor = math.exp(-o["damping"])
    prep = _circuit_prep(o)
    if o["preset"]:
        preset = fig4_preset(o["preset"])
        params, prep = preset.params, prep if prep is not None else preset.prep
    else:
        params, prep = _params(o), prep if prep is not None else NO_ROTATION
    if o["t"] is not None:
        times = np.array([o["t"]])
    else:
        times = np.linspace(0.0, o["t_max"], o["t_steps"] or 200)

    if (o["basis1"] is None) != (o["basis2"] is None):
        raise UsageError("--basis1 and --basis2 must be given together")
    if o["basis1"] is not None:
        header = ("t", "basis1", "basis2", "E")
        rows = [
            (float(t), o["basis1"], o["basis2"],
             run_protocol(ProtocolSpec(o["basis1"], o["basis2"], params, float(t), tuple(prep), factor)))
            for t in times
        ]
    else:
        header = CIRCUIT_HEADER
        rows = circuit_rows(params, times, prep, factor)
    meta = {
        "preset": o["preset"],
        "params": params.as_dict(),
        "prep": {"theta": prep[0], "phi": prep[1]},
        "damping_rate": o["damping"],
        "pulse_factor": factor,
        "version": __version__,
    }
    for path in _emit(o, "circuit", header, rows, meta):
        print(path)
    return EXIT_OK


def cmd_verify(o) -> int:
    tol = Tolerances.uniform(o["tol"]) if o["tol"] is not None else Tolerances()
    results = run_all(o["seed"], o["draws"], tol, o["suite"])
    report = [r.as_dict() for r in results]
    for r in report:
        print(json.dumps(r, sort_keys=True))
    ok = all(r.passed for r in results)
    print(json.dumps({"seed": o["seed"], "draws": o["draws"], "passed": ok}, sort_keys=True))
    if o["out"]:
        write_text(o["out"], json_text({"seed": o["seed"], "draws": o["draws"], "passed": ok, "suites": report}))
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {"sweep": cmd_sweep, "trace": cmd_trace, "circuit": cmd_circuit, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = resolve(args)
        return COMMANDS[args.command](opts)
    except (UsageError, ValueError) as exc:
        print(f"temporal-witness {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"temporal-witness {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
