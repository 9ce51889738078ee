"""Command-line front end.

Every subcommand writes one document to stdout: JSON with
``schema_version "1"`` or, for ``wavefunction --format csv``, a CSV grid.
Exit codes: 0 success, 1 a numerical check failed, 2 bad arguments.

    littlegroup algebra-check
    littlegroup little-group --p 0 0 1 1
    littlegroup gauge --u 1 --v 0 --A 1 0 0.5 0.5
    littlegroup contract --etas 2,3,4,5,6
    littlegroup wavefunction --eta 2 --space position --n 41 41 --format csv
    littlegroup parton-report --energy 900 --mass 0.938
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys

import numpy as np

from . import contraction, lie_core, little_groups, oscillator, parton

__all__ = ["main", "algebra_relations", "build_parser"]

SCHEMA_VERSION = "1"
ALGEBRA_TOL = 1e-12
INVARIANCE_TOL = 1e-9


class UsageError(Exception):
    """Validation failure mapped to exit code 2."""


def _num(x):
    x = float(x)
    return x if math.isfinite(x) else None


def _matrix(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {
        "real": [[_num(x) for x in row] for row in m.real],
        "imag": [[_num(x) for x in row] for row in m.imag],
    }


def _record(command: str, inputs: dict, results: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def algebra_relations() -> list[tuple[str, float]]:
    """Labelled deviations of every commutation relation checked by ``algebra-check``."""
    g = lie_core.standard_generators()
    n1, n2 = lie_core.n_generators()
    comm = lie_core.commutator
    cyclic = ((1, 2, 3), (2, 3, 1), (3, 1, 2))
    rows = []

    def dev(lhs, rhs):
        return float(np.abs(lhs - rhs).max())

    for i, j, k in cyclic:
        rows.append((f"[J{i},J{j}]=iJ{k}", dev(comm(g[f"J{i}"], g[f"J{j}"]), 1j * g[f"J{k}"])))
    for i, j, k in cyclic:
        rows.append((f"[K{i},K{j}]=-iJ{k}", dev(comm(g[f"K{i}"], g[f"K{j}"]), -1j * g[f"J{k}"])))
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                rows.append((f"[J{i},K{j}]=0", dev(comm(g[f"J{i}"], g[f"K{j}"]), 0)))
                continue
            k = 6 - i - j
            sign = 1 if (i, j, k) in cyclic else -1
            label = f"[J{i},K{j}]={'' if sign > 0 else '-'}iK{k}"
            rows.append((label, dev(comm(g[f"J{i}"], g[f"K{j}"]), sign * 1j * g[f"K{k}"])))
    rows.append(("[N1,N2]=0", dev(comm(n1, n2), 0)))
    rows.append(("[J3,N1]=iN2", dev(comm(g["J3"], n1), 1j * n2)))
    rows.append(("[J3,N2]=-iN1", dev(comm(g["J3"], n2), -1j * n1)))
    return rows


def cmd_algebra_check(args) -> tuple[dict, int]:
    rows = algebra_relations()
    worst = max(d for _, d in rows)
    results = {
        "relations": {label: d for label, d in rows},
        "max_deviation": worst,
        "tolerance": ALGEBRA_TOL,
        "passed": worst <= ALGEBRA_TOL,
    }
    return _record("algebra-check", {}, results), 0 if worst <= ALGEBRA_TOL else 1


def cmd_little_group(args) -> tuple[dict, int]:
    p = lie_core.four_vector(args.p)
    try:
        kind = little_groups.classify(p, args.rel_tol)
        gens = little_groups.little_group_generators(p, args.rel_tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if kind is little_groups.ParticleClass.MASSLESS:
        labels = ["J3", "N1", "N2"]
    elif np.allclose(p[:3], 0.0):
        labels = ["J1", "J2", "J3"]
    else:
        labels = ["B J1 B^-1", "B J2 B^-1", "B J3 B^-1"]
    rng = np.random.default_rng(args.seed)
    params = rng.uniform(-3.0, 3.0, size=len(gens))
    deviation = little_groups.verify_invariance(p, params, args.rel_tol)
    annihilation = max(float(np.abs(g @ p).max()) for g in gens)
    results = {
        "class": kind.value,
        "generators": {label: _matrix(g) for label, g in zip(labels, gens)},
        "annihilation": annihilation,
        "parameters": [float(x) for x in params],
        "invariance_deviation": deviation,
        "tolerance": INVARIANCE_TOL,
    }
    inputs = {"p": [float(x) for x in p], "seed": args.seed, "rel_tol": args.rel_tol}
    return _record("little-group", inputs, results), 0 if deviation <= INVARIANCE_TOL else 1


def cmd_gauge(args) -> tuple[dict, int]:
    a1, a2, a3, a0 = args.A
    pot = little_groups.FourPotential(a1, a2, a3, a0)
    try:
        out = little_groups.gauge_transform(pot, args.u, args.v)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results = {
        "A": [out.a1, out.a2, out.a3, out.a0],
        "shift": args.u * a1 + args.v * a2,
        "gauge_element": [[float(x) for x in row] for row in little_groups.gauge_element(args.u, args.v)],
    }
    inputs = {"u": args.u, "v": args.v, "A": [a1, a2, a3, a0]}
    return _record("gauge", inputs, results), 0


def _parse_etas(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"--etas must be a comma-separated list of numbers: {text!r}") from exc


def cmd_contract(args) -> tuple[dict, int]:
    etas = _parse_etas(args.etas)
    try:
        report = contraction.contraction_report(etas)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    bound = [4.0 * math.exp(-2.0 * e) for e in report.etas]
    converged = all(
        d1 <= b and d2 <= b for d1, d2, b in zip(report.deviations_n1, report.deviations_n2, bound)
    )
    results = report.as_dict()
    results["bound"] = bound
    results["converged"] = converged
    return _record("contract", {"etas": etas}, results), 0 if converged else 1


def _wavefunction_grid(args) -> oscillator.Grid2D:
    if args.window is None:
        window = oscillator.six_sigma_window(args.eta)
    else:
        c1, c2, h1, h2 = args.window
        window = ((c1, c2), (h1, h2))
    if args.space == "position":
        f = lambda a, b: oscillator.amplitude(args.eta, a, b)  # noqa: E731
    else:
        f = lambda a, b: oscillator.momentum_amplitude(args.eta, a, b)  # noqa: E731
    try:
        return oscillator.sample_grid(f, window, tuple(args.n))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_wavefunction(args):
    grid = _wavefunction_grid(args)
    axes = ("z", "t") if args.space == "position" else ("q_z", "q_0")
    if args.format == "csv":
        buf = io.StringIO()
        buf.write("axis1,axis2,amplitude\n")
        a1, a2 = grid.axes()
        for i, x in enumerate(a1):
            for j, y in enumerate(a2):
                buf.write(f"{float(x)!r},{float(y)!r},{float(grid.values[i, j])!r}\n")
        return buf.getvalue(), 0
    inputs = {
        "eta": args.eta,
        "space": args.space,
        "window": None if args.window is None else list(args.window),
        "n": list(args.n),
    }
    results = {
        "axes": list(axes),
        "origin": [float(x) for x in grid.origin],
        "spacing": [float(x) for x in grid.spacing],
        "n": list(grid.n),
        "values": [[float(x) for x in row] for row in grid.values],
    }
    return _record("wavefunction", inputs, results), 0


def cmd_parton_report(args) -> tuple[dict, int]:
    try:
        report = parton.parton_report(args.energy, args.mass)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    inputs = {"energy": args.energy, "mass": args.mass}
    return _record("parton-report", inputs, report.as_dict()), 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="littlegroup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("algebra-check", help="verify the Lorentz and E(2) commutation relations")
    p.set_defaults(func=cmd_algebra_check)

    p = sub.add_parser("little-group", help="little-group generators of a four-momentum")
    p.add_argument("--p", nargs=4, type=float, required=True, metavar=("X", "Y", "Z", "T"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rel-tol", type=float, default=little_groups.DEFAULT_REL_TOL)
    p.set_defaults(func=cmd_little_group)

    p = sub.add_parser("gauge", help="gauge transformation of a photon four-potential")
    p.add_argument("--u", type=float, default=0.0)
    p.add_argument("--v", type=float, default=0.0)
    p.add_argument("--A", nargs=4, type=float, required=True, metavar=("A1", "A2", "A3", "A0"))
    p.set_defaults(func=cmd_gauge)

    p = sub.add_parser("contract", help="contraction of boosted rotations to N1, N2")
    p.add_argument("--etas", default="2,3,4,5,6", help="comma-separated increasing rapidities")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("wavefunction", help="sample a squeezed wave function on a grid")
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--space", choices=("position", "momentum"), default="position")
    p.add_argument(
        "--window", nargs=4, type=float, metavar=("C1", "C2", "H1", "H2"),
        help="centre and half-widths per axis (default: six-sigma square at the origin)",
    )
    p.add_argument("--n", nargs=2, type=int, default=[101, 101], metavar=("N1", "N2"))
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("parton-report", help="boost factors of a fast hadron")
    p.add_argument("--energy", type=float, required=True, help="total energy in GeV")
    p.add_argument("--mass", type=float, default=parton.PROTON_MASS_GEV, help="mass in GeV")
    p.set_defaults(func=cmd_parton_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out, code = args.func(args)
    except UsageError as exc:
        print(f"littlegroup: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"littlegroup: internal error: {exc}", file=sys.stderr)
        return 1
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        sys.stdout.write(json.dumps(out, indent=2, allow_nan=False))
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
