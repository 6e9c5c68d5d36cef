"""Command-line front end: point measures, time sweeps, figure curves, reports.

Subcommands
-----------
measure   one operator, one time; structured key/value text
sweep     eps(t) over a uniform grid; CSV on stdout or to a file
figure    canned sweep presets for the eight reference curves (1a..1d, 2a..2d)
classify  periodicity verdict and singularity times for an (h, J) pair

Exit codes: 0 success, 2 usage error, 3 measure undefined at the requested
point.  All diagnostics go to stderr; data goes to stdout or --output.
Numbers are printed with 12 fixed decimals (infinities as ``inf``) so that
identical configurations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .ising import (
    Periodicity,
    classify_periodicity,
    epsilon_ising,
    epsilon_zero_field,
    singularity_times,
)
from .linalg import evolution_operator
from .measure import ZeroTraceError, evolution_measure_series, production_measure
from .spin import SpinModelParams, heisenberg_hamiltonian, ising_hamiltonian, multimode_operator
from .tensor import MultipartiteOperator

DEFAULT_T_MAX = 8.0 * math.pi
DEFAULT_STEPS = 2001

# Reference curves: field value at J = 1 for each figure id.
FIGURES = {
    "1a": 1.0,
    "1b": 5.0 / 7.0,
    "1c": 7.0,
    "1d": 8.0,
    "2a": math.sqrt(2.0),
    "2b": math.sqrt(3.0) / 2.0,
    "2c": math.sqrt(5.0),
    "2d": math.sqrt(7.0),
}


@dataclass(frozen=True)
class SweepConfig:
    """Validated parameters of one eps(t) sweep."""

    model: str            # "ising" or "heisenberg"
    h: float
    J: float
    J1: float
    t_max: float
    steps: int
    method: str           # "analytic", "numerical" or "both"
    log_base: float


class CurvePoint(NamedTuple):
    t: float
    epsilon: float


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "inf"
    return f"{x:.12f}"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12f}{z.imag:+.12f}j"


def _emit(text: str, output: str) -> None:
    if output == "stdout":
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="\n") as fh:
            fh.write(text)


def _time_grid(t_max: float, steps: int) -> list[float]:
    return [t_max * k / (steps - 1) for k in range(steps)]


def _analytic_curve(cfg: SweepConfig) -> list[CurvePoint]:
    if cfg.h == 0.0:
        return [
            CurvePoint(t, epsilon_zero_field(cfg.J, t, cfg.log_base))
            for t in _time_grid(cfg.t_max, cfg.steps)
        ]
    return [
        CurvePoint(t, epsilon_ising(cfg.h, cfg.J, t, cfg.log_base))
        for t in _time_grid(cfg.t_max, cfg.steps)
    ]


def _numerical_curve(cfg: SweepConfig) -> list[CurvePoint]:
    if cfg.model == "ising":
        ham = ising_hamiltonian(cfg.h, cfg.J)
    else:
        ham = heisenberg_hamiltonian(SpinModelParams(h=cfg.h, J=cfg.J, J1=cfg.J1))
    series = evolution_measure_series(ham, _time_grid(cfg.t_max, cfg.steps), cfg.log_base)
    return [CurvePoint(t, eps) for t, eps in series]


def _sweep_csv(cfg: SweepConfig) -> str:
    if cfg.method == "analytic":
        rows = [(pt.t, (pt.epsilon,)) for pt in _analytic_curve(cfg)]
        header = "t,epsilon"
    elif cfg.method == "numerical":
        rows = [(pt.t, (pt.epsilon,)) for pt in _numerical_curve(cfg)]
        header = "t,epsilon"
    else:
        analytic = _analytic_curve(cfg)
        numerical = _numerical_curve(cfg)
        rows = [(a.t, (a.epsilon, b.epsilon)) for a, b in zip(analytic, numerical)]
        header = "t,epsilon,epsilon_numerical"
    lines = [header]
    for t, values in rows:
        lines.append(",".join([_fmt(t)] + [_fmt(v) for v in values]))
    return "\n".join(lines) + "\n"


def _gnuplot_script(csv_path: str, title: str) -> str:
    return (
        "set datafile separator ','\n"
        "set xlabel 't (units of 1/J)'\n"
        "set ylabel 'epsilon(t) [bits]'\n"
        f"set title '{title}'\n"
        "set key off\n"
        f"plot '{csv_path}' using 1:2 with lines\n"
    )


def _nearest_singularity(h: float, J: float, t: float):
    """Singularity spec within a grid-scale window of absolute time t, if any."""
    horizon = abs(J) * t + 1.0
    for spec in singularity_times(h, J, horizon):
        if abs(spec.time / abs(J) - t) <= 1e-6 * max(1.0, t):
            return spec
    return None


def _validated_sweep_config(args, parser: argparse.ArgumentParser) -> SweepConfig:
    if args.steps < 2:
        parser.error(f"--steps must be at least 2, got {args.steps}")
    if not args.t_max > 0:
        parser.error(f"--t-max must be positive, got {args.t_max}")
    if args.log_base <= 1.0:
        parser.error(f"--log-base must exceed 1, got {args.log_base}")
    if args.method in ("analytic", "both") and args.model != "ising":
        parser.error(f"--method {args.method} requires --model ising")
    return SweepConfig(
        model=args.model,
        h=args.h,
        J=args.J,
        J1=args.J1,
        t_max=args.t_max,
        steps=args.steps,
        method=args.method,
        log_base=args.log_base,
    )


def _cmd_measure(args, parser: argparse.ArgumentParser) -> int:
    if args.log_base <= 1.0:
        parser.error(f"--log-base must exceed 1, got {args.log_base}")
    lines: list[str] = [f"model: {args.model}"]

    if args.model == "multimode":
        if args.modes is None:
            parser.error("--model multimode requires --modes")
        try:
            amplitude = complex(args.amplitude)
        except ValueError:
            parser.error(f"cannot parse --amplitude {args.amplitude!r} as a complex number")
        try:
            op = multimode_operator(args.modes, amplitude)
        except ValueError as exc:
            parser.error(str(exc))
        lines.append(f"modes: {args.modes}")
        lines.append(f"amplitude: {_fmt_complex(amplitude)}")
    else:
        if args.t is None:
            parser.error(f"--model {args.model} requires --t")
        if args.method in ("analytic", "both") and args.model != "ising":
            parser.error(f"--method {args.method} requires --model ising")
        lines.append(f"h: {_fmt(args.h)}")
        lines.append(f"J: {_fmt(args.J)}")
        if args.model == "heisenberg":
            lines.append(f"J1: {_fmt(args.J1)}")
        lines.append(f"t: {_fmt(args.t)}")
        if args.model == "ising":
            ham = ising_hamiltonian(args.h, args.J)
        else:
            ham = heisenberg_hamiltonian(SpinModelParams(h=args.h, J=args.J, J1=args.J1))
        op = MultipartiteOperator(ham.space, evolution_operator(ham.matrix, args.t))

    try:
        result = production_measure(op, args.log_base)
    except ZeroTraceError as exc:
        detail = ""
        if args.model == "ising" and args.J != 0:
            spec = _nearest_singularity(args.h, args.J, args.t)
            if spec is not None:
                detail = f" singular point ({spec.family.value} family, n={spec.n}, p={spec.p})."
        print(f"measure undefined at the requested point:{detail or ' ' + str(exc)}", file=sys.stderr)
        return 3

    lines.append(f"log_base: {_fmt(args.log_base)}")
    lines.append(f"epsilon: {_fmt(result.epsilon)}")
    lines.append(f"norm_full: {_fmt(result.norm_full)}")
    lines.append(f"norm_counterpart: {_fmt(result.norm_counterpart)}")
    lines.append(f"trace_full: {_fmt_complex(result.trace_full)}")
    if args.model == "ising" and args.method in ("analytic", "both"):
        lines.append(f"epsilon_analytic: {_fmt(epsilon_ising(args.h, args.J, args.t, args.log_base))}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_sweep(args, parser: argparse.ArgumentParser) -> int:
    cfg = _validated_sweep_config(args, parser)
    _emit(_sweep_csv(cfg), args.output)
    return 0


def _cmd_figure(args, parser: argparse.ArgumentParser) -> int:
    if args.steps < 2:
        parser.error(f"--steps must be at least 2, got {args.steps}")
    if not args.t_max > 0:
        parser.error(f"--t-max must be positive, got {args.t_max}")
    cfg = SweepConfig(
        model="ising",
        h=FIGURES[args.id],
        J=1.0,
        J1=0.0,
        t_max=args.t_max,
        steps=args.steps,
        method="analytic",
        log_base=2.0,
    )
    if args.gnuplot is not None:
        if args.output == "stdout":
            parser.error("--gnuplot requires --output to point at a CSV file")
        with open(args.gnuplot, "w", newline="\n") as fh:
            fh.write(_gnuplot_script(args.output, f"curve {args.id}: h = {cfg.h:g}, J = 1"))
    _emit(_sweep_csv(cfg), args.output)
    return 0


def _cmd_classify(args, parser: argparse.ArgumentParser) -> int:
    if args.J == 0:
        parser.error("J = 0 means no interaction: the measure is identically zero; nothing to classify")
    if not args.t_max > 0:
        parser.error(f"--t-max must be positive, got {args.t_max}")
    verdict = classify_periodicity(args.h, args.J)
    lines = [
        f"h: {_fmt(args.h)}",
        f"J: {_fmt(args.J)}",
        f"h/J: {_fmt(args.h / args.J)}",
        f"kind: {verdict.kind.value}",
    ]
    if verdict.kind is Periodicity.PERIODIC:
        p, q = verdict.rational_form
        lines.append(f"rational_form: {p}/{q}")
        lines.append(f"period: {_fmt(verdict.period)}")
    t1, t2, t3 = verdict.period_triple
    lines.append(f"T1: {_fmt(t1)}")
    lines.append(f"T2: {_fmt(t2)}")
    lines.append(f"T3: {_fmt(t3)}")
    specs = singularity_times(args.h, args.J, args.t_max)
    lines.append(f"singularities (t <= {_fmt(args.t_max)}): {len(specs)}")
    for s in specs:
        lines.append(f"  family={s.family.value} n={s.n} p={s.p} t={_fmt(s.time)}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entprod",
        description="Entanglement production measure of two-spin evolution operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_model: bool = True) -> None:
        if with_model:
            p.add_argument("--model", choices=("ising", "heisenberg"), default="ising")
        p.add_argument("--h", type=float, default=1.0, help="Zeeman field")
        p.add_argument("--J", type=float, default=1.0, help="longitudinal coupling")
        p.add_argument("--J1", type=float, default=0.0, help="transverse coupling (heisenberg only)")
        p.add_argument("--log-base", type=float, default=2.0, dest="log_base")
        p.add_argument("--output", default="stdout", help="file path or 'stdout'")

    p_measure = sub.add_parser("measure", help="measure at a single time / single operator")
    p_measure.add_argument("--model", choices=("ising", "heisenberg", "multimode"), default="ising")
    p_measure.add_argument("--h", type=float, default=1.0)
    p_measure.add_argument("--J", type=float, default=1.0)
    p_measure.add_argument("--J1", type=float, default=0.0)
    p_measure.add_argument("--t", type=float, default=None, help="evolution time")
    p_measure.add_argument("--method", choices=("analytic", "numerical", "both"), default="numerical")
    p_measure.add_argument("--modes", type=int, default=None, help="mode count for --model multimode")
    p_measure.add_argument("--amplitude", default="1", help="complex amplitude for --model multimode")
    p_measure.add_argument("--log-base", type=float, default=2.0, dest="log_base")
    p_measure.add_argument("--output", default="stdout")
    p_measure.set_defaults(func=_cmd_measure)

    p_sweep = sub.add_parser("sweep", help="eps(t) on a uniform grid, CSV output")
    add_common(p_sweep)
    p_sweep.add_argument("--t-max", type=float, default=DEFAULT_T_MAX, dest="t_max")
    p_sweep.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p_sweep.add_argument("--method", choices=("analytic", "numerical", "both"), default="numerical")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_figure = sub.add_parser("figure", help="canned reference curves")
    p_figure.add_argument("id", choices=sorted(FIGURES))
    p_figure.add_argument("--t-max", type=float, default=DEFAULT_T_MAX, dest="t_max")
    p_figure.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p_figure.add_argument("--output", default="stdout")
    p_figure.add_argument("--gnuplot", default=None, help="also write a gnuplot script here")
    p_figure.set_defaults(func=_cmd_figure)

    p_classify = sub.add_parser("classify", help="periodicity and singularity report")
    add_common(p_classify, with_model=False)
    p_classify.add_argument("--t-max", type=float, default=DEFAULT_T_MAX, dest="t_max",
                            help="horizon for the singularity listing (units 1/J)")
    p_classify.set_defaults(func=_cmd_classify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
