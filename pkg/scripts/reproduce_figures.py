#!/usr/bin/env python3
"""Generate the eight reference entanglement-production curves.

Writes one CSV per curve (plus a gnuplot script), prints the periodicity
verdict and the singularity times for each field value, and optionally
renders PNGs with matplotlib.

Usage:
    python scripts/reproduce_figures.py --outdir figures [--plot]
"""

from __future__ import annotations

import argparse
import math
from pathlib import Path

from entprod import Periodicity, classify_periodicity, singularity_times
from entprod.cli import FIGURES, SweepConfig, _gnuplot_script, _sweep_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("figures"))
    ap.add_argument("--t-max", type=float, default=8.0 * math.pi, dest="t_max")
    ap.add_argument("--steps", type=int, default=2001)
    ap.add_argument("--plot", action="store_true", help="also render PNGs (needs matplotlib)")
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for fig_id, h in FIGURES.items():
        cfg = SweepConfig(model="ising", h=h, J=1.0, J1=0.0,
                          t_max=args.t_max, steps=args.steps,
                          method="analytic", log_base=2.0)
        csv_path = args.outdir / f"curve_{fig_id}.csv"
        csv_path.write_text(_sweep_csv(cfg), newline="\n")
        (args.outdir / f"curve_{fig_id}.gp").write_text(
            _gnuplot_script(csv_path.name, f"curve {fig_id}: h/J = {h:.6g}"), newline="\n"
        )

        verdict = classify_periodicity(h, 1.0)
        if verdict.kind is Periodicity.PERIODIC:
            p, q = verdict.rational_form
            line = f"periodic, h/J = {p}/{q}, period {verdict.period / math.pi:g} pi"
        else:
            t1, t2, t3 = verdict.period_triple
            line = f"quasi-periodic, base periods ({t1:.4f}, {t2:.4f}, {t3:.4f})"
        sing = singularity_times(h, 1.0, args.t_max)
        if sing:
            times = ", ".join(f"{s.time / math.pi:g} pi" for s in sing)
            line += f"; diverges at t = {times}"
        print(f"curve {fig_id} (h/J = {h:.6g}): {line}")

        if args.plot:
            _render(csv_path, fig_id, h)

    print(f"wrote {2 * len(FIGURES)} files to {args.outdir}/")
    return 0


def _render(csv_path: Path, fig_id: str, h: float) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    data = np.genfromtxt(csv_path, delimiter=",", skip_header=1)
    t, eps = data[:, 0], data[:, 1]
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.plot(t / math.pi, eps, lw=0.8)
    ax.set_xlabel("t / pi  (units of 1/J)")
    ax.set_ylabel("epsilon(t)  [bits]")
    ax.set_title(f"curve {fig_id}: h/J = {h:.6g}")
    ax.set_ylim(0, min(np.nanmax(eps[np.isfinite(eps)]) * 1.1, 4.0))
    fig.tight_layout()
    fig.savefig(csv_path.with_suffix(".png"), dpi=150)
    plt.close(fig)


if __name__ == "__main__":
    raise SystemExit(main())
