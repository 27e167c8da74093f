"""Sweep the growth parameter for one of the logistic-map variants.

Emits a long-format CSV (a, t, x, decision) and prints where each
trajectory ended up, which for the incursive map shows the (a-1)/a
steady state emerging for every a.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from interinfo.dynamics import DynamicsParams, VARIANTS, simulate, sweep_csv

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--variant", choices=VARIANTS, default="incursive")
    parser.add_argument("--a-min", type=float, default=1.5)
    parser.add_argument("--a-max", type=float, default=10.0)
    parser.add_argument("--points", type=int, default=18)
    parser.add_argument("--x0", type=float, default=0.3)
    parser.add_argument("--steps", type=int, default=400)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("-o", "--output", default=str(ROOT / "out" / "sweep.csv"))
    args = parser.parse_args()

    a_values = [float(a) for a in np.linspace(args.a_min, args.a_max, args.points)]
    text = sweep_csv(a_values, args.x0, args.steps, args.variant, seed=args.seed)
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)

    for a in a_values:
        traj = simulate(
            DynamicsParams(a=a, x0=args.x0, steps=args.steps), args.variant, seed=args.seed
        )
        notes = []
        if traj.truncated:
            notes.append("truncated")
        if traj.escaped:
            notes.append("escaped [0,1]")
        suffix = f"  [{', '.join(notes)}]" if notes else ""
        print(f"a={a:6.3f}  final x={traj.final:.9f}{suffix}")
    print(f"\nwrote {out}")


if __name__ == "__main__":
    main()
