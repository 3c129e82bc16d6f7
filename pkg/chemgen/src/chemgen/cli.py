"""chemgen command line: regenerate molecular family data files."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .generate import PRESETS, generate


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="chemgen", description=__doc__)
    parser.add_argument("--molecule", required=True, choices=sorted(PRESETS))
    parser.add_argument("--out", required=True, help="output family JSON path")
    parser.add_argument("--basis", help="override preset basis")
    parser.add_argument("--transformation", help="override preset mapping label")
    parser.add_argument("--grid-min", type=float, dest="grid_min")
    parser.add_argument("--grid-max", type=float, dest="grid_max")
    parser.add_argument("--points", type=int)
    args = parser.parse_args(argv)

    spec = PRESETS[args.molecule]
    overrides = {
        k: v
        for k, v in (
            ("basis", args.basis),
            ("transformation", args.transformation),
            ("grid_min", args.grid_min),
            ("grid_max", args.grid_max),
            ("points", args.points),
        )
        if v is not None
    }
    if overrides:
        spec = replace(spec, **overrides)
    try:
        generate(spec, args.out)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out} ({spec.points} points, {spec.n_qubits} qubits)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
