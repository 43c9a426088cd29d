#!/usr/bin/env python3
"""Write point files, JSON reports and SVG drawings for the reference
configurations into a gallery directory."""

import argparse
import sys
from pathlib import Path

from simplewedge import (
    analyze,
    closed_orbit_config,
    g_extended,
    nine_point,
    render_svg,
    report_to_json,
    six_point,
    write_points,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="gallery", help="output directory")
    parser.add_argument("--max-k", type=int, default=5, help="largest closed-orbit parameter")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    entries = [("six", six_point()), ("nine", nine_point()), ("g-ext-3", g_extended(3))]
    entries += [(f"closed-orbit-{k}", closed_orbit_config(k)) for k in range(2, args.max_k + 1)]

    for name, config in entries:
        report = analyze(config)
        (out / f"{name}.txt").write_text(write_points(config.points), encoding="utf-8")
        (out / f"{name}.json").write_text(report_to_json(report) + "\n", encoding="utf-8")
        (out / f"{name}.svg").write_text(render_svg(config, report), encoding="utf-8")
        print(
            f"{name}: n={report.n}, {len(report.simple_lines)} simple line(s), "
            f"{len(report.wedges)} wedge(s)"
        )
    print(f"gallery written to {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
