"""
Rendering the ten figures
=========================

Write a CSV table and an SVG chart per figure into a directory (default
``figures/``).  The same output is available from the command line via
``entropic-exchange figure N``.
"""
import sys
from pathlib import Path

from entropic_exchange.figures import PRESETS, figure_csv, figure_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(parents=True, exist_ok=True)

for fid in sorted(PRESETS):
    (out / f"fig{fid:02d}.csv").write_text(figure_csv(fid, 721))
    (out / f"fig{fid:02d}.svg").write_text(figure_svg(fid, 721))
    print("wrote", out / f"fig{fid:02d}.svg")
