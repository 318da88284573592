"""Presets reproducing the ten published figures as data tables.

Figures 4 and 8 plot the curvature at the symmetric state against q; the
rest plot one functional against theta for a handful of orders.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analysis import DEFAULT_N_POINTS, dd_vs_q, sweep_theta, theta_grid
from .errors import InvalidInputError
from .functionals import FunctionalSpec, Kind
from .report import curves_csv
from .svg import line_chart

#: q range plotted for the curvature-vs-order figures
CURVATURE_Q_RANGE = (0.5, 3.0)

_NAMES = {Kind.PI: "Pi_q", Kind.U: "U_q", Kind.SIGMA: "Sigma_q"}


@dataclass(frozen=True)
class FigurePreset:
    figure_id: int
    kinds: tuple[Kind, ...]
    delta: float
    q_values: tuple[float, ...] = ()
    #: line style per series, as named in the caption
    styles: tuple[str, ...] = ()

    @property
    def curvature(self) -> bool:
        return not self.q_values


PRESETS = {
    1: FigurePreset(1, (Kind.PI,), math.pi / 4, (0.5, 1, 2, 3), ("dashed", "solid", "dotted", "dashdot")),
    2: FigurePreset(2, (Kind.U,), math.pi / 4, (1, 1.5, 2)),
    3: FigurePreset(3, (Kind.SIGMA,), math.pi / 4, (1.8, 2, 2.5)),
    4: FigurePreset(4, (Kind.PI, Kind.U, Kind.SIGMA), math.pi / 4, (), ("solid", "dashed", "dotted")),
    5: FigurePreset(5, (Kind.PI,), 0.7, (0.5, 1, 1.5), ("dashed", "solid", "dotted")),
    6: FigurePreset(6, (Kind.U,), 0.7, (0.8, 1, 1.5, 2)),
    7: FigurePreset(7, (Kind.SIGMA,), 0.7, (0.5, 1, 1.5, 2)),
    8: FigurePreset(8, (Kind.PI, Kind.U, Kind.SIGMA), 0.7, (), ("solid", "dashed", "dotted")),
    9: FigurePreset(9, (Kind.PI,), 0.7, (2, 3), ("dashed", "solid")),
    10: FigurePreset(10, (Kind.U,), 0.7, (2, 3), ("dashed", "solid")),
}


def get_preset(figure_id) -> FigurePreset:
    try:
        return PRESETS[int(figure_id)]
    except (KeyError, ValueError):
        raise InvalidInputError(f"unknown figure {figure_id!r}; expected 1-10") from None


def q_column(q) -> str:
    return f"q={q:g}"


def figure_data(figure_id, n_points: int = DEFAULT_N_POINTS):
    """Return ``(parameter_name, parameter, columns)`` for a figure."""
    preset = get_preset(figure_id)
    if preset.curvature:
        q = np.linspace(*CURVATURE_Q_RANGE, n_points)
        columns = {k.value: dd_vs_q(k, preset.delta, q).values for k in preset.kinds}
        return "q", q, columns
    (kind,) = preset.kinds
    columns = {
        q_column(q): sweep_theta(FunctionalSpec(kind, q), preset.delta, n_points).values
        for q in preset.q_values
    }
    return "theta", theta_grid(n_points), columns


def figure_csv(figure_id, n_points: int = DEFAULT_N_POINTS) -> str:
    return curves_csv(*figure_data(figure_id, n_points))


def figure_svg(figure_id, n_points: int = DEFAULT_N_POINTS) -> str:
    preset = get_preset(figure_id)
    name, x, columns = figure_data(figure_id, n_points)
    styles = dict(zip(columns, preset.styles))
    delta = "pi/4" if preset.delta == math.pi / 4 else f"{preset.delta:g}"
    if preset.curvature:
        title = f"Fig. {preset.figure_id}: d2F/dtheta2 at theta = delta/2, delta = {delta}"
        ylabel = "F''"
        columns = {_NAMES[Kind(k)]: v for k, v in columns.items()}
        styles = {_NAMES[Kind(k)]: s for k, s in styles.items()}
    else:
        title = f"Fig. {preset.figure_id}: {_NAMES[preset.kinds[0]]} vs theta, delta = {delta}"
        ylabel = _NAMES[preset.kinds[0]]
    return line_chart(list(x), {k: list(v) for k, v in columns.items()},
                      title=title, xlabel=name, ylabel=ylabel, styles=styles)
