"""Flat-file output: CSV tables and the JSON run report.

Floats are written with ``repr``, the shortest string that parses back to
the same double, so files are deterministic and lossless.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from . import __version__
from .analysis import CrossingResult, ExchangeRow, Extremum, ExtremaReport, ExtremumType
from .functionals import FunctionalSpec, Kind
from .qubit import CandidateLabel


def fmt(x) -> str:
    return repr(float(x))


def csv_text(header, rows) -> str:
    """Comma-separated text with LF line endings and a header row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def curves_csv(parameter_name, parameter, columns: dict) -> str:
    """One row per parameter value, one column per named series."""
    series = list(columns.values())
    rows = ([p] + [s[i] for s in series] for i, p in enumerate(parameter))
    return csv_text([parameter_name, *columns], rows)


def crossing_to_dict(r: CrossingResult) -> dict:
    d = asdict(r)
    d["kind"] = r.kind.value
    d["bracket"] = list(r.bracket)
    d["initial_bracket"] = list(r.initial_bracket)
    d["initial_values"] = list(r.initial_values)
    return d


def crossing_from_dict(d: dict) -> CrossingResult:
    d = dict(d)
    d["kind"] = Kind(d["kind"])
    for key in ("bracket", "initial_bracket", "initial_values"):
        d[key] = tuple(d[key])
    return CrossingResult(**d)


def extrema_to_dict(r: ExtremaReport) -> dict:
    return {
        "kind": r.spec.kind.value,
        "q": r.spec.q,
        "delta": r.delta,
        "n_points": r.n_points,
        "degenerate_flat": r.degenerate_flat,
        "ties": r.ties,
        "extrema": [
            {
                "theta": e.theta,
                "value": e.value,
                "type": e.type.value,
                "candidate_label": e.candidate.value if e.candidate else None,
                "coincident": e.coincident,
            }
            for e in r.extrema
        ],
    }


def extrema_from_dict(d: dict) -> ExtremaReport:
    extrema = [
        Extremum(
            e["theta"], e["value"], ExtremumType(e["type"]),
            CandidateLabel(e["candidate_label"]) if e["candidate_label"] else None,
            e["coincident"],
        )
        for e in d["extrema"]
    ]
    return ExtremaReport(
        FunctionalSpec(d["kind"], d["q"]), d["delta"], d["n_points"], extrema,
        d["degenerate_flat"], d["ties"],
    )


def exchange_to_dict(rows: list[ExchangeRow]) -> list[dict]:
    return [
        {
            "q": row.q,
            "degenerate_flat": row.degenerate_flat,
            "types": {
                label.value: (t.value if t else "NONE") for label, t in row.types.items()
            },
        }
        for row in rows
    ]


@dataclass
class RunReport:
    command: list[str]
    config: dict
    results: dict
    version: str = __version__
    timestamp: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds")
    )

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))
