"""Landscape analysis over the state angle and over the entropic order.

Every functional here is invariant under ``theta -> theta + pi/2`` (it sends
``p -> 1 - p`` for both observables) and under ``theta -> delta - theta``
(it swaps ``p_a`` and ``p_b``).  A sweep over ``[0, pi)`` therefore shows
each extremum twice.  Candidate states are matched modulo pi/2 for that
reason.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BracketError, InvalidInputError, NumericalError
from .functionals import FunctionalSpec, Kind, evaluate, first_derivative, second_derivative
from .qubit import CandidateLabel, as_pair, canonical_theta, candidate_states

DEFAULT_N_POINTS = 2001
FLAT_TOL = 1e-10
TIE_TOL = 1e-10
THETA_TOL = 1e-10
CANDIDATE_TOL = 1e-6
CROSSING_TOL = 1e-9
HALF_PI = math.pi / 2

INV_PHI = (math.sqrt(5) - 1) / 2


class ExtremumType(str, enum.Enum):
    LOCAL_MAX = "LOCAL_MAX"
    LOCAL_MIN = "LOCAL_MIN"
    GLOBAL_MAX = "GLOBAL_MAX"
    GLOBAL_MIN = "GLOBAL_MIN"

    @property
    def is_max(self):
        return self in (ExtremumType.LOCAL_MAX, ExtremumType.GLOBAL_MAX)


@dataclass
class Curve:
    parameter_name: str
    parameter: np.ndarray
    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.parameter = np.asarray(self.parameter, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.parameter.shape != self.values.shape or self.parameter.ndim != 1:
            raise InvalidInputError("parameter and values must be 1-d arrays of equal length")
        if self.parameter.size < 3:
            raise InvalidInputError("a curve needs at least 3 samples")
        if np.any(np.diff(self.parameter) <= 0):
            raise InvalidInputError("curve parameter must be strictly increasing")

    @property
    def samples(self):
        return list(zip(self.parameter.tolist(), self.values.tolist()))


@dataclass
class Extremum:
    theta: float
    value: float
    type: ExtremumType
    candidate: CandidateLabel | None = None
    #: the matched angle coincides with a candidate of another label (delta = 0)
    coincident: bool = False


@dataclass
class ExtremaReport:
    spec: FunctionalSpec
    delta: float
    n_points: int
    extrema: list[Extremum]
    degenerate_flat: bool
    #: more than one distinct global max or min once the pi/2 copies are set aside
    ties: bool = False

    def at(self, label: CandidateLabel) -> ExtremumType | None:
        """Type of the extremum sitting on a candidate state, if any.

        Global types win over local ones when several copies match.
        """
        found = [e.type for e in self.extrema if e.candidate is label]
        if not found:
            return None
        globals_ = [t for t in found if t in (ExtremumType.GLOBAL_MAX, ExtremumType.GLOBAL_MIN)]
        return (globals_ or found)[0]


@dataclass
class CrossingResult:
    kind: Kind
    delta: float
    q_star: float
    bracket: tuple[float, float]
    f_lo: float
    f_hi: float
    iterations: int
    initial_bracket: tuple[float, float]
    initial_values: tuple[float, float]
    f_star: float


@dataclass
class ExchangeRow:
    q: float
    degenerate_flat: bool
    types: dict[CandidateLabel, ExtremumType | None]


def theta_grid(n_points: int) -> np.ndarray:
    """``n_points`` uniformly spaced angles on ``[0, pi)``."""
    return np.arange(n_points) * (math.pi / n_points)


def sweep_theta(spec: FunctionalSpec, pair, n_points: int = DEFAULT_N_POINTS) -> Curve:
    n_points = int(n_points)
    if n_points < 3:
        raise InvalidInputError(f"n_points must be >= 3, got {n_points}")
    pair = as_pair(pair)
    theta = theta_grid(n_points)
    values = evaluate(spec, theta, pair)
    return Curve(
        "theta",
        theta,
        values,
        meta={"kind": spec.kind.value, "q": spec.q, "delta": pair.delta,
              "grid": f"uniform [0, pi) n={n_points}"},
    )


def golden_section(f, a, b, tol=THETA_TOL, maxiter=200):
    """Minimise a unimodal ``f`` on ``[a, b]``; returns the abscissa."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if b - a <= tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (a + b) / 2


def _slope_sign_changes(values, noise):
    """Yield ``(start, stop, is_max)`` for runs of grid indices between a
    rise and a fall (or fall and rise) of the periodic sequence.

    Differences within ``noise`` of zero are treated as flat.
    """
    n = values.size
    d = np.roll(values, -1) - values  # d[i] = f[i+1] - f[i]
    sign = np.where(d > noise, 1, np.where(d < -noise, -1, 0))
    nz = np.flatnonzero(sign)
    if nz.size == 0:
        return
    for j, k in zip(nz, np.roll(nz, -1)):
        if sign[j] == sign[k]:
            continue
        # extremum among grid points j+1 .. k (cyclic)
        stop = k if k > j else k + n
        yield j + 1, stop, sign[j] > 0


def classify_extrema(spec: FunctionalSpec, pair, n_points: int = DEFAULT_N_POINTS) -> ExtremaReport:
    """Locate, refine and classify the extrema of the functional in theta."""
    n_points = int(n_points)
    if n_points < 101:
        raise InvalidInputError(f"n_points must be >= 101, got {n_points}")
    pair = as_pair(pair)
    curve = sweep_theta(spec, pair, n_points)
    values = curve.values
    if not np.all(np.isfinite(values)):
        raise NumericalError("non-finite values in theta sweep")
    if values.max() - values.min() < FLAT_TOL:
        return ExtremaReport(spec, pair.delta, n_points, [], degenerate_flat=True)

    step = math.pi / n_points
    noise = 64 * np.finfo(float).eps * max(1.0, float(np.abs(values).max()))

    def f(t):
        return float(evaluate(spec, t, pair))

    found = []
    for start, stop, is_max in _slope_sign_changes(values, noise):
        idx = np.arange(start, stop + 1) % n_points
        best = start + int(np.argmax(values[idx]) if is_max else np.argmin(values[idx]))
        lo = (best - 1) * step
        hi = (best + 1) * step
        sgn = -1.0 if is_max else 1.0
        t = golden_section(lambda x: sgn * f(x), lo, hi)
        t = _polish(spec, pair, t, lo, hi)
        found.append((canonical_theta(t), is_max))

    extrema = []
    for t, is_max in sorted(found):
        value = f(t)
        kind = ExtremumType.LOCAL_MAX if is_max else ExtremumType.LOCAL_MIN
        label, coincident = _match_candidate(t, pair)
        extrema.append(Extremum(t, value, kind, label, coincident))

    ties = False
    for want_max in (True, False):
        group = [e for e in extrema if e.type.is_max == want_max]
        if not group:
            continue
        target = max(e.value for e in group) if want_max else min(e.value for e in group)
        winners = [e for e in group if abs(e.value - target) <= TIE_TOL]
        for e in winners:
            e.type = ExtremumType.GLOBAL_MAX if want_max else ExtremumType.GLOBAL_MIN
        ties = ties or len(_distinct_mod(winners)) > 1

    return ExtremaReport(spec, pair.delta, n_points, extrema, False, ties)


def _distinct_mod(extrema, period=HALF_PI, tol=CANDIDATE_TOL):
    reps = []
    for e in extrema:
        r = e.theta % period
        if not any(_circ_dist(r, s, period) <= tol for s in reps):
            reps.append(r)
    return reps


def _circ_dist(x, y, period):
    d = abs(x - y) % period
    return min(d, period - d)


def _polish(spec, pair, t, lo, hi):
    """Sharpen a golden-section estimate by bisecting on the sign of dF/dtheta.

    Golden section on F alone stalls near sqrt(machine eps) in theta because
    F is quadratic at a smooth extremum, and worse at flatter ones; the slope
    keeps resolving.  The window around ``t`` widens until the slope changes
    sign, up to the grid bracket ``[lo, hi]``.
    """
    def slope(x):
        return first_derivative(spec, x, pair)

    width = 1e-8
    while True:
        a, b = max(lo, t - width), min(hi, t + width)
        fa, fb = slope(a), slope(b)
        if np.isfinite(fa) and np.isfinite(fb) and fa * fb < 0:
            break
        if a <= lo and b >= hi:
            return t
        width *= 10
    for _ in range(200):
        m = 0.5 * (a + b)
        if b - a <= 1e-15 or m <= a or m >= b:
            break
        fm = slope(m)
        if not np.isfinite(fm):
            return t
        if fm == 0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def _match_candidate(theta, pair):
    best = None
    for c in candidate_states(pair):
        dist = _circ_dist(theta, c.theta, HALF_PI)
        if dist <= CANDIDATE_TOL and (best is None or dist < best[0]):
            best = (dist, c)
    if best is None:
        return None, False
    return best[1].label, best[1].coincident


def dd_vs_q(kind, pair, q_grid) -> Curve:
    """Curvature ``F''`` at the symmetric state ``theta = delta/2`` as a function of q."""
    kind = Kind.parse(kind)
    pair = as_pair(pair)
    q_grid = np.asarray(q_grid, dtype=float)
    if q_grid.ndim != 1 or np.any(q_grid <= 0):
        raise InvalidInputError("q_grid must be a 1-d sequence of positive orders")
    theta0 = pair.delta / 2
    values = [second_derivative(FunctionalSpec(kind, q), theta0, pair) for q in q_grid]
    return Curve("q", q_grid, values, meta={"kind": kind.value, "delta": pair.delta, "theta": theta0})


def _dd_at_symmetric(kind, pair, q):
    value = second_derivative(FunctionalSpec(kind, q), pair.delta / 2, pair)
    if not np.isfinite(value):
        raise NumericalError(f"non-finite F'' at q={q}")
    return value


def crossing_q(kind, pair, bracket, tol: float = CROSSING_TOL) -> CrossingResult:
    """Bisect for the order q* at which ``F''(delta/2)`` changes sign."""
    kind = Kind.parse(kind)
    pair = as_pair(pair)
    q_lo, q_hi = map(float, bracket)
    if not (0 < q_lo < q_hi):
        raise InvalidInputError(f"bracket must satisfy 0 < q_lo < q_hi, got {bracket!r}")
    f_lo = _dd_at_symmetric(kind, pair, q_lo)
    f_hi = _dd_at_symmetric(kind, pair, q_hi)
    initial = ((q_lo, q_hi), (f_lo, f_hi))
    if f_lo == 0 or f_hi == 0 or (f_lo > 0) == (f_hi > 0):
        raise BracketError(
            f"F'' does not change sign on [{q_lo}, {q_hi}]: "
            f"F''({q_lo}) = {f_lo!r}, F''({q_hi}) = {f_hi!r}",
            q_lo, q_hi, f_lo, f_hi,
        )
    iterations = 0
    while q_hi - q_lo > tol:
        mid = 0.5 * (q_lo + q_hi)
        if mid <= q_lo or mid >= q_hi:
            break
        f_mid = _dd_at_symmetric(kind, pair, mid)
        iterations += 1
        if f_mid != 0 and (f_mid > 0) == (f_lo > 0):
            q_lo, f_lo = mid, f_mid
        else:
            q_hi, f_hi = mid, f_mid
    q_star = 0.5 * (q_lo + q_hi)
    return CrossingResult(
        kind, pair.delta, q_star, (q_lo, q_hi), f_lo, f_hi, iterations,
        initial[0], initial[1], _dd_at_symmetric(kind, pair, q_star),
    )


def exchange_report(kind, pair, q_list, n_points: int = DEFAULT_N_POINTS) -> list[ExchangeRow]:
    """For each q, the extremum type found at each candidate state (None if
    the candidate is not an extremum)."""
    kind = Kind.parse(kind)
    pair = as_pair(pair)
    rows = []
    for q in q_list:
        report = classify_extrema(FunctionalSpec(kind, q), pair, n_points)
        types = {label: report.at(label) for label in CandidateLabel}
        rows.append(ExchangeRow(float(q), report.degenerate_flat, types))
    return rows
