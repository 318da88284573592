"""Two observables on a qubit and the real one-parameter family of pure states.

Observable A has eigenvectors ``|a>, |~a>``; the eigenvector ``|b>`` of B sits
at angle ``delta`` from ``|a>``.  States are ``cos(theta)|a> + sin(theta)|~a>``,
so the outcome probabilities are ``p_a = cos^2(theta)`` and
``p_b = cos^2(theta - delta)``.  Both have period pi in theta.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InvalidInputError

QUARTER_PI = math.pi / 4


def canonical_theta(theta):
    """Reduce a state angle to its representative in ``[0, pi)``."""
    t = np.mod(theta, math.pi)
    # mod can round up to exactly pi for tiny negative inputs
    t = np.where(t >= math.pi, 0.0, t)
    return float(t) if np.ndim(t) == 0 else t


@dataclass(frozen=True)
class ObservablePair:
    """Overlap geometry of A and B, fixed by the angle ``delta`` in [0, pi/4] radians."""

    delta: float

    def __post_init__(self):
        d = float(self.delta)
        # allow pi/4 computed by a slightly different route
        if not math.isfinite(d) or d < 0.0 or d > QUARTER_PI + 1e-15:
            raise InvalidInputError(f"delta must lie in [0, pi/4], got {self.delta!r}")
        object.__setattr__(self, "delta", min(d, QUARTER_PI))

    @property
    def degenerate(self) -> bool:
        return self.delta == 0.0


def as_pair(pair) -> ObservablePair:
    return pair if isinstance(pair, ObservablePair) else ObservablePair(pair)


class OutcomePair(NamedTuple):
    p_a: float
    p_b: float

    @property
    def p_not_a(self):
        return 1.0 - self.p_a

    @property
    def p_not_b(self):
        return 1.0 - self.p_b


def outcome_probabilities(theta, pair) -> OutcomePair:
    """``(cos^2 theta, cos^2(theta - delta))``, clamped to [0, 1].

    ``theta`` may be an array, in which case both fields are arrays.
    """
    delta = as_pair(pair).delta
    theta = np.asarray(theta, dtype=float)
    p_a = np.clip(np.cos(theta) ** 2, 0.0, 1.0)
    p_b = np.clip(np.cos(theta - delta) ** 2, 0.0, 1.0)
    if theta.ndim == 0:
        return OutcomePair(float(p_a), float(p_b))
    return OutcomePair(p_a, p_b)


def overlap_amplitude(theta, pair):
    """Amplitude ``<b|psi> = cos(theta - delta)``."""
    amp = np.cos(np.asarray(theta, dtype=float) - as_pair(pair).delta)
    return float(amp) if amp.ndim == 0 else amp


class ProbabilityDerivatives(NamedTuple):
    dp_a: float
    d2p_a: float
    dp_b: float
    d2p_b: float


def probability_derivatives(theta, pair) -> ProbabilityDerivatives:
    delta = as_pair(pair).delta
    theta = np.asarray(theta, dtype=float)
    out = ProbabilityDerivatives(
        -np.sin(2 * theta),
        -2 * np.cos(2 * theta),
        -np.sin(2 * (theta - delta)),
        -2 * np.cos(2 * (theta - delta)),
    )
    if theta.ndim == 0:
        return ProbabilityDerivatives(*map(float, out))
    return out


class CandidateLabel(str, enum.Enum):
    SYMMETRIC = "SYMMETRIC"
    ANTISYMMETRIC = "ANTISYMMETRIC"
    EIGENSTATE = "EIGENSTATE"


@dataclass(frozen=True)
class CandidateState:
    label: CandidateLabel
    theta: float
    #: True when this angle coincides with a candidate of another label.
    coincident: bool = False


def candidate_states(pair) -> list[CandidateState]:
    """States contending for the extrema: the bisector of ``|a>, |b>``, the
    bisector of ``|~a>, |b>``, and the eigenstates of A and B.

    Angles are canonical representatives in ``[0, pi)``.  Eigenstate angles
    that coincide (``delta = 0``) are listed once.
    """
    delta = as_pair(pair).delta
    raw = [
        (CandidateLabel.SYMMETRIC, delta / 2),
        (CandidateLabel.ANTISYMMETRIC, delta / 2 + QUARTER_PI),
    ]
    eig = []
    for t in (0.0, delta, math.pi / 2, delta + math.pi / 2):
        t = canonical_theta(t)
        if not any(abs(t - s) < 1e-15 for s in eig):
            eig.append(t)
    raw += [(CandidateLabel.EIGENSTATE, t) for t in eig]

    out = []
    for label, t in raw:
        t = canonical_theta(t)
        clash = any(
            other != label and _angle_distance(t, s, math.pi) < 1e-12 for other, s in raw
        )
        out.append(CandidateState(label, t, clash))
    return out


def _angle_distance(x, y, period):
    d = abs(x - y) % period
    return min(d, period - d)
