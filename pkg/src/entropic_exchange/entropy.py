"""Tsallis and Renyi uncertainty measures over finite probability vectors.

The Renyi measure is kept in its exponentiated form ``(sum p**q)**(1/(1-q))``,
so it reads as an effective number of outcomes between 1 and N.

Powers are evaluated as ``exp(q*log p)`` with ``p == 0`` short-circuited, and
the Tsallis/Renyi differences from the q = 1 limit go through ``expm1`` and
``log1p`` so that orders close to 1 stay accurate.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

#: |q - 1| at or below this switches to the Shannon branch.
Q_UNITY_TOL = 1e-9
#: Negative entries down to -CLAMP_TOL are treated as floating-point residue.
CLAMP_TOL = 1e-12
SUM_TOL = 1e-12


def check_order(q) -> float:
    """Validate an entropic order and return it as a float."""
    q = float(q)
    if not np.isfinite(q) or q <= 0.0:
        raise InvalidInputError(f"entropic order must be a finite q > 0, got {q!r}")
    return q


def is_shannon_order(q: float) -> bool:
    return abs(q - 1.0) <= Q_UNITY_TOL


@dataclass(frozen=True)
class Distribution:
    """A probability vector over N >= 2 outcomes.

    Entries in ``[-1e-12, 0)`` are clamped to zero; anything further out of
    range, or a total that misses 1 by more than 1e-12, is rejected.
    """

    probs: np.ndarray

    def __post_init__(self):
        p = np.array(self.probs, dtype=float).reshape(-1)
        if p.size < 2:
            raise InvalidInputError(f"a distribution needs at least 2 outcomes, got {p.size}")
        if not np.all(np.isfinite(p)):
            raise InvalidInputError("probabilities must be finite")
        if np.any(p < -CLAMP_TOL) or np.any(p > 1.0 + CLAMP_TOL):
            raise InvalidInputError(f"probabilities must lie in [0, 1], got {p.tolist()}")
        p = np.clip(p, 0.0, 1.0)
        total = p.sum()
        if abs(total - 1.0) > SUM_TOL:
            raise InvalidInputError(f"probabilities must sum to 1, got sum {float(total)!r}")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    def __len__(self):
        return self.probs.size

    def __eq__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return np.array_equal(self.probs, other.probs)

    def __hash__(self):
        return hash(self.probs.tobytes())


def as_distribution(p) -> Distribution:
    return p if isinstance(p, Distribution) else Distribution(p)


def _log_or_zero(p):
    """log(p) where p > 0, and 0 where p == 0 (every caller multiplies by p)."""
    p = np.asarray(p, dtype=float)
    with np.errstate(divide="ignore"):
        return np.where(p > 0.0, np.log(np.where(p > 0.0, p, 1.0)), 0.0)


def _power_sum_minus_one(p: np.ndarray, q: float) -> float:
    """sum(p**q) - 1, evaluated as sum(p * expm1((q-1) log p))."""
    return float(np.sum(p * np.expm1((q - 1.0) * _log_or_zero(p))))


def _log_power_sum(p: np.ndarray, q: float) -> float:
    """log(sum(p**q)): log1p near q = 1, log-sum-exp when the sum is far from 1."""
    s = _power_sum_minus_one(p, q)
    if s > -0.5:
        return float(np.log1p(s))
    logs = q * np.log(p[p > 0.0])
    m = logs.max()
    return float(m + np.log(np.sum(np.exp(logs - m))))


def shannon_entropy(p) -> float:
    """Shannon entropy ``-sum p ln p`` in nats, with ``0 ln 0 = 0``."""
    p = as_distribution(p).probs
    h = -float(np.sum(p * _log_or_zero(p)))
    return h if h > 0.0 else 0.0


def tsallis_entropy(p, q) -> float:
    """Tsallis entropy ``(1 - sum p**q) / (q - 1)``.

    Falls back to :func:`shannon_entropy` when ``|q - 1| <= 1e-9``.

    >>> tsallis_entropy([0.5, 0.5], 2)
    0.5
    """
    p = as_distribution(p).probs
    q = check_order(q)
    if is_shannon_order(q):
        return shannon_entropy(p)
    s = -_power_sum_minus_one(p, q) / (q - 1.0)
    return s if s > 0.0 else 0.0


def renyi_measure(p, q) -> float:
    """Exponentiated Renyi entropy ``(sum p**q)**(1/(1-q))``, a value in [1, N].

    At q = 1 this is ``exp(shannon_entropy(p))``.
    """
    p = as_distribution(p).probs
    q = check_order(q)
    if is_shannon_order(q):
        log_r = shannon_entropy(p)
    else:
        log_r = _log_power_sum(p, q) / (1.0 - q)
    return min(max(float(np.exp(log_r)), 1.0), float(p.size))


def variance_two_outcome(p_a) -> float:
    """Variance of the +/-1 observable whose +1 outcome has probability ``p_a``.

    Equal to twice the order-2 Tsallis entropy of ``[p_a, 1 - p_a]``.
    """
    p_a = float(p_a)
    if not (-CLAMP_TOL <= p_a <= 1.0 + CLAMP_TOL):
        raise InvalidInputError(f"p_a must lie in [0, 1], got {p_a!r}")
    p_a = min(max(p_a, 0.0), 1.0)
    return 4.0 * p_a * (1.0 - p_a)


# Two-outcome forms, vectorized over p (the probability of the first outcome).
# No validation here; callers have already checked q and clipped p to [0, 1].

def _log(p):
    with np.errstate(divide="ignore"):
        return np.log(p)


def _pow(p, a):
    """p**a for p >= 0 with 0**0 = 1."""
    p = np.asarray(p, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        r = np.exp(a * np.log(np.where(p > 0.0, p, 1.0)))
    zero = 0.0 if a > 0 else (1.0 if a == 0 else np.inf)
    return np.where(p > 0.0, r, zero)


def binary_tsallis(p, q):
    p = np.asarray(p, dtype=float)
    pp = np.stack([p, 1.0 - p])
    if is_shannon_order(q):
        s = -np.sum(pp * _log_or_zero(pp), axis=0)
    else:
        s = -np.sum(pp * np.expm1((q - 1.0) * _log_or_zero(pp)), axis=0) / (q - 1.0)
    return np.maximum(s, 0.0)


def binary_tsallis_dp(p, q):
    """dS_q/dp for the distribution [p, 1-p]."""
    p = np.asarray(p, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if is_shannon_order(q):
            return _log(1.0 - p) - _log(p)
        k = q - 1.0
        return q * (np.expm1(k * _log(1.0 - p)) - np.expm1(k * _log(p))) / k


def binary_tsallis_dp2(p, q):
    """d^2 S_q/dp^2 for the distribution [p, 1-p]."""
    if is_shannon_order(q):
        q = 1.0
    return -q * (_pow(p, q - 2.0) + _pow(1.0 - np.asarray(p, dtype=float), q - 2.0))
