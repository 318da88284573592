"""Joint uncertainty functionals of the (A, B) pair and their theta-curvature.

Three functionals of a common order q are provided:

* ``SIGMA``: ``S_q(A) + S_q(B)``
* ``PI``: ``R_q(A) * R_q(B)``
* ``U``: ``S_q(A) + S_q(B) + (1 - q) S_q(A) S_q(B)``

With ``x = p**q + (1-p)**q`` per observable, ``1 + (1-q) U = x_A x_B`` and
``PI = (x_A x_B)**(1/(1-q))``, so PI and U are increasing functions of one
another and share extrema.

The analytic second derivative works from per-observable theta-derivatives
of ``S_q`` (chain rule through ``p(theta)``).  PI and U are pushed through
``x = 1 - (q-1) S``, which stays well conditioned as q approaches 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import mpmath
import numpy as np

from .entropy import (
    binary_tsallis,
    binary_tsallis_dp,
    binary_tsallis_dp2,
    check_order,
    is_shannon_order,
)
from .errors import InvalidInputError, NumericalError
from .qubit import OutcomePair, as_pair, outcome_probabilities, probability_derivatives

#: Analytic curvature defers to finite differences when q < 2 and some
#: outcome probability is this close to 0 or 1.
SINGULAR_TOL = 1e-9
DEFAULT_FD_STEP = 1e-4
PI_RANGE_TOL = 1e-12
FD_DIGITS = 40


class Kind(str, enum.Enum):
    SIGMA = "sigma"
    PI = "pi"
    U = "u"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidInputError(
                f"unknown functional {value!r}; expected one of sigma, pi, u"
            ) from None


@dataclass(frozen=True)
class FunctionalSpec:
    kind: Kind
    q: float

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        object.__setattr__(self, "q", check_order(self.q))


def _probs(out):
    p_a = np.asarray(out[0], dtype=float)
    p_b = np.asarray(out[1], dtype=float)
    for name, p in (("p_a", p_a), ("p_b", p_b)):
        if np.any(~np.isfinite(p)) or np.any(p < -1e-12) or np.any(p > 1 + 1e-12):
            raise InvalidInputError(f"{name} must lie in [0, 1]")
    return np.clip(p_a, 0.0, 1.0), np.clip(p_b, 0.0, 1.0)


def _scalar(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


def _log_renyi(s, q):
    """ln R_q from S_q of the same distribution."""
    if is_shannon_order(q):
        return s
    return np.log1p((1.0 - q) * s) / (1.0 - q)


def _check_pi_range(value):
    v = np.asarray(value)
    if np.any(v < 1.0 - PI_RANGE_TOL) or np.any(v > 4.0 + PI_RANGE_TOL):
        raise NumericalError(f"product of Renyi measures left [1, 4]: {v}")


def sigma_q(out: OutcomePair, q):
    """Sum of the two Tsallis entropies."""
    q = check_order(q)
    p_a, p_b = _probs(out)
    return _scalar(binary_tsallis(p_a, q) + binary_tsallis(p_b, q))


def pi_q(out: OutcomePair, q):
    """Product of the two exponentiated Renyi entropies, always in [1, 4]."""
    q = check_order(q)
    p_a, p_b = _probs(out)
    log_pi = _log_renyi(binary_tsallis(p_a, q), q) + _log_renyi(binary_tsallis(p_b, q), q)
    value = np.exp(log_pi)
    _check_pi_range(value)
    return _scalar(np.clip(value, 1.0, 4.0))


def u_q(out: OutcomePair, q):
    q = check_order(q)
    p_a, p_b = _probs(out)
    s_a = binary_tsallis(p_a, q)
    s_b = binary_tsallis(p_b, q)
    if is_shannon_order(q):
        return _scalar(s_a + s_b)
    return _scalar(s_a + s_b + (1.0 - q) * s_a * s_b)


_FUNCTIONALS = {Kind.SIGMA: sigma_q, Kind.PI: pi_q, Kind.U: u_q}


def evaluate(spec: FunctionalSpec, theta, pair):
    """Value of the functional on the state at angle ``theta`` (scalar or array)."""
    return _FUNCTIONALS[spec.kind](outcome_probabilities(theta, as_pair(pair)), spec.q)


def _theta_derivatives(spec, theta, pair):
    """(F, F', F'') at scalar theta by the chain rule; may contain inf/nan
    at concentrated probabilities for q < 2."""
    q = spec.q
    p_a, p_b = outcome_probabilities(theta, pair)
    dp_a, d2p_a, dp_b, d2p_b = probability_derivatives(theta, pair)

    per_obs = []
    for p, dp, d2p in ((p_a, dp_a, d2p_a), (p_b, dp_b, d2p_b)):
        s = float(binary_tsallis(p, q))
        s1 = float(binary_tsallis_dp(p, q))
        s2 = float(binary_tsallis_dp2(p, q))
        per_obs.append((s, s1 * dp, s2 * dp * dp + s1 * d2p))
    (sa, sa1, sa2), (sb, sb1, sb2) = per_obs

    if spec.kind is Kind.SIGMA:
        return sa + sb, sa1 + sb1, sa2 + sb2

    c = 0.0 if is_shannon_order(q) else 1.0 - q
    if spec.kind is Kind.U:
        f = sa + sb + c * sa * sb
        f1 = sa1 + sb1 + c * (sa1 * sb + sa * sb1)
        f2 = sa2 + sb2 + c * (sa2 * sb + 2.0 * sa1 * sb1 + sa * sb2)
        return f, f1, f2

    # PI = exp(L_A + L_B) with L = ln R_q; x = 1 - (q-1) S = exp((1-q) L)
    log_pi = 0.0
    l1 = 0.0
    l2 = 0.0
    for s, s1, s2 in per_obs:
        x = 1.0 - (-c) * s
        log_pi += _log_renyi(s, q)
        l1 += s1 / x
        l2 += s2 / x - c * s1 * s1 / (x * x)
    f = float(np.exp(log_pi))
    return f, f * l1, f * (l1 * l1 + l2)


def _near_singular(spec, theta0, pair):
    if spec.q >= 2.0:
        return False
    p_a, p_b = outcome_probabilities(theta0, pair)
    return min(p_a, 1.0 - p_a, p_b, 1.0 - p_b) < SINGULAR_TOL


def first_derivative(spec: FunctionalSpec, theta0, pair) -> float:
    """dF/dtheta at ``theta0``.

    The chain-rule product stays finite up to concentrated probabilities for
    q >= 1/2; exactly at them it can be ``inf * 0``, and a central difference
    is used instead.
    """
    pair = as_pair(pair)
    with np.errstate(invalid="ignore"):
        value = _theta_derivatives(spec, float(theta0), pair)[1]
    if np.isfinite(value):
        return value
    h = 1e-7
    return (float(evaluate(spec, theta0 + h, pair)) - float(evaluate(spec, theta0 - h, pair))) / (2 * h)


def second_derivative(spec: FunctionalSpec, theta0, pair, full_output=False):
    """Analytic ``d^2F/dtheta^2`` at ``theta0``.

    For q < 2 with a probability within 1e-9 of 0 or 1 the chain-rule factors
    diverge; the finite-difference estimate is returned instead.  With
    ``full_output=True`` the return value is ``(value, analytic)`` where
    ``analytic`` is False when that fallback was taken.
    """
    pair = as_pair(pair)
    theta0 = float(theta0)
    if _near_singular(spec, theta0, pair):
        value, analytic = second_derivative_fd(spec, theta0, pair), False
    else:
        value, analytic = _theta_derivatives(spec, theta0, pair)[2], True
        if not np.isfinite(value):
            raise NumericalError(
                f"non-finite curvature for {spec.kind.value} q={spec.q} at theta={theta0}"
            )
    return (value, analytic) if full_output else value


def _evaluate_mp(spec, theta, delta):
    """The functional straight from its defining formulas, in mpmath."""
    q = mpmath.mpf(spec.q)
    shannon = is_shannon_order(spec.q)

    def power_sum(p):
        return sum(x**q for x in (p, 1 - p) if x > 0)

    def tsallis(p):
        if shannon:
            return -sum(x * mpmath.log(x) for x in (p, 1 - p) if x > 0)
        return (1 - power_sum(p)) / (q - 1)

    p_a = mpmath.cos(theta) ** 2
    p_b = mpmath.cos(theta - delta) ** 2
    if spec.kind is Kind.PI:
        if shannon:
            return mpmath.exp(tsallis(p_a) + tsallis(p_b))
        return (power_sum(p_a) * power_sum(p_b)) ** (1 / (1 - q))
    s_a, s_b = tsallis(p_a), tsallis(p_b)
    if spec.kind is Kind.SIGMA or shannon:
        return s_a + s_b
    return s_a + s_b + (1 - q) * s_a * s_b


def second_derivative_fd(spec: FunctionalSpec, theta0, pair, h=DEFAULT_FD_STEP) -> float:
    """Central second difference at steps h and h/2, combined by one
    Richardson step: ``(4 D(h/2) - D(h)) / 3``.

    Function values come from an independent mpmath evaluation carried at
    FD_DIGITS significant digits, so cancellation in the difference quotient
    does not swamp small curvatures.
    """
    if not h > 0:
        raise InvalidInputError(f"step must be positive, got {h!r}")
    delta = as_pair(pair).delta
    with mpmath.workdps(FD_DIGITS):
        t0 = mpmath.mpf(float(theta0))
        h = mpmath.mpf(h)
        d = mpmath.mpf(delta)
        f = {k: _evaluate_mp(spec, t0 + k * h / 2, d) for k in (-2, -1, 0, 1, 2)}
        d_h = (f[2] - 2 * f[0] + f[-2]) / h**2
        d_half = (f[1] - 2 * f[0] + f[-1]) / (h / 2) ** 2
        return float((4 * d_half - d_h) / 3)
