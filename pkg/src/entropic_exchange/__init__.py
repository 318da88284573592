"""Tsallis and Renyi uncertainty relations for two qubit observables, and the
exchange of maximum- and minimum-uncertainty states as the order q varies."""

__version__ = "0.1.0"

from .errors import BracketError, InvalidInputError, NumericalError
from .entropy import (
    Distribution,
    renyi_measure,
    shannon_entropy,
    tsallis_entropy,
    variance_two_outcome,
)
from .qubit import (
    CandidateLabel,
    CandidateState,
    ObservablePair,
    OutcomePair,
    candidate_states,
    canonical_theta,
    outcome_probabilities,
    overlap_amplitude,
    probability_derivatives,
)
from .functionals import (
    FunctionalSpec,
    Kind,
    evaluate,
    pi_q,
    second_derivative,
    second_derivative_fd,
    sigma_q,
    u_q,
)
from .analysis import (
    CrossingResult,
    Curve,
    ExtremaReport,
    Extremum,
    ExtremumType,
    classify_extrema,
    crossing_q,
    dd_vs_q,
    exchange_report,
    sweep_theta,
)
