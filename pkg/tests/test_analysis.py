import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from entropic_exchange import (
    BracketError,
    CandidateLabel,
    Curve,
    ExtremumType,
    FunctionalSpec,
    InvalidInputError,
    Kind,
    NumericalError,
    classify_extrema,
    crossing_q,
    dd_vs_q,
    exchange_report,
    second_derivative,
    sweep_theta,
)
from entropic_exchange import analysis
from entropic_exchange.analysis import golden_section

from . import oracles

QP = math.pi / 4
SYM, ANTI, EIG = CandidateLabel.SYMMETRIC, CandidateLabel.ANTISYMMETRIC, CandidateLabel.EIGENSTATE
GMAX, GMIN, LMAX, LMIN = (ExtremumType.GLOBAL_MAX, ExtremumType.GLOBAL_MIN,
                          ExtremumType.LOCAL_MAX, ExtremumType.LOCAL_MIN)


def circ(x, y, period=math.pi):
    d = abs(x - y) % period
    return min(d, period - d)


def test_curve_invariants():
    with pytest.raises(InvalidInputError):
        Curve("q", [0, 1], [0, 1])
    with pytest.raises(InvalidInputError):
        Curve("q", [0, 2, 1], [0, 1, 2])
    c = Curve("q", [0, 1, 2], [3, 4, 5])
    assert c.samples == [(0.0, 3.0), (1.0, 4.0), (2.0, 5.0)]


def test_sweep_examples():
    c = sweep_theta(FunctionalSpec("sigma", 2), QP, 101)
    assert c.parameter[0] == 0.0 and c.parameter[-1] < math.pi
    assert np.all(np.abs(c.values - 0.5) <= 1e-12)
    assert sweep_theta(FunctionalSpec("pi", 1.7), QP, 101).values[0] == pytest.approx(2.0, abs=1e-12)
    c = sweep_theta(FunctionalSpec("sigma", 1), QP, 2000)
    # for delta = pi/4 the landscape has period pi/4, so 3pi/8 ties with pi/8
    assert circ(c.parameter[np.argmax(c.values)], math.pi / 8, math.pi / 4) < 1e-12
    with pytest.raises(InvalidInputError):
        sweep_theta(FunctionalSpec("sigma", 1), QP, 2)


def test_golden_section():
    assert golden_section(lambda x: (x - 0.3) ** 2, 0, 1, tol=1e-10) == pytest.approx(0.3, abs=1e-8)
    assert golden_section(lambda x: abs(x - 0.61), 0, 1, tol=1e-12) == pytest.approx(0.61, abs=1e-11)


def test_classify_pi_delta07_q3():
    r = classify_extrema(FunctionalSpec("pi", 3), 0.7)
    assert r.at(ANTI) is LMIN
    assert r.at(SYM) is GMIN


def test_classify_pi_delta07_q2():
    # At delta = 0.7 the antisymmetric state already sits in a shallow local
    # minimum at q = 2, flanked by two global maxima.  For q = 2,
    # U = 1/2 + cos2e cos2d / 2 - (cos2e + cos2d)^2 / 16 around it, which peaks
    # at e = 0 only when cos(2 delta) > 1/3, i.e. delta < 0.6155.
    r = classify_extrema(FunctionalSpec("pi", 2), 0.7)
    assert r.at(ANTI) is LMIN
    maxima = [e for e in r.extrema if e.type is GMAX]
    assert maxima and all(e.candidate is None for e in maxima)
    # and it is still the global maximum a little lower in q
    assert classify_extrema(FunctionalSpec("pi", 1.5), 0.7).at(ANTI) is GMAX


@pytest.mark.parametrize("delta, is_max", [(0.5, True), (0.6, True), (0.63, False), (0.7, False)])
def test_antisymmetric_type_threshold_at_q2(delta, is_max):
    assert (3 * math.cos(2 * delta) - 1 > 0) is is_max
    t = classify_extrema(FunctionalSpec("u", 2), delta).at(ANTI)
    assert t.is_max is is_max


def test_classify_flat():
    r = classify_extrema(FunctionalSpec("sigma", 2), QP)
    assert r.degenerate_flat and r.extrema == []


def test_classify_sigma_q25():
    r = classify_extrema(FunctionalSpec("sigma", 2.5), QP)
    sym = [e for e in r.extrema if e.candidate is SYM]
    assert sym and all(e.type is GMIN for e in sym)
    assert any(e.theta == pytest.approx(math.pi / 8, abs=1e-10) for e in sym)


def test_classify_requires_resolution():
    with pytest.raises(InvalidInputError):
        classify_extrema(FunctionalSpec("sigma", 1), QP, 100)


@pytest.mark.parametrize("kind", list(Kind))
def test_low_q_minima_at_eigenstates(kind):
    r = classify_extrema(FunctionalSpec(kind, 0.5), QP)
    mins = [e for e in r.extrema if e.type is GMIN]
    assert mins and all(e.candidate is EIG for e in mins)
    assert r.at(EIG) is GMIN


def test_report_fields():
    r = classify_extrema(FunctionalSpec("u", 0.5), 0.7)
    assert all(0 <= e.theta < math.pi for e in r.extrema)
    values = [e.value for e in r.extrema]
    assert sum(e.type is GMAX for e in r.extrema) >= 1
    assert sum(e.type is GMIN for e in r.extrema) >= 1
    assert max(values) == max(e.value for e in r.extrema if e.type is GMAX)
    # global min is attained at |a> and at |b>: two distinct states
    assert r.ties


def test_extremum_values_match_oracle():
    r = classify_extrema(FunctionalSpec("pi", 2.5), 0.7)
    for e in r.extrema:
        assert e.value == pytest.approx(float(oracles.functional("pi", 2.5, e.theta, 0.7)), rel=1e-13)


def test_degenerate_delta_zero():
    r = classify_extrema(FunctionalSpec("sigma", 2.5), 0.0)
    at_zero = [e for e in r.extrema if circ(e.theta, 0) < 1e-6]
    assert at_zero and at_zero[0].coincident


def test_dd_vs_q_examples():
    c = dd_vs_q("sigma", QP, [1.8, 2.0, 2.5])
    assert c.parameter_name == "q"
    assert c.values[0] == pytest.approx(-0.26297869206010902, rel=1e-12)
    assert abs(c.values[1]) < 1e-12
    assert c.values[2] == pytest.approx(0.18680897048665213, rel=1e-12)
    assert dd_vs_q("pi", QP, [0.9, 1.0, 1.1]).values[1] < 0
    q = np.linspace(0.5, 3, 26)
    p, u = dd_vs_q("pi", QP, q).values, dd_vs_q("u", QP, q).values
    assert np.array_equal(np.sign(p), np.sign(u))
    with pytest.raises(InvalidInputError):
        dd_vs_q("pi", QP, [-1, 1, 2])


def test_crossing_sigma():
    r = crossing_q("sigma", QP, (1.5, 2.5))
    assert r.q_star == pytest.approx(2.0, abs=1e-6)
    assert r.bracket[0] < r.q_star < r.bracket[1]
    assert r.bracket[1] - r.bracket[0] <= 1e-9
    assert abs(r.f_star) < 1e-6
    assert r.initial_values[0] < 0 < r.initial_values[1]


def test_crossing_pi_and_u_agree():
    rp = crossing_q("pi", QP, (1, 2))
    ru = crossing_q("u", QP, (1, 2))
    assert 1 < rp.q_star < 2
    assert second_derivative(FunctionalSpec("pi", 1), QP / 2, QP) < 0
    assert second_derivative(FunctionalSpec("pi", 2), QP / 2, QP) > 0
    assert ru.q_star == pytest.approx(rp.q_star, abs=1e-6)
    for r in (rp, ru):
        assert (r.f_lo > 0) != (r.f_hi > 0)
        assert abs(r.f_star) < 1e-6


def test_crossing_rejects_same_sign():
    with pytest.raises(BracketError) as info:
        crossing_q("sigma", QP, (2.2, 2.5))
    assert info.value.f_lo > 0 and info.value.f_hi > 0
    with pytest.raises(InvalidInputError):
        crossing_q("sigma", QP, (2.5, 1.5))


def test_crossing_aborts_on_nonfinite(monkeypatch):
    calls = []

    def fake(spec, theta0, pair):
        calls.append(spec.q)
        return {1.0: -1.0, 3.0: 1.0}.get(spec.q, float("nan"))

    monkeypatch.setattr(analysis, "second_derivative", fake)
    with pytest.raises(NumericalError):
        crossing_q("pi", QP, (1.0, 3.0))


def test_exchange_report_examples():
    rows = exchange_report("pi", 0.7, [0.5, 3])
    assert rows[0].types[SYM] is LMAX
    assert rows[1].types[SYM] is GMIN
    (row,) = exchange_report("sigma", QP, [2])
    assert row.degenerate_flat and all(t is None for t in row.types.values())
    for kind in Kind:
        (row,) = exchange_report(kind, QP, [0.5])
        assert row.types[EIG] is GMIN


# --- invariants ---------------------------------------------------------------

CASES = [(k, q, d) for k in Kind for q in (0.5, 1, 2.5) for d in (0.3, 0.7, QP)]


@pytest.mark.parametrize("kind, q, delta", CASES)
def test_refinement_reproduces_under_grid_doubling(kind, q, delta):
    spec = FunctionalSpec(kind, q)
    a = classify_extrema(spec, delta, 1001)
    b = classify_extrema(spec, delta, 2002)
    assert len(a.extrema) == len(b.extrema)
    for e in a.extrema:
        assert min(circ(e.theta, f.theta) for f in b.extrema) <= 1e-8


@pytest.mark.parametrize("kind, q, delta", CASES)
def test_critical_point_at_midpoint(kind, q, delta):
    r = classify_extrema(FunctionalSpec(kind, q), delta)
    assert min(circ(e.theta, delta / 2) for e in r.extrema) <= 1e-8


@pytest.mark.parametrize("kind", list(Kind))
def test_exchange_phenomenon_complementary(kind):
    q_star = crossing_q(kind, QP, (1.0, 2.5)).q_star
    grid = np.arange(0.6, 3.0, 0.3)
    below = [q for q in grid if q < q_star]
    above = [q for q in grid if q > q_star]
    types_below = {classify_extrema(FunctionalSpec(kind, q), QP, 501).at(SYM) for q in below}
    types_above = {
        classify_extrema(FunctionalSpec(kind, q), QP, 501).at(SYM) for q in above
    }
    assert GMAX in types_below
    assert GMIN in types_above


def test_determinism_including_threads():
    spec = FunctionalSpec("u", 1.5)
    serial = [classify_extrema(spec, d) for d in (0.3, 0.7, QP)]
    with ThreadPoolExecutor(4) as pool:
        threaded = list(pool.map(lambda d: classify_extrema(spec, d), (0.3, 0.7, QP)))
    for a, b in zip(serial, threaded):
        assert a == b
    c1 = sweep_theta(spec, 0.7, 2001)
    c2 = sweep_theta(spec, 0.7, 2001)
    assert c1.values.tobytes() == c2.values.tobytes()
