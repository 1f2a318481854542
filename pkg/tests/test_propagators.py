import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from wavesnap.propagators import (
    IDENTITY_TOL,
    InvalidScale,
    chebyshev_U,
    fundamental_identities_check,
    symbol_Psi,
    symbol_S,
    symbol_Sprime,
)


def mp_S(t, lam):
    if lam == 0:
        return float(t)
    with mpmath.workdps(40):
        return float(mpmath.sin(mpmath.mpf(t) * lam) / lam)


def mp_Psi(m, s, lam):
    with mpmath.workdps(40):
        x = mpmath.mpf(s) * lam
        if mpmath.sin(x) == 0:
            return float(m * mpmath.cos(x) ** (m - 1))
        return float(mpmath.sin(m * x) / mpmath.sin(x))


def test_S_known_values():
    s = symbol_S(1.0)
    assert s(0.0) == 1.0
    assert abs(s(math.pi / 2) - 2.0 / math.pi) < 1e-15
    assert abs(symbol_S(2.5)(0.0) - 2.5) < 1e-15


def test_S_series_branch_matches_high_precision():
    # arguments straddling the 1e-6 series switch
    for t in (1.0, 0.3, 7.0):
        for lam in (1e-9, 1e-7, 9.9e-7, 1.1e-6, 1e-5):
            got = symbol_S(t)(lam)
            want = mp_S(t, lam)
            assert abs(got - want) <= 1e-15 * max(1.0, abs(t)), (t, lam)


def test_Sprime_is_plain_cosine():
    assert symbol_Sprime(0.7)(2.0) == math.cos(1.4)


def test_chebyshev_U_extension():
    # U_{-1} = 0 and U_{-m-2} = -U_m
    assert chebyshev_U(-1, 0.3) == 0.0
    for m in range(0, 6):
        for x in (-0.9, 0.0, 0.4, 1.0):
            assert abs(chebyshev_U(-m - 2, x) + chebyshev_U(m, x)) < 1e-12


def test_chebyshev_U_against_trig_form():
    for m in range(-5, 12):
        for theta in (0.3, 1.0, 2.5):
            want = math.sin(m * theta + theta) / math.sin(theta)
            assert abs(chebyshev_U(m, math.cos(theta)) - want) < 1e-11 * (1 + m * m)


def test_Psi_at_sine_zero_uses_chebyshev():
    # sin(pi) vanishes to double precision; value must be U_{m-1}(cos pi)
    psi = symbol_Psi(3, 1.0)
    assert abs(psi(math.pi) - 3.0) < 1e-9
    assert abs(symbol_Psi(2, 1.0)(math.pi) + 2.0) < 1e-9


def test_Psi_m_zero_and_one():
    assert symbol_Psi(0, 1.0)(1.3) == 0.0
    assert symbol_Psi(1, 1.0)(1.3) == 1.0


def test_Psi_negative_m_is_odd():
    psi_p = symbol_Psi(4, 0.7)
    psi_n = symbol_Psi(-4, 0.7)
    for lam in (0.5, 1.7, 3.0):
        assert abs(psi_p(lam) + psi_n(lam)) < 1e-13


def test_Psi_rejects_zero_scale():
    with pytest.raises(InvalidScale):
        symbol_Psi(2, 0.0)


@settings(max_examples=200)
@given(
    m=st.integers(min_value=-30, max_value=30),
    k=st.integers(min_value=1, max_value=12),
    d=st.floats(min_value=1e-6, max_value=1e-2),
    sign=st.sampled_from((-1.0, 1.0)),
)
def test_branch_agreement_near_resonance(m, k, d, sign):
    # Inside the thin window above the switch the ratio branch runs; it must
    # agree with the Chebyshev value to the cancellation-limited tolerance.
    lam = k * math.pi + sign * math.asin(d)
    got = symbol_Psi(m, 1.0)(lam)
    cheb = chebyshev_U(m - 1, math.cos(lam))
    assert abs(got - cheb) <= 1e-8 * (1 + m * m)


@given(
    m=st.integers(min_value=-12, max_value=12),
    s=st.floats(min_value=0.1, max_value=3.0),
    lam=st.floats(min_value=0.0, max_value=20.0),
)
def test_Psi_matches_high_precision(m, s, lam):
    got = symbol_Psi(m, s)(lam)
    want = mp_Psi(m, s, lam)
    assert abs(got - want) <= 1e-7 * (1 + m * m)


def test_identity_report_on_sound_grid():
    grid = [0.1 + 0.37 * k for k in range(200)]
    grid = [lam for lam in grid if abs(math.sin(lam)) > 5e-3]
    rep = fundamental_identities_check(math.sqrt(2.0), grid)
    assert rep.passes, rep.residuals
    assert rep.max_residual <= IDENTITY_TOL
    assert set(rep.residuals) == {"snapshot_recurrence", "sine_recurrence", "time_shift"}
    assert rep.grid_size == len(grid)


def test_identity_report_flags_nothing_at_zero():
    # lam = 0 sits on every branch boundary and must still satisfy the identities
    rep = fundamental_identities_check(0.5, [0.0])
    assert rep.passes
