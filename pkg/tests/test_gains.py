import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from barrier_sta import (
    BarrierDomainError,
    BarrierParams,
    GainState,
    Phase,
    ReachingParams,
    barrier_value,
    gain_step,
    reaching_gain,
)
from barrier_sta.gains import GUARD_ETA

RP = ReachingParams(L0=0.1, L1=1.0)
BP = BarrierParams(epsilon=0.1, b=0.1)


class TestBarrierValue:
    def test_minimum_at_zero(self):
        assert barrier_value(0.0, BP) == 0.1

    def test_half_width_value(self):
        expected = 0.1 * math.sqrt(2.0)
        assert math.isclose(barrier_value(0.05, BP), expected, rel_tol=1e-14)

    def test_even(self):
        assert barrier_value(-0.05, BP) == barrier_value(0.05, BP)

    def test_pole_raises(self):
        with pytest.raises(BarrierDomainError):
            barrier_value(0.1, BP)
        with pytest.raises(BarrierDomainError):
            barrier_value(-0.25, BP)

    def test_divergence_rate(self):
        # eps*(1 - 10^-k) is not a binary double; hold the implementation
        # to the exact value at the representable input and the stated
        # b*10^(k/2) rate to the input-rounding limit
        from mpmath import mp

        mp.dps = 50
        eps, b = BP.epsilon, BP.b
        for k in range(1, 7):
            x = eps - eps * 10.0 ** -k
            exact = mp.sqrt(mp.mpf(eps)) * mp.mpf(b) / mp.sqrt(mp.mpf(eps) - mp.mpf(x))
            assert abs(barrier_value(x, BP) - exact) / exact <= 1e-12
            rate = b * 10.0 ** (k / 2.0)
            assert math.isclose(barrier_value(x, BP), rate, rel_tol=1e-10)

    def test_grid_even_minimal_monotonic(self):
        eps, b = BP.epsilon, BP.b
        xs = np.linspace(0.0, eps * (1.0 - 1e-9), 2000)
        vals = np.array([barrier_value(float(x), BP) for x in xs])
        neg_vals = np.array([barrier_value(float(-x), BP) for x in xs])
        assert np.array_equal(vals, neg_vals)
        assert vals[0] == b
        assert np.all(vals[1:] > b)
        assert np.all(np.diff(vals) > 0.0)

    @given(
        eps=st.floats(1e-3, 10.0),
        b=st.floats(1e-3, 100.0),
        frac=st.floats(0.0, 0.999999),
        sign=st.sampled_from([-1.0, 1.0]),
    )
    def test_even_and_floored_property(self, eps, b, frac, sign):
        p = BarrierParams(epsilon=eps, b=b)
        x = sign * frac * eps
        v = barrier_value(x, p)
        assert v == barrier_value(-x, p)
        assert v >= b

    def test_param_validation(self):
        with pytest.raises(ValueError):
            BarrierParams(epsilon=0.0, b=1.0)
        with pytest.raises(ValueError):
            BarrierParams(epsilon=1.0, b=-2.0)


class TestReachingGain:
    def test_intercept_benchmark_values(self):
        assert reaching_gain(0.0, RP) == 0.1

    def test_affine(self):
        assert reaching_gain(5.0, RP) == 5.1

    def test_other_intercept(self):
        assert reaching_gain(0.0, ReachingParams(L0=2.0, L1=7.0)) == 2.0

    def test_validation(self):
        with pytest.raises(ValueError):
            ReachingParams(L0=0.0, L1=1.0)
        with pytest.raises(ValueError):
            ReachingParams(L0=1.0, L1=0.0)


class TestGainStep:
    def test_reaching_branch(self):
        state = GainState.initial(5.0, 0.1, RP)
        L, state2 = gain_step(state, 1.0, 3.0, RP, 0.1)
        assert L == 1.1
        assert state2.phase is Phase.REACHING
        assert state2 is state

    def test_switch_freezes_floor(self):
        state = GainState.initial(5.0, 0.1, RP)
        t_bar = 2.0
        L, state2 = gain_step(state, t_bar, 0.05, RP, 0.1)
        assert state2.phase is Phase.BARRIER
        assert state2.t_bar == t_bar
        b = math.sqrt(2.0) * reaching_gain(t_bar, RP)
        assert state2.b == b
        # at |s| = eps/2 the barrier gain is sqrt(2)*b
        assert math.isclose(L, math.sqrt(2.0) * b, rel_tol=1e-14)

    def test_start_inside_band(self):
        state = GainState.initial(0.04, 0.1, RP)
        assert state.phase is Phase.BARRIER
        assert state.t_bar == 0.0
        assert state.b == RP.L0

    def test_phase_never_reverts(self):
        _, state = gain_step(GainState.initial(5.0, 0.1, RP), 1.5, 0.01, RP, 0.1)
        assert state.phase is Phase.BARRIER
        L, state2 = gain_step(state, 2.0, 5.0, RP, 0.1)  # far outside the band
        assert state2.phase is Phase.BARRIER
        assert state2.b == state.b and state2.t_bar == state.t_bar
        assert state2.sat_count == 1  # |s| >= eps engages the guard

    def test_guard_clamps_and_counts(self):
        _, state = gain_step(GainState.initial(5.0, 0.1, RP), 1.0, 0.05, RP, 0.1)
        eps, b = 0.1, state.b
        L, state2 = gain_step(state, 1.1, eps, RP, eps)  # margin 0: pole hit
        assert state2.sat_count == 1
        clamped = b * math.sqrt(eps / (GUARD_ETA * eps))
        assert L == clamped
        assert math.isfinite(L)
        # well inside the band: no further increments
        L3, state3 = gain_step(state2, 1.2, 0.01, RP, eps)
        assert state3.sat_count == 1
        assert math.isfinite(L3)

    def test_floor_in_each_phase(self):
        state = GainState.initial(5.0, 0.1, RP)
        for t in np.linspace(0.0, 0.9, 10):
            L, state = gain_step(state, float(t), 5.0, RP, 0.1)
            assert L >= RP.L0
        L, state = gain_step(state, 1.0, 0.02, RP, 0.1)
        assert state.phase is Phase.BARRIER
        for i, s in enumerate(np.linspace(-0.09, 0.09, 19)):
            L, state = gain_step(state, 1.0 + 0.1 * i, float(s), RP, 0.1)
            assert L >= state.b
