"""Barrier-function gain and the two-phase variable gain schedule.

The gain automaton starts in a reaching phase where the gain ramps
affinely, l(t) = L1*t + L0, and switches permanently to the barrier gain
L_b(s) = sqrt(eps)*b / sqrt(eps - |s|) at the first step where
|s| <= eps/2. The barrier floor b is frozen at the switch
(b = sqrt(2)*l(t_bar), or b = L0 when the run already starts inside the
eps/2 band).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import IntEnum

from ._jit import njit

SQRT2 = math.sqrt(2.0)

# Relative floor applied to (eps - |s|) inside gain_step. The barrier pole
# is unreachable in exact arithmetic but discrete integration can overshoot;
# every clamp is counted and treated as a run-quality failure downstream.
GUARD_ETA = 1e-9


class Phase(IntEnum):
    REACHING = 0
    BARRIER = 1


class BarrierDomainError(ValueError):
    """Barrier gain evaluated at or beyond its pole (|x| >= epsilon)."""


@dataclass(frozen=True)
class BarrierParams:
    """Barrier interval half-width and floor gain."""

    epsilon: float
    b: float

    def __post_init__(self):
        if not self.epsilon > 0.0:
            raise ValueError("epsilon must be > 0")
        if not self.b > 0.0:
            raise ValueError("b must be > 0")


@dataclass(frozen=True)
class ReachingParams:
    """Affine gain ramp l(t) = L1*t + L0 used before the switch."""

    L0: float
    L1: float

    def __post_init__(self):
        if not self.L0 > 0.0:
            raise ValueError("L0 must be > 0")
        if not self.L1 > 0.0:
            raise ValueError("L1 must be > 0")


@dataclass(frozen=True)
class GainState:
    """Two-phase gain automaton state, threaded through a run by the caller.

    ``t_bar`` and ``b`` are set exactly once, at the reaching->barrier
    switch; ``sat_count`` counts singularity-guard engagements.
    """

    phase: Phase = Phase.REACHING
    t_bar: float | None = None
    b: float | None = None
    sat_count: int = 0

    @classmethod
    def initial(cls, s0: float, epsilon: float, reaching: ReachingParams) -> "GainState":
        """State at t=0. Runs with |s0| <= eps/2 begin in barrier phase with b = L0."""
        if abs(s0) <= 0.5 * epsilon:
            return cls(phase=Phase.BARRIER, t_bar=0.0, b=reaching.L0)
        return cls(phase=Phase.REACHING)


@njit(cache=True)
def _barrier_gain(margin: float, epsilon: float, b: float) -> float:
    # margin = epsilon - |x|, caller guarantees margin > 0. Written as a
    # ratio so the minimum is exact: margin = epsilon gives exactly b.
    return b * math.sqrt(epsilon / margin)


@njit(cache=True)
def _reaching_gain(t: float, L0: float, L1: float) -> float:
    return L1 * t + L0


@njit(cache=True)
def _gain_step(phase, t_bar, b, sat_count, t, s, L0, L1, epsilon):
    """Scalar gain-automaton step shared by the public API and the sim loop.

    Returns (L, phase, t_bar, b, sat_count, sat_flag).
    """
    if phase == 0 and abs(s) <= 0.5 * epsilon:
        t_bar = t
        b = SQRT2 * _reaching_gain(t, L0, L1)
        phase = 1
    if phase == 0:
        return _reaching_gain(t, L0, L1), phase, t_bar, b, sat_count, False
    margin = epsilon - abs(s)
    floor = GUARD_ETA * epsilon
    sat_flag = margin < floor
    if sat_flag:
        margin = floor
        sat_count += 1
    return _barrier_gain(margin, epsilon, b), phase, t_bar, b, sat_count, sat_flag


def barrier_value(x: float, p: BarrierParams) -> float:
    """Barrier gain sqrt(eps)*b / sqrt(eps - |x|); even, minimal at 0 with value b.

    Raises BarrierDomainError at or beyond the pole |x| >= epsilon.
    Callers that cannot guarantee |x| < epsilon belong on gain_step, which
    clamps instead of raising.
    """
    margin = p.epsilon - abs(x)
    if not margin > 0.0:
        raise BarrierDomainError(
            f"barrier gain undefined for |x| >= epsilon ({abs(x)!r} >= {p.epsilon!r})"
        )
    return _barrier_gain(margin, p.epsilon, p.b)


def reaching_gain(t: float, p: ReachingParams) -> float:
    """Affine reaching-phase gain L1*t + L0."""
    return _reaching_gain(t, p.L0, p.L1)


def gain_step(
    state: GainState,
    t: float,
    s: float,
    rp: ReachingParams,
    epsilon: float,
) -> tuple[float, GainState]:
    """Advance the gain automaton one step and return (gain, new state).

    In reaching phase returns l(t); the first call with |s| <= eps/2
    freezes t_bar = t and b = sqrt(2)*l(t_bar) and switches to barrier
    phase; in barrier phase returns the guarded barrier gain (the pole is
    clamped at a relative margin of GUARD_ETA and counted in sat_count).
    """
    t_bar = state.t_bar if state.t_bar is not None else math.nan
    b = state.b if state.b is not None else math.nan
    L, phase, t_bar, b, sat_count, _ = _gain_step(
        int(state.phase), t_bar, b, state.sat_count, t, s, rp.L0, rp.L1, epsilon
    )
    if phase == int(state.phase) and sat_count == state.sat_count:
        return L, state
    if state.phase == Phase.BARRIER:
        return L, replace(state, sat_count=sat_count)
    return L, GainState(Phase(phase), t_bar if phase == 1 else None,
                        b if phase == 1 else None, sat_count)
