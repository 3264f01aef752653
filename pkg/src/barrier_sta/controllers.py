"""Discrete-time super-twisting update laws.

All three controllers share the super-twisting structure

    u  = -g1 * |s|^(1/2) * sign(s) + u2
    u2' = u2 - g2 * sign(s) * dt

and differ only in how the gains (g1, g2) are produced: the barrier
controller takes g1 = L from the gain schedule and g2 = L^2, the classic
controller uses fixed (k1, k2), and the Shtessel-style adaptive controller
drives g1 = alpha through its own adaptation law with g2 = beta/2 = mu*alpha.

Step functions are pure: state in, (control, new state) out, explicit
Euler on the integral (and adaptive-gain) terms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._jit import njit


@njit(cache=True)
def _signum(x: float) -> float:
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


@njit(cache=True)
def _signed_power(x: float, gamma: float) -> float:
    # gamma = 0 resolves to the sign selection (0 at x = 0); gamma = 1/2 goes
    # through sqrt, which is correctly rounded where pow is not.
    if gamma == 0.0:
        return _signum(x)
    if gamma == 0.5:
        return math.sqrt(abs(x)) * _signum(x)
    return abs(x) ** gamma * _signum(x)


@njit(cache=True)
def _sta_step(u2, g1, g2, s, dt):
    """One super-twisting step: returns (u, u2')."""
    u = -g1 * _signed_power(s, 0.5) + u2
    return u, u2 - g2 * _signum(s) * dt


@njit(cache=True)
def _shtessel_alpha_step(alpha, s, dt, w1, gamma1, epsilon, alpha_m, nu):
    if alpha > alpha_m:
        return alpha + dt * (w1 * math.sqrt(gamma1 / 2.0) * _signum(abs(s) - epsilon))
    return alpha + dt * nu


def signum(x: float) -> float:
    """Sign of x with the midpoint selection sign(0) = 0."""
    return _signum(x)


def signed_power(x: float, gamma: float) -> float:
    """|x|^gamma * sign(x); for gamma = 0 this is signum(x)."""
    if gamma < 0.0:
        raise ValueError("gamma must be >= 0")
    return _signed_power(x, gamma)


@dataclass(frozen=True)
class StaState:
    """Integral term of a super-twisting controller."""

    u2: float = 0.0


@dataclass(frozen=True)
class ClassicStaParams:
    """Fixed super-twisting gains; M is the assumed bound on the disturbance rate."""

    k1: float
    k2: float
    M: float | None = None

    @classmethod
    def from_rate_bound(cls, M: float) -> "ClassicStaParams":
        """Standard tuning k1 = 1.5*sqrt(M), k2 = 1.1*M for |delta_dot| <= M."""
        if not M > 0.0:
            raise ValueError("M must be > 0")
        return cls(k1=1.5 * math.sqrt(M), k2=1.1 * M, M=M)


@dataclass(frozen=True)
class ShtesselParams:
    """Tuning constants of the adaptive super-twisting competitor."""

    mu: float
    w1: float
    gamma1: float
    epsilon: float
    alpha_m: float
    nu: float

    def __post_init__(self):
        for name in ("mu", "w1", "gamma1", "epsilon", "alpha_m", "nu"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be > 0")


@dataclass(frozen=True)
class ShtesselState:
    """Adaptive gain and integral term of the competitor controller."""

    alpha: float
    u2: float = 0.0

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise ValueError("alpha must be > 0")


def barrier_sta_step(st: StaState, L: float, s: float, dt: float) -> tuple[float, StaState]:
    """Variable-gain super-twisting step: u = -L*|s|^(1/2)*sign(s) + u2, u2' = u2 - L^2*sign(s)*dt."""
    if not dt > 0.0:
        raise ValueError("dt must be > 0")
    u, u2 = _sta_step(st.u2, L, L * L, s, dt)
    return u, StaState(u2)


def classic_sta_step(st: StaState, p: ClassicStaParams, s: float, dt: float) -> tuple[float, StaState]:
    """Fixed-gain super-twisting step with gains (k1, k2)."""
    if not dt > 0.0:
        raise ValueError("dt must be > 0")
    u, u2 = _sta_step(st.u2, p.k1, p.k2, s, dt)
    return u, StaState(u2)


def shtessel_sta_step(
    st: ShtesselState, p: ShtesselParams, s: float, dt: float
) -> tuple[float, ShtesselState]:
    """Adaptive super-twisting step.

    The gain alpha is advanced first (grow while |s| > epsilon, shrink
    while |s| < epsilon, creep up at rate nu below alpha_m); the advanced
    alpha drives this step's control and beta = 2*mu*alpha.
    """
    if not dt > 0.0:
        raise ValueError("dt must be > 0")
    alpha = _shtessel_alpha_step(st.alpha, s, dt, p.w1, p.gamma1, p.epsilon, p.alpha_m, p.nu)
    beta = 2.0 * p.mu * alpha
    u, u2 = _sta_step(st.u2, alpha, 0.5 * beta, s, dt)
    return u, ShtesselState(alpha=alpha, u2=u2)
