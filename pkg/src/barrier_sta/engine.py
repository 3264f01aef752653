"""Deterministic fixed-step closed-loop simulation.

Explicit Euler on plant and controller states in lockstep, one rate, with
a fixed per-step order: gain, control, plant state, controller state. The
discontinuous sign terms rule out high-order schemes, so accuracy comes
from a small step (default 1e-5 s) and is quantified by step-halving
tests rather than assumed.

The inner loop is a single function compiled with numba when the
disturbance model provides jit-compatible time functions; otherwise the
identical Python source runs interpreted (see _jit).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from ._jit import NUMBA_ENABLED, njit, plain
from .controllers import _shtessel_alpha_step, _sta_step
from .gains import _gain_step

if TYPE_CHECKING:  # pragma: no cover
    from .scenario import Scenario

DEFAULT_DT = 1e-5
DEFAULT_T_END = 10.0 * math.pi
MAX_DEFAULT_ROWS = 1_000_000
BLOWUP_LIMIT = 1e12

CTRL_BARRIER = 0
CTRL_CLASSIC = 1
CTRL_SHTESSEL = 2

_CTRL_CODES = {"barrier": CTRL_BARRIER, "classic": CTRL_CLASSIC, "shtessel": CTRL_SHTESSEL}


class NumericalBlowup(RuntimeError):
    """|s| or |u2| exceeded the blowup guard; signals a bad scenario or tuning."""

    def __init__(self, time: float):
        super().__init__(f"state exceeded {BLOWUP_LIMIT:g} at t = {time:.6g} s")
        self.time = time


@dataclass(frozen=True)
class IntegrationSettings:
    """Fixed-step integration horizon and logging stride.

    ``log_stride=None`` picks the smallest stride keeping the log at or
    under MAX_DEFAULT_ROWS rows.
    """

    dt: float = DEFAULT_DT
    t_end: float = DEFAULT_T_END
    log_stride: int | None = None

    def __post_init__(self):
        if not self.dt > 0.0:
            raise ValueError("dt must be > 0")
        if not self.t_end > 0.0:
            raise ValueError("t_end must be > 0")
        if self.log_stride is not None and self.log_stride < 1:
            raise ValueError("log_stride must be >= 1")

    @property
    def n_steps(self) -> int:
        return math.floor(self.t_end / self.dt)

    def resolved_stride(self) -> int:
        if self.log_stride is not None:
            return self.log_stride
        return max(1, -(-self.n_steps // (MAX_DEFAULT_ROWS - 1)))


@dataclass
class TrajectoryLog:
    """Struct-of-arrays record of a run, one row every ``stride`` steps.

    phi is the identity u2 + delta evaluated at the row time, not an
    independent state. For the barrier controller L is the scheduled gain
    and phase is 0 (reaching) or 1 (barrier); for the classic controller
    L = k1 and for the adaptive competitor L = alpha, both with phase 0.
    """

    t: np.ndarray
    s: np.ndarray
    u: np.ndarray
    u2: np.ndarray
    phi: np.ndarray
    L: np.ndarray
    phase: np.ndarray
    gamma: np.ndarray
    delta: np.ndarray
    delta_dot: np.ndarray
    sat_flag: np.ndarray
    dt: float
    stride: int
    controller: str
    t_bar: float = math.nan
    b: float = math.nan
    sat_count: int = 0

    COLUMNS = ("t", "s", "u", "u2", "phi", "L", "phase",
               "gamma", "delta", "delta_dot", "sat_flag")

    @property
    def n_rows(self) -> int:
        return self.t.shape[0]

    def column(self, name: str) -> np.ndarray:
        if name not in self.COLUMNS:
            raise KeyError(name)
        return getattr(self, name)


@njit(cache=True)
def _euler(s, ds_dt, dt):
    return s + dt * ds_dt


def euler_step(s: float, ds_dt: float, dt: float) -> float:
    """Single explicit Euler update s + dt*ds_dt."""
    if not dt > 0.0:
        raise ValueError("dt must be > 0")
    return _euler(s, ds_dt, dt)


@njit
def _simulate_loop(
    ctrl, s0, dt, n_steps, stride,
    L0, L1, epsilon, phase0, t_bar0, b0,
    k1, k2,
    mu, w1, gamma1, sh_epsilon, alpha_m, nu, alpha0,
    gamma_fn, delta_fn, delta_dot_fn, dp,
    t_out, s_out, u_out, u2_out, phi_out, L_out, phase_out,
    gamma_out, delta_out, ddot_out, sat_out,
):
    s = s0
    u2 = 0.0
    alpha = alpha0
    phase = phase0
    t_bar = t_bar0
    b = b0
    sat_count = 0
    row = 0
    status = 0
    blow_t = 0.0
    for k in range(n_steps + 1):
        t = k * dt
        sat_flag = False
        if ctrl == CTRL_BARRIER:
            L, phase, t_bar, b, sat_count, sat_flag = _gain_step(
                phase, t_bar, b, sat_count, t, s, L0, L1, epsilon
            )
            u, u2_next = _sta_step(u2, L, L * L, s, dt)
        elif ctrl == CTRL_CLASSIC:
            L = k1
            u, u2_next = _sta_step(u2, k1, k2, s, dt)
        else:
            alpha = _shtessel_alpha_step(alpha, s, dt, w1, gamma1, sh_epsilon, alpha_m, nu)
            L = alpha
            u, u2_next = _sta_step(u2, alpha, mu * alpha, s, dt)
        gam = gamma_fn(t, dp)
        dlt = delta_fn(t, dp)
        if k % stride == 0:
            t_out[row] = t
            s_out[row] = s
            u_out[row] = u
            u2_out[row] = u2
            phi_out[row] = u2 + dlt
            L_out[row] = L
            phase_out[row] = phase
            gamma_out[row] = gam
            delta_out[row] = dlt
            ddot_out[row] = delta_dot_fn(t, dp)
            sat_out[row] = 1 if sat_flag else 0
            row += 1
        if k == n_steps:
            break
        s = _euler(s, gam * (u + dlt), dt)
        u2 = u2_next
        if not (abs(s) <= BLOWUP_LIMIT and abs(u2) <= BLOWUP_LIMIT):
            status = 1
            blow_t = (k + 1) * dt
            break
    return status, blow_t, phase, t_bar, b, sat_count, row


def simulate(scenario: "Scenario") -> TrajectoryLog:
    """Run the closed loop described by a validated scenario.

    Deterministic: equal scenarios produce bit-identical logs. Raises
    NumericalBlowup (with the offending time) if |s| or |u2| passes 1e12.
    """
    settings = scenario.integration
    n_steps = settings.n_steps
    stride = settings.resolved_stride()
    n_rows = n_steps // stride + 1

    floats = [np.empty(n_rows, dtype=np.float64) for _ in range(9)]
    t_a, s_a, u_a, u2_a, phi_a, L_a, gam_a, dlt_a, ddot_a = floats
    phase_a = np.zeros(n_rows, dtype=np.int64)
    sat_a = np.zeros(n_rows, dtype=np.int64)

    ctrl = _CTRL_CODES[scenario.controller]
    L0 = L1 = 0.0
    phase0 = 0
    t_bar0 = b0 = math.nan
    k1 = k2 = 0.0
    mu = w1 = gamma1 = sh_eps = alpha_m = nu = alpha0 = 0.0
    if ctrl == CTRL_BARRIER:
        L0, L1 = scenario.reaching.L0, scenario.reaching.L1
        if abs(scenario.s0) <= 0.5 * scenario.epsilon:
            phase0, t_bar0, b0 = 1, 0.0, L0
    elif ctrl == CTRL_CLASSIC:
        k1, k2 = scenario.classic.k1, scenario.classic.k2
    else:
        p = scenario.shtessel
        mu, w1, gamma1, sh_eps = p.mu, p.w1, p.gamma1, p.epsilon
        alpha_m, nu = p.alpha_m, p.nu
        alpha0 = p.alpha_m

    fns = scenario.disturbance.loop_functions()
    loop = _simulate_loop if (NUMBA_ENABLED and fns.compiled) else plain(_simulate_loop)
    status, blow_t, phase, t_bar, b, sat_count, rows = loop(
        ctrl, scenario.s0, settings.dt, n_steps, stride,
        L0, L1, scenario.epsilon, phase0, t_bar0, b0,
        k1, k2,
        mu, w1, gamma1, sh_eps, alpha_m, nu, alpha0,
        fns.gamma, fns.delta, fns.delta_dot, fns.params,
        t_a, s_a, u_a, u2_a, phi_a, L_a, phase_a, gam_a, dlt_a, ddot_a, sat_a,
    )
    if status != 0:
        raise NumericalBlowup(blow_t)
    assert rows == n_rows
    return TrajectoryLog(
        t=t_a, s=s_a, u=u_a, u2=u2_a, phi=phi_a, L=L_a, phase=phase_a,
        gamma=gam_a, delta=dlt_a, delta_dot=ddot_a, sat_flag=sat_a,
        dt=settings.dt, stride=stride, controller=scenario.controller,
        t_bar=t_bar, b=b, sat_count=sat_count,
    )
