"""Trajectory diagnostics: Lyapunov-style health checks and run metrics.

Everything here is computed after the fact from a TrajectoryLog and the
disturbance model's declared bounds (g, G, M). The change of variables
y1 = L_b(s)^2 * s, y2 = phi puts the barrier-phase dynamics in the frame
where the Lyapunov function V1 and its sandwich bounds apply; the derived
constants (C0, C_M, y_M, V*) give a conservative eventual bound on V1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .controllers import signum
from .engine import TrajectoryLog
from .scenario import Scenario


class TransformDomainError(ValueError):
    """Coordinate change evaluated outside the barrier interval (|s| >= epsilon)."""


def transform(s: float, phi: float, b: float, epsilon: float) -> tuple[float, float]:
    """Barrier-frame coordinates (y1, y2) = (L_b(s)^2 * s, phi)."""
    margin = epsilon - abs(s)
    if not margin > 0.0:
        raise TransformDomainError(f"|s| must be < epsilon ({abs(s)!r} >= {epsilon!r})")
    lb_sq = epsilon * b * b / margin
    return lb_sq * s, phi


def saturation(y2: float) -> float:
    """Unit saturation sign(y2)*min(|y2|, 1)."""
    return signum(y2) * min(abs(y2), 1.0)


def lyapunov_value(y1: float, y2: float, C0: float, g: float, G: float) -> float:
    """Lyapunov function of the barrier-frame state.

    V1 = ln(1 + 2*C0*|y1|)/(2*C0) * (1 - sign(y1)*sat(y2)/4) + F*y2^2/2
    with F = g when sign(y1)*y2 <= 0 and F = G otherwise (sign(0) = 0
    selects g). Discontinuous across y1 = 0; not smoothed.
    """
    if not C0 > 0.0:
        raise ValueError("C0 must be > 0")
    if not 0.0 < g <= G:
        raise ValueError("need 0 < g <= G")
    F = g if signum(y1) * y2 <= 0.0 else G
    log_term = math.log(1.0 + 2.0 * C0 * abs(y1)) / (2.0 * C0)
    return log_term * (1.0 - 0.25 * signum(y1) * saturation(y2)) + 0.5 * F * y2 * y2


@dataclass(frozen=True)
class LyapunovConstants:
    """Derived constants of the barrier-frame analysis.

    y_M > 0 requires C_M = M/b^2 > 1/8; small-M runs legitimately violate
    it, flagged by ``y_m_positive`` (V_star is NaN in that case since the
    bound's derivation does not apply).
    """

    C0: float
    C_M: float
    y_M: float
    V_star: float
    y_m_positive: bool


def lyapunov_constants(b: float, epsilon: float, M: float, g: float, G: float) -> LyapunovConstants:
    """C0 = 1/(2 b^2 eps), C_M = M/b^2, y_M = (4/C0)(C_M - 1/8), and the
    eventual bound V* = 8(1 + G^2 + 1/g^2) C_M^2 + (5 ln(1 + 2 C0 y_M)/C0)(1 + 1/g)."""
    if not (b > 0.0 and epsilon > 0.0 and g > 0.0 and G > 0.0):
        raise ValueError("b, epsilon, g, G must be > 0")
    if not M >= 0.0:
        raise ValueError("M must be >= 0")
    C0 = 1.0 / (2.0 * b * b * epsilon)
    C_M = M / (b * b)
    y_M = (4.0 / C0) * (C_M - 0.125)
    y_m_positive = y_M > 0.0
    if y_m_positive:
        V_star = (8.0 * (1.0 + G * G + 1.0 / (g * g)) * C_M * C_M
                  + (5.0 * math.log(1.0 + 2.0 * C0 * y_M) / C0) * (1.0 + 1.0 / g))
    else:
        V_star = math.nan
    return LyapunovConstants(C0=C0, C_M=C_M, y_M=y_M, V_star=V_star, y_m_positive=y_m_positive)


@dataclass(frozen=True)
class LyapunovSample:
    """Barrier-frame state and Lyapunov value at one logged instant."""

    t: float
    y1: float
    y2: float
    V1: float
    in_strip: bool
    F: float


def lyapunov_samples(log: TrajectoryLog, scenario: Scenario) -> list[LyapunovSample]:
    """Barrier-phase samples of (y1, y2, V1) along a logged run.

    Uses the run's frozen barrier floor b and the disturbance model's
    declared (g, G, M); rows where the singularity guard engaged are
    excluded (the transform is undefined there).
    """
    if not math.isfinite(log.b):
        return []
    d = scenario.disturbance
    consts = lyapunov_constants(log.b, scenario.epsilon, d.M, d.g, d.G)
    out = []
    barrier = (log.phase == 1) & (log.sat_flag == 0)
    for i in np.flatnonzero(barrier):
        y1, y2 = transform(float(log.s[i]), float(log.phi[i]), log.b, scenario.epsilon)
        V1 = lyapunov_value(y1, y2, consts.C0, d.g, d.G)
        F = d.g if signum(y1) * y2 <= 0.0 else d.G
        out.append(LyapunovSample(
            t=float(log.t[i]), y1=y1, y2=y2, V1=V1,
            in_strip=abs(y1) <= consts.y_M, F=F,
        ))
    return out


@dataclass(frozen=True)
class Metrics:
    """Scalar summary of one run.

    t_bar is NaN when the run never reached |s| <= eps/2 (possible for
    hostile scenarios); sup_s_post and L_min_barrier are NaN in that case
    and converged is False. converged means: switched, stayed strictly
    inside the epsilon band afterwards, and never hit the singularity guard.
    """

    t_bar: float
    sup_s_post: float
    sup_phi_tail: float
    L_max: float
    L_min_barrier: float
    sat_count: int
    converged: bool


def extract_metrics(log: TrajectoryLog, scenario: Scenario) -> Metrics:
    """Reduce a trajectory to Metrics.

    For the barrier controller t_bar comes from the gain automaton; for the
    others it is the first logged sample with |s| <= eps/2, making the
    post-switch supremum comparable across controllers.
    """
    if log.n_rows == 0:
        raise ValueError("empty trajectory log")
    eps = scenario.epsilon
    abs_s = np.abs(log.s)

    if log.controller == "barrier":
        t_bar = log.t_bar
    else:
        hits = np.flatnonzero(abs_s <= 0.5 * eps)
        t_bar = float(log.t[hits[0]]) if hits.size else math.nan

    if math.isnan(t_bar):
        sup_s_post = math.nan
    else:
        sup_s_post = float(abs_s[log.t >= t_bar].max())

    t_end = float(log.t[-1])
    tail = log.t >= 0.8 * t_end
    sup_phi_tail = float(np.abs(log.phi[tail]).max())

    L_max = float(log.L.max())
    in_barrier = log.phase == 1
    L_min_barrier = float(log.L[in_barrier].min()) if in_barrier.any() else math.nan

    converged = (not math.isnan(t_bar)) and sup_s_post < eps and log.sat_count == 0
    return Metrics(
        t_bar=t_bar, sup_s_post=sup_s_post, sup_phi_tail=sup_phi_tail,
        L_max=L_max, L_min_barrier=L_min_barrier,
        sat_count=log.sat_count, converged=converged,
    )
