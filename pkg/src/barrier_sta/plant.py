"""Scalar disturbed plant and pluggable disturbance models.

The plant is ds/dt = gamma(t) * (u + delta(t)) with a multiplicative
uncertainty gamma(t) in [g, G] and a matched disturbance delta(t) whose
rate is bounded by M. Models declare (g, G, M) themselves; nothing in the
engine estimates them and controllers never see them.
"""
from __future__ import annotations

import abc
import math
from typing import Callable, NamedTuple

import numpy as np

from ._jit import njit

TWO_PI = 2.0 * math.pi
FIVE_PI = 5.0 * math.pi

_NO_PARAMS = np.empty(0, dtype=np.float64)


class LoopFunctions(NamedTuple):
    """Time functions in the (t, params) form consumed by the sim loop.

    ``compiled`` is True when the three callables are numba dispatchers,
    letting the engine run the jitted loop.
    """

    gamma: Callable
    delta: Callable
    delta_dot: Callable
    params: np.ndarray
    compiled: bool


class DisturbanceModel(abc.ABC):
    """Time-dependent disturbance with declared bounds.

    Subclasses must declare g, G (bounds on gamma) and M (bound on
    |delta_dot|) over the run horizon; diagnostics use the declared values.
    """

    g: float
    G: float
    M: float

    @abc.abstractmethod
    def gamma(self, t: float) -> float: ...

    @abc.abstractmethod
    def delta(self, t: float) -> float: ...

    @abc.abstractmethod
    def delta_dot(self, t: float) -> float: ...

    def loop_functions(self) -> LoopFunctions:
        """Default pure-Python adapter; override to enable the jitted loop."""
        return LoopFunctions(
            gamma=lambda t, p: self.gamma(t),
            delta=lambda t, p: self.delta(t),
            delta_dot=lambda t, p: self.delta_dot(t),
            params=_NO_PARAMS,
            compiled=False,
        )


@njit(cache=True)
def _benchmark_gamma(t, p):
    return 4.0 + 2.0 * math.sin(3.0 * t)


@njit(cache=True)
def _benchmark_delta(t, p):
    if t <= TWO_PI:
        return 6.0 * math.sin(5.0 * t)
    if t <= FIVE_PI:
        return 15.0 * math.sin(3.0 * t)
    return 30.0 * math.sin(5.0 * t)


@njit(cache=True)
def _benchmark_delta_dot(t, p):
    if t <= TWO_PI:
        return 30.0 * math.cos(5.0 * t)
    if t <= FIVE_PI:
        return 45.0 * math.cos(3.0 * t)
    return 150.0 * math.cos(5.0 * t)


class BenchmarkDisturbance(DisturbanceModel):
    """The benchmark disturbance pair used throughout the comparison study.

    gamma(t) = 4 + 2*sin(3t), and delta(t) ramps through three sinusoid
    segments of growing rate bound (30, 45, 150):

        6*sin(5t)   for t <= 2*pi
        15*sin(3t)  for 2*pi < t <= 5*pi
        30*sin(5t)  for t > 5*pi

    delta is continuous at both joints (each side vanishes there); only its
    derivative jumps. Pieces are selected left-closed/right-open, so the
    rate at a joint is the one-sided value of the piece containing t.
    """

    g = 2.0
    G = 6.0
    M = 150.0

    #: (t_lo, t_hi, rate bound) per constant-amplitude segment.
    SEGMENTS = ((0.0, TWO_PI, 30.0), (TWO_PI, FIVE_PI, 45.0), (FIVE_PI, math.inf, 150.0))

    def gamma(self, t: float) -> float:
        return _benchmark_gamma(t, _NO_PARAMS)

    def delta(self, t: float) -> float:
        return _benchmark_delta(t, _NO_PARAMS)

    def delta_dot(self, t: float) -> float:
        return _benchmark_delta_dot(t, _NO_PARAMS)

    @staticmethod
    def is_rate_discontinuity(t: float) -> bool:
        """True exactly at the segment joints, where delta_dot is one-sided."""
        return t == TWO_PI or t == FIVE_PI

    def loop_functions(self) -> LoopFunctions:
        return LoopFunctions(
            _benchmark_gamma, _benchmark_delta, _benchmark_delta_dot, _NO_PARAMS, True
        )


@njit(cache=True)
def _sin_gamma(t, p):
    return p[2] + p[3] * math.sin(p[4] * t)


@njit(cache=True)
def _sin_delta(t, p):
    return p[0] * math.sin(p[1] * t)


@njit(cache=True)
def _sin_delta_dot(t, p):
    return p[0] * p[1] * math.cos(p[1] * t)


class SinusoidDisturbance(DisturbanceModel):
    """delta = amplitude*sin(frequency*t), gamma = offset + g_amp*sin(g_freq*t).

    The defaults give the undisturbed-multiplier plant gamma = 1; with
    amplitude = 0 this is the zero-disturbance model.
    """

    def __init__(
        self,
        amplitude: float = 0.0,
        frequency: float = 0.0,
        gamma_offset: float = 1.0,
        gamma_amplitude: float = 0.0,
        gamma_frequency: float = 0.0,
    ):
        if not gamma_offset - abs(gamma_amplitude) > 0.0:
            raise ValueError("gamma must stay positive: need gamma_offset > |gamma_amplitude|")
        self.amplitude = float(amplitude)
        self.frequency = float(frequency)
        self.gamma_offset = float(gamma_offset)
        self.gamma_amplitude = float(gamma_amplitude)
        self.gamma_frequency = float(gamma_frequency)
        self.g = self.gamma_offset - abs(self.gamma_amplitude)
        self.G = self.gamma_offset + abs(self.gamma_amplitude)
        self.M = abs(self.amplitude * self.frequency)
        self._params = np.array(
            [self.amplitude, self.frequency, self.gamma_offset,
             self.gamma_amplitude, self.gamma_frequency],
            dtype=np.float64,
        )

    def gamma(self, t: float) -> float:
        return _sin_gamma(t, self._params)

    def delta(self, t: float) -> float:
        return _sin_delta(t, self._params)

    def delta_dot(self, t: float) -> float:
        return _sin_delta_dot(t, self._params)

    def loop_functions(self) -> LoopFunctions:
        return LoopFunctions(_sin_gamma, _sin_delta, _sin_delta_dot, self._params, True)


def gamma_eval(t: float) -> float:
    """Benchmark multiplier 4 + 2*sin(3t), always in [2, 6]."""
    return _benchmark_gamma(t, _NO_PARAMS)


def delta_eval(t: float) -> float:
    """Benchmark matched disturbance (three sinusoid segments, continuous)."""
    return _benchmark_delta(t, _NO_PARAMS)


def delta_dot_eval(t: float) -> float:
    """Rate of the benchmark disturbance; one-sided at the segment joints."""
    return _benchmark_delta_dot(t, _NO_PARAMS)


def plant_derivative(s: float, u: float, t: float, d: DisturbanceModel) -> float:
    """ds/dt = gamma(t) * (u + delta(t)); affine in u with slope gamma(t)."""
    return d.gamma(t) * (u + d.delta(t))


_PRESETS: dict[str, Callable[..., DisturbanceModel]] = {
    "benchmark": BenchmarkDisturbance,
    "sinusoid": SinusoidDisturbance,
    "zero": lambda: SinusoidDisturbance(),
}


def disturbance_preset_names() -> list[str]:
    return sorted(_PRESETS)


def make_disturbance(preset: str, **params: float) -> DisturbanceModel:
    """Instantiate a named disturbance preset with numeric parameters."""
    try:
        factory = _PRESETS[preset]
    except KeyError:
        known = ", ".join(disturbance_preset_names())
        raise ValueError(f"unknown disturbance preset {preset!r} (known: {known})") from None
    try:
        return factory(**params)
    except TypeError:
        raise ValueError(
            f"disturbance preset {preset!r} does not accept parameters {sorted(params)}"
        ) from None
