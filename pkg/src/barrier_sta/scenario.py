"""Scenario definition, the flat key-value config format, and bundled presets.

A scenario file is line-oriented ``key = value`` text with ``#`` comments
and at most one level of dotted nesting (section.key). Unknown keys are
rejected and every invariant is checked at load time; see
docs/scenario-format.md for the schema.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .controllers import ClassicStaParams, ShtesselParams
from .engine import IntegrationSettings
from .gains import ReachingParams
from .plant import DisturbanceModel, make_disturbance

SCHEMA_VERSION = 1

CONTROLLERS = ("barrier", "classic", "shtessel")


class ScenarioError(ValueError):
    """Scenario file failed to parse or validate."""

    def __init__(self, message: str, source: str | None = None, line: int | None = None):
        where = ""
        if source is not None:
            where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.source = source
        self.line = line


@dataclass(frozen=True)
class Scenario:
    """One closed-loop experiment: plant, controller, and integration setup."""

    name: str
    s0: float
    epsilon: float
    controller: str
    disturbance: DisturbanceModel
    integration: IntegrationSettings = IntegrationSettings()
    reaching: ReachingParams | None = None
    classic: ClassicStaParams | None = None
    shtessel: ShtesselParams | None = None

    def __post_init__(self):
        if not self.epsilon > 0.0:
            raise ScenarioError("epsilon must be > 0")
        if self.controller not in CONTROLLERS:
            raise ScenarioError(
                f"controller must be one of {', '.join(CONTROLLERS)}; got {self.controller!r}"
            )
        needed = {"barrier": "reaching", "classic": "classic", "shtessel": "shtessel"}
        for ctrl, attr in needed.items():
            have = getattr(self, attr) is not None
            if self.controller == ctrl and not have:
                raise ScenarioError(f"controller {ctrl!r} requires {attr} parameters")
            if self.controller != ctrl and have:
                raise ScenarioError(
                    f"{attr} parameters are only valid with controller {ctrl!r}"
                )

    def with_overrides(self, dt: float | None = None, t_end: float | None = None) -> "Scenario":
        """Copy with integration settings overridden (stride re-resolved)."""
        if dt is None and t_end is None:
            return self
        cur = self.integration
        new = IntegrationSettings(
            dt=cur.dt if dt is None else dt,
            t_end=cur.t_end if t_end is None else t_end,
            log_stride=cur.log_stride,
        )
        return replace(self, integration=new)


# key -> (required, parser) for scalar top-level keys
_TOP_KEYS = {"schema_version", "name", "s0", "epsilon", "controller"}
_SECTION_KEYS = {
    "reaching": {"L0", "L1"},
    "classic": {"M"},
    "shtessel": {"mu", "w1", "gamma1", "alpha_m", "nu"},
    "disturbance": {"preset", "amplitude", "frequency",
                    "gamma_offset", "gamma_amplitude", "gamma_frequency"},
    "integration": {"dt", "t_end", "log_stride"},
}


def _parse_lines(text: str, source: str) -> dict[str, tuple[str, int]]:
    entries: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError("expected 'key = value'", source, lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ScenarioError("expected 'key = value'", source, lineno)
        if key in entries:
            raise ScenarioError(f"duplicate key {key!r}", source, lineno)
        dots = key.count(".")
        if dots > 1:
            raise ScenarioError(f"nesting deeper than section.key: {key!r}", source, lineno)
        if dots == 0:
            if key not in _TOP_KEYS:
                raise ScenarioError(f"unknown key {key!r}", source, lineno)
        else:
            section, _, sub = key.partition(".")
            if section not in _SECTION_KEYS:
                raise ScenarioError(f"unknown section {section!r}", source, lineno)
            if sub not in _SECTION_KEYS[section]:
                raise ScenarioError(f"unknown key {key!r}", source, lineno)
        entries[key] = (value, lineno)
    return entries


class _Entries:
    def __init__(self, entries: dict[str, tuple[str, int]], source: str):
        self._entries = entries
        self._source = source

    def take(self, key: str, required: bool = False) -> tuple[str, int] | None:
        if key not in self._entries:
            if required:
                raise ScenarioError(f"missing required key {key!r}", self._source)
            return None
        return self._entries.pop(key)

    def take_float(self, key: str, required: bool = False, default: float | None = None):
        got = self.take(key, required)
        if got is None:
            return default
        value, lineno = got
        try:
            return float(value)
        except ValueError:
            raise ScenarioError(f"{key} must be a number, got {value!r}",
                                self._source, lineno) from None

    def take_int(self, key: str, required: bool = False, default: int | None = None):
        got = self.take(key, required)
        if got is None:
            return default
        value, lineno = got
        try:
            return int(value)
        except ValueError:
            raise ScenarioError(f"{key} must be an integer, got {value!r}",
                                self._source, lineno) from None

    def take_str(self, key: str, required: bool = False) -> str | None:
        got = self.take(key, required)
        return got[0] if got is not None else None

    def remaining(self) -> dict[str, tuple[str, int]]:
        return dict(self._entries)


def parse_scenario(text: str, source: str = "<string>") -> Scenario:
    """Parse and validate scenario text; errors carry source and line info."""
    e = _Entries(_parse_lines(text, source), source)

    version = e.take_int("schema_version", required=True)
    if version != SCHEMA_VERSION:
        raise ScenarioError(f"unsupported schema_version {version} (expected {SCHEMA_VERSION})",
                            source)
    name = e.take_str("name", required=True)
    s0 = e.take_float("s0", required=True)
    epsilon = e.take_float("epsilon", required=True)
    controller = e.take_str("controller", required=True)

    reaching = classic = shtessel = None
    try:
        if controller == "barrier":
            reaching = ReachingParams(
                L0=e.take_float("reaching.L0", required=True),
                L1=e.take_float("reaching.L1", required=True),
            )
        elif controller == "classic":
            classic = ClassicStaParams.from_rate_bound(e.take_float("classic.M", required=True))
        elif controller == "shtessel":
            shtessel = ShtesselParams(
                mu=e.take_float("shtessel.mu", required=True),
                w1=e.take_float("shtessel.w1", required=True),
                gamma1=e.take_float("shtessel.gamma1", required=True),
                epsilon=epsilon,
                alpha_m=e.take_float("shtessel.alpha_m", required=True),
                nu=e.take_float("shtessel.nu", required=True),
            )

        preset = e.take_str("disturbance.preset", required=True)
        dist_params = {}
        for key in ("amplitude", "frequency", "gamma_offset", "gamma_amplitude",
                    "gamma_frequency"):
            value = e.take_float(f"disturbance.{key}")
            if value is not None:
                dist_params[key] = value
        disturbance = make_disturbance(preset, **dist_params)

        integration = IntegrationSettings(
            dt=e.take_float("integration.dt", default=IntegrationSettings.dt),
            t_end=e.take_float("integration.t_end", default=IntegrationSettings.t_end),
            log_stride=e.take_int("integration.log_stride", default=None),
        )

        left = e.remaining()
        if left:
            keys = sorted(left)
            raise ScenarioError(
                f"keys not valid for this scenario: {', '.join(keys)}", source, left[keys[0]][1]
            )

        return Scenario(
            name=name, s0=s0, epsilon=epsilon, controller=controller,
            disturbance=disturbance, integration=integration,
            reaching=reaching, classic=classic, shtessel=shtessel,
        )
    except ScenarioError:
        raise
    except ValueError as exc:
        raise ScenarioError(str(exc), source) from exc


def load_scenario(path: str | Path) -> Scenario:
    """Load a scenario file from disk."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file: {exc}", str(path)) from exc
    return parse_scenario(text, source=str(path))


#: Canonical bundled presets (file stem = scenario name).
PRESETS = ("fig2a", "fig2b", "classic_m150", "zero_barrier")

#: Figure-family aliases: fig3*/fig4* reuse the fig2 runs, with the plotting
#: layer selecting the phi and gain columns respectively.
PRESET_ALIASES = {"fig3a": "fig2a", "fig3b": "fig2b", "fig4a": "fig2a", "fig4b": "fig2b"}


def preset_names() -> list[str]:
    return list(PRESETS) + sorted(PRESET_ALIASES)


def load_preset(name: str) -> Scenario:
    """Load a bundled preset scenario by name (aliases resolve to their target)."""
    canonical = PRESET_ALIASES.get(name, name)
    if canonical not in PRESETS:
        raise ScenarioError(
            f"unknown preset {name!r} (known: {', '.join(preset_names())})"
        )
    ref = resources.files(__package__).joinpath(f"presets/{canonical}.scenario")
    return parse_scenario(ref.read_text(), source=f"preset:{canonical}")


def resolve_scenario(ref: str) -> Scenario:
    """Resolve a --scenario argument: an existing file path, else a preset name."""
    if Path(ref).is_file():
        return load_scenario(ref)
    return load_preset(ref)
