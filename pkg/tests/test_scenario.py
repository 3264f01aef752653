import math

import pytest

from barrier_sta import (
    BenchmarkDisturbance,
    Scenario,
    ScenarioError,
    SinusoidDisturbance,
    load_preset,
    load_scenario,
    parse_scenario,
    preset_names,
    resolve_scenario,
)
from barrier_sta.controllers import ClassicStaParams
from barrier_sta.gains import ReachingParams

MINIMAL = """
schema_version = 1
name = minimal
s0 = 2.0
epsilon = 0.5
controller = barrier
reaching.L0 = 0.2
reaching.L1 = 1.5
disturbance.preset = zero
"""


class TestPresets:
    def test_fig2a_contents(self):
        sc = load_preset("fig2a")
        assert sc.name == "fig2a"
        assert sc.s0 == 5.0
        assert sc.epsilon == 0.1
        assert sc.controller == "barrier"
        assert sc.reaching == ReachingParams(L0=0.1, L1=1.0)
        assert isinstance(sc.disturbance, BenchmarkDisturbance)
        assert sc.integration.dt == 1e-5
        assert sc.integration.t_end == 10.0 * math.pi

    def test_fig2b_contents(self):
        sc = load_preset("fig2b")
        assert sc.controller == "shtessel"
        p = sc.shtessel
        assert (p.mu, p.w1, p.gamma1) == (1.0, 200.0, 2.0)
        assert p.nu == p.alpha_m == 0.01
        assert p.epsilon == sc.epsilon == 0.1

    def test_classic_preset(self):
        sc = load_preset("classic_m150")
        assert sc.classic.M == 150.0
        assert sc.classic.k1 == 1.5 * math.sqrt(150.0)
        d = sc.disturbance
        assert isinstance(d, SinusoidDisturbance)
        assert (d.amplitude, d.frequency, d.M) == (30.0, 5.0, 150.0)

    def test_aliases_resolve_to_fig2_runs(self):
        assert load_preset("fig3a").name == "fig2a"
        assert load_preset("fig3b").name == "fig2b"
        assert load_preset("fig4a").name == "fig2a"
        assert load_preset("fig4b").name == "fig2b"

    def test_preset_names_cover_figure_family(self):
        names = preset_names()
        for name in ("fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b"):
            assert name in names

    def test_unknown_preset(self):
        with pytest.raises(ScenarioError):
            load_preset("fig9z")


class TestParsing:
    def test_minimal(self):
        sc = parse_scenario(MINIMAL)
        assert sc.name == "minimal"
        assert sc.integration.dt == 1e-5  # default

    def test_comments_and_blanks_ignored(self):
        sc = parse_scenario(MINIMAL + "\n# trailing comment\n\n")
        assert sc.s0 == 2.0

    def test_negative_epsilon_rejected(self):
        text = MINIMAL.replace("epsilon = 0.5", "epsilon = -1")
        with pytest.raises(ScenarioError, match="epsilon"):
            parse_scenario(text)

    def test_unknown_key_rejected_with_line(self):
        text = MINIMAL + "bogus = 3\n"
        with pytest.raises(ScenarioError, match=r"scn:10.*bogus|bogus"):
            parse_scenario(text, source="scn")

    def test_unknown_section_rejected(self):
        with pytest.raises(ScenarioError, match="unknown section"):
            parse_scenario(MINIMAL + "plumbus.q = 1\n")

    def test_too_deep_nesting_rejected(self):
        with pytest.raises(ScenarioError, match="nesting"):
            parse_scenario(MINIMAL + "integration.dt.micro = 1\n")

    def test_duplicate_key_rejected(self):
        with pytest.raises(ScenarioError, match="duplicate"):
            parse_scenario(MINIMAL + "s0 = 3.0\n")

    def test_non_numeric_value_rejected(self):
        text = MINIMAL.replace("s0 = 2.0", "s0 = two")
        with pytest.raises(ScenarioError, match="number"):
            parse_scenario(text)

    def test_missing_required_key(self):
        text = MINIMAL.replace("name = minimal", "")
        with pytest.raises(ScenarioError, match="name"):
            parse_scenario(text)

    def test_missing_controller_params(self):
        text = MINIMAL.replace("reaching.L0 = 0.2", "")
        with pytest.raises(ScenarioError, match="reaching.L0"):
            parse_scenario(text)

    def test_foreign_controller_params_rejected(self):
        with pytest.raises(ScenarioError, match="classic.M"):
            parse_scenario(MINIMAL + "classic.M = 10\n")

    def test_wrong_schema_version(self):
        text = MINIMAL.replace("schema_version = 1", "schema_version = 2")
        with pytest.raises(ScenarioError, match="schema_version"):
            parse_scenario(text)

    def test_malformed_line(self):
        with pytest.raises(ScenarioError, match="key = value"):
            parse_scenario(MINIMAL + "just words\n")

    def test_unknown_disturbance_preset(self):
        text = MINIMAL.replace("disturbance.preset = zero",
                               "disturbance.preset = chaos")
        with pytest.raises(ScenarioError, match="chaos"):
            parse_scenario(text)

    def test_sinusoid_disturbance_params(self):
        text = MINIMAL.replace(
            "disturbance.preset = zero",
            "disturbance.preset = sinusoid\n"
            "disturbance.amplitude = 2.0\n"
            "disturbance.frequency = 3.0",
        )
        sc = parse_scenario(text)
        assert sc.disturbance.M == 6.0

    def test_invalid_reaching_param_wrapped(self):
        text = MINIMAL.replace("reaching.L0 = 0.2", "reaching.L0 = -0.2")
        with pytest.raises(ScenarioError, match="L0"):
            parse_scenario(text)


class TestScenarioType:
    def test_controller_param_exclusivity(self):
        with pytest.raises(ScenarioError, match="classic"):
            Scenario(name="x", s0=1.0, epsilon=0.1, controller="barrier",
                     reaching=ReachingParams(0.1, 1.0),
                     classic=ClassicStaParams(1.0, 1.0),
                     disturbance=SinusoidDisturbance())

    def test_missing_params_for_controller(self):
        with pytest.raises(ScenarioError, match="reaching"):
            Scenario(name="x", s0=1.0, epsilon=0.1, controller="barrier",
                     disturbance=SinusoidDisturbance())

    def test_unknown_controller(self):
        with pytest.raises(ScenarioError, match="controller"):
            Scenario(name="x", s0=1.0, epsilon=0.1, controller="pid",
                     disturbance=SinusoidDisturbance())

    def test_with_overrides(self):
        sc = load_preset("fig2a")
        sc2 = sc.with_overrides(dt=1e-4, t_end=2.0)
        assert (sc2.integration.dt, sc2.integration.t_end) == (1e-4, 2.0)
        assert sc2.name == sc.name
        assert sc.with_overrides() is sc


class TestLoading:
    def test_load_scenario_file(self, tmp_path):
        path = tmp_path / "mine.scenario"
        path.write_text(MINIMAL)
        sc = load_scenario(path)
        assert sc.name == "minimal"

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(ScenarioError, match="cannot read"):
            load_scenario(tmp_path / "absent.scenario")

    def test_error_carries_source_and_line(self, tmp_path):
        path = tmp_path / "bad.scenario"
        path.write_text(MINIMAL + "mystery = 1\n")
        with pytest.raises(ScenarioError) as exc:
            load_scenario(path)
        assert str(path) in str(exc.value)
        assert ":10:" in str(exc.value)

    def test_resolve_prefers_files(self, tmp_path):
        path = tmp_path / "fig2a"  # a file shadowing a preset name
        path.write_text(MINIMAL)
        assert resolve_scenario(str(path)).name == "minimal"
        assert resolve_scenario("fig2a").name == "fig2a"
