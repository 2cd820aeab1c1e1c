import json
import math

import pytest

from cascavity import ConfigError
from cascavity.config import load_config, parse_config


def base_config(**overrides):
    raw = {
        "schema_version": 1,
        "geometry": {
            "zeta": 5.0,
            "cavity_length": 1.0,
            "fiber_length": 5.0,
            "cavity_order": 10,
        },
    }
    raw.update(overrides)
    return raw


class TestParseConfig:
    def test_minimal_config_fills_defaults(self):
        cfg = parse_config(base_config())
        assert cfg.model == "both"
        assert cfg.fiber_alignment == "resonant"
        assert cfg.sweep is None
        assert cfg.drive.kind == "field" and cfg.drive.a_in == 1.0
        assert cfg.output.directory == "out" and cfg.output.svg is False
        assert cfg.phase_grid.points == 181

    def test_unknown_top_level_key_named(self):
        with pytest.raises(ConfigError, match="drvie"):
            parse_config(base_config(drvie={}))

    def test_unknown_nested_key_named(self):
        raw = base_config()
        raw["geometry"]["zets"] = 3.0
        with pytest.raises(ConfigError, match=r"geometry\.'zets'"):
            parse_config(raw)

    def test_missing_geometry(self):
        with pytest.raises(ConfigError, match="geometry"):
            parse_config({"schema_version": 1})

    def test_wrong_schema_version(self):
        with pytest.raises(ConfigError, match="schema_version"):
            parse_config(base_config(schema_version=99))

    def test_sweep_needs_at_least_two_points(self):
        for points in (0, 1):
            raw = base_config(sweep={"parameter": "omega", "min": 1.0, "max": 2.0, "points": points})
            with pytest.raises(ConfigError, match="points"):
                parse_config(raw)

    def test_sweep_bounds_ordered(self):
        raw = base_config(sweep={"parameter": "omega", "min": 2.0, "max": 1.0, "points": 10})
        with pytest.raises(ConfigError, match="sweep"):
            parse_config(raw)

    def test_drive_kinds_are_exclusive(self):
        raw = base_config(drive={"a_in": 1.0, "eta_l": 0.1})
        with pytest.raises(ConfigError, match="mixes"):
            parse_config(raw)

    def test_pump_drive_parsed(self):
        cfg = parse_config(base_config(drive={"eta_l": 0.2, "eta_r": 0.1, "phi": math.pi}))
        assert cfg.drive.kind == "pump"
        assert cfg.drive.eta_l == 0.2

    def test_zeta_grid_validation(self):
        with pytest.raises(ConfigError, match=r"zeta_grid\[1\]"):
            parse_config(base_config(zeta_grid=[3.0, 0.5]))
        with pytest.raises(ConfigError, match="zeta_grid"):
            parse_config(base_config(zeta_grid=[]))

    def test_model_validation(self):
        with pytest.raises(ConfigError, match="model"):
            parse_config(base_config(model="hybrid"))

    def test_single_cavity_excludes_fiber(self):
        raw = base_config()
        raw["geometry"]["single_cavity"] = True
        with pytest.raises(ConfigError, match="single_cavity"):
            parse_config(raw)
        del raw["geometry"]["fiber_length"]
        cfg = parse_config(raw)
        assert cfg.geometry.single_cavity
        assert cfg.geometry.fiber_length is None

    def test_boolean_not_accepted_as_number(self):
        raw = base_config()
        raw["geometry"]["zeta"] = True
        with pytest.raises(ConfigError, match="zeta"):
            parse_config(raw)

    def test_resolved_round_trips_through_json(self):
        cfg = parse_config(base_config(model="scattering", output={"directory": "x", "svg": True}))
        resolved = cfg.resolved()
        assert json.loads(json.dumps(resolved)) == resolved
        assert resolved["model"] == "scattering"
        assert resolved["output"] == {"directory": "x", "svg": True}


class TestLoadConfig:
    def test_loads_from_file(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps(base_config()))
        cfg = load_config(path)
        assert cfg.geometry.zeta == 5.0

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError, match="not valid JSON"):
            load_config(path)
