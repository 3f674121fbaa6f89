import logging

import pytest

from utils.algebra.errors import FieldSpecError
from utils.run_config import ConfigError, RunConfig, configure_logging, load_run_config, read_version


def test_defaults():
    cfg = load_run_config(env={})
    assert cfg == RunConfig()
    assert str(cfg.field_spec) == "Q"


def test_environment_layer():
    cfg = load_run_config(env={"BETTI_MAX_GENS": "12", "BETTI_FIELD": "Fp:3", "BETTI_METHOD": "oracle", "BETTI_SEED": ""})
    assert (cfg.max_gens, cfg.field, cfg.method, cfg.seed) == (12, "Fp:3", "oracle", 0)


def test_bad_environment_value():
    with pytest.raises(ConfigError):
        load_run_config(env={"BETTI_MAX_GENS": "many"})


def test_yaml_then_overrides(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("method: cancel\nseed: 9\ncount: 5\n", encoding="utf-8")
    cfg = load_run_config({"seed": 3, "method": None}, config_path=str(path), env={"BETTI_SEED": "1"})
    assert cfg.method == "cancel"
    assert cfg.seed == 3
    assert cfg.count == 5


def test_yaml_unknown_keys(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("methd: cancel\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="methd"):
        load_run_config(config_path=str(path), env={})


def test_yaml_must_be_a_mapping(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("- a\n- b\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_run_config(config_path=str(path), env={})
    with pytest.raises(ConfigError):
        load_run_config(config_path=str(tmp_path / "missing.yaml"), env={})


@pytest.mark.parametrize(
    "overrides, error",
    [
        ({"method": "guess"}, ConfigError),
        ({"field": "Fp:4"}, FieldSpecError),
        ({"output_format": "xml"}, ConfigError),
        ({"max_gens": 0}, ConfigError),
    ],
)
def test_invalid_values(overrides, error):
    with pytest.raises(error):
        load_run_config(overrides, env={})


def test_ideal_text_sources(tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text("x^2, y^2\n", encoding="utf-8")
    assert RunConfig(ideal_text="x*y", input_path=str(path)).read_ideal_text() == "x*y"
    assert RunConfig(input_path=str(path)).read_ideal_text() == "x^2, y^2\n"
    with pytest.raises(ConfigError):
        RunConfig().read_ideal_text()
    with pytest.raises(ConfigError):
        RunConfig(input_path=str(tmp_path / "nope.txt")).read_ideal_text()


def test_logging_level():
    configure_logging("debug")
    assert logging.getLogger().level == logging.DEBUG
    configure_logging("nonsense")
    assert logging.getLogger().level == logging.WARNING


def test_version_file():
    assert read_version().count(".") == 2
