# ---------------- utils/run_config.py ----------------
"""
Run configuration for the CLI and the explorer.

Overview for future devs:
- RunConfig is frozen; build one with load_run_config() and derive variants
  with dataclasses.replace().
- Precedence, lowest to highest:
    1. dataclass defaults
    2. .env (load_dotenv(override=False)) and BETTI_* environment variables
    3. an optional YAML file (keys = RunConfig field names)
    4. explicit command-line flags (passed in as `overrides`, None = not given)
- Logging goes to stderr only; stdout is reserved for results.
"""

from __future__ import annotations

import logging
import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Mapping

import yaml
from dotenv import load_dotenv

from utils.algebra.errors import AlgebraError
from utils.algebra.fields import FieldSpec
from utils.algebra.taylor import DEFAULT_FACE_CAP
from utils.betti_engine import METHODS

OUTPUT_FORMATS = ("text", "json", "dot")
VERSION_FILE = Path(__file__).resolve().parent.parent / "version.txt"

_ENV_KEYS = {
    "BETTI_MAX_GENS": ("max_gens", int),
    "BETTI_FIELD": ("field", str),
    "BETTI_METHOD": ("method", str),
    "BETTI_SEED": ("seed", int),
    "BETTI_LOG_LEVEL": ("log_level", str),
}


class ConfigError(AlgebraError):
    """Raised for unreadable config files or values of the wrong shape."""


@dataclass(frozen=True)
class RunConfig:
    command: str = "betti"
    ideal_text: str | None = None
    input_path: str | None = None
    method: str = "decompose"
    field: str = "Q"
    seed: int = 0
    max_gens: int = DEFAULT_FACE_CAP
    max_depth: int | None = None
    output_format: str = "text"
    log_level: str = "WARNING"
    # fuzz / suite settings
    count: int = 100
    vars: int = 4
    gens: int = 6
    max_exp: int = 4
    artinian: bool = False
    almost_generic: bool = False
    semidominant: int | None = None
    conjecture: str | None = None

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)

    def read_ideal_text(self) -> str:
        """Inline text wins over the input file; '-' reads stdin."""
        if self.ideal_text is not None:
            return self.ideal_text
        if self.input_path is None:
            raise ConfigError("No ideal given: pass it inline or with --input")
        if self.input_path == "-":
            return sys.stdin.read()
        try:
            return Path(self.input_path).read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"Cannot read {self.input_path}: {e}") from e


def _field_names() -> set[str]:
    return {f.name for f in fields(RunConfig)}


def _from_env(env: Mapping[str, str]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, (name, cast) in _ENV_KEYS.items():
        raw = env.get(key)
        if raw is None or raw == "":
            continue
        try:
            out[name] = cast(raw)
        except ValueError as e:
            raise ConfigError(f"{key}={raw!r} is not a valid {cast.__name__}") from e
    return out


def _from_yaml(path: str) -> dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Config file {path} is not valid YAML: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a mapping, got {type(data).__name__}")
    unknown = set(data) - _field_names()
    if unknown:
        raise ConfigError(f"Unknown config keys in {path}: {', '.join(sorted(unknown))}")
    return data


def load_run_config(
    overrides: Mapping[str, Any] | None = None,
    config_path: str | None = None,
    env: Mapping[str, str] | None = None,
    use_dotenv: bool = True,
) -> RunConfig:
    """Layer defaults, environment, YAML and overrides into one RunConfig."""
    if use_dotenv and env is None:
        load_dotenv(override=False)
    env = os.environ if env is None else env

    layered: dict[str, Any] = {}
    layered.update(_from_env(env))
    if config_path:
        layered.update(_from_yaml(config_path))
    for key, value in (overrides or {}).items():
        if value is not None:
            layered[key] = value

    cfg = replace(RunConfig(), **layered)
    if cfg.method not in METHODS:
        raise ConfigError(f"Unknown method {cfg.method!r}; expected one of {', '.join(METHODS)}")
    FieldSpec.parse(cfg.field)
    if cfg.output_format not in OUTPUT_FORMATS:
        raise ConfigError(f"Unknown output format {cfg.output_format!r}")
    if cfg.max_gens < 1:
        raise ConfigError(f"max_gens must be positive, got {cfg.max_gens}")
    return cfg


def configure_logging(level: str = "WARNING") -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def read_version() -> str:
    try:
        return VERSION_FILE.read_text(encoding="utf-8").strip()
    except OSError:
        return "unknown"
