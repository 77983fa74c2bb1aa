"""
Run settings.

Values are resolved with priority:
1. CLI flag (explicit)
2. JSON config file given by ``--config``
3. Field default
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from fixed_quadrics.errors import ConfigError

OutputFormat = Literal["text", "json", "latex"]


class Settings(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    seed: int = Field(default=0, ge=0)
    trials: int = Field(default=5, ge=1)
    symbolic_bound: int = Field(default=9, ge=1)
    exact_rank_bound: int = Field(default=8, ge=1)
    enumeration_bound: int = Field(default=12, ge=1)
    specialization_bound: int = Field(default=10**6, ge=2)
    parallel: int = Field(default=1, ge=1)
    letters: bool = False
    format: OutputFormat = "text"
    timings: bool = False

    def bound_for(self, name: str | None) -> int | None:
        """Look up a bound field by name (used by checklist ``max_n`` gates)."""
        if name is None:
            return None
        if name not in type(self).model_fields:
            raise ConfigError(f"unknown settings field {name!r}")
        return int(getattr(self, name))


def load_config(path: Path | None) -> dict[str, Any]:
    """Read a JSON object of settings; a missing ``path`` means no overrides."""
    if path is None:
        return {}
    try:
        with open(path) as f:
            data = json.load(f)
    except FileNotFoundError as e:
        raise ConfigError(f"config file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file {path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return data


def resolve_settings(cli_values: dict[str, Any], config_path: Path | None = None) -> Settings:
    """Merge CLI flags over the config file over defaults; ``None`` flags are unset."""
    merged = load_config(config_path)
    merged.update({key: value for key, value in cli_values.items() if value is not None})
    try:
        return Settings(**merged)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(f"invalid settings: {problems}") from e


def color_enabled(stream: Any) -> bool:
    """Colour only on a TTY and only when ``NO_COLOR`` is unset."""
    if os.environ.get("NO_COLOR"):
        return False
    return bool(getattr(stream, "isatty", lambda: False)())
