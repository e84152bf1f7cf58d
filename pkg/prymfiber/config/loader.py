"""Configuration loader and validation for prymfiber."""
import copy
import logging
import os
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

DEFAULTS: dict[str, Any] = {
    "enumeration": {
        "cycle_cap": 24,
        "monodromy_cap": 20,
        "subcurve_cap": 20,
    },
    "picard": {"t": 10},
    "search": {
        "max_vertices": 3,
        "max_edges": 6,
        "max_genus_per_vertex": 1,
        "min_genus": 2,
        "max_genus": None,
        "candidate_limit": 10_000_000,
    },
    "output": {"format": "json"},
}

_ENV_OVERRIDES = {
    "PRYM_CYCLE_CAP": ("enumeration", "cycle_cap"),
    "PRYM_MONODROMY_CAP": ("enumeration", "monodromy_cap"),
    "PRYM_T": ("picard", "t"),
}


def _env_int(name: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}") from None


def load_config(config_path: str | Path | None = None) -> dict[str, Any]:
    """Load and validate config from YAML file, falling back to built-in defaults."""
    if config_path is None:
        config_path = os.getenv("PRYM_CONFIG_PATH", "config/config.yaml")
    path = Path(config_path)

    data: dict[str, Any] = {}
    if path.exists():
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Config file {path} must contain a mapping")
    else:
        logger.warning("Config file not found: %s; using defaults", path)

    for section, values in DEFAULTS.items():
        merged = data.setdefault(section, {}) or {}
        if not isinstance(merged, dict):
            raise ValueError(f"Config section '{section}' must be a mapping")
        for key, value in values.items():
            merged.setdefault(key, copy.deepcopy(value))
        data[section] = merged

    # Apply env overrides
    for name, (section, key) in _ENV_OVERRIDES.items():
        if raw := os.getenv(name):
            data[section][key] = _env_int(name, raw)

    validate_config(data)
    return data


def validate_config(data: dict[str, Any]) -> None:
    """Raise ValueError naming the first invalid key."""
    for key in ("cycle_cap", "monodromy_cap", "subcurve_cap"):
        value = data["enumeration"][key]
        if not isinstance(value, int) or value <= 0:
            raise ValueError(f"enumeration.{key} must be a positive integer, got {value!r}")

    t = data["picard"]["t"]
    if not isinstance(t, int) or t < 10:
        raise ValueError(f"picard.t must be an integer >= 10, got {t!r}")

    search = data["search"]
    for key in ("max_vertices", "max_edges", "max_genus_per_vertex", "min_genus", "candidate_limit"):
        value = search[key]
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"search.{key} must be a nonnegative integer, got {value!r}")
    if search["max_genus"] is not None and (
        not isinstance(search["max_genus"], int) or search["max_genus"] < search["min_genus"]
    ):
        raise ValueError("search.max_genus must be null or an integer >= search.min_genus")

    if data["output"]["format"] not in ("json", "dot"):
        raise ValueError(f"output.format must be 'json' or 'dot', got {data['output']['format']!r}")
