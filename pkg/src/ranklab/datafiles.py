"""Loading and strict validation of the shipped JSON data files.

Both tables live under ``ranklab/data``; the environment variable
``RANKLAB_DATA_DIR`` points lookups at an alternative directory.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

from .errors import ConfigError

FAMILY_KINDS = ("veronese", "grassmann", "segre", "flag_adjoint3")


def _read_data_file(name: str, explicit: str | os.PathLike | None = None) -> list:
    if explicit is not None:
        text = Path(explicit).read_text()
    else:
        override = os.environ.get("RANKLAB_DATA_DIR")
        if override:
            text = (Path(override) / name).read_text()
        else:
            text = resources.files("ranklab.data").joinpath(name).read_text()
    data = json.loads(text)
    if not isinstance(data, list):
        raise ConfigError(f"{name}: top-level JSON value must be an array")
    return data


def _require_keys(obj: dict, required: dict[str, type | tuple], where: str) -> None:
    unknown = set(obj) - set(required)
    if unknown:
        raise ConfigError(f"{where}: unknown fields {sorted(unknown)}")
    for key, types in required.items():
        if key not in obj:
            raise ConfigError(f"{where}: missing field {key!r}")
        if not isinstance(obj[key], types):
            raise ConfigError(f"{where}: field {key!r} has wrong type")
        if types is int and isinstance(obj[key], bool):
            raise ConfigError(f"{where}: field {key!r} has wrong type")


def _check_family(obj: dict, where: str) -> None:
    if obj["family"] not in FAMILY_KINDS:
        raise ConfigError(f"{where}: unknown family {obj['family']!r}")
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in obj["params"]):
        raise ConfigError(f"{where}: params must be integers")


def load_exception_entries(path: str | os.PathLike | None = None) -> list[dict]:
    """Raw exception-table rows, schema-checked (bit-exact ints, no extras)."""
    rows = _read_data_file("exception_table.json", path)
    for i, obj in enumerate(rows):
        where = f"exception_table[{i}]"
        if not isinstance(obj, dict):
            raise ConfigError(f"{where}: entries must be objects")
        _require_keys(obj, {"family": str, "params": list, "s": int,
                            "defect": int, "status": str, "citation": str}, where)
        _check_family(obj, where)
        if isinstance(obj["s"], bool) or isinstance(obj["defect"], bool):
            raise ConfigError(f"{where}: integer fields must be plain ints")
        if obj["defect"] < 1:
            raise ConfigError(f"{where}: defects must be >= 1")
        if obj["status"] not in ("theorem", "conjecture"):
            raise ConfigError(f"{where}: status must be 'theorem' or 'conjecture'")
    return rows


def load_known_fact_rows(path: str | os.PathLike | None = None) -> list[dict]:
    """Raw known-rank-facts rows, schema-checked."""
    rows = _read_data_file("known_rank_facts.json", path)
    for i, obj in enumerate(rows):
        where = f"known_rank_facts[{i}]"
        if not isinstance(obj, dict):
            raise ConfigError(f"{where}: entries must be objects")
        _require_keys(obj, {"family": str, "params": list, "sigma": (int, type(None)),
                            "value": int, "is_upper_bound_only": bool,
                            "citation": str}, where)
        _check_family(obj, where)
        if isinstance(obj["value"], bool) or isinstance(obj["sigma"], bool):
            raise ConfigError(f"{where}: integer fields must be plain ints")
    return rows
