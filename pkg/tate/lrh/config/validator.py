"""
tate.lrh.config.validator
=========================
Config validation. Raises ConfigError with descriptive messages
when fields have unsupported values or types.
"""

from __future__ import annotations

from typing import Any, Dict

from tate.core.data_types import OutputFormat
from tate.core.exceptions import ConfigError


_VALID_FORMATS    = set(OutputFormat.ALL)
_VALID_SECTIONS   = {"grid", "numeric", "weil", "orthogonality", "oracle", "strip", "output", "runtime"}
_MIN_PRECISION    = 64


def _require_int(section: str, key: str, value: Any, minimum: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ConfigError(
            f"{section}.{key} must be an int >= {minimum}, got {value!r}",
            details={"section": section, "key": key},
        )


def _require_bool(section: str, key: str, value: Any) -> None:
    if not isinstance(value, bool):
        raise ConfigError(f"{section}.{key} must be a bool", details={"got": type(value).__name__})


def _section(config: Dict[str, Any], name: str) -> Dict[str, Any]:
    section = config.get(name, {})
    if not isinstance(section, dict):
        raise ConfigError(f"{name} must be a dict", details={"got": type(section).__name__})
    return section


class ConfigValidator:
    """
    Validates a run config dict.
    All fields are optional (defaults are applied in RunConfig).
    Raises ConfigError for invalid enum values or type mismatches.
    """

    @staticmethod
    def validate(config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate the config dict. Returns the same dict if valid.
        Raises ConfigError if any value is invalid.
        """
        if not isinstance(config, dict):
            raise ConfigError(
                f"Config must be a dict, got {type(config).__name__}",
                details={"type": type(config).__name__},
            )

        unknown = set(config) - _VALID_SECTIONS
        if unknown:
            raise ConfigError(
                f"Unknown config section(s): {sorted(unknown)}",
                details={"valid": sorted(_VALID_SECTIONS)},
            )

        grid    = _section(config, "grid")
        numeric = _section(config, "numeric")
        weil    = _section(config, "weil")
        ortho   = _section(config, "orthogonality")
        oracle  = _section(config, "oracle")
        strip   = _section(config, "strip")
        output  = _section(config, "output")
        runtime = _section(config, "runtime")

        # ── Grid ───────────────────────────────────────────────────────────
        if "m_max" in grid:
            _require_int("grid", "m_max", grid["m_max"], 0)
        k_filter = grid.get("k_filter")
        if k_filter is not None:
            if not isinstance(k_filter, list):
                raise ConfigError("grid.k_filter must be a list or null")
            for k in k_filter:
                _require_int("grid", "k_filter[]", k, 0)

        # ── Numerics ───────────────────────────────────────────────────────
        if "precision_bits" in numeric:
            _require_int("numeric", "precision_bits", numeric["precision_bits"], _MIN_PRECISION)
        tolerances = numeric.get("tolerances", {})
        if not isinstance(tolerances, dict):
            raise ConfigError("numeric.tolerances must be a dict")
        for name, tol in tolerances.items():
            if not isinstance(tol, (int, float)) or isinstance(tol, bool) or tol <= 0:
                raise ConfigError(
                    f"numeric.tolerances.{name} must be a positive number, got {tol!r}"
                )

        # ── Suites ─────────────────────────────────────────────────────────
        for name, section in (("weil", weil), ("orthogonality", ortho), ("oracle", oracle), ("strip", strip)):
            if "enabled" in section:
                _require_bool(name, "enabled", section["enabled"])
        if "degree_bound" in weil:
            _require_int("weil", "degree_bound", weil["degree_bound"], 0)
        if weil.get("pairing_bound") is not None:
            _require_int("weil", "pairing_bound", weil["pairing_bound"], 0)
        if "fourier_validate" in weil:
            _require_bool("weil", "fourier_validate", weil["fourier_validate"])
        if "m_max" in ortho:
            _require_int("orthogonality", "m_max", ortho["m_max"], 0)
        for k in ortho.get("k_values", []):
            _require_int("orthogonality", "k_values[]", k, 0)
        if "m_max" in oracle:
            _require_int("oracle", "m_max", oracle["m_max"], 0)
        if "random_elements" in oracle:
            _require_int("oracle", "random_elements", oracle["random_elements"], 0)
        if "seed" in oracle:
            _require_int("oracle", "seed", oracle["seed"], 0)
        for pair in oracle.get("samples", []):
            if (
                not isinstance(pair, (list, tuple)) or len(pair) != 2
                or not all(isinstance(x, (int, float)) for x in pair)
            ):
                raise ConfigError(f"oracle.samples entries must be [re, im], got {pair!r}")
            if pair[0] <= 0:
                raise ConfigError(f"oracle.samples need Re(s) > 0, got {pair!r}")
        if "trials" in strip:
            _require_int("strip", "trials", strip["trials"], 1)
        if "seed" in strip:
            _require_int("strip", "seed", strip["seed"], 0)

        # ── Output ─────────────────────────────────────────────────────────
        if "format" in output and output["format"] not in _VALID_FORMATS:
            raise ConfigError(
                f"Invalid output.format: {output['format']!r}",
                details={"valid": sorted(_VALID_FORMATS)},
            )
        if output.get("path") is not None and not isinstance(output["path"], str):
            raise ConfigError("output.path must be a string or null")
        if "include_timing" in output:
            _require_bool("output", "include_timing", output["include_timing"])

        # ── Runtime ────────────────────────────────────────────────────────
        if "parallelism" in runtime:
            _require_int("runtime", "parallelism", runtime["parallelism"], 1)
        if "console_log" in runtime:
            _require_bool("runtime", "console_log", runtime["console_log"])

        return config
