"""
tate.lrh.config.run_config
==========================
RunConfig: typed, validated configuration for LocalRHVerifier and the CLI.
Can be initialized from:
  - A preset name string ("default", "quick", "full")
  - A YAML file path
  - A raw dict

Environment variables TATE_PRECISION_BITS and TATE_JOBS override the file
values for numeric precision and worker count.
"""

from __future__ import annotations

import os
from typing import Any, Dict, List, Optional, Tuple, Union

from tate.core.config_loader import load_config
from tate.core.exceptions import ConfigError
from tate.lrh.config.validator import ConfigValidator

ENV_PRECISION = "TATE_PRECISION_BITS"
ENV_JOBS      = "TATE_JOBS"

DEFAULT_TOLERANCES: Dict[str, float] = {
    "quadrature":    1e-25,
    "ratio_spread":  1e-8,
    "orthogonality": 1e-10,
    "root_residual": 1e-25,
    "fourier":       1e-20,
    "functional_eq": 1e-20,
}

DEFAULT_SAMPLES: List[List[float]] = [[0.75, 0.0], [1.0, 0.0], [1.5, 0.5], [2.0, -1.0], [3.0, 2.0]]


class RunConfig:
    """
    Typed configuration for a verification run.

    Usage
    -----
    # From preset
    cfg = RunConfig("quick")

    # From dict
    cfg = RunConfig({
        "grid":    {"m_max": 8},
        "output":  {"format": "json", "path": "reports/run.json"},
        "runtime": {"parallelism": 4},
    })

    # From YAML file
    cfg = RunConfig("/path/to/run.yaml")
    """

    def __init__(self, source: Union[str, Dict[str, Any], None] = None, use_env: bool = True):
        raw = load_config(source) if source is not None else {}
        raw = ConfigValidator.validate(raw)
        self._raw = raw

        # ── Grid ───────────────────────────────────────────────────────────
        grid_cfg = raw.get("grid", {})
        self.m_max: int                   = int(grid_cfg.get("m_max", 20))
        self.k_filter: Optional[List[int]] = grid_cfg.get("k_filter")

        # ── Numerics ───────────────────────────────────────────────────────
        numeric_cfg = raw.get("numeric", {})
        self.precision_bits: int = int(numeric_cfg.get("precision_bits", 128))
        self.tolerances: Dict[str, float] = dict(DEFAULT_TOLERANCES)
        self.tolerances.update(
            {k: float(v) for k, v in numeric_cfg.get("tolerances", {}).items()}
        )

        # ── Weil representation suite ──────────────────────────────────────
        weil_cfg = raw.get("weil", {})
        self.weil_enabled: bool     = weil_cfg.get("enabled", True)
        self.degree_bound: int      = int(weil_cfg.get("degree_bound", 12))
        self.pairing_bound: Optional[int] = weil_cfg.get("pairing_bound")
        self.fourier_validate: bool = weil_cfg.get("fourier_validate", True)

        # ── Orthogonality suite ────────────────────────────────────────────
        ortho_cfg = raw.get("orthogonality", {})
        self.ortho_enabled: bool      = ortho_cfg.get("enabled", True)
        self.ortho_m_max: int         = int(ortho_cfg.get("m_max", 16))
        self.ortho_k_values: List[int] = list(ortho_cfg.get("k_values", [0, 1, 2, 3]))

        # ── Oracle suite ───────────────────────────────────────────────────
        oracle_cfg = raw.get("oracle", {})
        self.oracle_enabled: bool          = oracle_cfg.get("enabled", True)
        self.oracle_m_max: int             = int(oracle_cfg.get("m_max", 12))
        self.oracle_samples: List[List[float]] = [
            list(pair) for pair in oracle_cfg.get("samples", DEFAULT_SAMPLES)
        ]
        self.random_elements: int          = int(oracle_cfg.get("random_elements", 10))
        self.oracle_seed: int              = int(oracle_cfg.get("seed", 7))

        # ── Strip-shrinking property ───────────────────────────────────────
        strip_cfg = raw.get("strip", {})
        self.strip_enabled: bool = strip_cfg.get("enabled", True)
        self.strip_trials: int   = int(strip_cfg.get("trials", 500))
        self.strip_seed: int     = int(strip_cfg.get("seed", 42))

        # ── Output ─────────────────────────────────────────────────────────
        output_cfg = raw.get("output", {})
        self.output_format: str       = output_cfg.get("format", "json")
        self.output_path: Optional[str] = output_cfg.get("path")
        self.include_timing: bool     = output_cfg.get("include_timing", False)

        # ── Runtime ────────────────────────────────────────────────────────
        runtime_cfg = raw.get("runtime", {})
        self.parallelism: int  = int(runtime_cfg.get("parallelism", 1))
        self.console_log: bool = runtime_cfg.get("console_log", False)

        if use_env:
            self._apply_env()

    def _apply_env(self) -> None:
        for var, attr, floor in ((ENV_PRECISION, "precision_bits", 64), (ENV_JOBS, "parallelism", 1)):
            value = os.environ.get(var)
            if value is None or value == "":
                continue
            try:
                number = int(value)
            except ValueError as exc:
                raise ConfigError(
                    f"{var} must be an integer, got {value!r}",
                    details={"variable": var},
                ) from exc
            if number < floor:
                raise ConfigError(
                    f"{var} must be >= {floor}, got {number}",
                    details={"variable": var},
                )
            setattr(self, attr, number)

    # ── Derived views ─────────────────────────────────────────────────────────

    def grid(self) -> List[Tuple[int, int]]:
        """Every (m, k) with m <= m_max and k <= m, filtered by k_filter; vacuous pairs included."""
        pairs = [(m, k) for m in range(self.m_max + 1) for k in range(m + 1)]
        if self.k_filter is not None:
            allowed = set(self.k_filter)
            pairs = [(m, k) for m, k in pairs if k in allowed]
        return pairs

    def sample_points(self) -> List[complex]:
        return [complex(re, im) for re, im in self.oracle_samples]

    def tolerance(self, name: str) -> float:
        return self.tolerances[name]

    def to_dict(self) -> Dict[str, Any]:
        """Effective configuration, env overrides applied."""
        return {
            "grid":    {"m_max": self.m_max, "k_filter": self.k_filter},
            "numeric": {"precision_bits": self.precision_bits, "tolerances": dict(self.tolerances)},
            "weil":    {
                "enabled": self.weil_enabled,
                "degree_bound": self.degree_bound,
                "pairing_bound": self.pairing_bound,
                "fourier_validate": self.fourier_validate,
            },
            "orthogonality": {
                "enabled": self.ortho_enabled,
                "m_max": self.ortho_m_max,
                "k_values": list(self.ortho_k_values),
            },
            "oracle": {
                "enabled": self.oracle_enabled,
                "m_max": self.oracle_m_max,
                "samples": [list(p) for p in self.oracle_samples],
                "random_elements": self.random_elements,
                "seed": self.oracle_seed,
            },
            "strip":   {"enabled": self.strip_enabled, "trials": self.strip_trials, "seed": self.strip_seed},
            "output":  {
                "format": self.output_format,
                "path": self.output_path,
                "include_timing": self.include_timing,
            },
            "runtime": {"parallelism": self.parallelism, "console_log": self.console_log},
        }

    def override(self, **values: Any) -> "RunConfig":
        """Apply CLI flags in place (None values are ignored) and revalidate."""
        for name, value in values.items():
            if value is None:
                continue
            if not hasattr(self, name):
                raise ConfigError(f"Unknown config attribute: {name!r}", details={"name": name})
            setattr(self, name, value)
        ConfigValidator.validate(self.to_dict())
        return self

    def __repr__(self) -> str:
        return (
            f"RunConfig(m_max={self.m_max}, "
            f"precision_bits={self.precision_bits}, "
            f"format={self.output_format!r}, "
            f"parallelism={self.parallelism})"
        )
