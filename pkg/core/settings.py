"""Settings - Single Authority for Runtime Configuration

Modules read from here and never decide policy.

RESPONSIBILITY:
- Load config/settings.yaml
- Provide get() singleton
- Expose typed, immutable config sections

DOES NOT:
- Validate domain inputs (core modules do that)
- Know about tools or the CLI
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import yaml


@dataclass(frozen=True)
class OracleSettings:
    """Immutable primality-oracle configuration."""
    sieve_cap: int


@dataclass(frozen=True)
class PlotSettings:
    """Immutable figure defaults."""
    width_px: int
    height_px: int
    cell_px: int
    point_radius_px: float
    thick_stroke_px: float
    thick_color: str
    thin_stroke_px: float
    thin_color: str
    prime_color: str


@dataclass(frozen=True)
class SpectrumSettings:
    """Immutable chaoticity-proxy configuration."""
    parseval_tolerance: float
    default_count: int
    default_max_period: int


@dataclass(frozen=True)
class CliSettings:
    """Immutable command-line defaults."""
    log_level: str
    default_verify_max: int
    default_bench_limit: int


class Settings:
    """Singleton configuration authority.

    Usage:
        settings = Settings.get()
        cap = settings.oracle.sieve_cap
    """

    _instance: Optional["Settings"] = None

    # Defaults (used if yaml missing or invalid)
    DEFAULTS: Dict[str, Dict[str, Any]] = {
        "oracle": {
            "sieve_cap": 1_000_000_000,
        },
        "plot": {
            "width_px": 800,
            "height_px": 800,
            "cell_px": 24,
            "point_radius_px": 1.2,
            "thick_stroke_px": 1.6,
            "thick_color": "#1f3a93",
            "thin_stroke_px": 0.6,
            "thin_color": "#b0b0b0",
            "prime_color": "#c0392b",
        },
        "spectrum": {
            "parseval_tolerance": 1e-9,
            "default_count": 4096,
            "default_max_period": 512,
        },
        "cli": {
            "log_level": "WARNING",
            "default_verify_max": 1_000_000,
            "default_bench_limit": 10_000_000,
        },
    }

    CONFIG_PATH = Path(__file__).parent.parent / "config" / "settings.yaml"

    def __init__(self, config_path: Optional[Path] = None):
        """Private constructor. Use Settings.get() instead."""
        self._config_path = config_path or self.CONFIG_PATH
        self._load()

    @classmethod
    def get(cls) -> "Settings":
        """Get singleton instance."""
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """Reset singleton (for testing)."""
        cls._instance = None

    def _load(self) -> None:
        """Load configuration from settings.yaml and merge over DEFAULTS."""
        raw_config: Dict[str, Any] = {}

        if self._config_path.exists():
            try:
                with open(self._config_path, encoding="utf-8") as f:
                    raw_config = yaml.safe_load(f) or {}
                if not isinstance(raw_config, dict):
                    raise ValueError("top level must be a mapping")
                logging.info(f"Loaded settings from {self._config_path}")
            except Exception as e:
                logging.warning(f"Failed to load {self._config_path.name}: {e}, using defaults")
                raw_config = {}
        else:
            logging.info(f"No settings.yaml found at {self._config_path}, using defaults")

        merged = {
            section: {**defaults, **(raw_config.get(section) or {})}
            for section, defaults in self.DEFAULTS.items()
        }

        self.oracle = OracleSettings(sieve_cap=int(merged["oracle"]["sieve_cap"]))
        self.plot = PlotSettings(
            width_px=int(merged["plot"]["width_px"]),
            height_px=int(merged["plot"]["height_px"]),
            cell_px=int(merged["plot"]["cell_px"]),
            point_radius_px=float(merged["plot"]["point_radius_px"]),
            thick_stroke_px=float(merged["plot"]["thick_stroke_px"]),
            thick_color=str(merged["plot"]["thick_color"]),
            thin_stroke_px=float(merged["plot"]["thin_stroke_px"]),
            thin_color=str(merged["plot"]["thin_color"]),
            prime_color=str(merged["plot"]["prime_color"]),
        )
        self.spectrum = SpectrumSettings(
            parseval_tolerance=float(merged["spectrum"]["parseval_tolerance"]),
            default_count=int(merged["spectrum"]["default_count"]),
            default_max_period=int(merged["spectrum"]["default_max_period"]),
        )
        self.cli = CliSettings(
            log_level=str(merged["cli"]["log_level"]).upper(),
            default_verify_max=int(merged["cli"]["default_verify_max"]),
            default_bench_limit=int(merged["cli"]["default_bench_limit"]),
        )

        logging.debug(f"Settings: {self.oracle}, {self.plot}, {self.spectrum}, {self.cli}")

    def reload(self) -> None:
        """Force reload configuration (for testing)."""
        self._load()
