"""Configuration manager for knotfloer."""

from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..constants import (
    CONFIG_DIR,
    CONFIG_FILE_NAME,
    DEFAULT_ALLOW_NON_KNOT,
    DEFAULT_CSV_STEP,
    DEFAULT_DENOMINATOR_BOUND,
    DEFAULT_ENABLE_DEBUG,
    DEFAULT_RANDOM_SEED,
    DEFAULT_RANDOM_TRIALS,
    DEFAULT_WORKERS,
)
from ..utils.errors import DomainError
from ..utils.helpers import format_rational, parse_rational, safe_file_write
from ..utils.logging import logger
from .templates import CONFIG_TEMPLATE


@dataclass(frozen=True)
class Settings:
    """Validated configuration values."""

    enable_debug: bool = DEFAULT_ENABLE_DEBUG
    denominator_bound: Optional[int] = DEFAULT_DENOMINATOR_BOUND
    allow_non_knot: bool = DEFAULT_ALLOW_NON_KNOT
    workers: int = DEFAULT_WORKERS
    csv_step: Fraction = parse_rational(DEFAULT_CSV_STEP)
    random_seed: int = DEFAULT_RANDOM_SEED
    random_trials: int = DEFAULT_RANDOM_TRIALS


class ConfigManager:
    """Loads and validates the optional knotfloer configuration file."""

    def __init__(self, config_dir: Optional[Path] = None):
        """Initialize the configuration manager.

        Args:
            config_dir: Custom configuration directory path
        """
        self.config_dir = config_dir or CONFIG_DIR
        self.config_file = self.config_dir / CONFIG_FILE_NAME
        self._settings: Optional[Settings] = None

    def initialize(self) -> Settings:
        """Load the configuration file, or fall back to the defaults if it is absent."""
        self._settings = self._load_config()
        return self._settings

    def write_template(self, overwrite: bool = False) -> bool:
        """Write the commented configuration template.

        Returns:
            True if the file was written
        """
        if self.config_file.exists() and not overwrite:
            logger.warning(f"{self.config_file} already exists; leaving it untouched.")
            return False
        try:
            self.config_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.error(f"Could not create {self.config_dir}: {e}")
            return False
        return safe_file_write(self.config_file, CONFIG_TEMPLATE, "config template")

    def _load_config(self) -> Settings:
        """Load and validate the configuration file."""
        if not self.config_file.exists():
            logger.debug(f"No configuration file at {self.config_file}; using defaults")
            return Settings()

        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                config_data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise DomainError(f"Error parsing YAML file {self.config_file}: {e}") from e
        except OSError as e:
            raise DomainError(f"Could not read {self.config_file}: {e}") from e

        if config_data is None:
            config_data = {}
        if not isinstance(config_data, dict):
            raise DomainError(f"{self.config_file} is not a valid YAML dictionary.")

        upsilon = self._section(config_data, "upsilon")
        output = self._section(config_data, "output")
        verify = self._section(config_data, "verify")

        settings = Settings(
            enable_debug=self._bool(config_data, "enable_debug", DEFAULT_ENABLE_DEBUG),
            denominator_bound=self._positive_int(
                upsilon, "denominator_bound", DEFAULT_DENOMINATOR_BOUND, "upsilon.", allow_none=True
            ),
            allow_non_knot=self._bool(upsilon, "allow_non_knot", DEFAULT_ALLOW_NON_KNOT),
            workers=self._positive_int(upsilon, "workers", DEFAULT_WORKERS, "upsilon."),
            csv_step=self._positive_rational(output.get("csv_step", DEFAULT_CSV_STEP)),
            random_seed=self._int(verify, "random_seed", DEFAULT_RANDOM_SEED, "verify."),
            random_trials=self._positive_int(
                verify, "random_trials", DEFAULT_RANDOM_TRIALS, "verify."
            ),
        )
        logger.debug(f"Configuration loaded successfully from {self.config_file}")
        return settings

    def _section(self, config_data: Dict[str, Any], name: str) -> Dict[str, Any]:
        section = config_data.get(name) or {}
        if not isinstance(section, dict):
            raise DomainError(f"'{name}' in {self.config_file} must be a mapping.")
        return section

    def _bool(self, section: Dict[str, Any], key: str, default: bool) -> bool:
        value = section.get(key, default)
        if not isinstance(value, bool):
            logger.warning(
                f"{key} in {self.config_file} must be true/false. Defaulting to {str(default).lower()}."
            )
            return default
        return value

    def _int(self, section: Dict[str, Any], key: str, default: int, prefix: str = "") -> int:
        value = section.get(key, default)
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"{prefix}{key} ('{value}') in {self.config_file} must be an integer.")
        return value

    def _positive_int(
        self,
        section: Dict[str, Any],
        key: str,
        default: Optional[int],
        prefix: str = "",
        allow_none: bool = False,
    ) -> Optional[int]:
        value = section.get(key, default)
        if value is None and allow_none:
            return None
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise DomainError(
                f"{prefix}{key} ('{value}') in {self.config_file} must be a positive integer."
            )
        return value

    def _positive_rational(self, value: Any) -> Fraction:
        step = parse_rational(str(value))
        if step <= 0:
            raise DomainError(
                f"output.csv_step ('{value}') in {self.config_file} must be a positive rational."
            )
        return step

    @property
    def settings(self) -> Settings:
        """Get the current settings."""
        if self._settings is None:
            raise RuntimeError("Configuration not loaded. Call initialize() first.")
        return self._settings

    def is_initialized(self) -> bool:
        """Check if the configuration has been initialized."""
        return self._settings is not None

    def summary(self) -> str:
        """Settings in effect, one `key: value` line each."""
        lines = [f"config_file: {self.config_file} ({'present' if self.config_file.exists() else 'absent'})"]
        for key, value in asdict(self.settings).items():
            if isinstance(value, Fraction):
                value = format_rational(value)
            elif value is None:
                value = "default"
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


def create_config_manager(config_dir: Optional[Path] = None) -> ConfigManager:
    """Create and initialize a configuration manager.

    Args:
        config_dir: Custom configuration directory path

    Returns:
        Initialized ConfigManager instance
    """
    manager = ConfigManager(config_dir)
    manager.initialize()
    return manager
