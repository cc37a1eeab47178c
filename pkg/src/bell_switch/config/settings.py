"""Root settings for the simulator."""

from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Literal

import yaml
from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)

from bell_switch.config.logging_config import LoggingConfig

DisplayFormat = Literal["rich", "plain", "none"]


class SimulatorSettings(BaseSettings):
    """Run-wide settings that do not belong to a single experiment.

    Configuration is loaded from multiple sources in priority order:
    1. Constructor arguments (highest priority)
    2. Environment variables (BELLSWITCH_ prefix)
    3. .env file
    4. bellswitch.toml file
    5. Default values (lowest priority)

    Environment variables use double underscore for nesting:
    - BELLSWITCH_LOGGING__LEVEL -> logging.level
    - BELLSWITCH_OUTPUT_DIR -> output_dir

    Attributes:
        logging: Logging configuration.
        output_dir: Default root directory for run artifacts.
        workers: Default worker processes for sweeps.
        display: Default terminal output format.
    """

    model_config = SettingsConfigDict(
        env_prefix="BELLSWITCH_",
        env_nested_delimiter="__",
        env_file=".env",
        env_file_encoding="utf-8",
        toml_file="bellswitch.toml",
        extra="ignore",
        validate_default=True,
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Add the TOML file between the dotenv file and secrets."""
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            TomlConfigSettingsSource(settings_cls),
            file_secret_settings,
        )

    logging: LoggingConfig = Field(
        default_factory=LoggingConfig,
        description="Logging configuration",
    )
    output_dir: Path = Field(
        default=Path("runs"),
        description="Default root directory for run artifacts",
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="Default worker processes for sweeps",
    )
    display: DisplayFormat = Field(
        default="rich",
        description="Default terminal output format",
    )

    @classmethod
    def from_file(cls, path: str | Path) -> SimulatorSettings:
        """Load settings from one TOML or YAML file.

        Keys in the file take precedence over the environment and
        ``bellswitch.toml``; missing keys fall back to those. ``.env`` is not
        read. In a ``pyproject.toml`` only the ``[tool.bell-switch]`` table is read.

        Raises:
            FileNotFoundError: If *path* is not a file.
            ValueError: If the suffix is not ``.toml``, ``.yaml`` or ``.yml``.
        """
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundError(f"Settings file not found: {path}")

        text = path.read_text(encoding="utf-8")
        match path.suffix.lower():
            case ".toml":
                data = tomllib.loads(text)
                if path.name == "pyproject.toml":
                    data = data.get("tool", {}).get("bell-switch", {})
            case ".yaml" | ".yml":
                data = yaml.safe_load(text) or {}
            case suffix:
                raise ValueError(f"Unsupported settings file format: {suffix or '<none>'}")
        return cls(_env_file=None, **data)
