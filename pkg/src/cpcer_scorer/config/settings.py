"""Configuration settings."""

import logging
import os
from pathlib import Path
from typing import Any, Optional, Tuple, Type, Union

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)

from ..models import Algorithm, ConfigError, InputFormat, NormalizationConfig, ReportFormat

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = "cpcer.toml"


class ScoringSettings(BaseSettings):
    """Scoring settings.

    Values come from keyword arguments first, then the TOML config file, then
    the defaults below. Environment variables are deliberately not a source.
    """

    input_format: InputFormat = InputFormat.TSV
    report_format: ReportFormat = ReportFormat.PRETTY
    algorithm: Algorithm = Algorithm.HUNGARIAN
    normalization: NormalizationConfig = Field(default_factory=NormalizationConfig)
    per_session: bool = False
    group_by_speakers: bool = True
    jobs: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(toml_file=DEFAULT_CONFIG_FILE, extra="ignore")

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"):
            raise ValueError(f"unknown log level {value!r}")
        return level

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings, TomlConfigSettingsSource(settings_cls))


def get_settings(
    config_file: Optional[Union[str, Path]] = None, **overrides: Any
) -> ScoringSettings:
    """Get scoring settings.

    ``None`` overrides are ignored so that file and default values apply;
    nested ``normalization`` overrides are merged key by key.
    """
    settings_cls: Type[ScoringSettings] = ScoringSettings
    if config_file is not None:
        path = Path(config_file)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")

        class _FileSettings(ScoringSettings):
            model_config = SettingsConfigDict(toml_file=path)

        settings_cls = _FileSettings

    kwargs = {k: v for k, v in overrides.items() if v is not None}
    if isinstance(kwargs.get("normalization"), dict):
        kwargs["normalization"] = {
            k: v for k, v in kwargs["normalization"].items() if v is not None
        }
        if not kwargs["normalization"]:
            del kwargs["normalization"]

    try:
        loaded = settings_cls(**kwargs)
    except ValidationError as e:
        raise ConfigError(f"invalid settings: {e}") from e
    except (OSError, ValueError) as e:
        # tomllib.TOMLDecodeError is a ValueError
        raise ConfigError(f"cannot read config file: {e}") from e

    logger.debug(f"Loaded settings: {loaded.model_dump()}")
    # Detach from the per-file subclass so the settings pickle cleanly.
    return ScoringSettings.model_construct(**dict(loaded))
