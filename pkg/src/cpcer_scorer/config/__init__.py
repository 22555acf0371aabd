"""Configuration module."""

from .settings import DEFAULT_CONFIG_FILE, ScoringSettings, get_settings

__all__ = [
    "DEFAULT_CONFIG_FILE",
    "ScoringSettings",
    "get_settings"
]
