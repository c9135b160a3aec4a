"""Configuration management for gradedSpectrumWorkbench."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import AliasChoices, AliasPath, Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict
from pydantic_settings.sources import YamlConfigSettingsSource

from src.algebra.limits import DEFAULT_AXIOM_SCAN_SIZE, DEFAULT_MAX_MODULE_SIZE, DEFAULT_MAX_RING_SIZE, SizeLimits
from src.topology.subsets import DEFAULT_EXHAUSTIVE_LIMIT, DEFAULT_SAMPLE_COUNT

CONFIG_PATH_ENV = "GRADED_SPECTRUM_CONFIG_PATH"
DEFAULT_CONFIG_PATH = Path("config/config.yaml")

SettingsSource = PydanticBaseSettingsSource
OutputFormat = Literal["text", "machine"]


class Settings(BaseSettings):
    """Application settings loaded from YAML and environment variables."""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        env_prefix="",
        env_file=".env",
        extra="ignore",
    )

    max_ring_size: int = Field(
        default=DEFAULT_MAX_RING_SIZE,
        ge=1,
        validation_alias=AliasChoices(
            "GRADED_MAX_RING_SIZE",
            AliasPath("limits", "max_ring_size"),
        ),
    )
    max_module_size: int = Field(
        default=DEFAULT_MAX_MODULE_SIZE,
        ge=1,
        validation_alias=AliasChoices(
            "GRADED_MAX_MODULE_SIZE",
            AliasPath("limits", "max_module_size"),
        ),
    )
    axiom_scan_size: int = Field(
        default=DEFAULT_AXIOM_SCAN_SIZE,
        ge=1,
        validation_alias=AliasChoices(
            "GRADED_AXIOM_SCAN_SIZE",
            AliasPath("limits", "axiom_scan_size"),
        ),
    )
    oracle_max_size: int = Field(
        default=64,
        ge=1,
        validation_alias=AliasChoices(
            "GRADED_ORACLE_MAX_SIZE",
            AliasPath("limits", "oracle_max_size"),
        ),
    )
    subset_oracle_max_size: int = Field(
        default=16,
        ge=1,
        validation_alias=AliasChoices(
            "GRADED_SUBSET_ORACLE_MAX_SIZE",
            AliasPath("limits", "subset_oracle_max_size"),
        ),
    )

    exhaustive_limit: int = Field(
        default=DEFAULT_EXHAUSTIVE_LIMIT,
        ge=1,
        validation_alias=AliasChoices(
            "GRADED_EXHAUSTIVE_LIMIT",
            AliasPath("sampling", "exhaustive_limit"),
        ),
    )
    sample_count: int = Field(
        default=DEFAULT_SAMPLE_COUNT,
        ge=1,
        validation_alias=AliasChoices(
            "GRADED_SAMPLE_COUNT",
            AliasPath("sampling", "sample_count"),
        ),
    )
    seed: int = Field(
        default=0,
        validation_alias=AliasChoices(
            "GRADED_SEED",
            AliasPath("sampling", "seed"),
        ),
    )

    output_format: OutputFormat = Field(
        default="text",
        validation_alias=AliasChoices(
            "GRADED_OUTPUT_FORMAT",
            AliasPath("output", "format"),
        ),
    )
    catalog_extra_dir: Optional[Path] = Field(
        default=None,
        validation_alias=AliasChoices(
            "GRADED_CATALOG_DIR",
            AliasPath("catalog", "extra_dir"),
        ),
    )

    def size_limits(self) -> SizeLimits:
        return SizeLimits(max_ring_size=self.max_ring_size, max_module_size=self.max_module_size)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: SettingsSource,
        env_settings: SettingsSource,
        dotenv_settings: SettingsSource,
        file_secret_settings: SettingsSource,
    ) -> tuple[SettingsSource, ...]:
        config_path = Path(os.getenv(CONFIG_PATH_ENV, str(DEFAULT_CONFIG_PATH)))
        yaml_settings = YamlConfigSettingsSource(settings_cls, yaml_file=config_path)
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            yaml_settings,
            file_secret_settings,
        )


def load_settings() -> Settings:
    """Convenience wrapper for loading settings."""
    return Settings()
