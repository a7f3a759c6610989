"""Bourbaki Degree Core Configuration Module."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings loaded from BOURBAKI_* environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="BOURBAKI_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_env: Literal["development", "ci", "production"] = "development"
    debug: bool = False
    log_level: str = "WARNING"

    # Arithmetic
    field: str = "QQ"
    prime: int = 32003
    secondary_prime: int = 31991

    # Engine
    max_shift: int = Field(default=64, ge=1)
    oracle_max_degree: int = Field(default=8, ge=0)

    # Workers
    threads: int = Field(default=4, ge=1)

    # Property suites
    seed: int = 20240611
    samples: int = Field(default=100, ge=0)
    negative_samples: int = Field(default=50, ge=0)
    pencil_samples: int = Field(default=20, ge=0)

    # Catalog parameters
    kw_lambda: int = 2
    kw_mu: int = 3
    kw_rho: int = 5

    # Metrics
    metrics_port: int | None = None
    metrics_textfile: str | None = None

    @property
    def is_production(self) -> bool:
        """Check if structured (JSON) log output is wanted."""
        return self.app_env in ("ci", "production")


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
