from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from betti_bounds.config.sentry import SentryConfig
from betti_bounds.config.survey import SurveyConfig


class BettiConfig(BaseSettings):
    """Configuration for the betti-bounds command line tool.

    Loads configuration from:
    1. Environment variables (specific aliases only)
    2. .env file
    3. Defaults
    """

    debug: bool = Field(default=False, alias="DEBUG")
    threads: Optional[int] = Field(default=None, alias="BETTI_THREADS")
    survey: SurveyConfig = Field(default_factory=SurveyConfig)
    sentry: Optional[SentryConfig] = Field(default_factory=SentryConfig)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        # Env vars are read through field aliases only.
        env_nested_delimiter=None,
        case_sensitive=False,
        populate_by_name=True,
        extra="ignore",
    )

    @field_validator("threads")
    @classmethod
    def check_threads(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 1:
            raise ValueError("BETTI_THREADS must be at least 1")
        return v
