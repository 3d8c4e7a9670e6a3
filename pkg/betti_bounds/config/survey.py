from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SurveyConfig(BaseSettings):
    """Defaults for the randomized theorem survey."""

    default_trials: int = Field(100, alias="BETTI_SURVEY_TRIALS")
    default_seed: int = Field(0, alias="BETTI_SURVEY_SEED")
    max_terms: int = Field(5, alias="BETTI_SURVEY_MAX_TERMS")
    max_coefficient: int = Field(100, alias="BETTI_SURVEY_MAX_COEFFICIENT")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        populate_by_name=True,
        extra="ignore",
    )

    @model_validator(mode="after")
    def check_positive(self) -> "SurveyConfig":
        for name in ("default_trials", "max_terms", "max_coefficient"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.default_seed < 0:
            raise ValueError("default_seed must be nonnegative")
        return self
