from betti_bounds.config.main import BettiConfig
from betti_bounds.config.parser import load_config
from betti_bounds.config.sentry import SentryConfig
from betti_bounds.config.survey import SurveyConfig

__all__ = [
    "BettiConfig",
    "load_config",
    "SentryConfig",
    "SurveyConfig",
]
