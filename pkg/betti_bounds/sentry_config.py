"""Sentry configuration and initialization module."""

import logging
from typing import Optional

from betti_bounds.config.sentry import SentryConfig

logger = logging.getLogger(__name__)


def initialize_sentry(
    sentry_config: SentryConfig,
    release: Optional[str] = None,
) -> bool:
    """Initialize Sentry SDK; returns whether reporting is active."""
    if not sentry_config.enabled:
        logger.info("Sentry DSN not provided - error tracking disabled")
        return False

    try:
        import sentry_sdk
        from sentry_sdk.integrations.logging import LoggingIntegration

        sentry_sdk.init(
            dsn=str(sentry_config.dsn),
            environment=sentry_config.environment,
            traces_sample_rate=sentry_config.traces_sample_rate,
            release=release,
            integrations=[
                LoggingIntegration(
                    level=logging.INFO,  # breadcrumbs
                    event_level=logging.ERROR,
                ),
            ],
            # Tables and command lines carry no personal data.
            send_default_pii=False,
        )

        logger.info(
            "Sentry initialized (environment: %s)", sentry_config.environment
        )
        return True

    except ImportError:
        logger.error("Sentry SDK not installed. Install with: pip install sentry-sdk")
    except Exception as e:
        logger.error("Failed to initialize Sentry: %s", e, exc_info=True)
    return False
