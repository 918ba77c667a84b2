import logging
from typing import Optional

from adaptive_heaps.core.config import settings


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging for command-line entry points.

    Library modules only create loggers; handlers are installed here.
    """
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format=settings.LOG_FORMAT,
        handlers=[logging.StreamHandler()],
        force=True,
    )
