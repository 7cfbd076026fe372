import logging

from core.constants import EXIT_USAGE
from core.exceptions import EntropyError

logger = logging.getLogger(__name__)


def error_handler(error: Exception) -> int:
    if isinstance(error, (EntropyError, OSError)):
        logger.error("%s: %s", error.__class__.__name__, error)
        return EXIT_USAGE

    logger.exception("Exception while running a command:", exc_info=error)
    return EXIT_USAGE
