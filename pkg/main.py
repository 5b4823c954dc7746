"""Main entry point for the diffchow command line"""
import logging
import sys

from src.cli import EXIT_DOMAIN_ERROR, emit, run
from src.config import Config
from src.errors import ConfigError

logger = logging.getLogger(__name__)


def main() -> int:
    try:
        config = Config.from_env()
    except ConfigError as e:
        logging.basicConfig(format='%(asctime)s - %(name)s - %(levelname)s - %(message)s', stream=sys.stderr)
        logger.error(f"Configuration error: {e}")
        emit(e.to_dict())
        return EXIT_DOMAIN_ERROR

    # Logs go to stderr; stdout carries only the JSON result
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=getattr(logging, config.log_level, logging.WARNING),
        stream=sys.stderr,
    )
    return run(sys.argv[1:], config)


if __name__ == "__main__":
    sys.exit(main())
