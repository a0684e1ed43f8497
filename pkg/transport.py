import logging
import sys
from logging.handlers import RotatingFileHandler
sys.path.insert(0, '.')

from config import LOG_FILE, LOG_LEVEL

# Console on stderr keeps stdout for command results
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        # Console handler
        logging.StreamHandler(),
        # File handler with rotation (10MB max, keep 5 backups)
        RotatingFileHandler(LOG_FILE, maxBytes=10*1024*1024, backupCount=5)
    ]
)

logger = logging.getLogger(__name__)

from cli import run


def main() -> int:
    exit_code = run(sys.argv[1:])
    logger.debug(f"transport exited with code {exit_code}")
    return exit_code


if __name__ == '__main__':
    sys.exit(main())
