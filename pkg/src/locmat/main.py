import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from locmat.cli import run
from locmat.constants import ENV_LOG_LEVEL, LOG_DIR_NAME, LOG_FILE_NAME


def configure_logging(level: int = logging.WARNING) -> None:
    log_dir = Path.home() / LOG_DIR_NAME
    log_dir.mkdir(parents=True, exist_ok=True)
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s:%(funcName)s(): %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=[
            logging.FileHandler(log_dir / LOG_FILE_NAME, encoding="utf-8"),  # log file
            logging.StreamHandler(),  # stderr; stdout carries results only
        ],
    )


def resolve_log_level(argv: List[str]) -> int:
    """--verbose wins, then LOCMAT_LOG_LEVEL, then WARNING."""
    if "-v" in argv or "--verbose" in argv:
        return logging.DEBUG
    name = os.environ.get(ENV_LOG_LEVEL, "WARNING").upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    configure_logging(resolve_log_level(argv))
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
