import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

CONSOLE_LEVELS = {0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}


# logging.py
def setup_logger(log_dir: Optional[Path] = None, verbosity: Optional[int] = None) -> logging.Logger:
    """Set up the package logger.

    Modules call this without arguments at import time; the command line calls it
    again with a verbosity, which resets the console level, and a log directory,
    which adds the debug file once.
    """
    logger = logging.getLogger("matroidpairs")
    if not logger.level:
        logger.setLevel(logging.INFO)

    console_handler = next(
        (
            h
            for h in logger.handlers
            if isinstance(h, logging.StreamHandler) and not isinstance(h, logging.FileHandler)
        ),
        None,
    )
    if console_handler is None:
        console_handler = logging.StreamHandler()
        console_handler.setLevel(logging.INFO)
        console_handler.setFormatter(logging.Formatter(
            '%(levelname)s: %(message)s'
        ))
        logger.addHandler(console_handler)
    if verbosity is not None:
        level = CONSOLE_LEVELS[min(max(verbosity, 0), 2)]
        console_handler.setLevel(level)
        logger.setLevel(min(level, logging.INFO))

    if log_dir is not None and not any(isinstance(h, logging.FileHandler) for h in logger.handlers):
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        # Debug file handler
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        debug_handler = logging.FileHandler(
            log_dir / f"debug_{timestamp}.log"
        )
        debug_handler.setLevel(logging.DEBUG)
        debug_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        ))
        logger.addHandler(debug_handler)
    if any(isinstance(h, logging.FileHandler) for h in logger.handlers):
        logger.setLevel(logging.DEBUG)

    return logger
