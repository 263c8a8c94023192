"""
Centralized logging for the TTP toolkit
"""
import logging
import logging.handlers
import os
import sys
from pathlib import Path
from typing import Dict, Optional

from shared.config.constants import ENV_LOG_DIR, ENV_LOG_LEVEL


class TTPLogger:
    """Unified logger for toolkit components"""

    _loggers: Dict[str, logging.Logger] = {}

    @classmethod
    def log_dir(cls) -> Optional[Path]:
        """Directory for log files, None when file logging is off"""
        value = os.getenv(ENV_LOG_DIR, "")
        return Path(value) if value else None

    @classmethod
    def default_level(cls) -> int:
        name = os.getenv(ENV_LOG_LEVEL, "INFO").upper()
        return getattr(logging, name, logging.INFO)

    @classmethod
    def setup_logger(
        cls,
        name: str,
        log_file: Optional[str] = None,
        level: Optional[int] = None
    ) -> logging.Logger:
        """Create and configure a logger instance"""
        if name in cls._loggers:
            return cls._loggers[name]

        if level is None:
            level = cls.default_level()

        logger = logging.getLogger(name)
        logger.setLevel(level)
        logger.propagate = False

        # Clear existing handlers
        logger.handlers.clear()

        detailed_formatter = logging.Formatter(
            '%(asctime)s [%(levelname)s] [%(name)s] %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        simple_formatter = logging.Formatter(
            '[%(levelname)s] %(message)s'
        )

        # Console handler on stderr; stdout carries CLI results
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(simple_formatter)
        logger.addHandler(console_handler)

        log_dir = cls.log_dir()
        if log_file and log_dir is not None:
            log_dir.mkdir(parents=True, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                log_dir / log_file,
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=5
            )
            file_handler.setLevel(level)
            file_handler.setFormatter(detailed_formatter)
            logger.addHandler(file_handler)

        cls._loggers[name] = logger
        return logger

    @classmethod
    def get_logger(cls, name: str, log_file: Optional[str] = None) -> logging.Logger:
        """Get existing or create new logger"""
        if name not in cls._loggers:
            return cls.setup_logger(name, log_file)
        return cls._loggers[name]

    @classmethod
    def set_level(cls, level: int) -> None:
        """Change the level of every registered logger"""
        for logger in cls._loggers.values():
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)


# Convenience function
def get_logger(name: str, log_file: Optional[str] = None) -> logging.Logger:
    """Get a logger instance"""
    return TTPLogger.get_logger(name, log_file)
