import contextlib
import logging as pylogging
import sys
import time
from pathlib import Path
from typing import List, Optional, Union

import humanfriendly


pylogger = pylogging.getLogger(__name__)


LOG_FORMAT = "%(asctime)s - %(name)s - %(filename)s:%(lineno)d - %(levelname)s :: %(message)s"
# ISO 8601, no TZ
DATE_FORMAT = "%Y-%m-%dT%H:%M:%S"


def init_logging(log_dir: Optional[Union[str, Path]], run_id: str, level: int = pylogging.INFO) -> None:
    """
    Initialize the root logger with a stderr handler and, if ``log_dir`` is given, a file handler writing to
    ``<log_dir>/<run_id>.log``. stdout is left alone: it carries command output.

    :param log_dir: directory for the log file, or None for stderr only
    :param run_id: base name of the log file
    :param level: Default logging level
    """
    handlers: List[pylogging.Handler] = [pylogging.StreamHandler(sys.stderr)]
    if log_dir is not None:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        handlers.insert(0, pylogging.FileHandler(log_dir / f"{run_id}.log", mode="a"))

    pylogging.basicConfig(level=level, format=LOG_FORMAT, datefmt=DATE_FORMAT, handlers=handlers, force=True)


def parse_level(name: str) -> int:
    level = pylogging.getLevelName(name.upper())
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level {name!r}")
    return level


@contextlib.contextmanager
def capture_time():
    """Yields a callable returning the seconds elapsed so far; it freezes when the block exits."""
    start = time.perf_counter()
    end: Optional[float] = None

    def fn():
        return (end if end is not None else time.perf_counter()) - start

    yield fn
    end = time.perf_counter()


def format_elapsed(seconds: float) -> str:
    return humanfriendly.format_timespan(seconds)
