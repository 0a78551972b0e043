import atexit
import dataclasses
import functools
import inspect
import logging
import os
import sys
import tempfile
import urllib.parse
from typing import List, Optional, Tuple

import draccus
import fsspec

from eqschubert.logging import init_logging, parse_level
from eqschubert.polynomial import set_fast_divided_difference
from eqschubert.store import DiskStoreConfig, Store, StoreConfig
from eqschubert.weyl import DEFAULT_MAX_ELEMENTS, set_limits


logger = logging.getLogger(__name__)


EXIT_USAGE = 2
EXIT_COMPUTATION = 3


DEFAULT_CONFIG_DIR = os.path.join(os.path.dirname(__file__), "config")

# short spellings rewritten to the dataclass field paths before parsing
ARG_ALIASES = {"--from": "--source", "--to": "--target", "--cache-dir": "--compute.store.cache_dir"}


@dataclasses.dataclass
class ComputeConfig:
    """Knobs shared by every command."""

    max_elements: int = DEFAULT_MAX_ELEMENTS  # cap on Weyl elements materialized by one bounded enumeration
    max_group_order: int = 2000  # largest |W| for computations that need the whole group
    fast_divided_difference: bool = True  # Borel divided differences through the power rule
    store: StoreConfig = dataclasses.field(default_factory=DiskStoreConfig)
    log_dir: Optional[str] = "logs"
    log_level: str = "INFO"

    def initialize(self, run_id: str) -> Store:
        """Sets up logging and the process-wide limits, and builds the store. Does not make it current."""
        init_logging(self.log_dir, run_id, parse_level(self.log_level))
        set_limits(max_elements=self.max_elements, max_group_order=self.max_group_order)
        set_fast_divided_difference(self.fast_divided_difference)
        return self.store.build()


def main(fn=None, *, args: Optional[List[str]] = None, config_dir: Optional[str] = DEFAULT_CONFIG_DIR):
    """
    Like draccus.wrap, but ``--config_path`` (or ``--config``) may be any fsspec url, and a bare name is also looked
    up in ``config_dir``. The flags in ARG_ALIASES stand for their targets. Failures become exit codes: 2 for bad
    input (parse errors, and ValueError or KeyError raised by the command), 3 for computation errors (ArithmeticError,
    RuntimeError).

    :param args: the args to parse. If None, will use sys.argv[1:]
    :param config_dir: extra directory searched for configs. If None, only the path as given is tried
    """
    if fn is None:
        return functools.partial(main, args=args, config_dir=config_dir)

    @functools.wraps(fn)
    def run(*fn_args, **fn_kwargs):
        cmdline = list(sys.argv[1:] if args is None else args)
        try:
            config_path, cmdline = _pop_config_path(expand_aliases(cmdline))
            if config_path is not None:
                config_path = _resolve_config_path(config_path, config_dir)
            config_type = next(iter(inspect.signature(fn).parameters.values())).annotation
            cfg = draccus.parse(config_class=config_type, config_path=config_path, args=cmdline)
        except SystemExit:
            raise
        except Exception as e:
            logger.error(f"Invalid arguments: {e}")
            raise SystemExit(EXIT_USAGE) from e

        try:
            return fn(cfg, *fn_args, **fn_kwargs)
        except (ValueError, KeyError) as e:
            logger.error(f"{type(e).__name__}: {e}")
            raise SystemExit(EXIT_USAGE) from e
        except (ArithmeticError, RuntimeError) as e:
            logger.error(f"Computation failed with {type(e).__name__}: {e}")
            raise SystemExit(EXIT_COMPUTATION) from e

    return run


def expand_aliases(cmdline: List[str]) -> List[str]:
    out = []
    for arg in cmdline:
        flag, eq, value = arg.partition("=")
        out.append(ARG_ALIASES[flag] + eq + value if flag in ARG_ALIASES else arg)
    return out


def _pop_config_path(cmdline: List[str]) -> Tuple[Optional[str], List[str]]:
    for flag in ("--config_path", "--config"):
        if flag in cmdline:
            i = cmdline.index(flag)
            if i + 1 >= len(cmdline):
                raise ValueError(f"{flag} needs a value")
            return cmdline[i + 1], cmdline[:i] + cmdline[i + 2 :]
    return None, cmdline


def _resolve_config_path(path: str, config_dir: Optional[str]) -> str:
    """Local file for ``path``: urls are fetched to a temp file, bare names are tried with yaml suffixes."""
    if urllib.parse.urlparse(path).scheme:
        fs, fs_path = fsspec.core.url_to_fs(path)
        local = tempfile.NamedTemporaryFile(prefix="config", suffix=".yaml", delete=False)
        local.close()
        atexit.register(os.unlink, local.name)
        fs.get(fs_path, local.name)
        return local.name

    candidates = [path, f"{path}.yaml", f"{path}.yml"]
    if config_dir is not None:
        candidates += [os.path.join(config_dir, c) for c in candidates]
    for candidate in candidates:
        if os.path.exists(candidate):
            return candidate
    # draccus reports the missing file
    return path
