import logging
from dataclasses import dataclass, field
from typing import Optional

import eqschubert
from eqschubert.config import ComputeConfig
from eqschubert.coords import coordinates
from eqschubert.logging import capture_time, format_elapsed
from eqschubert.main.double_schubert import checked_sigma_lines
from eqschubert.presentations.double_schubert import required_sigma
from eqschubert.presentations.sigma import resolve_sigma_method, sigma_for
from eqschubert.roots import CartanType, build_root_system
from eqschubert.serialization import dump_schubert
from eqschubert.store import current_store
from eqschubert.structconst import (
    MULTIPLY_METHODS,
    LoggerStratumMonitor,
    RichStratumMonitor,
    StratumMonitor,
    check_graham_positivity,
    multiply,
    specialize_ordinary,
    to_record,
)
from eqschubert.utils.fsspec_utils import write_text
from eqschubert.weyl import parse_element


logger = logging.getLogger(__name__)


@dataclass
class MultiplyConfig:
    """Expands X_u X_v in the Schubert basis."""

    type: str = "A2"
    u: str = "e"
    v: str = "e"
    method: str = "gkm"  # gkm | borel | both | oracle
    sigma: Optional[str] = None  # sigma representatives for the borel method; ls in type A, linear-system otherwise
    coords: str = "canonical"
    alpha: bool = False  # render coefficients in the simple roots a1..an
    format: str = "text"  # text | json
    progress: bool = False  # rich progress bar on stderr instead of log lines
    output: Optional[str] = None
    compute: ComputeConfig = field(default_factory=ComputeConfig)


def _monitor(config: MultiplyConfig) -> StratumMonitor:
    if config.progress:
        return RichStratumMonitor()
    return LoggerStratumMonitor(logger)


def main(config: MultiplyConfig) -> str:
    store = config.compute.initialize("multiply")
    if config.method not in MULTIPLY_METHODS:
        raise ValueError(f"Unknown method {config.method!r}; expected one of {MULTIPLY_METHODS}")
    if config.format not in ("text", "json"):
        raise ValueError(f"Unknown format {config.format!r}; expected 'text' or 'json'")
    rs = build_root_system(CartanType.parse(config.type))
    sigma_method = resolve_sigma_method(rs, config.sigma)
    coords = coordinates(rs, "alpha" if config.alpha else config.coords)
    u = parse_element(rs, config.u)
    v = parse_element(rs, config.v)

    with current_store(store), capture_time() as elapsed:
        if config.method in ("borel", "both"):
            for w in (u, v):
                table = sigma_for(rs, required_sigma(w), sigma_method)
                for line in checked_sigma_lines(table, coordinates(rs, "alpha")):
                    logger.info(f"sigma for S_{w}: {line}")
        result = multiply(u, v, config.method, sigma_method, _monitor(config))
    logger.info(f"X_{u} X_{v} on {rs.cartan_type} via {config.method} in {format_elapsed(elapsed())}")

    graham = check_graham_positivity(result)
    if graham.ok:
        logger.info("All coefficients are nonnegative in the simple roots")
    ordinary = specialize_ordinary(result)
    logger.info(f"Ordinary product: {', '.join(f'{c} X_{w}' for w, c in ordinary.items()) or '0'}")

    if config.format == "json":
        text = to_record(result, coords).to_json()
    else:
        text = dump_schubert(result.expansion, coords)
    write_text(text, config.output)
    return text


if __name__ == "__main__":
    eqschubert.config.main(main)()
