import logging
from dataclasses import dataclass, field
from typing import Optional

import eqschubert
from eqschubert.config import ComputeConfig
from eqschubert.coords import Coordinates, coordinates
from eqschubert.logging import capture_time, format_elapsed
from eqschubert.presentations.double_schubert import double_schubert_polynomial, required_sigma
from eqschubert.presentations.sigma import (
    InconsistentSystemError,
    SigmaTable,
    resolve_sigma_method,
    sigma_duality_violations,
    sigma_for,
)
from eqschubert.roots import CartanType, build_root_system
from eqschubert.store import current_store
from eqschubert.utils.fsspec_utils import write_text
from eqschubert.weyl import parse_element


logger = logging.getLogger(__name__)


@dataclass
class DoubleSchubertConfig:
    """Prints S_w followed by the sigma representatives it was built from, as comment lines."""

    type: str = "A2"
    w: str = "e"
    method: Optional[str] = None  # ls, linear-system or bgg; defaults to ls in type A, linear-system otherwise
    coords: str = "canonical"
    output: Optional[str] = None
    compute: ComputeConfig = field(default_factory=ComputeConfig)


def checked_sigma_lines(table: SigmaTable, coords: Coordinates):
    """Renders a sigma table and fails if it is not dual to the Schubert basis."""
    bad = sigma_duality_violations(table)
    if bad:
        pairs = ", ".join(f"({v}, {w})" for v, w in bad[:5])
        raise InconsistentSystemError(f"sigma table ({table.method}) fails duality at {pairs}")
    return [f"{v}: {coords.render(table[v])}" for v in table.elements]


def main(config: DoubleSchubertConfig) -> str:
    store = config.compute.initialize("double_schubert")
    rs = build_root_system(CartanType.parse(config.type))
    method = resolve_sigma_method(rs, config.method)
    coords = coordinates(rs, config.coords)
    w = parse_element(rs, config.w)

    with current_store(store), capture_time() as elapsed:
        schubert = double_schubert_polynomial(w, method)
        table = sigma_for(rs, required_sigma(w), method)
    logger.info(f"S_{w} ({len(schubert.rep.terms())} terms) in {format_elapsed(elapsed())}")

    lines = [coords.render(schubert.rep), f"# sigma ({method})"]
    lines.extend(f"# {line}" for line in checked_sigma_lines(table, coords))
    text = "\n".join(lines)
    write_text(text, config.output)
    return text


if __name__ == "__main__":
    eqschubert.config.main(main)()
