import logging
from dataclasses import dataclass, field
from typing import Optional

import eqschubert
from eqschubert.config import ComputeConfig
from eqschubert.coords import coordinates
from eqschubert.logging import capture_time, format_elapsed
from eqschubert.presentations.localization import localize
from eqschubert.roots import CartanType, build_root_system
from eqschubert.store import current_store
from eqschubert.utils.fsspec_utils import write_text
from eqschubert.weyl import parse_element


logger = logging.getLogger(__name__)


@dataclass
class LocalizeConfig:
    """Prints i*_v(X_w)."""

    type: str = "A2"
    w: str = "e"
    v: str = "e"
    coords: str = "canonical"
    output: Optional[str] = None
    compute: ComputeConfig = field(default_factory=ComputeConfig)


def main(config: LocalizeConfig) -> str:
    store = config.compute.initialize("localize")
    rs = build_root_system(CartanType.parse(config.type))
    coords = coordinates(rs, config.coords)
    w = parse_element(rs, config.w)
    v = parse_element(rs, config.v)

    with current_store(store), capture_time() as elapsed:
        value = localize(w, v)
    logger.info(f"i*_{v}(X_{w}) in {format_elapsed(elapsed())}")

    text = coords.render(value)
    write_text(text, config.output)
    return text


if __name__ == "__main__":
    eqschubert.config.main(main)()
