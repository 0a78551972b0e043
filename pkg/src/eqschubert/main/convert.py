import logging
from dataclasses import dataclass, field
from typing import Optional

import eqschubert
from eqschubert.config import ComputeConfig
from eqschubert.coords import coordinates
from eqschubert.logging import capture_time, format_elapsed
from eqschubert.presentations.convert import PRESENTATIONS, convert
from eqschubert.presentations.sigma import resolve_sigma_method
from eqschubert.roots import CartanType, build_root_system
from eqschubert.serialization import dump_class, load_class
from eqschubert.store import current_store
from eqschubert.utils.fsspec_utils import read_input, write_text


logger = logging.getLogger(__name__)


@dataclass
class ConvertConfig:
    """Converts a class between the schubert, gkm and borel presentations."""

    type: str = "A2"
    source: str = "borel"
    target: str = "gkm"
    input: Optional[str] = None  # path or url of the class; standard input if neither this nor expr is set
    expr: Optional[str] = None  # the class inline, with ';' between lines
    cutoff: Optional[int] = None  # largest vertex length of gkm output; the whole group if unset
    coords: str = "canonical"
    method: Optional[str] = None  # sigma representatives for a borel target; ls in type A, linear-system otherwise
    output: Optional[str] = None
    compute: ComputeConfig = field(default_factory=ComputeConfig)


def main(config: ConvertConfig) -> str:
    store = config.compute.initialize("convert")
    for name, value in (("source", config.source), ("target", config.target)):
        if value not in PRESENTATIONS:
            raise ValueError(f"Unknown {name} presentation {value!r}; expected one of {PRESENTATIONS}")
    rs = build_root_system(CartanType.parse(config.type))
    method = resolve_sigma_method(rs, config.method)
    coords = coordinates(rs, config.coords)
    cls = load_class(rs, config.source, read_input(config.input, config.expr), coords)

    with current_store(store), capture_time() as elapsed:
        out = convert(cls, config.target, cutoff=config.cutoff, method=method)
    logger.info(f"{config.source} -> {config.target} on {rs.cartan_type} in {format_elapsed(elapsed())}")

    text = dump_class(out, coords)
    write_text(text, config.output)
    return text


if __name__ == "__main__":
    eqschubert.config.main(main)()
