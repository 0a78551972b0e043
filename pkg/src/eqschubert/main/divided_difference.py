import logging
from dataclasses import dataclass, field
from typing import Optional

import eqschubert
from eqschubert.config import ComputeConfig
from eqschubert.coords import coordinates
from eqschubert.presentations.convert import PRESENTATIONS, dd_word
from eqschubert.roots import CartanType, build_root_system, check_index
from eqschubert.serialization import dump_class, load_class
from eqschubert.store import current_store
from eqschubert.utils.fsspec_utils import read_input, write_text
from eqschubert.weyl import Word


logger = logging.getLogger(__name__)


@dataclass
class DividedDifferenceConfig:
    """Applies Delta_{i_1} ... Delta_{i_l} to a class; the last letter of the word acts first."""

    type: str = "A2"
    presentation: str = "borel"
    word: str = "e"
    input: Optional[str] = None
    expr: Optional[str] = None
    coords: str = "canonical"
    output: Optional[str] = None
    compute: ComputeConfig = field(default_factory=ComputeConfig)


def main(config: DividedDifferenceConfig) -> str:
    store = config.compute.initialize("divided_difference")
    if config.presentation not in PRESENTATIONS:
        raise ValueError(f"Unknown presentation {config.presentation!r}; expected one of {PRESENTATIONS}")
    rs = build_root_system(CartanType.parse(config.type))
    coords = coordinates(rs, config.coords)
    word = Word.parse(config.word)
    for i in word:
        check_index(rs, i)
    cls = load_class(rs, config.presentation, read_input(config.input, config.expr), coords)

    with current_store(store):
        out = dd_word(cls, word)

    text = dump_class(out, coords)
    write_text(text, config.output)
    return text


if __name__ == "__main__":
    eqschubert.config.main(main)()
