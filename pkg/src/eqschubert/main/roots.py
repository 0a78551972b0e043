import logging
from dataclasses import dataclass, field
from typing import Optional

import eqschubert
from eqschubert.config import ComputeConfig
from eqschubert.roots import CartanType, build_root_system, fundamental_weight
from eqschubert.utils.fsspec_utils import write_text


logger = logging.getLogger(__name__)


@dataclass
class RootsConfig:
    type: str = "A2"
    output: Optional[str] = None
    compute: ComputeConfig = field(default_factory=ComputeConfig)


def describe_root_system(type_text: str) -> str:
    """Cartan matrix, fundamental weights and positive roots, all in the simple-root basis."""
    ct = CartanType.parse(type_text)
    rs = build_root_system(ct)
    lines = [f"type: {ct}", f"rank: {rs.n}", f"weyl group order: {ct.weyl_group_order}", "cartan matrix:"]
    for row in rs.cartan_matrix:
        lines.append("  " + " ".join(f"{c:>2}" for c in row))
    lines.append("fundamental weights:")
    for i in range(1, rs.n + 1):
        lines.append(f"  w{i} = {fundamental_weight(rs, i).to_text()}")
    lines.append(f"positive roots ({rs.num_positive_roots}):")
    for beta in rs.positive_roots:
        lines.append(f"  {beta.to_text()}")
    return "\n".join(lines)


def main(config: RootsConfig) -> str:
    config.compute.initialize("roots")
    text = describe_root_system(config.type)
    write_text(text, config.output)
    return text


if __name__ == "__main__":
    eqschubert.config.main(main)()
