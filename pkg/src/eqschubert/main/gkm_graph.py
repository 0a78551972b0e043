import logging
from dataclasses import dataclass, field
from typing import Optional

import eqschubert
from eqschubert.config import ComputeConfig
from eqschubert.roots import CartanType, build_root_system
from eqschubert.utils.fsspec_utils import write_text
from eqschubert.visualization import gkm_graph_dot


logger = logging.getLogger(__name__)


@dataclass
class GkmGraphConfig:
    type: str = "A2"
    cutoff: Optional[int] = None  # largest vertex length; the whole group if unset
    coords: str = "canonical"  # zA labels type A edges with t_j - t_i
    output: Optional[str] = None
    compute: ComputeConfig = field(default_factory=ComputeConfig)


def main(config: GkmGraphConfig) -> str:
    config.compute.initialize("gkm_graph")
    rs = build_root_system(CartanType.parse(config.type))
    if config.coords not in ("canonical", "zA"):
        raise ValueError(f"Edge labels support canonical or zA coordinates, got {config.coords!r}")
    if config.coords == "zA" and rs.cartan_type.family != "A":
        raise ValueError(f"zA coordinates are only defined in type A, not {rs.cartan_type}")
    cutoff = rs.num_positive_roots if config.cutoff is None else config.cutoff
    if cutoff < 0:
        raise ValueError(f"cutoff must be nonnegative, got {cutoff}")

    text = gkm_graph_dot(rs, cutoff, config.coords)
    write_text(text, config.output)
    return text


if __name__ == "__main__":
    eqschubert.config.main(main)()
