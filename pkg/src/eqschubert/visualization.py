from typing import List

from eqschubert.presentations.gkm import gkm_graph_edges, vertex_set
from eqschubert.roots import RootSystem, Weight
from eqschubert.weyl import WeylElement, one_line_text


def _root_label(rs: RootSystem, beta: Weight, coords: str) -> str:
    if coords == "zA" and rs.cartan_type.family == "A":
        # alpha_i + ... + alpha_{j-1} is t_j - t_i
        support = [k for k, c in enumerate(beta.coords) if c]
        return f"t{support[-1] + 2}-t{support[0] + 1}"
    return beta.to_text()


def _vertex_label(w: WeylElement) -> str:
    if w.rs.cartan_type.family == "A":
        return f"{w}\\n{one_line_text(w)}"
    return str(w)


def gkm_graph_dot(rs: RootSystem, cutoff: int, coords: str = "canonical") -> str:
    """
    The GKM graph on the vertices of length <= cutoff as undirected DOT. Vertices are named by reduced word (type A
    labels add one-line notation), and each edge v -- s_beta v carries its positive root beta.
    """
    lines: List[str] = [f"graph gkm_{rs.cartan_type} {{", '    node [shape=box, fontname="Helvetica"];']
    for w in vertex_set(rs, cutoff):
        lines.append(f'    "{w}" [label="{_vertex_label(w)}"];')
    for edge in gkm_graph_edges(rs, cutoff):
        lines.append(f'    "{edge.source}" -- "{edge.target}" [label="{_root_label(rs, edge.root, coords)}"];')
    lines.append("}")
    return "\n".join(lines)
