import pytest
from test_utils import root_system

from eqschubert.visualization import gkm_graph_dot


def _count(dot):
    lines = dot.splitlines()
    edges = [line for line in lines if " -- " in line]
    vertices = [line for line in lines if "[label=" in line and " -- " not in line]
    return len(vertices), len(edges)


@pytest.mark.parametrize("type_text,vertices,edges", [("A2", 6, 9), ("C2", 8, 16), ("G2", 12, 36), ("A3", 24, 72)])
def test_full_graph_is_regular(type_text, vertices, edges):
    rs = root_system(type_text)
    assert _count(gkm_graph_dot(rs, rs.num_positive_roots)) == (vertices, edges)


def test_truncated_graphs():
    rs = root_system("A2")
    assert _count(gkm_graph_dot(rs, 0)) == (1, 0)
    assert _count(gkm_graph_dot(rs, 1)) == (3, 2)


def test_dot_layout():
    dot = gkm_graph_dot(root_system("A2"), 1)
    lines = dot.splitlines()
    assert lines[0] == "graph gkm_A2 {"
    assert lines[-1] == "}"
    assert '    "e" -- "s1" [label="a1"];' in lines
    assert '    "e" -- "s2" [label="a2"];' in lines
    assert '    "s1" [label="s1\\n(213)"];' in lines


def test_type_a_edges_in_z_coordinates():
    dot = gkm_graph_dot(root_system("A2"), 3, coords="zA")
    assert '[label="t2-t1"]' in dot
    assert '[label="t3-t2"]' in dot
    assert '[label="t3-t1"]' in dot
    assert "a1" not in dot


def test_other_types_label_vertices_by_word():
    dot = gkm_graph_dot(root_system("B2"), 1)
    assert '    "s2" [label="s2"];' in dot.splitlines()
