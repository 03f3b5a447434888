import pytest

from mcturan.colorings import NestedColoredMultigraph, construct_candidate_ii
from mcturan.formats import (FormatError, format_colored, format_multigraph, load_pattern,
                             parse_colored, parse_multigraph, parse_pattern)
from mcturan.graphs import MultiGraph


def test_pattern_roundtrip():
    g = MultiGraph.from_dict(4, 3, {(0, 1): 3, (2, 3): 1, (1, 2): 2})
    back, k = parse_multigraph(format_multigraph(g, 5))
    assert back == g.with_cap(back.k_cap) and k == 5


def test_aliases():
    assert load_pattern("k3").h == 3
    assert load_pattern("c5").chi == 3
    assert load_pattern("K4").n == 4


def test_pattern_from_file(tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text("# reduced five-cycle\npattern 3 7\n0 1 3\n1 2 1\n0 2 1\n")
    H = load_pattern(str(p))
    assert H.h == 5 and H.chi == 3


def test_isolated_vertex_rejected():
    with pytest.raises(FormatError):
        parse_pattern("pattern 4 1\n0 1 1\n1 2 1\n0 2 1\n")
    assert parse_pattern("pattern 4 1\n0 1 1\n1 2 1\n0 2 1\n", allow_isolated=True).n == 4


@pytest.mark.parametrize("text", ["", "graph 3 1\n", "pattern x 1\n", "pattern 3 1\n0 0 1\n",
                                  "pattern 3 1\n0 5 1\n"])
def test_bad_pattern_text(text):
    with pytest.raises(FormatError):
        parse_multigraph(text)


def test_colored_roundtrip():
    G = construct_candidate_ii(5, 3, 2)
    back = parse_colored(format_colored(G))
    assert isinstance(back, NestedColoredMultigraph)
    assert [c.edges for c in back.colors] == [c.edges for c in G.colors]


def test_colored_nested_header_checked():
    with pytest.raises(FormatError):
        parse_colored("colored 3 2 nested\ncolor 0\n0 1\ncolor 1\n1 2\n")
    with pytest.raises(FormatError):
        parse_colored("colored 3 1\ncolor 1\n0 1\n")
