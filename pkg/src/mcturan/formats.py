"""Text formats for patterns, host multigraphs and colored multigraphs.

Pattern / multigraph file::

    pattern <r> <k_hint>
    <u> <v> <mult>
    ...

Colored multigraph file::

    colored <n> <k> [nested]
    color <i>
    <u> <v>
    ...

Blank lines and ``#`` comments are ignored; vertices are 0-based.
"""

from __future__ import annotations

from pathlib import Path

from .colorings import ColoredMultigraph, NestedColoredMultigraph
from .graphs import (MultiGraph, PatternMultigraph, SimpleGraph, canon, clique_pattern,
                     cycle_pattern)


class FormatError(ValueError):
    pass


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line.split()


PATTERN_ALIASES = {
    "k3": lambda: clique_pattern(3),
    "k4": lambda: clique_pattern(4),
    "k5": lambda: clique_pattern(5),
    "c5": lambda: cycle_pattern(5),
}


def parse_multigraph(text: str) -> tuple[MultiGraph, int]:
    """Return the multiplicity map and the header's k hint."""
    rows = list(_lines(text))
    if not rows or rows[0][0] != "pattern" or len(rows[0]) not in (2, 3):
        raise FormatError("expected header 'pattern <r> <k_hint>'")
    try:
        n = int(rows[0][1])
        k_hint = int(rows[0][2]) if len(rows[0]) == 3 else 0
    except ValueError as exc:
        raise FormatError(f"bad header: {' '.join(rows[0])}") from exc
    w: dict = {}
    for row in rows[1:]:
        if len(row) not in (2, 3):
            raise FormatError(f"bad edge line: {' '.join(row)}")
        u, v = int(row[0]), int(row[1])
        x = int(row[2]) if len(row) == 3 else 1
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"bad pair {u} {v} for r={n}")
        if x < 0:
            raise FormatError(f"negative multiplicity on {u} {v}")
        p = canon(u, v)
        w[p] = w.get(p, 0) + x
    cap = max([k_hint, *w.values()], default=0)
    return MultiGraph.from_dict(n, cap, w), k_hint


def parse_pattern(text: str, name: str = "", allow_isolated: bool = False) -> PatternMultigraph:
    g, _ = parse_multigraph(text)
    H = PatternMultigraph.from_multigraph(g, name)
    iso = H.isolated_vertices()
    if iso and not allow_isolated:
        raise FormatError(f"pattern has isolated vertices {iso}")
    return H


def load_pattern(spec: str) -> PatternMultigraph:
    """Resolve a built-in alias (k3, k4, k5, c5) or read a pattern file."""
    key = spec.lower()
    if key in PATTERN_ALIASES:
        return PATTERN_ALIASES[key]()
    path = Path(spec)
    return parse_pattern(path.read_text(), name=path.stem)


def load_multigraph(path: str) -> tuple[MultiGraph, int]:
    return parse_multigraph(Path(path).read_text())


def format_multigraph(g: MultiGraph, k_hint: int | None = None) -> str:
    k = g.k_cap if k_hint is None else k_hint
    out = [f"pattern {g.n} {k}"]
    out += [f"{u} {v} {x}" for (u, v), x in g.items() if x]
    return "\n".join(out) + "\n"


def format_simple(g: SimpleGraph) -> str:
    out = [f"pattern {g.n} 1"] + [f"{u} {v} 1" for u, v in sorted(g.edges)]
    return "\n".join(out) + "\n"


def load_simple(path: str) -> SimpleGraph:
    g, _ = load_multigraph(path)
    if g.max_multiplicity() > 1:
        raise FormatError(f"{path}: simple graph expected, found multiplicity > 1")
    return g.underlying()


def parse_colored(text: str) -> ColoredMultigraph:
    rows = list(_lines(text))
    if not rows or rows[0][0] != "colored" or len(rows[0]) not in (3, 4):
        raise FormatError("expected header 'colored <n> <k> [nested]'")
    n, k = int(rows[0][1]), int(rows[0][2])
    nested = len(rows[0]) == 4 and rows[0][3] == "nested"
    edges = [set() for _ in range(k)]
    cur = None
    for row in rows[1:]:
        if row[0] == "color":
            cur = int(row[1])
            if not 0 <= cur < k:
                raise FormatError(f"color index {cur} outside [0, {k})")
            continue
        if cur is None or len(row) != 2:
            raise FormatError(f"edge line outside a color block: {' '.join(row)}")
        u, v = int(row[0]), int(row[1])
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"bad pair {u} {v}")
        edges[cur].add(canon(u, v))
    G = ColoredMultigraph(n, tuple(SimpleGraph(n, frozenset(e)) for e in edges))
    if nested:
        try:
            return NestedColoredMultigraph.from_colored(G)
        except ValueError as exc:
            raise FormatError(f"header says nested: {exc}") from exc
    return G


def load_colored(path: str) -> ColoredMultigraph:
    return parse_colored(Path(path).read_text())


def format_colored(G: ColoredMultigraph) -> str:
    tag = " nested" if isinstance(G, NestedColoredMultigraph) else ""
    out = [f"colored {G.n} {G.k}{tag}"]
    for i, c in enumerate(G.colors):
        out.append(f"color {i}")
        out += [f"{u} {v}" for u, v in sorted(c.edges)]
    return "\n".join(out) + "\n"
