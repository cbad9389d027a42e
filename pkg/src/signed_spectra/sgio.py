"""Signed-graph v1 text format and DOT export.

Format (newline-delimited ASCII):

    signed-graph v1
    n <count>
    parts <r> <s>          # bipartite variant only
    e <u> <v> <+|->        # one line per edge, 1-based vertices

With a parts line, vertices 1..r form X and r+1..r+s form Y.
"""

import numpy as np

from .errors import FormatError, NotBipartite
from .graphs import SignedBipartiteGraph, SignedGraph, from_edge_list

MAGIC = "signed-graph v1"


def write_text(graph):
    """Serialize a SignedGraph or SignedBipartiteGraph to format v1."""
    lines = [MAGIC]
    if isinstance(graph, SignedBipartiteGraph):
        lines.append(f"n {graph.n}")
        lines.append(f"parts {graph.r} {graph.s}")
        edges = graph.edges()
    else:
        lines.append(f"n {graph.n}")
        edges = graph.edges()
    for u, v, sign in edges:
        lines.append(f"e {u} {v} {'+' if sign > 0 else '-'}")
    return "\n".join(lines) + "\n"


def read_text(text):
    """Parse format v1; returns SignedGraph or SignedBipartiteGraph.

    Raises FormatError naming the offending line on malformed input.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise FormatError(f"line 1: expected header {MAGIC!r}")
    n = None
    parts = None
    edges = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        tag = fields[0]
        try:
            if tag == "n":
                if len(fields) != 2:
                    raise ValueError
                n = int(fields[1])
                if n < 1:
                    raise ValueError
            elif tag == "parts":
                if len(fields) != 3:
                    raise ValueError
                parts = (int(fields[1]), int(fields[2]))
            elif tag == "e":
                if len(fields) != 4 or fields[3] not in ("+", "-"):
                    raise ValueError
                u, v = int(fields[1]), int(fields[2])
                edges.append((u, v, 1 if fields[3] == "+" else -1))
            else:
                raise ValueError
        except ValueError:
            raise FormatError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None:
        raise FormatError("line 2: missing 'n <count>' line")
    if parts is not None:
        r, s = parts
        if r < 1 or s < 1 or r + s != n:
            raise FormatError("line 3: parts must be positive and sum to n")
        signs = np.zeros((r, s), dtype=np.int8)
        for u, v, sign in edges:
            if v <= r or u > r:
                u, v = v, u
            if not (1 <= u <= r and r + 1 <= v <= n):
                raise FormatError(f"edge ({u}, {v}) does not cross the parts")
            if signs[u - 1, v - r - 1] != 0:
                raise FormatError(f"duplicate edge ({u}, {v})")
            signs[u - 1, v - r - 1] = sign
        return SignedBipartiteGraph(signs)
    return from_edge_list(n, edges)


def read_file(path):
    with open(path, "r", encoding="ascii") as fh:
        return read_text(fh.read())


def write_file(graph, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(write_text(graph))


def to_dot(graph):
    """DOT export: solid edges positive, dashed negative."""
    if isinstance(graph, SignedBipartiteGraph):
        n, edges = graph.n, graph.edges()
    else:
        n, edges = graph.n, graph.edges()
    lines = ["graph signed {"]
    for u in range(1, n + 1):
        lines.append(f"  {u};")
    for u, v, sign in edges:
        style = "" if sign > 0 else " [style=dashed]"
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def as_bipartite(graph):
    """Reinterpret a connected bipartite SignedGraph with derived parts.

    The part containing the smaller side goes to X.  Raises NotBipartite
    for non-bipartite input.
    """
    if isinstance(graph, SignedBipartiteGraph):
        return graph
    x, y = graph.bipartition()
    if len(x) > len(y):
        x, y = y, x
    signs = np.zeros((len(x), len(y)), dtype=np.int8)
    xi = {u: i for i, u in enumerate(x)}
    yi = {u: j for j, u in enumerate(y)}
    for u, v, sign in graph.edges():
        if u in xi:
            signs[xi[u], yi[v]] = sign
        else:
            if v not in xi:
                raise NotBipartite("edge inside one part")
            signs[xi[v], yi[u]] = sign
    return SignedBipartiteGraph(signs)
