"""Immutable simple graphs with stable edge indexing, text I/O, and named families."""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(ValueError):
    """Malformed graph data: bad edge-list text or invalid family parameters."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are an ordered list of unordered pairs; the position of an edge in
    ``edges`` is its index, fixed at construction. Every other operation in
    this package identifies edges by that index, so two runs over the same
    input always talk about the same edge.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    # vertex -> indices of incident edges, derived in __post_init__
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        seen: set[tuple[int, int]] = set()
        incident: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(edges):
            if u == v:
                raise GraphError(f"edge {i} is a self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i} has endpoint out of range: ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key} at index {i}")
            seen.add(key)
            incident[u].append(i)
            incident[v].append(i)
        object.__setattr__(self, "adjacency", tuple(tuple(ix) for ix in incident))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        for e in self.adjacency[v]:
            a, b = self.edges[e]
            out.append(b if a == v else a)
        return tuple(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format into a :class:`Graph`.

    Format: an optional first line ``n <count>`` declares the vertex count
    (otherwise it is one past the largest vertex index); every other line is
    ``<u> <v>`` with 0-based integers. ``#`` starts a comment and blank lines
    are ignored. Errors carry the offending line number.
    """
    declared_n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    saw_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not saw_data and tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise GraphError(f"line {lineno}: malformed header, expected 'n <count>'")
            declared_n = int(tokens[1])
            saw_data = True
            continue
        saw_data = True
        if len(tokens) != 2:
            raise GraphError(f"line {lineno}: expected '<u> <v>', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index in ({u}, {v})")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise GraphError(
                f"line {lineno}: vertex index out of range for declared n {declared_n}"
            )
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    if declared_n is None:
        declared_n = 1 + max((max(u, v) for u, v in edges), default=-1)
    return Graph(n=declared_n, edges=tuple(edges))


def serialize_edge_list(g: Graph) -> str:
    """Bit-exact edge-list text: header, then edges in index order."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


FAMILY_KINDS = ("path", "cycle", "complete", "complete_bipartite", "star", "empty")


@dataclass(frozen=True)
class GraphFamily:
    """A named graph family plus its integer parameters.

    ``a`` is the vertex count for every kind except ``complete_bipartite``,
    where ``(a, b)`` are the two part sizes.
    """

    kind: str
    a: int
    b: int | None = None


def generate(family: GraphFamily) -> Graph:
    """Build the graph of a family with deterministic vertex and edge order.

    Path and cycle edges come in walk order, complete-graph edges in
    lexicographic pair order, and complete bipartite graphs use parts
    ``{0..a-1}`` and ``{a..a+b-1}`` with lexicographic edges.
    """
    kind, a, b = family.kind, family.a, family.b
    if kind not in FAMILY_KINDS:
        raise GraphError(f"unknown family {kind!r}")
    if kind == "complete_bipartite":
        if b is None or a < 1 or b < 1:
            raise GraphError("complete_bipartite requires part sizes a, b >= 1")
        edges = tuple((i, a + j) for i in range(a) for j in range(b))
        return Graph(n=a + b, edges=edges)
    if b is not None:
        raise GraphError(f"family {kind!r} takes a single parameter")
    if a < 1:
        raise GraphError(f"family {kind!r} requires n >= 1, got {a}")
    if kind == "path":
        return Graph(n=a, edges=tuple((i, i + 1) for i in range(a - 1)))
    if kind == "cycle":
        if a < 3:
            raise GraphError(f"cycle requires n >= 3, got {a}")
        return Graph(n=a, edges=tuple((i, (i + 1) % a) for i in range(a)))
    if kind == "complete":
        return Graph(n=a, edges=tuple((i, j) for i in range(a) for j in range(i + 1, a)))
    if kind == "star":
        return Graph(n=a, edges=tuple((0, i) for i in range(1, a)))
    return Graph(n=a, edges=())  # empty


def path(n: int) -> Graph:
    return generate(GraphFamily("path", n))


def cycle(n: int) -> Graph:
    return generate(GraphFamily("cycle", n))


def complete(n: int) -> Graph:
    return generate(GraphFamily("complete", n))


def complete_bipartite(a: int, b: int) -> Graph:
    return generate(GraphFamily("complete_bipartite", a, b))


def star(n: int) -> Graph:
    return generate(GraphFamily("star", n))


def empty(n: int) -> Graph:
    return generate(GraphFamily("empty", n))


def parse_family_name(name: str) -> GraphFamily:
    """Parse compact names: K4, K2,3, P5, C6, S4, E3."""
    name = name.strip()
    if len(name) < 2:
        raise GraphError(f"cannot parse family name {name!r}")
    prefix, rest = name[0].upper(), name[1:]
    if prefix == "K" and "," in rest:
        a_txt, b_txt = rest.split(",", 1)
        if not (a_txt.isdigit() and b_txt.isdigit()):
            raise GraphError(f"cannot parse family name {name!r}")
        return GraphFamily("complete_bipartite", int(a_txt), int(b_txt))
    if not rest.isdigit():
        raise GraphError(f"cannot parse family name {name!r}")
    kinds = {"P": "path", "C": "cycle", "K": "complete", "S": "star", "E": "empty"}
    if prefix not in kinds:
        raise GraphError(f"unknown family prefix in {name!r}")
    return GraphFamily(kinds[prefix], int(rest))


def family_label(family: GraphFamily) -> str:
    prefixes = {"path": "P", "cycle": "C", "complete": "K", "star": "S", "empty": "E"}
    if family.kind == "complete_bipartite":
        return f"K{family.a},{family.b}"
    return f"{prefixes[family.kind]}{family.a}"


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the connected components, ordered by smallest member."""
    unseen = set(range(g.n))
    comps: list[tuple[int, ...]] = []
    for start in range(g.n):
        if start not in unseen:
            continue
        stack = [start]
        unseen.discard(start)
        comp = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in unseen:
                    unseen.discard(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


COMPLETE_EVEN = "complete_even"
BALANCED_COMPLETE_BIPARTITE = "balanced_complete_bipartite"
OTHER = "other"


def recognize_structure(g: Graph) -> tuple[str, ...]:
    """Classify each connected component.

    A component is ``complete_even`` when it is a complete graph on an even
    number (>= 2) of vertices, ``balanced_complete_bipartite`` when it is a
    complete bipartite graph with equal part sizes, and ``other`` otherwise.
    K2 qualifies as both and reports ``complete_even``.
    """
    return tuple(_component_tag(g, comp) for comp in connected_components(g))


def _component_tag(g: Graph, comp: tuple[int, ...]) -> str:
    vset = set(comp)
    k = len(comp)
    m_c = sum(1 for u, v in g.edges if u in vset)
    if k >= 2 and k % 2 == 0 and m_c == k * (k - 1) // 2:
        return COMPLETE_EVEN
    side = _bipartition(g, comp)
    if side is not None:
        part_a = sum(1 for v in comp if side[v] == 0)
        part_b = k - part_a
        if part_a == part_b >= 1 and m_c == part_a * part_b:
            return BALANCED_COMPLETE_BIPARTITE
    return OTHER


def _bipartition(g: Graph, comp: tuple[int, ...]) -> dict[int, int] | None:
    side = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in side:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                return None
    return side
