"""Simple undirected graphs on dense integer vertices 0..n-1.

Graphs are immutable after construction; every derived graph (vertex
deletion, induced subgraph) carries an explicit mapping back to its parent's
vertex ids so callers can translate results.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from . import _core as kernels
from .errors import InputError, NotTwoConnectedError


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    Adjacency lists are kept sorted ascending so that every scan over
    neighbours is deterministic.
    """

    __slots__ = ("n", "_adj", "_edges", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            e = _norm_edge(u, v)
            if e in seen:
                raise InputError(f"parallel edge ({u},{v})")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self._adj = tuple(tuple(lst) for lst in adj)
        self._edges = tuple(sorted(seen))
        self._masks = None

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self._adj[u] if 0 <= u < self.n else False

    def require_edge(self, u: int, v: int) -> tuple[int, int]:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InputError(f"unknown vertex in edge ({u},{v})")
        if u == v or v not in self._adj[u]:
            raise InputError(f"unknown edge ({u},{v})")
        return _norm_edge(u, v)

    @property
    def masks(self) -> tuple[int, ...]:
        if self._masks is None:
            m = []
            for v in range(self.n):
                bits = 0
                for u in self._adj[v]:
                    bits |= 1 << u
                m.append(bits)
            self._masks = tuple(m)
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Remapped(NamedTuple):
    """A derived graph plus the id translation back to its parent."""

    graph: Graph
    new_to_old: tuple[int, ...]

    def old_of(self, v: int) -> int:
        return self.new_to_old[v]

    @property
    def old_to_new(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.new_to_old)}


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set into maximal connected sets.

    Empty graph gives the empty partition; isolated vertices give
    singletons.
    """
    out = []
    for comp in kernels.components_masks(g.masks, g.full_mask):
        verts = []
        c = comp
        while c:
            b = c & -c
            verts.append(b.bit_length() - 1)
            c ^= b
        out.append(frozenset(verts))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return kernels.is_connected_masks(g.masks, g.full_mask)


def is_two_connected(g: Graph) -> bool:
    """True iff n >= 3, g is connected, and g - v is connected for every v."""
    return kernels.is_biconnected_masks(g.masks, g.full_mask)


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose removal disconnects g.  Requires g connected."""
    if not is_connected(g):
        raise InputError("cut_vertices requires a connected graph")
    mask = kernels.cut_vertex_mask(g.masks, g.full_mask)
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def two_connectivity_witness(g: Graph):
    """None if 2-connected, else a human-readable defect description plus
    the offending vertex when one exists."""
    if g.n < 3:
        return ("fewer than 3 vertices", None)
    if not is_connected(g):
        return ("disconnected", None)
    cuts = cut_vertices(g)
    if cuts:
        return (f"cut vertex {cuts[0]}", cuts[0])
    return None


def require_two_connected(g: Graph) -> None:
    w = two_connectivity_witness(g)
    if w is not None:
        raise NotTwoConnectedError(f"graph is not 2-connected: {w[0]}", w[1])


def is_two_edge_connected(g: Graph) -> bool:
    """True iff n >= 2, g is connected, and g - e is connected for every e."""
    if g.n < 2 or not is_connected(g):
        return False
    full = g.full_mask
    masks = list(g.masks)
    for u, v in g.edges:
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        if not kernels.is_connected_masks(masks, full):
            return False
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return True


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    e = g.require_edge(*e)
    return Graph(g.n, (x for x in g.edges if x != e))


def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise InputError(f"cannot add edge ({u},{v})")
    if g.has_edge(u, v):
        raise InputError(f"edge ({u},{v}) already present")
    return Graph(g.n, list(g.edges) + [(u, v)])


def delete_vertex(g: Graph, v: int) -> Remapped:
    if not (0 <= v < g.n):
        raise InputError(f"unknown vertex {v}")
    keep = [u for u in range(g.n) if u != v]
    return _restrict(g, keep)


def induced_subgraph(g: Graph, w: Iterable[int]) -> Remapped:
    keep = sorted(set(w))
    for v in keep:
        if not (0 <= v < g.n):
            raise InputError(f"unknown vertex {v}")
    return _restrict(g, keep)


def _restrict(g: Graph, keep: list[int]) -> Remapped:
    old_to_new = {old: new for new, old in enumerate(keep)}
    edges = [
        (old_to_new[u], old_to_new[v])
        for u, v in g.edges
        if u in old_to_new and v in old_to_new
    ]
    return Remapped(Graph(len(keep), edges), tuple(keep))


def subgraph_with_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Spanning subgraph of g on the same vertex set, keeping only ``edges``."""
    es = [g.require_edge(u, v) for u, v in edges]
    return Graph(g.n, es)


class EdgeSubset:
    """A subset of a parent graph's edges."""

    __slots__ = ("parent", "members")

    def __init__(self, parent: Graph, members: Iterable[tuple[int, int]]):
        self.parent = parent
        self.members = frozenset(parent.require_edge(u, v) for u, v in members)

    def as_graph(self) -> Graph:
        return Graph(self.parent.n, sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, e):
        return _norm_edge(*e) in self.members


# Edge-list text format: `p 2vc <n> <m>`, one `e <u> <v>` line per edge,
# comment lines start with `c`.

def parse_edge_list(text: str) -> Graph:
    n = None
    m = None
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise InputError(f"line {ln}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "2vc":
                raise InputError(f"line {ln}: expected 'p 2vc <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise InputError(f"line {ln}: bad problem line") from exc
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {ln}: edge before problem line")
            if len(parts) != 3:
                raise InputError(f"line {ln}: expected 'e <u> <v>'")
            try:
                edges.append((int(parts[1]), int(parts[2])))
            except ValueError as exc:
                raise InputError(f"line {ln}: bad edge line") from exc
        else:
            raise InputError(f"line {ln}: unknown record {parts[0]!r}")
    if n is None:
        raise InputError("missing problem line 'p 2vc <n> <m>'")
    if m != len(edges):
        raise InputError(f"problem line declares {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except InputError as exc:
        raise InputError(f"bad edge list: {exc}") from exc


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p 2vc {g.n} {g.m}")
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"
