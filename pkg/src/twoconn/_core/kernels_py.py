"""Bitmask graph kernels, pure-python reference implementation.

A graph on n vertices is given as a list ``adj`` of n integers, where bit u
of ``adj[v]`` is set iff {u,v} is an edge.  Every function restricts the
graph to the vertex set encoded by the bitmask ``sub``.  Python integers are
unbounded, so this backend works for any n; the compiled backend accelerates
the n <= 64 case that dominates the exhaustive oracles.
"""

BACKEND = "pure"


def is_connected_masks(adj, sub):
    """True iff the vertices in ``sub`` induce a connected subgraph.

    The empty set and singletons count as connected.
    """
    if sub == 0:
        return True
    reach = sub & -sub
    frontier = reach
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & sub & ~reach
        reach |= frontier
    return reach == sub


def components_masks(adj, sub):
    """Connected components of the induced subgraph, as a list of masks.

    Ordered by lowest member vertex.
    """
    comps = []
    rest = sub
    while rest:
        start = rest & -rest
        reach = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & rest & ~reach
            reach |= frontier
        comps.append(reach)
        rest &= ~reach
    return comps


def count_components_masks(adj, sub):
    n = 0
    rest = sub
    while rest:
        start = rest & -rest
        reach = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & rest & ~reach
            reach |= frontier
        rest &= ~reach
        n += 1
    return n


def cut_vertex_mask(adj, sub):
    """Mask of vertices v in ``sub`` whose removal increases the number of
    connected components of the induced subgraph."""
    base = count_components_masks(adj, sub)
    out = 0
    s = sub
    while s:
        b = s & -s
        s ^= b
        if count_components_masks(adj, sub ^ b) > base:
            out |= b
    return out


def is_biconnected_masks(adj, sub):
    """True iff the induced subgraph has >= 3 vertices, is connected, and
    stays connected after removing any single vertex."""
    if bin(sub).count("1") < 3:
        return False
    if not is_connected_masks(adj, sub):
        return False
    s = sub
    while s:
        b = s & -s
        s ^= b
        if not is_connected_masks(adj, sub ^ b):
            return False
    return True
