"""Partial duality relative to an edge subset, and edge-type classification.

Two implementations of the dual are shipped on purpose.  The reference one
traces the boundary of the spanning subgraph corner by corner, carrying the
attachment markers with it, exactly as the geometric construction says.
The fast one rewrites the rotation successor in one pass: crossing the
ribbon of a subset edge before rotating is the composition of the rotation
successor with the pairing restricted to the subset.  Both relabel their
output the same canonical way, so they must agree literally; the test suite
holds them to that on every fixture.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    CROSS_THEN_ROTATE,
    LEAD,
    ROTATE_THEN_CROSS,
    DisconnectedGraphError,
    RibbonGraph,
    _bare_vertex_count,
    _corner_walks,
    _orbit_count,
    is_connected,
    stats,
)

EDGE_TYPES = ("pp", "uu", "pu", "up")


def _subset_flags(g: RibbonGraph, edges: Iterable[int]) -> list[bool]:
    """Per-dart flag of membership in the edge subset; rejects unknown labels."""
    chosen = set()
    for e in edges:
        if not 0 <= e < g.num_edges:
            raise ValueError(f"unknown edge {e}")
        chosen.add(e)
    flags = [False] * g.num_darts
    for e in chosen:
        a, b = g.edges[e]
        flags[a] = flags[b] = True
    return flags


def spanning_boundary_count(
    g: RibbonGraph, edges: Iterable[int], convention: str = CROSS_THEN_ROTATE
) -> int:
    """Boundary components of the spanning subgraph on the given edges.

    This is the vertex count of the partial dual relative to the same
    subset.  Vertices not met by the subset bound their own circle.
    """
    g.validate()
    flags = _subset_flags(g, edges)
    sigma, alpha = g.sigma, g.alpha
    if convention == CROSS_THEN_ROTATE:
        succ = [sigma[alpha[d]] if flags[d] else sigma[d] for d in range(g.num_darts)]
    elif convention == ROTATE_THEN_CROSS:
        succ = [alpha[s] if flags[s] else s for s in (sigma[d] for d in range(g.num_darts))]
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return _orbit_count(succ) + _bare_vertex_count(g)


def _rebuild(
    rotations: Iterable[Sequence[int]],
    g: RibbonGraph,
    bare_vertices: int,
) -> RibbonGraph:
    """Canonical relabeling of a dual: order new vertices by their smallest
    original dart, start each rotation there, then renumber darts densely.
    Edge indices (and names) carry over unchanged."""
    rots = []
    for rot in rotations:
        lo = rot.index(min(rot))
        rots.append(tuple(rot[lo:]) + tuple(rot[:lo]))
    rots.sort(key=lambda r: r[0])
    newid = {}
    for rot in rots:
        for d in rot:
            newid[d] = len(newid)
    vertices = tuple(tuple(newid[d] for d in rot) for rot in rots)
    vertices += ((),) * bare_vertices
    edges = tuple((newid[a], newid[b]) for a, b in g.edges)
    return RibbonGraph(vertices, edges, g.edge_names)


def partial_dual(g: RibbonGraph, edges: Iterable[int]) -> RibbonGraph:
    """Partial dual relative to the edge subset (fast rewrite).

    The new rotation successor sends a dart to the rotation successor of its
    partner when its edge is in the subset, and to its own rotation
    successor otherwise; the pairing is untouched.  Edge ``e`` of the input
    keeps index and label as ``e'`` of the output.
    """
    g.validate()
    if not is_connected(g):
        raise DisconnectedGraphError("partial duality requires a connected graph")
    flags = _subset_flags(g, edges)
    sigma, alpha = g.sigma, g.alpha
    nd = g.num_darts
    succ = [sigma[alpha[d]] if flags[d] else sigma[d] for d in range(nd)]
    seen = bytearray(nd)
    rotations = []
    for start in range(nd):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = 1
            cyc.append(d)
            d = succ[d]
        rotations.append(cyc)
    return _rebuild(rotations, g, _bare_vertex_count(g))


def partial_dual_reference(g: RibbonGraph, edges: Iterable[int]) -> RibbonGraph:
    """Partial dual by tracing the spanning subgraph's boundary.

    Walks the boundary of the spanning subgraph on the chosen edges corner
    by corner.  Each walk bounds one vertex-disc of the dual.  Passing over
    the attachment segment of an edge outside the subset records where that
    edge stays attached; riding a ribbon side of a subset edge records where
    the replacement edge is attached to the two arcs the walk just followed.
    Both kinds of marker are keyed by the dart whose leading corner opens
    them, and the old pairing matches markers up into the dual's edges.
    """
    g.validate()
    if not is_connected(g):
        raise DisconnectedGraphError("partial duality requires a connected graph")
    flags = _subset_flags(g, edges)
    walks = _corner_walks(g, flags)
    rotations = []
    for walk in walks:
        markers = [c >> 1 for c in walk if c & 1 == LEAD]
        rotations.append(markers)
    return _rebuild(rotations, g, _bare_vertex_count(g))


# -- edge types ---------------------------------------------------------------


def face_walk_ids(g: RibbonGraph) -> tuple[int, ...]:
    """Face of each corner: the least corner key of its boundary walk."""
    walks = _corner_walks(g, [True] * g.num_darts)
    owner = [0] * (2 * g.num_darts)
    for walk in walks:
        wid = walk[0]
        for c in walk:
            owner[c] = wid
    return tuple(owner)


def edge_faces(g: RibbonGraph, e: int) -> frozenset:
    """The one or two faces the edge-ribbon is attached to, as walk ids."""
    g.validate()
    if not 0 <= e < g.num_edges:
        raise ValueError(f"unknown edge {e}")
    owner = face_walk_ids(g)
    a, _ = g.edges[e]
    return frozenset((owner[a << 1], owner[(a << 1) | 1]))


def edge_type(g: RibbonGraph, e: int) -> str:
    """One of pp/uu/pu/up: proper-or-loop in the graph and in the face structure.

    First letter ``p`` iff the endpoints are distinct vertices; second
    letter ``p`` iff the two ribbon sides lie on distinct boundary walks.
    """
    g.validate()
    if not is_connected(g):
        raise DisconnectedGraphError("edge types require a connected graph")
    if not 0 <= e < g.num_edges:
        raise ValueError(f"unknown edge {e}")
    first = "u" if g.is_loop(e) else "p"
    second = "p" if len(edge_faces(g, e)) == 2 else "u"
    return first + second


@dataclass(frozen=True)
class MergeSplit:
    """Observed vertex- and face-count changes under a single-edge dual."""

    dv: int
    df: int


def check_merge_split(g: RibbonGraph, e: int) -> MergeSplit:
    """Verify the merge/split behaviour of a single-edge dual and report deltas.

    A proper edge merges its two vertices (dv = -1), a loop splits its
    vertex (dv = +1); an edge on two faces merges them (df = -1), an edge
    on one face splits it (df = +1).  Raises if the observed counts
    disagree with the edge's classification.
    """
    s0 = stats(g)
    t = edge_type(g, e)
    s1 = stats(partial_dual(g, [e]))
    dv = s1.v - s0.v
    df = s1.f - s0.f
    expected_dv = -1 if t[0] == "p" else 1
    expected_df = -1 if t[1] == "p" else 1
    if (dv, df) != (expected_dv, expected_df):
        raise AssertionError(
            f"edge {e} of type {t}: observed (dv={dv}, df={df}), "
            f"expected (dv={expected_dv}, df={expected_df})"
        )
    return MergeSplit(dv=dv, df=df)


def _rotation_interlacement(g: RibbonGraph) -> list[list[bool]]:
    """Interlacement of the loops of a one-vertex graph, by edge index."""
    rot = g.vertices[0]
    pos: dict[int, list[int]] = {}
    for i, d in enumerate(rot):
        pos.setdefault(g.dart_edge[d], []).append(i)
    m = g.num_edges
    adj = [[False] * m for _ in range(m)]
    for i in range(m):
        p = pos[i]
        for j in range(i + 1, m):
            q = pos[j]
            if (p[0] < q[0] < p[1]) != (p[0] < q[1] < p[1]):
                adj[i][j] = adj[j][i] = True
    return adj


def check_up_conditions(g: RibbonGraph) -> tuple[tuple[int, int], ...]:
    """Diagnose the three face-attachment conditions on a one-vertex graph.

    For each edge ``e`` with face pair ``{f1, f2}``:

    1. ``e`` is attached to two distinct faces;
    2. every edge interlaced with ``e`` is attached to exactly ``{f1, f2}``;
    3. every other edge not interlaced with ``e`` is attached to a pair of
       faces different from ``{f1, f2}``.

    Returns the sorted list of ``(edge, condition)`` violations, empty iff
    all three hold for every edge.  Evaluated as a diagnostic on any
    one-vertex input.
    """
    g.validate()
    if g.num_vertices != 1:
        raise ValueError(f"graph has {g.num_vertices} vertices (expected 1)")
    m = g.num_edges
    pairs = [edge_faces(g, e) for e in range(m)]
    adj = _rotation_interlacement(g)
    violations = []
    for e in range(m):
        if len(pairs[e]) != 2:
            violations.append((e, 1))
        for other in range(m):
            if other == e:
                continue
            if adj[e][other]:
                if pairs[other] != pairs[e]:
                    violations.append((e, 2))
                    break
        for other in range(m):
            if other == e:
                continue
            if not adj[e][other] and pairs[other] == pairs[e]:
                violations.append((e, 3))
                break
    return tuple(sorted(violations))
