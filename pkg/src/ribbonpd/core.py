"""Orientable ribbon graphs as rotation systems.

A ribbon graph is a surface with boundary assembled from vertex-discs and
edge-ribbons.  This module stores the orientable case combinatorially as a
rotation system: each vertex is the cyclic, counterclockwise sequence of
darts attached to its disc, and each edge owns exactly two darts.  Dart ids
are dense integers ``0 .. 2m-1`` for a graph with ``m`` edges.

Boundary-walk convention
------------------------

Each dart meets the boundary of its vertex-disc at two corners: the
*leading* corner is reached first when walking counterclockwise around the
vertex, the *trailing* corner is the other end of the attachment segment.
Boundary walks keep the surface on the left.  The successor table below is
the single source of truth; face counts, edge types and partial duality all
derive from it:

    at corner        action                       next corner
    ---------------  ---------------------------  -----------------------
    ``(d, LEAD)``    cross the ribbon of ``d``    ``(pair(d), TRAIL)``
    ``(d, TRAIL)``   follow the vertex boundary   ``(next(d), LEAD)``

where ``pair`` is the edge involution and ``next`` the rotation successor.
Crossing only the ribbons of a chosen edge subset, and passing straight
over the remaining attachment segments, traces the boundary of the
spanning subgraph on that subset instead; that restricted walk is the
primitive behind partial duality.

The competing convention (rotate first, cross second) traverses conjugate
orbits; it must produce the same component counts, which the test suite
checks on every fixture.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

Dart = int
"""Darts are dense integer ids; each edge owns exactly two of them."""

LEAD = 0
TRAIL = 1

CROSS_THEN_ROTATE = "cross-then-rotate"
ROTATE_THEN_CROSS = "rotate-then-cross"


class InvalidGraphError(ValueError):
    """A rotation system violating one of the structural invariants."""


class DisconnectedGraphError(ValueError):
    """Raised by operations defined for connected graphs only."""


def index_symbol(i: int) -> str:
    """Default printable name of edge ``i``: ``A``-``Z``, then ``[26]``, ``[27]``, ..."""
    if 0 <= i < 26:
        return chr(ord("A") + i)
    return f"[{i}]"


def default_edge_names(m: int) -> tuple[str, ...]:
    return tuple(index_symbol(i) for i in range(m))


@dataclass(frozen=True)
class GraphStats:
    """Counts of a connected ribbon graph and the derived surface data."""

    v: int
    e: int
    f: int
    euler_char: int
    genus: int


@dataclass(frozen=True)
class RibbonGraph:
    """An orientable ribbon graph given by rotations and an edge pairing.

    ``vertices`` lists, per vertex, the darts in counterclockwise rotation
    order.  ``edges`` maps edge index to its dart pair; the fixed-point-free
    involution on darts is derived from it.  ``names`` optionally attaches a
    printable label to each edge (defaults to ``A``, ``B``, ...); labels never
    take part in equality.

    Instances are immutable and safe to share between workers.  Construction
    does not validate; call :meth:`validate` (operations entering the public
    API do so).
    """

    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    names: Optional[tuple[str, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(int(d) for d in rot) for rot in self.vertices))
        object.__setattr__(
            self, "edges", tuple((int(a), int(b)) if a <= b else (int(b), int(a)) for a, b in self.edges)
        )
        if self.names is not None:
            object.__setattr__(self, "names", tuple(str(x) for x in self.names))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.edges)

    @property
    def edge_names(self) -> tuple[str, ...]:
        return self.names if self.names is not None else default_edge_names(self.num_edges)

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        """Rotation successor: the next dart counterclockwise at the same vertex."""
        nxt = [0] * self.num_darts
        for rot in self.vertices:
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % len(rot)]
        return tuple(nxt)

    @cached_property
    def alpha(self) -> tuple[int, ...]:
        """Edge involution: the other dart of the same edge-ribbon."""
        inv = [0] * self.num_darts
        for a, b in self.edges:
            inv[a] = b
            inv[b] = a
        return tuple(inv)

    @cached_property
    def dart_vertex(self) -> tuple[int, ...]:
        home = [0] * self.num_darts
        for v, rot in enumerate(self.vertices):
            for d in rot:
                home[d] = v
        return tuple(home)

    @cached_property
    def dart_edge(self) -> tuple[int, ...]:
        owner = [0] * self.num_darts
        for e, (a, b) in enumerate(self.edges):
            owner[a] = e
            owner[b] = e
        return tuple(owner)

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    def is_loop(self, e: int) -> bool:
        a, b = self.edges[e]
        return self.dart_vertex[a] == self.dart_vertex[b]

    def validate(self) -> None:
        """Check all structural invariants, raising on the first violation."""
        nd = self.num_darts
        seen = set()
        for rot in self.vertices:
            for d in rot:
                if d < 0 or d >= nd:
                    raise InvalidGraphError(f"dart {d} out of range 0..{nd - 1}")
                if d in seen:
                    raise InvalidGraphError(f"duplicate dart {d}")
                seen.add(d)
        for d in range(nd):
            if d not in seen:
                raise InvalidGraphError(f"missing dart {d}")
        pair = [-1] * nd
        for a, b in self.edges:
            if a == b:
                raise InvalidGraphError(f"pairing fixed point at {a}")
            for d in (a, b):
                if d < 0 or d >= nd:
                    raise InvalidGraphError(f"dart {d} out of range 0..{nd - 1}")
                if pair[d] != -1:
                    raise InvalidGraphError(f"pairing non-involution at {d}")
            pair[a] = b
            pair[b] = a
        if self.names is not None and len(self.names) != self.num_edges:
            raise InvalidGraphError(
                f"{len(self.names)} edge names for {self.num_edges} edges"
            )


def validate(g: RibbonGraph) -> None:
    g.validate()


# -- boundary walks ----------------------------------------------------------
#
# Corners are packed as ``2*dart + side`` with side LEAD=0 / TRAIL=1, so the
# smallest corner of a walk is well defined and walks come out sorted.


def _corner_walks(g: RibbonGraph, active: Sequence[bool]) -> list[list[int]]:
    """Orbits of the corner successor, crossing only ribbons flagged ``active``.

    With all edges active these are the boundary walks of the whole surface;
    with a subset active, the boundary walks of the spanning subgraph on that
    subset (inactive attachment segments are passed over in place).  Every
    corner of every dart lies on exactly one walk.
    """
    sigma = g.sigma
    alpha = g.alpha
    ncorners = 2 * g.num_darts
    seen = bytearray(ncorners)
    walks = []
    for start in range(ncorners):
        if seen[start]:
            continue
        walk = []
        c = start
        while not seen[c]:
            seen[c] = 1
            walk.append(c)
            d, side = c >> 1, c & 1
            if side == LEAD:
                c = ((alpha[d] << 1) | TRAIL) if active[d] else ((d << 1) | TRAIL)
            else:
                c = sigma[d] << 1
        walks.append(walk)
    return walks


def _bare_vertex_count(g: RibbonGraph) -> int:
    return sum(1 for rot in g.vertices if not rot)


def boundary_components(g: RibbonGraph) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All boundary walks, each a cyclic sequence of (dart, side) corners.

    Every dart contributes its leading and trailing corner to exactly one
    walk, so the walks jointly cover ``2 * num_darts`` corner slots once
    each.  A vertex with no darts bounds its own circle and contributes an
    empty walk.  Walks are listed by their smallest corner and start there.
    """
    g.validate()
    walks = _corner_walks(g, [True] * g.num_darts)
    out = [tuple((c >> 1, c & 1) for c in walk) for walk in walks]
    out.extend(() for _ in range(_bare_vertex_count(g)))
    return tuple(out)


def _orbit_count(succ: Sequence[int]) -> int:
    n = len(succ)
    seen = bytearray(n)
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        d = s
        while not seen[d]:
            seen[d] = 1
            d = succ[d]
    return count


def boundary_component_count(g: RibbonGraph, convention: str = CROSS_THEN_ROTATE) -> int:
    """Number of boundary walks, under either side convention.

    ``cross-then-rotate`` follows the pinned table above; the competing
    ``rotate-then-cross`` reading advances along the vertex first and
    crosses second.  The two traverse conjugate orbits and therefore agree
    on the count.
    """
    g.validate()
    sigma, alpha = g.sigma, g.alpha
    if convention == CROSS_THEN_ROTATE:
        succ = [sigma[alpha[d]] for d in range(g.num_darts)]
    elif convention == ROTATE_THEN_CROSS:
        succ = [alpha[sigma[d]] for d in range(g.num_darts)]
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return _orbit_count(succ) + _bare_vertex_count(g)


def connected_components(g: RibbonGraph) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Components of the underlying graph: (count, dart sets per component).

    Vertices are connected through their edges; a vertex without darts is
    its own component and contributes an empty dart tuple.
    """
    g.validate()
    nv = g.num_vertices
    parent = list(range(nv))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    dv = g.dart_vertex
    for a, b in g.edges:
        ra, rb = find(dv[a]), find(dv[b])
        if ra != rb:
            parent[ra] = rb
    comp_darts: dict[int, list[int]] = {}
    order: list[int] = []
    for v in range(nv):
        r = find(v)
        if r not in comp_darts:
            comp_darts[r] = []
            order.append(r)
    for d in range(g.num_darts):
        comp_darts[find(dv[d])].append(d)
    return len(order), tuple(tuple(comp_darts[r]) for r in order)


def is_connected(g: RibbonGraph) -> bool:
    return connected_components(g)[0] == 1


def stats(g: RibbonGraph) -> GraphStats:
    """Vertex/edge/face counts, Euler characteristic and genus (connected only)."""
    g.validate()
    if not is_connected(g):
        raise DisconnectedGraphError("stats requires a connected graph")
    v = g.num_vertices
    e = g.num_edges
    f = boundary_component_count(g)
    euler = v - e + f
    if euler % 2:
        raise InvalidGraphError(f"odd Euler characteristic {euler}; graph is not orientable-consistent")
    return GraphStats(v=v, e=e, f=f, euler_char=euler, genus=(2 - euler) // 2)


def is_isomorphic(g: RibbonGraph, h: RibbonGraph) -> bool:
    """Whether a dart bijection preserves rotations (up to cyclic shift) and pairing.

    Fixes dart 0 of ``g``, tries every dart of ``h`` as its image, and
    propagates through the rotation successor and the pairing; connectivity
    makes the propagation reach every dart.  Both graphs must be connected.
    """
    g.validate()
    h.validate()
    if not is_connected(g) or not is_connected(h):
        raise DisconnectedGraphError("isomorphism testing requires connected graphs")
    if g.num_edges != h.num_edges or g.num_vertices != h.num_vertices:
        return False
    nd = g.num_darts
    if nd == 0:
        return True  # both are a single bare vertex
    sg, ag = g.sigma, g.alpha
    sh, ah = h.sigma, h.alpha
    for seed in range(nd):
        image = [-1] * nd
        image[0] = seed
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            e = image[d]
            for dn, en in ((sg[d], sh[e]), (ag[d], ah[e])):
                if image[dn] == -1:
                    image[dn] = en
                    stack.append(dn)
                elif image[dn] != en:
                    ok = False
                    break
        if ok and -1 not in image:
            return True
    return False


def join(
    g1: RibbonGraph,
    v1: int,
    arc1: int,
    g2: RibbonGraph,
    v2: int,
    arc2: int,
) -> RibbonGraph:
    """Glue a vertex-disc of ``g2`` into a vertex-disc of ``g1`` along boundary arcs.

    Corner index ``c`` addresses the gap before position ``c`` of the chosen
    rotation; the rotation of ``g2`` at ``v2``, opened at ``arc2``, is
    spliced into the rotation of ``g1`` at ``v1``, opened at ``arc1``.  The
    result has one merged vertex and ``e(g1) + e(g2)`` edges; the insertion
    point is an explicit choice, not canonical.
    """
    g1.validate()
    g2.validate()
    for name, v, graph in (("v1", v1, g1), ("v2", v2, g2)):
        if not 0 <= v < graph.num_vertices:
            raise ValueError(f"{name}: vertex index {v} out of range")
    for name, arc, rot in (("arc1", arc1, g1.vertices[v1]), ("arc2", arc2, g2.vertices[v2])):
        ncorners = max(len(rot), 1)
        if not 0 <= arc < ncorners:
            raise ValueError(f"{name}: corner index {arc} out of range 0..{ncorners - 1}")
    off = g1.num_darts
    rot1 = g1.vertices[v1]
    rot2 = tuple(d + off for d in g2.vertices[v2])
    merged = rot1[:arc1] + rot2[arc2:] + rot2[:arc2] + rot1[arc1:]
    vertices = [merged if i == v1 else rot for i, rot in enumerate(g1.vertices)]
    vertices.extend(
        tuple(d + off for d in rot) for i, rot in enumerate(g2.vertices) if i != v2
    )
    edges = list(g1.edges) + [(a + off, b + off) for a, b in g2.edges]
    out = RibbonGraph(tuple(vertices), tuple(edges), default_edge_names(len(edges)))
    out.validate()
    return out


# -- named families ----------------------------------------------------------


def bouquet_bn(n: int) -> RibbonGraph:
    """One vertex with ``n`` pairwise interlaced loops: the word ``12..n12..n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rotation = tuple(range(2 * n))
    edges = tuple((i, i + n) for i in range(n))
    return RibbonGraph((rotation,), edges, default_edge_names(n))


def tree_path(n: int) -> RibbonGraph:
    """Path tree with ``n`` proper edges (genus 0, one face)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    vertices = [(0,)]
    vertices.extend((2 * i - 1, 2 * i) for i in range(1, n))
    vertices.append((2 * n - 1,))
    edges = tuple((2 * i, 2 * i + 1) for i in range(n))
    return RibbonGraph(tuple(vertices), edges, default_edge_names(n))


def tree_star(n: int) -> RibbonGraph:
    """Star tree with ``n`` proper edges around a central vertex."""
    if n < 1:
        raise ValueError("n must be >= 1")
    vertices = [tuple(2 * i for i in range(n))]
    vertices.extend((2 * i + 1,) for i in range(n))
    edges = tuple((2 * i, 2 * i + 1) for i in range(n))
    return RibbonGraph(tuple(vertices), edges, default_edge_names(n))


def dipole_opposite(n: int) -> RibbonGraph:
    """Two vertices joined by ``n`` parallel edges, rotations mutually opposed.

    Opposed here is relative to the plane dipole: against a consistent
    counterclockwise reading of both discs the edges occur in the same
    cyclic order at the two vertices, which is the reverse of the plane
    embedding's arrangement.  For ``n >= 3`` the result is the single-edge
    partial dual of the bouquet with ``n`` loops, and for odd ``n`` every
    edge is attached to two vertices but only one face.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    vertices = (tuple(range(n)), tuple(range(n, 2 * n)))
    edges = tuple((i, n + i) for i in range(n))
    return RibbonGraph(vertices, edges, default_edge_names(n))
