"""Immutable simple-graph representation with indexed edges.

Edge indices are stable and equal to input order; everything downstream
(colorings, neighborhoods, certificates) refers to edges by index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Rejected graph input; ``reason`` is a stable machine-readable tag."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph. Immutable; safe to share across threads.

    adjacency[v] lists (neighbor, incident edge index) sorted by neighbor.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    _pair_to_index: dict[tuple[int, int], int] = field(repr=False, default_factory=dict)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._pair_to_index or (v, u) in self._pair_to_index

    def edge_between(self, u: int, v: int) -> int | None:
        idx = self._pair_to_index.get((u, v))
        if idx is None:
            idx = self._pair_to_index.get((v, u))
        return idx

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return tuple(e for _, e in self.adjacency[v])


def build_graph(vertex_count: int, edge_pairs) -> Graph:
    """Validate and build a Graph; edge indices follow input order."""
    if vertex_count < 0:
        raise GraphError("bad_vertex_count", f"vertex_count must be >= 0, got {vertex_count}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
    pair_to_index: dict[tuple[int, int], int] = {}
    for idx, (u, v) in enumerate(edge_pairs):
        if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
            raise GraphError("endpoint_out_of_range", f"edge {idx} ({u},{v}) has an endpoint outside [0,{vertex_count})")
        if u == v:
            raise GraphError("self_loop", f"edge {idx} is a self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError("duplicate_edge", f"edge {idx} ({u},{v}) duplicates an earlier edge")
        seen.add(key)
        edges.append((u, v))
        adjacency[u].append((v, idx))
        adjacency[v].append((u, idx))
        pair_to_index[key] = idx
    return Graph(
        vertex_count=vertex_count,
        edges=tuple(edges),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
        _pair_to_index=pair_to_index,
    )


def max_degree(g: Graph) -> int:
    if g.vertex_count == 0:
        return 0
    return max(g.degree(v) for v in range(g.vertex_count))


@dataclass(frozen=True, eq=False)
class ComponentView:
    """One connected component, re-indexed from 0, with maps back to the parent."""

    parent: Graph
    graph: Graph
    vertex_map: tuple[int, ...]  # component vertex -> parent vertex
    edge_map: tuple[int, ...]  # component edge -> parent edge


def connected_components(g: Graph) -> list[ComponentView]:
    """Components ordered by smallest parent vertex; maps are index-sorted."""
    seen = [False] * g.vertex_count
    views: list[ComponentView] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        verts = [start]
        while queue:
            v = queue.popleft()
            for w, _ in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    verts.append(w)
                    queue.append(w)
        verts.sort()
        local = {pv: i for i, pv in enumerate(verts)}
        vert_set = set(verts)
        edge_map = tuple(i for i, (u, v) in enumerate(g.edges) if u in vert_set)
        comp_edges = [(local[g.edges[pe][0]], local[g.edges[pe][1]]) for pe in edge_map]
        views.append(
            ComponentView(
                parent=g,
                graph=build_graph(len(verts), comp_edges),
                vertex_map=tuple(verts),
                edge_map=edge_map,
            )
        )
    return views


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_complete_bipartite_dd(g: Graph, d: int) -> bool:
    """True iff g is (isomorphic to) the complete bipartite graph with d+d vertices.

    Decided structurally: d-regular, 2d vertices, bipartite. Completeness of the
    cross edges then follows from the counts. Rejects disconnected input.
    """
    if not is_connected(g):
        raise GraphError("disconnected", "is_complete_bipartite_dd requires a connected graph")
    if d < 1 or g.vertex_count != 2 * d:
        return False
    if any(g.degree(v) != d for v in range(g.vertex_count)):
        return False
    side = _bipartition(g)
    if side is None:
        return False
    return sum(side) == d  # parts of size d and d


def _bipartition(g: Graph) -> list[int] | None:
    """2-color via BFS; None if an odd cycle exists."""
    color = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, _ in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def g_family_witness(g: Graph) -> int | None:
    """Smallest edge uv with N(u) ∪ N(v) covering all vertices, in a d-regular
    graph on 2d vertices; None if the graph is not of that shape.

    A non-None result certifies membership in the family the solver must
    special-case before running greedy + repair.
    """
    n = g.vertex_count
    if n == 0 or n % 2 != 0:
        return None
    d = n // 2
    if any(g.degree(v) != d for v in range(n)):
        return None
    for idx, (u, v) in enumerate(g.edges):
        cover = set(g.neighbors(u)) | set(g.neighbors(v))
        if len(cover) == n:
            return idx
    return None


def bfs_edge_order(g: Graph) -> list[int]:
    """Edges in breadth-first discovery order from the smallest vertex of each
    component; deterministic (adjacency is neighbor-sorted)."""
    seen_v = [False] * g.vertex_count
    listed = [False] * len(g.edges)
    order: list[int] = []
    for start in range(g.vertex_count):
        if seen_v[start]:
            continue
        seen_v[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, e in g.adjacency[v]:
                if not listed[e]:
                    listed[e] = True
                    order.append(e)
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    return order
