"""Naive re-derivations used as independent oracles in tests.

Everything here works straight from the definitions (pairwise enumeration,
induced-subgraph degrees) and deliberately shares no code with the package
paths it is used to check.
"""

from __future__ import annotations

from itertools import combinations

from semistrong.graph import Graph


def edge_distance_class(g: Graph, e: int, f: int) -> int:
    """1 if the edges share a vertex, 2 if disjoint but joined by a common
    incident edge, 3 for anything farther."""
    a = set(g.edges[e])
    b = set(g.edges[f])
    if a & b:
        return 1
    for mid in range(len(g.edges)):
        if mid in (e, f):
            continue
        m = set(g.edges[mid])
        if m & a and m & b:
            return 2
    return 3


def two_neighbors(g: Graph, e: int) -> set[int]:
    return {f for f in range(len(g.edges)) if f != e and edge_distance_class(g, e, f) == 2}


def one_neighbors(g: Graph, e: int) -> set[int]:
    return {f for f in range(len(g.edges)) if f != e and edge_distance_class(g, e, f) == 1}


def cross_edges(g: Graph, e: int, f: int) -> set[tuple[int, int]]:
    """Edges of g joining an endpoint of e to an endpoint of f."""
    u, v = g.edges[e]
    x, y = g.edges[f]
    out = set()
    for a in (u, v):
        for b in (x, y):
            if g.has_edge(a, b):
                out.add((a, b))
    return out


def induced_degrees(g: Graph, edge_ids) -> dict[int, int]:
    verts = set()
    for e in edge_ids:
        verts.update(g.edges[e])
    return {x: sum(1 for w in g.neighbors(x) if w in verts) for x in verts}


def naive_is_matching(g: Graph, edge_ids) -> bool:
    verts: list[int] = []
    for e in edge_ids:
        verts.extend(g.edges[e])
    return len(verts) == len(set(verts))


def naive_is_semistrong(g: Graph, edge_ids) -> bool:
    ids = sorted(set(edge_ids))
    if not naive_is_matching(g, ids):
        return False
    deg = induced_degrees(g, ids)
    return all(deg[g.edges[e][0]] == 1 or deg[g.edges[e][1]] == 1 for e in ids)


def naive_is_induced(g: Graph, edge_ids) -> bool:
    ids = sorted(set(edge_ids))
    if not naive_is_matching(g, ids):
        return False
    deg = induced_degrees(g, ids)
    return all(d == 1 for d in deg.values())


def naive_verify(g: Graph, colors, mode: str, s: int = 0, t: int = 0) -> bool:
    """Check a coloring per definition, pair by pair / class by class."""
    m = len(g.edges)
    if mode in ("semistrong", "strong"):
        check = naive_is_semistrong if mode == "semistrong" else naive_is_induced
        classes: dict[int, list[int]] = {}
        for e in range(m):
            classes.setdefault(colors[e], []).append(e)
        return all(check(g, ids) for ids in classes.values())
    if mode == "relaxed":
        for e in range(m):
            d1 = sum(1 for f in range(m) if f != e and colors[f] == colors[e] and edge_distance_class(g, e, f) == 1)
            d2 = sum(1 for f in range(m) if f != e and colors[f] == colors[e] and edge_distance_class(g, e, f) == 2)
            if d1 > s or d2 > t:
                return False
        return True
    raise ValueError(mode)


def naive_badness(g: Graph, colors) -> tuple[int, int, set[int], set[tuple[int, int]]]:
    m = len(g.edges)
    pairs = {
        (e, f)
        for e, f in combinations(range(m), 2)
        if colors[e] == colors[f] and edge_distance_class(g, e, f) == 2
    }
    bad_edges = set()
    for e in range(m):
        cnt = sum(1 for f in two_neighbors(g, e) if colors[f] == colors[e])
        if cnt >= 2:
            bad_edges.add(e)
    return len(bad_edges), len(pairs), bad_edges, pairs


def counting_identity_sides(g: Graph, e: int) -> int:
    """Sum over the two endpoint neighborhoods of (degree - 1)."""
    u, v = g.edges[e]
    total = 0
    for w in g.neighbors(u):
        if w != v:
            total += g.degree(w) - 1
    for w in g.neighbors(v):
        if w != u:
            total += g.degree(w) - 1
    return total


def has_triangle(g: Graph) -> bool:
    for u, v in g.edges:
        if set(g.neighbors(u)) & set(g.neighbors(v)):
            return True
    return False
