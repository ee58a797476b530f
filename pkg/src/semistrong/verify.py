"""Ground-truth checkers for the matching and coloring notions, plus the
bad-edge / bad-pair accounting that drives the repair engine.

All functions are pure; witnesses always report the lexicographically
smallest failure so tests are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .coloring import Coloring
from .graph import Graph
from .neighborhood import compute_neighborhood


class VerifyResult(NamedTuple):
    ok: bool
    witness: tuple[int, int] | None  # (color, offending edge index)

    def __bool__(self) -> bool:
        return self.ok


def _induced_degrees(g: Graph, edge_ids: Iterable[int]) -> dict[int, int]:
    """Degrees in the subgraph induced by the endpoints of the given edges."""
    verts: set[int] = set()
    for e in edge_ids:
        u, v = g.edges[e]
        verts.add(u)
        verts.add(v)
    return {x: sum(1 for w, _ in g.adjacency[x] if w in verts) for x in verts}


def _is_matching(g: Graph, edge_ids: list[int]) -> bool:
    seen: set[int] = set()
    for e in edge_ids:
        u, v = g.edges[e]
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def is_semistrong_matching(g: Graph, m: Iterable[int]) -> bool:
    """m is a matching and each of its edges keeps an endpoint of degree 1 in
    the subgraph induced by m's endpoints."""
    edge_ids = sorted(set(m))
    if not _is_matching(g, edge_ids):
        return False
    deg = _induced_degrees(g, edge_ids)
    return all(deg[g.edges[e][0]] == 1 or deg[g.edges[e][1]] == 1 for e in edge_ids)


def is_induced_matching(g: Graph, m: Iterable[int]) -> bool:
    """m is a matching with all induced-subgraph degrees equal to 1
    (no two edges at distance 1 or 2)."""
    edge_ids = sorted(set(m))
    if not _is_matching(g, edge_ids):
        return False
    deg = _induced_degrees(g, edge_ids)
    return all(d == 1 for d in deg.values())


def _first_offender_matching(g: Graph, edge_ids: list[int]) -> int:
    """Smallest edge sharing a vertex with another edge of the class."""
    use: dict[int, int] = {}
    clash = len(g.edges)
    for e in edge_ids:
        for x in g.edges[e]:
            if x in use:
                clash = min(clash, use[x], e)
            else:
                use[x] = e
    return clash


def _check_classes(g: Graph, c: Coloring, class_ok, offender) -> VerifyResult:
    if len(c.colors) != len(g.edges):
        raise ValueError(f"coloring has {len(c.colors)} entries for {len(g.edges)} edges")
    best: tuple[int, int] | None = None
    for color, edge_ids in sorted(c.classes().items()):
        if class_ok(g, edge_ids):
            continue
        cand = (color, offender(g, edge_ids))
        if best is None or cand < best:
            best = cand
    return VerifyResult(best is None, best)


def _semistrong_offender(g: Graph, edge_ids: list[int]) -> int:
    if not _is_matching(g, edge_ids):
        return _first_offender_matching(g, edge_ids)
    deg = _induced_degrees(g, edge_ids)
    for e in edge_ids:
        u, v = g.edges[e]
        if deg[u] != 1 and deg[v] != 1:
            return e
    raise AssertionError("offender requested for a valid class")


def _induced_offender(g: Graph, edge_ids: list[int]) -> int:
    if not _is_matching(g, edge_ids):
        return _first_offender_matching(g, edge_ids)
    deg = _induced_degrees(g, edge_ids)
    for e in edge_ids:
        u, v = g.edges[e]
        if deg[u] != 1 or deg[v] != 1:
            return e
    raise AssertionError("offender requested for a valid class")


def verify_semistrong(g: Graph, c: Coloring) -> VerifyResult:
    """Every color class is a semistrong matching."""
    return _check_classes(g, c, is_semistrong_matching, _semistrong_offender)


def verify_strong(g: Graph, c: Coloring) -> VerifyResult:
    """Every color class is an induced matching."""
    return _check_classes(g, c, is_induced_matching, _induced_offender)


def verify_relaxed(g: Graph, c: Coloring, s: int, t: int) -> VerifyResult:
    """Per edge: at most s same-colored 1-neighbors and at most t same-colored
    2-neighbors. (0,0) coincides with verify_strong."""
    if s < 0 or t < 0:
        raise ValueError(f"s,t must be >= 0, got ({s},{t})")
    if len(c.colors) != len(g.edges):
        raise ValueError(f"coloring has {len(c.colors)} entries for {len(g.edges)} edges")
    best: tuple[int, int] | None = None
    for e in range(len(g.edges)):
        nb = compute_neighborhood(g, e)
        ce = c.colors[e]
        d1 = sum(1 for f in nb.n1 if c.colors[f] == ce)
        d2 = sum(1 for f in nb.n2 if c.colors[f] == ce)
        if d1 > s or d2 > t:
            cand = (ce, e)
            if best is None or cand < best:
                best = cand
    return VerifyResult(best is None, best)


def is_good_coloring(g: Graph, c: Coloring) -> bool:
    """True iff no edge shares its color with any edge of its forbidden set."""
    if len(c.colors) != len(g.edges):
        raise ValueError(f"coloring has {len(c.colors)} entries for {len(g.edges)} edges")
    for e in range(len(g.edges)):
        nb = compute_neighborhood(g, e)
        ce = c.colors[e]
        if any(c.colors[f] == ce for f in nb.f_set):
            return False
    return True


@dataclass(frozen=True)
class BadnessReport:
    """Bad edges have >= 2 same-colored 2-neighbors; bad pairs are unordered
    same-colored distance-2 pairs. kappa1/kappa2 count them."""

    kappa1: int
    kappa2: int
    per_color_kappa1: dict[int, int]
    per_color_kappa2: dict[int, int]
    bad_edges: tuple[int, ...]
    bad_pairs: tuple[tuple[int, int], ...]

    @property
    def potential(self) -> tuple[int, int]:
        return (self.kappa1, self.kappa2)


def badness(g: Graph, c: Coloring) -> BadnessReport:
    if len(c.colors) != len(g.edges):
        raise ValueError(f"coloring has {len(c.colors)} entries for {len(g.edges)} edges")
    bad_edges: list[int] = []
    bad_pairs: list[tuple[int, int]] = []
    per1: dict[int, int] = {}
    per2: dict[int, int] = {}
    for e in range(len(g.edges)):
        nb = compute_neighborhood(g, e)
        ce = c.colors[e]
        same = [f for f in nb.n2 if c.colors[f] == ce]
        if len(same) >= 2:
            bad_edges.append(e)
            per1[ce] = per1.get(ce, 0) + 1
        for f in same:
            if e < f:
                bad_pairs.append((e, f))
                per2[ce] = per2.get(ce, 0) + 1
    bad_pairs.sort()
    return BadnessReport(
        kappa1=len(bad_edges),
        kappa2=len(bad_pairs),
        per_color_kappa1=per1,
        per_color_kappa2=per2,
        bad_edges=tuple(bad_edges),
        bad_pairs=tuple(bad_pairs),
    )
