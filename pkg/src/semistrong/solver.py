"""Greedy good coloring plus a repair engine that drives the bad-edge count
to zero under the lexicographic (kappa1, kappa2) potential.

A *good* coloring keeps every edge's color off its forbidden set; its only
same-colored distance-2 contacts are single-cross-edge (T6) pairs. The
repair engine removes bad edges (edges with two or more such contacts) by
searching move schemas in a fixed order:

  S1  recolor the bad edge itself
  S2  recolor a 1-neighbor, then give the bad edge that neighbor's old color
  S4  swap the bad edge's color with a 1-neighbor's
  S3  shift colors along an induced path rooted at the bad edge
  S5  the two-pendant + displaced-edge rewrite (edge-cut pair shape)
  S6  the four/five-edge rewrites around a non-adjacent pendant pair
  S7  the five-edge rewrite with two singleton pendant contacts
  F1  any single-edge recoloring
  F2  any recoloring of two edges near a bad edge

Every candidate is exact-checked: it is accepted only if it preserves
goodness and strictly lowers (kappa1, kappa2) lexicographically, so imperfect
schema contexts degrade into skipped candidates, never into bad moves.
When no schema and no fallback applies, repair defers to the exact
feasibility search (F3) and records the event; on the qualifying inputs this
is never expected to happen.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import exact
from .coloring import Coloring, from_list
from .construct import color_g_family, color_kdd_relaxed_graph, color_kdd_semistrong_graph, cycle_pattern
from .graph import (
    Graph,
    GraphError,
    bfs_edge_order,
    connected_components,
    g_family_witness,
    is_complete_bipartite_dd,
    max_degree,
)
from .neighborhood import PairType, compute_neighborhood
from .verify import badness, is_good_coloring, verify_relaxed, verify_semistrong

MODES = ("semistrong", "relaxed01")
MAX_SHIFT_PATH_EDGES = 8


class PaletteExhaustedError(ValueError):
    """Greedy ran out of colors; ``edge`` is the stuck edge."""

    def __init__(self, edge: int, palette_size: int):
        super().__init__(f"no color in [1,{palette_size}] is available for edge {edge}")
        self.edge = edge
        self.palette_size = palette_size


class EngineInvariantError(RuntimeError):
    """A proven consequence of schema exhaustion failed; indicates a bug."""


@dataclass(frozen=True)
class MoveProposal:
    assignments: tuple[tuple[int, int], ...]  # (edge, new color), edge-sorted
    schema: str
    predicted_potential: tuple[int, int]


@dataclass
class RepairStats:
    moves_by_schema: dict[str, int] = field(default_factory=dict)
    fallback_f3: int = 0
    kappa_trajectory: list[tuple[int, int]] = field(default_factory=list)


@dataclass
class ComponentTrace:
    strategy: str  # trivial | delta2 | kdd | g_family | greedy_repair
    vertices: int
    edges: int
    delta: int
    colors_used: int
    exceeds_bound: bool
    moves_by_schema: dict[str, int] = field(default_factory=dict)
    fallback_f3: int = 0
    kappa_trajectory: list[tuple[int, int]] = field(default_factory=list)


@dataclass
class SolveResult:
    coloring: Coloring
    colors_used: int
    mode: str
    trace: list[ComponentTrace]
    certificates: dict[str, bool]


def greedy_good_coloring(g: Graph, palette_size: int) -> Coloring:
    """Color edges in breadth-first order, always taking the smallest color
    absent from the forbidden set. Raises PaletteExhaustedError when an edge
    has no color left (only possible when some |f_set| >= palette_size)."""
    if palette_size < 1:
        raise ValueError(f"palette_size must be >= 1, got {palette_size}")
    colors = [0] * g.edge_count
    for e in bfs_edge_order(g):
        used = {colors[f] for f in compute_neighborhood(g, e).f_set if colors[f]}
        chosen = next((c for c in range(1, palette_size + 1) if c not in used), None)
        if chosen is None:
            raise PaletteExhaustedError(e, palette_size)
        colors[e] = chosen
    return from_list(colors, palette_size)


class _Engine:
    """Mutable coloring state with incremental (kappa1, kappa2) accounting."""

    def __init__(self, g: Graph, coloring: Coloring, debug: bool = False, enforce_invariants: bool | None = None):
        self.g = g
        self.k = coloring.k
        self.debug = debug
        self.colors = list(coloring.colors)
        m = g.edge_count
        self.nbs = [compute_neighborhood(g, e) for e in range(m)]
        self.n2 = [tuple(sorted(nb.n2)) for nb in self.nbs]
        self.cnt2 = [
            sum(1 for f in self.n2[e] if self.colors[f] == self.colors[e]) for e in range(m)
        ]
        self.kappa1 = sum(1 for c in self.cnt2 if c >= 2)
        self.sum_pairs = sum(self.cnt2)  # == 2 * kappa2
        self.delta = max_degree(g)
        if enforce_invariants is None:
            enforce_invariants = self.delta >= 3 and self.k == self.delta * self.delta - 1
        self.enforce_invariants = enforce_invariants

    # -- potential bookkeeping -------------------------------------------

    def potential(self) -> tuple[int, int]:
        return (self.kappa1, self.sum_pairs // 2)

    def to_coloring(self) -> Coloring:
        return from_list(self.colors, self.k)

    def bad_edges(self) -> list[int]:
        return [e for e in range(self.g.edge_count) if self.cnt2[e] >= 2]

    def _new_color(self, h: int, x: dict[int, int]) -> int:
        c = x.get(h)
        return self.colors[h] if c is None else c

    def evaluate(self, assignments: dict[int, int]):
        """(kappa1', kappa2') after the move, or None if it breaks goodness
        or is a no-op. Does not mutate."""
        x = {e: c for e, c in assignments.items() if self.colors[e] != c}
        if not x:
            return None
        for e, ce in x.items():
            if not 1 <= ce <= self.k:
                return None
            for h in self.nbs[e].f_set:
                if self._new_color(h, x) == ce:
                    return None
        affected = set(x)
        for e in x:
            affected.update(self.n2[e])
        k1 = self.kappa1
        s2 = self.sum_pairs
        for f in affected:
            fc = self._new_color(f, x)
            new_cnt = sum(1 for h in self.n2[f] if self._new_color(h, x) == fc)
            old_cnt = self.cnt2[f]
            k1 += (new_cnt >= 2) - (old_cnt >= 2)
            s2 += new_cnt - old_cnt
        return (k1, s2 // 2)

    def apply(self, move: MoveProposal):
        x = dict(move.assignments)
        affected = set(x)
        for e in x:
            affected.update(self.n2[e])
        for e, c in x.items():
            self.colors[e] = c
        for f in affected:
            fc = self.colors[f]
            new_cnt = sum(1 for h in self.n2[f] if self.colors[h] == fc)
            self.kappa1 += (new_cnt >= 2) - (self.cnt2[f] >= 2)
            self.sum_pairs += new_cnt - self.cnt2[f]
            self.cnt2[f] = new_cnt
        if self.debug:
            self._debug_check(move)

    def _debug_check(self, move: MoveProposal):
        coloring = self.to_coloring()
        if not is_good_coloring(self.g, coloring):
            raise EngineInvariantError(f"move {move.schema} {move.assignments} broke goodness")
        rep = badness(self.g, coloring)
        if rep.potential != self.potential():
            raise EngineInvariantError(
                f"incremental potential {self.potential()} disagrees with full recomputation "
                f"{rep.potential} after {move.schema} {move.assignments}"
            )
        if rep.potential != move.predicted_potential:
            raise EngineInvariantError(
                f"predicted potential {move.predicted_potential} wrong, actual {rep.potential}"
            )

    def _propose(self, assignments: dict[int, int], schema: str) -> MoveProposal | None:
        result = self.evaluate(assignments)
        if result is None or result >= self.potential():
            return None
        return MoveProposal(tuple(sorted(assignments.items())), schema, result)

    # -- schema candidate generators --------------------------------------

    def _s1_candidates(self, e: int):
        nb = self.nbs[e]
        f_colors = {self.colors[f] for f in nb.f_set}
        t6_count: dict[int, int] = {}
        for f in nb.t6:
            t6_count[self.colors[f]] = t6_count.get(self.colors[f], 0) + 1
        for alpha in range(1, self.k + 1):
            if alpha not in f_colors and t6_count.get(alpha, 0) <= 1:
                yield {e: alpha}

    def _s2_candidates(self, e: int):
        for f in sorted(self.nbs[e].n1):
            nbf = self.nbs[f]
            forb = {self.colors[h] for h in nbf.f_set} | {self.colors[f]}
            t6_count: dict[int, int] = {}
            for h in nbf.t6:
                t6_count[self.colors[h]] = t6_count.get(self.colors[h], 0) + 1
            alpha1 = self.colors[f]
            for alpha in range(1, self.k + 1):
                if alpha not in forb and t6_count.get(alpha, 0) <= 1:
                    yield {f: alpha, e: alpha1}

    def _s4_candidates(self, e: int):
        for h in sorted(self.nbs[e].n1):
            yield {e: self.colors[h], h: self.colors[e]}

    def _s3_candidates(self, e: int):
        g = self.g
        u, v = g.edges[e]
        for path in ([u, v], [v, u]):
            yield from self._s3_grow(path, [e])

    def _s3_grow(self, path: list[int], edges: list[int]):
        g = self.g
        if len(edges) >= 2:
            last = edges[-1]
            nb = self.nbs[last]
            m_edges = ((nb.n1 | {last}) - {edges[-2]}) | nb.side_n2(path[-1])
            used = {self.colors[h] for h in m_edges}
            free = [a for a in range(1, self.k + 1) if a not in used]
            if free:
                for alpha in free:
                    move = {edges[i]: self.colors[edges[i + 1]] for i in range(len(edges) - 1)}
                    move[edges[-1]] = alpha
                    yield move
                return  # a non-tight forbidden set stops the growth here
        if len(edges) >= MAX_SHIFT_PATH_EDGES:
            return
        tip = path[-1]
        for w in sorted(g.neighbors(tip)):
            if w in path or any(g.has_edge(w, x) for x in path[:-1]):
                continue
            nxt = g.edge_between(tip, w)
            assert nxt is not None
            yield from self._s3_grow(path + [w], edges + [nxt])

    def _same_colored_pair(self, e: int):
        """The two same-colored 2-neighbors split by side, or None when the
        shape does not match (one per side, single cross vertex each)."""
        g = self.g
        nb = self.nbs[e]
        same = [f for f in sorted(nb.n2) if self.colors[f] == self.colors[e]]
        if len(same) != 2:
            return None
        sides = []
        for f in same:
            near = [
                (w, x)
                for x in g.edges[f]
                for w in (nb.u, nb.v)
                if g.has_edge(w, x)
            ]
            if len(near) != 1:
                return None  # not a single-cross-edge contact
            sides.append((near[0][0], near[0][1], f))
        (w1, x1, f1), (w2, x2, f2) = sides
        if {w1, w2} != {nb.u, nb.v}:
            return None
        if w1 == nb.u:
            return (x1, f1, x2, f2)  # (u-side cross vertex, edge, v-side cross vertex, edge)
        return (x2, f2, x1, f1)

    def _s5_candidates(self, e: int):
        g = self.g
        nb = self.nbs[e]
        pair = self._same_colored_pair(e)
        if pair is None:
            return
        u1, e1, v1, e2 = pair
        if nb.t6 != {e1, e2}:
            return
        f1 = g.edge_between(nb.u, u1)
        f2 = g.edge_between(nb.v, v1)
        if f1 is None or f2 is None:
            return
        alpha1 = self.colors[f1]
        alpha2 = self.colors[f2]
        x1 = next(x for x in g.edges[e1] if x != u1)
        y1 = next(x for x in g.edges[e2] if x != v1)
        blocked = {self.colors[h] for h in g.incident_edges(x1)}
        blocked |= {self.colors[h] for h in g.incident_edges(y1)}
        blocked |= {alpha1, alpha2}
        for alpha in range(1, self.k + 1):
            if alpha in blocked:
                continue
            for gedge in sorted(nb.f_set):
                if self.colors[gedge] != alpha:
                    continue
                if e1 not in self.nbs[gedge].n1:
                    yield {f1: alpha, f2: alpha, gedge: alpha2, e: alpha1}
                if e2 not in self.nbs[gedge].n1:
                    yield {f1: alpha, f2: alpha, gedge: alpha1, e: alpha2}

    def _t6_through(self, e: int, w: int) -> list[int]:
        """T6 contacts of e whose cross vertex is w."""
        return [f for f in sorted(self.nbs[e].t6) if w in self.g.edges[f]]

    def _s6_candidates(self, e: int):
        g = self.g
        nb = self.nbs[e]
        for a, b in ((nb.u, nb.v), (nb.v, nb.u)):
            for a1 in sorted(w for w in g.neighbors(a) if w != b):
                g1 = g.edge_between(a, a1)
                for b1 in sorted(w for w in g.neighbors(b) if w != a):
                    if g.has_edge(a1, b1):
                        continue
                    through_b1 = self._t6_through(e, b1)
                    if len(through_b1) < 2:
                        continue
                    g2 = g.edge_between(b, b1)
                    beta1 = self.colors[g1]
                    beta2 = self.colors[g2]
                    if beta1 == beta2:
                        continue
                    h1s = [h for h in sorted(self.nbs[g1].side_n2(a1)) if self.colors[h] == beta2]
                    h2s = [h for h in sorted(self.nbs[g2].side_n2(b1)) if self.colors[h] == beta1]
                    if len(h1s) != 1 or len(h2s) != 1:
                        continue
                    h1 = h1s[0]
                    h2 = h2s[0]
                    s1 = next((x for x in g.edges[h1] if g.has_edge(a1, x)), None)
                    s2 = next((x for x in g.edges[h2] if g.has_edge(b1, x)), None)
                    if s1 is None or s2 is None:
                        continue
                    t1 = next(x for x in g.edges[h1] if x != s1)
                    f2 = g.edge_between(b1, s2)
                    if f2 is None or f2 == g2 or f2 not in nb.t6:
                        continue
                    alpha2 = self.colors[f2]
                    for f3 in through_b1:
                        if f3 == f2:
                            continue
                        s3 = next(x for x in g.edges[f3] if x != b1)
                        p1s = [h for h in sorted(self.nbs[f2].side_n2(s2)) if self.colors[h] == beta2]
                        p2s = [h for h in sorted(self.nbs[f3].side_n2(s3)) if self.colors[h] == beta2]
                        if p1s != [h1]:
                            yield {g1: beta2, f2: beta2, g2: beta1, e: alpha2}
                        if p2s != [h1]:
                            yield {g1: beta2, f3: beta2, g2: beta1, e: self.colors[f3]}
                        if p1s == [h1] and p2s == [h1]:
                            st = g.edge_between(s3, t1)
                            if st is not None:
                                yield {g1: beta2, g2: beta1, e: alpha2, st: alpha2, f2: self.colors[st]}

    def _s7_candidates(self, e: int):
        g = self.g
        nb = self.nbs[e]
        pair = self._same_colored_pair(e)
        if pair is None:
            return
        u1, e1, v1, e2 = pair
        for a, b, a1, ea in ((nb.u, nb.v, u1, e1), (nb.v, nb.u, v1, e2)):
            fa1 = g.edge_between(a, a1)
            if fa1 is None or self._t6_through(e, a1) != [ea]:
                continue
            alpha1 = self.colors[fa1]
            for a2 in sorted(w for w in g.neighbors(a) if w not in (b, a1)):
                if len(self._t6_through(e, a2)) != 1:
                    continue
                aa2 = g.edge_between(a, a2)
                for b2 in sorted(w for w in g.neighbors(b) if w != a):
                    if g.has_edge(a2, b2) or len(self._t6_through(e, b2)) != 1:
                        continue
                    bb2 = g.edge_between(b, b2)
                    for b3 in sorted(w for w in g.neighbors(b) if w not in (a, b2)):
                        if g.has_edge(a1, b3) or len(self._t6_through(e, b3)) != 1:
                            continue
                        bb3 = g.edge_between(b, b3)
                        alpha5 = self.colors[bb3]
                        yield {
                            e: alpha1,
                            aa2: alpha5,
                            bb2: alpha5,
                            fa1: self.colors[aa2],
                            bb3: self.colors[bb2],
                        }

    def _f1_candidates(self):
        for e in range(self.g.edge_count):
            for alpha in range(1, self.k + 1):
                if alpha != self.colors[e]:
                    yield {e: alpha}

    def _f2_candidates(self, bad: list[int]):
        ball: set[int] = set()
        for e in bad:
            nb = self.nbs[e]
            ball.add(e)
            ball.update(nb.n1)
            ball.update(nb.n2)
        edges = sorted(ball)
        for i, x in enumerate(edges):
            for y in edges[i + 1 :]:
                for ax in range(1, self.k + 1):
                    for ay in range(1, self.k + 1):
                        if ax != self.colors[x] or ay != self.colors[y]:
                            yield {x: ax, y: ay}

    # -- schema-exhaustion invariants --------------------------------------

    def _fail(self, e: int, what: str):
        raise EngineInvariantError(
            f"bad edge {e}: {what} must hold once the shallow schemas are exhausted "
            f"(graph n={self.g.vertex_count} m={self.g.edge_count}, palette {self.k})"
        )

    def _assert_stage1(self, bad: list[int]):
        """Consequences of S1 exhaustion for every bad edge."""
        g = self.g
        for e in bad:
            nb = self.nbs[e]
            same = [f for f in nb.n2 if self.colors[f] == self.colors[e]]
            if len(same) != 2 or any(f not in nb.t6 for f in same):
                self._fail(e, "exactly two same-colored contacts, both single-cross")
            if len(nb.t6) % 2 != 0:
                self._fail(e, "an even number of single-cross contacts")
            f_colors = [self.colors[f] for f in nb.f_set]
            if len(set(f_colors)) != len(f_colors):
                self._fail(e, "all forbidden-set edges distinctly colored")
            if set(f_colors) & {self.colors[f] for f in nb.t6}:
                self._fail(e, "forbidden-set colors disjoint from single-cross colors")
            if nb.c_delta:
                self._fail(e, "no triangle 1-neighbors")
            if len(nb.f_set) != self.k - len(nb.t6) // 2:
                self._fail(e, "forbidden set of size palette minus half the T6 count")
            for w in set(g.neighbors(nb.u)) | set(g.neighbors(nb.v)):
                if g.degree(w) != self.delta:
                    self._fail(e, "all endpoint neighbors of maximum degree")

    def _assert_stage2(self, bad: list[int]):
        """Additional consequences of S2 exhaustion."""
        for e in bad:
            nb = self.nbs[e]
            same = [f for f in nb.n2 if self.colors[f] == self.colors[e]]
            if sum(1 for f in same if f in nb.n2_u) != 1 or sum(1 for f in same if f in nb.n2_v) != 1:
                self._fail(e, "one same-colored contact on each side")
            if nb.type_class(PairType.T5):
                self._fail(e, "no two-cross contacts through the edge's own endpoints")

    def _assert_stage3(self, bad: list[int]):
        """Additional consequences of S4 exhaustion."""
        for e in bad:
            nb = self.nbs[e]
            t6u = nb.t6 & nb.n2_u
            t6v = nb.t6 & nb.n2_v
            if len(t6u) != len(t6v):
                self._fail(e, "side-balanced single-cross contacts")
            if len({self.colors[f] for f in t6u}) != len(t6u):
                self._fail(e, "distinct colors on u-side single-cross contacts")
            if len({self.colors[f] for f in t6v}) != len(t6v):
                self._fail(e, "distinct colors on v-side single-cross contacts")
            for side in (nb.n2_u, nb.n2_v):
                region = nb.n1 | side
                if len(region) != self.k or len({self.colors[f] for f in region}) != self.k:
                    self._fail(e, "a full rainbow on N(e) plus either side's 2-neighbors")

    # -- search -------------------------------------------------------------

    def find_move(self) -> MoveProposal | None:
        bad = self.bad_edges()
        if not bad:
            return None
        per_edge = [
            ("S1", self._s1_candidates, self._assert_stage1),
            ("S2", self._s2_candidates, self._assert_stage2),
            ("S4", self._s4_candidates, self._assert_stage3),
            ("S3", self._s3_candidates, None),
            ("S5", self._s5_candidates, None),
            ("S6", self._s6_candidates, None),
            ("S7", self._s7_candidates, None),
        ]
        for schema, gen, post_assert in per_edge:
            for e in bad:
                for assignments in gen(e):
                    move = self._propose(assignments, schema)
                    if move is not None:
                        return move
            if post_assert is not None and self.enforce_invariants:
                post_assert(bad)
        for assignments in self._f1_candidates():
            move = self._propose(assignments, "F1")
            if move is not None:
                return move
        for assignments in self._f2_candidates(bad):
            move = self._propose(assignments, "F2")
            if move is not None:
                return move
        return None


def find_improving_move(g: Graph, c: Coloring) -> MoveProposal | None:
    """One strictly-improving move for a good coloring with bad edges, or
    None when every schema and fallback comes up empty."""
    if not is_good_coloring(g, c):
        raise ValueError("find_improving_move requires a good coloring")
    engine = _Engine(g, c)
    if engine.kappa1 == 0:
        raise ValueError("coloring has no bad edges; nothing to improve")
    return engine.find_move()


def _check_repair_preconditions(g: Graph, c: Coloring):
    if not is_good_coloring(g, c):
        raise ValueError("repair requires a good coloring")
    if len(connected_components(g)) != 1:
        raise GraphError("disconnected", "repair runs on one connected component at a time")
    if max_degree(g) < 3:
        raise ValueError("repair requires maximum degree >= 3")
    if g_family_witness(g) is not None:
        raise GraphError("g_family", "covering-edge family graphs take the dedicated construction")


def _repair_engine(g: Graph, c: Coloring, debug: bool, mode: str) -> tuple[Coloring, RepairStats]:
    engine = _Engine(g, c, debug=debug)
    stats = RepairStats(kappa_trajectory=[engine.potential()])
    while engine.kappa1 > 0:
        move = engine.find_move()
        if move is None:
            stats.fallback_f3 += 1
            result = _f3_fallback(g, mode, engine.k)
            return result, stats
        before = engine.potential()
        engine.apply(move)
        after = engine.potential()
        if after >= before:
            raise EngineInvariantError(f"move {move.schema} did not lower the potential: {before} -> {after}")
        stats.moves_by_schema[move.schema] = stats.moves_by_schema.get(move.schema, 0) + 1
        stats.kappa_trajectory.append(after)
    return engine.to_coloring(), stats


def _f3_fallback(g: Graph, mode: str, k: int) -> Coloring:
    if mode == "relaxed01":
        res = exact.feasibility(g, "relaxed", k, s=0, t=1)
    else:
        res = exact.feasibility(g, "semistrong", k)
    if res.status != "sat" or res.coloring is None:
        raise EngineInvariantError(
            f"exact fallback could not certify {k} colors in {mode} mode; "
            "the repair engine and the feasibility search disagree"
        )
    return res.coloring


def repair(g: Graph, c: Coloring, debug: bool = False, mode: str = "semistrong") -> Coloring:
    """Drive a good coloring to zero bad edges on a connected graph with
    maximum degree >= 3 outside the covering-edge family. The palette is
    kept; an already-clean coloring is returned unchanged."""
    _check_repair_preconditions(g, c)
    result, _ = _repair_engine(g, c, debug, mode)
    return result


def _walk_path(comp: Graph) -> list[int]:
    start = min(v for v in range(comp.vertex_count) if comp.degree(v) == 1)
    seq = [start]
    prev = -1
    while len(seq) < comp.vertex_count:
        nxt = next(w for w in comp.neighbors(seq[-1]) if w != prev)
        prev = seq[-1]
        seq.append(nxt)
    return seq


def _walk_cycle(comp: Graph) -> list[int]:
    seq = [0, min(comp.neighbors(0))]
    while len(seq) < comp.vertex_count:
        nxt = next(w for w in comp.neighbors(seq[-1]) if w != seq[-2])
        seq.append(nxt)
    return seq


def _color_delta2_component(comp: Graph, mode: str) -> list[int]:
    is_cycle = all(comp.degree(v) == 2 for v in range(comp.vertex_count))
    colors = [0] * comp.edge_count
    if is_cycle:
        seq = _walk_cycle(comp)
        pattern = cycle_pattern(comp.vertex_count, relaxed=(mode == "relaxed01"))
        for i in range(len(seq)):
            e = comp.edge_between(seq[i], seq[(i + 1) % len(seq)])
            colors[e] = pattern[i]
    else:
        seq = _walk_path(comp)
        for i in range(len(seq) - 1):
            e = comp.edge_between(seq[i], seq[i + 1])
            colors[e] = (i % 3) + 1
    return colors


def _solve_component(comp: Graph, mode: str, debug: bool) -> tuple[list[int], ComponentTrace]:
    d = max_degree(comp)
    stats = RepairStats()
    if comp.edge_count == 0:
        strategy, colors = "trivial", []
    elif d <= 1:
        strategy, colors = "trivial", [1]
    elif d == 2:
        strategy, colors = "delta2", _color_delta2_component(comp, mode)
    elif is_complete_bipartite_dd(comp, d):
        strategy = "kdd"
        if mode == "semistrong":
            colors = list(color_kdd_semistrong_graph(comp, d).colors)
        else:
            colors = list(color_kdd_relaxed_graph(comp, d).colors)
    elif (witness := g_family_witness(comp)) is not None:
        strategy, colors = "g_family", list(color_g_family(comp, witness).colors)
    else:
        strategy = "greedy_repair"
        start = greedy_good_coloring(comp, d * d - 1)
        repaired, stats = _repair_engine(comp, start, debug, mode)
        colors = list(repaired.colors)
    used = len(set(colors))
    bound = 1 if d <= 1 else (3 if d == 2 else d * d - 1)
    return colors, ComponentTrace(
        strategy=strategy,
        vertices=comp.vertex_count,
        edges=comp.edge_count,
        delta=d,
        colors_used=used,
        exceeds_bound=used > bound,
        moves_by_schema=stats.moves_by_schema,
        fallback_f3=stats.fallback_f3,
        kappa_trajectory=stats.kappa_trajectory,
    )


def solve(g: Graph, mode: str, debug: bool = False) -> SolveResult:
    """Color any simple graph per-component and verify the result.

    Components reuse palettes (colors are shared across components), so the
    total color count is the maximum over components.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    colors = [0] * g.edge_count
    traces: list[ComponentTrace] = []
    for view in connected_components(g):
        local_colors, trace = _solve_component(view.graph, mode, debug)
        for le, pe in enumerate(view.edge_map):
            colors[pe] = local_colors[le]
        traces.append(trace)
    coloring = from_list(colors, max(colors, default=0))
    certificates = {
        "semistrong": verify_semistrong(g, coloring).ok,
        "relaxed01": verify_relaxed(g, coloring, 0, 1).ok,
    }
    mode_key = "semistrong" if mode == "semistrong" else "relaxed01"
    if not certificates[mode_key]:
        raise EngineInvariantError(f"solve produced an invalid {mode} coloring")
    return SolveResult(
        coloring=coloring,
        colors_used=coloring.distinct_colors(),
        mode=mode,
        trace=traces,
        certificates=certificates,
    )
