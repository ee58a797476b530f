"""Graph ingestion and result serialization.

Edge-list format: a header line "n m", then m lines "u v" (0-indexed),
whitespace separated; '#' starts a comment anywhere on a line.

graph6: the standard one-line ASCII encoding (size prefix, then the upper
triangle column by column, six bits per character, offset 63).

Results are emitted as JSON with a stable envelope: n, edges, colors,
colors_used, mode, valid, trace, kappa1, kappa2, plus emission-specific
extras. Colors are 1-based and follow input edge order.
"""

from __future__ import annotations

import json
from typing import Any

from .coloring import Coloring, from_list
from .exact import ExactResult
from .graph import Graph, build_graph
from .solver import ComponentTrace, SolveResult
from .verify import BadnessReport, badness as compute_badness


class FormatError(ValueError):
    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


def parse_edge_list(text: str) -> Graph:
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("malformed_header", "empty input; expected a 'n m' header line")
    header = rows[0]
    if len(header) != 2:
        raise FormatError("malformed_header", f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError("malformed_header", f"header must be two integers, got {' '.join(header)!r}") from exc
    body = rows[1:]
    if len(body) != m:
        raise FormatError("count_mismatch", f"header declares {m} edges but {len(body)} edge lines follow")
    pairs = []
    for row in body:
        if len(row) != 2:
            raise FormatError("bad_edge_line", f"edge lines must be 'u v', got {' '.join(row)!r}")
        try:
            pairs.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise FormatError("bad_edge_line", f"edge endpoints must be integers, got {' '.join(row)!r}") from exc
    return build_graph(n, pairs)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _graph6_size(line: str) -> tuple[int, int]:
    """(vertex count, payload start index)."""
    if not line:
        raise FormatError("truncated_graph6", "empty graph6 line")
    first = ord(line[0])
    if first == 126:
        if len(line) >= 2 and ord(line[1]) == 126:
            if len(line) < 8:
                raise FormatError("truncated_graph6", "8-byte size prefix cut short")
            digits = [ord(ch) - 63 for ch in line[2:8]]
            if any(d < 0 or d > 63 for d in digits):
                raise FormatError("invalid_graph6", "size prefix holds characters outside [63,126]")
            n = 0
            for d in digits:
                n = (n << 6) | d
            return n, 8
        if len(line) < 4:
            raise FormatError("truncated_graph6", "4-byte size prefix cut short")
        digits = [ord(ch) - 63 for ch in line[1:4]]
        if any(d < 0 or d > 63 for d in digits):
            raise FormatError("invalid_graph6", "size prefix holds characters outside [63,126]")
        return (digits[0] << 12) | (digits[1] << 6) | digits[2], 4
    if not 63 <= first <= 125:
        raise FormatError("invalid_graph6", f"bad leading character {line[0]!r}")
    return first - 63, 1


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' header allowed)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    n, start = _graph6_size(s)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = s[start:]
    if len(payload) < need:
        raise FormatError("truncated_graph6", f"need {need} payload characters for n={n}, got {len(payload)}")
    if len(payload) > need:
        raise FormatError("invalid_graph6", f"{len(payload) - need} trailing characters after the payload")
    bits: list[int] = []
    for ch in payload:
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise FormatError("invalid_graph6", f"payload character {ch!r} outside [63,126]")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    pairs = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                pairs.append((i, j))
            idx += 1
    return build_graph(n, pairs)


def emit_graph6(g: Graph) -> str:
    n = g.vertex_count
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    else:
        raise FormatError("too_large", f"graph6 encoding beyond 258047 vertices not supported (n={n})")
    present = {(min(u, v), max(u, v)) for u, v in g.edges}
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    payload = "".join(
        chr(sum(bit << shift for bit, shift in zip(bits[k : k + 6], range(5, -1, -1))) + 63)
        for k in range(0, len(bits), 6)
    )
    return prefix + payload


def _trace_json(trace: ComponentTrace) -> dict[str, Any]:
    return {
        "strategy": trace.strategy,
        "vertices": trace.vertices,
        "edges": trace.edges,
        "delta": trace.delta,
        "colors_used": trace.colors_used,
        "exceeds_bound": trace.exceeds_bound,
        "moves_by_schema": dict(sorted(trace.moves_by_schema.items())),
        "fallback_f3": trace.fallback_f3,
        "kappa_trajectory_len": len(trace.kappa_trajectory),
    }


def _envelope(g: Graph, colors, mode, valid) -> dict[str, Any]:
    return {
        "n": g.vertex_count,
        "edges": [[u, v] for u, v in g.edges],
        "colors": list(colors) if colors is not None else None,
        "colors_used": len(set(colors)) if colors else (0 if colors is not None else None),
        "mode": mode,
        "valid": valid,
        "trace": None,
        "kappa1": None,
        "kappa2": None,
    }


def emit_result(g: Graph, result: SolveResult | ExactResult | BadnessReport, **meta) -> str:
    """Serialize a solve result, an exact-search result, or a badness audit.

    For exact results pass mode/s/t via meta; for badness audits pass the
    audited coloring as meta['coloring'].
    """
    if isinstance(result, SolveResult):
        doc = _envelope(g, result.coloring.colors, result.mode, result.certificates[_mode_key(result.mode)])
        rep = compute_badness(g, result.coloring)
        doc["kappa1"] = rep.kappa1
        doc["kappa2"] = rep.kappa2
        doc["trace"] = [_trace_json(t) for t in result.trace]
        doc["certificates"] = dict(sorted(result.certificates.items()))
    elif isinstance(result, ExactResult):
        colors = result.certificate.colors if result.certificate is not None else None
        doc = _envelope(g, colors, meta.get("mode"), result.value is not None)
        doc["value"] = result.value
        doc["proof"] = result.proof
        doc["nodes"] = result.nodes
        if result.certificate is not None:
            rep = compute_badness(g, result.certificate)
            doc["kappa1"] = rep.kappa1
            doc["kappa2"] = rep.kappa2
        if meta.get("mode") == "relaxed":
            doc["s"] = meta.get("s", 0)
            doc["t"] = meta.get("t", 0)
    elif isinstance(result, BadnessReport):
        coloring: Coloring | None = meta.get("coloring")
        colors = coloring.colors if coloring is not None else None
        doc = _envelope(g, colors, meta.get("mode"), meta.get("valid"))
        doc["kappa1"] = result.kappa1
        doc["kappa2"] = result.kappa2
        doc["per_color_kappa1"] = {str(k): v for k, v in sorted(result.per_color_kappa1.items())}
        doc["per_color_kappa2"] = {str(k): v for k, v in sorted(result.per_color_kappa2.items())}
        doc["bad_edges"] = list(result.bad_edges)
        doc["bad_pairs"] = [list(p) for p in result.bad_pairs]
    else:
        raise TypeError(f"cannot emit {type(result).__name__}")
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _mode_key(mode: str) -> str:
    return "semistrong" if mode == "semistrong" else "relaxed01"


def parse_coloring(text: str) -> Coloring:
    """Read back a coloring from emitted JSON (or any JSON with 'colors')."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("bad_json", f"coloring file is not valid JSON: {exc}") from exc
    colors = doc.get("colors")
    if not isinstance(colors, list) or any(not isinstance(c, int) for c in colors):
        raise FormatError("bad_coloring", "JSON field 'colors' must be a list of integers")
    return from_list(colors)
