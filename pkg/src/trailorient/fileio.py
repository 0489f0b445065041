"""Text formats for instances and orientations.

An instance file carries the multigraph and its trail partition::

    n m
    u v        (one line per edge; append "d" for a pre-directed arc u->v)
    t
    k e_1 ... e_k   (one line per trail, edge ids in walk order)

Blank lines and lines starting with "#" are skipped.  Indices are 0-based.
Every undirected edge must sit in exactly one trail and directed edges in
none; violations are reported with their line number.

An orientation file is either the single line "INFEASIBLE" or a "FEASIBLE"
header followed by one line "edge_id tail head" per edge, ascending by id.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import (
    Direction,
    EdgeState,
    MultiGraph,
    Orientation,
    PartitionError,
    Trail,
    TrailPartition,
    check_trails,
)

__all__ = [
    "FormatError",
    "Instance",
    "parse_instance",
    "emit_instance",
    "parse_orientation",
    "emit_orientation",
]


class FormatError(ValueError):
    """Malformed instance or orientation text; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class Instance:
    """A parsed multigraph plus its trail partition."""

    graph: MultiGraph
    trails: TrailPartition


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            out.append((i, s))
    return out


def _ints(line_no: int, tokens: list[str], what: str) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise FormatError(line_no, f"{what}: expected integers, got {tokens!r}") from None


def parse_instance(text: str) -> Instance:
    """Parse instance text, validating the trail partition."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty instance")
    pos = 0

    line_no, header = lines[pos]
    pos += 1
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(line_no, 'header must be "n m"')
    n, m = _ints(line_no, parts, "header")
    if n < 0 or m < 0:
        raise FormatError(line_no, "n and m must be nonnegative")

    g = MultiGraph(n)
    for k in range(m):
        if pos >= len(lines):
            raise FormatError(lines[-1][0], f"expected {m} edge lines, found {k}")
        line_no, line = lines[pos]
        pos += 1
        parts = line.split()
        directed = False
        if len(parts) == 3 and parts[2] == "d":
            directed = True
            parts = parts[:2]
        if len(parts) != 2:
            raise FormatError(line_no, 'edge line must be "u v" or "u v d"')
        u, v = _ints(line_no, parts, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(line_no, f"edge endpoint out of range 0..{n - 1}")
        g.add_edge(u, v, EdgeState.FIXED_FORWARD if directed else EdgeState.UNDIRECTED)

    if pos >= len(lines):
        raise FormatError(lines[-1][0], "missing trail count line")
    line_no, line = lines[pos]
    pos += 1
    parts = line.split()
    if len(parts) != 1:
        raise FormatError(line_no, "trail count line must be a single integer")
    (t,) = _ints(line_no, parts, "trail count")
    if t < 0:
        raise FormatError(line_no, "trail count must be nonnegative")

    trails = []
    for k in range(t):
        if pos >= len(lines):
            raise FormatError(lines[-1][0], f"expected {t} trail lines, found {k}")
        line_no, line = lines[pos]
        pos += 1
        vals = _ints(line_no, line.split(), "trail")
        if not vals:
            raise FormatError(line_no, "empty trail line")
        count, edges = vals[0], vals[1:]
        if count != len(edges):
            raise FormatError(
                line_no, f"trail announces {count} edges but lists {len(edges)}"
            )
        if count == 0:
            raise FormatError(line_no, "trails must contain at least one edge")
        for e in edges:
            if not (0 <= e < m):
                raise FormatError(line_no, f"trail names unknown edge {e}")
            if g.edge(e).state is not EdgeState.UNDIRECTED:
                raise FormatError(line_no, f"trail contains pre-directed edge {e}")
        try:
            trails.append(Trail.from_edges(g, edges))
        except PartitionError as exc:
            raise FormatError(line_no, str(exc)) from None

    if pos < len(lines):
        raise FormatError(lines[pos][0], "trailing content after the last trail")

    partition = TrailPartition(trails)
    ok, reason = check_trails(g, partition)
    if not ok:
        raise FormatError(line_no if lines else 1, reason)
    return Instance(g, partition)


def emit_instance(inst: Instance) -> str:
    """Canonical text for an instance; parse(emit(x)) reproduces x."""
    g = inst.graph
    out = [f"{g.n} {g.num_edges_ever}"]
    for e in range(g.num_edges_ever):
        rec = g.edge(e)
        suffix = " d" if rec.state.is_directed else ""
        out.append(f"{rec.tail} {rec.head}{suffix}")
    out.append(str(len(inst.trails.trails)))
    for t in inst.trails.trails:
        out.append(" ".join([str(len(t.edges))] + [str(e) for e in t.edges]))
    return "\n".join(out) + "\n"


def parse_orientation(text: str, g: MultiGraph) -> Orientation | None:
    """Parse orientation text against graph ``g``; None encodes INFEASIBLE.

    Every line is checked against the edge endpoints of ``g`` and the line
    count against its edge count.  Arcs matching a pre-directed edge's fixed
    direction are accepted and skipped; contradicting one is an error.
    """
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty orientation file")
    line_no, header = lines[0]
    if header == "INFEASIBLE":
        if len(lines) > 1:
            raise FormatError(lines[1][0], "content after INFEASIBLE")
        return None
    if header != "FEASIBLE":
        raise FormatError(line_no, 'expected "FEASIBLE" or "INFEASIBLE"')
    body = lines[1:]
    if len(body) != g.num_edges_ever:
        raise FormatError(
            line_no, f"expected {g.num_edges_ever} arc lines, found {len(body)}"
        )
    o = Orientation()
    prev = -1
    for line_no, line in body:
        vals = _ints(line_no, line.split(), "arc")
        if len(vals) != 3:
            raise FormatError(line_no, 'arc line must be "edge_id tail head"')
        eid, a, b = vals
        if eid <= prev:
            raise FormatError(line_no, "edge ids must be strictly ascending")
        prev = eid
        if eid >= g.num_edges_ever:
            raise FormatError(line_no, f"unknown edge id {eid}")
        rec = g.edge(eid)
        tail, head = rec.tail, rec.head
        if rec.state.is_directed:
            want = (tail, head)
            if rec.state is EdgeState.ORIENTED_REVERSED:
                want = (head, tail)
            if (a, b) != want:
                raise FormatError(
                    line_no, f"edge {eid} is pre-directed {want[0]}->{want[1]}"
                )
            continue
        if (a, b) == (tail, head):
            o.assign(eid, Direction.FORWARD)
        elif (a, b) == (head, tail):
            o.assign(eid, Direction.REVERSED)
        else:
            raise FormatError(
                line_no, f"edge {eid} joins {tail} and {head}, not {a} and {b}"
            )
    return o


def emit_orientation(g: MultiGraph, o: Orientation | None) -> str:
    """Orientation text: INFEASIBLE for None, else every edge's final arc.

    Pre-directed edges report their fixed direction; assigned edges follow
    the orientation.
    """
    if o is None:
        return "INFEASIBLE\n"
    out = ["FEASIBLE"]
    for e in range(g.num_edges_ever):
        rec = g.edge(e)
        if rec.state.is_directed:
            a, b = rec.tail, rec.head
            if rec.state is EdgeState.ORIENTED_REVERSED:
                a, b = b, a
        else:
            a, b = o.arc(g, e)
        out.append(f"{e} {a} {b}")
    return "\n".join(out) + "\n"
