"""Box representations and the oracle that certifies them.

A box representation is an ordered list of interval assignments over the same
vertex set; its meaning is the intersection of the corresponding interval
graphs. Intervals are closed with integer endpoints, so touching intervals
intersect, and every combinator below keeps endpoints integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyInput,
    FormatError,
    InvalidInputRep,
    PreconditionViolation,
    SizeLimitExceeded,
    UncoveredNonedge,
)
from .graph import Graph

RECOGNITION_LIMIT = 12

# below this many pair*dimension checks the plain loops beat array setup
_VECTORIZE_THRESHOLD = 120_000


@dataclass
class IntervalAssignment:
    intervals: dict

    def validate(self, n: int) -> None:
        if set(self.intervals) != set(range(n)):
            raise InvalidInputRep("assignment must cover vertices 0..n-1")
        for v, (lo, hi) in self.intervals.items():
            if not (isinstance(lo, int) and isinstance(hi, int)):
                raise InvalidInputRep(f"non-integer endpoints at vertex {v}")
            if lo > hi:
                raise InvalidInputRep(f"empty interval at vertex {v}")


@dataclass
class BoxRepresentation:
    n: int
    dims: tuple
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.dims = tuple(self.dims)
        if not self.dims:
            raise InvalidInputRep("a representation needs at least one dimension")
        for dim in self.dims:
            dim.validate(self.n)

    @property
    def d(self) -> int:
        return len(self.dims)


@dataclass
class VerifyReport:
    valid: bool
    missing_edge: tuple | None
    uncovered_nonedge: tuple | None


def _intersects(a, b) -> bool:
    return max(a[0], b[0]) <= min(a[1], b[1])


def _verify_plain(g: Graph, rep: BoxRepresentation) -> VerifyReport:
    missing = None
    uncovered = None
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            if missing is not None:
                continue
            for dim in rep.dims:
                if not _intersects(dim.intervals[u], dim.intervals[v]):
                    missing = (u, v)
                    break
        else:
            if uncovered is not None:
                continue
            if all(_intersects(dim.intervals[u], dim.intervals[v])
                   for dim in rep.dims):
                uncovered = (u, v)
        if missing is not None and uncovered is not None:
            break
    return VerifyReport(missing is None and uncovered is None, missing, uncovered)


def _verify_vectorized(g: Graph, rep: BoxRepresentation) -> VerifyReport:
    n = g.n
    meet = np.ones((n, n), dtype=bool)
    chunk = 256
    dims = rep.dims
    for start in range(0, len(dims), chunk):
        block = dims[start:start + chunk]
        lo = np.array([[dim.intervals[v][0] for v in range(n)] for dim in block],
                      dtype=np.int64)
        hi = np.array([[dim.intervals[v][1] for v in range(n)] for dim in block],
                      dtype=np.int64)
        inter = (np.maximum(lo[:, :, None], lo[:, None, :])
                 <= np.minimum(hi[:, :, None], hi[:, None, :]))
        meet &= inter.all(axis=0)
    adjm = np.zeros((n, n), dtype=bool)
    for u, v in g.edges:
        adjm[u, v] = True
        adjm[v, u] = True
    upper = np.triu(np.ones((n, n), dtype=bool), 1)
    missing_idx = np.argwhere(adjm & ~meet & upper)
    uncovered_idx = np.argwhere(~adjm & meet & upper)
    missing = tuple(int(x) for x in missing_idx[0]) if len(missing_idx) else None
    uncovered = tuple(int(x) for x in uncovered_idx[0]) if len(uncovered_idx) else None
    return VerifyReport(missing is None and uncovered is None, missing, uncovered)


def verify_representation(g: Graph, rep: BoxRepresentation) -> VerifyReport:
    """Certify a representation against a graph.

    Valid iff every edge's intervals intersect in every dimension and every
    non-edge is separated in at least one dimension. Witnesses are the
    lexicographically smallest violating pairs of each kind.
    """
    if rep.n != g.n:
        raise DimensionMismatch(f"representation over {rep.n} vertices, graph has {g.n}")
    if rep.d * g.n * g.n <= _VECTORIZE_THRESHOLD:
        return _verify_plain(g, rep)
    try:
        return _verify_vectorized(g, rep)
    except OverflowError:
        return _verify_plain(g, rep)


# ---------------------------------------------------------------------------
# interval-graph recognition via consecutively orderable maximal cliques


def _maximal_cliques(adj: list[int], n: int, cap: int) -> list[int] | None:
    """All maximal cliques as bitmasks, or None once more than `cap` exist."""
    cliques: list[int] = []

    def expand(r: int, p: int, x: int) -> bool:
        if p == 0 and x == 0:
            cliques.append(r)
            return len(cliques) <= cap
        # pivot on the candidate dominating the most of p
        px = p | x
        best_u, best_cover = -1, -1
        w = px
        while w:
            u = (w & -w).bit_length() - 1
            w &= w - 1
            cover = bin(p & adj[u]).count("1")
            if cover > best_cover:
                best_cover, best_u = cover, u
        candidates = p & ~adj[best_u]
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            vb = 1 << v
            candidates &= candidates - 1
            if not expand(r | vb, p & adj[v], x & adj[v]):
                return False
            p &= ~vb
            x |= vb
        return True

    if not expand(0, (1 << n) - 1 if n else 0, 0):
        return None
    return cliques


def _is_chordal(adj: list[int], n: int) -> bool:
    """Tarjan-Yannakakis test: maximum cardinality search ordering must be a
    perfect elimination order (in reverse)."""
    if n == 0:
        return True
    chosen = 0
    weight = [0] * n
    pos = [0] * n
    order = []
    for step in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not (chosen >> v) & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        chosen |= 1 << best
        pos[best] = step
        order.append(best)
        w = adj[best]
        while w:
            u = (w & -w).bit_length() - 1
            w &= w - 1
            if not (chosen >> u) & 1:
                weight[u] += 1
    seen = 0
    for v in order:
        prev = adj[v] & seen
        seen |= 1 << v
        if prev:
            u = max((pos[x], x) for x in _bits(prev))[1]
            if prev & ~(adj[u] | (1 << u)):
                return False
    return True


def _bits(mask: int):
    while mask:
        b = mask & -mask
        mask &= mask - 1
        yield b.bit_length() - 1


def _consecutive_order(cliques: list[int]) -> list[int] | None:
    """Order cliques so each vertex's cliques are consecutive, or None.

    A vertex whose run is open and which still occurs in unplaced cliques
    must appear in the next clique placed, which prunes every branch that is
    already doomed.
    """
    t = len(cliques)
    if t == 0:
        return []
    width = max(c.bit_length() for c in cliques)
    cnt = [0] * width
    for c in cliques:
        for v in _bits(c):
            cnt[v] += 1
    order: list[int] = []

    def place(unplaced: int, started: int, closed: int) -> bool:
        if unplaced == 0:
            return True
        pending = 0
        for v in _bits(started & ~closed):
            if cnt[v] > 0:
                pending |= 1 << v
        rem = unplaced
        while rem:
            ib = rem & -rem
            rem &= rem - 1
            i = ib.bit_length() - 1
            c = cliques[i]
            if c & closed or pending & ~c:
                continue
            for v in _bits(c):
                cnt[v] -= 1
            order.append(i)
            if place(unplaced & ~ib, started | c, closed | (started & ~c)):
                return True
            order.pop()
            for v in _bits(c):
                cnt[v] += 1
        return False

    if not place((1 << t) - 1, 0, 0):
        return None
    return [cliques[i] for i in order]


def _interval_order_from_adj(adj: list[int], n: int, cap: int):
    if n == 0:
        return []
    if not _is_chordal(adj, n):
        return None  # interval graphs are chordal; skips the clique search
    cliques = _maximal_cliques(adj, n, cap)
    if cliques is None:
        return None
    cliques.sort()
    return _consecutive_order(cliques)


def consecutive_clique_order(g: Graph, limit: int = RECOGNITION_LIMIT):
    """Maximal cliques in a consecutive order, or None if no order exists.

    Early-rejects when the graph has more than n maximal cliques (interval
    graphs never do). Exhaustive, hence the size guard.
    """
    if g.n > limit:
        raise SizeLimitExceeded(f"interval recognition limited to n <= {limit}")
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _interval_order_from_adj(adj, g.n, g.n)


def is_interval_graph(g: Graph, limit: int = RECOGNITION_LIMIT) -> bool:
    return consecutive_clique_order(g, limit=limit) is not None


# ---------------------------------------------------------------------------
# combinators


def concat(r1: BoxRepresentation, r2: BoxRepresentation, g: Graph) -> BoxRepresentation:
    """Stack the dimensions of two supergraph representations.

    Sound for `g` whenever every non-edge of `g` is missing from at least one
    of the two supergraphs; the result is oracle-checked and the call fails
    with a witness otherwise.
    """
    if r1.n != r2.n or r1.n != g.n:
        raise DimensionMismatch("representations must share the vertex set of g")
    out = BoxRepresentation(g.n, r1.dims + r2.dims,
                            {"builder": "concat", "parts": (r1.d, r2.d)})
    report = verify_representation(g, out)
    if report.missing_edge is not None:
        raise PreconditionViolation(
            f"edge {report.missing_edge} separated; inputs are not supergraph reps")
    if report.uncovered_nonedge is not None:
        raise UncoveredNonedge(report.uncovered_nonedge)
    return out


def extend_universal(rep: BoxRepresentation, members: Iterable[int],
                     n_total: int) -> BoxRepresentation:
    """Lift a representation on a vertex subset to the full set.

    `members[i]` is the original id of the subset vertex i. Every vertex not
    in `members` receives, per dimension, the interval spanning all existing
    endpoints of that dimension, making it adjacent to everything.
    """
    members = tuple(members)
    if len(members) != rep.n:
        raise InvalidInputRep("members must enumerate the representation's vertices")
    if len(set(members)) != len(members) or any(
            not (0 <= v < n_total) for v in members):
        raise InvalidInputRep("members must be distinct ids below n_total")
    if rep.n == 0:
        raise InvalidInputRep("cannot extend an empty representation")
    dims = []
    member_set = set(members)
    for dim in rep.dims:
        lo = min(iv[0] for iv in dim.intervals.values())
        hi = max(iv[1] for iv in dim.intervals.values())
        intervals = {}
        for i, orig in enumerate(members):
            intervals[orig] = dim.intervals[i]
        for v in range(n_total):
            if v not in member_set:
                intervals[v] = (lo, hi)
        dims.append(IntervalAssignment(intervals))
    meta = dict(rep.metadata)
    meta["extended_from"] = rep.n
    return BoxRepresentation(n_total, tuple(dims), meta)


def merge_components(reps: list[BoxRepresentation],
                     maps: list[tuple]) -> BoxRepresentation:
    """Combine per-component representations into one for the disjoint union.

    Output has max(d_i) dimensions. Dimension 1 shifts each component into
    its own coordinate range so cross-component pairs are separated there;
    in higher dimensions a component either keeps its own intervals or, past
    its dimension count, pads with the global span of that dimension.
    """
    if not reps:
        raise EmptyInput("no component representations")
    if len(reps) != len(maps):
        raise InvalidInputRep("one vertex map per representation required")
    n_total = sum(len(m) for m in maps)
    seen = set()
    for mp in maps:
        seen.update(mp)
    if seen != set(range(n_total)):
        raise InvalidInputRep("component maps must partition the vertex set")
    depth = max(r.d for r in reps)

    dims = []
    # dimension 1: disjoint ranges, first component kept in place
    intervals = {}
    cursor = None
    for rep, mp in zip(reps, maps):
        dim = rep.dims[0]
        lo = min(iv[0] for iv in dim.intervals.values())
        hi = max(iv[1] for iv in dim.intervals.values())
        shift = 0 if cursor is None else cursor - lo
        for i, orig in enumerate(mp):
            a, b = dim.intervals[i]
            intervals[orig] = (a + shift, b + shift)
        cursor = hi + shift + 1
    dims.append(IntervalAssignment(intervals))

    for j in range(1, depth):
        have = [r for r in reps if r.d > j]
        span_lo = min(min(iv[0] for iv in r.dims[j].intervals.values()) for r in have)
        span_hi = max(max(iv[1] for iv in r.dims[j].intervals.values()) for r in have)
        intervals = {}
        for rep, mp in zip(reps, maps):
            if rep.d > j:
                for i, orig in enumerate(mp):
                    intervals[orig] = rep.dims[j].intervals[i]
            else:
                for orig in mp:
                    intervals[orig] = (span_lo, span_hi)
        dims.append(IntervalAssignment(intervals))

    return BoxRepresentation(n_total, tuple(dims),
                             {"builder": "merge_components",
                              "parts": tuple(r.d for r in reps)})


# ---------------------------------------------------------------------------
# text format


def write_representation(rep: BoxRepresentation) -> str:
    lines = [f"boxrep {rep.n} {rep.d}"]
    for j, dim in enumerate(rep.dims, start=1):
        lines.append(f"dim {j}")
        for v in range(rep.n):
            lo, hi = dim.intervals[v]
            lines.append(f"{v} {lo} {hi}")
    return "\n".join(lines) + "\n"


def parse_representation(text: str) -> BoxRepresentation:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("boxrep "):
        raise FormatError("missing 'boxrep n d' header")
    head = lines[0].split()
    if len(head) != 3:
        raise FormatError(f"bad header {lines[0]!r}")
    try:
        n, d = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    pos = 1
    dims = []
    for j in range(1, d + 1):
        if pos >= len(lines) or lines[pos].strip() != f"dim {j}":
            raise FormatError(f"expected 'dim {j}' at line {pos + 1}")
        pos += 1
        intervals = {}
        for v in range(n):
            if pos >= len(lines):
                raise FormatError("truncated representation file")
            parts = lines[pos].split()
            if len(parts) != 3:
                raise FormatError(f"bad interval line {lines[pos]!r}")
            try:
                vid, lo, hi = int(parts[0]), int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise FormatError(f"bad interval line {lines[pos]!r}") from exc
            if vid != v:
                raise FormatError(f"expected vertex {v} at line {pos + 1}")
            intervals[v] = (lo, hi)
            pos += 1
        dims.append(IntervalAssignment(intervals))
    return BoxRepresentation(n, tuple(dims))
