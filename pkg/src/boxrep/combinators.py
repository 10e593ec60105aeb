"""Representation-level composition rules.

Both combinators were derived independently of any external construction, so
each call is gated by the oracle and fails loudly with a witness instead of
ever returning an unverified representation.
"""

from __future__ import annotations

from typing import Iterable

from .errors import (
    ClassMapIncomplete,
    InvalidInputRep,
    PreconditionViolation,
    UncoveredNonedge,
)
from .graph import Graph, QuotientResult
from .intervals import (
    BoxRepresentation,
    IntervalAssignment,
    extend_universal,
    verify_representation,
)


def split_compose(rep_h: BoxRepresentation, rep_s: BoxRepresentation,
                  s: Iterable[int], g: Graph) -> BoxRepresentation:
    """Recombine a representation of g-without-S-internal-edges with one of g[S].

    Preconditions: rep_h verifies for H = g minus all edges inside S, and
    rep_s verifies for the induced subgraph on S (relabeled by ascending id).
    Each dimension I of rep_h is emitted twice: once with every S-vertex
    extended rightwards to beyond I's maximum endpoint, once extended
    leftwards below its minimum. A non-edge with at most one endpoint in S is
    a non-edge of H, and whichever side of I separated it survives in one of
    the two copies; extensions only grow intervals, so no edge is lost.
    Non-edges inside S are handled by rep_s extended with universal vertices.
    Output has exactly 2*d + d' dimensions. An empty S returns rep_h as-is.
    """
    s_sorted = sorted(set(s))
    if any(not (0 <= v < g.n) for v in s_sorted):
        raise PreconditionViolation("S contains a vertex outside the graph")
    h = g.remove_edges_inside(s_sorted)
    report = verify_representation(h, rep_h)
    if not report.valid:
        raise PreconditionViolation(
            f"rep_h does not represent g minus S-internal edges "
            f"(missing_edge={report.missing_edge}, "
            f"uncovered_nonedge={report.uncovered_nonedge})")
    if not s_sorted:
        return BoxRepresentation(g.n, rep_h.dims,
                                 {"builder": "split_compose", "s_size": 0,
                                  "parts": (rep_h.d, 0)})
    gs, members = g.induced(s_sorted)
    if rep_s.n != gs.n:
        raise InvalidInputRep("rep_s must be over the induced subgraph on S")
    report_s = verify_representation(gs, rep_s)
    if not report_s.valid:
        raise InvalidInputRep(
            f"rep_s does not represent g[S] "
            f"(missing_edge={report_s.missing_edge}, "
            f"uncovered_nonedge={report_s.uncovered_nonedge})")

    s_set = set(s_sorted)
    dims = []
    for dim in rep_h.dims:
        top = 1 + max(iv[1] for iv in dim.intervals.values())
        bottom = min(iv[0] for iv in dim.intervals.values()) - 1
        right = {}
        left = {}
        for v in range(g.n):
            lo, hi = dim.intervals[v]
            if v in s_set:
                right[v] = (lo, top)
                left[v] = (bottom, hi)
            else:
                right[v] = (lo, hi)
                left[v] = (lo, hi)
        dims.append(IntervalAssignment(right))
        dims.append(IntervalAssignment(left))
    lifted = extend_universal(rep_s, members, g.n)
    dims.extend(lifted.dims)
    assert len(dims) == 2 * rep_h.d + rep_s.d

    out = BoxRepresentation(g.n, tuple(dims),
                            {"builder": "split_compose",
                             "s_size": len(s_sorted),
                             "parts": (rep_h.d, rep_s.d)})
    final = verify_representation(g, out)
    if final.missing_edge is not None:
        raise PreconditionViolation(
            f"composed representation separates edge {final.missing_edge}")
    if final.uncovered_nonedge is not None:
        raise UncoveredNonedge(final.uncovered_nonedge)
    return out


def quotient_lift(rep_q: BoxRepresentation, q: QuotientResult,
                  target: Graph) -> BoxRepresentation:
    """Give every vertex the box of its class representative.

    `rep_q` must verify for the quotient graph with a clique added on the
    class representatives (vertices sharing an A-neighborhood are adjacent in
    the target, so they may share one box). `target` is the original graph
    with all edges added between vertices outside A; the lifted
    representation is oracle-checked against it.
    """
    reps_local = [q.local_id[cls[0]] for cls in q.classes]
    h1 = q.quotient_graph.add_clique(reps_local)
    report = verify_representation(h1, rep_q)
    if not report.valid:
        raise InvalidInputRep(
            f"rep_q does not represent the quotient-plus-clique graph "
            f"(missing_edge={report.missing_edge}, "
            f"uncovered_nonedge={report.uncovered_nonedge})")
    if target.n != len(q.rep_of):
        raise ClassMapIncomplete("quotient does not cover the target vertex set")
    dims = []
    for dim in rep_q.dims:
        intervals = {}
        for v in range(target.n):
            rep_vertex = q.rep_of.get(v)
            if rep_vertex is None or rep_vertex not in q.local_id:
                raise ClassMapIncomplete(f"no representative box for vertex {v}")
            intervals[v] = dim.intervals[q.local_id[rep_vertex]]
        dims.append(IntervalAssignment(intervals))
    out = BoxRepresentation(target.n, tuple(dims),
                            {"builder": "quotient_lift", "parts": (rep_q.d,)})
    final = verify_representation(target, out)
    if final.missing_edge is not None:
        raise PreconditionViolation(
            f"lifted representation separates edge {final.missing_edge}")
    if final.uncovered_nonedge is not None:
        raise UncoveredNonedge(final.uncovered_nonedge)
    return out
