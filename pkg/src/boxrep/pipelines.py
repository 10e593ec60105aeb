"""End-to-end constructions, experiments, and closed-form bound tables."""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .builders import DegenerateStrategy, degenerate_rep, roberts_rep, acyclic_rep
from .coloring import Coloring, validate_acyclic
from .combinators import quotient_lift, split_compose
from .errors import (
    InvalidColoring,
    InvalidParams,
    SizeLimitExceeded,
    StructuralCheckFailed,
)
from .exact import SolveLimits, exact_boxicity
from .graph import (
    Graph,
    assert_k3k,
    components,
    degeneracy_order,
    generate,
    peel,
    quotient_by_a_neighborhood,
)
from .intervals import (
    BoxRepresentation,
    IntervalAssignment,
    concat,
    extend_universal,
    merge_components,
    verify_representation,
)
from .rng import SplitMix64


@dataclass
class PipelineTrace:
    seed: int
    values: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    wall_time: float = 0.0

    def record(self, key: str, value) -> None:
        self.values.append((key, value))

    def get(self, key: str):
        found = [v for k, v in self.values if k == key]
        if not found:
            raise KeyError(key)
        return found[-1]

    def get_all(self, key: str) -> list:
        return [v for k, v in self.values if k == key]

    def to_text(self, include_timings: bool = False) -> str:
        lines = [f"{k} = {v}" for k, v in self.values]
        lines.extend(f"warning = {w}" for w in self.warnings)
        lines.append(f"seed = {self.seed}")
        if include_timings:
            lines.append(f"wall_time_s = {self.wall_time:.3f}")
        return "\n".join(lines) + "\n"


EDGE_BOUND_FORMULA = "(15e+1)*sqrt(m*ln(n))"


def _points_rep(n: int) -> BoxRepresentation:
    dim = IntervalAssignment({v: (v, v) for v in range(n)})
    return BoxRepresentation(n, (dim,), {"builder": "points"})


def edge_pipeline(g: Graph, mode: str = "paper", seed: int = 0,
                  trace: PipelineTrace | None = None):
    """Build a representation whose size scales with the edge count.

    Per component: peel vertices with at most theta surviving neighbors
    (paper mode theta = sqrt(m/ln n); reference mode theta = (m/ln n)^(1/3),
    rebalanced for the reference cover strategy's quadratic k-dependence,
    giving O(m^(2/3) (ln n)^(1/3)) dimensions overall). The peel order
    witnesses that the graph minus survivor-internal edges has forward
    degeneracy at most ceil(theta); that graph gets the degenerate cover, the
    survivors get the pairing construction, and split_compose recombines.
    Components merge at the end and the result is oracle-checked.
    """
    if g.n < 2:
        raise InvalidParams("edge_pipeline needs n >= 2")
    if mode not in ("paper", "reference"):
        raise InvalidParams(f"unknown mode {mode!r}")
    trace = trace if trace is not None else PipelineTrace(seed)
    started = time.perf_counter()
    seeder = SplitMix64(seed)
    reps = []
    maps = []
    for comp, mapping in components(g):
        comp_seed = seeder.next_u64()
        if comp.m == 0:
            rep = _points_rep(comp.n)
            trace.record("component", {"n": comp.n, "m": 0, "dims": 1})
        else:
            n_c, m_c = comp.n, comp.m
            ratio = m_c / math.log(n_c)
            theta_f = math.sqrt(ratio) if mode == "paper" else ratio ** (1.0 / 3.0)
            theta = Fraction(theta_f)
            pr = peel(comp, theta)
            survivors = sorted(pr.survivors)
            if mode == "paper":
                cap = 2.0 * math.sqrt(m_c * math.log(n_c))
                if len(survivors) > cap:
                    raise StructuralCheckFailed(
                        f"survivor count {len(survivors)} exceeds 2*sqrt(m*ln n)={cap}")
            h = comp.remove_edges_inside(survivors)
            order = list(pr.removal_order) + survivors
            k = math.ceil(theta)
            r_h = degenerate_rep(h, order, k,
                                 DegenerateStrategy(seed=comp_seed))
            gs, _ = comp.induced(survivors)
            r_s = roberts_rep(gs) if survivors else None
            if survivors:
                rep = split_compose(r_h, r_s, survivors, comp)
            else:
                rep = r_h
            entry = {
                "n": n_c, "m": m_c, "theta": round(theta_f, 6),
                "k": k, "survivors": len(survivors),
                "h_dims": r_h.d,
                "s_dims": r_s.d if r_s is not None else 0,
                "dims": rep.d,
                "h_size_bound": r_h.metadata.get("size_bound"),
                "fallback_dims": r_h.metadata.get("fallback_dims"),
            }
            if mode == "paper":
                entry["survivor_cap"] = round(cap, 6)
            trace.record("component", entry)
        reps.append(rep)
        maps.append(mapping)
    merged = merge_components(reps, maps) if len(reps) > 1 else reps[0]
    report = verify_representation(g, merged)
    if not report.valid:
        raise StructuralCheckFailed(
            f"pipeline output failed verification: {report}", report)
    trace.record("mode", mode)
    trace.record("final_dims", merged.d)
    trace.record("edge_bound_formula", EDGE_BOUND_FORMULA)
    if g.n >= 2 and g.m >= 1:
        trace.record("edge_bound_value",
                     round((15 * math.e + 1) * math.sqrt(g.m * math.log(g.n)), 3))
    trace.wall_time = time.perf_counter() - started
    meta = dict(merged.metadata)
    meta.update(pipeline="edge", mode=mode, seed=seed)
    out = BoxRepresentation(g.n, merged.dims, meta)
    return out, trace


def surface_pipeline(g: Graph, genus: int, a: Iterable[int], coloring: Coloring,
                     seed: int = 0, trace: PipelineTrace | None = None):
    """Build a representation from a deletion set and an acyclic coloring.

    `a` is a vertex set whose removal leaves a graph acyclically colorable by
    `coloring` (keyed by original vertex ids); `genus` is the declared Euler
    genus, used only for structural assertions. Two supergraphs are
    represented and stacked: one completes everything outside `a` (handled
    through the A-neighborhood quotient, the degenerate cover, a one-clique
    split_compose and a lift), the other makes every vertex of `a` universal
    over the acyclic-coloring representation. Every non-edge of the input
    lies in one of the two, so the concatenation is a representation of the
    input; the final and all intermediate representations are oracle-checked.
    """
    if genus < 0:
        raise InvalidParams("genus must be nonnegative")
    trace = trace if trace is not None else PipelineTrace(seed)
    started = time.perf_counter()
    a_set = frozenset(a)
    if any(not (0 <= v < g.n) for v in a_set):
        raise InvalidParams("A contains a vertex outside the graph")
    outside = [v for v in range(g.n) if v not in a_set]

    # supergraph 2: the subgraph outside A plus |A| universal vertices
    if outside:
        sub, members = g.induced(outside)
        local_coloring = Coloring(
            {i: coloring.color[members[i]] for i in range(sub.n)
             if members[i] in coloring.color},
            coloring.k)
        if len(local_coloring.color) != sub.n:
            raise InvalidColoring("coloring must assign every vertex outside A")
        validate_acyclic(sub, local_coloring)
        r_inner = acyclic_rep(sub, local_coloring)
        r_g2 = extend_universal(r_inner, members, g.n)
    else:
        r_g2 = BoxRepresentation(
            g.n, (IntervalAssignment({v: (0, 1) for v in range(g.n)}),),
            {"builder": "universal"})
    trace.record("g2_dims", r_g2.d)

    # structural checks for the quotient stage
    q = quotient_by_a_neighborhood(g, a_set)
    k3k = assert_k3k(g, a_set, genus)
    trace.record("k3k_max_count", k3k.max_count)
    trace.record("k3k_bound", k3k.bound)
    if not k3k.passed:
        raise StructuralCheckFailed(
            f"three vertices of A {k3k.witness} have {k3k.max_count} common "
            f"neighbors outside A, above the bound {k3k.bound}", k3k)
    a_size = len(a_set)
    class_cap = (1 + a_size + math.comb(a_size, 2)
                 + (2 * genus + 2) * math.comb(a_size, 3))
    trace.record("quotient_classes", len(q.classes))
    trace.record("quotient_class_cap", class_cap)
    if len(q.classes) > class_cap:
        raise StructuralCheckFailed(
            f"{len(q.classes)} neighborhood classes exceed the cap {class_cap}")
    if genus >= 1:
        trace.record("quotient_class_cap_relaxed", 10**9 * genus**4)

    order, k_q = degeneracy_order(q.quotient_graph)
    effective_genus = max(genus, 2)
    if effective_genus != genus:
        trace.record("genus_for_formulas", effective_genus)
    heawood = 0.5 * (5 + math.sqrt(1 + 24 * effective_genus))
    trace.record("quotient_degeneracy", k_q)
    trace.record("heawood_degeneracy_bound", round(heawood, 3))
    if k_q > math.ceil(heawood):
        trace.warnings.append(
            f"quotient degeneracy {k_q} exceeds the declared-genus bound "
            f"{math.ceil(heawood)}; the declared genus may be wrong")

    seeder = SplitMix64(seed)
    r_q = degenerate_rep(q.quotient_graph, order, k_q,
                         DegenerateStrategy(seed=seeder.next_u64()))
    trace.record("quotient_dims", r_q.d)

    reps_local = sorted(q.local_id[cls[0]] for cls in q.classes)
    h1 = q.quotient_graph.add_clique(reps_local)
    if reps_local:
        clique_rep = BoxRepresentation(
            len(reps_local),
            (IntervalAssignment({i: (0, 1) for i in range(len(reps_local))}),),
            {"builder": "clique"})
        r_h1 = split_compose(r_q, clique_rep, reps_local, h1)
    else:
        r_h1 = r_q
    trace.record("h1_dims", r_h1.d)

    g1 = g.add_clique(outside)
    r_g1 = quotient_lift(r_h1, q, g1)
    trace.record("g1_dims", r_g1.d)

    result = concat(r_g1, r_g2, g)
    assert result.d == r_g1.d + r_g2.d
    trace.record("final_dims", result.d)
    report = verify_representation(g, result)
    if not report.valid:
        raise StructuralCheckFailed(
            f"pipeline output failed verification: {report}", report)
    trace.wall_time = time.perf_counter() - started
    meta = dict(result.metadata)
    meta.update(pipeline="surface", genus=genus, seed=seed)
    return BoxRepresentation(g.n, result.dims, meta), trace


# ---------------------------------------------------------------------------
# experiments and bound tables


@dataclass
class ExperimentReport:
    n: int
    trials: int
    seed: int
    edge_cap: float
    within_cap: int
    edge_counts: list
    boxicity_distribution: Counter
    over_limit: int

    def fraction_within_cap(self) -> float:
        return self.within_cap / self.trials if self.trials else 0.0

    def to_text(self) -> str:
        lines = [
            f"model = bipartite({self.n})",
            f"trials = {self.trials}",
            f"seed = {self.seed}",
            f"edge_cap = {self.edge_cap:.3f}",
            f"within_cap = {self.within_cap}",
            f"fraction_within_cap = {self.fraction_within_cap():.3f}",
        ]
        if self.boxicity_distribution:
            dist = ", ".join(f"{k}: {v}" for k, v in
                             sorted(self.boxicity_distribution.items()))
            lines.append(f"boxicity_distribution = {{{dist}}}")
            if self.over_limit:
                lines.append(f"boxicity_over_limit = {self.over_limit}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        rows = ["trial,edges,within_cap,boxicity"]
        per_trial = getattr(self, "_per_trial", None)
        if per_trial is None:
            per_trial = [(i, m, "", "") for i, m in enumerate(self.edge_counts)]
        for row in per_trial:
            rows.append(",".join(str(x) for x in row))
        return "\n".join(rows) + "\n"


def bipartite_experiment(n: int, trials: int, seed: int = 0,
                         limits: SolveLimits | None = None) -> ExperimentReport:
    """Sample random bipartite graphs and check the edge-count cap 2n^2/ln n.

    For n <= 4 the samples are small enough for the exact solver, so the
    report additionally carries the exact boxicity distribution (samples
    whose components exceed the solver limits are counted separately).
    """
    if n < 4:
        raise InvalidParams("bipartite_experiment needs n >= 4")
    if trials < 0:
        raise InvalidParams("trials must be nonnegative")
    seeder = SplitMix64(seed)
    cap = 2.0 * n * n / math.log(n)
    edge_counts = []
    within = 0
    dist: Counter = Counter()
    over_limit = 0
    per_trial = []
    for i in range(trials):
        trial_seed = seeder.next_u64()
        sample = generate("bipartite", seed=trial_seed, n=n)
        m = sample.m
        edge_counts.append(m)
        ok = m <= cap
        within += ok
        box = ""
        if n <= 4:
            try:
                box = exact_boxicity(sample, limits or SolveLimits())
                dist[box] += 1
            except SizeLimitExceeded:
                over_limit += 1
                box = "over_limit"
        per_trial.append((i, m, int(ok), box))
    report = ExperimentReport(n, trials, seed, cap, within, edge_counts,
                              dist, over_limit)
    report._per_trial = per_trial
    return report


def bound_report(n: int, m: int, genus: int | None = None,
                 k: int | None = None) -> list[tuple[str, str, object]]:
    """Evaluate the closed-form size bounds for the given parameters.

    Returns (name, formula, value) rows; all logarithms are natural.
    """
    if n < 2 or m < 0:
        raise InvalidParams("need n >= 2 and m >= 0")
    if genus is not None and genus < 0:
        raise InvalidParams("genus must be nonnegative")
    if k is not None and k < 0:
        raise InvalidParams("k must be nonnegative")
    rows: list[tuple[str, str, object]] = []
    rows.append(("roberts_pairing", "n/2", n / 2))
    rows.append(("edge_sqrt", EDGE_BOUND_FORMULA,
                 (15 * math.e + 1) * math.sqrt(m * math.log(n))))
    rows.append(("euler_genus_upper", "m + 2", m + 2))
    rows.append(("poset_dim_via_pairing", "2*(n/2) + n + 4", n + n + 4))
    if k is not None:
        rows.append(("degenerate_cover", "(k+2)*ceil(2e*ln(n))",
                     (k + 2) * math.ceil(2 * math.e * math.log(n))))
        rows.append(("acyclic_color_pairs", "k*(k-1)", k * (k - 1)))
    if genus is not None:
        rows.append(("heawood_degeneracy", "(5 + sqrt(1+24g))/2",
                     0.5 * (5 + math.sqrt(1 + 24 * genus))))
        rows.append(("quotient_class_relaxed_cap", "1e9 * g^4",
                     10**9 * genus**4))
    return rows


def format_bound_table(rows: list[tuple[str, str, object]],
                       csv: bool = False) -> str:
    def render(v):
        if isinstance(v, int):
            return str(v)
        return f"{v:.3f}"

    if csv:
        out = ["name,formula,value"]
        for name, formula, value in rows:
            out.append(f"{name},\"{formula}\",{render(value)}")
        return "\n".join(out) + "\n"
    name_w = max(len(r[0]) for r in rows)
    formula_w = max(len(r[1]) for r in rows)
    out = []
    for name, formula, value in rows:
        out.append(f"{name:<{name_w}}  {formula:<{formula_w}}  {render(value)}")
    return "\n".join(out) + "\n"
