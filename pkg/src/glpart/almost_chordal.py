"""Connected partitions on almost-chordal graphs via chord-and-contract.

The pipeline reduces an instance whose only non-chordality is a family of
pairwise almost-disjoint induced 4-cycles to a weighted chordal instance:

1. peel unit-demand terminals (each peel lowers the connectivity the
   remaining instance needs by one),
2. add a chord between every non-adjacent terminal pair lying on a common
   induced 4-cycle, to a fixpoint,
3. repeatedly pick a catalogued 4-cycle with at least three vertices on no
   other remaining cycle, record one cycle edge of a non-terminal among
   those three, and drop the cycle,
4. contract all recorded edges (pairwise disjoint, so merged weights are at
   most twice the maximum), which yields a chordal graph with connectivity
   preserved,
5. solve the weighted chordal instance and unfold the merges.

Unweighted demands land within one vertex of target; weighted parts stay
strictly within twice the maximum vertex weight.
"""

from __future__ import annotations

from dataclasses import dataclass

from .c4 import build_c4_incidence, enumerate_induced_c4
from .chordal import mcs_order, peo_violation
from .connectivity import vertex_connectivity_at_least
from .errors import (
    DemandError,
    PipelineInvariantError,
    PreconditionError,
)
from .graph import (
    Edge,
    Graph,
    MergeMap,
    WeightedGraph,
    contract_edge,
    induced_subgraph,
)
from .partition import GLPartition, PartitionRequest, gl_partition_chordal_weighted
from .recognition import DEFAULT_SEARCH_BUDGET, is_hh_i42_free


def add_terminal_chords(
    g: Graph, terminals: tuple[int, ...]
) -> tuple[Graph, tuple[Edge, ...]]:
    """Chord every non-adjacent terminal pair that shares an induced 4-cycle.

    Repeats until no catalogued cycle carries such a pair, so afterwards
    every remaining cycle has at most two terminals and they are adjacent.
    Returns the new graph and the added chords in insertion order.
    """
    tset = set(terminals)
    added: list[Edge] = []
    while True:
        catalog = enumerate_induced_c4(g)
        chord = None
        for cycle in catalog:
            on_cycle = sorted(tset.intersection(cycle))
            for i, a in enumerate(on_cycle):
                for b in on_cycle[i + 1:]:
                    if b not in g.adj[a]:
                        chord = (a, b)
                        break
                if chord:
                    break
            if chord:
                break
        if chord is None:
            return g, tuple(added)
        g = g.with_edges([chord])
        added.append(chord)


@dataclass(frozen=True)
class ContractionPlan:
    """Everything needed to reduce one graph to its chordal contraction.

    Ids in ``contraction_edges`` refer to the input graph; ``merge_map``
    maps contracted ids back to it. ``contracted`` carries group sizes as
    weights (callers re-derive real weights from their own vectors).
    """

    contraction_edges: tuple[Edge, ...]
    contracted: WeightedGraph
    merge_map: MergeMap
    terminal_map: dict[int, int]
    c4_count: int


def build_contraction_plan(
    g: Graph, terminals: tuple[int, ...]
) -> ContractionPlan:
    """Select one edge per induced 4-cycle and contract them all.

    Requires that terminal pairs on a common cycle are already adjacent
    (run ``add_terminal_chords`` first) and that the cycle/vertex incidence
    structure is a forest; otherwise the input is outside the supported
    class and a PreconditionError is raised.
    """
    catalog = enumerate_induced_c4(g)
    incidence = build_c4_incidence(catalog)
    if not incidence.is_forest:
        raise PreconditionError(
            "induced 4-cycles form a cyclic incidence structure; "
            "input is outside the supported class"
        )
    tset = set(terminals)
    remaining = list(range(len(catalog)))
    chosen: list[Edge] = []

    while remaining:
        counts: dict[int, int] = {}
        for ci in remaining:
            for v in catalog.cycles[ci]:
                counts[v] = counts.get(v, 0) + 1
        pick = None
        for ci in remaining:  # catalog order = ascending canonical id
            private = sorted(v for v in catalog.cycles[ci] if counts[v] == 1)
            if len(private) >= 3:
                pick = (ci, private[:3])
                break
        if pick is None:
            raise PreconditionError(
                "no remaining induced 4-cycle has three private vertices; "
                "input is outside the supported class"
            )
        ci, triple = pick
        free = [v for v in triple if v not in tset]
        if not free:
            raise PipelineInvariantError(
                "cycle triple consists of terminals only; terminal chords "
                "were not applied or the input is outside the supported class"
            )
        v = free[0]
        cyc = catalog.cycles[ci]
        pos = cyc.index(v)
        ring_nbrs = {cyc[(pos - 1) % 4], cyc[(pos + 1) % 4]}
        # a triple misses one cycle vertex, so v keeps a ring neighbor in it
        partner = min(ring_nbrs & set(triple))
        e = (v, partner) if v < partner else (partner, v)
        chosen.append(e)
        remaining.remove(ci)

    used: set[int] = set()
    for a, b in chosen:
        if a in used or b in used:
            raise PipelineInvariantError(
                "selected contraction edges are not vertex-disjoint"
            )
        used.update((a, b))

    current = g
    cur_of = list(range(g.n))  # input id -> current id
    groups: list[frozenset[int]] = [frozenset((x,)) for x in range(g.n)]
    for a0, b0 in chosen:
        current, mm = contract_edge(current, cur_of[a0], cur_of[b0])
        old_to_new: dict[int, int] = {}
        new_groups: list[frozenset[int]] = []
        for new, olds in enumerate(mm.groups):
            merged: set[int] = set()
            for old in olds:
                old_to_new[old] = new
                merged |= groups[old]
            new_groups.append(frozenset(merged))
        groups = new_groups
        cur_of = [old_to_new[c] for c in cur_of]

    merge_map = MergeMap(tuple(groups))
    sizes = tuple(len(grp) for grp in merge_map.groups)
    witness = peo_violation(current, mcs_order(current))
    if witness is not None:
        raise PipelineInvariantError(
            "contracted graph is not chordal; input was outside the supported class"
        )
    return ContractionPlan(
        contraction_edges=tuple(chosen),
        contracted=WeightedGraph(current, sizes),
        merge_map=merge_map,
        terminal_map={t: cur_of[t] for t in terminals},
        c4_count=len(catalog),
    )


@dataclass(frozen=True)
class PipelineResult:
    """Partition plus the audit trail of the reduction, in input-graph ids."""

    partition: GLPartition
    added_chords: tuple[Edge, ...]
    contraction_edges: tuple[Edge, ...]
    merge_groups: tuple[frozenset[int], ...]
    peeled: tuple[tuple[int, int], ...]  # (part index, terminal)
    effective_k: int
    contracted: WeightedGraph | None
    contracted_terminals: tuple[int, ...]
    c4_count: int


def gl_partition_almost_chordal(
    wg: WeightedGraph,
    req: PartitionRequest,
    *,
    validate: bool = True,
    debug_invariants: bool = False,
    hole_budget: int = DEFAULT_SEARCH_BUDGET,
) -> PipelineResult:
    """Near-exact connected partition of an almost-chordal k-connected graph.

    Demands are weight targets summing to the total weight (vertex counts
    under unit weights) and must cover each terminal's own weight. Returned
    part weights differ from their demands by less than twice the maximum
    vertex weight; under unit weights sizes are within one of target.

    Terminals whose demand equals their own weight are peeled off first;
    the rest of the instance must keep at least two open parts.
    """
    g = wg.graph
    k = req.k
    for t in req.terminals:
        if not (0 <= t < g.n):
            raise DemandError(f"terminal {t} out of range")
    total = wg.total_weight()
    if sum(req.demands) != total:
        raise DemandError(
            f"demands sum to {sum(req.demands)} but total vertex weight is {total}"
        )
    for t, d in zip(req.terminals, req.demands):
        if d < wg.weights[t]:
            raise DemandError(
                f"terminal {t} weighs {wg.weights[t]}, above its demand {d}"
            )
    if validate:
        check = is_hh_i42_free(g, hole_budget=hole_budget)
        if not check:
            vio = check.violation
            raise PreconditionError(
                f"input graph is outside the supported class: {vio.kind} on "
                f"vertices {vio.vertices}",
                witness=vio,
            )
        res = vertex_connectivity_at_least(g, k)
        if not res:
            raise PreconditionError(
                f"input graph is not {k}-connected: {res.reason}",
                witness=res.witness,
            )

    peel_idx = [i for i in range(k) if req.demands[i] == wg.weights[req.terminals[i]]]
    keep_idx = [i for i in range(k) if i not in set(peel_idx)]
    if len(keep_idx) < 2:
        raise PreconditionError(
            "after peeling unit-demand terminals fewer than two parts remain open; "
            "shrink the instance instead"
        )
    peeled = tuple((i, req.terminals[i]) for i in peel_idx)
    k_eff = len(keep_idx)

    keep_vertices = [
        v for v in g.vertices() if v not in {req.terminals[i] for i in peel_idx}
    ]
    g1, back = induced_subgraph(g, keep_vertices)
    fwd = {old: new for new, old in enumerate(back)}
    weights1 = tuple(wg.weights[old] for old in back)
    terminals1 = tuple(fwd[req.terminals[i]] for i in keep_idx)
    demands1 = tuple(req.demands[i] for i in keep_idx)

    g2, chords1 = add_terminal_chords(g1, terminals1)
    plan = build_contraction_plan(g2, terminals1)
    for a, b in plan.contraction_edges:
        if a in set(terminals1) and b in set(terminals1):
            raise PipelineInvariantError(
                "a contraction edge joins two terminals"
            )

    w2 = tuple(
        sum(weights1[v] for v in grp) for grp in plan.merge_map.groups
    )
    inner_wg = WeightedGraph(plan.contracted.graph, w2)
    if validate:
        res = vertex_connectivity_at_least(inner_wg.graph, k_eff)
        if not res:
            raise PipelineInvariantError(
                f"contracted graph lost {k_eff}-connectivity: {res.reason}"
            )
    inner_req = PartitionRequest(
        tuple(plan.terminal_map[t] for t in terminals1), demands1
    )
    inner = gl_partition_chordal_weighted(
        inner_wg,
        inner_req,
        validate=False,
        debug_invariants=debug_invariants,
        allow_overweight_terminals=True,
    )

    parts: list[frozenset[int]] = [frozenset()] * k
    for i, t in peeled:
        parts[i] = frozenset((t,))
    for pos, i in enumerate(keep_idx):
        unfolded = plan.merge_map.expand(inner.parts[pos])
        parts[i] = frozenset(back[v] for v in unfolded)

    deviations = []
    for i in range(k):
        achieved = wg.weight_of(parts[i])
        deviations.append(abs(achieved - req.demands[i]))
    partition = GLPartition(tuple(parts), max(deviations))

    def to_orig(e: Edge) -> Edge:
        a, b = back[e[0]], back[e[1]]
        return (a, b) if a < b else (b, a)

    return PipelineResult(
        partition=partition,
        added_chords=tuple(to_orig(e) for e in chords1),
        contraction_edges=tuple(to_orig(e) for e in plan.contraction_edges),
        merge_groups=tuple(
            frozenset(back[v] for v in grp)
            for grp in plan.merge_map.groups if len(grp) >= 2
        ),
        peeled=peeled,
        effective_k=k_eff,
        contracted=inner_wg,
        contracted_terminals=inner_req.terminals,
        c4_count=plan.c4_count,
    )
