"""SEQ-IC-LCS where the two target graphs may be cyclic.

The targets are condensed by strongly connected component; condensed
vertices carry character sets, and the ones that can repeat (>= 2 members,
or an original self-loop) carry a self-loop and are flagged cyclic.  The
DP then runs over condensed ranks with two sentinel rules:

* the per-match increment is +inf when both matched vertices are cyclic
  (the shared character can be pumped forever), else 1;
* +inf + (-inf) = -inf, so an unbounded bonus never revives a state that
  cannot embed the constraint prefix.

Self-loops count as in-coming edges.  Predecessor enumeration includes
them, which is well-founded: a self-loop pair only ever contributes cells
from earlier constraint layers, and a one-sided self-loop contributes
same-layer cells that were already filled.  The exact pair (i, j) reading
its own same-layer cell would be a no-op, so it is skipped.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import CyclicConstraintError, CyclicGraphError, EmptyGraphError
from .extlen import NEG_INF, POS_INF, ExtLen
from .graphs import AtomicGraph, CondensedGraph, condense, sink_vertices, topo_sort

__all__ = [
    "LabelIntersections",
    "CondensedSeqIcTable",
    "build_intersection_index",
    "seq_ic_cyclic_table",
    "seq_ic_lcs_cyclic",
    "unroll_bounded",
]


def _member(sorted_chars: tuple[str, ...], ch: str) -> bool:
    pos = bisect_left(sorted_chars, ch)
    return pos < len(sorted_chars) and sorted_chars[pos] == ch


@dataclass(frozen=True)
class LabelIntersections:
    """Pairwise character-set intersections of two condensed graphs.

    ``has_common[c1][c2]`` is true iff the label sets of components c1 and
    c2 intersect; ``common[c1][c2]`` is that intersection, sorted.
    """

    has_common: tuple[tuple[bool, ...], ...]
    common: tuple[tuple[tuple[str, ...], ...], ...]


def build_intersection_index(h1: CondensedGraph, h2: CondensedGraph) -> LabelIntersections:
    """Intersect every label-set pair.

    Each character of the right-hand set is looked up in the sorted
    left-hand set, so a pair costs O(set size * log alphabet) and the whole
    index stays within the logarithmic preprocessing budget.
    """
    common: list[tuple[tuple[str, ...], ...]] = []
    for c1 in range(h1.n):
        left = h1.label_sets[c1]
        row = tuple(
            tuple(ch for ch in h2.label_sets[c2] if _member(left, ch))
            for c2 in range(h2.n)
        )
        common.append(row)
    flags = tuple(tuple(bool(s) for s in row) for row in common)
    return LabelIntersections(has_common=flags, common=tuple(common))


@dataclass(frozen=True)
class CondensedSeqIcTable:
    """Dense |V1-hat| x |V2-hat| x (|V3|+1) table over condensed ranks.

    POS_INF marks unbounded candidate strings, NEG_INF an empty candidate
    set; layer 0 is the unconstrained LCS."""

    values: tuple[tuple[tuple[ExtLen, ...], ...], ...]

    @property
    def shape(self) -> tuple[int, int, int]:
        return (len(self.values), len(self.values[0]), len(self.values[0][0]))


class _CondensedRankView:
    """A condensed graph re-indexed by 1-based topological rank."""

    def __init__(self, h: CondensedGraph) -> None:
        order = h.topo_order()
        self.n = h.n
        self.comp_at: list[int] = [-1] + list(order.order)
        self.chars: list[tuple[str, ...]] = [()] * (h.n + 1)
        self.cyclic = [False] * (h.n + 1)
        self.strict_preds: list[tuple[int, ...]] = [()] * (h.n + 1)
        self.no_in_at_all = [False] * (h.n + 1)
        for r, c in enumerate(order.order, start=1):
            self.chars[r] = h.label_sets[c]
            self.cyclic[r] = h.cyclic[c]
            self.strict_preds[r] = tuple(
                sorted(order.rank[u] + 1 for u in h.strict_in_edges(c))
            )
            self.no_in_at_all[r] = not h.has_any_incoming(c)

    def pred_ranks(self, r: int) -> tuple[int, ...]:
        """In-neighbor ranks, self-loop included as the rank itself."""
        return self.strict_preds[r] + ((r,) if self.cyclic[r] else ())


class _ConstraintRankView:
    """The acyclic constraint graph re-indexed by 1-based rank."""

    def __init__(self, g: AtomicGraph) -> None:
        try:
            order = topo_sort(g)
        except CyclicGraphError as exc:
            raise CyclicConstraintError("constraint graph must be acyclic") from exc
        self.n = g.n
        self.label = [""] * (g.n + 1)
        self.preds: list[tuple[int, ...]] = [()] * (g.n + 1)
        for r, v in enumerate(order.order, start=1):
            self.label[r] = g.labels[v]
            self.preds[r] = tuple(sorted(order.rank[u] + 1 for u in g.in_edges[v]))
        self.sink_ranks = tuple(sorted(order.rank[v] + 1 for v in sink_vertices(g)))


def _fill_cyclic(
    r1: _CondensedRankView,
    r2: _CondensedRankView,
    r3: _ConstraintRankView,
    inter: LabelIntersections,
) -> list[list[list[ExtLen]]]:
    zero = ExtLen.finite(0)
    d: list[list[list[ExtLen]]] = [
        [[NEG_INF] * (r3.n + 1) for _ in range(r2.n)] for _ in range(r1.n)
    ]
    for i in range(1, r1.n + 1):
        ci = r1.comp_at[i]
        xs = r1.pred_ranks(i)
        for j in range(1, r2.n + 1):
            cj = r2.comp_at[j]
            ys = r2.pred_ranks(j)
            shared = inter.common[ci][cj]
            delta = POS_INF if r1.cyclic[i] and r2.cyclic[j] else ExtLen.finite(1)

            if shared:
                best = delta + zero
                for x in xs:
                    for y in ys:
                        if x == i and y == j:
                            continue
                        cand = delta + d[x - 1][y - 1][0]
                        if cand > best:
                            best = cand
            else:
                best = zero
                for x in r1.strict_preds[i]:
                    if d[x - 1][j - 1][0] > best:
                        best = d[x - 1][j - 1][0]
                for y in r2.strict_preds[j]:
                    if d[i - 1][y - 1][0] > best:
                        best = d[i - 1][y - 1][0]
            d[i - 1][j - 1][0] = best

            for k in range(1, r3.n + 1):
                k_is_source = not r3.preds[k]
                if _member(shared, r3.label[k]):
                    gamma_ok = k_is_source and (
                        r1.no_in_at_all[i] or r2.no_in_at_all[j]
                    )
                    best = delta + (zero if gamma_ok else NEG_INF)
                    zs = (0,) if k_is_source else r3.preds[k]
                    for x in xs:
                        for y in ys:
                            for z in zs:
                                cand = delta + d[x - 1][y - 1][z]
                                if cand > best:
                                    best = cand
                elif shared:
                    best = NEG_INF
                    for x in xs:
                        for y in ys:
                            if x == i and y == j:
                                continue
                            cand = delta + d[x - 1][y - 1][k]
                            if cand > best:
                                best = cand
                else:
                    best = NEG_INF
                    for x in r1.strict_preds[i]:
                        if d[x - 1][j - 1][k] > best:
                            best = d[x - 1][j - 1][k]
                    for y in r2.strict_preds[j]:
                        if d[i - 1][y - 1][k] > best:
                            best = d[i - 1][y - 1][k]
                d[i - 1][j - 1][k] = best
    return d


def _prepare(
    g1: AtomicGraph, g2: AtomicGraph, g3: AtomicGraph
) -> tuple[_CondensedRankView, _CondensedRankView, _ConstraintRankView, LabelIntersections]:
    for g in (g1, g2, g3):
        if g.n == 0:
            raise EmptyGraphError("input graph has no vertices")
    r3 = _ConstraintRankView(g3)
    h1, h2 = condense(g1), condense(g2)
    inter = build_intersection_index(h1, h2)
    return _CondensedRankView(h1), _CondensedRankView(h2), r3, inter


def seq_ic_cyclic_table(g1: AtomicGraph, g2: AtomicGraph, g3: AtomicGraph) -> CondensedSeqIcTable:
    """The full condensed constrained table (for inspection and tests)."""
    r1, r2, r3, inter = _prepare(g1, g2, g3)
    d = _fill_cyclic(r1, r2, r3, inter)
    return CondensedSeqIcTable(values=tuple(tuple(tuple(col) for col in row) for row in d))


def seq_ic_lcs_cyclic(g1: AtomicGraph, g2: AtomicGraph, g3: AtomicGraph) -> ExtLen:
    """SEQ-IC-LCS length where g1 and g2 may be cyclic; g3 must be acyclic.

    POS_INF means the candidate set contains strings of unbounded length,
    NEG_INF that it is empty.  On acyclic targets this agrees exactly with
    :func:`glcs.dag.seq_ic_lcs_dag`.  O(|E1||E2||E3| +
    |V1||V2||V3| log alphabet) time, O(|V1||V2||V3|) space.

    Raises:
        CyclicConstraintError: if g3 contains a cycle.
        EmptyGraphError: if any input has no vertices.
    """
    r1, r2, r3, inter = _prepare(g1, g2, g3)
    d = _fill_cyclic(r1, r2, r3, inter)
    best = NEG_INF
    for i in range(r1.n):
        for j in range(r2.n):
            for k in r3.sink_ranks:
                if d[i][j][k] > best:
                    best = d[i][j][k]
    return best


def _back_edges(g: AtomicGraph) -> set[tuple[int, int]]:
    """Edges that close a cycle, w.r.t. an index-ordered iterative DFS."""
    white, gray, black = 0, 1, 2
    color = [white] * g.n
    back: set[tuple[int, int]] = set()
    for root in range(g.n):
        if color[root] != white:
            continue
        color[root] = gray
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, ei = stack[-1]
            advanced = False
            while ei < len(g.out_edges[v]):
                w = g.out_edges[v][ei]
                ei += 1
                if color[w] == white:
                    color[w] = gray
                    stack[-1] = (v, ei)
                    stack.append((w, 0))
                    advanced = True
                    break
                if color[w] == gray:
                    back.add((v, w))
            if not advanced:
                color[v] = black
                stack.pop()
    return back


def unroll_bounded(g: AtomicGraph, times: int) -> AtomicGraph:
    """Acyclic approximation of ``g`` allowing ``times`` back-edge crossings.

    Copies the graph into ``times`` + 1 layers; non-back edges stay inside
    a layer and each back-edge crossing advances one layer, so every walk
    of the result is a walk of ``g`` crossing back edges at most ``times``
    times in total.  Layer copies unreachable from layer 0 are dropped.
    Acyclic inputs are returned unchanged.  Oracle support only: the
    result's maximal-path strings may include strings dominated (as
    subsequences) by longer ones, which never changes an oracle maximum.
    """
    if times < 1:
        raise ValueError(f"times must be >= 1, got {times}")
    back = _back_edges(g)
    if not back:
        return g
    layers = times + 1
    n = g.n

    def vid(v: int, layer: int) -> int:
        return layer * n + v

    edges: list[tuple[int, int]] = []
    for u, v in g.edges():
        if (u, v) in back:
            edges.extend((vid(u, lv), vid(v, lv + 1)) for lv in range(layers - 1))
        else:
            edges.extend((vid(u, lv), vid(v, lv)) for lv in range(layers))
    adj: list[list[int]] = [[] for _ in range(n * layers)]
    for u, v in edges:
        adj[u].append(v)
    keep = [False] * (n * layers)
    queue = list(range(n))
    for v in queue:
        keep[v] = True
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if not keep[v]:
                keep[v] = True
                queue.append(v)
    remap = {old: new for new, old in enumerate(i for i in range(n * layers) if keep[i])}
    labels = [g.labels[old % n] for old in remap]
    kept_edges = [(remap[u], remap[v]) for u, v in edges if keep[u] and keep[v]]
    return AtomicGraph.from_edges(labels, kept_edges)
