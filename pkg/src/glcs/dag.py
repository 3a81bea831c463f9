"""Dynamic programs over acyclic atomic graphs: plain LCS of two DAGs and
SEQ-IC-LCS of three DAGs.

Vertices are addressed by 1-based topological rank throughout; rank 0 is
the empty-prefix layer.  Cells are filled in ascending (i, j, k) order; any
cell only references strictly smaller ranks in the coordinates it varies,
so the order is valid, and fixing it makes tables and witnesses
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyGraphError
from .extlen import NEG_INF, ExtLen
from .graphs import AtomicGraph, sink_vertices, topo_sort

__all__ = [
    "LcsTable",
    "SeqIcTable",
    "lcs_table",
    "lcs_dag",
    "seq_ic_table",
    "seq_ic_lcs_dag",
    "seq_ic_lcs_dag_witness",
]


@dataclass(frozen=True)
class LcsTable:
    """Dense (|V1|+1) x (|V2|+1) table of LCS lengths; row/column 0 is the
    empty layer.  Cell (i, j) is the length of a longest common subsequence
    of label strings of paths ending at the rank-i and rank-j vertices."""

    values: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.values), len(self.values[0]))


@dataclass(frozen=True)
class SeqIcTable:
    """Dense |V1| x |V2| x (|V3|+1) table of constrained LCS lengths.

    ``values[i-1][j-1][k]`` is the cell for ranks (i, j, k); layer k = 0
    holds the unconstrained values and agrees with :class:`LcsTable`.
    """

    values: tuple[tuple[tuple[ExtLen, ...], ...], ...]

    @property
    def shape(self) -> tuple[int, int, int]:
        return (len(self.values), len(self.values[0]), len(self.values[0][0]))

    @property
    def cell_count(self) -> int:
        n1, n2, n3 = self.shape
        return n1 * n2 * n3


class _RankView:
    """A topologically sorted graph re-indexed by 1-based rank."""

    def __init__(self, g: AtomicGraph) -> None:
        order = topo_sort(g)
        self.n = g.n
        self.label = [""] * (g.n + 1)
        self.preds: list[tuple[int, ...]] = [()] * (g.n + 1)
        for r, v in enumerate(order.order, start=1):
            self.label[r] = g.labels[v]
            self.preds[r] = tuple(sorted(order.rank[u] + 1 for u in g.in_edges[v]))
        self.sink_ranks = tuple(sorted(order.rank[v] + 1 for v in sink_vertices(g)))


def _fill_lcs(r1: _RankView, r2: _RankView) -> list[list[int]]:
    c = [[0] * (r2.n + 1) for _ in range(r1.n + 1)]
    for i in range(1, r1.n + 1):
        for j in range(1, r2.n + 1):
            if r1.label[i] == r2.label[j]:
                best = 0
                for x in r1.preds[i]:
                    for y in r2.preds[j]:
                        if c[x][y] > best:
                            best = c[x][y]
                c[i][j] = 1 + best
            else:
                best = 0
                for x in r1.preds[i]:
                    if c[x][j] > best:
                        best = c[x][j]
                for y in r2.preds[j]:
                    if c[i][y] > best:
                        best = c[i][y]
                c[i][j] = best
    return c


def lcs_table(g1: AtomicGraph, g2: AtomicGraph) -> LcsTable:
    """The full LCS table for two acyclic atomic graphs.

    Raises:
        CyclicGraphError: if either input has a cycle.
    """
    c = _fill_lcs(_RankView(g1), _RankView(g2))
    return LcsTable(values=tuple(tuple(row) for row in c))


def lcs_dag(g1: AtomicGraph, g2: AtomicGraph) -> int:
    """Length of a longest string that is a subsequence of both graphs.

    O(|E1||E2|) time, O(|V1||V2|) space.
    """
    c = _fill_lcs(_RankView(g1), _RankView(g2))
    return max(max(row) for row in c)


def _fill_seq_ic(
    r1: _RankView,
    r2: _RankView,
    r3: _RankView,
    start_bonus: bool,
    record: bool,
) -> tuple[list[list[list[ExtLen]]], list[list[int]], dict | None]:
    """Fill the three-dimensional constrained table.

    The matched-triple case descends to constraint layer z for actual
    predecessors z of k, or to layer 0 exactly when v3's rank-k vertex has
    no in-coming edges: a constraint path must start at a source of g3.
    ``start_bonus`` is the single-character base; it applies only when one
    target vertex and the constraint vertex are both sources (forcing it
    off exists for tests).  Each cell scans full predecessor triples, which
    sums to O(|E1||E2||E3|) over the table.
    """
    lcs = _fill_lcs(r1, r2)
    one = ExtLen.finite(1)
    d: list[list[list[ExtLen]]] = [
        [[NEG_INF] * (r3.n + 1) for _ in range(r2.n)] for _ in range(r1.n)
    ]
    choices: dict | None = {} if record else None
    for i in range(1, r1.n + 1):
        for j in range(1, r2.n + 1):
            d[i - 1][j - 1][0] = ExtLen.finite(lcs[i][j])
            for k in range(1, r3.n + 1):
                l1, l2, l3 = r1.label[i], r2.label[j], r3.label[k]
                k_is_source = not r3.preds[k]
                if l1 == l2 == l3:
                    if start_bonus and k_is_source and (not r1.preds[i] or not r2.preds[j]):
                        best, tag = one, ("start",)
                    else:
                        best, tag = NEG_INF, None
                    zs = (0,) if k_is_source else r3.preds[k]
                    for x in r1.preds[i]:
                        for y in r2.preds[j]:
                            for z in zs:
                                cand = d[x - 1][y - 1][z] + 1
                                if cand > best:
                                    best, tag = cand, ("diag3", x, y, z)
                elif l1 == l2:
                    best, tag = NEG_INF, None
                    for x in r1.preds[i]:
                        for y in r2.preds[j]:
                            cand = d[x - 1][y - 1][k] + 1
                            if cand > best:
                                best, tag = cand, ("diag2", x, y)
                else:
                    best, tag = NEG_INF, None
                    for x in r1.preds[i]:
                        if d[x - 1][j - 1][k] > best:
                            best, tag = d[x - 1][j - 1][k], ("left", x)
                    for y in r2.preds[j]:
                        if d[i - 1][y - 1][k] > best:
                            best, tag = d[i - 1][y - 1][k], ("right", y)
                d[i - 1][j - 1][k] = best
                if choices is not None and tag is not None:
                    choices[(i, j, k)] = tag
    return d, lcs, choices


def _require_nonempty(*graphs: AtomicGraph) -> None:
    for g in graphs:
        if g.n == 0:
            raise EmptyGraphError("input graph has no vertices")


def seq_ic_table(g1: AtomicGraph, g2: AtomicGraph, g3: AtomicGraph) -> SeqIcTable:
    """The full constrained table for three acyclic atomic graphs."""
    _require_nonempty(g1, g2, g3)
    d, _, _ = _fill_seq_ic(_RankView(g1), _RankView(g2), _RankView(g3), True, False)
    return SeqIcTable(values=tuple(tuple(tuple(col) for col in row) for row in d))


def _best_over_sinks(
    d: list[list[list[ExtLen]]], r1: _RankView, r2: _RankView, r3: _RankView
) -> tuple[ExtLen, tuple[int, int, int] | None]:
    best = NEG_INF
    at = None
    for i in range(1, r1.n + 1):
        for j in range(1, r2.n + 1):
            for k in r3.sink_ranks:
                if d[i - 1][j - 1][k] > best:
                    best = d[i - 1][j - 1][k]
                    at = (i, j, k)
    return best, at


def _seq_ic_value(
    g1: AtomicGraph, g2: AtomicGraph, g3: AtomicGraph, start_bonus: bool = True
) -> ExtLen:
    _require_nonempty(g1, g2, g3)
    r1, r2, r3 = _RankView(g1), _RankView(g2), _RankView(g3)
    d, _, _ = _fill_seq_ic(r1, r2, r3, start_bonus, False)
    best, _ = _best_over_sinks(d, r1, r2, r3)
    return best


def seq_ic_lcs_dag(g1: AtomicGraph, g2: AtomicGraph, g3: AtomicGraph) -> ExtLen:
    """SEQ-IC-LCS length of three acyclic atomic graphs.

    This is the length of a longest string z such that z is a subsequence
    of both g1 and g2 and some maximal-path string of g3 is a subsequence
    of z.  NEG_INF means no such z exists; the result is never POS_INF.
    The answer is the table maximum over cells whose constraint vertex has
    no out-going edges.  O(|E1||E2||E3|) time, O(|V1||V2||V3|) space.

    Raises:
        CyclicGraphError: if any input has a cycle.
        EmptyGraphError: if any input has no vertices.
    """
    return _seq_ic_value(g1, g2, g3)


def seq_ic_lcs_dag_witness(g1: AtomicGraph, g2: AtomicGraph, g3: AtomicGraph) -> str | None:
    """A witness string attaining :func:`seq_ic_lcs_dag`, or None.

    When the length is finite, returns a string of exactly that length that
    is a subsequence of a maximal-path string of g1 and of g2 and contains
    some maximal-path string of g3 as a subsequence.  Ties are broken by
    the first attaining predecessor in scan order, so the witness is
    deterministic.
    """
    _require_nonempty(g1, g2, g3)
    r1, r2, r3 = _RankView(g1), _RankView(g2), _RankView(g3)
    d, lcs, choices = _fill_seq_ic(r1, r2, r3, True, True)
    best, at = _best_over_sinks(d, r1, r2, r3)
    if at is None or not best.is_finite:
        return None
    assert choices is not None
    out: list[str] = []
    i, j, k = at
    while k > 0:
        tag = choices[(i, j, k)]
        kind = tag[0]
        if kind == "start":
            out.append(r1.label[i])
            return "".join(reversed(out))
        if kind == "diag3":
            out.append(r1.label[i])
            i, j, k = tag[1], tag[2], tag[3]
        elif kind == "diag2":
            out.append(r1.label[i])
            i, j = tag[1], tag[2]
        elif kind == "left":
            i = tag[1]
        else:
            j = tag[1]
    # Constraint fully embedded; finish with an unconstrained LCS traceback.
    while lcs[i][j] > 0:
        if r1.label[i] == r2.label[j]:
            out.append(r1.label[i])
            target = lcs[i][j] - 1
            if target == 0:
                break
            found = False
            for x in r1.preds[i]:
                for y in r2.preds[j]:
                    if lcs[x][y] == target:
                        i, j = x, y
                        found = True
                        break
                if found:
                    break
        else:
            moved = False
            for x in r1.preds[i]:
                if lcs[x][j] == lcs[i][j]:
                    i, moved = x, True
                    break
            if not moved:
                for y in r2.preds[j]:
                    if lcs[i][y] == lcs[i][j]:
                        j = y
                        break
    return "".join(reversed(out))
