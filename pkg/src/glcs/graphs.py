"""Graph representations: labeled input graphs, their single-character
(atomic) form, topological orders, and SCC condensations.

All types are immutable after construction; all operations are pure.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import CyclicGraphError

__all__ = [
    "LabeledGraph",
    "AtomicGraph",
    "TopoOrder",
    "CondensedGraph",
    "atomize",
    "atomic_to_labeled",
    "topo_sort",
    "condense",
    "sink_vertices",
]


@dataclass(frozen=True)
class LabeledGraph:
    """Directed graph whose vertices carry non-empty string labels.

    ``vertices`` is a sequence of (id, label) pairs with unique ids;
    ``edges`` is a sequence of (from_id, to_id) pairs over declared ids.
    Self-loops are allowed, duplicate edges are not.
    """

    vertices: tuple[tuple[int, str], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ids = set()
        for vid, label in self.vertices:
            if vid < 0:
                raise ValueError(f"vertex id must be unsigned, got {vid}")
            if vid in ids:
                raise ValueError(f"duplicate vertex id {vid}")
            if not label:
                raise ValueError(f"vertex {vid} has an empty label")
            ids.add(vid)
        seen = set()
        for u, v in self.edges:
            if u not in ids or v not in ids:
                raise ValueError(f"edge ({u}, {v}) references an undeclared vertex")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @property
    def n(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class AtomicGraph:
    """Directed graph with one character per vertex, densely indexed.

    ``out_edges[v]`` and ``in_edges[v]`` list neighbor indices; the two
    views describe the same edge set.
    """

    labels: tuple[str, ...]
    out_edges: tuple[tuple[int, ...], ...]
    in_edges: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(
        cls, labels: list[str] | tuple[str, ...], edges: list[tuple[int, int]]
    ) -> AtomicGraph:
        n = len(labels)
        for c in labels:
            if len(c) != 1:
                raise ValueError(f"atomic label must be a single character, got {c!r}")
        outs: list[list[int]] = [[] for _ in range(n)]
        ins: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            outs[u].append(v)
            ins[v].append(u)
        return cls(
            labels=tuple(labels),
            out_edges=tuple(tuple(a) for a in outs),
            in_edges=tuple(tuple(a) for a in ins),
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.out_edges)

    def in_degree(self, v: int) -> int:
        return len(self.in_edges[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out_edges[u]]


@dataclass(frozen=True)
class TopoOrder:
    """A topological order: ``order[r]`` is the vertex at rank r, and
    ``rank[v]`` its inverse.  For every edge (u, v), rank[u] < rank[v]."""

    order: tuple[int, ...]
    rank: tuple[int, ...]


@dataclass(frozen=True)
class CondensedGraph:
    """SCC condensation of an :class:`AtomicGraph`.

    Component vertices carry sorted character sets.  ``cyclic[c]`` is true
    iff the component has >= 2 members or its single member had a self-loop;
    exactly those components carry a self-loop edge here.  ``in_edges`` and
    ``out_edges`` include self-loops; the component graph with self-loops
    removed is acyclic.
    """

    label_sets: tuple[tuple[str, ...], ...]
    cyclic: tuple[bool, ...]
    out_edges: tuple[tuple[int, ...], ...]
    in_edges: tuple[tuple[int, ...], ...]
    member_map: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.label_sets)

    def has_self_loop(self, c: int) -> bool:
        return self.cyclic[c]

    def has_any_incoming(self, c: int) -> bool:
        """True if c has in-coming edges at all, self-loops included."""
        return len(self.in_edges[c]) > 0

    def strict_in_edges(self, c: int) -> tuple[int, ...]:
        """In-neighbors excluding the self-loop."""
        return tuple(u for u in self.in_edges[c] if u != c)

    def topo_order(self) -> TopoOrder:
        """Topological order of the component graph, self-loops ignored."""
        strict = [tuple(v for v in self.out_edges[u] if v != u) for u in range(self.n)]
        return _kahn(self.n, strict)


def atomize(g: LabeledGraph) -> AtomicGraph:
    """Expand every string-labeled vertex into a chain of character vertices.

    An original edge (u, w) becomes an edge from the last chain vertex of u
    to the first chain vertex of w.  The result represents the same set of
    path strings, so its subsequence set is unchanged.  Vertices are laid
    out in ascending original-id order; runs in time linear in |g|.
    """
    chain_first: dict[int, int] = {}
    chain_last: dict[int, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    for vid, label in sorted(g.vertices):
        chain_first[vid] = len(labels)
        for i, ch in enumerate(label):
            if i > 0:
                edges.append((len(labels) - 1, len(labels)))
            labels.append(ch)
        chain_last[vid] = len(labels) - 1
    for u, w in g.edges:
        edges.append((chain_last[u], chain_first[w]))
    return AtomicGraph.from_edges(labels, edges)


def atomic_to_labeled(g: AtomicGraph) -> LabeledGraph:
    """View an atomic graph as a labeled graph with ids 1..n."""
    return LabeledGraph(
        vertices=tuple((v + 1, g.labels[v]) for v in range(g.n)),
        edges=tuple((u + 1, v + 1) for u, v in g.edges()),
    )


def _kahn(n: int, out_edges: list[tuple[int, ...]] | tuple[tuple[int, ...], ...]) -> TopoOrder:
    # Ties broken by ascending vertex index for deterministic tables.
    indeg = [0] * n
    for u in range(n):
        for v in out_edges[u]:
            indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in out_edges[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(order) != n:
        raise CyclicGraphError("graph contains a directed cycle")
    rank = [0] * n
    for r, v in enumerate(order):
        rank[v] = r
    return TopoOrder(order=tuple(order), rank=tuple(rank))


def topo_sort(g: AtomicGraph) -> TopoOrder:
    """Topologically sort an acyclic atomic graph.

    Raises:
        CyclicGraphError: if the graph contains a directed cycle
            (a self-loop counts).
    """
    return _kahn(g.n, g.out_edges)


def sink_vertices(g: AtomicGraph) -> frozenset[int]:
    """Vertices with no out-going edges (ends of maximal paths)."""
    return frozenset(v for v in range(g.n) if not g.out_edges[v])


def _tarjan_sccs(g: AtomicGraph) -> list[list[int]]:
    """Strongly connected components, iteratively (no recursion limit)."""
    n = g.n
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, ei = work[-1]
            if ei == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while ei < len(g.out_edges[v]):
                w = g.out_edges[v][ei]
                ei += 1
                if index[w] == -1:
                    work[-1] = (v, ei)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    return sccs


def condense(g: AtomicGraph) -> CondensedGraph:
    """Contract each strongly connected component to one set-labeled vertex.

    Inter-component edges are deduplicated.  A component gets a self-loop,
    and is flagged cyclic, iff it has >= 2 members or its single member had
    a self-loop in ``g``; either way its characters can repeat unboundedly,
    which keeps the subsequence set unchanged.  Components are numbered by
    ascending smallest member index.
    """
    sccs = _tarjan_sccs(g)
    sccs.sort(key=min)
    member_map = [0] * g.n
    for ci, comp in enumerate(sccs):
        for v in comp:
            member_map[v] = ci
    label_sets = tuple(tuple(sorted({g.labels[v] for v in comp})) for comp in sccs)
    cyclic = [len(comp) >= 2 for comp in sccs]
    edge_set = set()
    for u, v in g.edges():
        cu, cv = member_map[u], member_map[v]
        if cu == cv:
            cyclic[cu] = True  # covers single vertices with input self-loops
        else:
            edge_set.add((cu, cv))
    for ci, flag in enumerate(cyclic):
        if flag:
            edge_set.add((ci, ci))
    outs: list[list[int]] = [[] for _ in sccs]
    ins: list[list[int]] = [[] for _ in sccs]
    for cu, cv in sorted(edge_set):
        outs[cu].append(cv)
        ins[cv].append(cu)
    return CondensedGraph(
        label_sets=label_sets,
        cyclic=tuple(cyclic),
        out_edges=tuple(tuple(a) for a in outs),
        in_edges=tuple(tuple(a) for a in ins),
        member_map=tuple(member_map),
    )
