"""Independent brute-force references and a reproducible instance generator.

The load-bearing fact used throughout: the graph SEQ-IC-LCS equals the
maximum of the string SEQ-IC-LCS over all triples of maximal-path strings,
because every path extends to a maximal path (so subsequence sets agree)
and the constraint ranges over maximal-path strings of g3 by definition.

Enumerations are capped and refuse to answer (TooLargeError) rather than
approximate.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .cyclic import unroll_bounded
from .errors import (
    CyclicConstraintError,
    CyclicGraphError,
    EmptyGraphError,
    InfeasibleShapeError,
    TooLargeError,
)
from .extlen import NEG_INF, ExtLen
from .graphs import AtomicGraph, CondensedGraph, LabeledGraph, topo_sort
from .strings import seq_ic_lcs_strings

__all__ = [
    "PathStrings",
    "ProbeResult",
    "maximal_path_strings",
    "oracle_seq_ic",
    "oracle_infinite_probe",
    "gen_random_graph",
    "expand_condensed",
    "bounded_subsequences",
    "compare_bounded_subsequences",
]

DEFAULT_MAX_COUNT = 5000
DEFAULT_MAX_LEN = 32


@dataclass(frozen=True)
class PathStrings:
    """Deduplicated, sorted path strings; ``truncated`` is set when an
    enumeration cap was hit (the set may then be incomplete)."""

    strings: tuple[str, ...]
    truncated: bool


def _is_acyclic(g: AtomicGraph) -> bool:
    try:
        topo_sort(g)
        return True
    except CyclicGraphError:
        return False


def maximal_path_strings(
    g: AtomicGraph,
    max_count: int = DEFAULT_MAX_COUNT,
    max_len: int = DEFAULT_MAX_LEN,
) -> PathStrings:
    """Label strings of maximal paths (acyclic) or bounded walks (cyclic).

    For an acyclic graph these are exactly the strings of paths from
    in-degree-0 vertices to out-degree-0 vertices, up to the caps.  For a
    cyclic graph, walks are grown from every vertex and cut at ``max_len``.
    """
    if g.n == 0:
        return PathStrings((), False)
    if _is_acyclic(g):
        starts = [v for v in range(g.n) if g.in_degree(v) == 0]
        bounded = False
    else:
        starts = list(range(g.n))
        bounded = True
    strings: set[str] = set()
    truncated = False
    budget = max_count
    for s in starts:
        stack: list[tuple[int, int]] = [(s, 0)]
        chars: list[str] = [g.labels[s]]
        while stack:
            if budget <= 0:
                truncated = True
                return PathStrings(strings=tuple(sorted(strings)), truncated=True)
            v, ci = stack[-1]
            outs = g.out_edges[v]
            if ci == 0 and (not outs or (bounded and len(chars) >= max_len)):
                strings.add("".join(chars))
                budget -= 1
                if bounded and outs:
                    truncated = True
                stack.pop()
                chars.pop()
            elif ci < len(outs):
                w = outs[ci]
                stack[-1] = (v, ci + 1)
                if len(chars) + 1 > max_len:
                    truncated = True
                    budget -= 1
                    continue
                stack.append((w, 0))
                chars.append(g.labels[w])
            else:
                stack.pop()
                chars.pop()
    return PathStrings(strings=tuple(sorted(strings)), truncated=truncated)


def oracle_seq_ic(
    g1: AtomicGraph,
    g2: AtomicGraph,
    g3: AtomicGraph,
    max_count: int = DEFAULT_MAX_COUNT,
    max_len: int = DEFAULT_MAX_LEN,
) -> ExtLen:
    """SEQ-IC-LCS by direct evaluation of the problem statement.

    Maximizes the string SEQ-IC-LCS over all triples of maximal-path
    strings of the three (acyclic) inputs.

    Raises:
        TooLargeError: if any enumeration hits a cap.
        CyclicGraphError / CyclicConstraintError: on cyclic inputs.
        EmptyGraphError: on empty inputs.
    """
    for g in (g1, g2, g3):
        if g.n == 0:
            raise EmptyGraphError("input graph has no vertices")
    if not _is_acyclic(g3):
        raise CyclicConstraintError("constraint graph must be acyclic")
    for g in (g1, g2):
        if not _is_acyclic(g):
            raise CyclicGraphError("oracle requires acyclic target graphs")
    sets = [maximal_path_strings(g, max_count, max_len) for g in (g1, g2, g3)]
    if any(ps.truncated for ps in sets):
        raise TooLargeError("path enumeration exceeded caps; oracle refuses to answer")
    strs1 = sorted(sets[0].strings, key=len, reverse=True)
    strs2 = sorted(sets[1].strings, key=len, reverse=True)
    strs3 = sets[2].strings
    best = NEG_INF
    for s1 in strs1:
        if best.is_finite and best.value >= len(s1):
            break
        for s2 in strs2:
            cap = min(len(s1), len(s2))
            if best.is_finite and best.value >= cap:
                break
            for q in strs3:
                if len(q) > cap:
                    continue
                cand = seq_ic_lcs_strings(s1, s2, q)
                if cand > best:
                    best = cand
    return best


@dataclass(frozen=True)
class ProbeResult:
    """Oracle values for unroll depths 1..t and the growth verdict."""

    values: tuple[ExtLen, ...]
    verdict: str  # "growing" | "stable"


def oracle_infinite_probe(
    g1: AtomicGraph, g2: AtomicGraph, g3: AtomicGraph, t_max: int = 4
) -> ProbeResult:
    """Desk-scale probe for unbounded answers via bounded unrolling.

    Evaluates the oracle on targets unrolled t = 1..t_max times.  Verdict
    is "growing" when the last two values strictly increase (the hallmark
    of an unbounded answer) and "stable" when they are equal.
    """
    if t_max < 2:
        raise ValueError(f"t_max must be >= 2, got {t_max}")
    if not _is_acyclic(g3):
        raise CyclicConstraintError("constraint graph must be acyclic")
    values = tuple(
        oracle_seq_ic(unroll_bounded(g1, t), unroll_bounded(g2, t), g3)
        for t in range(1, t_max + 1)
    )
    if values[-1] > values[-2]:
        verdict = "growing"
    elif values[-1] == values[-2]:
        verdict = "stable"
    else:
        raise RuntimeError("oracle value decreased under deeper unrolling")
    return ProbeResult(values=values, verdict=verdict)


def gen_random_graph(
    seed: int,
    n_vertices: int,
    n_edges: int,
    alphabet_size: int,
    dag_only: bool = False,
) -> LabeledGraph:
    """Deterministic pseudo-random single-character-labeled graph.

    Uses ``random.Random(seed)`` (Mersenne Twister), so any given seed
    reproduces the same graph.  Vertex ids are 1..n; labels are drawn
    uniformly from the first ``alphabet_size`` letters.  With ``dag_only``
    the edges respect a random vertex order; otherwise any simple edge,
    self-loops included, may appear.

    Raises:
        InfeasibleShapeError: if ``n_edges`` exceeds the shape's capacity.
    """
    if n_vertices < 1:
        raise ValueError("n_vertices must be >= 1")
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be >= 1")
    if n_edges < 0:
        raise ValueError("n_edges must be >= 0")
    max_edges = n_vertices * (n_vertices - 1) // 2 if dag_only else n_vertices * n_vertices
    if n_edges > max_edges:
        raise InfeasibleShapeError(
            f"{n_edges} edges impossible with {n_vertices} vertices"
            f"{' (dag)' if dag_only else ''}"
        )
    rng = random.Random(seed)
    ids = list(range(1, n_vertices + 1))
    vertices = tuple((vid, chr(ord("a") + rng.randrange(alphabet_size))) for vid in ids)
    if dag_only:
        position = {vid: r for r, vid in enumerate(rng.sample(ids, n_vertices))}
        candidates = [(u, v) for u in ids for v in ids if position[u] < position[v]]
    else:
        candidates = [(u, v) for u in ids for v in ids]
    edges = tuple(sorted(rng.sample(candidates, n_edges)))
    return LabeledGraph(vertices=vertices, edges=edges)


def expand_condensed(h: CondensedGraph) -> AtomicGraph:
    """Atomic graph with the same subsequence set as a condensed graph.

    A cyclic component becomes a complete digraph (self-loops included)
    over its characters, since any character sequence from the set labels
    some walk inside the component; a component edge connects all character
    vertices of its endpoints.
    """
    offsets: list[int] = []
    labels: list[str] = []
    for chars in h.label_sets:
        offsets.append(len(labels))
        labels.extend(chars)
    edges: list[tuple[int, int]] = []
    for c in range(h.n):
        if h.cyclic[c]:
            span = range(offsets[c], offsets[c] + len(h.label_sets[c]))
            edges.extend((a, b) for a in span for b in span)
    for cu in range(h.n):
        for cv in h.out_edges[cu]:
            if cu == cv:
                continue
            edges.extend(
                (a, b)
                for a in range(offsets[cu], offsets[cu] + len(h.label_sets[cu]))
                for b in range(offsets[cv], offsets[cv] + len(h.label_sets[cv]))
            )
    return AtomicGraph.from_edges(labels, edges)


class _SubseqMachine:
    """Nondeterministic matcher for "u is a subsequence of some walk string".

    States are (vertex, offset-into-label) positions about to read one
    character.  Walk characters may be skipped freely, so matching one
    candidate character means: take any number of free reads, then read a
    state whose character matches.  Frontiers are bitmasks over states.
    """

    def __init__(self, g: LabeledGraph) -> None:
        succ: dict[int, list[int]] = {vid: [] for vid, _ in g.vertices}
        for u, v in g.edges:
            succ[u].append(v)
        label_of = dict(g.vertices)
        state_ids: dict[tuple[int, int], int] = {}
        chars: list[str] = []
        for vid, label in g.vertices:
            for p in range(len(label)):
                state_ids[(vid, p)] = len(chars)
                chars.append(label[p])
        n = len(chars)
        end = 1 << n  # absorbing bit: the walk may simply stop after a match
        consume = [end] * n  # states after reading state s's character
        for (vid, p), s in state_ids.items():
            label = label_of[vid]
            if p + 1 < len(label):
                consume[s] |= 1 << state_ids[(vid, p + 1)]
            else:
                for w in succ[vid]:
                    consume[s] |= 1 << state_ids[(w, 0)]
        # Reflexive-transitive closure of `consume` = skipping any prefix.
        closure = [1 << s for s in range(n)]
        for s in range(n):
            seen = closure[s]
            frontier = seen
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    low = m & -m
                    t = low.bit_length() - 1
                    if t < n:
                        nxt |= consume[t]
                    m ^= low
                frontier = nxt & ~seen
                seen |= nxt
            closure[s] = seen
        self.alphabet = tuple(sorted(set(chars)))
        # step[c][s]: states reachable by skipping from s, then matching c.
        self.step: dict[str, list[int]] = {c: [0] * (n + 1) for c in self.alphabet}
        for s in range(n):
            for c in self.alphabet:
                acc = 0
                m = closure[s]
                while m:
                    low = m & -m
                    t = low.bit_length() - 1
                    if t < n and chars[t] == c:
                        acc |= consume[t]
                    m ^= low
                self.step[c][s] = acc
        self.start = (1 << n) - 1 if n else 0

    def advance(self, frontier: int, c: str) -> int:
        table = self.step.get(c)
        if table is None:
            return 0
        acc = 0
        m = frontier
        while m:
            low = m & -m
            acc |= table[low.bit_length() - 1]
            m ^= low
        return acc


def bounded_subsequences(g: LabeledGraph, max_len: int) -> frozenset[str]:
    """All strings of length <= max_len that are subsequences of some walk
    string of ``g``.  Exact: no walk-length cap is involved."""
    machine = _SubseqMachine(g)
    if machine.start == 0:
        return frozenset()
    found = {""}
    stack: list[tuple[str, int]] = [("", machine.start)]
    while stack:
        prefix, frontier = stack.pop()
        if len(prefix) >= max_len:
            continue
        for c in machine.alphabet:
            nxt = machine.advance(frontier, c)
            if nxt:
                s = prefix + c
                found.add(s)
                stack.append((s, nxt))
    return frozenset(found)


def compare_bounded_subsequences(
    ga: LabeledGraph, gb: LabeledGraph, max_len: int
) -> str | None:
    """Exact equality check of bounded subsequence sets.

    Returns None when the two graphs admit exactly the same subsequences of
    length <= max_len, else a shortest string in one set but not the other.
    Runs as a breadth-first walk over frontier pairs, so shared frontiers
    are explored once regardless of how many prefixes reach them.
    """
    ma, mb = _SubseqMachine(ga), _SubseqMachine(gb)
    if (ma.start == 0) != (mb.start == 0):
        return ""
    alphabet = tuple(sorted(set(ma.alphabet) | set(mb.alphabet)))
    queue: deque[tuple[str, int, int]] = deque([("", ma.start, mb.start)])
    seen = {(ma.start, mb.start)}
    while queue:
        prefix, fa, fb = queue.popleft()
        if len(prefix) >= max_len:
            continue
        for c in alphabet:
            na, nb = ma.advance(fa, c), mb.advance(fb, c)
            if (na == 0) != (nb == 0):
                return prefix + c
            if na and (na, nb) not in seen:
                seen.add((na, nb))
                queue.append((prefix + c, na, nb))
    return None
