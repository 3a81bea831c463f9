"""Shared test utilities: tiny graph builders and brute-force references."""

from __future__ import annotations

import itertools
import random

from glcs import AtomicGraph, LabeledGraph, atomize, gen_random_graph
from glcs.extlen import NEG_INF, ExtLen


def chain_graph(s: str) -> AtomicGraph:
    """Unary path graph spelling exactly ``s``."""
    return atomize(LabeledGraph(vertices=((1, s),), edges=()))


def build_atomic(labels: str, edges: list[tuple[int, int]]) -> AtomicGraph:
    return AtomicGraph.from_edges(list(labels), edges)


def random_dag(seed: int, max_n: int = 6, max_edges: int = 8, alphabet: int = 3) -> AtomicGraph:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(0, min(max_edges, n * (n - 1) // 2))
    return atomize(gen_random_graph(seed * 7 + 1, n, m, alphabet, dag_only=True))


def random_digraph(seed: int, max_n: int = 5, max_edges: int = 8, alphabet: int = 3) -> AtomicGraph:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(0, min(max_edges, n * n))
    return atomize(gen_random_graph(seed * 13 + 5, n, m, alphabet, dag_only=False))


def random_string(rng: random.Random, alphabet: str, min_len: int, max_len: int) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))


def is_subsequence(u: str, s: str) -> bool:
    it = iter(s)
    return all(c in it for c in u)


def distinct_subsequences(s: str) -> set[str]:
    out = {""}
    for r in range(1, len(s) + 1):
        out.update("".join(pick) for pick in itertools.combinations(s, r))
    return out


def brute_seq_ic(a: str, b: str, p: str) -> ExtLen:
    """Exhaustive search over common subsequences containing ``p``."""
    best = -1
    for z in distinct_subsequences(a):
        if len(z) > best and is_subsequence(z, b) and is_subsequence(p, z):
            best = len(z)
    return NEG_INF if best < 0 else ExtLen.finite(best)


def all_strings(alphabet: str, max_len: int, min_len: int = 0) -> list[str]:
    out: list[str] = []
    for r in range(min_len, max_len + 1):
        out.extend("".join(t) for t in itertools.product(alphabet, repeat=r))
    return out


def curated_cyclic_instances() -> list[tuple[str, AtomicGraph, AtomicGraph, AtomicGraph, ExtLen]]:
    """Cyclic instances with hand-provable answers.

    Each answer follows from inspecting the finitely many shapes of common
    subsequences: a self-loop pumps its character forever, while any
    acyclic side caps the length.
    """
    from glcs.extlen import POS_INF

    loop_a = build_atomic("a", [(0, 0)])
    single_a = chain_graph("a")
    single_b = chain_graph("b")
    single_c = chain_graph("c")
    a_loop_to_b = build_atomic("ab", [(0, 0), (0, 1)])
    c_loop_to_b = build_atomic("cb", [(0, 0), (0, 1)])
    a_to_b_loop = build_atomic("ab", [(0, 1), (1, 1)])
    chain_ab = chain_graph("ab")
    two_cycle_ab = build_atomic("ab", [(0, 1), (1, 0)])
    two_cycle_to_c = build_atomic("abc", [(0, 1), (1, 0), (1, 2)])
    loop_c = build_atomic("c", [(0, 0)])
    return [
        ("pump shared char", loop_a, loop_a, single_a, POS_INF),
        ("constraint char absent", loop_a, loop_a, single_b, NEG_INF),
        ("loop bounded by plain chain", a_loop_to_b, chain_ab, single_b, ExtLen.finite(2)),
        ("loop bounded by finite repeats", loop_a, chain_graph("aaa"), single_a, ExtLen.finite(3)),
        ("two-cycles share chars", two_cycle_ab, two_cycle_ab, single_a, POS_INF),
        ("disjoint alphabets", two_cycle_ab, loop_c, single_a, NEG_INF),
        ("cycle against chain", two_cycle_ab, chain_ab, chain_ab, ExtLen.finite(2)),
        ("unbounded prefix before match", a_loop_to_b, a_loop_to_b, single_b, POS_INF),
        ("loops disagree, tail agrees", a_loop_to_b, c_loop_to_b, single_b, ExtLen.finite(1)),
        ("cycle drained into chain", two_cycle_to_c, chain_graph("abc"), single_c, ExtLen.finite(3)),
        ("two-char constraint pumped", loop_a, loop_a, chain_graph("aa"), POS_INF),
        ("cycle after the match", a_to_b_loop, a_to_b_loop, single_a, POS_INF),
    ]
