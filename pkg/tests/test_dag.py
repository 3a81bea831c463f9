import itertools
import random

import pytest
from helpers import build_atomic, chain_graph, is_subsequence, random_dag, random_string

from glcs import (
    CyclicGraphError,
    EmptyGraphError,
    maximal_path_strings,
    oracle_seq_ic,
    topo_sort,
)
from glcs.dag import (
    _seq_ic_value,
    lcs_dag,
    lcs_table,
    seq_ic_lcs_dag,
    seq_ic_lcs_dag_witness,
    seq_ic_table,
)
from glcs.extlen import NEG_INF, ExtLen
from glcs.graphs import AtomicGraph
from glcs.strings import lcs_strings, seq_ic_lcs_strings


class TestLcsDag:
    def test_unary_paths(self):
        assert lcs_dag(chain_graph("ab"), chain_graph("ba")) == 1
        assert lcs_dag(chain_graph("abc"), chain_graph("abc")) == 3

    def test_empty_graph_gives_zero(self):
        empty = AtomicGraph.from_edges([], [])
        assert lcs_dag(empty, chain_graph("abc")) == 0

    def test_cyclic_input_rejected(self):
        with pytest.raises(CyclicGraphError):
            lcs_dag(build_atomic("a", [(0, 0)]), chain_graph("a"))

    def test_matches_maximal_path_pairs(self):
        for seed in range(40):
            g1, g2 = random_dag(seed * 2), random_dag(seed * 2 + 1)
            want = 0
            for s1 in maximal_path_strings(g1).strings:
                for s2 in maximal_path_strings(g2).strings:
                    want = max(want, lcs_strings(s1, s2))
            assert lcs_dag(g1, g2) == want

    def test_unary_reduction_matches_string_lcs(self):
        rng = random.Random(3)
        for _ in range(100):
            a = random_string(rng, "abc", 1, 7)
            b = random_string(rng, "abc", 1, 7)
            assert lcs_dag(chain_graph(a), chain_graph(b)) == lcs_strings(a, b)


class TestSeqIcDag:
    def test_single_matching_vertex(self):
        g = chain_graph("a")
        assert seq_ic_lcs_dag(g, g, g) == ExtLen.finite(1)

    def test_unmatched_constraint(self):
        g = chain_graph("abcd")
        assert seq_ic_lcs_dag(g, g, chain_graph("z")) == NEG_INF

    def test_empty_input_rejected(self):
        empty = AtomicGraph.from_edges([], [])
        with pytest.raises(EmptyGraphError):
            seq_ic_lcs_dag(empty, chain_graph("a"), chain_graph("a"))
        with pytest.raises(EmptyGraphError):
            seq_ic_lcs_dag(chain_graph("a"), chain_graph("a"), empty)

    def test_cyclic_input_rejected(self):
        loop = build_atomic("a", [(0, 0)])
        with pytest.raises(CyclicGraphError):
            seq_ic_lcs_dag(loop, chain_graph("a"), chain_graph("a"))

    def test_unary_reduction_random(self):
        rng = random.Random(9)
        for _ in range(150):
            a = random_string(rng, "abc", 1, 7)
            b = random_string(rng, "abc", 1, 7)
            p = random_string(rng, "abc", 1, 3)
            got = seq_ic_lcs_dag(chain_graph(a), chain_graph(b), chain_graph(p))
            assert got == seq_ic_lcs_strings(a, b, p), (a, b, p)

    def test_unary_reduction_exhaustive_binary(self):
        strings = [
            "".join(t)
            for r in range(1, 5)
            for t in itertools.product("ab", repeat=r)
        ]
        pattern_graphs = [(p, chain_graph(p)) for p in strings]
        for a in strings:
            ga = chain_graph(a)
            for b in strings:
                gb = chain_graph(b)
                for p, gp in pattern_graphs:
                    got = seq_ic_lcs_dag(ga, gb, gp)
                    assert got == seq_ic_lcs_strings(a, b, p), (a, b, p)

    def test_matches_oracle_on_random_dags(self):
        for trial in range(40):
            g1 = random_dag(trial * 3)
            g2 = random_dag(trial * 3 + 1)
            g3 = random_dag(trial * 3 + 2)
            assert seq_ic_lcs_dag(g1, g2, g3) == oracle_seq_ic(g1, g2, g3), trial

    def test_result_bounded_by_lcs(self):
        for trial in range(30):
            g1 = random_dag(trial * 5 + 1)
            g2 = random_dag(trial * 5 + 2)
            g3 = random_dag(trial * 5 + 3)
            result = seq_ic_lcs_dag(g1, g2, g3)
            assert result <= ExtLen.finite(lcs_dag(g1, g2))

    def test_edge_monotonicity(self):
        # adding an acyclicity-preserving edge to g1 never lowers the answer
        rng = random.Random(21)
        for trial in range(25):
            g1 = random_dag(trial + 400, max_n=5, max_edges=4)
            g2 = random_dag(trial + 500)
            g3 = random_dag(trial + 600, max_n=3, max_edges=2)
            base = seq_ic_lcs_dag(g1, g2, g3)
            order = topo_sort(g1)
            candidates = [
                (u, v)
                for u in range(g1.n)
                for v in range(g1.n)
                if order.rank[u] < order.rank[v] and v not in g1.out_edges[u]
            ]
            if not candidates:
                continue
            u, v = rng.choice(candidates)
            bigger = AtomicGraph.from_edges(list(g1.labels), g1.edges() + [(u, v)])
            assert seq_ic_lcs_dag(bigger, g2, g3) >= base


class TestRecurrenceDiscipline:
    def test_layer_zero_agrees_with_lcs_table(self):
        for trial in range(20):
            g1 = random_dag(trial + 50)
            g2 = random_dag(trial + 51)
            g3 = random_dag(trial + 52)
            table3 = seq_ic_table(g1, g2, g3)
            table2 = lcs_table(g1, g2)
            for i in range(1, g1.n + 1):
                for j in range(1, g2.n + 1):
                    assert table3.values[i - 1][j - 1][0] == ExtLen.finite(
                        table2.values[i][j]
                    )

    def test_start_bonus_gamma_discipline(self):
        g = chain_graph("a")
        assert _seq_ic_value(g, g, g) == ExtLen.finite(1)
        # with the base forced to -inf, a single shared character has no
        # other way to start, and the answer collapses
        assert _seq_ic_value(g, g, g, start_bonus=False) == NEG_INF
        # a two-char instance where only the first match needs the base
        g2 = chain_graph("ab")
        assert _seq_ic_value(g2, g2, g2) == ExtLen.finite(2)
        assert _seq_ic_value(g2, g2, g2, start_bonus=False) == NEG_INF

    def test_constraint_prefix_cannot_be_dropped(self):
        # constraint "ba" requires the b before the a: matching the final a
        # must descend to the constraint's predecessor layer, never layer 0
        g = chain_graph("xa")
        assert seq_ic_lcs_dag(g, g, chain_graph("ba")) == NEG_INF

    def test_constraint_must_start_at_source(self):
        # "a" alone is not a maximal path string of the two-vertex chain ba
        g = chain_graph("a")
        assert seq_ic_lcs_dag(g, g, chain_graph("ba")) == NEG_INF

    def test_table_shape_is_dense(self):
        g1, g2, g3 = random_dag(7), random_dag(8), random_dag(9)
        table = seq_ic_table(g1, g2, g3)
        assert table.shape == (g1.n, g2.n, g3.n + 1)
        assert table.cell_count == g1.n * g2.n * (g3.n + 1)


class TestWitness:
    def test_trivials(self):
        g = chain_graph("a")
        assert seq_ic_lcs_dag_witness(g, g, g) == "a"
        g2 = chain_graph("ab")
        assert seq_ic_lcs_dag_witness(g2, g2, g2) == "ab"

    def test_no_witness_when_impossible(self):
        g = chain_graph("abc")
        assert seq_ic_lcs_dag_witness(g, g, chain_graph("z")) is None

    def test_witness_properties_random(self):
        for trial in range(40):
            g1 = random_dag(trial * 3 + 1000)
            g2 = random_dag(trial * 3 + 1001)
            g3 = random_dag(trial * 3 + 1002)
            result = seq_ic_lcs_dag(g1, g2, g3)
            witness = seq_ic_lcs_dag_witness(g1, g2, g3)
            if not result.is_finite:
                assert witness is None
                continue
            assert witness is not None
            assert len(witness) == result.value
            paths1 = maximal_path_strings(g1).strings
            paths2 = maximal_path_strings(g2).strings
            paths3 = maximal_path_strings(g3).strings
            assert any(is_subsequence(witness, s) for s in paths1)
            assert any(is_subsequence(witness, s) for s in paths2)
            assert any(is_subsequence(q, witness) for q in paths3)

    def test_witness_deterministic(self):
        g1, g2, g3 = random_dag(77), random_dag(78), random_dag(79)
        assert seq_ic_lcs_dag_witness(g1, g2, g3) == seq_ic_lcs_dag_witness(g1, g2, g3)
