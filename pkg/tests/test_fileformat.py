import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glcs import (
    LabeledGraph,
    ParseError,
    atomize,
    condense,
    gen_random_graph,
    parse_graph,
    serialize_condensed,
    serialize_graph,
)

label_text = st.text(
    alphabet=st.sampled_from('ab "\\\t.'), min_size=1, max_size=6
)


class TestParse:
    def test_minimal_graph(self):
        g = parse_graph("vertex 1 a\nvertex 2 b\nedge 1 2\n")
        assert g.vertices == ((1, "a"), (2, "b"))
        assert g.edges == ((1, 2),)

    def test_comments_and_blanks_ignored(self):
        g = parse_graph("# header\n\n  \nvertex 1 abc\n  # indented comment\n")
        assert g.vertices == ((1, "abc"),)

    def test_quoted_label_with_spaces_and_escapes(self):
        g = parse_graph('vertex 1 "a b\\"c\\\\d"\n')
        assert g.vertices[0][1] == 'a b"c\\d'

    def test_self_loop_allowed(self):
        g = parse_graph("vertex 1 a\nedge 1 1\n")
        assert g.edges == ((1, 1),)

    @pytest.mark.parametrize(
        "text,line,fragment",
        [
            ("vertex 1 a\nedge 1 2\n", 2, "unknown endpoint"),
            ("vertex 1 a\nvertex 1 b\n", 2, "duplicate vertex id"),
            ('vertex 1 ""\n', 1, "empty label"),
            ("vertex 1 a\nedge 1 1\nedge 1 1\n", 3, "duplicate edge"),
            ("vertex x a\n", 1, "unsigned integer"),
            ("vertex 1\n", 1, "needs an id and a label"),
            ("edge 1\n", 1, "needs two ids"),
            ("frobnicate 1 2\n", 1, "unknown directive"),
            ('vertex 1 "abc\n', 1, "unterminated"),
            ('vertex 1 "a\\x"\n', 1, "invalid escape"),
            ('vertex 1 ab"cd\n', 1, "unexpected quote"),
            ('vertex 1 "ab"cd\n', 1, "token boundary"),
        ],
    )
    def test_rejects_malformed_input(self, text, line, fragment):
        with pytest.raises(ParseError) as exc:
            parse_graph(text)
        assert exc.value.line == line
        assert fragment in exc.value.reason


class TestSerialize:
    def test_round_trip_random_graphs(self):
        rng = random.Random(8)
        for trial in range(30):
            n = rng.randint(1, 6)
            dag = trial % 2 == 0
            max_m = n * (n - 1) // 2 if dag else n * n
            g = gen_random_graph(trial, n, rng.randint(0, min(8, max_m)), 3, dag_only=dag)
            assert parse_graph(serialize_graph(g)) == g

    @given(label_text)
    def test_round_trip_awkward_labels(self, label):
        g = LabeledGraph(vertices=((1, label),), edges=((1, 1),))
        assert parse_graph(serialize_graph(g)) == g

    def test_empty_graph_serializes_to_empty_text(self):
        g = LabeledGraph(vertices=(), edges=())
        assert serialize_graph(g) == ""
        assert parse_graph("") == g

    def test_condensed_output_marks_cycles(self):
        g = atomize(parse_graph("vertex 1 a\nvertex 2 b\nvertex 3 c\nedge 1 2\nedge 2 1\nedge 2 3\n"))
        text = serialize_condensed(condense(g))
        assert text == 'vertex 1 "ab" cyclic\nvertex 2 "c"\nedge 1 1\nedge 1 2\n'
