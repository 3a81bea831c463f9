"""LCS and SEQ-IC-LCS of labeled directed graphs.

A labeled graph represents the set of strings spelled along its paths; the
SEQ-IC-LCS of targets g1, g2 under constraint g3 is the longest string that
is a subsequence of both targets and contains some maximal-path string of
g3 as a subsequence.  Acyclic targets get an exact dynamic program; cyclic
targets are condensed by strongly connected component first, with +inf
marking unbounded answers.  A brute-force oracle cross-checks everything at
small scale.
"""

from .cyclic import (
    CondensedSeqIcTable,
    LabelIntersections,
    build_intersection_index,
    seq_ic_cyclic_table,
    seq_ic_lcs_cyclic,
    unroll_bounded,
)
from .dag import (
    LcsTable,
    SeqIcTable,
    lcs_dag,
    lcs_table,
    seq_ic_lcs_dag,
    seq_ic_lcs_dag_witness,
    seq_ic_table,
)
from .errors import (
    CyclicConstraintError,
    CyclicGraphError,
    EmptyGraphError,
    GlcsError,
    InfeasibleShapeError,
    ParseError,
    TooLargeError,
)
from .extlen import NEG_INF, POS_INF, ExtLen
from .fileformat import parse_graph, serialize_condensed, serialize_graph
from .graphs import (
    AtomicGraph,
    CondensedGraph,
    LabeledGraph,
    TopoOrder,
    atomic_to_labeled,
    atomize,
    condense,
    sink_vertices,
    topo_sort,
)
from .oracle import (
    PathStrings,
    ProbeResult,
    bounded_subsequences,
    compare_bounded_subsequences,
    expand_condensed,
    gen_random_graph,
    maximal_path_strings,
    oracle_infinite_probe,
    oracle_seq_ic,
)
from .strings import lcs_strings, seq_ic_lcs_strings

__all__ = [
    "AtomicGraph",
    "CondensedGraph",
    "CondensedSeqIcTable",
    "CyclicConstraintError",
    "CyclicGraphError",
    "EmptyGraphError",
    "ExtLen",
    "GlcsError",
    "InfeasibleShapeError",
    "LabelIntersections",
    "LabeledGraph",
    "LcsTable",
    "NEG_INF",
    "POS_INF",
    "ParseError",
    "PathStrings",
    "ProbeResult",
    "SeqIcTable",
    "TooLargeError",
    "TopoOrder",
    "atomic_to_labeled",
    "atomize",
    "bounded_subsequences",
    "build_intersection_index",
    "compare_bounded_subsequences",
    "condense",
    "expand_condensed",
    "gen_random_graph",
    "lcs_dag",
    "lcs_strings",
    "lcs_table",
    "maximal_path_strings",
    "oracle_infinite_probe",
    "oracle_seq_ic",
    "parse_graph",
    "seq_ic_cyclic_table",
    "seq_ic_lcs_cyclic",
    "seq_ic_lcs_dag",
    "seq_ic_lcs_dag_witness",
    "seq_ic_lcs_strings",
    "seq_ic_table",
    "serialize_condensed",
    "serialize_graph",
    "sink_vertices",
    "topo_sort",
    "unroll_bounded",
]
