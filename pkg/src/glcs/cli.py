"""Command-line interface.

Every command writes its result to standard output and diagnostics to
standard error.  Exit codes: 0 = computed answer (including no-solution),
1 = parse/validation/usage error, 2 = structural error (cyclic constraint,
cyclic input to an acyclic-only command, empty graph), 3 = oracle capacity
exceeded.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from .cyclic import seq_ic_lcs_cyclic
from .dag import lcs_dag, seq_ic_lcs_dag, seq_ic_lcs_dag_witness
from .errors import (
    CyclicConstraintError,
    CyclicGraphError,
    EmptyGraphError,
    GlcsError,
    InfeasibleShapeError,
    ParseError,
    TooLargeError,
)
from .extlen import ExtLen
from .fileformat import parse_graph, serialize_condensed, serialize_graph
from .graphs import AtomicGraph, atomic_to_labeled, atomize, condense, topo_sort
from .oracle import gen_random_graph, oracle_infinite_probe, oracle_seq_ic

__all__ = ["main"]


class _UsageError(GlcsError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for structural
    # errors here, so route usage problems to exit code 1 instead.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _load_atomic(path: str) -> AtomicGraph:
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    g = atomize(parse_graph(text))
    if g.n == 0:
        raise EmptyGraphError(f"{path}: graph has no vertices")
    return g


def _is_acyclic(g: AtomicGraph) -> bool:
    try:
        topo_sort(g)
        return True
    except CyclicGraphError:
        return False


def _format(value: ExtLen) -> str:
    if value.is_pos_inf:
        return "inf"
    if value.is_neg_inf:
        return "no-solution"
    return str(value.value)


def _cmd_lcs(args: argparse.Namespace) -> int:
    g1 = _load_atomic(args.g1)
    g2 = _load_atomic(args.g2)
    print(lcs_dag(g1, g2))
    return 0


def _cmd_seq_ic(args: argparse.Namespace) -> int:
    g1 = _load_atomic(args.g1)
    g2 = _load_atomic(args.g2)
    g3 = _load_atomic(args.g3)
    if not _is_acyclic(g3):
        raise CyclicConstraintError(f"{args.g3}: constraint graph must be acyclic")
    if _is_acyclic(g1) and _is_acyclic(g2):
        if args.witness:
            witness = seq_ic_lcs_dag_witness(g1, g2, g3)
            result = seq_ic_lcs_dag(g1, g2, g3)
            print(_format(result))
            if witness is not None:
                print(witness)
        else:
            print(_format(seq_ic_lcs_dag(g1, g2, g3)))
    else:
        if args.witness:
            raise CyclicGraphError("--witness requires acyclic target graphs")
        print(_format(seq_ic_lcs_cyclic(g1, g2, g3)))
    return 0


def _cmd_oracle_seq_ic(args: argparse.Namespace) -> int:
    g1 = _load_atomic(args.g1)
    g2 = _load_atomic(args.g2)
    g3 = _load_atomic(args.g3)
    if not _is_acyclic(g3):
        raise CyclicConstraintError(f"{args.g3}: constraint graph must be acyclic")
    if _is_acyclic(g1) and _is_acyclic(g2):
        print(_format(oracle_seq_ic(g1, g2, g3)))
    else:
        probe = oracle_infinite_probe(g1, g2, g3, t_max=args.max_unroll)
        if probe.verdict == "growing":
            print("growing")
        else:
            print(f"stable {_format(probe.values[-1])}")
    return 0


def _cmd_atomize(args: argparse.Namespace) -> int:
    try:
        text = open(args.g, encoding="utf-8").read()
    except OSError as exc:
        raise _UsageError(f"cannot read {args.g}: {exc}") from exc
    print(serialize_graph(atomic_to_labeled(atomize(parse_graph(text)))), end="")
    return 0


def _cmd_condense(args: argparse.Namespace) -> int:
    try:
        text = open(args.g, encoding="utf-8").read()
    except OSError as exc:
        raise _UsageError(f"cannot read {args.g}: {exc}") from exc
    print(serialize_condensed(condense(atomize(parse_graph(text)))), end="")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    g = gen_random_graph(
        seed=args.seed,
        n_vertices=args.vertices,
        n_edges=args.edges,
        alphabet_size=args.alphabet,
        dag_only=args.dag,
    )
    print(serialize_graph(g), end="")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="glcs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lcs", help="LCS length of two acyclic labeled graphs")
    p.add_argument("g1")
    p.add_argument("g2")
    p.set_defaults(func=_cmd_lcs)

    p = sub.add_parser(
        "seq-ic", help="SEQ-IC-LCS length of two targets and an acyclic constraint"
    )
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("g3")
    p.add_argument(
        "--witness",
        action="store_true",
        help="also print a witness string (acyclic finite case only)",
    )
    p.set_defaults(func=_cmd_seq_ic)

    p_oracle = sub.add_parser("oracle", help="brute-force reference computations")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)
    p = oracle_sub.add_parser("seq-ic", help="brute-force SEQ-IC-LCS value or probe")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("g3")
    p.add_argument("--max-unroll", type=int, default=4, metavar="N")
    p.set_defaults(func=_cmd_oracle_seq_ic)

    p = sub.add_parser("atomize", help="print the single-character form of a graph")
    p.add_argument("g")
    p.set_defaults(func=_cmd_atomize)

    p = sub.add_parser("condense", help="print the SCC condensation of a graph")
    p.add_argument("g")
    p.set_defaults(func=_cmd_condense)

    p = sub.add_parser("gen", help="print a reproducible pseudo-random graph")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--dag", action="store_true")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (ParseError, InfeasibleShapeError, _UsageError, ValueError) as exc:
        print(f"glcs: error: {exc}", file=sys.stderr)
        return 1
    except (CyclicGraphError, CyclicConstraintError, EmptyGraphError) as exc:
        print(f"glcs: error: {exc}", file=sys.stderr)
        return 2
    except TooLargeError as exc:
        print(f"glcs: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
