"""Classic string DPs: plain LCS and subsequence-inclusion-constrained LCS.

These are the oracles the graph engines are checked against, and the exact
behavior the graph DPs must reproduce on unary-path inputs.  Clarity wins
over memory here: the constrained DP materializes its full table.
"""

from __future__ import annotations

from .extlen import NEG_INF, ExtLen

__all__ = ["lcs_strings", "seq_ic_lcs_strings"]


def lcs_strings(a: str, b: str) -> int:
    """Length of the longest common subsequence of ``a`` and ``b``.

    O(|a||b|) time, two rolling rows.
    """
    prev = [0] * (len(b) + 1)
    for i in range(1, len(a) + 1):
        cur = [0] * (len(b) + 1)
        ca = a[i - 1]
        for j in range(1, len(b) + 1):
            if ca == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = max(prev[j], cur[j - 1])
        prev = cur
    return prev[len(b)]


def seq_ic_lcs_strings(a: str, b: str, p: str) -> ExtLen:
    """Length of the longest common subsequence of ``a`` and ``b`` that
    contains ``p`` as a subsequence.

    Returns NEG_INF when no common subsequence contains ``p``; an empty
    ``p`` degrades to the plain LCS.  O(|a||b||p|) time and space.

    Table cell (i, j, k) holds the answer for the prefixes a[:i], b[:j],
    p[:k]; unreachable states are -inf, and layer k = 0 is the plain LCS.
    """
    na, nb, np_ = len(a), len(b), len(p)
    zero = ExtLen.finite(0)
    table = [
        [[zero if k == 0 else NEG_INF for k in range(np_ + 1)] for _ in range(nb + 1)]
        for _ in range(na + 1)
    ]
    for i in range(1, na + 1):
        ca = a[i - 1]
        for j in range(1, nb + 1):
            cb = b[j - 1]
            row = table[i][j]
            for k in range(np_ + 1):
                if ca == cb:
                    if k > 0 and ca == p[k - 1]:
                        row[k] = table[i - 1][j - 1][k - 1] + 1
                    else:
                        row[k] = table[i - 1][j - 1][k] + 1
                else:
                    row[k] = max(table[i - 1][j][k], table[i][j - 1][k])
    return table[na][nb][np_]
