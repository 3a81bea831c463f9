"""Length values extended with -inf / +inf sentinels.

The DP recurrences use -inf for "no candidate string exists" and +inf for
"candidate strings of unbounded length exist".  Addition follows the one
convention that plain IEEE floats would get wrong:

    inf + (-inf) = -inf

i.e. an unbounded bonus never resurrects an unreachable state.
"""

from __future__ import annotations

import functools

__all__ = ["ExtLen", "NEG_INF", "POS_INF"]


@functools.total_ordering
class ExtLen:
    """An element of {-inf} | {0, 1, 2, ...} | {+inf}, totally ordered."""

    __slots__ = ("_v",)

    def __init__(self, v: float) -> None:
        # Finite values are stored as non-negative ints; the two infinities
        # are the float sentinels.  Use finite()/NEG_INF/POS_INF, not this.
        self._v = v

    @classmethod
    def finite(cls, n: int) -> ExtLen:
        if n < 0:
            raise ValueError(f"finite length must be >= 0, got {n}")
        return cls(int(n))

    @property
    def is_finite(self) -> bool:
        return isinstance(self._v, int)

    @property
    def is_neg_inf(self) -> bool:
        return self._v == float("-inf")

    @property
    def is_pos_inf(self) -> bool:
        return self._v == float("inf")

    @property
    def value(self) -> int:
        """The finite value; raises on either infinity."""
        if not self.is_finite:
            raise ValueError(f"{self!r} has no finite value")
        return self._v

    def __add__(self, other: ExtLen | int) -> ExtLen:
        a = self._v
        b = other._v if isinstance(other, ExtLen) else other
        neg = float("-inf")
        if a == neg or b == neg:
            return NEG_INF
        if a == float("inf") or b == float("inf"):
            return POS_INF
        return ExtLen(a + b)

    __radd__ = __add__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtLen):
            return self._v == other._v
        return NotImplemented

    def __lt__(self, other: ExtLen) -> bool:
        if isinstance(other, ExtLen):
            return self._v < other._v
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._v)

    def __repr__(self) -> str:
        if self.is_neg_inf:
            return "ExtLen(-inf)"
        if self.is_pos_inf:
            return "ExtLen(+inf)"
        return f"ExtLen({self._v})"


NEG_INF = ExtLen(float("-inf"))
POS_INF = ExtLen(float("inf"))
