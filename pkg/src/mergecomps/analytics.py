"""Closed-form comparison counts for MergeSort and their real-valued bounds.

Every integer quantity here is computed with exact integer arithmetic.  The
worst case ``W(n)`` has four independent evaluations (closed form, literal
sum of ceiling logs, level decomposition, recurrence) so they can be checked
against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional


class DomainError(ValueError):
    """Raised when an argument lies outside a formula's domain."""


def ceil_lg(n: int) -> int:
    """Least ``k`` with ``2**k >= n``, via bit length (no float logs)."""
    if n < 1:
        raise DomainError(f"ceil_lg undefined for n={n}")
    return (n - 1).bit_length()


def floor_lg(n: int) -> int:
    if n < 1:
        raise DomainError(f"floor_lg undefined for n={n}")
    return n.bit_length() - 1


# -- worst case W(n) ----------------------------------------------------------

def w_closed(n: int) -> int:
    """``n*ceil(lg n) - 2**ceil(lg n) + 1``, with ``W(0) = W(1) = 0``."""
    if n < 0:
        raise DomainError(f"W undefined for n={n}")
    if n <= 1:
        return 0
    h = ceil_lg(n)
    return n * h - (1 << h) + 1


def w_sum(n: int) -> int:
    """Literal sum of ``ceil(lg i)`` for ``i = 1..n``."""
    if n < 1:
        raise DomainError(f"w_sum needs n >= 1, got {n}")
    return sum(ceil_lg(i) for i in range(1, n + 1))


def w_levels(n: int) -> int:
    """Sum of ``n - 2**y`` over ``y = 0 .. ceil(lg n) - 1``."""
    if n < 1:
        raise DomainError(f"w_levels needs n >= 1, got {n}")
    return sum(n - (1 << y) for y in range(ceil_lg(n)))


def w_recurrence(n: int) -> int:
    """Evaluate ``W(n) = W(n//2) + W(n - n//2) + n - 1`` with ``W(1) = 0``.

    Only the arguments actually reached are tabulated: at each depth the
    halves take at most two adjacent values, so the table has O(log n)
    entries.  They are collected top-down and evaluated bottom-up, without
    recursion.
    """
    if n < 1:
        raise DomainError(f"w_recurrence needs n >= 1, got {n}")
    needed = {n}
    frontier = {n}
    while frontier:
        nxt = set()
        for m in frontier:
            if m >= 2:
                nxt.update((m // 2, m - m // 2))
        nxt -= needed
        needed |= nxt
        frontier = nxt
    table = {}
    for m in sorted(needed):
        if m == 1:
            table[m] = 0
        else:
            table[m] = table[m // 2] + table[m - m // 2] + m - 1
    return table[n]


def level_comps(n: int, k: int) -> int:
    """Worst-case comparisons done by all merges at recursion level ``k``."""
    if n < 1:
        raise DomainError(f"level_comps needs n >= 1, got {n}")
    if k < 0:
        raise DomainError(f"level index must be non-negative, got {k}")
    return max(n - (1 << k), 0)


def rough_upper(n: int) -> int:
    """The coarse bound ``(n - 1) * ceil(lg n)``."""
    return (n - 1) * ceil_lg(n)


# -- theta / epsilon / delta --------------------------------------------------

@dataclass(frozen=True)
class EpsilonPoint:
    n: float
    theta: float
    epsilon: float


def _lg(n: float) -> float:
    return math.log2(n)


def theta(n: float) -> float:
    """``ceil(lg n) - lg n`` in ``[0, 1)``; exact powers of two give 0."""
    if n <= 0:
        raise DomainError(f"theta undefined for n={n}")
    lg = _lg(n)
    top = ceil_lg(n) if isinstance(n, int) else math.ceil(lg)
    t = top - lg
    if t >= 1.0 or t < 0.0:
        t = 0.0
    return t


def epsilon(n: float) -> EpsilonPoint:
    t = theta(n)
    eps = 1.0 + t - 2.0 ** t
    # 1 + t - 2**t >= 0 on [0, 1]; rounding can dip below near t = 0.
    return EpsilonPoint(n=n, theta=t, epsilon=max(eps, 0.0))


def delta() -> float:
    """Supremum of epsilon: ``1 - lg e + lg lg e``."""
    lg_e = math.log2(math.e)
    return 1.0 - lg_e + math.log2(lg_e)


def epsilon_argmax(k: int) -> float:
    """The real ``n`` in ``[2**k, 2**(k+1)]`` where epsilon attains delta."""
    return math.ldexp(2.0 * math.log(2.0), k)


# -- smooth and integer bounds -------------------------------------------------

def smooth_bounds(n: int) -> tuple[float, float]:
    """``(n lg n - n + 1, n lg n - (1 - delta) n + 1)``."""
    if n < 1:
        raise DomainError(f"bounds need n >= 1, got {n}")
    nlgn = n * _lg(n)
    return nlgn - n + 1.0, nlgn - (1.0 - delta()) * n + 1.0


def w_real(n: float) -> float:
    """The closed form for W extended to real ``n >= 1``."""
    if n < 1:
        raise DomainError(f"w_real needs n >= 1, got {n}")
    h = math.ceil(_lg(n))
    return n * h - 2.0 ** h + 1.0


def integer_bounds(n: int, c: float = 0.913) -> tuple[int, int]:
    """``(ceil(n lg n) - n + 1, ceil(n lg n - c n))``."""
    if n < 1:
        raise DomainError(f"bounds need n >= 1, got {n}")
    nlgn = n * _lg(n)
    return math.ceil(nlgn) - n + 1, math.ceil(nlgn - c * n)


def exceeds_integer_upper(n: int, c: float) -> bool:
    """True when ``W(n) > ceil(n lg n - c n)``, i.e. constant ``c`` is too big."""
    return w_closed(n) > integer_bounds(n, c)[1]


def first_integer_upper_violation(c: float, n_max: int) -> Optional[int]:
    for n in range(1, n_max + 1):
        if exceeds_integer_upper(n, c):
            return n
    return None


# -- best case B(n) ------------------------------------------------------------

@dataclass(frozen=True)
class DyadicHalf:
    """An exact multiple of 1/2, stored as twice its value."""

    twice_value: int

    @classmethod
    def of_int(cls, k: int) -> "DyadicHalf":
        return cls(2 * k)

    def __add__(self, other: "DyadicHalf") -> "DyadicHalf":
        return DyadicHalf(self.twice_value + other.twice_value)

    def __sub__(self, other: "DyadicHalf") -> "DyadicHalf":
        return DyadicHalf(self.twice_value - other.twice_value)

    def __neg__(self) -> "DyadicHalf":
        return DyadicHalf(-self.twice_value)

    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self.twice_value}/2 is not an integer")
        return self.twice_value // 2

    def __float__(self) -> float:
        return self.twice_value / 2


def scaled_zigzag(n: int, k: int) -> DyadicHalf:
    """``2**k * Zigzag(n / 2**(k+1))`` as an exact half-integer.

    With ``r = n mod 2**(k+1)`` the distance from ``n / 2**(k+1)`` to the
    nearest integer is ``min(r, 2**(k+1) - r) / 2**(k+1)``; scaling by
    ``2**k`` leaves a denominator of 2.
    """
    m = 1 << (k + 1)
    r = n % m
    return DyadicHalf(min(r, m - r))


def best_case(n: int) -> int:
    """Minimum MergeSort comparisons on ``n`` keys.

    ``n/2 * (floor(lg n) + 1) - sum_k 2**k Zigzag(n / 2**(k+1))`` for
    ``k = 0..floor(lg n)``, evaluated in half units.
    """
    if n < 1:
        raise DomainError(f"best_case needs n >= 1, got {n}")
    top = floor_lg(n)
    total = DyadicHalf(n * (top + 1))
    for k in range(top + 1):
        total = total - scaled_zigzag(n, k)
    assert total.is_integer(), f"half units failed to cancel at n={n}"
    return total.to_int()


def bit_sum(n: int) -> int:
    """Total number of one bits in the binary forms of ``0 .. n-1``."""
    if n < 1:
        raise DomainError(f"bit_sum needs n >= 1, got {n}")
    return sum(i.bit_count() for i in range(n))


# -- recursion tree statistics -------------------------------------------------

class TreeStats(NamedTuple):
    depth: int
    nodes: int
    calls: int
    s_n: int
    a_n: Optional[float]


def node_size_sum(n: int) -> int:
    """Sum of subarray sizes over every node of the recursion tree."""
    if n < 1:
        raise DomainError(f"node_size_sum needs n >= 1, got {n}")
    h = ceil_lg(n)
    return n * h - (1 << h) + 2 * n


def average_call_size(n: int) -> float:
    """Mean subarray size over the ``2(n-1)`` recursive calls."""
    if n < 2:
        raise DomainError("average call size needs n >= 2 (no recursive calls)")
    return 0.5 * (1.0 + 1.0 / (n - 1)) * (_lg(n) + epsilon(n).epsilon)


def tree_stats(n: int) -> TreeStats:
    """Depth, node count, call count, size sum and mean call size.

    ``a_n`` is ``None`` for ``n == 1``; call :func:`average_call_size`
    directly to get a :class:`DomainError` instead.
    """
    if n < 1:
        raise DomainError(f"tree_stats needs n >= 1, got {n}")
    return TreeStats(
        depth=ceil_lg(n),
        nodes=2 * n - 1,
        calls=2 * (n - 1),
        s_n=node_size_sum(n),
        a_n=average_call_size(n) if n >= 2 else None,
    )


class LevelCensus(NamedTuple):
    leaves_h1: int
    internals_h1: int
    leaves_h: int


def level_census(n: int) -> LevelCensus:
    """Node counts on the last two levels: leaves and internals at ``h-1``, leaves at ``h``."""
    if n < 2:
        raise DomainError(f"level_census needs n >= 2, got {n}")
    h = ceil_lg(n)
    return LevelCensus(
        leaves_h1=(1 << h) - n,
        internals_h1=n - (1 << (h - 1)),
        leaves_h=2 * n - (1 << h),
    )


# -- one row of everything -----------------------------------------------------

@dataclass(frozen=True)
class AnalyticsRow:
    n: int
    w: int
    b: int
    lower: float
    upper: float
    epsilon: float
    depth: int
    nodes: int
    calls: int
    s_n: int
    leaves_h1: int
    internals_h1: int
    leaves_h: int


def analytics_row(n: int) -> AnalyticsRow:
    lower, upper = smooth_bounds(n)
    stats = tree_stats(n)
    if n >= 2:
        census = level_census(n)
    else:
        # a single leaf at level 0, nothing above it
        census = LevelCensus(0, 0, 1)
    return AnalyticsRow(
        n=n,
        w=w_closed(n),
        b=best_case(n),
        lower=lower,
        upper=upper,
        epsilon=epsilon(n).epsilon,
        depth=stats.depth,
        nodes=stats.nodes,
        calls=stats.calls,
        s_n=stats.s_n,
        leaves_h1=census.leaves_h1,
        internals_h1=census.internals_h1,
        leaves_h=census.leaves_h,
    )
