"""Invariant suites run by ``mergecomps verify``.

Each suite scans ``n`` upward and stops at the first mismatch, returning a
:class:`Failure` that names the offending ``n`` and quantity, or ``None``.
"""

from __future__ import annotations

from typing import Callable, List, NamedTuple, Optional, Tuple

from . import analytics as an
from . import rectree
from .adversary import brute_force_max, brute_force_min, un_sort, worst_merge_split
from .sorters import binary_insertion_sort, merge_sort

TREE_CAP = 2048


class Failure(NamedTuple):
    n: int
    quantity: str
    detail: str = ""

    def __str__(self) -> str:
        text = f"n={self.n} quantity={self.quantity}"
        return f"{text} ({self.detail})" if self.detail else text


def closed_forms(n_max: int) -> Optional[Failure]:
    running = 0
    for n in range(1, n_max + 1):
        running += an.ceil_lg(n)
        w = an.w_closed(n)
        for name, value in (("w_sum", running), ("w_levels", an.w_levels(n)), ("w_recurrence", an.w_recurrence(n))):
            if value != w:
                return Failure(n, name, f"{value} != W={w}")
        if n >= 2 and w - an.w_closed(n - 1) != an.ceil_lg(n):
            return Failure(n, "W gap")
    return None


def level_decomposition(n_max: int) -> Optional[Failure]:
    for n in range(1, n_max + 1):
        h = an.ceil_lg(n)
        terms = [an.level_comps(n, k) for k in range(h + 2)]
        if sum(terms) != an.w_closed(n):
            return Failure(n, "sum of C_k")
        if any((c > 0) != (k <= h - 1) for k, c in enumerate(terms)):
            return Failure(n, "C_k positivity")
    return None


def smooth_bounds(n_max: int, rel_tol: float = 1e-9) -> Optional[Failure]:
    for n in range(2, n_max + 1):
        lower, upper = an.smooth_bounds(n)
        w = an.w_closed(n)
        tol = rel_tol * n
        if not lower - tol <= w <= upper + tol:
            return Failure(n, "smooth bounds", f"{lower} <= {w} <= {upper}")
    k = 0
    while 1 << k <= n_max:
        n = 1 << k
        if an.w_closed(n) != k * n - n + 1 or an.smooth_bounds(n)[0] != an.w_closed(n):
            return Failure(n, "lower bound equality")
        k += 1
    return None


def epsilon_below_delta(n_max: int) -> Optional[Failure]:
    d = an.delta()
    for n in range(1, n_max + 1):
        if not 0.0 <= an.epsilon(n).epsilon < d:
            return Failure(n, "epsilon")
    return None


def integer_bounds(n_max: int) -> Optional[Failure]:
    for n in range(1, n_max + 1):
        lower, upper = an.integer_bounds(n)
        if not lower <= an.w_closed(n) <= upper:
            return Failure(n, "integer bounds (0.913)")
    if n_max >= 11 and not an.exceeds_integer_upper(11, 0.914):
        return Failure(11, "0.914 counterexample")
    return None


def best_case_identity(n_max: int) -> Optional[Failure]:
    bits = 0
    for n in range(1, n_max + 1):
        # bit_sum(n) counts 0..n-1, so the running total lags by one term
        if an.best_case(n) != bits:
            return Failure(n, "B(n) vs bit sum")
        bits += n.bit_count()
    return None


def generator_keystone(n_max: int) -> Optional[Failure]:
    for n in range(1, n_max + 1):
        comps = merge_sort(un_sort(range(1, n + 1))).comps
        if comps != an.w_closed(n):
            return Failure(n, "merge_sort(un_sort) comps", f"{comps} != {an.w_closed(n)}")
    return None


def tree_census(n_max: int) -> Optional[Failure]:
    for n in range(1, min(n_max, TREE_CAP) + 1):
        bad = tree_mismatch(n)
        if bad:
            return Failure(n, bad)
    return None


def tree_mismatch(n: int) -> Optional[str]:
    """Name of the first structural fact that fails on the tree for ``n``."""
    t = rectree.build(n)
    by_level = rectree.levels(t)
    h = max(by_level)
    if h != an.ceil_lg(n):
        return "depth"
    nodes = [node for level in by_level.values() for node in level]
    if len(nodes) != 2 * n - 1:
        return "node count"
    if sum(node.size for node in nodes) != an.node_size_sum(n):
        return "S_n"
    leaves = [node for node in nodes if node.is_leaf]
    if len(leaves) != n:
        return "leaf count"
    for k, level in by_level.items():
        sizes = [node.size for node in level]
        if max(sizes) - min(sizes) > 1:
            return f"size spread at level {k}"
        worst = sum(node.size - 1 for node in level if not node.is_leaf)
        if worst != an.level_comps(n, k):
            return f"worst comps at level {k}"
    if n >= 2:
        if any(node.level < h - 1 for node in leaves):
            return "leaf above level h-1"
        census = an.level_census(n)
        if rectree.last_levels(t) != tuple(census):
            return "last-two-levels census"
        if any(node.size != 2 for node in by_level[h - 1] if not node.is_leaf):
            return "internal size at level h-1"
    return None


def brute_force(brute_max: int) -> Optional[Failure]:
    for n in range(1, brute_max + 1):
        if brute_force_max(n).count != an.w_closed(n):
            return Failure(n, "brute-force max")
        if brute_force_min(n).count != an.best_case(n):
            return Failure(n, "brute-force min")
        ins = brute_force_max(n, comps_of=lambda p: binary_insertion_sort(p).comps)
        if ins.count != an.w_sum(n):
            return Failure(n, "binary insertion brute-force max")
    return None


def merge_extremality(n_max: int) -> Optional[Failure]:
    for n in range(2, min(n_max, 12) + 1):
        if worst_merge_split(n).count != n - 1:
            return Failure(n, "worst merge split")
    return None


def interpolation(n_max: int) -> Optional[Failure]:
    for n in range(2, n_max):
        if n & (n - 1) == 0:
            continue
        if an.w_closed(n + 1) - 2 * an.w_closed(n) + an.w_closed(n - 1) != 0:
            return Failure(n, "second difference")
    return None


Suite = Tuple[str, Callable[[], Optional[Failure]]]


def suites(n_max: int, brute_max: int) -> List[Suite]:
    """All suites in their fixed reporting order."""
    return [
        ("closed-forms", lambda: closed_forms(n_max)),
        ("level-decomposition", lambda: level_decomposition(n_max)),
        ("smooth-bounds", lambda: smooth_bounds(n_max)),
        ("epsilon-delta", lambda: epsilon_below_delta(n_max)),
        ("integer-bounds", lambda: integer_bounds(n_max)),
        ("best-case", lambda: best_case_identity(n_max)),
        ("interpolation", lambda: interpolation(n_max)),
        ("keystone", lambda: generator_keystone(n_max)),
        ("tree-census", lambda: tree_census(n_max)),
        ("merge-extremality", lambda: merge_extremality(n_max)),
        ("brute-force", lambda: brute_force(brute_max)),
    ]
