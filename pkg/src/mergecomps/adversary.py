"""Worst-case inputs for MergeSort and exhaustive oracles at small n."""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Any, Callable, List, NamedTuple, Sequence, Tuple

from .analytics import DomainError
from .sorters import SPLITS, Tally, left_size, merge, merge_sort

BRUTE_FORCE_CAP = 9


def un_sort(a: Sequence[Any], split: str = "floor") -> List[Any]:
    """Rearrange strictly increasing ``a`` into a worst case for MergeSort.

    Mirrors the sort's split: the sorted values are dealt alternately to the
    larger block (starting with the smallest value) and the smaller one, so
    the two largest values end up on different sides and the top merge
    needs ``n - 1`` comparisons.  Each block is then rearranged the same
    way.  ``split`` must match the one given to :func:`merge_sort`.
    """
    a = list(a)
    for x, y in zip(a, a[1:]):
        if not x < y:
            raise DomainError("un_sort needs strictly increasing (distinct) keys")
    if split not in SPLITS:
        raise ValueError(f"split must be one of {SPLITS}, got {split!r}")
    return _un_sort(a, split)


def _un_sort(a: List[Any], split: str) -> List[Any]:
    n = len(a)
    if n <= 1:
        return a
    big, small = a[0::2], a[1::2]
    if left_size(n, split) == len(small):
        return _un_sort(small, split) + _un_sort(big, split)
    return _un_sort(big, split) + _un_sort(small, split)


class Extreme(NamedTuple):
    count: int
    witness: List[int]


def _check_cap(n: int, allow_ten: bool) -> None:
    cap = BRUTE_FORCE_CAP + 1 if allow_ten else BRUTE_FORCE_CAP
    if n < 1:
        raise DomainError(f"brute force needs n >= 1, got {n}")
    if n > cap:
        raise DomainError(f"refusing to enumerate {n}! permutations (cap is {cap})")


def _scan(n: int, comps_of: Callable[[Tuple[int, ...]], int], better: Callable[[int, int], bool]) -> Extreme:
    # permutations() yields lexicographic order and only a strict
    # improvement replaces the incumbent, so the witness is the
    # lexicographically least one
    best = None
    witness: Tuple[int, ...] = ()
    for perm in permutations(range(1, n + 1)):
        c = comps_of(perm)
        if best is None or better(c, best):
            best, witness = c, perm
    return Extreme(best, list(witness))


def _merge_sort_comps(perm: Sequence[int]) -> int:
    return merge_sort(perm).comps


def brute_force_max(n: int, allow_ten: bool = False, comps_of: Callable[[Sequence[int]], int] = _merge_sort_comps) -> Extreme:
    """Largest comparison count over all ``n!`` permutations of ``1..n``."""
    _check_cap(n, allow_ten)
    return _scan(n, comps_of, lambda c, best: c > best)


def brute_force_min(n: int, allow_ten: bool = False, comps_of: Callable[[Sequence[int]], int] = _merge_sort_comps) -> Extreme:
    _check_cap(n, allow_ten)
    return _scan(n, comps_of, lambda c, best: c < best)


class MergeSplit(NamedTuple):
    count: int
    left: List[int]
    right: List[int]


def balanced_splits(n: int):
    """Every way to deal ``1..n`` into sorted blocks of ``n//2`` and ``n - n//2``."""
    keys = range(1, n + 1)
    for left in combinations(keys, n // 2):
        chosen = set(left)
        yield list(left), [k for k in keys if k not in chosen]


def merge_comps(left: Sequence[Any], right: Sequence[Any]) -> int:
    tally = Tally()
    merge(left, right, tally)
    return tally.comps


def worst_merge_split(n: int) -> MergeSplit:
    """Max merge cost over all balanced splits of ``1..n`` and a witness."""
    if not 2 <= n <= 16:
        raise DomainError(f"worst_merge_split needs 2 <= n <= 16, got {n}")
    best = None
    for left, right in balanced_splits(n):
        c = merge_comps(left, right)
        if best is None or c > best.count:
            best = MergeSplit(c, left, right)
    return best
