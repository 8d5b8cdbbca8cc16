"""MergeSort, Merge and binary insertion sort with exact comparison counts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple


class Tally:
    """Running count of key comparisons.  Only ever grows."""

    __slots__ = ("comps",)

    def __init__(self) -> None:
        self.comps = 0

    def less_equal(self, a: Any, b: Any) -> bool:
        self.comps += 1
        return a <= b

    def less(self, a: Any, b: Any) -> bool:
        self.comps += 1
        return a < b

    def add(self, k: int) -> None:
        if k < 0:
            raise ValueError("a tally cannot go down")
        self.comps += k

    def __repr__(self) -> str:
        return f"Tally(comps={self.comps})"


@dataclass(frozen=True)
class SortOutcome:
    output: List[Any]
    comps: int


def _is_sorted(a: Sequence[Any]) -> bool:
    return all(a[i] <= a[i + 1] for i in range(len(a) - 1))


SPLITS = ("floor", "ceil")


def left_size(n: int, split: str = "floor") -> int:
    """Length of the left block when ``n`` keys are halved.

    ``"floor"`` hands the first ``n // 2`` keys to the left call.  ``"ceil"``
    hands it ``(n + 1) // 2``, which is what a midpoint ``(lo + hi) // 2``
    over inclusive bounds produces.  Both give the same worst case.
    """
    if split == "floor":
        return n // 2
    if split == "ceil":
        return (n + 1) // 2
    raise ValueError(f"split must be one of {SPLITS}, got {split!r}")


def merge(a: Sequence[Any], b: Sequence[Any], tally: Optional[Tally] = None) -> List[Any]:
    """Two-pointer merge of sorted ``a`` and ``b``.

    One comparison per head-to-head decision, none once a side runs out.
    Equal heads are taken from ``a`` first, so the merge is stable.
    """
    assert _is_sorted(a) and _is_sorted(b), "merge inputs must be sorted"
    out, comps = _merge(a, b)
    if tally is not None:
        tally.add(comps)
    return out


def _merge(a: Sequence[Any], b: Sequence[Any]) -> Tuple[List[Any], int]:
    p, q = len(a), len(b)
    if not p or not q:
        return list(a) + list(b), 0
    out: List[Any] = []
    put = out.append
    i = j = 0
    x, y = a[0], b[0]
    # each pass makes one comparison and emits one key, so the number of
    # comparisons is the number of keys emitted before a side ran out
    while True:
        if x <= y:
            put(x)
            i += 1
            if i == p:
                out.extend(b[j:])
                break
            x = a[i]
        else:
            put(y)
            j += 1
            if j == q:
                out.extend(a[i:])
                break
            y = b[j]
    return out, i + j


def _merge_sort(a: List[Any], split: str) -> Tuple[List[Any], int]:
    n = len(a)
    if n <= 1:
        return a, 0
    half = left_size(n, split)
    left, c_left = _merge_sort(a[:half], split)
    right, c_right = _merge_sort(a[half:], split)
    out, c = _merge(left, right)
    return out, c_left + c_right + c


def merge_sort(a: Sequence[Any], split: str = "floor", tally: Optional[Tally] = None) -> SortOutcome:
    """Top-down MergeSort; by default the first ``n // 2`` keys go left.

    The run's comparisons are also added to ``tally`` when one is given.
    """
    if split not in SPLITS:
        raise ValueError(f"split must be one of {SPLITS}, got {split!r}")
    out, comps = _merge_sort(list(a), split)
    if tally is not None:
        tally.add(comps)
    return SortOutcome(out, comps)


def insertion_point(prefix: Sequence[Any], key: Any, tally: Tally) -> int:
    """Binary search for where ``key`` goes in sorted ``prefix``.

    Probes ``(lo + hi) // 2`` over the half-open range ``[lo, hi)``, one
    comparison per probe.  Equal keys land to the right (stable).  At most
    ``ceil(lg(len(prefix) + 1))`` comparisons.
    """
    lo, hi = 0, len(prefix)
    while lo < hi:
        mid = (lo + hi) // 2
        if tally.less(key, prefix[mid]):
            hi = mid
        else:
            lo = mid + 1
    return lo


def binary_insertion_sort(a: Sequence[Any]) -> SortOutcome:
    tally = Tally()
    out: List[Any] = []
    for key in a:
        out.insert(insertion_point(out, key, tally), key)
    return SortOutcome(out, tally.comps)
