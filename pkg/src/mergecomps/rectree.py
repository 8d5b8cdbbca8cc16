"""The explicit recursion tree of MergeSort on ``n`` keys.

Each node is one call and records the size of the subarray it received.
The tree is materialized (``2n - 1`` nodes) so structural facts can be
checked by inspection rather than by formula.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .analytics import DomainError


class CutError(ValueError):
    """The node set given as a cut is not met exactly once by every branch."""


@dataclass(frozen=True, eq=False)
class RecTree:
    # eq=False keeps hashing by identity: equal-sized subtrees stay distinct in cuts
    size: int
    level: int
    left: Optional["RecTree"] = None
    right: Optional["RecTree"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None


def build(n: int) -> RecTree:
    if n < 1:
        raise DomainError(f"cannot build a recursion tree for n={n}")
    return _build(n, 0)


def _build(size: int, level: int) -> RecTree:
    if size <= 1:
        return RecTree(size, level)
    half = size // 2
    return RecTree(size, level, _build(half, level + 1), _build(size - half, level + 1))


def preorder(t: RecTree) -> Iterator[RecTree]:
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        if not node.is_leaf:
            stack.append(node.right)
            stack.append(node.left)


def depth(t: RecTree) -> int:
    return max(node.level for node in preorder(t)) - t.level


class LevelProfile(NamedTuple):
    level: int
    node_sizes: Tuple[int, ...]
    internal_count: int
    leaf_count: int

    @property
    def spread(self) -> int:
        return max(self.node_sizes) - min(self.node_sizes)


def levels(t: RecTree) -> Dict[int, List[RecTree]]:
    """Nodes grouped by level, left to right."""
    out: Dict[int, List[RecTree]] = {}
    for node in preorder(t):
        out.setdefault(node.level, []).append(node)
    return out


def level_profile(t: RecTree, k: int) -> LevelProfile:
    by_level = levels(t)
    if k not in by_level:
        raise DomainError(f"level {k} is outside 0..{depth(t)}")
    nodes = by_level[k]
    internal = sum(1 for node in nodes if not node.is_leaf)
    return LevelProfile(
        level=k,
        node_sizes=tuple(node.size for node in nodes),
        internal_count=internal,
        leaf_count=len(nodes) - internal,
    )


def worst_comps_at_level(t: RecTree, k: int) -> int:
    """Sum of ``size - 1`` over the internal nodes at level ``k``.

    Each internal node's merge can cost at most ``size - 1`` comparisons.
    """
    if k < 0:
        raise DomainError(f"level index must be non-negative, got {k}")
    return sum(node.size - 1 for node in preorder(t) if node.level == k and not node.is_leaf)


def cut_sum(t: RecTree, cut: Iterable[RecTree]) -> int:
    """Total size over a cut, after checking it really is one."""
    members = set(cut)
    seen = set()
    # (node, number of cut members on the path from the root to node)
    stack = [(t, 0)]
    while stack:
        node, hits = stack.pop()
        if node in members:
            hits += 1
            seen.add(node)
        if hits > 1:
            raise CutError(f"a branch meets the cut twice (at size {node.size}, level {node.level})")
        if node.is_leaf:
            if hits == 0:
                raise CutError(f"the branch ending at level {node.level} misses the cut")
        else:
            stack.append((node.right, hits))
            stack.append((node.left, hits))
    if len(seen) != len(members):
        raise CutError("cut contains nodes that are not in this tree")
    return sum(node.size for node in members)


def frontier_cut(t: RecTree, k: int) -> List[RecTree]:
    """All nodes at level ``k`` plus every leaf sitting above level ``k``."""
    return [node for node in preorder(t) if node.level == k or (node.is_leaf and node.level < k)]


class Census(NamedTuple):
    leaves: int
    nodes: int
    leaves_by_level: Dict[int, int]


def census(t: RecTree) -> Census:
    counts = Counter(node.level for node in preorder(t) if node.is_leaf)
    nodes = sum(1 for _ in preorder(t))
    return Census(sum(counts.values()), nodes, dict(sorted(counts.items())))


def last_levels(t: RecTree) -> Tuple[int, int, int]:
    """``(leaves at h-1, internals at h-1, leaves at h)`` read off the tree."""
    by_level = levels(t)
    h = max(by_level)
    above = by_level.get(h - 1, [])
    leaves_h1 = sum(1 for node in above if node.is_leaf)
    return leaves_h1, len(above) - leaves_h1, len(by_level[h])


def dump_lines(t: RecTree) -> List[str]:
    """``level,size,leaf|internal`` in pre-order, then a census footer."""
    lines = [
        f"{node.level},{node.size},{'leaf' if node.is_leaf else 'internal'}"
        for node in preorder(t)
    ]
    leaves_h1, internals_h1, leaves_h = last_levels(t)
    lines.append(f"leaves_h1={leaves_h1},internals_h1={internals_h1},leaves_h={leaves_h}")
    return lines
