import pytest

from mergecomps import analytics as an
from mergecomps import rectree
from mergecomps.analytics import DomainError
from mergecomps.rectree import CutError


def shape(t):
    if t.is_leaf:
        return t.size
    return (t.size, shape(t.left), shape(t.right))


def test_build_examples():
    t = rectree.build(1)
    assert t.is_leaf and t.size == 1
    assert shape(rectree.build(3)) == (3, 1, (2, 1, 1))
    t = rectree.build(500)
    assert rectree.census(t).nodes == 999
    assert rectree.depth(t) == 9


def test_build_rejects_zero():
    with pytest.raises(DomainError):
        rectree.build(0)


def test_children_split_floor_then_ceil():
    for node in rectree.preorder(rectree.build(777)):
        if node.size >= 2:
            assert node.left.size == node.size // 2
            assert node.right.size == node.size - node.size // 2
            assert node.left.level == node.right.level == node.level + 1
        else:
            assert node.is_leaf


@pytest.mark.parametrize("n, expected", [(1, 0), (5, 3), (500, 9)])
def test_depth_examples(n, expected):
    assert rectree.depth(rectree.build(n)) == expected


def test_level_profile_examples():
    p = rectree.level_profile(rectree.build(5), 1)
    assert sorted(p.node_sizes) == [2, 3]
    p = rectree.level_profile(rectree.build(4), 2)
    assert p.node_sizes == (1, 1, 1, 1) and p.leaf_count == 4 and p.internal_count == 0
    p = rectree.level_profile(rectree.build(3), 1)
    assert sorted(p.node_sizes) == [1, 2] and p.leaf_count == 1 and p.internal_count == 1


def test_level_profile_out_of_range():
    with pytest.raises(DomainError):
        rectree.level_profile(rectree.build(5), 4)


def test_worst_comps_at_level_examples():
    assert rectree.worst_comps_at_level(rectree.build(5), 0) == 4
    assert rectree.worst_comps_at_level(rectree.build(5), 3) == 0
    assert rectree.worst_comps_at_level(rectree.build(500), 8) == 244 == an.level_comps(500, 8)


def test_worst_comps_match_level_formula():
    for n in range(1, 600):
        t = rectree.build(n)
        for k in range(an.ceil_lg(n) + 2):
            assert rectree.worst_comps_at_level(t, k) == an.level_comps(n, k)


def test_cut_examples():
    t = rectree.build(13)
    assert rectree.cut_sum(t, [t]) == 13
    leaves = [node for node in rectree.preorder(t) if node.is_leaf]
    assert rectree.cut_sum(t, leaves) == 13 == len(leaves)


def test_every_frontier_is_a_cut():
    for n in range(1, 65):
        t = rectree.build(n)
        for k in range(rectree.depth(t) + 1):
            assert rectree.cut_sum(t, rectree.frontier_cut(t, k)) == n


def test_cut_validation():
    t = rectree.build(6)
    with pytest.raises(CutError):
        rectree.cut_sum(t, [t, t.left])
    with pytest.raises(CutError):
        rectree.cut_sum(t, [t.left])
    with pytest.raises(CutError):
        rectree.cut_sum(t, [t, rectree.build(6)])


def test_equal_sized_nodes_are_distinct():
    t = rectree.build(4)
    assert rectree.cut_sum(t, [t.left, t.right]) == 4


def test_census_examples():
    assert rectree.census(rectree.build(1)) == (1, 1, {0: 1})
    assert rectree.census(rectree.build(4)) == (4, 7, {2: 4})
    assert rectree.census(rectree.build(500)) == (500, 999, {8: 12, 9: 488})


def test_census_matches_corollary_formulas():
    for n in range(2, 700):
        t = rectree.build(n)
        h = an.ceil_lg(n)
        c = rectree.census(t)
        assert set(c.leaves_by_level) <= {h - 1, h}
        assert c.leaves_by_level.get(h - 1, 0) == 2 ** h - n
        assert c.leaves_by_level[h] == 2 * n - 2 ** h
        assert rectree.last_levels(t) == tuple(an.level_census(n))


def test_size_sum_matches_s_n():
    for n in range(1, 700):
        t = rectree.build(n)
        assert sum(node.size for node in rectree.preorder(t)) == an.tree_stats(n).s_n


def test_level_spread_at_most_one():
    for n in range(1, 700):
        t = rectree.build(n)
        for k in range(rectree.depth(t) + 1):
            assert rectree.level_profile(t, k).spread <= 1


def test_dump_small_trees():
    assert rectree.dump_lines(rectree.build(1)) == ["0,1,leaf", "leaves_h1=0,internals_h1=0,leaves_h=1"]
    assert rectree.dump_lines(rectree.build(3)) == [
        "0,3,internal",
        "1,1,leaf",
        "1,2,internal",
        "2,1,leaf",
        "2,1,leaf",
        "leaves_h1=1,internals_h1=1,leaves_h=2",
    ]


def test_dump_500():
    lines = rectree.dump_lines(rectree.build(500))
    assert len(lines) == 999 + 1
    assert lines[-1] == "leaves_h1=12,internals_h1=244,leaves_h=488"
