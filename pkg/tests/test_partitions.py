import pytest

from icefock.partitions import (
    MayaWord,
    conjugate,
    degree,
    horizontal_strips,
    maya_from_partition,
    n_core,
    partition_from_maya,
    partitions_of,
    rim_hook_removals,
    ribbon_tableaux,
    super_ribbon_tableaux,
    vertical_strips,
)


def test_partition_counts():
    assert [len(partitions_of(k)) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_maya_words():
    assert maya_from_partition((1,), 0, 3).entries[:3] == (1, -1, -2)
    assert maya_from_partition((), 0, 3).entries[:3] == (0, -1, -2)
    assert maya_from_partition((2, 1), 0, 4).entries[:4] == (2, 0, -2, -3)
    assert degree(maya_from_partition((), 5, 4)) == 0
    assert degree(maya_from_partition((2, 1), 0, 4)) == 3
    assert partition_from_maya(maya_from_partition((4, 2, 2), 1, 6)) == (4, 2, 2)


def test_bad_maya_word():
    with pytest.raises(ValueError):
        MayaWord(0, (1, 1, -1))


def test_n_core():
    assert n_core((1, 1), 2) == ()
    for delta in [(), (1,), (2, 1), (3, 2, 1)]:
        assert n_core(delta, 2) == delta
    assert n_core((6, 6, 4, 4, 1, 1), 3) == n_core((2, 1, 1), 3) == (2, 1, 1)


def test_core_by_repeated_removal():
    # Removing rim hooks in any order reaches the same core.
    def brute(lam, n):
        nxt = rim_hook_removals(lam, n)
        return {lam} if not nxt else set().union(*(brute(mu, n) for mu in nxt))

    for k in range(9):
        for lam in partitions_of(k):
            for n in (2, 3):
                assert brute(lam, n) == {n_core(lam, n)}


def test_domino_strips():
    assert [(s.inner, s.spin) for s in horizontal_strips((2,), 1, 2)] == [((), 0)]
    assert [(s.inner, s.spin) for s in horizontal_strips((1, 1), 1, 2)] == [((), 1)]
    assert [(s.inner, s.spin) for s in vertical_strips((1, 1), 1, 2)] == [((), 1)]
    assert [(s.inner, s.spin) for s in vertical_strips((2,), 1, 2)] == [((), 0)]
    for lam in [(3, 1), (2, 2, 1)]:
        assert [(s.inner, s.spin) for s in horizontal_strips(lam, 0, 2)] == [(lam, 0)]
        assert [(s.inner, s.spin) for s in vertical_strips(lam, 0, 2)] == [(lam, 0)]


def test_vertical_strips_are_conjugate_horizontal():
    for lam in partitions_of(6):
        v = sorted(conjugate(s.inner) for s in vertical_strips(lam, 2, 2))
        h = sorted(s.inner for s in horizontal_strips(conjugate(lam), 2, 2))
        assert v == h


def test_ribbon_tableau_examples():
    ts = ribbon_tableaux((6, 6, 4, 4, 1, 1), (2, 1, 1), 3, 3)
    assert ((1, 3, 2), 5) in ts
    assert ribbon_tableaux((3, 1), (3, 1), 2, 2) == [((0, 0), 0)]
    assert ribbon_tableaux((2,), (), 1, 2) == [((1,), 0)]
    assert ribbon_tableaux((2, 1), (), 2, 2) == []


def test_super_ribbon_tableaux():
    ts = super_ribbon_tableaux((1, 1), (), 1, 2)
    assert sorted((t.wt, t.wt_prime, t.spin) for t in ts) == [((0,), (1,), 1), ((1,), (0,), 1)]
    assert len(super_ribbon_tableaux((2, 1), (2, 1), 2, 3)) == 1
    assert super_ribbon_tableaux((2, 1), (), 2, 2) == []
