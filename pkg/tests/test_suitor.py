import pytest

from dynbsuitor import BFunction, MatchingState, Proposal, gen_gnp, run_static
from dynbsuitor.errors import AlreadyPresentError, NotPresentError, WouldNotImproveError

from conftest import WORKED_B


def test_bfunction_validation():
    assert BFunction.constant(3, 2) == (2, 2, 2)
    assert BFunction([1, 4, 2]).beta == 4
    with pytest.raises(ValueError):
        BFunction([1, 0])
    with pytest.raises(ValueError):
        MatchingState(3, [1, 1])


def test_insert_into_empty_queue():
    s = MatchingState(3, [2, 2, 2])
    assert s.queue_insert(0, 1, 1.0) is None
    assert not s.is_saturated(0)
    assert s.queue_min(0) is None


def test_insert_evicts_tie_broken_minimum():
    # owner v2 holds v1 and v0 at equal weight; v1 is the weaker proposal
    s = MatchingState(6, WORKED_B)
    s.queue_insert(2, 1, 1.0)
    s.queue_insert(2, 0, 1.0)
    assert s.queue_min(2) == Proposal(2, 1, 1.0)
    assert s.queue_insert(2, 5, 10.0) == 1
    assert s.partners(2) == [0, 5]


def test_insert_contract_errors():
    s = MatchingState(4, [1, 1, 1, 1])
    s.queue_insert(0, 1, 5.0)
    with pytest.raises(WouldNotImproveError):
        s.queue_insert(0, 2, 1.0)
    with pytest.raises(AlreadyPresentError):
        s.queue_insert(0, 1, 5.0)
    with pytest.raises(NotPresentError):
        s.queue_remove(0, 3)


def test_remove():
    s = MatchingState(6, WORKED_B)
    s.queue_insert(0, 1, 1.0)
    s.queue_remove(0, 1)
    assert s.partners(0) == [] and s.queue_min(0) is None

    s.queue_insert(5, 3, 4.0)
    s.queue_insert(5, 4, 6.0)
    assert s.queue_min(5) == Proposal(5, 3, 4.0)
    s.queue_remove(5, 3)
    s.queue_insert(5, 2, 0.5)
    assert s.queue_min(5) == Proposal(5, 2, 0.5)
    s.queue_remove(5, 2)
    assert s.partners(5) == [4]


def test_accepts():
    s = MatchingState(4, [1, 1, 1, 1])
    assert s.accepts(0, 1, 0.1)
    s.queue_insert(0, 1, 2.0)
    assert s.accepts(0, 2, 3.0)
    assert not s.accepts(0, 2, 1.0)
    assert s.accepts(0, 0, 2.0)  # same weight, smaller id wins
    assert not s.accepts(0, 3, 2.0)


def test_empty_state():
    s = MatchingState(4, [1] * 4)
    assert s.matching_edges() == set()
    assert s.matching_weight() == 0
    assert s.check_s_invariant()


def test_worked_state(worked_state):
    assert len(worked_state.matching_edges()) == 6
    assert worked_state.matching_weight() == 22


def test_static_state_invariants():
    for seed in range(20):
        g = gen_gnp(30, 0.2, seed=seed)
        b = [1 + (u * 7 + seed) % 4 for u in range(30)]
        s = run_static(g, b)
        assert s.check_s_invariant(g)
        for u in range(30):
            assert len(s.partners(u)) <= b[u]
            assert s.is_saturated(u) == (len(s.partners(u)) == b[u])
            keys = s.keys[u]
            assert keys == sorted(keys)
            for (w1, p1), (w2, p2) in zip(keys, keys[1:]):
                assert (w1, p1) < (w2, p2)
        deg = [0] * 30
        for u, v in s.matching_pairs():
            deg[u] += 1
            deg[v] += 1
        assert all(d <= cap for d, cap in zip(deg, b))


def test_s_invariant_detects_one_sided_entry(worked_state):
    broken = worked_state.copy()
    broken.queue_remove(3, 4)
    assert not broken.check_s_invariant()
    assert worked_state.check_s_invariant()


def test_copy_is_deep(worked_state):
    c = worked_state.copy()
    c.queue_remove(0, 1)
    assert not c.same_queues(worked_state)
    assert 1 in worked_state.members[0]


def test_dump_format(worked_state):
    lines = worked_state.dump().splitlines()
    assert lines[3] == "3: [5:4, 4:9]"
    assert lines[0] == "0: [2:1, 1:1]"
