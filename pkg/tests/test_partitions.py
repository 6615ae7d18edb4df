from collections import Counter

import pytest
from hypothesis import given, strategies as st

from partitions import (
    InvalidInputError,
    Partition,
    RPartitePartition,
    boundary_word,
    conjugate,
    degree,
    enumerate_empty_core,
    enumerate_partitions,
    enumerate_rpartite,
    from_boundary_word,
    hat,
    hook_lengths,
    odd_parts,
    partition_from_beta,
    parse_partition,
    parse_rpartite,
    parse_shape,
    r_core,
    r_core_by_peeling,
    r_quotient,
    removable_rim_hooks,
    to_beta,
)


@st.composite
def partition_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


def P(*parts):
    return Partition(parts)


# -------------------------
# Literals
# -------------------------

def test_parse_partition_literals():
    assert parse_partition("3,1,1") == P(3, 1, 1)
    assert parse_partition(" 2, 2 ") == P(2, 2)
    for empty in ("", "0", "∅", "-"):
        assert parse_partition(empty) == Partition()


def test_parse_partition_rejects_unsorted_and_garbage():
    with pytest.raises(InvalidInputError):
        parse_partition("1,2")
    with pytest.raises(InvalidInputError):
        parse_partition("a,b")
    with pytest.raises(InvalidInputError):
        parse_partition("2,0")


def test_parse_rpartite():
    lam = parse_rpartite("[3,1|∅|2]")
    assert lam == RPartitePartition.of([3, 1], [], [2])
    assert lam.arity == 3
    assert lam.sizes == (4, 0, 2)
    assert lam.total == 6
    assert lam.support() == {0, 2}
    assert str(lam) == "[3,1|∅|2]"
    assert parse_rpartite("1|-") == RPartitePartition.of([1], [])
    with pytest.raises(InvalidInputError):
        parse_rpartite("[1|1")


def test_parse_shape_dispatch():
    assert parse_shape("2,1") == P(2, 1)
    assert parse_shape("[2|1]") == RPartitePartition.of([2], [1])


def test_padded_appends_empty_components():
    lam = RPartitePartition.of([1], [2])
    assert lam.padded(4) == RPartitePartition.of([1], [2], [], [])
    with pytest.raises(InvalidInputError):
        lam.padded(1)


# -------------------------
# Diagram operations
# -------------------------

def test_conjugate_examples():
    assert conjugate(Partition()) == Partition()
    assert conjugate(P(3, 1)) == P(2, 1, 1)
    assert conjugate(P(2, 2)) == P(2, 2)


@given(partition_strategy())
def test_conjugate_is_involutive(lam):
    assert conjugate(conjugate(lam)) == lam


def test_degree_examples():
    assert degree(P(5)) == 1
    assert degree(P(2, 1)) == 2
    assert degree(P(3, 2)) == 5


def test_degree_squares_sum_to_factorial():
    assert sum(degree(lam) ** 2 for lam in enumerate_partitions(6)) == 720


def test_hook_lengths_of_3_1():
    assert hook_lengths(P(3, 1)) == [[4, 2, 1], [1]]


def test_odd_parts():
    assert odd_parts(P(2, 1, 1)) == 2
    assert odd_parts(P(2, 2)) == 0


def test_boundary_word_examples():
    assert boundary_word(Partition()) == ""
    assert boundary_word(P(1)) == "10"
    assert boundary_word(P(2, 2)) == "1100"


@pytest.mark.parametrize("n", range(11))
def test_boundary_word_roundtrip(n):
    for lam in enumerate_partitions(n):
        word = boundary_word(lam)
        assert from_boundary_word(word) == lam
        assert from_boundary_word("00" + word + "111") == lam


# -------------------------
# Rim hooks
# -------------------------

def test_rim_hooks_of_3_1():
    hooks = removable_rim_hooks(P(3, 1), 2)
    assert [(h.after, h.height) for h in hooks] == [(P(1, 1), 0)]


def test_rim_hook_examples():
    (single,) = removable_rim_hooks(P(1), 1)
    assert single.after == Partition() and single.height == 0
    (hook,) = removable_rim_hooks(P(2, 2), 3)
    assert hook.after == P(1) and hook.height == 1
    assert hook.cells == {(0, 1), (1, 0), (1, 1)}


def _hooks_from_boundary_word(lam, k):
    word = "0" * k + boundary_word(lam) + "1" * k
    found = []
    for j in range(len(word) - k):
        if word[j] == "1" and word[j + k] == "0":
            swapped = word[:j] + "0" + word[j + 1:j + k] + "1" + word[j + k + 1:]
            found.append((from_boundary_word(swapped), word[j + 1:j + k].count("0")))
    return Counter(found)


@pytest.mark.parametrize("n", range(1, 9))
def test_rim_hooks_match_boundary_swaps(n):
    for lam in enumerate_partitions(n):
        for k in range(1, n + 1):
            hooks = removable_rim_hooks(lam, k)
            assert Counter((h.after, h.height) for h in hooks) == _hooks_from_boundary_word(lam, k)
            for h in hooks:
                assert lam.size - h.after.size == k
                assert len(h.cells) == k
                assert h.height == len({r for r, _ in h.cells}) - 1


# -------------------------
# Abacus, cores and quotients
# -------------------------

def test_to_beta_examples():
    empty = to_beta(Partition(), 2)
    assert empty.runners == ((0,), (0,))
    config = to_beta(P(3, 1), 2)
    assert config.beta_set() == [4, 1]
    assert config.runners == ((2,), (0,))
    config = to_beta(P(2, 1, 1), 2)
    assert config.beta_set() == [5, 3, 2, 0]
    assert config.runners == ((0, 1), (1, 2))


def test_to_beta_rejects_bad_bead_counts():
    with pytest.raises(InvalidInputError):
        to_beta(P(2, 1, 1), 2, beads=3)
    with pytest.raises(InvalidInputError):
        to_beta(P(2, 1, 1), 2, beads=2)


@pytest.mark.parametrize("r", [2, 3])
def test_extra_beads_do_not_change_core_or_quotient(r):
    for lam in enumerate_partitions(7):
        base = to_beta(lam, r)
        padded = to_beta(lam, r, beads=base.total_beads + 2 * r)
        assert padded.to_partition() == lam
        assert padded.slid().to_partition() == r_core(lam, r)
        assert [partition_from_beta(levels) for levels in padded.runners] == list(r_quotient(lam, r))
        shifted = tuple(tuple(level - 2 for level in levels if level >= 2) for levels in padded.runners)
        assert shifted == base.runners


def test_core_examples():
    assert r_core(P(3, 1), 2) == Partition()
    assert r_core(Partition(), 3) == Partition()
    assert r_core(P(2, 1), 2) == P(2, 1)
    assert removable_rim_hooks(P(2, 1), 2) == []


def test_quotient_examples():
    assert r_quotient(Partition(), 3) == RPartitePartition.of([], [], [])
    assert r_quotient(P(3, 1), 2) == RPartitePartition.of([2], [])
    assert r_quotient(P(2, 1, 1), 2) == RPartitePartition.of([], [1, 1])


@pytest.mark.parametrize("m", range(11))
def test_core_is_peeling_order_independent(m):
    for lam in enumerate_partitions(m):
        for r in (2, 3):
            assert r_core_by_peeling(lam, r) == r_core(lam, r)


def _peeling_ends(lam, r, memo):
    """Shapes reached by every maximal sequence of r-rim-hook removals from lam."""
    if lam not in memo:
        hooks = removable_rim_hooks(lam, r)
        if not hooks:
            memo[lam] = frozenset({lam})
        else:
            memo[lam] = frozenset().union(*(_peeling_ends(h.after, r, memo) for h in hooks))
    return memo[lam]


@pytest.mark.parametrize("r", [2, 3])
def test_every_peeling_order_ends_at_the_core(r):
    memo = {}
    for m in range(11):
        for lam in enumerate_partitions(m):
            assert _peeling_ends(lam, r, memo) == {r_core(lam, r)}


@pytest.mark.parametrize("r", [2, 3, 4])
def test_core_and_quotient_determine_the_partition(r):
    for m in range(13):
        seen = {}
        for lam in enumerate_partitions(m):
            core, quotient = r_core(lam, r), r_quotient(lam, r)
            assert lam.size == core.size + r * quotient.total
            key = (core, quotient)
            assert key not in seen, f"{lam} and {seen.get(key)} share core and quotient"
            seen[key] = lam


def test_hat_examples():
    assert hat(RPartitePartition.of([], [])) == Partition()
    assert hat(RPartitePartition.of([1], [1])) == P(2, 2)
    assert hat(RPartitePartition.of([2], [])) == P(3, 1)
    with pytest.raises(InvalidInputError):
        hat(RPartitePartition.of([1]))


def test_hat_of_1_1_is_found_by_search():
    target = RPartitePartition.of([1], [1])
    candidates = [lam for lam in enumerate_partitions(4) if r_quotient(lam, 2) == target and not r_core(lam, 2)]
    assert candidates == [hat(target)]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_hat_is_a_bijection_onto_empty_cores(r):
    for n in range(0, 12 // r + 1):
        images = [hat(lam) for lam in enumerate_rpartite(n, r)]
        assert len(set(images)) == len(images)
        assert set(images) == set(enumerate_empty_core(n, r))
        for lam in enumerate_rpartite(n, r):
            assert r_quotient(hat(lam), r) == lam


# -------------------------
# Enumeration
# -------------------------

def test_enumeration_counts():
    assert enumerate_partitions(0) == [Partition()]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_rpartite(2, 2)) == 5
    assert len(enumerate_rpartite(0, 3)) == 1


def test_partitions_are_lexicographically_decreasing():
    assert enumerate_partitions(4) == [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
