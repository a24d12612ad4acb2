import math

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from penney_perms.enumeration import (
    BruteForceOracle,
    ConsecutiveQuery,
    CountCache,
    CountTable,
    EnumerationPlan,
    PatternCounter,
    WindowAutomaton,
    count_pattern_avoiders,
    unconstrained_start_count,
)
from penney_perms.errors import (
    CeilingExceededError,
    ComparablePatternsError,
    PenneyError,
)
from penney_perms.perm_core import (
    Permutation,
    VincularPattern,
    avoids,
    permutations,
    standardize,
)

P = Permutation.parse


def in_memory_counter(settings):
    return PatternCounter(settings, CountCache(None))


def test_avoiders_of_123():
    counter = PatternCounter(cache=CountCache(None))
    table = counter.avoiders_table([P("123")], 6)
    assert [table[n] for n in range(7)] == [1, 1, 2, 5, 17, 70, 349]
    assert counter.count_avoiders(4, [P("123")]) == 17


def test_avoiders_of_132(counter):
    assert [counter.count_avoiders(n, [P("132")]) for n in range(7)] == [1, 1, 2, 5, 16, 63, 296]


def test_avoiders_of_vincular_1_23(counter):
    pattern = VincularPattern.parse("1-23")
    # Bell numbers
    assert [counter.count_avoiders(n, [pattern]) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_avoiders_without_patterns_is_factorial(counter):
    assert counter.count_avoiders(5, []) == 120


def test_avoiders_of_21():
    assert count_pattern_avoiders(5, [VincularPattern.parse("21")]) == {n: 1 for n in range(6)}


def test_iter_avoiders_sorted(counter):
    found = counter.iter_avoiders(4, [P("123")])
    assert len(found) == 17
    assert found == sorted(found)
    assert all(avoids(P("123"), pi) for pi in found)
    assert counter.iter_avoiders(0, [P("123")]) == []


def test_iter_avoiders_vincular(counter):
    pattern = VincularPattern.parse("1-23")
    found = counter.iter_avoiders(4, [pattern])
    assert len(found) == 15
    assert all(avoids(pattern, pi) for pi in found)


def test_end_with_examples(counter):
    assert counter.count_end_with(4, P("132"), P("231")) == 4
    assert counter.count_end_with(3, P("123"), P("21")) == 1
    assert counter.count_end_with(4, P("2134"), P("3241"), first=2, last=4) == 1


def test_end_with_members(counter):
    members = list(counter.iter_end_with(4, P("132"), P("231")))
    assert len(members) == 4
    for pi in members:
        assert standardize(pi.window(2, 3)) == P("132")
        assert avoids(P("231"), pi)


def test_end_with_rejects_endpoints_out_of_range(counter):
    with pytest.raises(PenneyError):
        counter.count_end_with(4, P("132"), P("231"), first=5)
    with pytest.raises(PenneyError):
        counter.count_end_with(4, P("132"), P("231"), last=0)


def test_race_rejects_comparable_patterns(counter):
    with pytest.raises(ComparablePatternsError):
        counter.race_table(P("123"), P("12"), 5)


def test_endpoint_counts_sum_to_total(counter):
    total = counter.count_end_with(6, P("123"), P("132"))
    by_endpoints = counter.endpoint_counts(6, P("123"), P("132"))
    assert sum(by_endpoints.values()) == total
    by_first = sum(
        counter.count_end_with(6, P("123"), P("132"), first=a) for a in range(1, 7)
    )
    assert by_first == total


def test_start_with_avoiding_decreasing(counter):
    for n in range(3, 8):
        assert counter.count_start_with_avoiding(n, P("123"), P("21")) == 1


def test_unconstrained_start_count():
    assert unconstrained_start_count(5, 3) == 20
    assert unconstrained_start_count(4, 4) == 1
    assert unconstrained_start_count(6, 2) == 360


@pytest.mark.parametrize(
    "sigma, tau",
    [("123", "132"), ("132", "231"), ("123", "321"), ("1342", "1243"), ("123", "21")],
)
def test_oracle_and_automaton_agree(settings, sigma, tau):
    N = 7
    by_oracle = in_memory_counter(settings).race_table(P(sigma), P(tau), N, method="oracle")
    by_automaton = in_memory_counter(settings).race_table(P(sigma), P(tau), N, method="automaton")
    for name in ("sigma_end", "tau_end", "avoiders"):
        assert getattr(by_oracle, name).counts == getattr(by_automaton, name).counts


def test_endpoint_counts_agree_between_methods(settings):
    oracle = in_memory_counter(settings).endpoint_counts(6, P("123"), P("231"), method="oracle")
    automaton = in_memory_counter(settings).endpoint_counts(6, P("123"), P("231"), method="automaton")
    assert {key: value for key, value in oracle.items() if value} == {
        key: value for key, value in automaton.items() if value
    }


def test_start_table_agrees_between_methods(settings):
    oracle = in_memory_counter(settings).start_table(P("132"), P("123"), 7, method="oracle")
    automaton = in_memory_counter(settings).start_table(P("132"), P("123"), 7, method="automaton")
    assert oracle.counts == automaton.counts


@pytest.mark.parametrize("sigma, tau", [("123", "132"), ("1342", "2413"), ("123", "21")])
def test_mass_identity(counter, sigma, tau):
    # every extension of a double avoider either still avoids both or ends the race
    tables = counter.race_table(P(sigma), P(tau), 8)
    for n in range(1, 9):
        assert n * tables.avoiders[n - 1] == (
            tables.avoiders[n] + tables.sigma_end[n] + tables.tau_end[n]
        )


def test_complement_pairs_share_counts(settings):
    first = in_memory_counter(settings).race_table(P("132"), P("213"), 7, method="oracle")
    second = in_memory_counter(settings).race_table(P("312"), P("231"), 7, method="oracle")
    assert first.sigma_end.counts == second.sigma_end.counts
    assert first.tau_end.counts == second.tau_end.counts


def test_wilf_equivalent_single_patterns(counter):
    for n in range(8):
        assert counter.count_avoiders(n, [P("123")]) == counter.count_avoiders(n, [P("321")])
        assert counter.count_avoiders(n, [P("132")]) == counter.count_avoiders(n, [P("231")])


def test_ceilings(counter):
    with pytest.raises(CeilingExceededError):
        counter.count_avoiders(13, [P("123")])
    with pytest.raises(CeilingExceededError):
        counter.count_avoiders(10, [VincularPattern.parse("1-23")])
    with pytest.raises(CeilingExceededError):
        counter.race_table(P("123"), P("132"), 13)


def test_unknown_method(counter):
    with pytest.raises(PenneyError):
        counter.count_avoiders(4, [P("123")], method="guess")


def test_oracle_counts_match_filtering(settings):
    oracle = BruteForceOracle()
    query = ConsecutiveQuery(avoid=(P("123"), P("132")), end=P("123"))
    expected = sum(
        1
        for pi in permutations(6)
        if standardize(pi.window(4, 3)) == P("123")
        and avoids(P("132"), pi)
        and avoids(P("123"), pi.entries[:-1])
    )
    assert oracle.count(6, query) == expected
    assert oracle.visited == math.factorial(6)


def test_oracle_members_in_lexicographic_order():
    oracle = BruteForceOracle()
    rows = list(oracle.members(5, ConsecutiveQuery(avoid=(P("12"),))))
    assert rows == [(5, 4, 3, 2, 1)]
    everything = list(oracle.members(4, ConsecutiveQuery()))
    assert everything == sorted(everything)
    assert len(everything) == 24


def test_oracle_parallel_count_is_deterministic():
    query = ConsecutiveQuery(avoid=(P("123"),))
    assert BruteForceOracle(workers=2).count(7, query) == BruteForceOracle().count(7, query)


@given(st.integers(min_value=0, max_value=11), st.integers(min_value=1, max_value=8))
def test_enumeration_plan_covers_s_n(n, workers):
    plan = EnumerationPlan.choose(n, workers)
    assert len(plan.work_units()) == plan.unit_count
    assert n - plan.depth <= 8


def test_automaton_counts_transitions():
    automaton = WindowAutomaton([P("123")])
    result = automaton.sweep(5)
    assert result.avoiding[5] == 70
    assert result.ending[P("123")][3] == 1
    assert automaton.transitions > 0


def test_count_table_text_round_trip():
    table = CountTable("avoiders", "123", {0: 1, 1: 1, 2: 2, 3: 5})
    again = CountTable.from_text("avoiders", "123", table.to_text())
    assert again == table
    assert again.covers(3) and not again.covers(4)
    assert again.truncated(1).counts == {0: 1, 1: 1}


def test_count_table_check_rejects_impossible_counts():
    with pytest.raises(AssertionError):
        CountTable("avoiders", "123", {3: 7}).check()


def test_cache_survives_a_new_process(tmp_path):
    directory = str(tmp_path / "tables")
    CountCache(directory).put(CountTable("avoiders", "123", {0: 1, 1: 1, 2: 2}))
    reloaded = CountCache(directory).get("avoiders", "123")
    assert reloaded is not None
    assert reloaded.counts == {0: 1, 1: 1, 2: 2}
    assert CountCache(directory).get("avoiders", "321") is None


def test_cache_merges_tables(tmp_path):
    cache = CountCache(str(tmp_path))
    cache.put(CountTable("avoiders", "123", {0: 1, 1: 1}))
    cache.put(CountTable("avoiders", "123", {2: 2, 3: 5}))
    assert cache.get("avoiders", "123").covers(3)


def test_counter_reuses_cached_tables(settings):
    cache = CountCache(settings.cache_dir)
    PatternCounter(settings, cache).avoiders_table([P("123")], 7)
    fresh = PatternCounter(settings, CountCache(settings.cache_dir))
    assert fresh.count_avoiders(6, [P("123")]) == 349
    assert fresh.visited == 0


@hypothesis_settings(max_examples=20, deadline=None)
@given(st.permutations(range(1, 5)), st.permutations(range(1, 5)))
def test_random_pairs_agree(first, second):
    sigma, tau = Permutation(tuple(first)), Permutation(tuple(second))
    if sigma == tau:
        return
    by_oracle = PatternCounter(cache=CountCache(None)).race_table(sigma, tau, 6, method="oracle")
    by_automaton = PatternCounter(cache=CountCache(None)).race_table(sigma, tau, 6, method="automaton")
    assert by_oracle.sigma_end.counts == by_automaton.sigma_end.counts
    assert by_oracle.avoiders.counts == by_automaton.avoiders.counts
