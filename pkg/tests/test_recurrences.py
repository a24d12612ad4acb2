import pytest

from penney_perms.enumeration import (
    RecurrenceFamily,
    a_sequence,
    b_sequence,
    d_table,
    family_for_pair,
    recurrence_count_table,
    recurrence_counts,
    recurrence_table,
    s_table,
    t_table,
)
from penney_perms.enumeration.oracle import BruteForceOracle, ConsecutiveQuery
from penney_perms.errors import UnsupportedError
from penney_perms.perm_core import Permutation, VincularPattern

P = Permutation.parse


def test_initial_values():
    assert b_sequence(4)[3:] == [1, 4]
    assert a_sequence(4)[3:] == [1, 2]
    assert d_table(3)[3][1] == 1
    assert s_table(3)[3][(1, 3)] == 1
    assert t_table(3)[3][(1, 2)] == 1


def test_refined_values_at_five_and_four():
    assert [d_table(5)[5][i] for i in range(1, 6)] == [3, 0, 1, 2, 3]
    assert s_table(4)[4][(1, 2)] == 1
    assert s_table(4)[4][(4, 1)] == 1
    assert t_table(4)[4][(2, 1)] == 1


B_QUERY = ConsecutiveQuery(avoid=(P("123"), P("213")), end=P("312"))


def test_b_counts_permutations_ending_with_312():
    oracle = BruteForceOracle()
    b = b_sequence(9)
    for n in range(3, 10):
        assert b[n] == oracle.count(n, B_QUERY)


def test_ending_312_equals_vincular_set(counter):
    vincular = [VincularPattern.parse("12-3"), VincularPattern.parse("21-3")]
    for n in range(3, 10):
        consecutive = set(counter.iter_query(n, B_QUERY))
        ascending_end = {pi for pi in counter.iter_avoiders(n, vincular) if pi[-2] < pi[-1]}
        assert consecutive == ascending_end


@pytest.mark.parametrize(
    "family",
    [
        RecurrenceFamily.A_123_213,
        RecurrenceFamily.D_123_231,
        RecurrenceFamily.S_132_213,
        RecurrenceFamily.T_123_312,
        RecurrenceFamily.E_132_231,
    ],
)
def test_families_match_enumeration(counter, family):
    sigma, tau = family.pair
    for n in range(3, 10):
        assert recurrence_counts(family, n) == counter.count_end_with(n, sigma, tau)


def test_d_table_refines_by_first_entry(counter):
    table = d_table(7)
    for n in range(3, 8):
        for i in range(1, n + 1):
            assert table[n][i] == counter.count_end_with(n, P("123"), P("231"), first=i)


def test_family_for_pair():
    assert family_for_pair(P("123"), P("213")) is RecurrenceFamily.A_123_213
    assert family_for_pair(P("132"), P("213")) is RecurrenceFamily.S_132_213
    with pytest.raises(UnsupportedError):
        family_for_pair(P("213"), P("123"))
    with pytest.raises(UnsupportedError):
        RecurrenceFamily.B_312.pair


def test_pair_lookup_gives_the_same_table():
    assert recurrence_table((P("123"), P("312")), 6) == recurrence_table(RecurrenceFamily.T_123_312, 6)


def test_count_table_form():
    table = recurrence_count_table(RecurrenceFamily.E_132_231, 6)
    assert table.counts == {0: 0, 1: 0, 2: 0, 3: 1, 4: 4, 5: 11, 6: 26}
    table.check()
