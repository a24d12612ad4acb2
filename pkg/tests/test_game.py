from fractions import Fraction

import pytest

from penney_perms.game import (
    ConjectureStatus,
    beater_graph,
    check_conjecture,
    find_cycles,
    prob_matrix,
    sign_of,
)
from penney_perms.perm_core import Permutation

P = Permutation.parse

# winner -> loser
BEST_EDGES = {
    ("312", "123"),
    ("213", "132"),
    ("321", "213"),
    ("123", "231"),
    ("231", "312"),
    ("132", "321"),
}
OTHER_EDGES = {("213", "123"), ("231", "132"), ("213", "312"), ("231", "321")}

LENGTH_FOUR_SIGNS = """\
1234 .=<=<<<<<><<<<<<<<<<<<<=
1243 =.>=>><>><>><>>><<<>>>=>
1324 ><.==>>><<>><><>><<<<=<>
1342 ===.<=<>><><<>>>>><>=><>
1423 ><=>.=<<<>>>><<<>>>=<><>
1432 ><<==.><<<><><>><<=<>>>>
2134 >><>><.=<>><>><=>=><<>>>
2143 ><<<>>=.<<>>>><>=<><<<>>
2314 ><><>>>>.<>><><=<=<><<<>
2341 <>>><><>>.>=<>=>>><><><>
2413 ><<<<<<<<<.=>=<<<<>><<<>
2431 ><<><>><<==.=<>><<<<>>>>
3124 >>>><<<<>><=.==<<>><><<>
3142 ><<<>><<<<=>=.<<<<<<<<<>
3214 ><><><>>>=><=>.>><><>>><
3241 ><<<><=<=<><>><.>>>><><>
3412 >><<<><=><>>>><<.=>><<<>
3421 >>><<>=>=<>><>><=.<>><>>
4123 >>>><=<<>><><><<<>.==<<>
4132 ><><=>>><<<>>>><<<=.>=<>
4213 ><>=><>>>>><<><>><=<.===
4231 ><=<<<<>><><>><<>>>==.<>
4312 >=>>><<<>>><>><>><>>=>.=
4321 =<<<<<<<<<<<<<><<<<<=<=.
"""

BEST_BEATERS_FOUR = {
    "2431": "1243", "4312": "2431", "3124": "4312", "1243": "3124",
    "3241": "1324", "2413": "3241", "4132": "2413", "1324": "4132",
    "4231": "1423", "2314": "4231", "3142": "2314", "1423": "3142",
    "1342": "2134", "3421": "1342", "4213": "3421", "2134": "4213",
    "2341": "2134", "3412": "2341", "4123": "3412", "1234": "4123",
    "3214": "3421", "2143": "3214", "1432": "2143", "4321": "1432",
}


@pytest.fixture(scope="module")
def matrix_three(shared_counter):
    return prob_matrix(3, 11, shared_counter)


def test_matrix_cells(matrix_three):
    assert len(matrix_three.cells) == 30
    assert matrix_three.cell(P("123"), P("231")).estimate == pytest.approx(0.550, abs=2e-3)
    assert matrix_three.cell(P("213"), P("231")).exact == Fraction(1, 2)
    assert matrix_three.cell(P("231"), P("123")).estimate == pytest.approx(0.450, abs=2e-3)


def test_matrix_is_antisymmetric_and_complement_closed(matrix_three):
    for (sigma, tau), estimate in matrix_three.cells.items():
        assert estimate.sigma == sigma and estimate.tau == tau
        swapped = matrix_three.cell(tau, sigma)
        assert swapped.sigma_mass == estimate.tau_mass
        mirrored = matrix_three.cell(sigma.complement(), tau.complement())
        assert mirrored.sigma_mass == estimate.sigma_mass


def test_matrix_ties(matrix_three):
    assert matrix_three.tied_pairs() == {
        frozenset({P(a), P(b)})
        for a, b in (("123", "132"), ("321", "312"), ("123", "321"), ("132", "312"), ("213", "231"))
    }


def test_matrix_signs(matrix_three):
    rows = matrix_three.sign_rows()
    assert rows[0] == "123 .=<><="
    assert sign_of(matrix_three.cell(P("213"), P("231"))) == "="
    assert {(P("213"), P("231")), (P("123"), P("312"))} <= matrix_three.certified_cells()


def test_matrix_exports(matrix_three, tmp_path):
    path = tmp_path / "matrix.csv"
    text = matrix_three.to_csv(str(path))
    assert text.splitlines()[0] == "sigma,123,132,213,231,312,321"
    assert path.read_text() == text
    frame = matrix_three.to_frame()
    assert frame.loc["123", "231"] == pytest.approx(0.550, abs=2e-3)
    assert len(matrix_three.to_json()["cells"]) == 30


def test_matrix_rejects_unsupported_lengths(shared_counter):
    with pytest.raises(AssertionError):
        prob_matrix(6, 11, shared_counter)


def test_beater_graph_edges(matrix_three):
    graph = beater_graph(3, matrix=matrix_three)
    edges = {(str(winner), str(loser)) for winner, loser in graph.edges}
    assert edges == BEST_EDGES | OTHER_EDGES
    best = {(str(winner), str(loser)) for loser, winner in graph.best_beater.items()}
    assert best == BEST_EDGES
    assert graph.every_pattern_beaten()
    assert graph.is_complement_invariant()


def test_beater_graph_cycles(matrix_three):
    graph = beater_graph(3, matrix=matrix_three)
    assert (P("123"), P("231"), P("312")) in graph.best_beater_cycles()
    cycles = find_cycles(graph)
    assert len(cycles) > 0
    for cycle in cycles:
        for winner, loser in zip(cycle, cycle[1:] + cycle[:1]):
            assert (winner, loser) in graph.edges


def test_beater_graph_exports(matrix_three):
    graph = beater_graph(3, matrix=matrix_three)
    dot = graph.to_dot()
    assert dot.startswith("digraph beaters_k3 {")
    assert '"123" -> "231" [style=solid' in dot
    assert '"213" -> "123" [style=dashed' in dot
    adjacency = graph.to_json()["adjacency"]
    assert {entry["beats"] for entry in adjacency["213"]} == {"132", "123", "312"}
    assert all(entry["prob"] < 0.5 for entries in adjacency.values() for entry in entries)


def test_rotation_strategy_for_length_three(matrix_three, shared_counter):
    report = check_conjecture(3, matrix=matrix_three)
    assert report.holds
    assert {str(record.tau) for record in report.records} == {"312", "213", "321", "123", "231", "132"}
    direct = check_conjecture(3, 11, shared_counter)
    assert [record.status for record in direct.records] == [
        record.status for record in report.records
    ]
    assert all(record.status != ConjectureStatus.FAILED for record in report.records)


@pytest.fixture(scope="module")
def matrix_four(shared_counter):
    return prob_matrix(4, 11, shared_counter)


@pytest.mark.slow
def test_length_four_signs(matrix_four):
    assert "\n".join(matrix_four.sign_rows()) + "\n" == LENGTH_FOUR_SIGNS


@pytest.mark.slow
def test_length_four_best_beaters(matrix_four):
    graph = beater_graph(4, matrix=matrix_four)
    assert {str(s): str(t) for s, t in graph.best_beater.items()} == BEST_BEATERS_FOUR
    assert graph.every_pattern_beaten()


@pytest.mark.slow
def test_rotation_strategy_for_length_four(matrix_four):
    assert check_conjecture(4, matrix=matrix_four).holds
