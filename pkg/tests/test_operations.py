import json

import pytest

from penney_perms.controller import Controller
from penney_perms.formatter import get_formatter
from penney_perms.operations import (
    Conjecture,
    ExpectedFIota,
    Finding,
    GraphOfOperations,
    Matrix,
    OperationType,
    Ties,
    VerifyBijections,
    WordsProbability,
)
from penney_perms.parser import Parser
from penney_perms.workbench import Workbench

RUN_PARAMETERS = {"N": 10, "method": None, "trials": None, "seed": None}


def execute(settings, graph, output_format="table"):
    controller = Controller(
        Workbench(settings), graph, get_formatter(output_format), Parser(), dict(RUN_PARAMETERS)
    )
    controller.run()
    return controller


def test_graph_construction():
    graph = GraphOfOperations()
    first, second = Matrix(3), Ties(3)
    graph.chain(first, second)
    third = graph.append_operation(Conjecture(3))
    assert graph.roots == [first]
    assert graph.leaves == [third]
    assert third.predecessors == [second]
    assert graph.find(OperationType.ties) == [second]
    with pytest.raises(AssertionError):
        graph.add_operation(Ties(3), after=[Matrix(3)])


def test_finding_certification_flag():
    finding = Finding("record", {"value": 1})
    assert not finding.assessed
    finding.certified = True
    assert finding.assessed and finding.certified


def test_shared_matrix(settings):
    graph = GraphOfOperations()
    matrix = graph.add_operation(Matrix(3))
    ties = graph.add_operation(Ties(3), after=[matrix])
    conjecture = graph.add_operation(Conjecture(3), after=[matrix])
    controller = execute(settings, graph)
    assert ties.findings[0].state["matches_matrix"]
    assert ties.findings[0].certified
    assert conjecture.findings[0].state["holds"]
    assert conjecture.previous_artifact("matrix") is matrix.findings[0].artifacts["matrix"]
    assert [f.kind for f in controller.get_final_findings()] == ["record", "record"]


def test_verify_bijections_operation(settings):
    graph = GraphOfOperations()
    operation = graph.add_operation(VerifyBijections(3, 6))
    controller = execute(settings, graph)
    assert operation.findings[0].headline == "5 of 5 bijections verified at n=6"
    assert controller.render().startswith("5 of 5 bijections verified at n=6\n")


def test_output_graph(settings, tmp_path):
    graph = GraphOfOperations()
    graph.chain(ExpectedFIota(3), WordsProbability("10", "00", "2"))
    controller = execute(settings, graph)
    path = tmp_path / "graph.json"
    controller.output_graph(str(path))
    recorded = json.loads(path.read_text())
    assert [entry.get("operation") for entry in recorded[:2]] == [
        "expected_F_iota",
        "words_probability",
    ]
    assert recorded[1]["predecessors"] == [recorded[0]["id"]]
    assert "certified" not in recorded[0]
    assert recorded[1]["findings"][0]["probability"] == "3/4"
    assert recorded[2]["run_parameters"]["N"] == 10


def test_render_requires_run(settings):
    graph = GraphOfOperations()
    graph.add_operation(Ties(3))
    controller = Controller(
        Workbench(settings), graph, get_formatter("json"), Parser(), dict(RUN_PARAMETERS)
    )
    with pytest.raises(AssertionError):
        controller.render()
