import io

import pytest

from k4verma.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_size_with_oracle():
    assert run("size", "--quadrant", "A", "--m", "1", "--n", "1", "--oracle") == (0, "formula=4 oracle=4 MATCH\n")


def test_size_inconclusive_window():
    code, text = run("size", "--quadrant", "A", "--m", "1", "--n", "1", "--oracle", "--window", "3")
    assert code == 1 and "inconclusive" in text


def test_degree_four_search_is_empty():
    code, text = run("search-singular", "--module", "A:0,0", "--degree", "4", "--hw")
    assert code == 0
    assert "no singular vectors" in text


def test_search_lists_vectors():
    code, text = run("search-singular", "--module", "C:-1,0", "--degree", "3", "--hw")
    assert code == 0
    assert text.count("C:-1,0 degree 3:") == 1


def test_homology_node_rows():
    code, text = run("homology", "--node", "C:-1,-1", "--window", "8")
    assert code == 0
    rows = [line.split("\t") for line in text.splitlines()]
    assert ["C", "-1", "-1", "3", "1"] in rows
    assert all(r[4] == "0" for r in rows if r[3] != "3")
    assert len(rows) == 9


def test_homology_csv_schema():
    code, text = run("homology", "--node", "A:0,0", "--window", "2", "--format", "csv")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "quadrant,m,n,degree,dim,status"
    assert lines[1] == "A,0,0,0,1,ok"


def test_homology_window_from_environment(monkeypatch):
    monkeypatch.setenv("K4VERMA_WINDOW", "2")
    code, text = run("homology", "--node", "D:1,-1")
    assert code == 0 and len(text.splitlines()) == 3


def test_verify_commands_pass_and_are_deterministic():
    first = run("verify-axioms", "--seed", "3", "--trials", "5")
    assert first[0] == 0 and "FAIL" not in first[1]
    assert run("verify-axioms", "--seed", "3", "--trials", "5") == first
    code, text = run("verify-singular", "--bound", "2")
    assert code == 0 and "FAIL" not in text


def test_gr_homology_commands():
    assert run("gr-homology", "--family", "Gcirc", "--quadrant", "C")[0] == 0
    code, text = run("gr-homology", "--family", "G", "--quadrant", "A", "--a", "1", "--b", "3")
    assert code == 0 and "m=0 n=3 dim=2 expected=2" in text
    code, text = run("gr-homology", "--family", "S", "--a", "2", "--b", "0")
    assert code == 0 and "k=0 dim=2 expected=2" in text


def test_character_rows():
    code, text = run("character", "--module", "A:0,0", "--max-degree", "5")
    assert code == 0
    assert text.splitlines() == ["0: 1", "1: 4", "2: 7", "3: 8", "4: 8", "5: 8"]
    code, text = run("character", "--module", "A:0,0", "--max-degree", "2", "--quotient")
    assert text.splitlines() == ["0: 1", "1: 0", "2: 0"]


@pytest.mark.parametrize(
    "argv",
    [
        ["size", "--quadrant", "Q", "--m", "1", "--n", "1"],
        ["search-singular", "--module", "A:-1,0", "--degree", "1"],
        ["homology", "--node", "nonsense"],
        ["no-such-command"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv, out=io.StringIO()) == 2


def test_csv_report_format():
    code, text = run("verify-singular", "--bound", "0", "--format", "csv")
    assert code == 0
    assert text.splitlines()[0] == "status,check"
