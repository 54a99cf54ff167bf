import json
import math

import pytest

from wtilde.cli import main
from wtilde.statekit import load_state, wtilde_state


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None), out


def test_lemma1(capsys):
    code, doc, _ = run(capsys, "lemma1", "--n", "5")
    assert code == 0
    assert doc["n"] == 5 and doc["fidelity_to_wtilde"] >= 1 - 1e-10


def test_elect(capsys):
    code, doc, _ = run(capsys, "elect", "--n", "4", "--trials", "10000", "--seed", "7")
    assert code == 0
    assert doc["failures"] == 0 and doc["seed"] == 7 and doc["trials"] == 10000


@pytest.mark.parametrize(
    "argv",
    [["elect", "--n", "2"], ["nope"], ["lemma1", "--n", "40"], ["elect", "--alpha2", "2"], ["ilo-verify", "--n", "6"]],
)
def test_bad_arguments_exit_2(capsys, argv):
    assert main(argv) == 2


def test_reproducible_bytes(capsys):
    _, _, a = run(capsys, "elect", "--n", "5", "--trials", "500", "--seed", "3")
    _, _, b = run(capsys, "elect", "--n", "5", "--trials", "500", "--seed", "3")
    assert a == b


def test_slocc_verdict_and_degeneracy(capsys):
    code, doc, _ = run(capsys, "slocc-verdict", "--n", "6")
    assert code == 0 and doc["inequivalent_proven"] and doc["config_a"] == [5, 1]
    code, doc, _ = run(capsys, "degeneracy", "--n", "5", "--source", "w")
    assert doc["degeneracy_config"] == [4, 1] and len(doc["points"]) == 5


def test_ilo_verify_and_search(capsys):
    code, doc, _ = run(capsys, "ilo-verify", "--n", "4")
    assert code == 0 and doc["fidelity"] >= 1 - 1e-9 and doc["unitarity_err"] <= 1e-12
    code, doc, _ = run(capsys, "ilo-search", "--n", "3", "--restarts", "5")
    assert code == 0 and doc["found"] and doc["restarts"] == 5


def test_state_file_io(capsys, tmp_path):
    path = tmp_path / "state.json"
    assert main(["state", "--n", "4", "--source", "wtilde", "--out", str(path)]) == 0
    st = load_state(path)
    assert (st.amps == wtilde_state(4, math.sqrt(0.5), math.sqrt(0.5)).amps).all()
    code, doc, _ = run(capsys, "degeneracy", "--in", str(path))
    assert code == 0 and doc["degeneracy_config"] == [1, 1, 1, 1]
