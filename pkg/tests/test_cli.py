import subprocess
import sys

import pytest

from multirel import dumps_env, eval_term, loads_env, parse_relation
from multirel.algebra import dumps_algebra, four_element_chain_as_printed, three_element_chain
from multirel.cli import main

SEGERBERG = "universe a b c\nrel R\na -> {b, c}\nb -> {b}\nb -> {c}\nc -> {c}\nend\n"


@pytest.fixture
def env_file(tmp_path):
    def write(text, name="env.mrel"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_domain(capsys, env_file):
    path = env_file("universe a b\nrel R\na -> {}\nend\n")
    code, out, err = run(capsys, "eval", "--env", path, "--term", "d(R)")
    assert (code, out, err) == (0, "{ a -> {a} }\n", "")


def test_eval_output_reparses(capsys, env_file):
    path = env_file(SEGERBERG)
    env = loads_env(SEGERBERG)
    _, out, _ = run(capsys, "eval", "--env", path, "--term", "R;R")
    assert parse_relation(env.universe, out) == eval_term("R;R", env)
    _, block, _ = run(capsys, "eval", "--env", path, "--term", "R;R", "--block", "Q")
    doc = loads_env(block)
    assert str(doc["Q"]) == out.strip()
    assert dumps_env(doc) == block


def test_eval_errors_exit_2(capsys, env_file):
    path = env_file("universe a b\nrel R\na -> {c}\nend\n")
    code, out, err = run(capsys, "eval", "--env", path, "--term", "R")
    assert code == 2 and out == "" and "line 3" in err
    path = env_file("universe a\nrel R\nend\n", "ok.mrel")
    assert run(capsys, "eval", "--env", path, "--term", "R +")[0] == 2
    assert run(capsys, "eval", "--env", path, "--term", "S")[0] == 2
    assert run(capsys, "eval", "--env", path + ".missing", "--term", "R")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_laws(capsys):
    code, out, _ = run(capsys, "laws", "--size", "2", "--mode", "exhaustive", "--filter", "proto.")
    assert code == 0 and out.rstrip().endswith("PASS")
    assert out.count("\nok ") == 14
    assert run(capsys, "laws", "--filter", "nothing.")[0] == 2


def test_laws_are_byte_identical(capsys):
    args = ("laws", "--size", "3", "--mode", "random", "--seed", "4", "--samples", "30", "--filter", "star.")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]
    assert run(capsys, *args, "--json")[1] == run(capsys, *args, "--json")[1]


def test_counterexamples(capsys):
    code, out, _ = run(capsys, "counterexamples")
    assert code == 0
    assert "== Segerberg's axiom fails" in out
    assert "neg.conjugation" in out


def test_star_trace(capsys, env_file):
    code, out, _ = run(capsys, "star", "--env", env_file(SEGERBERG), "--rel", "R", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x0 = {}"
    assert "stable from x3" in lines
    assert lines[-1] == "R^* = { a -> {a}, a -> {c}, a -> {b, c}, b -> {b}, b -> {c}, c -> {c} }"
    code, out, _ = run(capsys, "star", "--env", env_file(SEGERBERG), "--rel", "R")
    assert out.count("\n") == 1


def test_models_builtin(capsys):
    code, out, _ = run(capsys, "models", "--builtin")
    assert code == 0
    assert "paper_discrepancy" in out
    assert out.count("25/25 axioms hold: PASS") == 2


def test_models_check(capsys, tmp_path):
    good = tmp_path / "good.alg"
    good.write_text(dumps_algebra(three_element_chain()))
    assert run(capsys, "models", "--check", str(good), "--system", "dp-trioid")[0] == 0
    bad = tmp_path / "bad.alg"
    bad.write_text(dumps_algebra(four_element_chain_as_printed()))
    code, out, _ = run(capsys, "models", "--check", str(bad), "--system", "dp-trioid")
    assert code == 1 and "FAIL" in out
    assert run(capsys, "models", "--check", str(good), "--system", "ap-trioid")[0] == 2


def test_models_search_and_reify(capsys):
    code, out, _ = run(capsys, "models", "--search", "dp-trioid", "--size", "3", "--budget", "2")
    assert code == 0 and out.rstrip().endswith("# 2 model(s) found")
    code, out, _ = run(capsys, "models", "--reify")
    assert code == 0 and "26/26" in out and "27/27" in out


def test_module_entry_point(tmp_path):
    path = tmp_path / "r.mrel"
    path.write_text("universe a\nrel R\na -> {}\nend\n")
    proc = subprocess.run([sys.executable, "-m", "multirel", "eval", "--env", str(path),
                           "--term", "<R> 0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "{ a -> {a} }\n"
