import json

import pytest

from sharpcqa.sharpcqa_core.cli.sharpcqa_cli import main
from sharpcqa.sharpcqa_core.constants import SHARPCQA_VERSION

Q0 = "R[x; y], S[y;]"
SCHEMA = "rel R key 1 val 1\nrel S key 1 val 0"


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> list[str]:
    main(list(argv))
    return capsys.readouterr().out.splitlines()


def exit_code(*argv: str) -> int:
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    return int(info.value.code)


def test_version(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "--version") == [f"sharpcqa {SHARPCQA_VERSION}"]


def test_help_without_command(capsys: pytest.CaptureFixture[str]) -> None:
    out = run(capsys)
    assert out[0].startswith("usage: sharpcqa")


def test_classify(capsys: pytest.CaptureFixture[str]) -> None:
    out = run(capsys, "classify", Q0)
    assert out[0] == "FP"
    assert any(line.startswith("encode") and "N['S',y; z#1]" in line for line in out)
    assert run(capsys, "classify", "R[x; y], S[z; y]")[0] == "SharpPHard"
    assert run(capsys, "classify", "R[x; a], R[x; b]")[0] == "TriviallyZero"


def test_classify_json(capsys: pytest.CaptureFixture[str]) -> None:
    report = json.loads("\n".join(run(capsys, "classify", "--json", "R[x; y], S[z; y]")))
    assert report["verdict"] == "sharp-p-hard"
    assert report["witness"] == ["N['R',x; y]", "N['S',z; y]"]
    assert report["trace"][-1] == {"step": "verdict", "result": "SharpPHard"}


def test_classify_with_schema_file(capsys: pytest.CaptureFixture[str], tmp_path) -> None:  # type: ignore[no-untyped-def]
    schema = tmp_path / "schema.cq"
    schema.write_text(SCHEMA + "\nrel U key 1 val 2\n", encoding="utf-8")
    query = tmp_path / "q0.cq"
    query.write_text("% running example\n{R[x; y], S[y;]}\n", encoding="utf-8")
    out = run(capsys, "classify", str(query), "--schema", str(schema))
    assert out[0] == "FP"
    assert any("N['R',x; y,z#1]" in line for line in out)


def test_classify_errors() -> None:
    assert exit_code("classify", "T[x, y; z]") == 2
    assert exit_code("classify", "R[x; y") == 1
    assert exit_code("classify", Q0, "--schema", "rel R key 1 val 2") == 1
    assert exit_code("classify", "R[x; y], R[y; z], R[z; u]", "--max-atoms", "2") == 2


def test_count(capsys: pytest.CaptureFixture[str]) -> None:
    db = "R[a; 1]\nR[a; 2]\nS[1;]"
    assert run(capsys, "count", Q0, db) == ["1"]
    assert run(capsys, "count", Q0, db, "--jobs", "2") == ["1"]
    assert run(capsys, "count", Q0, "R[a; 1]\nT[b;]") == ["0"]


def test_count_errors() -> None:
    db = "R[a; 1]\nR[a; 2]\nS[1;]"
    assert exit_code("count", Q0, db, "--cap", "1") == 2
    assert exit_code("count", Q0, db, "--jobs", "0") == 1
    assert exit_code("count", Q0, "R[a; y]") == 1
    assert exit_code("count", Q0, "R[a, b; 1]") == 1


def test_encode(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "encode", Q0) == ["N['R',x; y], N['S',y; z#1]"]
    assert run(capsys, "encode", "--new", Q0) == ["N['R',x; y], N['S',y; z#1]"]
    assert run(capsys, "encode", "--old", Q0) == ["N['R',x; y], N['S',y; 0]"]
    assert run(capsys, "encode", Q0, "--schema", "rel T key 2 val 0\n" + SCHEMA) == ["N['R',x,0; y], N['S',y,0; z#1]"]


def test_encode_flags_are_exclusive() -> None:
    assert exit_code("encode", "--new", "--old", Q0) == 1


def test_minimize(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "minimize", "R[x; y], R[x; z]") == ["R[x; y]"]
    assert run(capsys, "minimize", "R[x; y], R[z; y], S[y;]") == ["R[z; y], S[y;]"]
    assert exit_code("minimize", "R[x; a], R[x; b]") == 2


def test_invert(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "invert", "N['R',a; 1]\nN['S',1; 0]", "--schema", SCHEMA) == ["R[a; 1]", "S[1;]"]
    out = run(capsys, "invert", "N['R',b; c]\nN['S',c; 1]", "--schema", SCHEMA)
    assert out[0] == "NoPreimage: N['S',c; 1]"
    assert out[1].startswith("  padding positions hold 1")
    assert exit_code("invert", "N['X',a; 1]", "--schema", SCHEMA) == 2
    assert exit_code("invert", "N['R',a; 1]") == 1


def test_se3(capsys: pytest.CaptureFixture[str]) -> None:
    out = run(capsys, "se3", "S[c; y], R[y; w]")
    assert out[0] == "FP (easy)"
    assert "rewritten: R#1[y; w], S#1[c; y]" in out
    assert "grounded padding variables: none" in out
    hard = run(capsys, "se3", "R[x; y], S[z; y]")
    assert hard[0] == "SharpPHard (hard)"
    assert hard[-1] == "witness: R#1[x; y] ~ S#1[z; y]"
    assert run(capsys, "se3", "R[x; a], R[x; b]") == ["TriviallyZero (unsatisfiable)"]


def test_demo_flaw(capsys: pytest.CaptureFixture[str]) -> None:
    out = run(capsys, "demo-flaw")
    assert out == run(capsys, "demo-flaw")
    assert out[0] == "query q0: R[x; y], S[y;]"
    assert "old encoding: N['R',x; y], N['S',y; 0]" in out
    assert "new encoding: N['R',x; y], N['S',y; z#1]" in out
    assert "NoPreimage: N['S',c; 1]" in out
    assert "repairs of db0 satisfying the old encoding: 1 of 2" in out
    assert "repairs of db0 satisfying the new encoding: 2 of 2" in out
    assert out[-1] == "old encoding: #P-hard; query: FP"


def test_verify(capsys: pytest.CaptureFixture[str]) -> None:
    out = run(capsys, "verify", "--lemma", "2", "--trials", "20", "--seed", "1")
    assert out[0] == "lemma 2: 20 trials, seed 1"
    assert out[-1] == "20/20 pass"
    out = run(capsys, "verify", "--lemma", "1", "-t", "10", "-j", "2")
    assert out[-1] == "10/10 pass"


def test_verify_config(capsys: pytest.CaptureFixture[str], tmp_path) -> None:  # type: ignore[no-untyped-def]
    config = tmp_path / "verify.yaml"
    config.write_text("lemma: COUPLE\ntrials: 5\nseed: 11\n", encoding="utf-8")
    assert run(capsys, "verify", "--config", str(config))[0] == "lemma 1: 5 trials, seed 11"
    assert run(capsys, "verify", "-c", str(config), "--trials", "3")[-1] == "3/3 pass"


def test_verify_errors() -> None:
    assert exit_code("verify", "--trials", "-1") == 1
    assert exit_code("verify", "--lemma", "3") == 1
    assert exit_code("verify", "--config", '{"version": "9.9"}') == 1
