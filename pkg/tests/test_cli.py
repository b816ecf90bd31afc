import io
import subprocess
import sys

import pytest
from helpers import SPIDER

from forestgray.cli import main
from forestgray.families import FIXTURE_SPECS, fixture_text

DIAMOND = "1 -> 2\n1 -> 3\n2 -> 4\n3 -> 4\n"


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def spider_file(tmp_path):
    p = tmp_path / "spider.txt"
    p.write_text(SPIDER)
    return str(p)


def test_count(spider_file):
    assert run(["count", spider_file]) == (0, "60\n")


def test_gen_one_bit_two_cycles(monkeypatch):
    code, out = run(["gen", "--cycles", "2"], stdin="node x\n", monkeypatch=monkeypatch)
    assert code == 0 and out == "0\n1\n-----\n1\n0\n-----\n"


def test_gen_fence(monkeypatch):
    code, out = run(["gen", "-"], stdin="1 -> 2\n3 -> 2\n3 -> 4\n", monkeypatch=monkeypatch)
    assert out.splitlines() == ["0001", "0000", "0100", "0101", "0111", "1111", "1101", "1100"]


@pytest.mark.parametrize("engine", ["active-list", "coroutine"])
@pytest.mark.parametrize("extra", [[], ["--no-tco"]])
def test_gen_engines_agree(spider_file, engine, extra):
    _, ref = run(["gen", spider_file, "--cycles", "3"])
    assert run(["gen", spider_file, "--cycles", "3", "--engine", engine] + extra)[1] == ref


def test_gen_deltas_and_both(monkeypatch):
    text = "a -> b\n"
    _, deltas = run(["gen", "--emit", "deltas"], stdin=text, monkeypatch=monkeypatch)
    assert deltas == "b -> 1\na -> 1\n"
    _, both = run(["gen", "--emit", "both"], stdin=text, monkeypatch=monkeypatch)
    assert both == "00\n01\tb -> 1\n11\ta -> 1\n"


def test_order_is_a_column_permutation(tmp_path, monkeypatch):
    text = "c -> a\nb -> a\nnode d\nd -> e\n"
    p = tmp_path / "g.txt"
    p.write_text(text)
    _, original = run(["gen", str(p)])
    _, pre = run(["gen", str(p), "--order", "preorder"])
    _, mapping = run(["mapping", str(p)])
    index = {row.split("\t")[1]: int(row.split("\t")[0]) for row in mapping.splitlines()[1:]}
    labels = ["c", "a", "b", "d", "e"]
    for x, y in zip(original.splitlines(), pre.splitlines()):
        assert x == "".join(y[index[lab] - 1] for lab in labels)


@pytest.mark.parametrize("name", sorted(FIXTURE_SPECS))
def test_family_pipe_reproduces_fixture(name, monkeypatch):
    spec = FIXTURE_SPECS[name]
    argv = ["family", "--kind", spec.kind, "--n", str(spec.n)]
    if spec.ends:
        argv += ["--ends", ",".join(map(str, spec.ends))]
    code, text = run(argv)
    assert code == 0
    _, out = run(["gen", "--cycles", "2"], stdin=text, monkeypatch=monkeypatch)
    assert out == fixture_text(spec)


def test_family_aliases_and_errors():
    assert run(["family", "--kind", "mixed-chain", "--n", "3", "--m", "1"])[1] == "node 1\n2 -> 1\n3 -> 2\n"
    assert run(["family", "--kind", "multi_chain", "--n", "3", "--ends", "x"])[0] == 1
    assert run(["family", "--kind", "mixed_chain", "--n", "3"])[0] == 1


def test_analyze_table(spider_file):
    code, out = run(["analyze", spider_file])
    lines = out.splitlines()
    assert lines[1].split("\t") == ["1", "1", "9", "{2,6,9}", "{4,7,8}", "0", "1", "0"]
    assert lines[12].split("\t") == ["1", "60", "000001100", "*11011100", "111111100"]
    assert "total\t60" in lines and "start\t000001100" in lines


def test_trace(spider_file):
    _, out = run(["trace", spider_file, "--steps", "3"])
    assert out.splitlines() == [
        "000001100\t1 2 3 5 6 7 9",
        "000001101\t1 2 3 5 6 7 9*",
        "000001001\t1 2 3 5 6 7* 9",
    ]
    _, full = run(["trace", spider_file, "--cycles", "2"])
    rows = full.splitlines()
    assert len(rows) == 122 and rows[60] == "-----" and rows[61].startswith("111111100\t")


def test_verify_exit_codes(tmp_path, spider_file):
    good = tmp_path / "good.txt"
    good.write_text(run(["gen", spider_file, "--cycles", "2"])[1])
    code, out = run(["verify", spider_file, str(good)])
    assert code == 0 and out.endswith("all clear\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("000001100\n000001111\n")
    code, out = run(["verify", spider_file, str(bad)])
    assert code == 4 and "bad_steps: (1, 2)" in out
    assert run(["verify", spider_file])[0] == 1
    assert run(["verify", spider_file, str(good), "--cap", "5"])[0] == 3


def test_diamond(tmp_path, capsys):
    p = tmp_path / "diamond.txt"
    p.write_text(DIAMOND)
    assert run(["gen", str(p)])[0] == 2
    assert "cycle" in capsys.readouterr().err
    assert run(["count", str(p)])[0] == 2
    code, out = run(["verify", str(p), "--list"])
    assert code == 0 and out.split() == ["0000", "0001", "0011", "0101", "0111", "1111"]


def test_bad_input(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("a b c\n")
    assert run(["gen", str(p)])[0] == 1
    assert run(["count", str(tmp_path / "missing.txt")])[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["gen", "--cycles", "0"])
    assert info.value.code == 1


def test_module_entry_point(spider_file):
    res = subprocess.run([sys.executable, "-m", "forestgray", "count", spider_file], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "60\n"
