import subprocess
import sys

import pytest

from mimpaths.cli import main


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


P4 = "p 4 3\ne 1 2\ne 2 3\ne 3 4\n"
K3 = "p 3 3\ne 1 2\ne 1 3\ne 2 3\n"
K4 = "p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"
C6 = "p 6 6\ne 1 2\ne 1 6\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n"
P5 = "p 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n"
CLAW = "p 4 3\ne 1 2\ne 1 3\ne 1 4\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def decomp_for(tmp_path, capsys, graph, name="d.txt", strategy="linear-order"):
    code, out, _ = run(capsys, "decomp", "-g", graph, "--strategy", strategy)
    assert code == 0
    return write(tmp_path, name, out)


def test_lip(tmp_path, capsys):
    g = write(tmp_path, "p4.g", P4)
    d = decomp_for(tmp_path, capsys, g)
    assert run(capsys, "lip", "-g", g, "-d", d)[:2] == (0, "lip 4\n")
    code, out, _ = run(capsys, "lip", "-g", g, "-d", d, "--witness")
    assert out == "lip 4\npath 1 2 3 4\n"
    k3 = write(tmp_path, "k3.g", K3)
    assert run(capsys, "lip", "-g", k3)[1] == "lip 2\n"


def test_witness_does_not_change_answer(tmp_path, capsys):
    g = write(tmp_path, "c6.g", C6)
    plain = run(capsys, "lip", "-g", g)[1]
    with_path = run(capsys, "lip", "-g", g, "--witness")[1]
    assert with_path.startswith(plain)


def test_malformed_graph(tmp_path, capsys):
    g = write(tmp_path, "bad.g", "p 3 1\ne 1 7\n")
    assert run(capsys, "lip", "-g", g)[0] == 2
    assert run(capsys, "lip", "-g", str(tmp_path / "missing.g"))[0] == 2


def test_idp(tmp_path, capsys):
    g = write(tmp_path, "two.g", "p 4 2\ne 1 2\ne 3 4\n")
    pairs = write(tmp_path, "pairs", "1 2\n3 4\n")
    code, out, _ = run(capsys, "idp", "-g", g, "--pairs", pairs, "--witness")
    assert code == 0 and out == "idp yes\npath 1 1 2\npath 2 3 4\n"
    k4 = write(tmp_path, "k4.g", K4)
    assert run(capsys, "idp", "-g", k4, "--pairs", pairs)[1] == "idp no\n"
    dup = write(tmp_path, "dup", "1 2\n2 3\n")
    assert run(capsys, "idp", "-g", k4, "--pairs", dup)[0] == 2


def test_hitm(tmp_path, capsys):
    c6 = write(tmp_path, "c6.g", C6)
    k3 = write(tmp_path, "k3.g", K3)
    assert run(capsys, "hitm", "-g", c6, "--pattern", k3)[1] == "hitm yes\n"
    p5 = write(tmp_path, "p5.g", P5)
    claw = write(tmp_path, "claw.g", CLAW)
    assert run(capsys, "hitm", "-g", p5, "--pattern", claw)[1] == "hitm no\n"
    k4 = write(tmp_path, "k4.g", K4)
    assert run(capsys, "hitm", "-g", c6, "--pattern", k4, "--max-pattern-edges", "5")[0] == 2
    code, out, _ = run(capsys, "hitm", "-g", c6, "--pattern", k3, "--witness")
    assert out.splitlines()[2] == "vertices 1 2 3 4 5 6"


def test_decomp_strategies(tmp_path, capsys):
    g = write(tmp_path, "c6.g", C6)
    d = decomp_for(tmp_path, capsys, g, strategy="exhaustive")
    code, out, _ = run(capsys, "check-decomp", "-g", g, "-d", d)
    assert code == 0 and out.splitlines()[0] == "width 2"
    code, out, _ = run(capsys, "decomp", "-g", g, "--strategy", "linear-order", "--order", "6 5 4 3 2 1")
    leaves = sorted(int(line.split()[2]) for line in out.splitlines() if line.startswith("l "))
    assert code == 0 and leaves == [1, 2, 3, 4, 5, 6]
    assert run(capsys, "decomp", "-g", g, "--strategy", "linear-order", "--order", "1 2")[0] == 2
    one = write(tmp_path, "one.g", "p 1 0\n")
    assert run(capsys, "decomp", "-g", one, "--strategy", "exhaustive")[0] == 2
    big = write(tmp_path, "big.g", "p 9 0\n")
    assert run(capsys, "decomp", "-g", big, "--strategy", "exhaustive")[0] == 4


def test_interval_strategy(tmp_path, capsys):
    g = write(tmp_path, "g", "p 3 2\ne 1 2\ne 2 3\n")
    iv = write(tmp_path, "iv", "0 2\n1 4\n3 5\n")
    code, out, _ = run(capsys, "decomp", "-g", g, "--strategy", "interval", "--intervals", iv)
    assert code == 0
    d = write(tmp_path, "d", out)
    assert run(capsys, "check-decomp", "-g", g, "-d", d)[1].splitlines()[0] == "width 1"
    wrong = write(tmp_path, "wrong", "0 1\n2 3\n4 5\n")
    assert run(capsys, "decomp", "-g", g, "--strategy", "interval", "--intervals", wrong)[0] == 2
    assert run(capsys, "decomp", "-g", g, "--strategy", "interval")[0] == 2


def test_check_decomp_errors(tmp_path, capsys):
    g = write(tmp_path, "k3.g", K3)
    short = write(tmp_path, "short", "root 1\ni 1 2 3\nl 2 1\nl 3 2\n")
    assert run(capsys, "check-decomp", "-g", g, "-d", short)[0] == 3
    p4 = write(tmp_path, "p4.g", P4)
    star = write(tmp_path, "star", "u 1 2 3 4 5\nl 2 1\nl 3 2\nl 4 3\nl 5 4\n")
    assert run(capsys, "check-decomp", "-g", p4, "-d", star)[0] == 3
    assert run(capsys, "lip", "-g", p4, "-d", star)[0] == 3


def test_decomp_round_trip_checks(tmp_path, capsys):
    g = write(tmp_path, "p5.g", P5)
    for strategy in ("linear-order", "exhaustive"):
        d = decomp_for(tmp_path, capsys, g, name=strategy, strategy=strategy)
        assert run(capsys, "check-decomp", "-g", g, "-d", d)[0] == 0


def test_oracle_subcommands(tmp_path, capsys):
    g = write(tmp_path, "c6.g", C6)
    assert run(capsys, "oracle", "lip", "-g", g)[1] == "lip 5\n"
    pairs = write(tmp_path, "pairs", "1 4\n")
    assert run(capsys, "oracle", "idp", "-g", g, "--pairs", pairs)[1] == "idp yes\n"
    k3 = write(tmp_path, "k3.g", K3)
    assert run(capsys, "oracle", "hitm", "-g", g, "--pattern", k3)[1] == "hitm yes\n"
    assert run(capsys, "oracle", "idp", "-g", g)[0] == 2


def test_stats_go_to_stderr(tmp_path, capsys):
    g = write(tmp_path, "p4.g", P4)
    code, out, err = run(capsys, "lip", "-g", g, "--stats")
    assert out == "lip 4\n"
    assert "stats width 1" in err


def test_deterministic_output(tmp_path, capsys):
    g = write(tmp_path, "c6.g", C6)
    first = run(capsys, "lip", "-g", g, "--witness")[1]
    assert run(capsys, "lip", "-g", g, "--witness")[1] == first


def test_module_entry_point(tmp_path):
    g = write(tmp_path, "p4.g", P4)
    out = subprocess.run([sys.executable, "-m", "mimpaths", "lip", "-g", g], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "lip 4\n"


@pytest.mark.parametrize("argv", [["lip"], ["nosuch"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
