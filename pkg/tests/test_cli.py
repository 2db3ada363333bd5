import io

import pytest

from tnets.cli import run
from tnets.graph_core import debruijn_graph, read_tnet, write_tnet


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def h4_file(tmp_path):
    path = tmp_path / "h4.tnet"
    path.write_text(write_tnet(debruijn_graph(4)))
    return str(path)


def test_gen_base():
    assert call("gen", "-n", "2", "-s", "") == (0, "0011\n", "")


def test_gen_random_is_seeded():
    a = call("gen", "-n", "4", "--random", "--seed", "5")
    assert a == call("gen", "-n", "4", "--random", "--seed", "5")
    assert a[0] == 0 and len(a[1].strip()) == 16


def test_rank_gen_round_trip():
    code, bits, _ = call("rank", "-n", "3", "00010111")
    assert code == 0
    assert call("gen", "-n", "3", "-s", bits.strip())[1] == "00010111\n"


def test_rank_b_form_reports_rotation():
    code, out, err = call("rank", "-n", "2", "0110")
    assert (code, out, err) == (0, "\n", "rotation 3\n")


@pytest.mark.parametrize("n", [3, 4])
def test_gen_rank_all(n):
    from itertools import product

    k = (1 << (n - 1)) - n
    for bits in product("01", repeat=k):
        bits = "".join(bits)
        seq = call("gen", "-n", str(n), "-s", bits)[1].strip()
        assert call("rank", "-n", str(n), seq)[1].strip() == bits


def test_count_both_methods(h4_file):
    assert call("count", h4_file)[1] == "16\n"
    assert call("count", h4_file, "--method", "enum")[1] == "16\n"


def test_double(h4_file):
    code, out, _ = call("double", h4_file)
    assert code == 0 and read_tnet(out) == debruijn_graph(5)


def test_enumerate(tmp_path):
    path = tmp_path / "h3.tnet"
    path.write_text(write_tnet(debruijn_graph(3)))
    code, out, _ = call("enumerate", str(path))
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert all(line.split()[0] == "0" for line in lines)


def test_levels(tmp_path):
    path = tmp_path / "h3.tnet"
    path.write_text(write_tnet(debruijn_graph(3)))
    code, out, _ = call("levels", str(path))
    rows = [line.split() for line in out.splitlines()[1:]]
    assert code == 0
    assert [int(r[1]) for r in rows] == [1, 2, 4, 8, 16]
    assert [int(r[3]) for r in rows] == [16, 8, 4, 2, 2]


def test_verify_ok(h4_file):
    code, out, _ = call("verify", h4_file)
    assert code == 0
    assert out and all(line.endswith("PASS") for line in out.splitlines())
    assert call("verify", "--debruijn", "3", "--table")[0] == 0


def test_verify_failure_exit_code(monkeypatch, h4_file):
    import tnets.harness as harness

    monkeypatch.setattr(harness, "debruijn_formula", lambda n: -1)
    monkeypatch.setattr("tnets.cli.debruijn_formula", lambda n: -1)
    code, out, _ = call("verify", "--debruijn", "3")
    assert code == 2 and "FAIL" in out


def test_stanley_cli():
    assert call("stanley-encode", "0110", "0011", "-n", "2")[1] == "1100\n"
    assert call("stanley-decode", "1100", "-n", "2")[1] == "0110\n0011\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("gen", "-n", "3", "-s", "01"),
        ("rank", "-n", "2", "0101"),
        ("count", "/nonexistent/file"),
        ("bogus",),
        ("stanley-decode", "11", "-n", "2"),
    ],
)
def test_malformed_input_exits_1(argv):
    code, _, err = call(*argv)
    assert code == 1
    assert len(err.strip().splitlines()) == 1


def test_bad_tnet_file(tmp_path):
    path = tmp_path / "bad.tnet"
    path.write_text("2\n0 1\n0 1\n0 1\n1 0\n")
    code, _, err = call("count", str(path))
    assert code == 1 and "outdegree 3" in err


def test_output_deterministic(h4_file):
    assert call("enumerate", h4_file) == call("enumerate", h4_file)
