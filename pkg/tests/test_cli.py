import json

import pytest

from conftest import FANO_AX, FANO_AY, FANO_ROWS
from gammaext.cli import main
from gammaext.errors import EntryError, HeaderError, LabelLineError, ParseError
from gammaext.gf2 import Gf2Matrix
from gammaext.matrixfile import parse_matrix, render_matrix

FANO_TEXT = "3 7\n" + "".join(" ".join(map(str, r)) + "\n" for r in FANO_ROWS)


@pytest.fixture
def fano_file(tmp_path):
    p = tmp_path / "fano.txt"
    p.write_text(FANO_TEXT)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- matrix files ---------------------------------------------------------------

def test_parse_fano():
    m, labels = parse_matrix(FANO_TEXT)
    assert m.to_lists() == FANO_ROWS
    assert labels == [str(i) for i in range(1, 8)]


def test_parse_with_labels_and_comments():
    text = "# a comment\nlabels: a b c\n\n2 3\n1 0 1\n0 1 1\n"
    m, labels = parse_matrix(text)
    assert labels == ["a", "b", "c"]
    assert m.to_lists() == [[1, 0, 1], [0, 1, 1]]


@pytest.mark.parametrize("text,err,line", [
    ("1 2\n1 2\n", EntryError, 2),
    ("", HeaderError, 1),
    ("x y\n", HeaderError, 1),
    ("2 2\n1 0\n", EntryError, 3),
    ("1 3\n1 0\n", EntryError, 2),
    ("labels: a b\n1 3\n1 0 1\n", LabelLineError, 1),
    ("labels: a a\n1 2\n1 0\n", LabelLineError, 1),
    ("1 2\n1 0\n0 1\n", ParseError, 3),
])
def test_parse_errors(text, err, line):
    with pytest.raises(err) as info:
        parse_matrix(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_round_trip_ay():
    labels = [str(i) for i in range(1, 8)] + ["g1", "g2", "g3"]
    text = render_matrix(Gf2Matrix.from_rows(FANO_AY), labels)
    m, back = parse_matrix(text)
    assert render_matrix(m, back) == text
    assert m.to_lists() == FANO_AY


# -- commands ----------------------------------------------------------------------

def test_gamma_ext(capsys, fano_file):
    code, out, _ = run(capsys, "gamma-ext", fano_file, "--x", "1,2")
    assert code == 0
    m, labels = parse_matrix(out)
    assert m.to_lists() == FANO_AX
    assert labels[-2:] == ["g1", "g2"]


def test_gamma_ext_then_connectivity(capsys, fano_file, tmp_path):
    _, out, _ = run(capsys, "gamma-ext", fano_file, "--x", "1,2")
    ext = tmp_path / "ax.txt"
    ext.write_text(out)
    code, out, _ = run(capsys, "connectivity", str(ext), "--k", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "3-connected: false"
    assert lines[1] == "separation: 1 2 3 4 5 6 7 | g1 g2 (order 2)"
    _, out, _ = run(capsys, "connectivity", str(ext), "--k", "2", "--mode", "cumulative")
    assert out.startswith("2-connected: true")


def test_rank_and_families(capsys, fano_file):
    assert run(capsys, "rank", fano_file)[1] == "3\n"
    assert run(capsys, "rank", fano_file, "--set", "1,2,6")[1] == "2\n"
    out = run(capsys, "circuits", fano_file)[1].splitlines()
    assert len(out) == 14 and "1 2 6" in out
    out = run(capsys, "cocircuits", fano_file)[1].splitlines()
    assert len(out) == 7
    assert run(capsys, "girth", fano_file)[1] == "girth: 3\ncogirth: 4\n"
    assert run(capsys, "components", fano_file)[1] == "1 2 3 4 5 6 7\n"


def test_json_output(capsys, fano_file):
    code, out, _ = run(capsys, "connectivity", fano_file, "--k", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"k": 3, "mode": "paper", "connected": True, "separation": None}
    data = json.loads(run(capsys, "gamma-ext", fano_file, "--x", "1,2,3", "--json")[1])
    assert data["matrix"] == FANO_AY


def test_split_and_compose(capsys, fano_file):
    code, out, _ = run(capsys, "split", fano_file, "--y", "1,2,3,4,5,6,7")
    m, _ = parse_matrix(out)
    assert m.to_lists()[-1] == [1] * 7
    assert run(capsys, "compose-check", fano_file, "--x", "1,2")[1] == "compose-check: true\n"


def test_direct_sum(capsys, fano_file, tmp_path):
    u = tmp_path / "u.txt"
    u.write_text("labels: a b c\n2 3\n1 0 1\n0 1 1\n")
    code, out, _ = run(capsys, "direct-sum", fano_file, str(u))
    m, labels = parse_matrix(out)
    assert (m.n_rows, m.n_cols) == (5, 10)
    assert labels[-3:] == ["a", "b", "c"]


def test_verify_summary(capsys):
    code, out, _ = run(capsys, "verify", "--law", "2.6", "--catalog", "3,7")
    lines = out.splitlines()
    assert lines[-1] == "# summary\tpass=112\tfail=0\tprecondition-unmet=1"
    assert code == 0
    fields = lines[0].split("\t")
    assert len(fields) == 4 and fields[0] == "k-connectivity-preservation"


def test_verify_circuits_reports_failures(capsys):
    # the circuit characterization misses circuits of F7^X; the sweep says so
    code, out, _ = run(capsys, "verify", "--law", "2.2", "--catalog", "3,7", "--only-failures")
    assert code == 1
    lines = out.splitlines()
    assert lines[-1] == "# summary\tpass=7\tfail=49\tprecondition-unmet=0"
    assert all(ln.split("\t")[2] == "fail" for ln in lines[:-1])
    cex = json.loads(lines[0].split("\t")[3])
    assert cex["missing"] and cex["spurious"] == []


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--law", "2.7", "--catalog", "4,6", "--json")
    data = json.loads(out)
    assert data["summary"]["fail"] == 0
    assert code == 0
    assert {"law_id", "instance", "verdict", "counterexample"} == set(data["records"][0])


def test_catalog_listing(capsys):
    out = run(capsys, "catalog")[1].splitlines()
    assert out[0].split("\t")[:3] == ["fano", "3", "7"]
    out = run(capsys, "catalog", "--enumerate", "3,7")[1].splitlines()
    assert len(out) == 1


def test_errors_exit_2(capsys, fano_file, tmp_path):
    assert run(capsys, "rank", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n1 2\n")
    code, _, err = run(capsys, "rank", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "gamma-ext", fano_file, "--x", "1,2,6")[0] == 2
    assert run(capsys, "rank", fano_file, "--set", "9")[0] == 2
    loop = tmp_path / "loop.txt"
    loop.write_text("1 2\n1 0\n")
    assert run(capsys, "rank", str(loop))[0] == 2
    assert run(capsys, "rank", str(loop), "--raw")[0] == 0
    with pytest.raises(SystemExit) as info:
        main(["verify", "--law", "9.9"])
    assert info.value.code == 2
