import csv
import io
import json

import pytest

from arcstats.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats_partition(capsys):
    code, out, _ = run(capsys, "stats", "--partition", "1378|26|45", "--n", "8")
    assert code == 0
    assert '"inumber":8' in out and '"dindex":20' in out
    code, out2, _ = run(capsys, "stats", "--partition", "1378|26|45")
    assert out2 == out


def test_stats_matching(capsys):
    code, out, _ = run(capsys, "stats", "--matching", "1-4,2-3")
    assert code == 0
    assert json.loads(out) == {"dindex": 4, "inumber": 2, "cro": 0, "nst": 1, "al": 0,
                               "tvd": 2, "ell": 2, "cnumber": 0, "span_sum": 2}
    # a partition whose blocks are all pairs gets the full record
    _, out2, _ = run(capsys, "stats", "--partition", "14|23")
    assert json.loads(out2) == json.loads(out)


def test_stats_text(capsys):
    code, out, _ = run(capsys, "stats", "--partition", "1378|26|45", "--format", "text")
    assert code == 0 and "dindex" in out and "20" in out


def test_poly_compare(capsys):
    code, out, _ = run(capsys, "poly", "--family", "matchings", "--n", "2", "--stat", "dindex",
                       "--compare-closed-form")
    assert code == 0
    assert out.strip() == "MATCH: q^3 + q^4 + q^5"


def test_poly_plain(capsys):
    assert run(capsys, "poly", "--n", "3", "--stat", "ell")[1].strip() == \
        "1 + 2q + 3q^2 + 3q^3 + 3q^4 + 2q^5 + q^6"
    assert json.loads(run(capsys, "poly", "--n", "2", "--stat", "ell", "--format", "json")[1]) == [1, 1, 1]


def test_poly_no_closed_form(capsys):
    code, _, err = run(capsys, "poly", "--n", "2", "--stat", "cro", "--compare-closed-form")
    assert code == 2 and "no closed form" in err


def test_poly_mismatch(capsys, monkeypatch):
    import arcstats.stats
    monkeypatch.setattr(arcstats.stats, "span", lambda a: a.hi - a.lo)
    code, out, _ = run(capsys, "poly", "--n", "2", "--stat", "ell", "--compare-closed-form")
    assert code == 1 and out.startswith("MISMATCH")


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--max-n", "5")
    assert code == 0
    assert out.strip().endswith("ALL PASS")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "MAIN,I_GEN", "--max-n", "3", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert [(r["identity"], r["n"]) for r in rows] == [("MAIN", 1), ("MAIN", 2), ("MAIN", 3),
                                                       ("I_GEN", 1), ("I_GEN", 2), ("I_GEN", 3)]
    assert all(r["status"] == "PASS" for r in rows)


def test_verify_failure_exit_code(capsys, monkeypatch):
    import arcstats.stats
    monkeypatch.setattr(arcstats.stats, "span", lambda a: a.hi - a.lo)
    code, out, _ = run(capsys, "verify", "--ids", "TVD", "--max-n", "3")
    assert code == 1 and "FAILED: TVD" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--ids", "BOGUS"],
    ["verify", "--all", "--max-n", "9"],
    ["stats", "--partition", "12|13", "--n", "3"],
    ["stats"],
    ["nonsense"],
    ["poly", "--n", "2", "--stat", "maj"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_enumerate_formats(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "matchings", "--n", "2")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 4 and rows[0][0] == "object"
    _, out, _ = run(capsys, "enumerate", "--family", "partitions", "--n", "3", "--format", "text")
    assert out.split() == ["123", "12|3", "13|2", "1|23", "1|2|3"]
    _, out, _ = run(capsys, "enumerate", "--n", "1", "--format", "json")
    assert json.loads(out)[0]["object"] == "1-2"


def test_bruhat_commands(capsys):
    code, out, _ = run(capsys, "bruhat", "--n", "2", "--covers")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 2
    code, out, _ = run(capsys, "bruhat", "--n", "3", "--check-rank")
    assert code == 0 and json.loads(out)["passed"] is True
    assert run(capsys, "bruhat", "--n", "2")[0] == 2
    assert run(capsys, "bruhat", "--n", "6", "--covers")[0] == 2


def test_bijection_csv(capsys):
    code, out, _ = run(capsys, "bijection", "--kind", "psi", "--n", "2")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows == [["source", "image"], ["1-2,3-4", "1-4,2-3"], ["1-3,2-4", "1-3,2-4"],
                    ["1-4,2-3", "1-2,3-4"]]


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "--partition", "1378|26|45", "--extended")
    assert code == 0 and out.count('data-kind="half-arc"') == 6
    target = tmp_path / "m.svg"
    code, _, _ = run(capsys, "render", "--matching", "1-3,2-4", "--highlight", "crossings",
                     "-o", str(target))
    assert code == 0 and "arc highlight" in target.read_text()
    assert run(capsys, "render", "--partition", "1378|26|45", "--highlight", "crossings")[0] == 2
