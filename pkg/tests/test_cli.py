import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from rotsets.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def doc(*argv):
    code, text = run(*argv)
    assert code == 0
    data = json.loads(text)
    assert data["schema_version"] == "1"
    return data


def fracs(angles):
    return [F(int(a["num"]), int(a["den"])) for a in angles]


def test_orbits_example():
    data = doc("orbits", "--d", "4", "--p", "2", "--q", "5")
    assert data["parameters"] == {"d": 4, "p": 2, "q": 5}
    assert data["payload"]["count"] == 21
    rec = next(r for r in data["payload"]["orbits"] if r["rep_sequence"] == [0, 1, 1, 1, 2])
    assert rec["least_tuple"] == [0, 1, 3, 1, 2]
    assert rec["common"] == {"den": "1023", "nums": ["118", "391", "472", "541", "865"]}
    assert fracs(rec["angles"]) == [F(n, 1023) for n in (118, 391, 472, 541, 865)]


def test_orbits_small():
    data = doc("orbits", "--d", "2", "--p", "1", "--q", "4")
    assert [fracs(r["angles"]) for r in data["payload"]["orbits"]] == [[F(n, 15) for n in (1, 2, 4, 8)]]
    assert doc("orbits", "--d", "3", "--p", "1", "--q", "2")["payload"]["count"] == 3


def test_sets():
    data = doc("sets", "--d", "4", "--p", "1", "--q", "4")
    assert [g["count"] for g in data["payload"]["by_k"]] == [15, 30, 16]
    assert data["payload"]["counts"]["total"] == 61
    data = doc("sets", "--d", "3", "--p", "1", "--q", "2", "--k", "2")
    sets = data["payload"]["by_k"][0]["sets"]
    points = [sorted(t for o in s["orbits"] for t in fracs(o["angles"])) for s in sets]
    assert points == [[F(n, 8) for n in (1, 2, 3, 6)], [F(n, 8) for n in (2, 5, 6, 7)]]
    assert sets[0]["raw_shift"] == {"p": 2, "size": 4} and sets[0]["reduced"] == {"p": 1, "q": 2}
    assert doc("sets", "--d", "2", "--p", "1", "--q", "3")["payload"]["counts"]["total"] == 1


def test_sets_totals_independent_of_p():
    totals = {doc("sets", "--d", "4", "--p", str(p), "--q", "5")["payload"]["counts"]["total"] for p in (1, 2, 3, 4)}
    count = doc("count", "--d", "4", "--q", "5")["payload"]["total"]
    assert totals == {count}


def test_verify():
    data = doc("verify", "--d", "3", "8/26,17/26,20/26,23/26,24/26,25/26")
    pay = data["payload"]
    assert pay["rotational"] and pay["raw_shift"] == {"p": 4, "size": 6}
    assert pay["reduced"] == {"p": 2, "q": 3} and pay["orbit_count"] == 2
    assert [o["rep_sequence"] for o in pay["orbits"]] == [[0, 1, 1], [1, 1, 1]]
    pay = doc("verify", "--d", "2", "1/3", "2/3")["payload"]
    assert pay["rotational"] and pay["reduced"] == {"p": 1, "q": 2}
    assert doc("verify", "--d", "2", "1/3")["payload"]["rotational"] is False


def test_verify_parse_errors():
    assert run("verify", "--d", "2", "abc")[0] == 1
    assert run("verify", "--d", "2", "3/2")[0] == 1
    assert run("verify", "--d", "2", "1/0")[0] == 1


def test_from_seq():
    data = doc("from-seq", "--d", "4", "--p", "2", "--q", "5", "--seq", "0,1,1,1,2")
    assert data["payload"]["orbit"]["common"]["nums"] == ["118", "391", "472", "541", "865"]
    data = doc("from-seq", "--d", "2", "--p", "1", "--q", "4", "--seq", "0,0,0,0")
    assert fracs(data["payload"]["orbit"]["angles"]) == [F(n, 15) for n in (1, 2, 4, 8)]
    assert run("from-seq", "--d", "4", "--p", "2", "--q", "5", "--seq", "0,2,1,1,2")[0] == 1
    assert run("from-seq", "--d", "4", "--p", "2", "--q", "5", "--seq", "0,1")[0] == 1


def test_graph():
    data = doc("graph", "--d", "4", "--p", "1", "--q", "4")
    assert len(data["payload"]["nodes"]) == 15 and len(data["payload"]["edges"]) == 30
    assert data["payload"]["cliques_by_size"] == {"1": 15, "2": 30, "3": 16}
    data = doc("graph", "--d", "2", "--p", "1", "--q", "4")
    assert data["payload"]["nodes"] == ["0000"] and data["payload"]["edges"] == []
    code, text = run("graph", "--d", "3", "--p", "1", "--q", "2", "--format", "dot")
    assert code == 0
    assert text == 'graph rotset {\n  "00";\n  "01";\n  "11";\n  "00" -- "01";\n  "01" -- "11";\n}\n'


def test_count():
    data = doc("count", "--d", "4", "--q", "4")
    assert data["payload"]["recursive"] == data["payload"]["closed"] == [15, 30, 16]
    assert doc("count", "--d", "2", "--q", "9")["payload"]["recursive"] == [1]
    assert doc("count", "--d", "5", "--q", "3", "--method", "closed")["payload"]["closed"][0] == 20
    code, text = run("count", "--d", "4", "--q", "4", "--format", "csv")
    assert text.splitlines() == ["k,recursive,closed", "1,15,15", "2,30,30", "3,16,16"]


def test_oracle_check():
    data = doc("oracle-check", "--d", "4", "--p", "1", "--q", "4")
    assert data["payload"] == {"orbits_found": 15, "sets_found_by_k": [15, 30, 16], "mismatches": []}
    assert doc("oracle-check", "--d", "3", "--p", "1", "--q", "2")["payload"]["mismatches"] == []
    assert run("oracle-check", "--d", "10", "--p", "1", "--q", "30")[0] == 2


def test_oracle_check_mismatch_exit(monkeypatch):
    from rotsets import oracle

    real = oracle.cross_check

    def broken(*a, **kw):
        report = real(*a, **kw)
        report.mismatches.append("injected")
        return report

    monkeypatch.setattr(oracle, "cross_check", broken)
    code, text = run("oracle-check", "--d", "3", "--p", "1", "--q", "2")
    assert code == 3 and "injected" in text


def test_usage_errors():
    assert run("orbits", "--d", "4", "--p", "2", "--q", "4")[0] == 1
    assert run("orbits", "--d", "1", "--p", "1", "--q", "4")[0] == 1
    assert run("sets", "--d", "3", "--p", "1", "--q", "2", "--k", "3")[0] == 1
    with pytest.raises(SystemExit) as exc:
        run("orbits", "--d", "4")
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        run("orbits", "--d", "4", "--p", "1", "--q", "4", "--format", "dot")
    assert exc.value.code == 1


def test_size_guard():
    assert run("from-seq", "--d", "2", "--p", "1", "--q", "5000", "--seq", ",".join("0" * 5000))[0] == 2


@pytest.mark.parametrize("fmt", ["text", "csv"])
def test_other_formats(fmt):
    for argv in (
        ("orbits", "--d", "3", "--p", "1", "--q", "3"),
        ("sets", "--d", "3", "--p", "1", "--q", "2"),
        ("verify", "--d", "3", "1/8,2/8,3/8,6/8"),
        ("verify", "--d", "2", "1/3"),
        ("from-seq", "--d", "3", "--p", "1", "--q", "2", "--seq", "0,1"),
        ("graph", "--d", "3", "--p", "1", "--q", "2"),
        ("oracle-check", "--d", "3", "--p", "1", "--q", "2"),
    ):
        code, text = run(*argv, "--format", fmt)
        assert code == 0 and text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rotsets", "count", "--d", "4", "--q", "4", "--format", "text"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.endswith("total = 61\n")
