import json

import pytest

from ppp import core, plane, skeleton
from ppp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("flag, expected", [
    (["--thickness", "1"], "130"),
    (["--primitive"], "140"),
    (["--strips"], "52"),
    (["--marked-primitive"], "280"),
    (["--thin"], "69"),
])
def test_count(capsys, flag, expected):
    code, out, _ = run(capsys, "count", "--sp", "5", *flag)
    assert code == 0 and out.strip() == expected


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--sp", "4", "--json")
    assert json.loads(out) == {"sp": 4, "kind": "thickness-1", "count": 29}


def test_enumerate_json_round_trips(capsys):
    code, out, _ = run(capsys, "enumerate", "--sp", "4", "--max-thickness", "2", "--json")
    ppps = [core.Ppp.from_dict(d) for d in json.loads(out)]
    assert ppps == list(core.enumerate_ppps(4, 2))


def test_enumerate_jobs_independent(capsys):
    _, one, _ = run(capsys, "enumerate", "--sp", "5", "--csv")
    _, three, _ = run(capsys, "enumerate", "--sp", "5", "--csv", "--jobs", "3")
    assert one == three
    assert one.splitlines()[0] == "upper,lower,g,width,height,area,thickness"
    assert len(one.splitlines()) == 131


def test_enumerate_ascii(capsys):
    code, out, _ = run(capsys, "enumerate", "--sp", "2", "--ascii")
    assert " #<\n># " in out and out.strip().endswith("1 PPPs")


def test_period_json(capsys):
    code, out, _ = run(capsys, "period", "--sp", "4", "--kind", "marked", "--json")
    d = json.loads(out)
    assert set(d) == {"coeffs", "preperiod", "period", "lcmBound"}
    assert (d["period"], d["lcmBound"]) == (2, 12)
    assert d["coeffs"][4:7] == [14, 16, 18]


def test_period_cap_too_small(capsys):
    code, _, err = run(capsys, "period", "--sp", "4", "--cap", "5")
    assert code == 2 and "cap" in err


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--name", "B", "--order", "6", "--json")
    assert json.loads(out)["coeffs"] == [0, 0, 1, 4, 15, 52, 190]
    code, out, _ = run(capsys, "series", "--name", "pPPP", "--order", "5", "--csv")
    assert out.splitlines() == ["n,coeff", "0,0", "1,0", "2,1", "3,6", "4,30", "5,140"]
    code, out, _ = run(capsys, "series", "--name", "A", "--order", "6")
    assert out.split() == ["0", "1", "1", "2", "5", "14", "42"]


def test_asymptotics_csv(capsys):
    code, out, _ = run(capsys, "asymptotics", "--max-n", "12", "--csv")
    lines = out.splitlines()
    assert lines[0] == "n,b_n,ratio" and len(lines) == 13
    assert lines[4].startswith("4,15,")


def test_asymptotics_rejects_small(capsys):
    code, _, _ = run(capsys, "asymptotics", "--max-n", "5")
    assert code == 2


def test_dyck_check(capsys):
    code, out, _ = run(capsys, "dyck-bijection", "--n", "4", "--check", "--json")
    d = json.loads(out)
    assert code == 0 and d["A"] == d["B"] == 29 and d["surjective"]


def test_dyck_trace(capsys):
    code, out, _ = run(capsys, "dyck-bijection", "--trace", "((())):2:3")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("depth p=2, slot 3")
    m = plane.UnicyclicMap.from_dict(json.loads(lines[-1]))
    assert m.cycle_length == 2


def test_dyck_listing(capsys):
    code, out, _ = run(capsys, "dyck-bijection", "--n", "3", "--json")
    assert len(json.loads(out)) == 6


def test_show(capsys):
    code, out, _ = run(capsys, "show", "--upper", "NNE", "--lower", "ENN", "--g", "1", "--json")
    d = json.loads(out)
    assert d["psi"] == {"k": 1, "tuples": [["()"] * 4], "mark": "roots"}
    assert skeleton.PsiImage.from_dict(d["psi"]).k == 1
    assert d["thin"] and d["primitive"]


@pytest.mark.parametrize("argv", [
    ["show", "--upper", "NNE", "--lower", "ENN", "--g", "2"],
    ["count", "--sp", "1"],
    ["count"],
    ["nonsense"],
    ["dyck-bijection", "--trace", "(()):5:1"],
    ["dyck-bijection"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_selfcheck_small(capsys):
    code, out, _ = run(capsys, "selfcheck", "--max-n", "2")
    assert code == 0
    assert "thickness-1 counts" in out


def test_selfcheck_default(capsys):
    code, out, _ = run(capsys, "selfcheck", "--max-n", "4", "--json")
    results = json.loads(out)
    assert code == 0
    assert all(r["ok"] for r in results if r["counted"])


def test_selfcheck_thread_count_independent(capsys):
    _, a, _ = run(capsys, "selfcheck", "--max-n", "3", "--json")
    _, b, _ = run(capsys, "selfcheck", "--max-n", "3", "--json", "--jobs", "2")
    assert a == b


def test_selfcheck_fault_injection(capsys):
    code, _, err = run(capsys, "selfcheck", "--max-n", "3", "--corrupt", "thickness1Counts")
    assert code == 3
    assert "first failing check: thickness-1 counts" in err
    code, _, _ = run(capsys, "selfcheck", "--max-n", "3", "--corrupt", "nope")
    assert code == 2


def test_fixtures_have_provenance(capsys):
    code, out, _ = run(capsys, "fixtures", "--max-n", "5")
    table = json.loads(out)
    assert set(table) == {"thickness1Counts", "primitiveCounts", "stripCounts",
                          "markedPrimitiveFactor"}
    assert all(v["provenance"] in {"SOURCE", "DERIVED"} for v in table.values())
    assert table["thickness1Counts"]["values"]["5"] == 130


def test_internal_errors_exit_3(capsys, monkeypatch):
    from ppp import periodicity

    def broken(*a, **k):
        raise periodicity.NotPeriodicWithinCap("forced")

    monkeypatch.setattr(periodicity, "detect_period", broken)
    code, _, err = run(capsys, "period", "--sp", "3")
    assert code == 3 and "forced" in err
