import json
from fractions import Fraction

import pytest

from splab import io
from splab.cli import main
from splab.invariants import FourthRoot
from splab.lab import (
    SL2Case,
    SampleParams,
    classify_sl2,
    genus1_sample,
    predicted_n_sl2,
    predicted_s_sl2,
    random_sp,
    run_campaign,
    trial_rng,
)
from splab.symplectic import SymplecticMap, is_symplectic


def sl2(rows):
    return SymplecticMap.from_rows(rows)


def test_classify_examples():
    assert classify_sl2(SymplecticMap.identity(1)) is SL2Case.IDENTITY
    assert classify_sl2(sl2([[1, 5], [0, 1]])) is SL2Case.UPPER_UNIPOTENT
    assert classify_sl2(sl2([[0, 1], [-1, 0]])) is SL2Case.C_NONZERO_GENERIC
    assert classify_sl2(sl2([[2, 0], [0, "1/2"]])) is SL2Case.UPPER_A
    assert classify_sl2(sl2([[1, 0], [3, 1]])) is SL2Case.C_NONZERO_B_CRITICAL


def test_predicted_n_examples():
    assert predicted_n_sl2(sl2([[-2, 0], [0, "-1/2"]])) == -2
    assert predicted_n_sl2(sl2([[0, 1], [-1, 0]])) == -3
    assert predicted_n_sl2(sl2([[1, 1], [1, 2]])) == -1
    assert predicted_n_sl2(sl2([[1, 0], [3, 1]])) == -1
    assert predicted_n_sl2(sl2([[1, 0], [-3, 1]])) == 1


def test_predicted_s_examples():
    assert predicted_s_sl2(sl2([[2, 1], [0, "1/2"]])) == FourthRoot(0)
    assert predicted_s_sl2(sl2([[-1, 0], [0, -1]])) == FourthRoot(2)
    assert predicted_s_sl2(sl2([[0, 1], [-1, 0]])) == FourthRoot(3)
    assert predicted_s_sl2(sl2([[1, 0], [2, 1]])) == FourthRoot(1)


def test_random_sp_contract():
    params = SampleParams(g=2, seed=17)
    f1 = random_sp(params, trial_rng(17, 0))
    f2 = random_sp(params, trial_rng(17, 0))
    assert f1.matrix == f2.matrix
    assert is_symplectic(f1.matrix, 2)
    assert f1.is_integral()
    rational = SampleParams(g=1, seed=17, integral=False)
    f3 = random_sp(rational, trial_rng(17, 1))
    assert is_symplectic(f3.matrix, 1)


def test_unknown_campaign_rejected():
    with pytest.raises(ValueError):
        run_campaign("nope", SampleParams(g=1, seed=1), 1)
    with pytest.raises(ValueError):
        run_campaign("genus1_table", SampleParams(g=2, seed=1), 1)


def test_report_shape_and_determinism():
    params = SampleParams(g=1, seed=23)
    r1 = run_campaign("turaev_mod4", params, 20)
    r2 = run_campaign("turaev_mod4", params, 20)
    o1, o2 = r1.to_obj(), r2.to_obj()
    assert set(o1) == {"campaign", "params", "trials", "failures", "elapsed_ms"}
    assert json.dumps(o1["failures"]) == json.dumps(o2["failures"])
    assert o1["trials"] == 20 and o1["params"]["seed"] == 23


def test_genus1_coverage_plan():
    params = SampleParams(g=1, seed=3, integral=False)
    from collections import Counter

    counts = Counter(classify_sl2(genus1_sample(params, t)) for t in range(200))
    assert all(counts[c] >= 10 for c in SL2Case)


def test_rational_parsing():
    assert io.parse_rational("3/4") == Fraction(3, 4)
    assert io.parse_rational("-7") == Fraction(-7)
    assert io.parse_rational(5) == Fraction(5)
    for bad in ("1.5", "1e3", "3/0", "3/-2", "a"):
        with pytest.raises(ValueError):
            io.parse_rational(bad)
    assert io.format_rational(Fraction(-3, 4)) == "-3/4"
    assert io.format_rational(Fraction(8, 2)) == "4"


def test_matrix_roundtrip():
    f = sl2([[0, 1], [-1, 0]])
    assert io.map_from_obj(io.map_to_obj(f)) == f
    with pytest.raises(ValueError):
        io.map_from_obj({"g": 2, "rows": [["0", "1"], ["-1", "0"]]})


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj), encoding="utf-8")
    return str(p)


def test_cli_compute(tmp_path, capsys):
    rot = _write(tmp_path, "rot.json", {"g": 1, "rows": [["0", "1"], ["-1", "0"]]})
    assert main(["compute", "n", "--matrix", rot]) == 0
    assert capsys.readouterr().out.strip() == "-3"
    assert main(["compute", "s", "--matrix", rot]) == 0
    assert capsys.readouterr().out.strip() == "-i"
    shear = _write(tmp_path, "shear.json", {"g": 1, "rows": [["1", "1"], ["0", "1"]]})
    assert main(["compute", "phi", "--matrices", shear, shear]) == 0
    assert capsys.readouterr().out.strip() == "-1"
    assert main(["compute", "nu", "--matrices", rot, rot]) == 0
    assert capsys.readouterr().out.strip() == "0"
    lp = _write(tmp_path, "lp.json", {"g": 1, "basis": [["1", "0"]]})
    lq = _write(tmp_path, "lq.json", {"g": 1, "basis": [["0", "1"]]})
    lpq = _write(tmp_path, "lpq.json", {"g": 1, "basis": [["1", "1"]]})
    assert main(["compute", "eps", "--lagrangians", lp, lq]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["compute", "mu", "--lagrangians", lp, lq, lpq]) == 0
    assert capsys.readouterr().out.strip() == "-1"


def test_cli_verify_and_sample(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main([
        "verify", "main_theorem", "--g", "1", "--trials", "25",
        "--seed", "42", "--out", str(out),
    ])
    capsys.readouterr()
    assert code == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["campaign"] == "main_theorem"
    assert report["trials"] == 25 and report["failures"] == []

    assert main(["sample", "--g", "2", "--seed", "9"]) == 0
    sampled = json.loads(capsys.readouterr().out)
    f = io.map_from_obj(sampled)
    assert f.g == 2 and is_symplectic(f.matrix, 2)
