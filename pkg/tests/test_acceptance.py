"""Acceptance suite: every criterion is exact (zero tolerance) and runs
at fixed desk-scale parameters with fixed seeds.  One pass/fail line per
criterion is printed (run with -s to see them live).
"""

from collections import Counter
from fractions import Fraction

import pytest

from splab.invariants import (
    FourthRoot,
    det_sign_star,
    n_of_map,
    s_of_map,
    star_lambda,
    star_matrix,
)
from splab.lab import (
    SL2Case,
    SampleParams,
    classify_sl2,
    genus1_sample,
    run_campaign,
)
from splab.symplectic import SymplecticMap, standard_lagrangian

SEED = 20240817
GENERA = (1, 2, 3)


def _params(g, integral=True):
    return SampleParams(g=g, seed=SEED, word_length=12, entry_bound=2,
                        integral=integral)


def _announce(criterion, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {criterion}" + (f" ({detail})" if detail else ""))
    assert ok, f"{criterion}: {detail}"


def _run(name, g, trials, integral=True):
    return run_campaign(name, _params(g, integral), trials)


def test_criterion_01_main_theorem():
    for g in GENERA:
        report = _run("main_theorem", g, 500)
        _announce(
            f"criterion 1: main theorem, g={g}, 500 integral trials",
            not report.failures and report.elapsed_ms < 60_000,
            f"{len(report.failures)} failures, {report.elapsed_ms} ms",
        )


def test_criterion_02_genus1_table():
    report = _run("genus1_table", 1, 200, integral=False)
    counts = Counter(
        classify_sl2(genus1_sample(_params(1, integral=False), t))
        for t in range(200)
    )
    covered = all(counts[c] >= 10 for c in SL2Case)
    _announce(
        "criterion 2: genus-1 table and sign rule, 200 samples, all cases >= 10",
        not report.failures and covered,
        f"{len(report.failures)} failures, coverage {dict((c.value, counts[c]) for c in SL2Case)}",
    )


def test_criterion_03_worked_values():
    rot = SymplecticMap.from_rows([[0, 1], [-1, 0]])
    neg = SymplecticMap.from_rows([[-2, 0], [0, Fraction(-1, 2)]])
    shear = SymplecticMap.from_rows([[1, 1], [0, 1]])
    lam0 = standard_lagrangian(1)

    ok = (
        n_of_map(rot) == -3 and s_of_map(rot) == FourthRoot(3)
        and n_of_map(neg) == -2 and s_of_map(neg) == FourthRoot(2)
        and n_of_map(shear) == 0 and s_of_map(shear) == FourthRoot(0)
    )
    # intermediate star data, frozen from independent hand/oracle recomputation
    _, rot_gram = star_matrix(rot)
    ok = ok and rot_gram.entries == (
        (Fraction(-1, 2), Fraction(-1, 2)),
        (Fraction(1, 2), Fraction(-1, 2)),
    )
    ok = ok and star_matrix(shear)[1].entries == ((Fraction(-1),),)
    ok = ok and star_lambda(neg, lam0).gram.entries == ((Fraction(0),),)
    ok = ok and det_sign_star(rot) == 1 and det_sign_star(shear) == -1
    _announce("criterion 3: worked genus-1 values and star data", ok)


def test_criterion_04_square_identity():
    for g in GENERA:
        report = _run("square_identity", g, 500, integral=False)
        _announce(
            f"criterion 4: square identity, g={g}, 500 rational trials",
            not report.failures, f"{len(report.failures)} failures",
        )


def test_criterion_05_parity():
    for g in GENERA:
        report = _run("parity", g, 500, integral=False)
        _announce(
            f"criterion 5: mod-2 parity identity, g={g}, 500 rational trials",
            not report.failures, f"{len(report.failures)} failures",
        )


def test_criterion_06_coboundary_mod4():
    for g in GENERA:
        for integral in (True, False):
            kind = "integral" if integral else "rational"
            report = _run("turaev_mod4", g, 300, integral=integral)
            _announce(
                f"criterion 6: delta k = phi mod 4, g={g}, 300 {kind} pairs",
                not report.failures, f"{len(report.failures)} failures",
            )


def test_criterion_07_five_term_identity():
    for g in GENERA:
        report = _run("walker_exact", g, 300)
        _announce(
            f"criterion 7: exact five-term signature identity, g={g}, 300 integral pairs",
            not report.failures, f"{len(report.failures)} failures",
        )


def test_criterion_08_characters():
    for g in GENERA:
        report = _run("character_s", g, 300, integral=False)
        _announce(
            f"criterion 8a: first character multiplicative, g={g}, 300 rational pairs",
            not report.failures, f"{len(report.failures)} failures",
        )
        report = _run("character_r_int", g, 300)
        _announce(
            f"criterion 8b: second character multiplicative, g={g}, 300 integral pairs",
            not report.failures, f"{len(report.failures)} failures",
        )


def test_criterion_09_extension_associativity():
    for g in GENERA:
        report = _run("cocycle_assoc", g, 200)
        _announce(
            f"criterion 9: extension associativity, g={g}, 200 triples",
            not report.failures, f"{len(report.failures)} failures",
        )


def test_criterion_10_stabilization():
    for g in (1, 2):
        report = _run("stabilization", g, 200)
        _announce(
            f"criterion 10: invariants stable under genus increase, g={g}, 200 trials",
            not report.failures, f"{len(report.failures)} failures",
        )


def test_criterion_11_well_definedness():
    for g, trials in ((1, 100), (2, 100)):
        report = _run("well_definedness", g, trials)
        _announce(
            f"criterion 11: well-definedness suite, g={g}, {trials} randomized checks",
            not report.failures, f"{len(report.failures)} failures",
        )


def test_criterion_12_conjecture_campaigns():
    for name in ("conjecture_real", "walker_mod4_real", "character_r_real"):
        for g in (2, 3):
            report = _run(name, g, 500, integral=False)
            obj = report.to_obj()
            well_formed = (
                set(obj) == {"campaign", "params", "trials", "failures", "elapsed_ms"}
                and obj["trials"] == 500
                and isinstance(obj["failures"], list)
            )
            _announce(
                f"criterion 12: conjecture campaign {name}, g={g}, 500 rational trials",
                well_formed and not report.failures,
                f"{len(report.failures)} counterexamples",
            )


def test_criterion_13_determinism():
    import json

    for name, g in (("main_theorem", 2), ("turaev_mod4", 1)):
        r1 = _run(name, g, 50)
        r2 = _run(name, g, 50)
        same = json.dumps(r1.to_obj()["failures"]) == json.dumps(r2.to_obj()["failures"])
        _announce(
            f"criterion 13: byte-identical failure lists, {name}, g={g}",
            same,
        )
