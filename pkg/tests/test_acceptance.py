"""End-to-end acceptance checks, one test per criterion.

Each test records a single PASS/FAIL line; the lines are printed in the
terminal summary (and also to stdout, visible with ``-s``).
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from icircular.c1p import brute_force_circular_ones, has_circular_ones, is_minimal_forbidden_circular
from icircular.families import forb_circular_members, forb_icircular_members, gen_R, gen_W
from icircular.icirc import brute_force_i_circular, has_i_circular, is_minimal_forbidden_icircular
from icircular.verify import (
    IDENTITIES,
    check_identity,
    verify_gforb_minimality,
    verify_identities,
    verify_kp,
    verify_lemma_fc,
    verify_lemma_G,
    verify_lemma_m2,
    verify_lemma_MVast,
    verify_lemma_rb,
    verify_lemma_W,
    verify_lemma_X,
    verify_oracles,
    verify_theorem_icp,
    verify_theorem_sgicp,
)

R_013102_REF = ["1100000", "1001111", "1101111", "1110111", "1110011", "1111110", "1000011"]
W_2310_REF = ["001111", "110011", "111101", "111110", "110011", "100110"]


def record(n: int, ok: bool, detail: str):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert ok, line


def exhaustive_count(rmax, cmax):
    return sum(2 ** (r * c) for r in range(1, rmax + 1) for c in range(1, cmax + 1))


@pytest.mark.acceptance
def test_criterion_1_icp_equivalence():
    rep = verify_theorem_icp(4, 4, 10_000, seed=0, sample_shape=(5, 6))
    ok = rep.passed and rep.cases_checked >= exhaustive_count(4, 4) + 10_000 and rep.elapsed <= 600
    record(1, ok, f"cases={rep.cases_checked} mismatches={len(rep.failures)} elapsed={rep.elapsed:.1f}s")


@pytest.mark.acceptance
def test_criterion_2_oracle_agreement():
    rep = verify_oracles(4, 4)
    ok = rep.passed and rep.cases_checked >= exhaustive_count(4, 4)
    record(2, ok, f"cases={rep.cases_checked} mismatches={len(rep.failures)} elapsed={rep.elapsed:.1f}s")


@pytest.mark.acceptance
def test_criterion_3_forbidden_families():
    bad = []
    iforb = forb_icircular_members(8, 9)
    for m in iforb:
        f = m.matrix
        if has_i_circular(f) is not None or brute_force_i_circular(f) is not None:
            bad.append(("I-circular", m.family.label()))
        if not is_minimal_forbidden_icircular(f):
            bad.append(("I-minimal", m.family.label()))
    forb = forb_circular_members(7, 8)
    for m in forb:
        f = m.matrix
        if has_circular_ones(f) is not None or brute_force_circular_ones(f) is not None:
            bad.append(("circular", m.family.label()))
        if not is_minimal_forbidden_circular(f):
            bad.append(("C-minimal", m.family.label()))
    record(3, not bad, f"ForbI={len(iforb)} Forb={len(forb)} exceptions={bad}")


@pytest.mark.acceptance
def test_criterion_4_lemma_sweeps():
    t0 = time.perf_counter()
    reps = [
        verify_lemma_m2(7),
        verify_lemma_fc(7),
        verify_lemma_MVast(),
        verify_lemma_rb(5),
        verify_lemma_W(),
        verify_lemma_X(),
        verify_lemma_G(),
    ]
    elapsed = time.perf_counter() - t0
    by_id = {r.lemma_id: r for r in reps}
    counts_ok = (
        by_id["MVast"].cases_checked == 16
        and len(by_id["MVast"].info["classSizes"]) == 4
        and by_id["rb"].cases_checked == 16 + 4**4 + 4**5
        and by_id["W"].cases_checked == 36 * 2
        and by_id["X"].cases_checked == 36
        and by_id["G"].cases_checked == 6
    )
    ok = all(r.passed for r in reps) and counts_ok and elapsed <= 900
    summary = " ".join(f"{r.lemma_id}={r.cases_checked}/{len(r.failures)}" for r in reps)
    record(4, ok, f"{summary} (cases/failures) elapsed={elapsed:.1f}s")


@pytest.mark.acceptance
def test_criterion_5_reference_matrices():
    w = gen_W("2310", "figure").to_strings()
    r = gen_R("013102").to_strings()
    # The 7-row reference omits the Q_0(5,6) row, which sits at row 6.
    r_ok = len(r) == 8 and r[5] == "0000110" and r[:5] + r[6:] == R_013102_REF
    w_ok = w == W_2310_REF
    record(5, r_ok and w_ok, f"W(2310,figure)={'match' if w_ok else w} R(013102)={'match+0000110' if r_ok else r}")


@pytest.mark.acceptance
def test_criterion_6_sgicp():
    rep = verify_theorem_sgicp(3, 4)
    ok = rep.passed and rep.cases_checked == 4056 and rep.elapsed <= 600
    record(6, ok, f"cases={rep.cases_checked} mismatches={len(rep.failures)} elapsed={rep.elapsed:.1f}s")


@pytest.mark.acceptance
def test_criterion_7_gforb_minimality():
    rep = verify_gforb_minimality(11)
    ok = rep.passed and rep.cases_checked > 0
    record(7, ok, f"members={rep.cases_checked} exceptions={len(rep.failures)} elapsed={rep.elapsed:.1f}s")


@pytest.mark.acceptance
def test_criterion_8_kp():
    rep = verify_kp(3, 4)
    ok = rep.passed and rep.cases_checked == 4056
    record(8, ok, f"cases={rep.cases_checked} mismatches={len(rep.failures)}")


@pytest.mark.acceptance
def test_criterion_9_identities():
    lemmas = ("m2.", "L1.", "fc.", "rb.", "X.", "G.")
    cases = [i for i in IDENTITIES if i.ident_id.startswith(lemmas)]
    results = [check_identity(i) for i in cases]
    holding = sum(r.configuration for r in results)
    failures = [r.ident_id for r in results if not r.configuration]
    rep = verify_identities()
    ok = holding >= 12 and not failures and rep.passed
    record(9, ok, f"identities={len(cases)} holding={holding} failures={failures} errata={len(rep.info['errata'])}")
