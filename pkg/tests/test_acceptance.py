"""Acceptance gate: one test per criterion, each timed and printing a
PASS line. Run with `pytest tests/test_acceptance.py -v -s`."""

import json
import math
import random
import time

import pytest

from distsim import (
    CrmFamily,
    CrmWeighting,
    KldVariant,
    MeasureSpec,
    NegativePmiPolicy,
    OverlapKind,
    PcmKind,
    Polarity,
    Semantics,
    SymmetrizeMode,
    AssocParams,
    asd,
    build_windowed,
    cosine,
    crisp_overlap,
    crm,
    crm_precision_recall,
    fuzzy_overlap,
    jsd,
    kld,
    l_norm,
    lin,
    list_measures,
    load_store,
    pcm,
    profile,
    rank_concordance,
    saif,
    save_store,
    symmetrize,
)
from distsim.cli import run as cli_run

from conftest import (
    CORPUS_PATH,
    GOLD_PATH,
    make_profile,
    random_cp_profile,
    random_pmi_profile,
    random_shared_cp_pair,
)

from test_cooccur import brute_force_window_counts, window_pairs_by_word
from test_measures import kld_avg_closed_form


class Stopwatch:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_criterion_1_worked_example_regression():
    with Stopwatch() as clock:
        pairs = [
            (make_profile({"w": 0.91}), make_profile({"w": 0.80}), 0.11, 0.056),
            (make_profile({"w": 0.60}), make_profile({"w": 0.50}), 0.10, 0.079),
        ]
        for p1, p2, dif_expected, div_expected in pairs:
            dif = pcm(p1, p2, PcmKind.DIF).value
            assert abs(dif - dif_expected) <= 1e-12
            div = pcm(p1, p2, PcmKind.DIV, log_base=10.0).value
            assert abs(div - div_expected) <= 5e-4
    assert clock.elapsed < 1.0
    print(f"\nACCEPTANCE 1: PASS - worked-example regression "
          f"(dif 0.11/0.10, div 0.056/0.079) in {clock.elapsed:.3f}s")


def test_criterion_2_jaccard_dice_ranking_theorem():
    with Stopwatch() as clock:
        rng = random.Random(20240)
        crisp_j, crisp_d, fuzzy_j, fuzzy_d = [], [], [], []
        for _ in range(1000):
            p1 = random_cp_profile(rng)
            p2 = random_cp_profile(rng)
            crisp_j.append(crisp_overlap(p1, p2, OverlapKind.JACCARD).value)
            crisp_d.append(crisp_overlap(p1, p2, OverlapKind.DICE).value)
            fuzzy_j.append(fuzzy_overlap(p1, p2, OverlapKind.JACCARD).value)
            fuzzy_d.append(fuzzy_overlap(p1, p2, OverlapKind.DICE).value)
        assert rank_concordance(crisp_j, crisp_d) == 1.0
        assert rank_concordance(fuzzy_j, fuzzy_d) == 1.0
    assert clock.elapsed < 5.0
    print(f"\nACCEPTANCE 2: PASS - jaccard/dice concordance 1.0 over 1000 "
          f"crisp+fuzzy pairs in {clock.elapsed:.3f}s")


def test_criterion_3_mi_crm_equals_fuzzy_dice():
    with Stopwatch() as clock:
        rng = random.Random(20241)
        worst = 0.0
        for _ in range(500):
            p1 = random_pmi_profile(rng)
            p2 = random_pmi_profile(rng)
            left = crm(p1, p2, CrmFamily.MI, CrmWeighting.DW,
                       gamma=1.0, beta=rng.random()).value
            right = fuzzy_overlap(p1, p2, OverlapKind.DICE).value
            worst = max(worst, abs(left - right))
            assert abs(left - right) < 1e-12
    assert clock.elapsed < 5.0
    print(f"\nACCEPTANCE 3: PASS - |crm(mi,dw,gamma=1) - fuzzy dice| < 1e-12 "
          f"on 500 pairs (worst {worst:.2e}) in {clock.elapsed:.3f}s")


def test_criterion_4_identity_suite():
    rng = random.Random(20242)

    # fuzzy dice on unrestricted CP profiles reduces to the min-sum
    for _ in range(300):
        p1 = random_cp_profile(rng)
        p2 = random_cp_profile(rng)
        min_sum = sum(
            min(p1.strengths.get(w, 0.0), p2.strengths.get(w, 0.0))
            for w in set(p1.strengths) | set(p2.strengths)
        )
        assert abs(fuzzy_overlap(p1, p2, OverlapKind.DICE).value - min_sum) <= 1e-12

    # division measure agrees computed from CP or PMI strengths
    store = build_windowed(
        ["a b c d", "b c d e", "c d e a", "d e a b", "e a b c", "a c e b"], 3
    )
    keep = AssocParams(negative_pmi_policy=NegativePmiPolicy.KEEP)
    for w1, w2 in (("a", "b"), ("b", "e"), ("c", "d")):
        cp1, cp2 = profile(store, w1), profile(store, w2)
        shared = set(cp1.strengths) & set(cp2.strengths)
        cp1 = make_profile({k: cp1.strengths[k] for k in shared})
        cp2 = make_profile({k: cp2.strengths[k] for k in shared})
        mi1 = profile(store, w1, semantics=Semantics.PMI, assoc_params=keep)
        mi2 = profile(store, w2, semantics=Semantics.PMI, assoc_params=keep)
        mi1 = make_profile({k: mi1.strengths[k] for k in shared}, Semantics.PMI)
        mi2 = make_profile({k: mi2.strengths[k] for k in shared}, Semantics.PMI)
        from_cp = pcm(cp1, cp2, PcmKind.DIV, log_base=2.0).value
        from_mi = pcm(mi1, mi2, PcmKind.DIV).value
        assert abs(from_cp - from_mi) <= 1e-12

    # symmetrized kld (avg) equals its algebraic closed form
    for _ in range(200):
        p1, p2 = random_shared_cp_pair(rng)
        averaged = symmetrize(kld, p1, p2, SymmetrizeMode.AVG).value
        closed = kld_avg_closed_form(p1.strengths, p2.strengths)
        assert abs(averaged - closed) <= 1e-12

    # skew divergence at alpha=1 degenerates to strict kld
    for _ in range(200):
        p1, p2 = random_shared_cp_pair(rng)
        assert abs(asd(p1, p2, alpha=1.0).value - kld(p1, p2).value) <= 1e-12

    # difference-weighted token CRM has precision == recall, exactly
    for _ in range(200):
        p1 = random_cp_profile(rng)
        p2 = random_cp_profile(rng)
        precision, recall = crm_precision_recall(
            p1, p2, CrmFamily.TOKEN, CrmWeighting.DW
        )
        assert precision == recall

    print("\nACCEPTANCE 4: PASS - identity suite (dice-min-sum, div cp/pmi, "
          "kld-avg closed form, asd(1)=kld, token-dw P=R)")


def test_criterion_5_range_and_symmetry_suite():
    rng = random.Random(20243)
    for _ in range(1000):
        p1 = random_cp_profile(rng)
        p2 = random_cp_profile(rng)
        for value in (
            cosine(p1, p2).value,
            crisp_overlap(p1, p2, OverlapKind.JACCARD).value,
            crisp_overlap(p1, p2, OverlapKind.DICE).value,
            fuzzy_overlap(p1, p2, OverlapKind.JACCARD).value,
            fuzzy_overlap(p1, p2, OverlapKind.DICE).value,
            lin(p1, p2).value,
            saif(p1, p2).value,
            pcm(p1, p2, PcmKind.PDT_AVGWT).value,
        ):
            assert 0.0 <= value <= 1.0
        assert 0.0 <= l_norm(p1, p2, 1).value <= 2.0
        forward = jsd(p1, p2).value
        assert forward >= 0.0
        assert forward == jsd(p2, p1).value

    asymmetric_seen = False
    for _ in range(200):
        p1, p2 = random_shared_cp_pair(rng)
        if abs(kld(p1, p2).value - kld(p2, p1).value) > 1e-6:
            asymmetric_seen = True
        assert (
            symmetrize(kld, p1, p2, SymmetrizeMode.MAX).value
            >= symmetrize(kld, p1, p2, SymmetrizeMode.AVG).value
        )
    assert asymmetric_seen
    print("\nACCEPTANCE 5: PASS - ranges and symmetry over 1000 CP pairs "
          "(bounds exact, jsd bitwise symmetric, kld asymmetric, max>=avg)")


def test_criterion_6_counting_oracle_and_round_trip(tmp_path):
    rng = random.Random(20244)
    documents = [
        " ".join(rng.choice("abcdefghij") for _ in range(rng.randint(0, 30)))
        for _ in range(25)
    ]
    for window in range(1, 6):
        store = build_windowed(documents, window)
        assert window_pairs_by_word(store) == brute_force_window_counts(
            documents, window
        )
        store.validate()
        path = str(tmp_path / f"w{window}.store")
        save_store(store, path)
        assert load_store(path) == store
    print("\nACCEPTANCE 6: PASS - 25 random documents match the brute-force "
          "enumerator for windows 1-5 and round-trip losslessly")


def test_criterion_7_end_to_end_cli(tmp_path, capsys):
    assert CORPUS_PATH.stat().st_size <= 1_000_000
    gold_pairs = sum(
        1 for line in GOLD_PATH.read_text().splitlines()
        if line and not line.startswith("#")
    )
    assert gold_pairs <= 30

    with Stopwatch() as clock:
        store_path = str(tmp_path / "toy.store")
        assert cli_run(["build", "--corpus", str(CORPUS_PATH),
                        "--out", store_path, "--window", "2"]) == 0
        capsys.readouterr()
        for info in list_measures():
            code = cli_run(["eval", "--gold", str(GOLD_PATH), "--store", store_path,
                            "--measure", info.id, "--format", "json"])
            captured = capsys.readouterr()
            assert code == 0, f"{info.id}: exit {code}: {captured.err}"
            report = json.loads(captured.out)
            assert len(report["scored_pairs"]) + len(report["skipped"]) == gold_pairs
            for skip in report["skipped"]:
                assert skip["reason"]
            for pair in report["scored_pairs"]:
                assert math.isfinite(pair["score"])
    assert clock.elapsed < 30.0
    with capsys.disabled():
        print(f"\nACCEPTANCE 7: PASS - end-to-end eval of all "
              f"{len(list_measures())} measures over {gold_pairs} gold pairs "
              f"in {clock.elapsed:.2f}s")


def test_catalog_covers_both_polarities():
    polarities = {info.polarity for info in list_measures()}
    assert polarities == {Polarity.DISTANCE, Polarity.RELATEDNESS}
