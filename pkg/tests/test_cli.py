"""CLI subcommands: exit codes, stream discipline, and byte-level parity
with the library API."""

import json

import pytest

from distsim import (
    MeasureSpec,
    SymmetrizeMode,
    evaluate_pair,
    load_gold,
    load_store,
    neighbors,
    render_report_tsv,
    report_to_dict,
    score_pairs,
)
from distsim.cli import run

from conftest import CORPUS_PATH, GOLD_PATH


@pytest.fixture(scope="module")
def store_path(tmp_path_factory):
    path = str(tmp_path_factory.mktemp("cli") / "toy.store")
    assert run(["build", "--corpus", str(CORPUS_PATH), "--out", path]) == 0
    return path


@pytest.fixture(scope="module")
def store(store_path):
    return load_store(store_path)


class TestBuild:
    def test_reports_on_stderr_only(self, tmp_path, capsys):
        out = str(tmp_path / "x.store")
        code = run(["build", "--corpus", str(CORPUS_PATH), "--out", out,
                    "--window", "3"])
        captured = capsys.readouterr()
        assert code == 0
        assert captured.out == ""
        assert "wrote" in captured.err
        assert load_store(out).window_size == 3

    def test_triples_source(self, tmp_path):
        triples = tmp_path / "t.tsv"
        triples.write_text("eat\tobj\tapple\t3\ncut\tobj\tapple\t1\n")
        out = str(tmp_path / "t.store")
        assert run(["build", "--triples", str(triples), "--out", out]) == 0
        store = load_store(out)
        assert set(store.relations) == {"obj"}

    def test_both_sources_is_usage_error(self, tmp_path, capsys):
        code = run(["build", "--corpus", "a", "--triples", "b",
                    "--out", str(tmp_path / "x")])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_missing_corpus_file_is_data_error(self, tmp_path, capsys):
        code = run(["build", "--corpus", str(tmp_path / "missing.txt"),
                    "--out", str(tmp_path / "x.store")])
        assert code == 2

    def test_bad_window_is_usage_error(self, tmp_path):
        assert run(["build", "--corpus", str(CORPUS_PATH),
                    "--out", str(tmp_path / "x"), "--window", "0"]) == 1


class TestSim:
    def test_matches_library_byte_for_byte(self, store_path, store, capsys):
        assert run(["sim", "doctor", "nurse", "--store", store_path]) == 0
        printed = capsys.readouterr().out
        expected = evaluate_pair(store, "doctor", "nurse", MeasureSpec()).value
        assert printed == f"{expected!r}\n"

    def test_deterministic_across_runs(self, store_path, capsys):
        argv = ["sim", "apple", "banana", "--store", store_path,
                "--measure", "jsd", "--log-base", "2"]
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        assert capsys.readouterr().out == first

    def test_flags_reach_the_measure(self, store_path, store, capsys):
        argv = ["sim", "doctor", "nurse", "--store", store_path,
                "--measure", "asd", "--alpha", "0.5", "--symmetrize", "avg"]
        assert run(argv) == 0
        printed = capsys.readouterr().out
        spec = MeasureSpec(measure="asd", alpha=0.5, symmetrize=SymmetrizeMode.AVG)
        assert printed == f"{evaluate_pair(store, 'doctor', 'nurse', spec).value!r}\n"

    def test_store_from_environment(self, store_path, capsys, monkeypatch):
        monkeypatch.setenv("DISTSIM_STORE", store_path)
        assert run(["sim", "car", "truck"]) == 0
        assert capsys.readouterr().out.strip()

    def test_unknown_word_is_data_error(self, store_path, capsys):
        assert run(["sim", "doctor", "zyzzyva", "--store", store_path]) == 2
        assert "zyzzyva" in capsys.readouterr().err

    def test_unknown_measure_prints_catalog(self, store_path, capsys):
        assert run(["sim", "a", "b", "--store", store_path,
                    "--measure", "resnik"]) == 1
        err = capsys.readouterr().err
        assert "cosine" in err and "kld" in err

    def test_out_of_range_flag_is_usage_error(self, store_path):
        assert run(["sim", "a", "b", "--store", store_path, "--alpha", "2.0"]) == 1

    def test_missing_store_is_usage_error(self, capsys, monkeypatch):
        monkeypatch.delenv("DISTSIM_STORE", raising=False)
        assert run(["sim", "a", "b"]) == 1

    def test_relations_filter(self, store_path, capsys):
        assert run(["sim", "doctor", "nurse", "--store", store_path,
                    "--relations", "window"]) == 0
        capsys.readouterr()
        assert run(["sim", "doctor", "nurse", "--store", store_path,
                    "--relations", "obj"]) == 2


class TestNeighbors:
    def test_matches_library(self, store_path, store, capsys):
        assert run(["neighbors", "doctor", "--store", store_path,
                    "--top-k", "5"]) == 0
        printed = capsys.readouterr().out
        expected = neighbors(store, "doctor", MeasureSpec(), 5)
        assert printed == "".join(f"{w}\t{v!r}\n" for w, v in expected)

    def test_bad_top_k(self, store_path):
        assert run(["neighbors", "doctor", "--store", store_path,
                    "--top-k", "0"]) == 1


class TestEval:
    def test_tsv_matches_library_rendering(self, store_path, store, capsys):
        assert run(["eval", "--gold", str(GOLD_PATH), "--store", store_path,
                    "--measure", "dice_fuzzy"]) == 0
        printed = capsys.readouterr().out
        gold = load_gold(str(GOLD_PATH))
        report = score_pairs(store, gold, MeasureSpec(measure="dice_fuzzy"))
        assert printed == render_report_tsv(report)

    def test_skipped_pair_still_exits_zero(self, store_path, capsys):
        assert run(["eval", "--gold", str(GOLD_PATH), "--store", store_path]) == 0
        out = capsys.readouterr().out
        assert "#skipped\tzyzzyva" in out

    def test_strict_mode_fails_on_skips(self, store_path, capsys):
        assert run(["eval", "--gold", str(GOLD_PATH), "--store", store_path,
                    "--strict"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "zyzzyva" in captured.err

    def test_json_format(self, store_path, store, capsys):
        assert run(["eval", "--gold", str(GOLD_PATH), "--store", store_path,
                    "--format", "json", "--measure", "lin"]) == 0
        data = json.loads(capsys.readouterr().out)
        report = score_pairs(store, load_gold(str(GOLD_PATH)),
                             MeasureSpec(measure="lin"))
        assert data == report_to_dict(report)


class TestListMeasures:
    def test_table_contents(self, capsys):
        assert run(["list-measures"]) == 0
        out = capsys.readouterr().out
        header, *rows = out.strip().split("\n")
        assert "polarity" in header and "sym" in header
        for measure_id in ("cosine", "kld", "asd", "jsd", "hindle", "lin", "saif",
                           "crm_mi_dw", "pdt_avgwt", "saif_div_maxwt"):
            assert any(row.startswith(measure_id + " ") for row in rows), measure_id
        assert len(rows) == 29
        assert any("dif" in row for row in rows)  # alias column

    def test_deterministic(self, capsys):
        run(["list-measures"])
        first = capsys.readouterr().out
        run(["list-measures"])
        assert capsys.readouterr().out == first


def test_no_arguments_is_usage_error(capsys):
    assert run([]) == 1


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    assert "distsim" in capsys.readouterr().out
