import json
from pathlib import Path

import pytest

from argsum import baselines, metrics, pyramid
from argsum.cli import (EXIT_CONFIG, EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, main)
from argsum.corpus import parse_corpora, prepare_corpus
from argsum.resources import minicorpus_paths


def run(*argv):
    return main(list(argv))


@pytest.fixture()
def mini(tmp_path):
    paths = minicorpus_paths()
    return {
        "corpus": str(paths["corpus"]),
        "pyramid": str(paths["pyramid"]),
        "annotations": str(paths["annotations"]),
        "out": str(tmp_path / "out"),
    }


class TestIngest:
    def test_emits_sentence_table(self, mini, capsys):
        assert run("ingest", "--corpus", mini["corpus"], "--out", mini["out"]) == EXIT_OK
        lines = Path(mini["out"], "sentences.jsonl").read_text().splitlines()
        records = [json.loads(l) for l in lines]
        assert {"dialog_id", "topic", "turn_index", "index_in_turn",
                "global_index", "text", "tokens", "kept"} <= set(records[0])
        assert any(not r["kept"] for r in records)
        assert "ingest:" in capsys.readouterr().out

    def test_mini_alias(self, tmp_path):
        out = str(tmp_path / "alias")
        assert run("ingest", "--corpus", "mini", "--out", out) == EXIT_OK
        assert Path(out, "sentences.jsonl").exists()

    def test_topic_filter(self, mini):
        assert run("ingest", "--corpus", mini["corpus"], "--out", mini["out"],
                   "--topic", "gun_control") == EXIT_OK
        records = [json.loads(l) for l in
                   Path(mini["out"], "sentences.jsonl").read_text().splitlines()]
        assert {r["topic"] for r in records} == {"gun_control"}


class TestGold:
    def test_emits_gold_and_kappa(self, mini, capsys):
        assert run("gold", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"]) == EXIT_OK
        gold_lines = Path(mini["out"], "gold.jsonl").read_text().splitlines()
        assert all(set(json.loads(l)) == {"dialog_id", "turn_index", "index_in_turn",
                                          "avg_tier", "important"} for l in gold_lines)
        kappa = json.loads(Path(mini["out"], "kappa.json").read_text())
        assert set(kappa) == {"gun_control", "gay_marriage"}
        assert all(0.0 <= v <= 1.0 for v in kappa.values())
        assert "kappa[gun_control]" in capsys.readouterr().out


class TestBaselineCommand:
    def test_cli_matches_direct_library_calls(self, mini, capsys):
        assert run("baseline", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--method", "lexrank",
                   "--out", mini["out"]) == EXIT_OK
        cli_records = [json.loads(l) for l in
                       Path(mini["out"], "selections.jsonl").read_text().splitlines()]
        cli_eval = json.loads(Path(mini["out"], "baseline_eval.json").read_text())

        corpora = parse_corpora(Path(mini["corpus"]).read_text())
        for c in corpora:
            prepare_corpus(c)
        scus = pyramid.load_pyramid(Path(mini["pyramid"]).read_text())
        annotations = pyramid.load_annotations(Path(mini["annotations"]).read_text(), scus)
        gold = pyramid.gold_from_annotations(annotations, scus)

        expected_records, y_true, y_pred = [], [], []
        for c in corpora:
            for dialog in c.dialogs:
                kept = dialog.kept_sentences()
                labels = [1 if (g := gold.get(s.key)) and g.important else 0 for s in kept]
                selection = baselines.lexrank(dialog.sentences(), sum(labels))
                expected_records.append({
                    "dialog_id": dialog.dialog_id, "method": "lexrank",
                    "indices": selection.selected,
                    "scores": {str(k): v for k, v in sorted(selection.scores.items())}})
                y_true.extend(labels)
                y_pred.extend(baselines.baseline_as_labels(selection, kept))
        assert cli_records == json.loads(json.dumps(expected_records))
        report = metrics.prf(y_true, y_pred)
        assert cli_eval["weighted_f"] == report.weighted_f


class TestTrainEval:
    def test_train_then_eval_round_trip(self, mini, capsys):
        assert run("train", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--topic", "gun_control", "--features", "lc", "--test-dialogs", "4",
                   "--seed", "11") == EXIT_OK
        model_path = Path(mini["out"], "model.json")
        split_path = Path(mini["out"], "split.json")
        assert model_path.exists() and split_path.exists()
        split = json.loads(split_path.read_text())
        assert split["topic"] == "gun_control"
        assert len(split["test_dialogs"]) == 4

        assert run("eval", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--model", str(model_path), "--split", str(split_path)) == EXIT_OK
        report = json.loads(Path(mini["out"], "eval.json").read_text())
        assert 0.0 <= report["weighted_f"] <= 1.0
        assert report["weighted_f"] >= 0.9  # planted signal

    def test_multi_topic_without_topic_flag_fails(self, mini, capsys):
        assert run("train", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--test-dialogs", "4") == EXIT_CONFIG

    def test_coref_model_round_trips_through_eval(self, mini, capsys):
        assert run("train", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--topic", "gay_marriage", "--features", "lcp", "--coref", "on",
                   "--test-dialogs", "4") == EXIT_OK
        model = json.loads(Path(mini["out"], "model.json").read_text())
        assert model["use_coref"] is True
        assert model["families"] == ["liwc_current", "liwc_prev"]
        assert run("eval", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--model", str(Path(mini["out"], "model.json")),
                   "--split", str(Path(mini["out"], "split.json"))) == EXIT_OK
        assert 0.0 <= json.loads(Path(mini["out"], "eval.json").read_text())["weighted_f"] <= 1.0


class TestFeaturize:
    def test_feature_table_with_header_record(self, mini):
        assert run("featurize", "--corpus", mini["corpus"], "--out", mini["out"],
                   "--features", "lc+r", "--topic", "gun_control") == EXIT_OK
        lines = Path(mini["out"], "features.jsonl").read_text().splitlines()
        header = json.loads(lines[0])
        names = header["feature_names"]
        assert any(n.startswith("readability.") for n in names)
        assert any(n.startswith("liwc_current.") for n in names)
        first = json.loads(lines[1])
        assert len(first["values"]) == len(names)

    def test_embedding_family_via_bundled_table(self, mini):
        from argsum.resources import data_path
        assert run("featurize", "--corpus", mini["corpus"], "--out", mini["out"],
                   "--features", "w2v", "--topic", "gun_control",
                   "--embeddings", str(data_path("demo_embeddings.txt"))) == EXIT_OK
        header = json.loads(Path(mini["out"], "features.jsonl").read_text().splitlines()[0])
        assert len(header["feature_names"]) == 24

    def test_embedding_without_path_is_config_error(self, mini):
        assert run("featurize", "--corpus", mini["corpus"], "--out", mini["out"],
                   "--features", "w2v") == EXIT_CONFIG


class TestAblate:
    def test_deterministic_under_fixed_seed(self, mini, tmp_path, capsys):
        args = ["ablate", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                "--annotations", mini["annotations"], "--configs", "lr,lc",
                "--test-dialogs", "4", "--seed", "3"]
        out1, out2 = str(tmp_path / "a"), str(tmp_path / "b")
        assert run(*args, "--out", out1) == EXIT_OK
        assert run(*args, "--out", out2) == EXIT_OK
        assert Path(out1, "ablation.jsonl").read_bytes() == \
            Path(out2, "ablation.jsonl").read_bytes()
        assert Path(out1, "ablation.txt").read_bytes() == Path(out2, "ablation.txt").read_bytes()

    def test_grid_shape(self, mini, capsys):
        assert run("ablate", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--configs", "lr,lc", "--test-dialogs", "4") == EXIT_OK
        records = [json.loads(l) for l in
                   Path(mini["out"], "ablation.jsonl").read_text().splitlines()]
        configs = {r["config"] for r in records}
        assert configs == {"1C Lex-Rank", "LC"}
        topics = {r["topic"] for r in records}
        assert topics == {"gun_control", "gay_marriage"}
        lc = [r for r in records if r["config"] == "LC"]
        assert {(r["topic"], r["coref"]) for r in lc} == \
            {(t, c) for t in topics for c in (False, True)}

    def test_jobs_flag_does_not_change_output(self, mini, tmp_path):
        args = ["ablate", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                "--annotations", mini["annotations"], "--configs", "lc",
                "--test-dialogs", "4"]
        out1, out2 = str(tmp_path / "j1"), str(tmp_path / "j4")
        assert run(*args, "--out", out1, "--jobs", "1") == EXIT_OK
        assert run(*args, "--out", out2, "--jobs", "4") == EXIT_OK
        assert Path(out1, "ablation.jsonl").read_bytes() == \
            Path(out2, "ablation.jsonl").read_bytes()


class TestAnalyze:
    def test_chi_square_rankings_per_topic(self, mini, capsys):
        assert run("analyze", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--test-dialogs", "4") == EXIT_OK
        records = [json.loads(l) for l in
                   Path(mini["out"], "chi_square.jsonl").read_text().splitlines()]
        assert {r["topic"] for r in records} == {"gun_control", "gay_marriage"}
        for topic in ("gun_control", "gay_marriage"):
            stats = [r["chi_square"] for r in records if r["topic"] == topic]
            assert stats == sorted(stats, reverse=True)
        out = capsys.readouterr().out
        assert "top categories" in out


class TestErrorPaths:
    def test_missing_corpus_file(self, tmp_path, capsys):
        assert run("ingest", "--corpus", str(tmp_path / "nope.jsonl"),
                   "--out", str(tmp_path)) == EXIT_CONFIG

    def test_malformed_corpus(self, tmp_path, capsys):
        bad = tmp_path / "bad.jsonl"
        bad.write_text("{not json\n")
        assert run("ingest", "--corpus", str(bad), "--out", str(tmp_path)) == EXIT_PARSE

    def test_validation_failure(self, tmp_path, capsys):
        bad = tmp_path / "short.jsonl"
        bad.write_text(json.dumps({
            "dialog_id": "d1", "topic": "t",
            "turns": [{"author": "A", "index": 0, "text": "Hi."},
                      {"author": "B", "index": 1, "text": "Hello."}]}) + "\n")
        assert run("ingest", "--corpus", str(bad), "--out", str(tmp_path)) == EXIT_VALIDATION

    def test_unknown_flag_exits_two(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            run("ingest", "--bogus")
        assert excinfo.value.code == 2

    def test_unknown_feature_code(self, mini):
        assert run("featurize", "--corpus", mini["corpus"], "--out", mini["out"],
                   "--features", "xyz") == EXIT_CONFIG

    def test_missing_topic(self, mini):
        assert run("ingest", "--corpus", mini["corpus"], "--out", mini["out"],
                   "--topic", "nope") == EXIT_VALIDATION


class TestOptionLayering:
    def test_env_overrides_default(self, mini, monkeypatch):
        monkeypatch.setenv("ARGSUM_SEED", "99")
        assert run("train", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--topic", "gun_control", "--test-dialogs", "4") == EXIT_OK
        split = json.loads(Path(mini["out"], "split.json").read_text())
        assert split["seed"] == 99

    def test_flag_beats_env(self, mini, monkeypatch):
        monkeypatch.setenv("ARGSUM_SEED", "99")
        assert run("train", "--corpus", mini["corpus"], "--pyramid", mini["pyramid"],
                   "--annotations", mini["annotations"], "--out", mini["out"],
                   "--topic", "gun_control", "--test-dialogs", "4", "--seed", "123") == EXIT_OK
        assert json.loads(Path(mini["out"], "split.json").read_text())["seed"] == 123

    def test_config_file_supplies_defaults(self, mini, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"seed": 55, "test_dialogs": 4, "topic": "gun_control"}))
        assert run("--config", str(cfg), "train", "--corpus", mini["corpus"],
                   "--pyramid", mini["pyramid"], "--annotations", mini["annotations"],
                   "--out", mini["out"]) == EXIT_OK
        assert json.loads(Path(mini["out"], "split.json").read_text())["seed"] == 55

    def test_bad_config_file(self, mini, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text("[1, 2]")
        assert run("--config", str(cfg), "ingest", "--corpus", mini["corpus"],
                   "--out", mini["out"]) == EXIT_PARSE
