"""Command-line entry point.

Subcommands: ingest, gold, baseline, featurize, train, eval, ablate, analyze.
Every subcommand is a thin shell over the library and reproducible from
(input files, config, --seed). Options resolve as: built-in default, then
--config file value, then ARGSUM_<NAME> environment variable, then explicit
flag (flags win).

Exit codes: 0 success, 2 usage error, 3 configuration or missing resource,
4 validation failure, 5 malformed input file, 1 unexpected error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import ablation, baselines, corpus as corpus_mod, metrics, model as model_mod, pyramid
from .errors import ConfigError, ParseError, ValidationError
from .features import FeatureConfig, FeatureExtractor, load_feature_resources
from .resources import minicorpus_paths

DEFAULT_SEED = ablation.DEFAULT_SEED
ENV_PREFIX = "ARGSUM_"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_VALIDATION = 4
EXIT_PARSE = 5
EXIT_UNEXPECTED = 1

FEATURE_CODES = {
    "r": ("readability",),
    "lc": ("liwc_current",),
    "lcp": ("liwc_current", "liwc_prev"),
    "snt": ("sentiment",),
    "dac": ("dac_prev",),
    "st": ("turn_pos",),
    "w2v": ("embedding",),
}
BASELINE_CODES = {"kl": "klsum", "sb": "sumbasic", "lr": "lexrank"}

_OPTION_TYPES = {"seed": int, "jobs": int, "test_dialogs": int,
                 "threshold": float, "epochs": int}
_DEFAULTS = {
    "seed": DEFAULT_SEED, "jobs": 1, "test_dialogs": ablation.DEFAULT_TEST_DIALOGS,
    "threshold": pyramid.DEFAULT_THRESHOLD, "epochs": model_mod.DEFAULT_EPOCHS,
    "features": "lc", "method": "lexrank",
    "configs": "kl,sb,lr,lc,lcp,r,lcp+r",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="argsum",
        description="Identify important argument sentences in two-party debate dialogs.")
    parser.add_argument("--config", help="JSON file with default option values")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *options: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if "corpus" in options:
            p.add_argument("--corpus", help="corpus JSONL file ('mini' = bundled mini corpus)")
        if "gold_inputs" in options:
            p.add_argument("--pyramid", help="pyramid JSONL file")
            p.add_argument("--annotations", help="annotation JSONL file")
        p.add_argument("--out", help="output directory")
        p.add_argument("--seed", type=int, help=f"master RNG seed (default {DEFAULT_SEED})")
        p.add_argument("--jobs", type=int, help="worker pool size for per-dialog work")
        p.add_argument("--topic", help="restrict to one topic")
        if "threshold" in options:
            p.add_argument("--threshold", type=float, help="importance tier threshold (default 3)")
        if "features" in options:
            p.add_argument("--features", help="feature codes joined by '+', e.g. lcp+r")
            p.add_argument("--coref", choices=["on", "off", "both"])
            p.add_argument("--embeddings", help="embedding table (text format)")
        if "split" in options:
            p.add_argument("--test-dialogs", dest="test_dialogs", type=int,
                           help="dialogs held out per topic (default 13)")
        if "svm" in options:
            p.add_argument("--lambda-grid", dest="lambda_grid",
                           help="comma-separated regularization grid")
            p.add_argument("--epochs", type=int)
        return p

    add("ingest", "validate, segment, and filter a corpus", "corpus")
    add("gold", "derive gold importance labels and agreement", "corpus", "gold_inputs", "threshold")
    p = add("baseline", "run an extractive baseline against gold labels",
            "corpus", "gold_inputs", "threshold")
    p.add_argument("--method", choices=sorted(baselines.METHODS))
    add("featurize", "emit feature vectors for kept sentences", "corpus", "features")
    add("train", "cross-validate and fit the classifier", "corpus", "gold_inputs",
        "threshold", "features", "split", "svm")
    p = add("eval", "evaluate a saved model on its held-out split", "corpus", "gold_inputs",
            "threshold")
    p.add_argument("--model", help="model JSON file")
    p.add_argument("--split", help="split JSON file written by train")
    p.add_argument("--embeddings", help="embedding table (text format)")
    p = add("ablate", "run the full experiment grid", "corpus", "gold_inputs",
            "threshold", "features", "split", "svm")
    p.add_argument("--configs", help="comma-separated rows, e.g. kl,sb,lr,lc,lcp+r")
    add("analyze", "chi-square ranking of category features", "corpus", "gold_inputs",
        "threshold", "split")
    return parser


def _resolve_options(args: argparse.Namespace) -> dict:
    """Layer defaults, config file, environment, and explicit flags."""
    options = dict(_DEFAULTS)
    if getattr(args, "config", None):
        path = Path(args.config)
        if not path.exists():
            raise ConfigError(f"config file not found: {path}")
        try:
            loaded = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"config file {path}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ParseError(f"config file {path} must hold a JSON object")
        options.update(loaded)
    for key in ("corpus", "pyramid", "annotations", "out", "seed", "jobs", "topic",
                "threshold", "method", "features", "coref", "embeddings",
                "test_dialogs", "configs", "lambda_grid", "epochs", "model", "split"):
        env = os.environ.get(ENV_PREFIX + key.upper())
        if env is not None:
            options[key] = env
        value = getattr(args, key, None)
        if value is not None:
            options[key] = value
    for key, cast in _OPTION_TYPES.items():
        if key in options and options[key] is not None:
            options[key] = cast(options[key])
    return options


def _require(options: dict, *names: str) -> None:
    missing = [n for n in names if not options.get(n)]
    if missing:
        raise ConfigError(f"missing required option(s): {', '.join('--' + m.replace('_', '-') for m in missing)}")


def _out_dir(options: dict) -> Path:
    _require(options, "out")
    out = Path(options["out"])
    out.mkdir(parents=True, exist_ok=True)
    return out


def _load_corpora(options: dict) -> list[corpus_mod.Corpus]:
    _require(options, "corpus")
    if options["corpus"] == "mini":
        source = minicorpus_paths()["corpus"].read_text(encoding="utf-8")
    else:
        path = Path(options["corpus"])
        if not path.exists():
            raise ConfigError(f"corpus file not found: {path}")
        source = path.read_text(encoding="utf-8")
    corpora = corpus_mod.parse_corpora(source)
    if options.get("topic"):
        corpora = [c for c in corpora if c.topic == options["topic"]]
        if not corpora:
            raise ValidationError(f"topic {options['topic']!r} not present in corpus")
    for c in corpora:
        corpus_mod.prepare_corpus(c)
    return corpora


def _load_gold(options: dict) -> dict[pyramid.SentenceKey, pyramid.GoldLabel]:
    if options.get("corpus") == "mini":
        paths = minicorpus_paths()
        options.setdefault("pyramid", str(paths["pyramid"]))
        options.setdefault("annotations", str(paths["annotations"]))
    _require(options, "pyramid", "annotations")
    for key in ("pyramid", "annotations"):
        if not Path(options[key]).exists():
            raise ConfigError(f"{key} file not found: {options[key]}")
    scus = pyramid.load_pyramid(Path(options["pyramid"]).read_text(encoding="utf-8"))
    annotations = pyramid.load_annotations(
        Path(options["annotations"]).read_text(encoding="utf-8"), scus)
    gold = pyramid.gold_from_annotations(annotations, scus, threshold=options["threshold"])
    options["_annotations"] = annotations
    options["_scus"] = scus
    return gold


def _feature_config(options: dict, coref: bool | None = None) -> FeatureConfig:
    families: list[str] = []
    spec = options.get("features") or "lc"
    for code in spec.split("+"):
        code = code.strip().lower()
        if code not in FEATURE_CODES:
            raise ConfigError(f"unknown feature code {code!r}; expected {sorted(FEATURE_CODES)}")
        for family in FEATURE_CODES[code]:
            if family not in families:
                families.append(family)
    use_coref = coref if coref is not None else options.get("coref", "off") == "on"
    return FeatureConfig(families=tuple(families), use_coref=use_coref,
                         embeddings_path=options.get("embeddings"))


def _write_jsonl(path: Path, records: list[dict]) -> None:
    text = "\n".join(json.dumps(r) for r in records) + "\n" if records else ""
    path.write_text(text, encoding="utf-8")


# --------------------------------------------------------------------------
# subcommands

def cmd_ingest(options: dict) -> int:
    corpora = _load_corpora(options)
    out = _out_dir(options)
    records = []
    for c in corpora:
        for s in c.sentences():
            records.append({"dialog_id": s.dialog_id, "topic": c.topic,
                            "turn_index": s.turn_index, "index_in_turn": s.index_in_turn,
                            "global_index": s.global_index, "text": s.text,
                            "tokens": s.tokens, "kept": s.kept})
    _write_jsonl(out / "sentences.jsonl", records)
    kept = sum(1 for r in records if r["kept"])
    print(f"ingest: {sum(len(c.dialogs) for c in corpora)} dialogs, "
          f"{len(records)} sentences, {kept} kept -> {out / 'sentences.jsonl'}")
    return EXIT_OK


def cmd_gold(options: dict) -> int:
    corpora = _load_corpora(options)
    gold = _load_gold(options)
    out = _out_dir(options)
    (out / "gold.jsonl").write_text(pyramid.write_gold(gold), encoding="utf-8")

    annotations = options["_annotations"]
    scus = options["_scus"]
    topic_of = {d.dialog_id: c.topic for c in corpora for d in c.dialogs}
    kappa_report = {}
    for c in corpora:
        topic_annotations = [a for a in annotations if topic_of.get(a.key[0]) == c.topic]
        vectors = pyramid.annotator_binary_labels(topic_annotations, scus,
                                                  threshold=options["threshold"])
        kappa_report[c.topic] = (pyramid.average_pairwise_kappa(vectors)
                                 if len(vectors) >= 2 else None)
    (out / "kappa.json").write_text(json.dumps(kappa_report, indent=2) + "\n", encoding="utf-8")
    important = sum(1 for g in gold.values() if g.important)
    print(f"gold: {len(gold)} labeled sentences, {important} important -> {out / 'gold.jsonl'}")
    for topic, value in kappa_report.items():
        print(f"kappa[{topic}] = {value:.4f}" if value is not None else f"kappa[{topic}] = n/a")
    return EXIT_OK


def cmd_baseline(options: dict) -> int:
    corpora = _load_corpora(options)
    gold = _load_gold(options)
    out = _out_dir(options)
    method = options["method"]
    records, y_true, y_pred = [], [], []
    for c in corpora:
        for dialog in c.dialogs:
            kept = dialog.kept_sentences()
            if not kept:
                continue
            labels = [1 if (g := gold.get(s.key)) and g.important else 0 for s in kept]
            selection = baselines.run_method(method, dialog.sentences(), sum(labels))
            predicted = baselines.baseline_as_labels(selection, kept)
            records.append({"dialog_id": dialog.dialog_id, "method": method,
                            "indices": selection.selected,
                            "scores": {str(k): v for k, v in sorted(selection.scores.items())}})
            y_true.extend(labels)
            y_pred.extend(predicted)
    _write_jsonl(out / "selections.jsonl", records)
    report = metrics.prf(y_true, y_pred, config=method)
    (out / "baseline_eval.json").write_text(json.dumps({
        "method": method, "weighted_f": report.weighted_f,
        "per_class": {str(c): vars(m) for c, m in report.per_class.items()},
    }, indent=2) + "\n", encoding="utf-8")
    print(f"baseline[{method}]: weighted F = {report.weighted_f:.4f} over {len(y_true)} sentences")
    return EXIT_OK


def cmd_featurize(options: dict) -> int:
    corpora = _load_corpora(options)
    out = _out_dir(options)
    cfg = _feature_config(options)
    extractor = FeatureExtractor(cfg, load_feature_resources(cfg))
    records = [{"feature_names": list(extractor.names), "coref": cfg.use_coref}]
    count = 0
    for c in corpora:
        for vectors in ablation.pmap(extractor.extract_dialog, c.dialogs, options["jobs"]):
            for v in vectors:
                records.append({"dialog_id": v.key[0], "turn_index": v.key[1],
                                "index_in_turn": v.key[2], "values": v.values.tolist()})
                count += 1
    _write_jsonl(out / "features.jsonl", records)
    print(f"featurize: {count} sentences x {len(extractor.names)} features "
          f"-> {out / 'features.jsonl'}")
    return EXIT_OK


def _single_topic(corpora: list[corpus_mod.Corpus], options: dict) -> corpus_mod.Corpus:
    if len(corpora) == 1:
        return corpora[0]
    raise ConfigError(f"corpus holds topics {[c.topic for c in corpora]}; pick one with --topic")


def cmd_train(options: dict) -> int:
    corpora = _load_corpora(options)
    gold = _load_gold(options)
    out = _out_dir(options)
    topic_corpus = _single_topic(corpora, options)
    cfg = _feature_config(options)
    extractor = FeatureExtractor(cfg, load_feature_resources(cfg))

    kept = topic_corpus.kept_sentences()
    keys = [s.key for s in kept]
    labels = np.asarray([1 if (g := gold.get(k)) and g.important else 0 for k in keys])
    split = metrics.balanced_split(labels, [s.dialog_id for s in kept],
                                   test_dialog_count=options["test_dialogs"],
                                   seed=options["seed"])
    by_key = {}
    for vectors in ablation.pmap(extractor.extract_dialog, topic_corpus.dialogs,
                                  options["jobs"]):
        for v in vectors:
            by_key[v.key] = v.values
    X = np.vstack([by_key[k] for k in keys])
    grid = (tuple(float(x) for x in str(options["lambda_grid"]).split(","))
            if options.get("lambda_grid") else model_mod.DEFAULT_LAMBDA_GRID)
    train_idx = np.asarray(split.train_indices)
    cv = model_mod.cross_validate(X[train_idx], labels[train_idx], grid,
                                  seed=options["seed"], epochs=options["epochs"])
    model = model_mod.train_svm(X[train_idx], labels[train_idx], lam=cv.best_lambda,
                                epochs=options["epochs"], seed=options["seed"],
                                feature_names=extractor.names)
    model.families = cfg.families
    model.use_coref = cfg.use_coref
    model_mod.save_model(model, out / "model.json")
    (out / "split.json").write_text(json.dumps({
        "topic": topic_corpus.topic, "seed": options["seed"],
        "test_dialogs": split.test_dialogs,
        "train_keys": [list(keys[i]) for i in split.train_indices],
        "test_keys": [list(keys[i]) for i in split.test_indices],
    }, indent=2) + "\n", encoding="utf-8")
    print(f"train[{topic_corpus.topic}]: lambda = {cv.best_lambda:g}, "
          f"{len(split.train_indices)} train / {len(split.test_indices)} test "
          f"-> {out / 'model.json'}")
    return EXIT_OK


def cmd_eval(options: dict) -> int:
    corpora = _load_corpora(options)
    gold = _load_gold(options)
    out = _out_dir(options)
    _require(options, "model", "split")
    for key in ("model", "split"):
        if not Path(options[key]).exists():
            raise ConfigError(f"{key} file not found: {options[key]}")
    model = model_mod.load_model(options["model"])
    split = json.loads(Path(options["split"]).read_text(encoding="utf-8"))
    topic_corpus = next((c for c in corpora if c.topic == split["topic"]), None)
    if topic_corpus is None:
        raise ValidationError(f"split topic {split['topic']!r} not in corpus")
    cfg = FeatureConfig(families=model.families or ("liwc_current",),
                        use_coref=model.use_coref,
                        embeddings_path=options.get("embeddings"))
    extractor = FeatureExtractor(cfg, load_feature_resources(cfg))
    if extractor.names != tuple(model.feature_names):
        raise ValidationError("recomputed feature names do not match the saved model")
    by_key = {}
    for vectors in ablation.pmap(extractor.extract_dialog, topic_corpus.dialogs,
                                  options["jobs"]):
        for v in vectors:
            by_key[v.key] = v.values
    test_keys = [tuple(k) for k in split["test_keys"]]
    X = np.vstack([by_key[k] for k in test_keys])
    y_true = [1 if (g := gold.get(k)) and g.important else 0 for k in test_keys]
    y_pred = model_mod.predict_labels(model, X)
    report = metrics.prf(y_true, y_pred, config="eval")
    (out / "eval.json").write_text(json.dumps({
        "topic": split["topic"], "weighted_f": report.weighted_f,
        "per_class": {str(c): vars(m) for c, m in report.per_class.items()},
    }, indent=2) + "\n", encoding="utf-8")
    print(f"eval[{split['topic']}]: weighted F = {report.weighted_f:.4f} "
          f"on {len(test_keys)} test sentences")
    return EXIT_OK


def _parse_configs(options: dict) -> list[ablation.AblationConfig]:
    configs = []
    coref_mode = options.get("coref") or "both"
    for item in str(options["configs"]).split(","):
        code = item.strip().lower()
        if not code:
            continue
        if code in BASELINE_CODES:
            method = BASELINE_CODES[code]
            configs.append(ablation.AblationConfig(
                label=ablation.BASELINE_LABELS[method], classifier="baseline", method=method))
        else:
            configs.append(ablation.AblationConfig(
                label=code.upper(), classifier="svm",
                features=_feature_config({**options, "features": code}, coref=False),
                coref=coref_mode))
    return configs


def cmd_ablate(options: dict) -> int:
    corpora = _load_corpora(options)
    gold = _load_gold(options)
    out = _out_dir(options)
    configs = _parse_configs(options)
    grid = (tuple(float(x) for x in str(options["lambda_grid"]).split(","))
            if options.get("lambda_grid") else model_mod.DEFAULT_LAMBDA_GRID)
    table = ablation.run_ablation(
        corpora, gold, configs, seed=options["seed"],
        test_dialog_count=options["test_dialogs"], jobs=options["jobs"],
        lambda_grid=grid, epochs=options["epochs"])
    text = ablation.format_table(table)
    (out / "ablation.txt").write_text(text, encoding="utf-8")
    (out / "ablation.jsonl").write_text(
        ablation.write_records(ablation.table_records(table)), encoding="utf-8")
    print(text, end="")
    return EXIT_OK


def cmd_analyze(options: dict) -> int:
    corpora = _load_corpora(options)
    gold = _load_gold(options)
    out = _out_dir(options)
    rankings = ablation.liwc_chi_square(
        corpora, gold, seed=options["seed"], test_dialog_count=options["test_dialogs"],
        jobs=options["jobs"])
    records = []
    for topic, ranking in rankings.items():
        for rank, (name, stat) in enumerate(ranking, 1):
            records.append({"topic": topic, "rank": rank, "category": name, "chi_square": stat})
        top = ", ".join(name for name, _ in ranking[:5])
        print(f"analyze[{topic}]: top categories: {top}")
    _write_jsonl(out / "chi_square.jsonl", records)
    return EXIT_OK


_COMMANDS = {
    "ingest": cmd_ingest, "gold": cmd_gold, "baseline": cmd_baseline,
    "featurize": cmd_featurize, "train": cmd_train, "eval": cmd_eval,
    "ablate": cmd_ablate, "analyze": cmd_analyze,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        options = _resolve_options(args)
        return _COMMANDS[args.command](options)
    except ConfigError as exc:
        print(f"argsum: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValidationError as exc:
        print(f"argsum: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ParseError as exc:
        print(f"argsum: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"argsum: missing file: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # pragma: no cover - last resort diagnostics
        print(f"argsum: unexpected error: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
