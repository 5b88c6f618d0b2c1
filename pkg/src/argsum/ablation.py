"""Experiment grid: baselines and feature-ablated classifiers per topic,
with and without coreference substitution, reported as weighted F.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import baselines as baselines_mod
from .corpus import Corpus
from .errors import ConfigError, ValidationError
from .features import FeatureConfig, FeatureExtractor, load_feature_resources
from .metrics import (EvalReport, SplitResult, balanced_split, paired_t_test,
                      per_dialog_weighted_f, prf)
from .model import DEFAULT_EPOCHS, DEFAULT_LAMBDA_GRID, cross_validate, predict_labels, train_svm
from .pyramid import GoldLabel, SentenceKey

DEFAULT_SEED = 7412
DEFAULT_TEST_DIALOGS = 13

BASELINE_LABELS = {"klsum": "1A KL-SUM", "sumbasic": "1B SumBasic", "lexrank": "1C Lex-Rank"}


@dataclass
class AblationConfig:
    label: str
    classifier: str                      # "svm" or "baseline"
    features: FeatureConfig | None = None
    method: str | None = None            # baseline method name
    coref: str = "both"                  # "on", "off", or "both"

    def __post_init__(self):
        if self.classifier not in ("svm", "baseline"):
            raise ConfigError(f"config {self.label!r}: classifier must be svm or baseline")
        if self.classifier == "svm" and self.features is None:
            raise ConfigError(f"config {self.label!r}: svm rows need a feature config")
        if self.classifier == "baseline" and self.method not in baselines_mod.METHODS:
            raise ConfigError(f"config {self.label!r}: unknown baseline {self.method!r}")
        if self.coref not in ("on", "off", "both"):
            raise ConfigError(f"config {self.label!r}: coref must be on/off/both")


@dataclass
class AblationRow:
    config: AblationConfig
    cells: dict[tuple[str, bool], EvalReport] = field(default_factory=dict)
    p_coref: dict[str, float] = field(default_factory=dict)
    best_lambda: dict[tuple[str, bool], float] = field(default_factory=dict)


@dataclass
class AblationTable:
    topics: list[str]
    rows: list[AblationRow]
    seed: int
    test_dialog_count: int


def pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Order-preserving map over a worker pool; jobs <= 1 stays sequential."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _labels_for(keys: Iterable[SentenceKey], gold: dict[SentenceKey, GoldLabel]) -> list[int]:
    return [1 if (g := gold.get(k)) is not None and g.important else 0 for k in keys]


@dataclass
class _TopicData:
    corpus: Corpus
    keys: list[SentenceKey]
    labels: np.ndarray
    dialog_ids: list[str]
    split: SplitResult


def _prepare_topic(corpus: Corpus, gold: dict[SentenceKey, GoldLabel],
                   seed: int, test_dialog_count: int) -> _TopicData:
    kept = corpus.kept_sentences()
    if not kept:
        raise ValidationError(f"topic {corpus.topic!r} has no kept sentences")
    keys = [s.key for s in kept]
    labels = np.asarray(_labels_for(keys, gold), dtype=int)
    dialog_ids = [s.dialog_id for s in kept]
    split = balanced_split(labels, dialog_ids, test_dialog_count=test_dialog_count, seed=seed)
    return _TopicData(corpus=corpus, keys=keys, labels=labels,
                      dialog_ids=dialog_ids, split=split)


def _svm_cell(data: _TopicData, cfg: FeatureConfig, seed: int, jobs: int,
              lambda_grid: Sequence[float], epochs: int,
              config_label: str) -> tuple[EvalReport, list[float], float]:
    """Train/evaluate one grid cell; returns the report, the per-test-dialog
    weighted-F vector, and the cross-validated lambda."""
    res = load_feature_resources(cfg)
    extractor = FeatureExtractor(cfg, res)
    vector_lists = pmap(extractor.extract_dialog, data.corpus.dialogs, jobs)
    by_key = {v.key: v.values for vectors in vector_lists for v in vectors}
    X = np.vstack([by_key[k] for k in data.keys])

    train_idx = np.asarray(data.split.train_indices)
    test_idx = np.asarray(data.split.test_indices)
    y_train = data.labels[train_idx]
    y_test = data.labels[test_idx]
    cv = cross_validate(X[train_idx], y_train, lambda_grid, seed=seed, epochs=epochs)
    model = train_svm(X[train_idx], y_train, lam=cv.best_lambda, epochs=epochs,
                      seed=seed, feature_names=extractor.names)
    y_pred = predict_labels(model, X[test_idx])
    report = prf(y_test, y_pred, config=config_label)
    test_dialogs = [data.dialog_ids[i] for i in data.split.test_indices]
    _, f_vector = per_dialog_weighted_f(y_test, y_pred, test_dialogs)
    return report, f_vector, cv.best_lambda


def _baseline_cell(data: _TopicData, method: str, gold: dict[SentenceKey, GoldLabel],
                   config_label: str) -> EvalReport:
    """Top-n baseline labels over the balanced test sentences, where n is the
    dialog's gold important count."""
    predictions: dict[SentenceKey, int] = {}
    test_dialog_set = set(data.split.test_dialogs)
    for dialog in data.corpus.dialogs:
        if dialog.dialog_id not in test_dialog_set:
            continue
        kept = dialog.kept_sentences()
        n = sum(_labels_for((s.key for s in kept), gold))
        selection = baselines_mod.run_method(method, dialog.sentences(), n)
        for sentence, label in zip(kept, baselines_mod.baseline_as_labels(selection, kept)):
            predictions[sentence.key] = label
    test_keys = [data.keys[i] for i in data.split.test_indices]
    y_true = data.labels[np.asarray(data.split.test_indices)]
    y_pred = [predictions[k] for k in test_keys]
    return prf(y_true, y_pred, config=config_label)


def run_ablation(corpora: Sequence[Corpus], gold: dict[SentenceKey, GoldLabel],
                 configs: Sequence[AblationConfig], *, seed: int = DEFAULT_SEED,
                 test_dialog_count: int = DEFAULT_TEST_DIALOGS, jobs: int = 1,
                 lambda_grid: Sequence[float] = DEFAULT_LAMBDA_GRID,
                 epochs: int = DEFAULT_EPOCHS) -> AblationTable:
    """One row per config, per-topic columns with and without coreference.

    All rows of a topic share the same seeded dialog holdout and balancing,
    so columns are comparable; when a row runs both coref variants the
    per-dialog F vectors feed a paired t-test (p_coref).
    """
    if not configs:
        raise ConfigError("no ablation configs given")
    topics = [c.topic for c in corpora]
    data_by_topic = {c.topic: _prepare_topic(c, gold, seed, test_dialog_count) for c in corpora}

    rows = []
    for config in configs:
        row = AblationRow(config=config)
        for topic in topics:
            data = data_by_topic[topic]
            if config.classifier == "baseline":
                row.cells[(topic, False)] = _baseline_cell(data, config.method, gold, config.label)
                continue
            variants = {"on": (True,), "off": (False,), "both": (False, True)}[config.coref]
            f_vectors: dict[bool, list[float]] = {}
            for use_coref in variants:
                cfg = FeatureConfig(
                    families=config.features.families, use_coref=use_coref,
                    lexicon_path=config.features.lexicon_path,
                    polarity_path=config.features.polarity_path,
                    embeddings_path=config.features.embeddings_path)
                report, f_vector, best_lambda = _svm_cell(
                    data, cfg, seed, jobs, lambda_grid, epochs, config.label)
                row.cells[(topic, use_coref)] = report
                row.best_lambda[(topic, use_coref)] = best_lambda
                f_vectors[use_coref] = f_vector
            if len(variants) == 2:
                result = paired_t_test(f_vectors[True], f_vectors[False])
                row.p_coref[topic] = result.p_value
        rows.append(row)
    return AblationTable(topics=topics, rows=rows, seed=seed,
                         test_dialog_count=test_dialog_count)


def liwc_chi_square(corpora: Sequence[Corpus], gold: dict[SentenceKey, GoldLabel], *,
                    seed: int = DEFAULT_SEED, test_dialog_count: int = DEFAULT_TEST_DIALOGS,
                    use_coref: bool = False, lexicon_path: str | None = None,
                    jobs: int = 1) -> dict[str, list[tuple[str, float]]]:
    """Chi-square ranking of the category features on each topic's balanced
    training partition (the grid's split), most associated first."""
    from .metrics import chi_square_rank

    cfg = FeatureConfig(families=("liwc_current",), use_coref=use_coref,
                        lexicon_path=lexicon_path)
    res = load_feature_resources(cfg)
    extractor = FeatureExtractor(cfg, res)
    rankings: dict[str, list[tuple[str, float]]] = {}
    for corpus in corpora:
        data = _prepare_topic(corpus, gold, seed, test_dialog_count)
        vector_lists = pmap(extractor.extract_dialog, corpus.dialogs, jobs)
        by_key = {v.key: v.values for vectors in vector_lists for v in vectors}
        X = np.vstack([by_key[k] for k in data.keys])
        train_idx = np.asarray(data.split.train_indices)
        names = [n.split(".", 1)[1] for n in extractor.names]
        rankings[corpus.topic] = chi_square_rank(X[train_idx], names, data.labels[train_idx])
    return rankings


# --------------------------------------------------------------------------
# rendering

def format_table(table: AblationTable) -> str:
    """Aligned plain-text grid: one row per config, per-topic weighted F with
    and without coreference substitution."""
    header_cols = ["config"]
    for topic in table.topics:
        header_cols += [f"{topic}:F", f"{topic}:F-coref", f"{topic}:p"]
    rows_text = []
    for row in table.rows:
        cols = [row.config.label]
        for topic in table.topics:
            plain = row.cells.get((topic, False))
            coref = row.cells.get((topic, True))
            p = row.p_coref.get(topic)
            cols += [f"{plain.weighted_f:.3f}" if plain else "-",
                     f"{coref.weighted_f:.3f}" if coref else "-",
                     f"{p:.3f}" if p is not None else "-"]
        rows_text.append(cols)
    widths = [max(len(r[i]) for r in [header_cols] + rows_text) for i in range(len(header_cols))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
             for r in [header_cols] + rows_text]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def table_records(table: AblationTable) -> list[dict]:
    records = []
    for row in table.rows:
        for (topic, use_coref), report in sorted(row.cells.items()):
            records.append({
                "config": row.config.label,
                "classifier": row.config.classifier,
                "topic": topic,
                "coref": use_coref,
                "weighted_f": report.weighted_f,
                "per_class": {
                    str(cls): {"precision": m.precision, "recall": m.recall,
                               "f1": m.f1, "support": m.support}
                    for cls, m in report.per_class.items()},
                "p_coref": row.p_coref.get(topic),
                "lambda": row.best_lambda.get((topic, use_coref)),
                "seed": table.seed,
            })
    return records


def write_records(records: list[dict]) -> str:
    return "\n".join(json.dumps(r) for r in records) + "\n" if records else ""
