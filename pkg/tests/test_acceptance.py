"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete. Everything here runs against the bundled data and fixed seeds.
"""
import json
import math
import time
from collections import Counter
from contextlib import contextmanager

import numpy as np
import pytest

from argsum import baselines, metrics, model as model_mod, pyramid
from argsum.cli import main
from argsum.corpus import Sentence, parse_corpora, prepare_corpus, tokenize
from argsum.features import FeatureConfig, FeatureExtractor, load_feature_resources
from argsum.resources import minicorpus_paths


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        print(f"criterion {number} ({name}): FAIL")
        raise
    print(f"criterion {number} ({name}): PASS")


def sent(text, gi):
    return Sentence(text=text, tokens=tokenize(text), dialog_id="d", turn_index=0,
                    index_in_turn=gi, global_index=gi)


def dialog(*texts):
    return [sent(t, i) for i, t in enumerate(texts)]


FIXTURE_DIALOGS = [
    dialog("guns kill", "guns save", "cats purr"),
    dialog("guns kill people and guns scare people", "cats purr",
           "people fear guns", "dogs bark loudly at cats"),
    dialog("taxes fund schools", "guns cost money", "schools teach people",
           "money buys guns", "people pay taxes"),
    dialog(*(["guns kill people"] * 4)),
    dialog("one lone sentence stands here"),
    dialog("laws protect people", "people break laws", "judges punish crime",
           "crime hurts people", "police enforce laws", "voters change laws"),
]


def oracle_kl(doc_tokens, summary_tokens, alpha=baselines.KLSUM_ALPHA):
    doc = Counter(doc_tokens)
    total = sum(doc.values())
    summary = Counter(summary_tokens)
    s_total = sum(summary.values())
    kl = 0.0
    for w, c in doc.items():
        p = c / total
        q = (summary[w] + alpha) / (s_total + alpha * len(doc))
        kl += p * math.log(p / q)
    return kl


def oracle_stationary(sentences, sim_threshold=0.1, damping=0.15):
    tokens = [s.tokens for s in sentences]
    vocab = sorted({t for toks in tokens for t in toks})
    n = len(sentences)
    tf = np.zeros((n, len(vocab)))
    for i, toks in enumerate(tokens):
        for t in toks:
            tf[i, vocab.index(t)] += 1
    df = (tf > 0).sum(axis=0)
    vectors = tf * (np.log(n / (1 + df)) + 1)
    norms = np.linalg.norm(vectors, axis=1)
    norms[norms == 0] = 1
    unit = vectors / norms[:, None]
    sim = unit @ unit.T
    np.fill_diagonal(sim, 0)
    sim[sim < sim_threshold] = 0
    rows = sim.sum(axis=1)
    M = np.full((n, n), 1.0 / n)
    M[rows > 0] = sim[rows > 0] / rows[rows > 0, None]
    T = damping / n + (1 - damping) * M
    values, eigvecs = np.linalg.eig(T.T)
    pi = np.real(eigvecs[:, np.argmin(np.abs(values - 1.0))])
    return pi / pi.sum()


def test_criterion_1_baseline_oracles():
    with criterion(1, "baseline oracles on small dialogs"):
        started = time.perf_counter()
        for sentences in FIXTURE_DIALOGS:
            assert len([s for s in sentences if s.kept]) <= 6
            doc = [t for s in sentences for t in s.tokens]
            # klsum greedy first pick equals the brute-force single-sentence
            # optimum of the stated objective (independent KL implementation)
            best = min(range(len(sentences)),
                       key=lambda i: (oracle_kl(doc, sentences[i].tokens), i))
            got = baselines.klsum(sentences, 1, stopwords=set()).selected
            assert got == [best], f"klsum {got} vs brute force {[best]}"
            # lexrank matches a dense stationary-distribution solve
            scores, converged = baselines.lexrank_scores(sentences, stopwords=set())
            assert converged
            expected = oracle_stationary(sentences)
            assert np.max(np.abs(scores - expected)) < 1e-6
        # sumbasic step-by-step hand trace on the 3-sentence fixture:
        # p(guns)=2/6 picks sentence 0 first; squaring leaves save/cats/purr
        # tied at 1/6, the alphabetical word "cats" selects sentence 2
        toy = FIXTURE_DIALOGS[0]
        assert baselines.sumbasic(toy, 1, stopwords=set()).selected == [0]
        assert baselines.sumbasic(toy, 2, stopwords=set()).selected == [0, 2]
        elapsed = time.perf_counter() - started
        assert elapsed < 5.0, f"baseline oracles took {elapsed:.1f}s"


# hand-traced per documented rules: (letters, syllables, complex words, long words)
READABILITY_FIXTURE = {
    "The cat sat.": (9, 3, 0, 0),
    "Guns are dangerous weapons": (23, 7, 1, 2),
    "I like simple tests.": (16, 5, 0, 0),
    "People argue about guns online.": (26, 8, 0, 0),
    "Nobody can prove that gun owners are safer.": (35, 12, 1, 0),
    "Education requires attention.": (26, 10, 3, 3),
    "We should talk more.": (16, 4, 0, 0),
    "A reasonable compromise seems possible.": (34, 12, 3, 3),
    "Do you really believe that?": (22, 7, 0, 1),
    "Statistics rarely settle heated debates.": (35, 13, 3, 2),
}


def expected_readability(words, letters, syllables, complex_words, long_words):
    return [
        0.39 * words + 11.8 * syllables / words - 15.59,
        4.71 * letters / words + 0.5 * words - 21.43,
        0.0588 * (100 * letters / words) - 0.296 * (100 / words) - 15.8,
        1.0430 * math.sqrt(complex_words * 30) + 3.1291,
        0.4 * (words + 100 * complex_words / words),
        206.835 - 1.015 * words - 84.6 * syllables / words,
        words + 100 * long_words / words,
        float(long_words),
    ]


def test_criterion_2_readability_formulas():
    from argsum.features import readability_vector
    with criterion(2, "readability formulas match hand computation"):
        assert len(READABILITY_FIXTURE) == 10
        for i, (text, (letters, syllables, cx, lg)) in enumerate(READABILITY_FIXTURE.items()):
            s = sent(text, i)
            expected = expected_readability(len(s.tokens), letters, syllables, cx, lg)
            got = readability_vector(s)
            assert np.max(np.abs(got - np.array(expected))) < 1e-9, text


def test_criterion_3_pyramid_tiers_and_threshold():
    with criterion(3, "pyramid tiers and inclusive threshold"):
        # contributor groups shaped like the tier-5/3/1 example rows
        groups = [
            ["sum1", "sum2", "sum3", "sum4", "sum5"],
            ["sum2", "sum3", "sum5"],
            ["sum4"],
        ]
        assert [pyramid.tier_of_scu(g) for g in groups] == [5, 3, 1]
        assert pyramid.gold_importance(3.0) is True   # "3 or higher" is inclusive
        assert pyramid.gold_importance(2.999) is False
        assert pyramid.gold_importance(4.0) is True


def test_criterion_4_kappa_values():
    with criterion(4, "kappa hand fixtures and pairwise averaging"):
        assert pyramid.cohen_kappa([1, 1, 0, 0], [1, 0, 1, 0]) == pytest.approx(0.0, abs=1e-12)
        assert pyramid.cohen_kappa([1, 1, 1, 0], [1, 1, 0, 0]) == pytest.approx(0.5, abs=1e-12)
        assert pyramid.cohen_kappa([1, 0, 1, 0], [1, 0, 1, 0]) == 1.0
        vectors = {"a": [1, 1, 0, 0], "b": [1, 0, 1, 0], "c": [1, 1, 1, 0]}
        from itertools import combinations
        enumerated = [pyramid.cohen_kappa(vectors[x], vectors[y])
                      for x, y in combinations(sorted(vectors), 2)]
        assert pyramid.average_pairwise_kappa(vectors) == pytest.approx(
            sum(enumerated) / len(enumerated), abs=1e-12)
        assert pyramid.average_pairwise_kappa(vectors) == pytest.approx(1 / 3)


def test_criterion_5_classifier_properties():
    with criterion(5, "classifier accuracy, determinism, scaler invariance"):
        rng = np.random.default_rng(0)
        X = np.vstack([np.full((10, 2), -1.0), np.full((10, 2), 1.0)])
        X += 0.1 * rng.standard_normal(X.shape)
        y = np.array([0] * 10 + [1] * 10)
        model = model_mod.train_svm(X, y, lam=0.01, epochs=50, seed=7)
        assert (model_mod.predict_labels(model, X) == y).mean() == 1.0

        again = model_mod.train_svm(X, y, lam=0.01, epochs=50, seed=7)
        assert np.array_equal(model.weights, again.weights) and model.bias == again.bias

        X2 = X.copy()
        X2[:, 0] = 250.0 * X2[:, 0] - 17.0
        rescaled = model_mod.train_svm(X2, y, lam=0.01, epochs=50, seed=7)
        assert np.array_equal(model_mod.predict_labels(model, X),
                              model_mod.predict_labels(rescaled, X2))


def test_criterion_6_statistics():
    with criterion(6, "t-test degenerate case, t-table, chi-square fixture"):
        assert metrics.paired_t_test([0.4, 0.6, 0.7], [0.4, 0.6, 0.7]).p_value == 1.0
        t_table_df3 = {1.638: 0.20, 2.353: 0.10, 3.182: 0.05, 4.541: 0.02, 5.841: 0.01}
        for t, p in t_table_df3.items():
            assert abs(metrics.student_t_two_sided_p(t, 3) - p) < 1e-3
        y = np.array([0, 1] * 12)
        X = np.column_stack([np.linspace(0, 1, 24), y.astype(float)])
        ranking = metrics.chi_square_rank(X, ["noise", "perfect"], y)
        assert ranking[0][0] == "perfect"
        assert ranking[0][1] == pytest.approx(len(y))


def _load_mini():
    paths = minicorpus_paths()
    corpora = parse_corpora(paths["corpus"].read_text(encoding="utf-8"))
    for c in corpora:
        prepare_corpus(c)
    scus = pyramid.load_pyramid(paths["pyramid"].read_text(encoding="utf-8"))
    annotations = pyramid.load_annotations(paths["annotations"].read_text(encoding="utf-8"), scus)
    gold = pyramid.gold_from_annotations(annotations, scus)
    return corpora, gold


def _train_eval_weighted_f(corpus, labels, seed=3):
    """Split, fit the LC configuration, and score the held-out dialogs."""
    kept = corpus.kept_sentences()
    split = metrics.balanced_split(labels, [s.dialog_id for s in kept],
                                   test_dialog_count=4, seed=seed)
    cfg = FeatureConfig(families=("liwc_current",))
    extractor = FeatureExtractor(cfg, load_feature_resources(cfg))
    by_key = {}
    for d in corpus.dialogs:
        for v in extractor.extract_dialog(d):
            by_key[v.key] = v.values
    X = np.vstack([by_key[s.key] for s in kept])
    train, test = np.asarray(split.train_indices), np.asarray(split.test_indices)
    labels = np.asarray(labels)
    cv = model_mod.cross_validate(X[train], labels[train], seed=seed, epochs=30)
    fitted = model_mod.train_svm(X[train], labels[train], lam=cv.best_lambda,
                                 epochs=30, seed=seed)
    predicted = model_mod.predict_labels(fitted, X[test])
    return metrics.prf(labels[test], predicted).weighted_f


def test_criterion_7_end_to_end_ablation(tmp_path):
    with criterion(7, "mini-corpus ablation grid"):
        paths = minicorpus_paths()
        args = ["ablate", "--corpus", str(paths["corpus"]),
                "--pyramid", str(paths["pyramid"]),
                "--annotations", str(paths["annotations"]),
                "--configs", "kl,sb,lr,lc,lcp,r,lcp+r",
                "--test-dialogs", "4", "--jobs", "1"]
        started = time.perf_counter()
        assert main(args + ["--out", str(tmp_path / "run1")]) == 0
        elapsed = time.perf_counter() - started
        assert elapsed < 120.0, f"single-threaded ablate took {elapsed:.0f}s"

        assert main(args + ["--out", str(tmp_path / "run2")]) == 0
        assert (tmp_path / "run1" / "ablation.jsonl").read_bytes() == \
            (tmp_path / "run2" / "ablation.jsonl").read_bytes()

        records = [json.loads(l) for l in
                   (tmp_path / "run1" / "ablation.jsonl").read_text().splitlines()]
        topics = {r["topic"] for r in records}
        assert topics == {"gun_control", "gay_marriage"}
        assert {r["config"] for r in records} == {
            "1A KL-SUM", "1B SumBasic", "1C Lex-Rank", "LC", "LCP", "R", "LCP+R"}
        svm_rows = [r for r in records if r["config"] == "LC"]
        assert {(r["topic"], r["coref"]) for r in svm_rows} == \
            {(t, c) for t in topics for c in (False, True)}
        assert all(0.0 <= r["weighted_f"] <= 1.0 for r in records)

        # planted category signal: LC beats a shuffled-label control by a wide margin
        corpora, gold = _load_mini()
        for corpus in corpora:
            kept = corpus.kept_sentences()
            labels = np.array([1 if (g := gold.get(s.key)) and g.important else 0
                               for s in kept])
            lc_f = next(r["weighted_f"] for r in records
                        if r["config"] == "LC" and r["topic"] == corpus.topic
                        and not r["coref"])
            assert lc_f >= 0.9, f"LC weighted F {lc_f} below 0.9 for {corpus.topic}"
            shuffled = labels.copy()
            np.random.default_rng(13).shuffle(shuffled)
            control_f = _train_eval_weighted_f(corpus, shuffled)
            assert lc_f > control_f, (lc_f, control_f)
            assert control_f < 0.75, f"shuffled-label control suspiciously high: {control_f}"


def test_criterion_8_balanced_partitions():
    with criterion(8, "balanced split counts and holdout-then-balance arithmetic"):
        corpora, gold = _load_mini()
        for corpus in corpora:
            kept = corpus.kept_sentences()
            labels = [1 if (g := gold.get(s.key)) and g.important else 0 for s in kept]
            dialog_ids = [s.dialog_id for s in kept]
            split = metrics.balanced_split(labels, dialog_ids, test_dialog_count=4, seed=5)
            for indices in (split.train_indices, split.test_indices):
                values = [labels[i] for i in indices]
                assert values.count(0) == values.count(1) > 0
            # holdout first, then balance: balanced size is twice the raw
            # minority count inside each partition
            assert len(split.test_indices) == 2 * min(split.raw_test_counts.values())
            assert len(split.train_indices) == 2 * min(split.raw_train_counts.values())
            held_out = {dialog_ids[i] for i in split.test_indices}
            assert held_out <= set(split.test_dialogs)
            assert not held_out & {dialog_ids[i] for i in split.train_indices}
