"""Extractive summarization baselines over a single dialog.

Each selector works on the dialog's kept sentences and returns the top n,
where n is normally the number of gold-important sentences in the dialog.
All three are deterministic; ties break toward the lowest global index.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import resources
from .corpus import Sentence
from .errors import ValidationError

KLSUM_ALPHA = 0.001
LEXRANK_SIM_THRESHOLD = 0.1
LEXRANK_DAMPING = 0.15
LEXRANK_TOL = 1e-6
LEXRANK_MAX_ITER = 100

_default_stopwords: set[str] | None = None


def _stopwords(stopwords: set[str] | None) -> set[str]:
    global _default_stopwords
    if stopwords is not None:
        return stopwords
    if _default_stopwords is None:
        _default_stopwords = resources.load_stopwords()
    return _default_stopwords


@dataclass
class SummarySelection:
    method: str
    selected: list[int]            # global indices in pick order
    scores: dict[int, float]
    budget_n: int
    converged: bool = field(default=True)


def _content_tokens(sentence: Sentence, stopwords: set[str]) -> list[str]:
    return [t for t in sentence.tokens if t not in stopwords]


def sumbasic(sentences: list[Sentence], n: int, stopwords: set[str] | None = None) -> SummarySelection:
    """Frequency-driven greedy selection.

    Word probabilities p(w) come from the stopword-free unigram counts of the
    dialog. Each round picks the highest-probability word, then the heaviest
    sentence containing it (sentence weight = mean p over its words), and
    squares p(w) for every word of the chosen sentence to discourage
    redundancy.
    """
    stopwords = _stopwords(stopwords)
    pool = [s for s in sentences if s.kept]
    budget = max(0, int(n))
    content = {s.global_index: _content_tokens(s, stopwords) for s in pool}
    counts = Counter(t for tokens in content.values() for t in tokens)
    total = sum(counts.values())
    prob = {w: c / total for w, c in counts.items()} if total else {}

    remaining = sorted(pool, key=lambda s: s.global_index)
    selected: list[int] = []
    scores: dict[int, float] = {}

    def weight(sentence: Sentence) -> float:
        tokens = content[sentence.global_index]
        if not tokens:
            return 0.0
        return sum(prob[t] for t in tokens) / len(tokens)

    while remaining and len(selected) < budget:
        available = {t for s in remaining for t in content[s.global_index]}
        if available:
            # word tie-break: highest probability, then alphabetical
            top_word = sorted(available, key=lambda w: (-prob[w], w))[0]
            candidates = [s for s in remaining if top_word in content[s.global_index]]
            pick = sorted(candidates, key=lambda s: (-weight(s), s.global_index))[0]
            for w in set(content[pick.global_index]):
                prob[w] = prob[w] ** 2
        else:
            pick = remaining[0]  # degenerate dialog: nothing but stopwords
        scores[pick.global_index] = weight(pick)
        selected.append(pick.global_index)
        remaining.remove(pick)

    for s in remaining:
        scores[s.global_index] = weight(s)
    return SummarySelection(method="sumbasic", selected=selected, scores=scores, budget_n=budget)


def _kl_divergence(doc_prob: dict[str, float], summary_counts: Counter, summary_total: int,
                   vocab_size: int, alpha: float) -> float:
    """KL(P_doc || P_summary) with Laplace-smoothed summary distribution."""
    denom = summary_total + alpha * vocab_size
    kl = 0.0
    for w, p in doc_prob.items():
        q = (summary_counts[w] + alpha) / denom
        kl += p * math.log(p / q)
    return kl


def klsum(sentences: list[Sentence], n: int, stopwords: set[str] | None = None,
          alpha: float = KLSUM_ALPHA) -> SummarySelection:
    """Greedy selection minimizing KL(document || summary) at each step.

    Distributions are unigram over the stopword-free document vocabulary;
    the summary side is Laplace-smoothed with the given alpha. Stored scores
    are the divergence right after the sentence joined the summary (lower is
    better).
    """
    stopwords = _stopwords(stopwords)
    pool = sorted((s for s in sentences if s.kept), key=lambda s: s.global_index)
    budget = max(0, int(n))
    content = {s.global_index: _content_tokens(s, stopwords) for s in pool}
    doc_counts = Counter(t for tokens in content.values() for t in tokens)
    total = sum(doc_counts.values())
    doc_prob = {w: c / total for w, c in doc_counts.items()} if total else {}
    vocab_size = len(doc_prob)

    summary_counts: Counter = Counter()
    summary_total = 0
    remaining = list(pool)
    selected: list[int] = []
    scores: dict[int, float] = {}

    while remaining and len(selected) < budget:
        best = None
        best_kl = math.inf
        for s in remaining:
            if vocab_size == 0:
                kl = 0.0
            else:
                trial = summary_counts.copy()
                trial.update(content[s.global_index])
                kl = _kl_divergence(doc_prob, trial, summary_total + len(content[s.global_index]),
                                    vocab_size, alpha)
            if kl < best_kl:
                best, best_kl = s, kl
        summary_counts.update(content[best.global_index])
        summary_total += len(content[best.global_index])
        selected.append(best.global_index)
        scores[best.global_index] = best_kl
        remaining.remove(best)

    for s in remaining:
        if vocab_size == 0:
            scores[s.global_index] = 0.0
        else:
            trial = summary_counts.copy()
            trial.update(content[s.global_index])
            scores[s.global_index] = _kl_divergence(
                doc_prob, trial, summary_total + len(content[s.global_index]), vocab_size, alpha)
    return SummarySelection(method="klsum", selected=selected, scores=scores, budget_n=budget)


def _tfidf_matrix(token_lists: list[list[str]]) -> np.ndarray:
    vocab = sorted({t for tokens in token_lists for t in tokens})
    index = {w: i for i, w in enumerate(vocab)}
    n = len(token_lists)
    tf = np.zeros((n, len(vocab)))
    for i, tokens in enumerate(token_lists):
        for t in tokens:
            tf[i, index[t]] += 1.0
    df = (tf > 0).sum(axis=0)
    idf = np.log(n / (1.0 + df)) + 1.0 if len(vocab) else np.zeros(0)
    return tf * idf


def lexrank_scores(sentences: list[Sentence], stopwords: set[str] | None = None,
                   sim_threshold: float = LEXRANK_SIM_THRESHOLD, damping: float = LEXRANK_DAMPING,
                   tol: float = LEXRANK_TOL, max_iter: int = LEXRANK_MAX_ITER,
                   ) -> tuple[np.ndarray, bool]:
    """Stationary distribution of the thresholded cosine-similarity graph.

    tf-idf uses raw in-sentence counts and idf = ln(N / (1 + df)) + 1 computed
    within the dialog. Similarities below the threshold (and self-links) are
    dropped, rows are normalized to a stochastic matrix (isolated rows become
    uniform), and power iteration runs on
    M' = damping * U + (1 - damping) * M until the max-norm change is below
    tol. Returns (scores, converged).
    """
    stopwords = _stopwords(stopwords)
    pool = sorted((s for s in sentences if s.kept), key=lambda s: s.global_index)
    n = len(pool)
    if n == 0:
        return np.zeros(0), True
    vectors = _tfidf_matrix([_content_tokens(s, stopwords) for s in pool])
    norms = np.linalg.norm(vectors, axis=1)
    safe = np.where(norms == 0, 1.0, norms)
    unit = vectors / safe[:, None]
    sim = unit @ unit.T
    np.fill_diagonal(sim, 0.0)
    sim[sim < sim_threshold] = 0.0

    row_sums = sim.sum(axis=1)
    stochastic = np.full((n, n), 1.0 / n)
    nonzero = row_sums > 0
    stochastic[nonzero] = sim[nonzero] / row_sums[nonzero, None]

    transition = damping / n + (1.0 - damping) * stochastic
    p = np.full(n, 1.0 / n)
    converged = False
    for _ in range(max_iter):
        p_next = p @ transition
        if np.max(np.abs(p_next - p)) < tol:
            p = p_next
            converged = True
            break
        p = p_next
    return p, converged


def lexrank(sentences: list[Sentence], n: int, stopwords: set[str] | None = None,
            sim_threshold: float = LEXRANK_SIM_THRESHOLD, damping: float = LEXRANK_DAMPING,
            tol: float = LEXRANK_TOL, max_iter: int = LEXRANK_MAX_ITER) -> SummarySelection:
    """Eigenvector-centrality selection over the sentence similarity graph."""
    pool = sorted((s for s in sentences if s.kept), key=lambda s: s.global_index)
    budget = max(0, int(n))
    scores_vec, converged = lexrank_scores(pool, stopwords, sim_threshold, damping, tol, max_iter)
    scores = {s.global_index: float(scores_vec[i]) for i, s in enumerate(pool)}
    ranked = sorted(pool, key=lambda s: (-scores[s.global_index], s.global_index))
    selected = [s.global_index for s in ranked[: min(budget, len(pool))]]
    return SummarySelection(method="lexrank", selected=selected, scores=scores,
                            budget_n=budget, converged=converged)


def baseline_as_labels(selection: SummarySelection, all_kept: list[Sentence]) -> list[int]:
    """Binary labels aligned with the kept-sentence order: 1 iff selected."""
    kept_indices = {s.global_index for s in all_kept if s.kept}
    unknown = [i for i in selection.selected if i not in kept_indices]
    if unknown:
        raise ValidationError(f"selection references unknown sentence indices {unknown}")
    chosen = set(selection.selected)
    return [1 if s.global_index in chosen else 0 for s in all_kept if s.kept]


METHODS = {"sumbasic": sumbasic, "klsum": klsum, "lexrank": lexrank}


def run_method(method: str, sentences: list[Sentence], n: int, **kwargs) -> SummarySelection:
    if method not in METHODS:
        raise ValidationError(f"unknown baseline method {method!r}; expected one of {sorted(METHODS)}")
    return METHODS[method](sentences, n, **kwargs)
