"""Evaluation metrics, significance testing, feature ranking, and the
balanced train/test construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ValidationError


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass
class EvalReport:
    per_class: dict[int, ClassMetrics]
    weighted_f: float
    config: str = ""


def prf(y_true: Sequence[int], y_pred: Sequence[int], config: str = "") -> EvalReport:
    """Per-class precision/recall/F1 (0/0 counts as 0) and support-weighted F."""
    y_true = np.asarray(y_true, dtype=int)
    y_pred = np.asarray(y_pred, dtype=int)
    if y_true.shape != y_pred.shape or y_true.size == 0:
        raise ValidationError(f"prediction vectors misaligned: {y_true.shape} vs {y_pred.shape}")
    seen = set(np.unique(y_true)) | set(np.unique(y_pred))
    if not seen <= {0, 1}:
        raise ValidationError(f"labels must be binary 0/1, got {sorted(seen)}")
    per_class: dict[int, ClassMetrics] = {}
    weighted = 0.0
    total = y_true.size
    for cls in (0, 1):
        tp = int(np.sum((y_true == cls) & (y_pred == cls)))
        fp = int(np.sum((y_true != cls) & (y_pred == cls)))
        fn = int(np.sum((y_true == cls) & (y_pred != cls)))
        support = tp + fn
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_class[cls] = ClassMetrics(precision, recall, f1, support)
        weighted += f1 * support
    return EvalReport(per_class=per_class, weighted_f=weighted / total, config=config)


# --------------------------------------------------------------------------
# paired t-test

@dataclass(frozen=True)
class SignificanceResult:
    t_statistic: float
    degrees_of_freedom: int
    p_value: float
    mean_difference: float


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz iteration)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 300):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-14:
            return h
    raise ValidationError(f"incomplete beta failed to converge for a={a}, b={b}, x={x}")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) via the continued fraction, using the symmetry that keeps it
    in its fast-converging region."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_two_sided_p(t: float, df: int) -> float:
    """P(|T| >= t) for Student's t with df degrees of freedom."""
    if df < 1:
        raise ValidationError(f"degrees of freedom must be >= 1, got {df}")
    if math.isinf(t):
        return 0.0
    return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t))


def paired_t_test(a: Sequence[float], b: Sequence[float]) -> SignificanceResult:
    """Two-sided paired t-test on difference vectors (paired by dialog).

    Zero-variance differences degenerate cleanly: all-zero means p = 1, a
    constant nonzero shift means p = 0.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValidationError(f"paired vectors misaligned: {a.shape} vs {b.shape}")
    n = a.size
    if n < 2:
        raise ValidationError(f"need at least 2 pairs, got {n}")
    d = a - b
    mean = float(d.mean())
    sd = float(d.std(ddof=1))
    df = n - 1
    if sd == 0.0:
        if mean == 0.0:
            return SignificanceResult(0.0, df, 1.0, 0.0)
        t = math.copysign(math.inf, mean)
        return SignificanceResult(t, df, 0.0, mean)
    t = mean / (sd / math.sqrt(n))
    return SignificanceResult(t, df, student_t_two_sided_p(abs(t), df), mean)


# --------------------------------------------------------------------------
# chi-square feature ranking

ChiSquareRanking = list[tuple[str, float]]


def chi_square_rank(X: np.ndarray, feature_names: Sequence[str],
                    labels: Sequence[int]) -> ChiSquareRanking:
    """Rank features by chi-square association with the class after a median
    split (> median vs <= median). Constant features score 0; ranking is by
    descending statistic, ties alphabetical.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(labels, dtype=int)
    if X.ndim != 2 or X.shape[0] < 2:
        raise ValidationError("chi-square ranking needs a matrix with at least 2 rows")
    if X.shape[0] != y.size or X.shape[1] != len(feature_names):
        raise ValidationError("matrix, names, and labels misaligned")
    n = float(X.shape[0])
    ranking = []
    for j, name in enumerate(feature_names):
        col = X[:, j]
        hi = col > np.median(col)
        a = float(np.sum(hi & (y == 1)))
        b = float(np.sum(hi & (y == 0)))
        c = float(np.sum(~hi & (y == 1)))
        d = float(np.sum(~hi & (y == 0)))
        denom = (a + b) * (c + d) * (a + c) * (b + d)
        stat = n * (a * d - b * c) ** 2 / denom if denom else 0.0
        ranking.append((name, stat))
    ranking.sort(key=lambda item: (-item[1], item[0]))
    return ranking


# --------------------------------------------------------------------------
# balanced split construction

@dataclass
class SplitResult:
    train_indices: list[int]
    test_indices: list[int]
    test_dialogs: list[str]
    raw_train_counts: dict[int, int] = field(default_factory=dict)
    raw_test_counts: dict[int, int] = field(default_factory=dict)


def balanced_split(labels: Sequence[int], dialog_ids: Sequence[str],
                   test_dialog_count: int = 13, seed: int = 0) -> SplitResult:
    """Hold out whole dialogs for test, then balance each partition.

    Test dialogs are a seeded uniform choice; afterwards the majority class
    inside each partition is downsampled (seeded, order-preserving) to the
    minority count, so both partitions come out exactly class-balanced.
    """
    labels = np.asarray(labels, dtype=int)
    dialog_ids = list(dialog_ids)
    if labels.size != len(dialog_ids):
        raise ValidationError("labels and dialog_ids misaligned")
    unique_dialogs = list(dict.fromkeys(dialog_ids))
    if test_dialog_count < 1 or test_dialog_count >= len(unique_dialogs):
        raise ValidationError(
            f"cannot hold out {test_dialog_count} of {len(unique_dialogs)} dialogs")
    rng = np.random.default_rng(seed)
    test_dialogs = sorted(rng.choice(np.array(unique_dialogs, dtype=object),
                                     size=test_dialog_count, replace=False).tolist())
    test_set = set(test_dialogs)
    test_raw = [i for i, d in enumerate(dialog_ids) if d in test_set]
    train_raw = [i for i, d in enumerate(dialog_ids) if d not in test_set]

    def counts(indices: list[int]) -> dict[int, int]:
        return {cls: int(np.sum(labels[indices] == cls)) for cls in (0, 1)}

    raw_train_counts = counts(train_raw)
    raw_test_counts = counts(test_raw)

    def balance(indices: list[int], partition: str) -> list[int]:
        by_class = {cls: [i for i in indices if labels[i] == cls] for cls in (0, 1)}
        if not by_class[0] or not by_class[1]:
            raise ValidationError(f"{partition} partition is missing a class before balancing")
        target = min(len(by_class[0]), len(by_class[1]))
        kept: list[int] = []
        for cls in (0, 1):
            members = by_class[cls]
            if len(members) > target:
                chosen = rng.choice(len(members), size=target, replace=False)
                members = [members[i] for i in sorted(chosen)]
            kept.extend(members)
        return sorted(kept)

    return SplitResult(
        train_indices=balance(train_raw, "train"),
        test_indices=balance(test_raw, "test"),
        test_dialogs=test_dialogs,
        raw_train_counts=raw_train_counts,
        raw_test_counts=raw_test_counts,
    )


def per_dialog_weighted_f(y_true: Sequence[int], y_pred: Sequence[int],
                          dialog_ids: Sequence[str]) -> tuple[list[str], list[float]]:
    """Weighted F per dialog, the 'result vector' used for paired testing."""
    y_true = np.asarray(y_true, dtype=int)
    y_pred = np.asarray(y_pred, dtype=int)
    dialogs = list(dict.fromkeys(dialog_ids))
    ids = np.asarray(dialog_ids, dtype=object)
    values = []
    for d in dialogs:
        mask = ids == d
        values.append(prf(y_true[mask], y_pred[mask]).weighted_f)
    return dialogs, values
