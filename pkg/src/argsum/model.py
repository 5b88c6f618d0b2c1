"""Linear max-margin classifier trained by stochastic subgradient descent.

Minimizes lambda/2 ||w||^2 + mean hinge loss with the step schedule
eta_t = 1 / (lambda * t) and an unregularized intercept. All randomness
comes from the explicit seed, so retraining with identical inputs is
bitwise reproducible. Inputs are z-scored with statistics from the
training data only.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, NamedTuple, Sequence

import numpy as np

from .errors import ParseError, ValidationError
from .features import FeatureVector

DEFAULT_LAMBDA_GRID = (1e-4, 1e-3, 1e-2, 1e-1, 1.0)
DEFAULT_EPOCHS = 50

MODEL_FORMAT = "argsum-model"
MODEL_VERSION = 1


@dataclass
class Scaler:
    means: np.ndarray
    stds: np.ndarray

    def transform(self, X: np.ndarray) -> np.ndarray:
        return (np.asarray(X, dtype=float) - self.means) / self.stds


def fit_scaler(X: np.ndarray) -> Scaler:
    """Per-column mean and population std; zero-variance columns get std 1."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] < 2:
        raise ValidationError("scaler needs a matrix with at least 2 rows")
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    stds = np.where(stds == 0.0, 1.0, stds)
    return Scaler(means=means, stds=stds)


@dataclass
class LinearModel:
    weights: np.ndarray
    bias: float
    lam: float
    epochs: int
    seed: int
    scaler: Scaler
    feature_names: tuple[str, ...]
    families: tuple[str, ...] = ()
    use_coref: bool = False

    def decision_values(self, X: np.ndarray) -> np.ndarray:
        return self.scaler.transform(X) @ self.weights + self.bias


class Prediction(NamedTuple):
    label: int
    margin: float


def _check_training_input(X: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if X.ndim != 2 or X.shape[0] != y.shape[0]:
        raise ValidationError(f"X {X.shape} does not align with y {y.shape}")
    if not np.all(np.isfinite(X)):
        raise ValidationError("training matrix contains non-finite values")
    classes = set(np.unique(y))
    if classes != {0, 1}:
        raise ValidationError(f"labels must contain both classes 0 and 1, got {sorted(classes)}")
    return X, y


def train_svm(X: np.ndarray, y: Sequence[int], lam: float = 1e-2,
              epochs: int = DEFAULT_EPOCHS, seed: int = 0,
              feature_names: Sequence[str] | None = None) -> LinearModel:
    """Fit the classifier on raw (unscaled) features.

    Examples are visited in a freshly seeded shuffle each epoch; every visit
    decays the weights by (1 - eta_t * lambda) and margin violations add
    eta_t * y_i * x_i (and eta_t * y_i to the intercept).
    """
    X, y = _check_training_input(X, np.asarray(y))
    if lam <= 0:
        raise ValidationError(f"lambda must be positive, got {lam}")
    scaler = fit_scaler(X)
    Xs = scaler.transform(X)
    signs = 2.0 * y - 1.0
    n, d = Xs.shape
    names = tuple(feature_names) if feature_names is not None else tuple(
        f"f{i}" for i in range(d))
    if len(names) != d:
        raise ValidationError(f"{len(names)} feature names for {d} columns")

    rng = np.random.default_rng(seed)
    w = np.zeros(d)
    b = 0.0
    t = 0
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            w *= 1.0 - eta * lam
            if signs[i] * (Xs[i] @ w + b) < 1.0:
                w += eta * signs[i] * Xs[i]
                b += eta * signs[i]
    return LinearModel(weights=w, bias=b, lam=lam, epochs=epochs, seed=seed,
                       scaler=scaler, feature_names=names)


def svm_objective(model: LinearModel, X: np.ndarray, y: Sequence[int]) -> float:
    """Regularized hinge objective on already-raw inputs (scaled internally)."""
    Xs = model.scaler.transform(X)
    signs = 2.0 * np.asarray(y, dtype=float) - 1.0
    margins = signs * (Xs @ model.weights + model.bias)
    hinge = np.maximum(0.0, 1.0 - margins).mean()
    return 0.5 * model.lam * float(model.weights @ model.weights) + float(hinge)


def predict(model: LinearModel, x: FeatureVector | np.ndarray,
            names: Sequence[str] | None = None) -> Prediction:
    """Classify one sentence vector; a margin of exactly 0 counts important.

    Feature names must match the model's training order; a permuted or
    renamed vector raises instead of silently mispredicting.
    """
    if isinstance(x, FeatureVector):
        names = x.names
        values = x.values
    else:
        values = np.asarray(x, dtype=float)
    if names is not None and tuple(names) != tuple(model.feature_names):
        raise ValidationError("feature names do not match the model's training order")
    if values.shape != (len(model.feature_names),):
        raise ValidationError(
            f"expected {len(model.feature_names)} features, got {values.shape}")
    margin = float(model.decision_values(values[None, :])[0])
    return Prediction(label=1 if margin >= 0 else 0, margin=margin)


def predict_labels(model: LinearModel, X: np.ndarray) -> np.ndarray:
    return (model.decision_values(X) >= 0).astype(int)


# --------------------------------------------------------------------------
# cross-validation

@dataclass
class CVResult:
    best_lambda: float
    fold_scores: dict[float, list[float]]  # lambda -> weighted F per fold

    def mean_score(self, lam: float) -> float:
        scores = self.fold_scores[lam]
        return sum(scores) / len(scores)


def stratified_folds(y: np.ndarray, k: int, seed: int) -> list[np.ndarray]:
    """Round-robin per-class assignment after a seeded shuffle; fold sizes
    differ by at most one and every fold sees both classes."""
    y = np.asarray(y)
    if k < 2:
        raise ValidationError(f"k must be at least 2, got {k}")
    rng = np.random.default_rng(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    offset = 0
    for cls in (0, 1):
        idx = np.flatnonzero(y == cls)
        if len(idx) < k:
            raise ValidationError(
                f"class {cls} has {len(idx)} examples, fewer than k={k}; reduce k")
        idx = idx[rng.permutation(len(idx))]
        for j, i in enumerate(idx):
            folds[(offset + j) % k].append(int(i))
        offset += len(idx)
    return [np.array(sorted(f)) for f in folds]


def cross_validate(X: np.ndarray, y: Sequence[int],
                   lambda_grid: Sequence[float] = DEFAULT_LAMBDA_GRID,
                   k: int = 5, seed: int = 0, epochs: int = DEFAULT_EPOCHS) -> CVResult:
    """Pick the regularization strength by stratified k-fold weighted F.

    Ties go to the smaller lambda.
    """
    from .metrics import prf  # local import: metrics also consumes this module's outputs

    X, y = _check_training_input(X, np.asarray(y))
    if not lambda_grid:
        raise ValidationError("lambda grid is empty")
    folds = stratified_folds(y, k, seed)
    all_idx = np.arange(len(y))
    fold_scores: dict[float, list[float]] = {}
    for lam in sorted(lambda_grid):
        scores = []
        for fold in folds:
            mask = np.ones(len(y), dtype=bool)
            mask[fold] = False
            train_idx = all_idx[mask]
            model = train_svm(X[train_idx], y[train_idx], lam=lam, epochs=epochs, seed=seed)
            pred = predict_labels(model, X[fold])
            scores.append(prf(y[fold], pred).weighted_f)
        fold_scores[lam] = scores
    best = None
    best_mean = -1.0
    for lam in sorted(fold_scores):
        mean = sum(fold_scores[lam]) / len(fold_scores[lam])
        if mean > best_mean:
            best, best_mean = lam, mean
    return CVResult(best_lambda=best, fold_scores=fold_scores)


# --------------------------------------------------------------------------
# persistence

def save_model(model: LinearModel, path: str | Path | IO) -> None:
    record = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "feature_names": list(model.feature_names),
        "families": list(model.families),
        "use_coref": model.use_coref,
        "means": model.scaler.means.tolist(),
        "stds": model.scaler.stds.tolist(),
        "weights": model.weights.tolist(),
        "bias": model.bias,
        "lambda": model.lam,
        "epochs": model.epochs,
        "seed": model.seed,
    }
    text = json.dumps(record, indent=2) + "\n"
    if hasattr(path, "write"):
        path.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def load_model(path: str | Path | IO) -> LinearModel:
    text = path.read() if hasattr(path, "read") else Path(path).read_text(encoding="utf-8")
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"model file is not valid JSON: {exc}") from exc
    if record.get("format") != MODEL_FORMAT:
        raise ParseError(f"not an {MODEL_FORMAT} file")
    if record.get("version") != MODEL_VERSION:
        raise ParseError(f"unsupported model version {record.get('version')}")
    return LinearModel(
        weights=np.asarray(record["weights"], dtype=float),
        bias=float(record["bias"]),
        lam=float(record["lambda"]),
        epochs=int(record["epochs"]),
        seed=int(record["seed"]),
        scaler=Scaler(means=np.asarray(record["means"], dtype=float),
                      stds=np.asarray(record["stds"], dtype=float)),
        feature_names=tuple(record["feature_names"]),
        families=tuple(record.get("families", ())),
        use_coref=bool(record.get("use_coref", False)),
    )
