"""Gold importance labels from pyramid-style summary annotations.

Pyramid file (JSON lines): {"scu_id": "...", "label_text": "...",
"contributors": ["summary-1", ...]}. An SCU's tier is the number of distinct
contributor summaries.

Annotation file (JSON lines): {"dialog_id": "...", "turn_index": 0,
"index_in_turn": 1, "annotator": "a1", "scu_ids": ["..."]}; an empty scu_ids
list means the annotator found no matching label.

A sentence's score is the mean tier over all (annotator, scu) assignment
pairs; sentences scoring at or above the threshold (default 3) are important.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import IO, Iterable, Sequence

from .errors import ParseError, ValidationError

SentenceKey = tuple[str, int, int]


@dataclass(frozen=True)
class ScuLabel:
    scu_id: str
    label_text: str
    contributors: frozenset[str]

    @property
    def tier(self) -> int:
        return len(self.contributors)


@dataclass
class SentenceAnnotation:
    key: SentenceKey
    assignments: dict[str, set[str]] = field(default_factory=dict)  # annotator -> scu ids


@dataclass(frozen=True)
class GoldLabel:
    key: SentenceKey
    avg_tier: float
    important: bool


DEFAULT_THRESHOLD = 3.0


def tier_of_scu(contributors: Iterable[str]) -> int:
    """Tier rank = number of distinct contributor summaries."""
    distinct = set(contributors)
    if not distinct:
        raise ValidationError("an SCU must have at least one contributor summary")
    return len(distinct)


def aggregate_sentence_score(annotation: SentenceAnnotation, pyramid: dict[str, ScuLabel],
                             per_annotator_mean: bool = False) -> float:
    """Average tier over all (annotator, scu) pairs; 0.0 when nothing assigned.

    With per_annotator_mean, each annotator's assignments are averaged first
    and the annotator means are then averaged (alternative pooling).
    """
    tiers_by_annotator: list[list[int]] = []
    for annotator, scu_ids in sorted(annotation.assignments.items()):
        tiers = []
        for scu_id in sorted(scu_ids):
            if scu_id not in pyramid:
                raise ValidationError(f"annotation references unknown scu_id {scu_id!r}")
            tiers.append(pyramid[scu_id].tier)
        if tiers:
            tiers_by_annotator.append(tiers)
    if not tiers_by_annotator:
        return 0.0
    if per_annotator_mean:
        means = [sum(t) / len(t) for t in tiers_by_annotator]
        return sum(means) / len(means)
    pooled = [t for tiers in tiers_by_annotator for t in tiers]
    return sum(pooled) / len(pooled)


def gold_importance(avg_tier: float, threshold: float = DEFAULT_THRESHOLD) -> bool:
    """Important means an average tier score at the threshold or higher."""
    if avg_tier < 0:
        raise ValidationError(f"avg_tier must be non-negative, got {avg_tier}")
    return avg_tier >= threshold


def cohen_kappa(labels_a: Sequence[int], labels_b: Sequence[int]) -> float:
    """Cohen's kappa for two aligned label vectors.

    Degenerate marginals (expected agreement 1) return 1.0 for identical
    vectors and 0.0 otherwise.
    """
    if len(labels_a) != len(labels_b):
        raise ValidationError(f"label vectors differ in length: {len(labels_a)} vs {len(labels_b)}")
    n = len(labels_a)
    if n == 0:
        raise ValidationError("label vectors are empty")
    p_o = sum(1 for x, y in zip(labels_a, labels_b) if x == y) / n
    classes = set(labels_a) | set(labels_b)
    p_e = sum(
        (sum(1 for x in labels_a if x == c) / n) * (sum(1 for y in labels_b if y == c) / n)
        for c in classes
    )
    if p_e >= 1.0:
        return 1.0 if list(labels_a) == list(labels_b) else 0.0
    return (p_o - p_e) / (1.0 - p_e)


def average_pairwise_kappa(annotators: dict[str, Sequence[int]]) -> float:
    """Unweighted mean of Cohen's kappa over all unordered annotator pairs."""
    if len(annotators) < 2:
        raise ValidationError("need at least 2 annotators for pairwise kappa")
    names = sorted(annotators)
    values = [cohen_kappa(annotators[a], annotators[b]) for a, b in combinations(names, 2)]
    return sum(values) / len(values)


# --------------------------------------------------------------------------
# file interfaces

def load_pyramid(source: IO | str | bytes) -> dict[str, ScuLabel]:
    pyramid: dict[str, ScuLabel] = {}
    for lineno, record in _records(source):
        try:
            scu = ScuLabel(
                scu_id=str(record["scu_id"]),
                label_text=str(record.get("label_text", "")),
                contributors=frozenset(str(c) for c in record["contributors"]),
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"line {lineno}: bad pyramid record: {exc}") from exc
        if not scu.contributors:
            raise ValidationError(f"line {lineno}: SCU {scu.scu_id!r} has no contributors")
        if scu.scu_id in pyramid:
            raise ValidationError(f"line {lineno}: duplicate scu_id {scu.scu_id!r}")
        pyramid[scu.scu_id] = scu
    return pyramid


def load_annotations(source: IO | str | bytes,
                     pyramid: dict[str, ScuLabel] | None = None) -> list[SentenceAnnotation]:
    """Merge annotation records by sentence key; repeated (key, annotator)
    records union their scu sets."""
    merged: dict[SentenceKey, SentenceAnnotation] = {}
    for lineno, record in _records(source):
        try:
            key = (str(record["dialog_id"]), int(record["turn_index"]), int(record["index_in_turn"]))
            annotator = str(record["annotator"])
            scu_ids = {str(s) for s in record["scu_ids"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"line {lineno}: bad annotation record: {exc}") from exc
        if pyramid is not None:
            for scu_id in scu_ids:
                if scu_id not in pyramid:
                    raise ValidationError(f"line {lineno}: unknown scu_id {scu_id!r}")
        ann = merged.setdefault(key, SentenceAnnotation(key=key))
        ann.assignments.setdefault(annotator, set()).update(scu_ids)
    return [merged[k] for k in sorted(merged)]


def _records(source: IO | str | bytes):
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            yield lineno, json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: invalid JSON: {exc}") from exc


def gold_from_annotations(annotations: Iterable[SentenceAnnotation],
                          pyramid: dict[str, ScuLabel],
                          threshold: float = DEFAULT_THRESHOLD,
                          per_annotator_mean: bool = False) -> dict[SentenceKey, GoldLabel]:
    gold: dict[SentenceKey, GoldLabel] = {}
    for ann in annotations:
        avg = aggregate_sentence_score(ann, pyramid, per_annotator_mean)
        gold[ann.key] = GoldLabel(key=ann.key, avg_tier=avg,
                                  important=gold_importance(avg, threshold))
    return gold


def write_gold(gold: dict[SentenceKey, GoldLabel]) -> str:
    lines = []
    for key in sorted(gold):
        label = gold[key]
        lines.append(json.dumps({
            "dialog_id": key[0], "turn_index": key[1], "index_in_turn": key[2],
            "avg_tier": label.avg_tier, "important": label.important,
        }))
    return "\n".join(lines) + "\n" if lines else ""


def annotator_binary_labels(annotations: Iterable[SentenceAnnotation],
                            pyramid: dict[str, ScuLabel],
                            threshold: float = DEFAULT_THRESHOLD) -> dict[str, list[int]]:
    """Per-annotator binary importance vectors aligned over all annotated keys,
    for agreement reporting. An annotator's score for a sentence is the mean
    tier of their own assignments (0 when they assigned nothing)."""
    annotations = list(annotations)
    keys = sorted(a.key for a in annotations)
    by_key = {a.key: a for a in annotations}
    annotators = sorted({name for a in annotations for name in a.assignments})
    vectors: dict[str, list[int]] = {name: [] for name in annotators}
    for key in keys:
        ann = by_key[key]
        for name in annotators:
            tiers = []
            for scu_id in sorted(ann.assignments.get(name, ())):
                if scu_id not in pyramid:
                    raise ValidationError(f"annotation references unknown scu_id {scu_id!r}")
                tiers.append(pyramid[scu_id].tier)
            avg = sum(tiers) / len(tiers) if tiers else 0.0
            vectors[name].append(1 if avg >= threshold else 0)
    return vectors
