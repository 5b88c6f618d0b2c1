import json
from itertools import combinations

import pytest

from argsum.errors import ParseError, ValidationError
from argsum.pyramid import (ScuLabel, SentenceAnnotation, aggregate_sentence_score,
                            annotator_binary_labels, average_pairwise_kappa, cohen_kappa,
                            gold_from_annotations, gold_importance, load_annotations,
                            load_pyramid, tier_of_scu, write_gold)


def scu(scu_id, tier, label="label"):
    return ScuLabel(scu_id=scu_id, label_text=label,
                    contributors=frozenset(f"sum{i}" for i in range(tier)))


class TestTier:
    def test_five_contributors(self):
        assert tier_of_scu({"s1", "s2", "s3", "s4", "s5"}) == 5

    def test_three_contributors(self):
        assert tier_of_scu({"s1", "s2", "s3"}) == 3

    def test_duplicate_lines_from_same_summary_counted_once(self):
        assert tier_of_scu(["s1", "s1", "s2"]) == 2

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            tier_of_scu(set())


class TestAggregate:
    def test_mean_of_assigned_tiers(self):
        pyramid = {"a": scu("a", 5), "b": scu("b", 3)}
        ann = SentenceAnnotation(key=("d", 0, 0), assignments={"ann1": {"a", "b"}})
        assert aggregate_sentence_score(ann, pyramid) == 4.0

    def test_single_assignment(self):
        pyramid = {"a": scu("a", 1)}
        ann = SentenceAnnotation(key=("d", 0, 0), assignments={"ann1": {"a"}})
        assert aggregate_sentence_score(ann, pyramid) == 1.0

    def test_no_assignments_scores_zero_and_unimportant(self):
        ann = SentenceAnnotation(key=("d", 0, 0), assignments={"ann1": set()})
        score = aggregate_sentence_score(ann, {})
        assert score == 0.0
        assert gold_importance(score) is False

    def test_pooling_over_annotators(self):
        pyramid = {"a": scu("a", 5), "b": scu("b", 1)}
        ann = SentenceAnnotation(key=("d", 0, 0),
                                 assignments={"ann1": {"a"}, "ann2": {"a", "b"}})
        # pooled: (5 + 5 + 1) / 3
        assert aggregate_sentence_score(ann, pyramid) == pytest.approx(11 / 3)
        # per-annotator means: (5 + 3) / 2
        assert aggregate_sentence_score(ann, pyramid, per_annotator_mean=True) == 4.0

    def test_dangling_scu_named_in_error(self):
        ann = SentenceAnnotation(key=("d", 0, 0), assignments={"ann1": {"ghost"}})
        with pytest.raises(ValidationError, match="ghost"):
            aggregate_sentence_score(ann, {})


class TestImportance:
    def test_above_threshold(self):
        assert gold_importance(4.0) is True

    def test_boundary_inclusive(self):
        assert gold_importance(3.0) is True

    def test_below_threshold(self):
        assert gold_importance(2.9) is False

    def test_monotone_in_avg_tier(self):
        values = [0.0, 1.0, 2.99, 3.0, 3.01, 5.0]
        flags = [gold_importance(v) for v in values]
        assert flags == sorted(flags)

    def test_negative_rejected(self):
        with pytest.raises(ValidationError):
            gold_importance(-0.1)


class TestCohenKappa:
    def test_identical_mixed_vectors(self):
        assert cohen_kappa([1, 0, 1, 0], [1, 0, 1, 0]) == 1.0

    def test_hand_computed_zero(self):
        assert cohen_kappa([1, 1, 0, 0], [1, 0, 1, 0]) == pytest.approx(0.0)

    def test_hand_computed_half(self):
        assert cohen_kappa([1, 1, 1, 0], [1, 1, 0, 0]) == pytest.approx(0.5)

    def test_symmetric(self):
        a, b = [1, 1, 0, 1, 0, 0], [0, 1, 0, 1, 1, 0]
        assert cohen_kappa(a, b) == pytest.approx(cohen_kappa(b, a))

    def test_degenerate_marginals(self):
        assert cohen_kappa([1, 1], [1, 1]) == 1.0
        assert cohen_kappa([0, 0], [0, 0]) == 1.0

    def test_length_mismatch(self):
        with pytest.raises(ValidationError):
            cohen_kappa([1, 0], [1])

    def test_kappa_one_iff_identical_with_both_classes(self):
        import random
        rng = random.Random(2)
        for _ in range(100):
            a = [rng.randint(0, 1) for _ in range(8)]
            b = [rng.randint(0, 1) for _ in range(8)]
            if len(set(a)) < 2 or len(set(b)) < 2:
                continue
            k = cohen_kappa(a, b)
            assert (k == pytest.approx(1.0)) == (a == b)


class TestAveragePairwiseKappa:
    def test_two_annotators_equals_single_pair(self):
        vectors = {"a": [1, 1, 0, 0], "b": [1, 0, 1, 0]}
        assert average_pairwise_kappa(vectors) == cohen_kappa(vectors["a"], vectors["b"])

    def test_three_identical(self):
        v = [1, 0, 1, 1, 0]
        assert average_pairwise_kappa({"a": v, "b": list(v), "c": list(v)}) == 1.0

    def test_three_annotators_match_enumeration(self):
        vectors = {"a": [1, 1, 0, 0], "b": [1, 0, 1, 0], "c": [1, 1, 1, 0]}
        # pairwise hand values: k(a,b)=0, k(a,c)=0.5, k(b,c)=0.5
        assert average_pairwise_kappa(vectors) == pytest.approx(1 / 3)
        enumerated = [cohen_kappa(vectors[x], vectors[y])
                      for x, y in combinations(sorted(vectors), 2)]
        assert average_pairwise_kappa(vectors) == pytest.approx(sum(enumerated) / 3)

    def test_requires_two_annotators(self):
        with pytest.raises(ValidationError):
            average_pairwise_kappa({"a": [1, 0]})


class TestFileInterfaces:
    def pyramid_text(self):
        records = [
            {"scu_id": "s-hi", "label_text": "top", "contributors": ["a", "b", "c", "d", "e"]},
            {"scu_id": "s-mid", "label_text": "mid", "contributors": ["a", "b", "c"]},
            {"scu_id": "s-low", "label_text": "low", "contributors": ["a"]},
        ]
        return "\n".join(json.dumps(r) for r in records)

    def test_load_pyramid_tiers(self):
        pyramid = load_pyramid(self.pyramid_text())
        assert [pyramid[k].tier for k in ("s-hi", "s-mid", "s-low")] == [5, 3, 1]

    def test_duplicate_scu_rejected(self):
        text = self.pyramid_text() + "\n" + json.dumps(
            {"scu_id": "s-hi", "label_text": "dup", "contributors": ["a"]})
        with pytest.raises(ValidationError, match="s-hi"):
            load_pyramid(text)

    def test_contributorless_scu_rejected(self):
        with pytest.raises(ValidationError):
            load_pyramid(json.dumps({"scu_id": "x", "label_text": "", "contributors": []}))

    def test_bad_json_line_number(self):
        with pytest.raises(ParseError, match="line 2"):
            load_pyramid(self.pyramid_text().split("\n")[0] + "\nnot json")

    def test_annotations_merge_and_validate(self):
        pyramid = load_pyramid(self.pyramid_text())
        lines = [
            {"dialog_id": "d", "turn_index": 0, "index_in_turn": 0,
             "annotator": "a1", "scu_ids": ["s-hi"]},
            {"dialog_id": "d", "turn_index": 0, "index_in_turn": 0,
             "annotator": "a1", "scu_ids": ["s-mid"]},
            {"dialog_id": "d", "turn_index": 0, "index_in_turn": 0,
             "annotator": "a2", "scu_ids": []},
        ]
        annotations = load_annotations("\n".join(json.dumps(r) for r in lines), pyramid)
        assert len(annotations) == 1
        assert annotations[0].assignments["a1"] == {"s-hi", "s-mid"}
        assert annotations[0].assignments["a2"] == set()

    def test_unknown_scu_in_annotations_rejected(self):
        pyramid = load_pyramid(self.pyramid_text())
        line = json.dumps({"dialog_id": "d", "turn_index": 0, "index_in_turn": 0,
                           "annotator": "a1", "scu_ids": ["nope"]})
        with pytest.raises(ValidationError, match="nope"):
            load_annotations(line, pyramid)

    def test_gold_output_round_trip(self):
        pyramid = load_pyramid(self.pyramid_text())
        ann = SentenceAnnotation(key=("d", 0, 0), assignments={"a1": {"s-hi"}})
        gold = gold_from_annotations([ann], pyramid)
        text = write_gold(gold)
        record = json.loads(text.strip())
        assert record == {"dialog_id": "d", "turn_index": 0, "index_in_turn": 0,
                          "avg_tier": 5.0, "important": True}

    def test_annotator_binary_labels_alignment(self):
        pyramid = load_pyramid(self.pyramid_text())
        anns = [
            SentenceAnnotation(key=("d", 0, 0), assignments={"a1": {"s-hi"}, "a2": {"s-hi"}}),
            SentenceAnnotation(key=("d", 0, 1), assignments={"a1": {"s-low"}}),
        ]
        vectors = annotator_binary_labels(anns, pyramid)
        assert vectors == {"a1": [1, 0], "a2": [1, 0]}
