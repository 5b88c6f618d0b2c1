#!/usr/bin/env python3
"""Regenerate the bundled synthetic mini corpus (20 dialogs over two topics)
plus its pyramid, annotations, and a small demo embedding table.

Important sentences are built around category-lexicon words (money/death/
certainty for gun control, family/sexual/affiliation for gay marriage) so a
classifier over category features can recover the gold labels; fillers are
short phatic lines. Gold labels come only from the generated pyramid
annotations. The script validates everything it writes against the real
pipeline before saving.

    python scripts/gen_minicorpus.py
"""
from __future__ import annotations

import json
import random
import zlib
from pathlib import Path

import numpy as np

from argsum import resources
from argsum.corpus import parse_corpora, prepare_corpus
from argsum.pyramid import gold_from_annotations, load_annotations, load_pyramid

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "argsum" / "data" / "minicorpus"
MASTER_SEED = 20240817
DIALOGS_PER_TOPIC = 10
ANNOTATORS = ("ann1", "ann2", "ann3")

NAMES_A = ["TruthSeeker", "PlainFacts", "OldHickory", "CivicMinded", "BlueHarbor",
           "QuietStorm", "MapleLeaf", "IronClad", "FreeThinker", "RiverStone"]
NAMES_B = ["LibertyHawk", "CommonSense", "NightOwl", "RedOak", "FairPlay",
           "StraightTalk", "GreenField", "HighNoon", "OpenBook", "SilverFox"]

GUN_IMPORTANT = [
    "The government must prove that gun control laws actually save lives and money.",
    "Criminals kill innocent people every week and the death counts keep rising.",
    "Gun taxes cost honest families real money while the danger never goes away.",
    "Nobody has shown proof that a gun buyback program cuts murder rates.",
    "The facts show that gun prices and insurance costs keep climbing every year.",
    "You cannot deny that armed defense protects families from deadly threats.",
    "Every massacre proves that weak laws let dangerous people buy deadly weapons.",
    "Taxpayers pay millions for police protection yet the killing never stops.",
    "The budget numbers prove that gun violence costs this country a fortune.",
    "Statistics certainly show more guns mean more deaths in every market study.",
    "A safe storage law would surely protect children from fatal accidents.",
    "The money spent on prisons proves that gun crime drains public funds.",
]
GUN_MEDIUM = [
    "Some studies suggest permit checks reduce risk in certain cities.",
    "Licensing fees fund the background checks that keep sales honest.",
    "Trained owners rarely cause the deaths you keep quoting.",
    "Hunters pay taxes that support safety programs across the state.",
]
GAY_IMPORTANT = [
    "Marriage gives every family the legal power to protect their children.",
    "Gay couples pay the same taxes and deserve the same family rights.",
    "The facts prove that married parents give kids a stable household.",
    "You cannot deny that lesbian mothers raise healthy and happy children.",
    "Every family deserves a wedding and the security marriage certainly brings.",
    "Homosexual partners build homes and communities together like any married couple.",
    "The law must protect a gay spouse when the family faces a medical crisis.",
    "Denying marriage surely harms children who need married parents and stability.",
    "Committed couples prove their love through marriage and lifelong family duty.",
    "Sexuality never changes the fact that parents love and protect their kids.",
    "A husband and husband pay taxes and raise children like everyone else.",
    "Equal marriage strengthens the community and protects families under the law.",
]
GAY_MEDIUM = [
    "Churches keep their own wedding rules under every proposal discussed.",
    "Civil unions give partners some rights but fewer family protections.",
    "Adoption agencies report stable homes among married gay parents.",
    "Survey data shows community support for equal marriage keeps growing.",
]
FILLERS = [
    "Well, that sounds fine to me.",
    "Ha, sure, whatever you say, buddy.",
    "You keep telling yourself that.",
    "Nice try, but I heard you the first time.",
    "Oh please, give it a rest already.",
    "Sounds right to you?",
    "I see what you did there.",
    "That was a sweet little speech.",
    "Good grief, here we go again.",
    "You said the same thing yesterday.",
    "Fine, have it your way then.",
    "I am still waiting for an answer.",
    "That one made me laugh out loud.",
    "Keep dreaming, my friend.",
    "And who asked you anyway?",
    "Read it again, slowly this time.",
]
JUNK = ["Wow!", "Ha!", "Seriously?", "Unbelievable!", "Whatever.", "Right..."]

TOPICS = {
    "gun_control": ("gc", GUN_IMPORTANT, GUN_MEDIUM),
    "gay_marriage": ("gm", GAY_IMPORTANT, GAY_MEDIUM),
}


def build_dialog(topic: str, prefix: str, num: int, important_pool: list[str],
                 medium_pool: list[str], rng: random.Random):
    dialog_id = f"{prefix}-{num:03d}"
    authors = (f"{NAMES_A[num]}{rng.randint(10, 99)}", f"{NAMES_B[num]}{rng.randint(10, 99)}")
    turns_per_author = rng.choice([3, 3, 4])
    importants = rng.sample(important_pool, k=min(len(important_pool), 2 * turns_per_author))
    mediums = rng.sample(medium_pool, k=rng.randint(1, 2))
    plan: list[tuple[str, list[tuple[str, str]]]] = []  # (author, [(kind, text)])
    imp_iter = iter(importants)
    med_iter = iter(mediums)
    for turn_index in range(2 * turns_per_author):
        author = authors[turn_index % 2]
        n_sentences = rng.randint(2, 4)
        sentences = []
        slots = ["important"] + rng.choices(["important", "filler", "filler", "junk"],
                                            k=n_sentences - 1)
        rng.shuffle(slots)
        for kind in slots:
            if kind == "important":
                text = next(imp_iter, None)
                if text is None:
                    kind, text = "filler", rng.choice(FILLERS)
                elif rng.random() < 0.15:
                    kind = "medium"
                    med = next(med_iter, None)
                    if med is not None:
                        # swap in a boundary-tier sentence occasionally
                        text = med
                    else:
                        kind = "important"
            elif kind == "filler":
                text = rng.choice(FILLERS)
            else:
                text = rng.choice(JUNK)
            sentences.append((kind, text))
        plan.append((author, sentences))
    return dialog_id, authors, plan


def main() -> None:
    rng = random.Random(MASTER_SEED)
    corpus_records, pyramid_records, annotation_records = [], [], []
    planted: dict[tuple[str, int, int], str] = {}

    for topic, (prefix, imp_pool, med_pool) in TOPICS.items():
        for num in range(DIALOGS_PER_TOPIC):
            dialog_id, authors, plan = build_dialog(topic, prefix, num, imp_pool, med_pool, rng)
            summaries = [f"{dialog_id}-sum{j}" for j in range(1, 6)]
            low_scus = []
            for tier, tag in ((1, "aside"), (2, "minor")):
                scu_id = f"{dialog_id}-scu-{tag}"
                pyramid_records.append({
                    "scu_id": scu_id, "label_text": f"{tag} remark in {dialog_id}",
                    "contributors": summaries[:tier]})
                low_scus.append(scu_id)

            turns = []
            scu_counter = 0
            for turn_index, (author, sentences) in enumerate(plan):
                text = " ".join(s for _, s in sentences)
                turns.append({"author": author, "index": turn_index, "text": text})
                for sentence_index, (kind, _) in enumerate(sentences):
                    key = (dialog_id, turn_index, sentence_index)
                    planted[key] = kind
                    if kind in ("important", "medium"):
                        tier = 3 if kind == "medium" else rng.choice([4, 4, 5])
                        scu_id = f"{dialog_id}-scu-{scu_counter:02d}"
                        scu_counter += 1
                        pyramid_records.append({
                            "scu_id": scu_id,
                            "label_text": f"argument {scu_counter} in {dialog_id}",
                            "contributors": rng.sample(summaries, k=tier)})
                        for annotator in ANNOTATORS:
                            annotation_records.append({
                                "dialog_id": dialog_id, "turn_index": turn_index,
                                "index_in_turn": sentence_index, "annotator": annotator,
                                "scu_ids": [scu_id]})
                        if kind == "important" and rng.random() < 0.15:
                            annotation_records.append({
                                "dialog_id": dialog_id, "turn_index": turn_index,
                                "index_in_turn": sentence_index,
                                "annotator": rng.choice(ANNOTATORS),
                                "scu_ids": [low_scus[0]]})
                    elif kind == "filler" and rng.random() < 0.25:
                        annotation_records.append({
                            "dialog_id": dialog_id, "turn_index": turn_index,
                            "index_in_turn": sentence_index,
                            "annotator": rng.choice(ANNOTATORS),
                            "scu_ids": [rng.choice(low_scus)]})
            corpus_records.append({"dialog_id": dialog_id, "topic": topic, "turns": turns})

    corpus_text = "\n".join(json.dumps(r) for r in corpus_records) + "\n"
    pyramid_text = "\n".join(json.dumps(r) for r in pyramid_records) + "\n"
    annotation_text = "\n".join(json.dumps(r) for r in annotation_records) + "\n"

    # validate through the real pipeline before writing anything
    corpora = parse_corpora(corpus_text)
    assert sorted(c.topic for c in corpora) == sorted(TOPICS)
    scus = load_pyramid(pyramid_text)
    annotations = load_annotations(annotation_text, scus)
    gold = gold_from_annotations(annotations, scus)
    dictionary = resources.load_dictionary()
    verbs = resources.load_verbs()
    vocabulary: set[str] = set()
    for corpus in corpora:
        prepare_corpus(corpus, dictionary, verbs)
        kept_keys = {s.key for s in corpus.kept_sentences()}
        n_kept = len(kept_keys)
        n_important = 0
        for dialog in corpus.dialogs:
            for sentence in dialog.sentences():
                vocabulary.update(sentence.tokens)
                kind = planted[sentence.key]
                label = gold.get(sentence.key)
                important = label.important if label else False
                if kind in ("important", "medium"):
                    assert sentence.kept, f"planted sentence filtered out: {sentence.text!r}"
                    assert important, f"planted sentence not gold-important: {sentence.key}"
                    n_important += 1
                else:
                    assert not important, f"{kind} sentence marked important: {sentence.key}"
                if kind == "junk":
                    assert not sentence.kept, f"junk survived the filter: {sentence.text!r}"
        share = n_important / n_kept
        print(f"{corpus.topic}: {n_kept} kept sentences, {n_important} important ({share:.0%})")
        assert 0.30 <= share <= 0.65, f"class balance off for {corpus.topic}: {share:.2f}"

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    (OUT_DIR / "corpus.jsonl").write_text(corpus_text, encoding="utf-8")
    (OUT_DIR / "pyramid.jsonl").write_text(pyramid_text, encoding="utf-8")
    (OUT_DIR / "annotations.jsonl").write_text(annotation_text, encoding="utf-8")

    # demo embedding table: deterministic unit vectors over the corpus vocabulary
    dim = 24
    words = sorted(vocabulary)
    lines = [f"{len(words)} {dim}"]
    for word in words:
        vec_rng = np.random.default_rng(zlib.crc32(word.encode("utf-8")))
        vec = vec_rng.standard_normal(dim)
        vec /= np.linalg.norm(vec)
        lines.append(word + " " + " ".join(f"{x:.5f}" for x in vec))
    (OUT_DIR.parent / "demo_embeddings.txt").write_text("\n".join(lines) + "\n",
                                                        encoding="utf-8")
    print(f"embeddings: {len(words)} words x {dim} dims")
    print(f"wrote {OUT_DIR}")


if __name__ == "__main__":
    main()
