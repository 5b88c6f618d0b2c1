"""Two-party debate dialogs: parsing, validation, sentence segmentation, filtering.

Corpus files are UTF-8 JSON lines, one dialog per line:

    {"dialog_id": "d1", "topic": "gun_control",
     "turns": [{"author": "S1", "index": 0, "text": "..."}, ...]}

A dialog has exactly two distinct authors, each contributing at least three
turns, and a topic never holds more than one dialog for the same unordered
author pair.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from . import resources
from .errors import ConfigError, ParseError, ValidationError


@dataclass
class Sentence:
    text: str
    tokens: list[str]
    dialog_id: str
    turn_index: int
    index_in_turn: int
    global_index: int
    kept: bool = True
    original_text: str | None = None  # pre-substitution text when coreference rewriting applied

    @property
    def key(self) -> tuple[str, int, int]:
        return (self.dialog_id, self.turn_index, self.index_in_turn)


@dataclass
class Turn:
    author: str
    index: int
    raw_text: str
    sentences: list[Sentence] = field(default_factory=list)


@dataclass
class Dialog:
    dialog_id: str
    authors: tuple[str, str]
    turns: list[Turn]

    def sentences(self) -> list[Sentence]:
        """All sentences in dialog reading order (filtered ones included)."""
        return [s for turn in self.turns for s in turn.sentences]

    def kept_sentences(self) -> list[Sentence]:
        return [s for s in self.sentences() if s.kept]

    def author_of(self, turn_index: int) -> str:
        return self.turns[turn_index].author


@dataclass
class Corpus:
    topic: str
    dialogs: list[Dialog]

    def sentences(self) -> list[Sentence]:
        return [s for d in self.dialogs for s in d.sentences()]

    def kept_sentences(self) -> list[Sentence]:
        return [s for s in self.sentences() if s.kept]


# --------------------------------------------------------------------------
# parsing / serialization

def _decode_lines(source: IO | str | bytes) -> Iterator[tuple[int, str]]:
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            yield lineno, line


def _parse_dialog_record(record: dict, lineno: int) -> tuple[str, Dialog]:
    for key in ("dialog_id", "topic", "turns"):
        if key not in record:
            raise ParseError(f"line {lineno}: dialog record missing field {key!r}")
    dialog_id = str(record["dialog_id"])
    topic = str(record["topic"])
    raw_turns = record["turns"]
    if not isinstance(raw_turns, list) or not raw_turns:
        raise ParseError(f"line {lineno}: dialog {dialog_id!r} has no turns")

    turns = []
    for pos, item in enumerate(raw_turns):
        try:
            turns.append(Turn(author=str(item["author"]), index=int(item["index"]),
                              raw_text=str(item["text"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"line {lineno}: dialog {dialog_id!r} turn {pos}: {exc}") from exc

    turns.sort(key=lambda t: t.index)
    if [t.index for t in turns] != list(range(len(turns))):
        raise ValidationError(f"dialog {dialog_id!r}: turn indices must be 0..{len(turns) - 1} with no gaps")

    authors = []
    for t in turns:
        if t.author not in authors:
            authors.append(t.author)
    if len(authors) != 2:
        raise ValidationError(f"dialog {dialog_id!r}: expected exactly 2 authors, found {len(authors)}")
    for author in authors:
        count = sum(1 for t in turns if t.author == author)
        if count < 3:
            raise ValidationError(
                f"dialog {dialog_id!r}: author {author!r} has {count} turns, at least 3 required")

    return topic, Dialog(dialog_id=dialog_id, authors=(authors[0], authors[1]), turns=turns)


def parse_corpora(source: IO | str | bytes) -> list[Corpus]:
    """Parse a corpus file that may hold several topics; one Corpus per topic.

    Topics appear in first-occurrence order; dialogs keep file order.
    """
    by_topic: dict[str, list[Dialog]] = {}
    seen_ids: set[str] = set()
    seen_pairs: set[tuple[str, frozenset]] = set()
    for lineno, line in _decode_lines(source):
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: invalid JSON: {exc}") from exc
        topic, dialog = _parse_dialog_record(record, lineno)
        if dialog.dialog_id in seen_ids:
            raise ValidationError(f"duplicate dialog_id {dialog.dialog_id!r}")
        seen_ids.add(dialog.dialog_id)
        pair = (topic, frozenset(dialog.authors))
        if pair in seen_pairs:
            raise ValidationError(
                f"topic {topic!r} already has a dialog for author pair {sorted(dialog.authors)}")
        seen_pairs.add(pair)
        by_topic.setdefault(topic, []).append(dialog)
    return [Corpus(topic=t, dialogs=ds) for t, ds in by_topic.items()]


def parse_corpus(source: IO | str | bytes) -> Corpus:
    """Parse a single-topic corpus file into a validated Corpus."""
    corpora = parse_corpora(source)
    if not corpora:
        raise ParseError("empty corpus file")
    if len(corpora) > 1:
        raise ValidationError(
            f"expected a single topic, found {[c.topic for c in corpora]}; use parse_corpora")
    return corpora[0]


def serialize_corpus(corpus: Corpus | Iterable[Corpus]) -> str:
    """Inverse of parse_corpora for the raw dialog structure (sentences are derived)."""
    corpora = [corpus] if isinstance(corpus, Corpus) else list(corpus)
    lines = []
    for c in corpora:
        for d in c.dialogs:
            record = {
                "dialog_id": d.dialog_id,
                "topic": c.topic,
                "turns": [{"author": t.author, "index": t.index, "text": t.raw_text} for t in d.turns],
            }
            lines.append(json.dumps(record, ensure_ascii=False))
    return "\n".join(lines) + "\n" if lines else ""


# --------------------------------------------------------------------------
# segmentation

_TERMINALS = ".!?"
_CLOSERS = "\"'”’)]"
_OPEN_QUOTES = "\"'“‘"
_PREV_WORD_RE = re.compile(r"[A-Za-z\.]+$")

_default_abbreviations: set[str] | None = None


def _abbreviations() -> set[str]:
    global _default_abbreviations
    if _default_abbreviations is None:
        _default_abbreviations = resources.load_abbreviations()
    return _default_abbreviations


def segment_sentences(raw_text: str, abbreviations: set[str] | None = None) -> list[tuple[int, int]]:
    """Split text into sentence spans (start, end character offsets).

    A boundary falls after a run of [.!?] (plus any closing quotes) that is
    followed by whitespace and an uppercase letter or opening quote. A lone
    period does not split after a single-letter initial or a listed
    abbreviation, and never inside a decimal number (digits on both sides).
    Spans are non-overlapping, ordered, and cover all non-whitespace content.
    """
    if abbreviations is None:
        abbreviations = _abbreviations()
    n = len(raw_text)
    boundaries: list[int] = []
    i = 0
    while i < n:
        if raw_text[i] not in _TERMINALS:
            i += 1
            continue
        run_start = i
        j = i
        while j + 1 < n and raw_text[j + 1] in _TERMINALS:
            j += 1
        end = j + 1
        while end < n and raw_text[end] in _CLOSERS:
            end += 1
        m = end
        while m < n and raw_text[m].isspace():
            m += 1
        follows_gap = m > end
        next_ok = m < n and (raw_text[m].isupper() or raw_text[m] in _OPEN_QUOTES)
        if follows_gap and next_ok:
            split = True
            if raw_text[run_start] == "." and j == run_start:
                if run_start > 0 and raw_text[run_start - 1].isdigit() \
                        and end < n and raw_text[end].isdigit():
                    split = False
                match = _PREV_WORD_RE.search(raw_text, 0, run_start)
                if match:
                    word = match.group(0).strip(".")
                    if len(word) == 1 and word.isalpha():
                        split = False
                    elif (word + ".").lower() in abbreviations:
                        split = False
            if split:
                boundaries.append(end)
        i = j + 1

    spans: list[tuple[int, int]] = []
    start = 0
    for boundary in boundaries:
        while start < boundary and raw_text[start].isspace():
            start += 1
        if start < boundary:
            spans.append((start, boundary))
        start = boundary
    tail_end = n
    while tail_end > start and raw_text[tail_end - 1].isspace():
        tail_end -= 1
    while start < tail_end and raw_text[start].isspace():
        start += 1
    if start < tail_end:
        spans.append((start, tail_end))
    return spans


def split_sentences(raw_text: str, abbreviations: set[str] | None = None) -> list[str]:
    return [raw_text[a:b] for a, b in segment_sentences(raw_text, abbreviations)]


# --------------------------------------------------------------------------
# tokenization

_WORD_RE = re.compile(r"(?<![a-z0-9])[a-z]+(?:'[a-z]+)*(?![a-z0-9])")


def tokenize(text: str) -> list[str]:
    """Lowercased alphabetic word tokens; punctuation and digit runs dropped,
    contractions kept whole ("can't")."""
    return _WORD_RE.findall(text.lower().replace("’", "'"))


def segment_dialog(dialog: Dialog, abbreviations: set[str] | None = None) -> None:
    """Populate turn sentences with tokens and dialog-wide global indices."""
    global_index = 0
    for turn in dialog.turns:
        turn.sentences = []
        for k, (a, b) in enumerate(segment_sentences(turn.raw_text, abbreviations)):
            text = turn.raw_text[a:b]
            turn.sentences.append(Sentence(
                text=text, tokens=tokenize(text), dialog_id=dialog.dialog_id,
                turn_index=turn.index, index_in_turn=k, global_index=global_index))
            global_index += 1


def segment_corpus(corpus: Corpus, abbreviations: set[str] | None = None) -> Corpus:
    for dialog in corpus.dialogs:
        segment_dialog(dialog, abbreviations)
    return corpus


# --------------------------------------------------------------------------
# filtering

def is_verb_token(token: str, verb_lexicon: set[str], dictionary: set[str]) -> bool:
    """Closed-lexicon verb test with -ed/-ing fallback on dictionary stems."""
    if token in verb_lexicon:
        return True
    for suffix in ("ed", "ing"):
        if token.endswith(suffix) and len(token) >= len(suffix) + 3:
            stem = token[: -len(suffix)]
            if stem in dictionary or stem + "e" in dictionary:
                return True
            if len(stem) >= 3 and stem[-1] == stem[-2] and stem[:-1] in dictionary:
                return True
    return False


def filter_sentences(sentences: list[Sentence], dictionary: set[str],
                     verb_lexicon: set[str]) -> list[Sentence]:
    """Set kept flags: a sentence survives with at least one verb and three
    dictionary words. Records are never reordered or removed, so filtered
    sentences stay addressable for context features."""
    if not dictionary:
        raise ConfigError("dictionary lexicon is empty")
    if not verb_lexicon:
        raise ConfigError("verb lexicon is empty")
    for sentence in sentences:
        dict_count = sum(1 for t in sentence.tokens if t in dictionary)
        has_verb = any(is_verb_token(t, verb_lexicon, dictionary) for t in sentence.tokens)
        sentence.kept = has_verb and dict_count >= 3
    return sentences


def prepare_corpus(corpus: Corpus, dictionary: set[str] | None = None,
                   verb_lexicon: set[str] | None = None,
                   abbreviations: set[str] | None = None) -> Corpus:
    """Segment and filter in one step using bundled lexicons by default."""
    dictionary = dictionary if dictionary is not None else resources.load_dictionary()
    verb_lexicon = verb_lexicon if verb_lexicon is not None else resources.load_verbs()
    segment_corpus(corpus, abbreviations)
    filter_sentences(corpus.sentences(), dictionary, verb_lexicon)
    return corpus
