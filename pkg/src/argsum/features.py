"""Per-sentence feature families: readability grades, category-lexicon scores
for the current and previous sentence, sentiment buckets, previous-sentence
question act, position within the turn, and averaged word embeddings.

Category lexicons use the classic dictionary format: a header between '%'
lines mapping integer ids to category names, then "word<TAB>id[<TAB>id...]"
entries where a trailing '*' makes the word a prefix pattern. Embedding
files are plain text, one "word v1 ... vd" per line with an optional
"count dim" header.
"""
from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import resources
from .corpus import Dialog, Sentence, Turn, is_verb_token, tokenize
from .errors import ConfigError, ParseError, ValidationError

FAMILY_ORDER = ("readability", "liwc_current", "liwc_prev", "sentiment",
                "dac_prev", "turn_pos", "embedding")

READABILITY_NAMES = ("flesch_kincaid_grade", "automated_readability_index",
                     "coleman_liau_index", "smog_index", "gunning_fog",
                     "flesch_reading_ease", "lix", "rix")

SENTIMENT_BUCKETS = ("very_negative", "negative", "neutral", "positive", "very_positive")

# summary variables emitted as direct counts alongside the pattern categories
SUMMARY_CATEGORIES = ("words_per_sentence", "six_letter_words")

THIRD_PERSON_PRONOUNS = frozenset({
    "he", "him", "his", "himself", "she", "her", "hers", "herself",
    "it", "its", "itself", "they", "them", "their", "theirs", "themselves",
})

INTERROGATIVE_LEADS = frozenset({
    "who", "what", "when", "where", "why", "how", "which",
    "is", "are", "am", "was", "were", "do", "does", "did",
    "can", "could", "would", "will", "shall", "should",
    "have", "has", "had", "may", "might", "must",
})


# --------------------------------------------------------------------------
# resource types

@dataclass
class CategoryLexicon:
    categories: dict[str, frozenset[str]]  # category -> literal words / 'pre*' prefixes

    def __post_init__(self):
        self._literals: dict[str, set[str]] = {}
        self._prefixes: list[tuple[str, str]] = []
        for category, patterns in self.categories.items():
            for pattern in patterns:
                if pattern != pattern.lower():
                    raise ValidationError(f"lexicon pattern must be lowercase: {pattern!r}")
                if pattern.endswith("*"):
                    self._prefixes.append((pattern[:-1], category))
                else:
                    self._literals.setdefault(pattern, set()).add(category)

    def names(self) -> list[str]:
        return sorted(self.categories)

    def match(self, token: str) -> set[str]:
        hits = set(self._literals.get(token, ()))
        for prefix, category in self._prefixes:
            if token.startswith(prefix):
                hits.add(category)
        return hits


@dataclass
class EmbeddingTable:
    dimension: int
    vectors: dict[str, np.ndarray]

    def __post_init__(self):
        for word, vec in self.vectors.items():
            if vec.shape != (self.dimension,):
                raise ValidationError(f"embedding for {word!r} has length {vec.shape}, "
                                      f"expected {self.dimension}")


def load_category_lexicon(path: str | Path | None = None) -> CategoryLexicon:
    src = path or resources.data_path(resources.CATEGORY_LEXICON_FILE)
    id_to_name: dict[str, str] = {}
    categories: dict[str, set[str]] = {}
    in_header = False
    header_done = False
    with open(src, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.strip() == "%":
                if not header_done:
                    if in_header:
                        header_done = True
                    in_header = not in_header
                continue
            if in_header:
                parts = line.split("\t")
                if len(parts) != 2:
                    raise ParseError(f"{src}:{lineno}: expected 'id<TAB>name' in header")
                cid, name = parts[0].strip(), parts[1].strip()
                if name in categories:
                    raise ValidationError(f"{src}:{lineno}: duplicate category name {name!r}")
                id_to_name[cid] = name
                categories[name] = set()
            else:
                parts = [p for p in line.split("\t") if p.strip()]
                if len(parts) < 2:
                    raise ParseError(f"{src}:{lineno}: expected 'word<TAB>id...'")
                word = parts[0].strip().lower()
                for cid in parts[1:]:
                    cid = cid.strip()
                    if cid not in id_to_name:
                        raise ParseError(f"{src}:{lineno}: unknown category id {cid!r}")
                    categories[id_to_name[cid]].add(word)
    if not categories:
        raise ConfigError(f"category lexicon {src} defines no categories")
    return CategoryLexicon({name: frozenset(words) for name, words in categories.items()})


def load_embeddings(path: str | Path) -> EmbeddingTable:
    vectors: dict[str, np.ndarray] = {}
    dimension = None
    with open(path, encoding="utf-8") as fh:
        first = fh.readline()
        parts = first.split()
        header = len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
        if not header and parts:
            vectors[parts[0].lower()] = np.asarray([float(x) for x in parts[1:]], dtype=float)
            dimension = len(parts) - 1
        elif header:
            dimension = int(parts[1])
        for lineno, line in enumerate(fh, 2):
            parts = line.split()
            if not parts:
                continue
            word, values = parts[0].lower(), parts[1:]
            if dimension is None:
                dimension = len(values)
            if len(values) != dimension:
                raise ParseError(f"{path}:{lineno}: expected {dimension} values, got {len(values)}")
            vectors[word] = np.asarray([float(x) for x in values], dtype=float)
    if dimension is None or not vectors:
        raise ConfigError(f"embedding file {path} holds no vectors")
    return EmbeddingTable(dimension=dimension, vectors=vectors)


# --------------------------------------------------------------------------
# individual feature families

def count_syllables(word: str) -> int:
    """Vowel-group syllable estimate, minimum 1.

    Counts maximal runs of a/e/i/o/u/y, subtracting one for a silent final
    'e' except in consonant + "le" endings.
    """
    letters = "".join(c for c in word.lower() if c.isalpha())
    if not letters:
        raise ValidationError(f"cannot count syllables of {word!r}")
    vowels = "aeiouy"
    groups = 0
    prev_vowel = False
    for c in letters:
        is_vowel = c in vowels
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    if letters.endswith("e") and not (
            len(letters) >= 3 and letters.endswith("le") and letters[-3] not in vowels):
        groups -= 1
    return max(1, groups)


def _letter_count(token: str) -> int:
    return sum(1 for c in token if c.isalpha())


def readability_vector(sentence: Sentence) -> np.ndarray:
    """Eight standard readability grades for a single sentence.

    Order: Flesch-Kincaid grade, ARI, Coleman-Liau, SMOG, Gunning Fog,
    Flesch Reading Ease, LIX, RIX. Complex words have 3+ syllables; long
    words have more than 6 letters.
    """
    tokens = sentence.tokens
    if not tokens:
        warnings.warn(f"readability on empty sentence {sentence.key}; returning zeros")
        return np.zeros(len(READABILITY_NAMES))
    words = len(tokens)
    sentences = 1.0
    letters = sum(_letter_count(t) for t in tokens)
    syllables = sum(count_syllables(t) for t in tokens)
    complex_words = sum(1 for t in tokens if count_syllables(t) >= 3)
    long_words = sum(1 for t in tokens if _letter_count(t) > 6)

    fk = 0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59
    ari = 4.71 * (letters / words) + 0.5 * (words / sentences) - 21.43
    cli = 0.0588 * (100.0 * letters / words) - 0.296 * (100.0 * sentences / words) - 15.8
    smog = 1.0430 * math.sqrt(complex_words * (30.0 / sentences)) + 3.1291
    fog = 0.4 * ((words / sentences) + 100.0 * complex_words / words)
    fre = 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words)
    lix = words / sentences + 100.0 * long_words / words
    rix = long_words / sentences
    return np.array([fk, ari, cli, smog, fog, fre, lix, rix])


def lexicon_category_scores(sentence: Sentence, lexicon: CategoryLexicon) -> dict[str, float]:
    """Matched-token frequency per category; a token may feed several."""
    if not lexicon.categories:
        raise ConfigError("category lexicon is empty")
    counts = {name: 0 for name in lexicon.categories}
    for token in sentence.tokens:
        for category in lexicon.match(token):
            counts[category] += 1
    total = len(sentence.tokens)
    if total == 0:
        return {name: 0.0 for name in counts}
    return {name: c / total for name, c in counts.items()}


def previous_sentence(dialog: Dialog, sentence: Sentence) -> Sentence | None:
    """Immediately preceding sentence in dialog order, crossing turn
    boundaries; filtered-out sentences still count as context."""
    if sentence.global_index == 0:
        return None
    for s in dialog.sentences():
        if s.global_index == sentence.global_index - 1:
            return s
    return None


def context_lexicon_scores(sentence: Sentence, dialog: Dialog,
                           lexicon: CategoryLexicon) -> dict[str, float]:
    prev = previous_sentence(dialog, sentence)
    if prev is None:
        return {name: 0.0 for name in lexicon.categories}
    return lexicon_category_scores(prev, lexicon)


def sentiment_buckets(sentence: Sentence, polarity: dict[str, float]) -> np.ndarray:
    """Normalized frequencies over five polarity buckets, very negative to
    very positive; no lexicon hits puts all mass on neutral."""
    if not polarity:
        raise ConfigError("polarity lexicon is empty")
    counts = np.zeros(5)
    for token in sentence.tokens:
        if token not in polarity:
            continue
        s = polarity[token]
        if s <= -0.6:
            counts[0] += 1
        elif s <= -0.2:
            counts[1] += 1
        elif s < 0.2:
            counts[2] += 1
        elif s < 0.6:
            counts[3] += 1
        else:
            counts[4] += 1
    total = counts.sum()
    if total == 0:
        return np.array([0.0, 0.0, 1.0, 0.0, 0.0])
    return counts / total


def is_question(sentence: Sentence) -> bool:
    """Question heuristic: trailing '?' or an interrogative/auxiliary lead."""
    trimmed = sentence.text.rstrip().rstrip("\"'”’)]").rstrip()
    if trimmed.endswith("?"):
        return True
    return bool(sentence.tokens) and sentence.tokens[0] in INTERROGATIVE_LEADS


def turn_third(index_in_turn: int, turn_length: int) -> int:
    """Which third of its turn a sentence falls in (1, 2, or 3)."""
    if turn_length < 1 or not 0 <= index_in_turn < turn_length:
        raise ValidationError(f"index {index_in_turn} out of range for turn of {turn_length}")
    return min(3, (3 * index_in_turn) // turn_length + 1)


def average_embedding(sentence: Sentence, table: EmbeddingTable,
                      stopwords: set[str]) -> np.ndarray:
    hits = [table.vectors[t] for t in sentence.tokens
            if t not in stopwords and t in table.vectors]
    if not hits:
        return np.zeros(table.dimension)
    return np.mean(hits, axis=0)


# --------------------------------------------------------------------------
# coreference substitution

_SURFACE_RE = re.compile(r"(?<![A-Za-z0-9])[A-Za-z]+(?:['’][A-Za-z]+)*(?![A-Za-z0-9])")


def _surface_tokens(text: str) -> list[re.Match]:
    return list(_SURFACE_RE.finditer(text))


def _candidate_antecedents(sentence: Sentence, pronouns: frozenset[str], stopwords: set[str],
                           verbs: set[str], dictionary: set[str]) -> list[str]:
    candidates = []
    for pos, match in enumerate(_surface_tokens(sentence.text)):
        surface = match.group(0)
        lower = surface.lower().replace("’", "'")
        if lower in pronouns:
            continue
        capitalized_mid = pos > 0 and surface[0].isupper()
        contentful = (len(lower) >= 3 and lower not in stopwords
                      and not is_verb_token(lower, verbs, dictionary))
        if capitalized_mid or contentful:
            candidates.append(surface)
    return candidates


def coref_replace(dialog: Dialog, pronoun_set: frozenset[str] | None = None,
                  stopwords: set[str] | None = None, verbs: set[str] | None = None,
                  dictionary: set[str] | None = None) -> Dialog:
    """Replace third-person pronouns with a nearby antecedent mention.

    The antecedent is the first candidate token of the closest of the two
    preceding sentences, preferring sentences by the same speaker; candidates
    are capitalized mid-sentence tokens or contentful (non-stopword,
    non-verb, length >= 3) tokens. Pronouns with no candidate stay unchanged.
    Returns a new Dialog; each rewritten sentence keeps its source text in
    original_text. Only pronoun tokens change, so token counts are preserved.
    """
    pronouns = pronoun_set if pronoun_set is not None else THIRD_PERSON_PRONOUNS
    stopwords = stopwords if stopwords is not None else resources.load_stopwords()
    verbs = verbs if verbs is not None else resources.load_verbs()
    dictionary = dictionary if dictionary is not None else resources.load_dictionary()

    new_turns = [Turn(author=t.author, index=t.index, raw_text=t.raw_text, sentences=[])
                 for t in dialog.turns]
    new_dialog = Dialog(dialog_id=dialog.dialog_id, authors=dialog.authors, turns=new_turns)
    processed: list[Sentence] = []  # substituted sentences, dialog order

    for turn, new_turn in zip(dialog.turns, new_turns):
        for sentence in turn.sentences:
            window = processed[-2:][::-1]  # nearest first
            same = [s for s in window if dialog.author_of(s.turn_index) == turn.author]
            other = [s for s in window if dialog.author_of(s.turn_index) != turn.author]

            def find_antecedent() -> str | None:
                for prev in same + other:
                    cands = _candidate_antecedents(prev, pronouns, stopwords, verbs, dictionary)
                    if cands:
                        return cands[0]
                return None

            pieces = []
            last = 0
            changed = False
            for match in _surface_tokens(sentence.text):
                lower = match.group(0).lower().replace("’", "'")
                if lower not in pronouns:
                    continue
                antecedent = find_antecedent()
                if antecedent is None:
                    continue
                replacement = antecedent
                if match.group(0)[0].isupper() and not replacement[0].isupper():
                    replacement = replacement[0].upper() + replacement[1:]
                pieces.append(sentence.text[last:match.start()])
                pieces.append(replacement)
                last = match.end()
                changed = True
            new_text = "".join(pieces) + sentence.text[last:] if changed else sentence.text
            new_sentence = Sentence(
                text=new_text, tokens=tokenize(new_text), dialog_id=sentence.dialog_id,
                turn_index=sentence.turn_index, index_in_turn=sentence.index_in_turn,
                global_index=sentence.global_index, kept=sentence.kept,
                original_text=sentence.text if changed else None)
            new_turn.sentences.append(new_sentence)
            processed.append(new_sentence)
    return new_dialog


# --------------------------------------------------------------------------
# assembly

@dataclass
class FeatureConfig:
    families: tuple[str, ...] = ("liwc_current",)
    use_coref: bool = False
    lexicon_path: str | None = None
    polarity_path: str | None = None
    embeddings_path: str | None = None

    def __post_init__(self):
        unknown = [f for f in self.families if f not in FAMILY_ORDER]
        if unknown:
            raise ConfigError(f"unknown feature families {unknown}; expected {list(FAMILY_ORDER)}")
        if not self.families:
            raise ConfigError("at least one feature family must be enabled")
        # canonical family order regardless of how the config listed them
        self.families = tuple(f for f in FAMILY_ORDER if f in self.families)


@dataclass
class FeatureVector:
    names: tuple[str, ...]
    values: np.ndarray
    key: tuple[str, int, int]

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if len(self.names) != len(self.values):
            raise ValidationError(f"{len(self.names)} names vs {len(self.values)} values")
        if not np.all(np.isfinite(self.values)):
            raise ValidationError(f"non-finite feature values for {self.key}")


@dataclass
class FeatureResources:
    stopwords: set[str]
    dictionary: set[str]
    verbs: set[str]
    lexicon: CategoryLexicon | None = None
    polarity: dict[str, float] | None = None
    embeddings: EmbeddingTable | None = None
    pronouns: frozenset[str] = THIRD_PERSON_PRONOUNS


def load_feature_resources(cfg: FeatureConfig) -> FeatureResources:
    """Load everything the enabled families (and coref) need, bundled files
    by default. Missing embedding path raises a ConfigError naming the family."""
    res = FeatureResources(
        stopwords=resources.load_stopwords(),
        dictionary=resources.load_dictionary(),
        verbs=resources.load_verbs(),
    )
    if "liwc_current" in cfg.families or "liwc_prev" in cfg.families:
        res.lexicon = load_category_lexicon(cfg.lexicon_path)
    if "sentiment" in cfg.families:
        res.polarity = resources.load_polarity(cfg.polarity_path)
    if "embedding" in cfg.families:
        if cfg.embeddings_path is None:
            raise ConfigError("family 'embedding' requires an embeddings file path")
        res.embeddings = load_embeddings(cfg.embeddings_path)
    return res


class FeatureExtractor:
    """Assembles configured feature families in a fixed order with fully
    qualified names; vector length depends only on config and resources."""

    def __init__(self, cfg: FeatureConfig, res: FeatureResources):
        self.cfg = cfg
        self.res = res
        for family in cfg.families:
            if family in ("liwc_current", "liwc_prev") and res.lexicon is None:
                raise ConfigError(f"family {family!r} requires a category lexicon")
            if family == "sentiment" and res.polarity is None:
                raise ConfigError("family 'sentiment' requires a polarity lexicon")
            if family == "embedding" and res.embeddings is None:
                raise ConfigError("family 'embedding' requires an embedding table")
        self.names = tuple(self._build_names())

    def _liwc_block_names(self) -> list[str]:
        return self.res.lexicon.names() + list(SUMMARY_CATEGORIES)

    def _build_names(self) -> list[str]:
        names: list[str] = []
        for family in self.cfg.families:
            if family == "readability":
                names += [f"readability.{n}" for n in READABILITY_NAMES]
            elif family in ("liwc_current", "liwc_prev"):
                names += [f"{family}.{n}" for n in self._liwc_block_names()]
            elif family == "sentiment":
                names += [f"sentiment.{n}" for n in SENTIMENT_BUCKETS]
            elif family == "dac_prev":
                names.append("dac_prev.is_question")
            elif family == "turn_pos":
                names.append("turn_pos.third")
            elif family == "embedding":
                names += [f"embedding.d{i:03d}" for i in range(self.res.embeddings.dimension)]
        return names

    def _liwc_block(self, sentence: Sentence | None) -> list[float]:
        size = len(self.res.lexicon.categories) + len(SUMMARY_CATEGORIES)
        if sentence is None:
            return [0.0] * size
        scores = lexicon_category_scores(sentence, self.res.lexicon)
        wps = float(len(sentence.tokens))
        sixltr = float(sum(1 for t in sentence.tokens if _letter_count(t) > 6))
        return [scores[n] for n in self.res.lexicon.names()] + [wps, sixltr]

    def extract(self, sentence: Sentence, dialog: Dialog) -> FeatureVector:
        """Features for one sentence of an already-substituted dialog."""
        parts: list[float] = []
        prev = previous_sentence(dialog, sentence)
        for family in self.cfg.families:
            if family == "readability":
                parts += list(readability_vector(sentence))
            elif family == "liwc_current":
                parts += self._liwc_block(sentence)
            elif family == "liwc_prev":
                parts += self._liwc_block(prev)
            elif family == "sentiment":
                parts += list(sentiment_buckets(sentence, self.res.polarity))
            elif family == "dac_prev":
                parts.append(1.0 if prev is not None and is_question(prev) else 0.0)
            elif family == "turn_pos":
                turn = dialog.turns[sentence.turn_index]
                parts.append(float(turn_third(sentence.index_in_turn, len(turn.sentences))))
            elif family == "embedding":
                parts += list(average_embedding(sentence, self.res.embeddings, self.res.stopwords))
        return FeatureVector(names=self.names, values=np.asarray(parts), key=sentence.key)

    def extract_dialog(self, dialog: Dialog) -> list[FeatureVector]:
        """Vectors for every kept sentence; applies coreference substitution
        first when the config asks for it."""
        if self.cfg.use_coref:
            dialog = coref_replace(dialog, self.res.pronouns, self.res.stopwords,
                                   self.res.verbs, self.res.dictionary)
        return [self.extract(s, dialog) for s in dialog.kept_sentences()]


def assemble_features(sentence: Sentence, dialog: Dialog, cfg: FeatureConfig,
                      res: FeatureResources) -> FeatureVector:
    """Single-sentence convenience wrapper around FeatureExtractor."""
    extractor = FeatureExtractor(cfg, res)
    if cfg.use_coref:
        dialog = coref_replace(dialog, res.pronouns, res.stopwords, res.verbs, res.dictionary)
        sentence = next(s for s in dialog.sentences() if s.key == sentence.key)
    return extractor.extract(sentence, dialog)
