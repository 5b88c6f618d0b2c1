"""Bundled data files and plain-wordlist loaders.

Wordlist files hold one lowercase word per line; blank lines and lines
starting with '#' are ignored. The polarity lexicon is word<TAB>score with
scores in [-1, 1].
"""
from __future__ import annotations

from importlib import resources as _res
from pathlib import Path

from .errors import ConfigError, ParseError

DICTIONARY_FILE = "dictionary.txt"
VERBS_FILE = "verbs.txt"
STOPWORDS_FILE = "stopwords.txt"
ABBREVIATIONS_FILE = "abbreviations.txt"
CATEGORY_LEXICON_FILE = "categories.dic"
POLARITY_FILE = "polarity.txt"
DEMO_EMBEDDINGS_FILE = "demo_embeddings.txt"
MINICORPUS_DIR = "minicorpus"


def data_path(name: str) -> Path:
    """Absolute path of a bundled data file."""
    path = Path(str(_res.files("argsum") / "data" / name))
    if not path.exists():
        raise ConfigError(f"bundled data file not found: {name}")
    return path


def minicorpus_paths() -> dict[str, Path]:
    """Paths of the bundled synthetic mini corpus (corpus, pyramid, annotations)."""
    base = data_path(MINICORPUS_DIR)
    return {
        "corpus": base / "corpus.jsonl",
        "pyramid": base / "pyramid.jsonl",
        "annotations": base / "annotations.jsonl",
    }


def load_wordlist(path: str | Path) -> set[str]:
    words: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            word = line.strip()
            if not word or word.startswith("#"):
                continue
            if word != word.lower():
                raise ParseError(f"{path}:{lineno}: wordlist entries must be lowercase: {word!r}")
            words.add(word)
    return words


def load_dictionary(path: str | Path | None = None) -> set[str]:
    return load_wordlist(path or data_path(DICTIONARY_FILE))


def load_verbs(path: str | Path | None = None) -> set[str]:
    return load_wordlist(path or data_path(VERBS_FILE))


def load_stopwords(path: str | Path | None = None) -> set[str]:
    return load_wordlist(path or data_path(STOPWORDS_FILE))


def load_abbreviations(path: str | Path | None = None) -> set[str]:
    """Abbreviations that block a sentence split; stored with their trailing dot."""
    words = set()
    with open(path or data_path(ABBREVIATIONS_FILE), encoding="utf-8") as fh:
        for line in fh:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word if word.endswith(".") else word + ".")
    return words


def load_polarity(path: str | Path | None = None) -> dict[str, float]:
    """word -> polarity score in [-1, 1]."""
    scores: dict[str, float] = {}
    src = path or data_path(POLARITY_FILE)
    with open(src, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                word, raw = line.split("\t")
                value = float(raw)
            except ValueError as exc:
                raise ParseError(f"{src}:{lineno}: expected 'word<TAB>score': {line!r}") from exc
            if not -1.0 <= value <= 1.0:
                raise ParseError(f"{src}:{lineno}: polarity {value} outside [-1, 1]")
            scores[word.lower()] = value
    return scores
