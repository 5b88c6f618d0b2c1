"""argsum: find the important argument sentences in two-party debate dialogs.

Pipeline: parse and filter dialog corpora (corpus), derive gold importance
labels from pyramid-style annotations (pyramid), run extractive baselines
(baselines), extract linguistic and contextual features (features), train a
linear max-margin classifier (model), and evaluate everything as an ablation
grid with significance and feature analysis (metrics, ablation). The cli
module wires the same pieces behind the `argsum` command.
"""

__version__ = "0.1.0"

from .corpus import Corpus, Dialog, Sentence, Turn, parse_corpora, parse_corpus
from .errors import ArgsumError, ConfigError, ParseError, ValidationError
from .features import FeatureConfig, FeatureVector
from .metrics import EvalReport, SignificanceResult
from .model import LinearModel, Scaler
from .pyramid import GoldLabel, ScuLabel, SentenceAnnotation

__all__ = [
    "ArgsumError", "ConfigError", "ParseError", "ValidationError",
    "Corpus", "Dialog", "Turn", "Sentence", "parse_corpus", "parse_corpora",
    "ScuLabel", "SentenceAnnotation", "GoldLabel",
    "FeatureConfig", "FeatureVector",
    "LinearModel", "Scaler",
    "EvalReport", "SignificanceResult",
    "__version__",
]
