"""Free-text query categorization.

Two stages: pull weighted keywords out of the text (frequency-ranked
unigrams and bigrams, stopwords dropped, bigrams boosted since category
names are mostly two-word phrases), then match each keyword against the
taxonomy vocabulary by edit distance and aggregate

    score(category) = sum over keywords of weight / (1 + distance)

so several near-miss keywords can outvote a single exact one. The
per-keyword rule stays the plain lowest-distance match.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .corpus import Taxonomy
from .names import match_keyword_to_category

DEFAULT_MAX_KEYWORDS = 12
DEFAULT_MAX_SUGGESTIONS = 5
BIGRAM_BOOST = 1.5

_TOKEN_RE = re.compile(r"[a-z0-9]+")


@lru_cache(maxsize=1)
def stopwords() -> frozenset[str]:
    """The bundled stopword list; frozen so golden outputs stay stable."""
    text = resources.files("expertnet").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip() and not w.startswith("#"))


def extract_keywords(text: str, max_k: int = DEFAULT_MAX_KEYWORDS) -> list[tuple[str, float]]:
    """Top weighted unigrams and bigrams of ``text``.

    Unigram weight is its frequency; a bigram (two adjacent non-stopword
    tokens) weighs frequency * 1.5. Ties order lexicographically. Empty
    or stopword-only text yields an empty list.
    """
    if max_k <= 0:
        return []
    tokens = _TOKEN_RE.findall(text.lower())
    stop = stopwords()

    counts: dict[str, float] = {}
    for tok in tokens:
        if tok not in stop:
            counts[tok] = counts.get(tok, 0.0) + 1.0
    for first, second in zip(tokens, tokens[1:]):
        if first not in stop and second not in stop:
            bigram = f"{first} {second}"
            counts[bigram] = counts.get(bigram, 0.0) + BIGRAM_BOOST

    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:max_k]


@dataclass(frozen=True)
class CategorySuggestion:
    category_id: str
    label: str
    score: float
    rank: int


def suggest_categories(
    text: str,
    taxonomy: Taxonomy,
    max_suggestions: int = DEFAULT_MAX_SUGGESTIONS,
    max_keywords: int = DEFAULT_MAX_KEYWORDS,
) -> list[CategorySuggestion]:
    """Categories ordered best-fit first; empty when no keywords survive."""
    if len(taxonomy) == 0:
        raise ValueError("taxonomy has no categories")
    keywords = extract_keywords(text, max_k=max_keywords)
    if not keywords:
        return []

    scores: dict[str, float] = {}
    for term, weight in keywords:
        category_id, distance = match_keyword_to_category(term, taxonomy)
        scores[category_id] = scores.get(category_id, 0.0) + weight / (1.0 + distance)

    ordered = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    suggestions = []
    for rank, (category_id, score) in enumerate(ordered[:max_suggestions], start=1):
        cat = taxonomy.get(category_id)
        suggestions.append(
            CategorySuggestion(category_id=category_id, label=cat.label, score=score, rank=rank)
        )
    return suggestions
