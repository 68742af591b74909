"""Edit-distance name matching.

Two matching procedures are built on top of plain Levenshtein distance:

* author -> profile resolution, which links a publication author name to
  the closest user profile and refuses to link at all when two or more
  profiles are equally close;
* keyword -> category selection, which picks the taxonomy category owning
  the vocabulary word closest to a query keyword.

All distances are computed on normalized strings (see ``normalize_name``).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

# Distance reported when there were no candidates to measure against.
NO_CANDIDATE_DISTANCE = sys.maxsize

# A unique best match is still rejected when distance / max(len) exceeds
# this; at corpus scale an unbounded minimum links unrelated names.
DEFAULT_MATCH_THRESHOLD = 0.34


def levenshtein(a: str, b: str) -> int:
    """Minimal number of single-character edits turning ``a`` into ``b``.

    Classic dynamic programming over two rows; O(len(a) * len(b)) time,
    O(min(len)) memory. Symmetric, zero iff the strings are equal.
    """
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a  # keep the row as short as possible
    if not b:
        return len(a)

    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            cur.append(min(prev[j] + 1,        # deletion
                           cur[j - 1] + 1,     # insertion
                           prev[j - 1] + cost))  # substitution / keep
        prev = cur
    return prev[-1]


def normalize_name(s: str) -> str:
    """Canonical form used for every distance computation.

    Lowercase, periods removed, whitespace runs collapsed to single
    spaces, leading/trailing whitespace stripped.
    """
    return " ".join(s.lower().replace(".", " ").split())


@dataclass(frozen=True)
class MatchResult:
    """Outcome of resolving one name against a candidate set.

    ``matched_id`` is set only when a unique closest candidate exists and
    passes the acceptance threshold. ``distance`` is the minimum distance
    over candidates (``NO_CANDIDATE_DISTANCE`` when there were none).
    """

    matched_id: str | None
    distance: int
    discarded_for_tie: bool


def match_author_to_profile(
    author_name: str,
    profiles: Sequence,
    threshold: float = DEFAULT_MATCH_THRESHOLD,
) -> MatchResult:
    """Resolve an author name against profiles by display-name distance.

    The unique minimizer wins; two or more candidates at the minimal
    distance discard the connection entirely. ``profiles`` may be any
    sequence of objects with ``profile_id`` and ``display_name``.
    """
    name = normalize_name(author_name)
    best_d = None
    best_ids: list[str] = []
    best_len = 0
    for p in profiles:
        cand = normalize_name(p.display_name)
        d = levenshtein(name, cand)
        if best_d is None or d < best_d:
            best_d = d
            best_ids = [p.profile_id]
            best_len = max(len(name), len(cand))
        elif d == best_d:
            best_ids.append(p.profile_id)

    if best_d is None:
        return MatchResult(None, NO_CANDIDATE_DISTANCE, False)
    if len(best_ids) > 1:
        return MatchResult(None, best_d, True)
    # Unique minimum: accept only below the normalized-distance threshold.
    if best_len > 0 and best_d / best_len > threshold:
        return MatchResult(None, best_d, False)
    return MatchResult(best_ids[0], best_d, False)


def match_keyword_to_category(keyword: str, taxonomy: Iterable) -> tuple[str, int]:
    """Pick the category whose vocabulary word is closest to ``keyword``.

    Scans every vocabulary word of every category; ties across categories
    go to the lexicographically smallest category_id. ``taxonomy`` is any
    iterable of objects with ``category_id`` and ``vocabulary``.
    Raises ValueError on an empty taxonomy.
    """
    key = normalize_name(keyword)
    best: tuple[int, str] | None = None
    for cat in taxonomy:
        for word in cat.vocabulary:
            d = levenshtein(key, normalize_name(word))
            entry = (d, cat.category_id)
            if best is None or entry < best:
                best = entry
    if best is None:
        raise ValueError("taxonomy has no categories")
    return best[1], best[0]
