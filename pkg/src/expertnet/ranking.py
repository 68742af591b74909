"""Ranked expert retrieval and user-vote feedback.

Votes are +/-1 per (voter, person); a voter's new vote on the same person
replaces the old one. The live tally feeds ranking twice: as the
``user_rank`` feature the tree may split on, and as the first tie-break
between equal scores, so a fresh vote always has a visible effect.

The vote log is an append-only ``voter_token,person_id,delta,unix_ts``
text file replayed at startup, which is all the durability a demo-scale
deployment needs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from pathlib import Path

from .centrality import FeatureVector
from .corpus import AcademicStatus, TrainingLabel
from .graph import Person
from .tree import DecisionTree

VALID_DELTAS = (1, -1)

BOOTSTRAP_EXPERT_FRACTION = 0.10


class UnknownPersonError(KeyError):
    pass


@dataclass(frozen=True)
class VoteRecord:
    voter_token: str
    person_id: str
    delta: int
    timestamp: int


class VoteStore:
    """Replaceable +/-1 votes with an append-only durable log."""

    def __init__(self, log_path: str | Path | None = None):
        self._path = Path(log_path) if log_path else None
        self._log: list[VoteRecord] = []
        self._live: dict[tuple[str, str], int] = {}
        self._tally: dict[str, int] = {}
        if self._path is not None and self._path.exists():
            self._replay()

    def _replay(self) -> None:
        for line in self._path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            voter, person, delta, ts = line.split(",")
            self._apply(VoteRecord(voter, person, int(delta), int(ts)), persist=False)

    def _apply(self, record: VoteRecord, persist: bool) -> int:
        key = (record.voter_token, record.person_id)
        previous = self._live.get(key, 0)
        self._live[key] = record.delta
        self._tally[record.person_id] = (
            self._tally.get(record.person_id, 0) - previous + record.delta
        )
        self._log.append(record)
        if persist and self._path is not None:
            with open(self._path, "a", encoding="utf-8") as fh:
                fh.write(
                    f"{record.voter_token},{record.person_id},{record.delta},{record.timestamp}\n"
                )
                fh.flush()
        return self._tally[record.person_id]

    def apply(self, voter_token: str, person_id: str, delta: int,
              timestamp: int | None = None) -> int:
        """Record a vote and return the person's new tally."""
        if delta not in VALID_DELTAS:
            raise ValueError(f"delta must be +1 or -1, got {delta}")
        if not voter_token or any(ch in voter_token for ch in ",\n"):
            raise ValueError("voter_token must be non-empty and free of ',' and newlines")
        ts = int(time.time()) if timestamp is None else timestamp
        return self._apply(VoteRecord(voter_token, person_id, delta, ts), persist=True)

    def tally(self, person_id: str) -> int:
        return self._tally.get(person_id, 0)

    def tallies(self) -> dict[str, int]:
        return dict(self._tally)

    def vote_count(self) -> int:
        return len(self._log)


def apply_vote(store: VoteStore, persons: dict[str, Person], voter_token: str,
               person_id: str, delta: int) -> int:
    """Vote with person-existence checking; keeps Person.vote_tally in sync."""
    person = persons.get(person_id)
    if person is None:
        raise UnknownPersonError(person_id)
    tally = store.apply(voter_token, person_id, delta)
    person.vote_tally = tally
    return tally


# ---------------------------------------------------------------------------
# ranked retrieval
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RankedEntry:
    person_id: str
    score: float
    rank: int


@dataclass(frozen=True)
class RankedList:
    entries: tuple[RankedEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def rank_experts(
    features: dict[str, FeatureVector],
    persons: dict[str, Person],
    model: DecisionTree,
    status_filter: set[AcademicStatus] | None = None,
    k: int = 20,
) -> RankedList:
    """Score category members with the tree and order them.

    Empty ``status_filter`` means no filtering. Ties on score break by
    user_rank, then reader_count, then pagerank (all descending), then
    person_id, so repeated calls give identical lists.
    """
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    scored = []
    for pid in sorted(features):
        person = persons.get(pid)
        if person is None:
            continue
        if status_filter and person.academic_status not in status_filter:
            continue
        fv = features[pid]
        scored.append((model.score(fv.as_dict()), fv))
    scored.sort(
        key=lambda sf: (-sf[0], -sf[1].user_rank, -sf[1].reader_count,
                        -sf[1].pagerank, sf[1].person_id)
    )
    entries = tuple(
        RankedEntry(fv.person_id, score, rank)
        for rank, (score, fv) in enumerate(scored[:k], start=1)
    )
    return RankedList(entries)


# ---------------------------------------------------------------------------
# training helpers
# ---------------------------------------------------------------------------


def build_training_set(
    labels: list[TrainingLabel],
    features_by_category: dict[str, dict[str, FeatureVector]],
) -> list[tuple[dict[str, float], bool]]:
    """Labels -> (feature dict, label) rows; unresolvable refs are an error."""
    rows = []
    for lab in labels:
        per_category = features_by_category.get(lab.category_id)
        if per_category is None:
            raise ValueError(f"training label references unknown category {lab.category_id!r}")
        fv = per_category.get(lab.person_ref)
        if fv is None:
            raise ValueError(
                f"training label references {lab.person_ref!r}, who has no "
                f"publications in category {lab.category_id!r}"
            )
        rows.append((fv.as_dict(), lab.is_expert))
    return rows


def bootstrap_labels(
    features_by_category: dict[str, dict[str, FeatureVector]],
    expert_fraction: float = BOOTSTRAP_EXPERT_FRACTION,
) -> list[TrainingLabel]:
    """Demo labels when no file is given: top 10% readers per category."""
    labels: list[TrainingLabel] = []
    for category_id in sorted(features_by_category):
        members = features_by_category[category_id]
        ordered = sorted(members.values(), key=lambda fv: (-fv.reader_count, fv.person_id))
        cutoff = max(1, math.ceil(expert_fraction * len(ordered))) if ordered else 0
        for i, fv in enumerate(ordered):
            labels.append(TrainingLabel(fv.person_id, category_id, i < cutoff))
    return labels
