"""Corpus file parsing, validation and serialization.

The corpus is a directory of UTF-8 text files, one record per line,
``#``-prefixed comment lines and blank lines ignored:

* profiles:        ``profile_id|display_name|status|source|interest;...``
* publications:    ``pub_id|title|author;...|journal|category_id|reader_count|status:count;...``
  (journal and category_id may be empty)
* profile edges:   ``id_a,id_b``
* journal ranks:   ``journal_name,rank``        (rank in [0,1])
* taxonomy:        ``category_id|label|word;...``
* training labels: ``person_ref,category_id,0|1``

Loaders run in strict mode by default (malformed line -> CorpusError with
the line number) or lenient mode (skip the line, log a warning). A loaded
collection is plain immutable-by-convention data and safe to share.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterator

log = logging.getLogger(__name__)

# Machine identifiers (profile_id, pub_id) must stay safe inside the
# comma/pipe-delimited files and in URLs.
_ID_RE = re.compile(r"^[A-Za-z0-9_.:-]+$")

# Default file names inside a corpus directory.
CORPUS_FILES = {
    "profiles": "profiles.txt",
    "publications": "publications.txt",
    "edges": "profile_edges.txt",
    "journal_ranks": "journal_ranks.txt",
    "taxonomy": "taxonomy.txt",
    "labels": "training_labels.txt",
}


class CorpusError(ValueError):
    """Parse or validation failure, annotated with file and line number."""

    def __init__(self, path, line_no: int | None, message: str):
        self.path = str(path)
        self.line_no = line_no
        where = f"{path}:{line_no}" if line_no is not None else str(path)
        super().__init__(f"{where}: {message}")


class AcademicStatus(str, Enum):
    """The four statuses the search UI can filter on."""

    professor = "professor"
    postdoc = "postdoc"
    phd_student = "phd_student"
    other = "other"

    @classmethod
    def parse(cls, token: str) -> "AcademicStatus":
        try:
            return cls(token)
        except ValueError:
            raise ValueError(
                f"unknown academic status {token!r} "
                f"(expected one of {', '.join(s.value for s in cls)})"
            ) from None


class ProfileSource(str, Enum):
    mendeley = "mendeley"
    academia = "academia"


@dataclass(frozen=True)
class Profile:
    profile_id: str
    display_name: str
    academic_status: AcademicStatus
    research_interests: tuple[str, ...]
    source: ProfileSource


@dataclass(frozen=True)
class Publication:
    pub_id: str
    title: str
    author_names: tuple[str, ...]
    journal: str | None
    category_id: str | None
    reader_count: int
    reader_status_histogram: dict[AcademicStatus, int] = field(default_factory=dict)


@dataclass(frozen=True, order=True)
class ProfileEdge:
    """Unordered profile friendship; endpoints stored sorted, a < b."""

    a: str
    b: str

    @classmethod
    def of(cls, x: str, y: str) -> "ProfileEdge":
        if x == y:
            raise ValueError(f"self-loop edge on {x!r}")
        return cls(min(x, y), max(x, y))


@dataclass(frozen=True)
class Category:
    category_id: str
    label: str
    vocabulary: tuple[str, ...]


@dataclass(frozen=True)
class Taxonomy:
    categories: tuple[Category, ...]

    def __iter__(self) -> Iterator[Category]:
        return iter(self.categories)

    def __len__(self) -> int:
        return len(self.categories)

    def get(self, category_id: str) -> Category | None:
        for cat in self.categories:
            if cat.category_id == category_id:
                return cat
        return None


class JournalRanks:
    """Journal name (normalized) -> rank in [0,1]; unknown journals rank 0."""

    def __init__(self, ranks: dict[str, float] | None = None):
        self._ranks = dict(ranks or {})

    @staticmethod
    def normalize(journal: str) -> str:
        return " ".join(journal.lower().replace(".", " ").split())

    def rank_of(self, journal: str) -> float:
        return self._ranks.get(self.normalize(journal), 0.0)

    def items(self):
        return sorted(self._ranks.items())

    def __len__(self) -> int:
        return len(self._ranks)

    def __eq__(self, other) -> bool:
        return isinstance(other, JournalRanks) and self._ranks == other._ranks


@dataclass(frozen=True)
class TrainingLabel:
    person_ref: str
    category_id: str
    is_expert: bool


# ---------------------------------------------------------------------------
# line-level plumbing
# ---------------------------------------------------------------------------


def _records(path) -> Iterator[tuple[int, str]]:
    """Yield (line_no, stripped line) skipping comments and blank lines."""
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield line_no, line


def _split_list(text: str, sep: str = ";") -> tuple[str, ...]:
    if not text:
        return ()
    return tuple(part.strip() for part in text.split(sep))


class _Loader:
    """Shared strict/lenient error handling for the per-file loaders."""

    def __init__(self, path, strict: bool):
        self.path = path
        self.strict = strict
        self.skipped = 0

    def fail(self, line_no: int | None, message: str) -> None:
        if self.strict:
            raise CorpusError(self.path, line_no, message)
        self.skipped += 1
        log.warning("%s:%s: %s (line skipped)", self.path, line_no, message)


# ---------------------------------------------------------------------------
# loaders
# ---------------------------------------------------------------------------


def load_profiles(path, strict: bool = True) -> list[Profile]:
    """Parse a profiles file; duplicate profile_ids are an error."""
    loader = _Loader(path, strict)
    profiles: list[Profile] = []
    seen: dict[str, int] = {}
    for line_no, line in _records(path):
        parts = line.split("|")
        if len(parts) != 5:
            loader.fail(line_no, f"expected 5 '|'-separated fields, got {len(parts)}")
            continue
        pid, name, status_tok, source_tok, interests = (p.strip() for p in parts)
        if not _ID_RE.match(pid):
            loader.fail(line_no, f"profile_id {pid!r} must match [A-Za-z0-9_.:-]+")
            continue
        if not name:
            loader.fail(line_no, "empty display_name")
            continue
        if pid in seen:
            loader.fail(line_no, f"duplicate profile_id {pid!r} (first seen on line {seen[pid]})")
            continue
        try:
            status = AcademicStatus.parse(status_tok)
            source = ProfileSource(source_tok)
        except ValueError as exc:
            loader.fail(line_no, str(exc))
            continue
        seen[pid] = line_no
        profiles.append(Profile(pid, name, status, _split_list(interests), source))
    return profiles


def _parse_histogram(text: str) -> dict[AcademicStatus, int]:
    hist: dict[AcademicStatus, int] = {}
    for entry in _split_list(text):
        status_tok, _, count_tok = entry.partition(":")
        status = AcademicStatus.parse(status_tok.strip())
        count = int(count_tok)
        if count < 0:
            raise ValueError(f"negative reader count {count} for status {status.value}")
        hist[status] = count
    return hist


def load_publications(path, strict: bool = True) -> list[Publication]:
    loader = _Loader(path, strict)
    pubs: list[Publication] = []
    seen: dict[str, int] = {}
    for line_no, line in _records(path):
        parts = line.split("|")
        if len(parts) != 7:
            loader.fail(line_no, f"expected 7 '|'-separated fields, got {len(parts)}")
            continue
        pub_id, title, authors_tok, journal, category_id, readers_tok, hist_tok = (
            p.strip() for p in parts
        )
        if not _ID_RE.match(pub_id):
            loader.fail(line_no, f"pub_id {pub_id!r} must match [A-Za-z0-9_.:-]+")
            continue
        if pub_id in seen:
            loader.fail(line_no, f"duplicate pub_id {pub_id!r} (first seen on line {seen[pub_id]})")
            continue
        authors = tuple(a for a in _split_list(authors_tok) if a)
        if not authors:
            loader.fail(line_no, "publication needs at least one author")
            continue
        try:
            reader_count = int(readers_tok)
            if reader_count < 0:
                raise ValueError(f"reader_count must be >= 0, got {reader_count}")
            histogram = _parse_histogram(hist_tok)
        except ValueError as exc:
            loader.fail(line_no, str(exc))
            continue
        seen[pub_id] = line_no
        pubs.append(
            Publication(
                pub_id=pub_id,
                title=title,
                author_names=authors,
                journal=journal or None,
                category_id=category_id or None,
                reader_count=reader_count,
                reader_status_histogram=histogram,
            )
        )
    return pubs


def load_profile_edges(path, strict: bool = True) -> list[ProfileEdge]:
    """Parse edges; self-loops rejected, duplicates/reversals collapsed.

    Returns the canonical sorted edge list, independent of input order.
    """
    loader = _Loader(path, strict)
    edges: set[ProfileEdge] = set()
    for line_no, line in _records(path):
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2 or not all(parts):
            loader.fail(line_no, "expected 'id_a,id_b'")
            continue
        try:
            edges.add(ProfileEdge.of(parts[0], parts[1]))
        except ValueError as exc:
            loader.fail(line_no, str(exc))
    return sorted(edges)


def load_journal_ranks(path, strict: bool = True) -> JournalRanks:
    loader = _Loader(path, strict)
    ranks: dict[str, float] = {}
    for line_no, line in _records(path):
        name, sep, rank_tok = line.rpartition(",")
        if not sep or not name.strip():
            loader.fail(line_no, "expected 'journal_name,rank'")
            continue
        try:
            rank = float(rank_tok)
        except ValueError:
            loader.fail(line_no, f"rank is not a number: {rank_tok!r}")
            continue
        if not 0.0 <= rank <= 1.0:
            loader.fail(line_no, f"rank {rank} outside [0,1]")
            continue
        ranks[JournalRanks.normalize(name.strip())] = rank
    return JournalRanks(ranks)


def load_taxonomy(path, strict: bool = True) -> Taxonomy:
    loader = _Loader(path, strict)
    cats: list[Category] = []
    seen: dict[str, int] = {}
    for line_no, line in _records(path):
        parts = line.split("|")
        if len(parts) != 3:
            loader.fail(line_no, f"expected 3 '|'-separated fields, got {len(parts)}")
            continue
        cat_id, label, vocab_tok = (p.strip() for p in parts)
        vocabulary = tuple(w for w in _split_list(vocab_tok) if w)
        if not _ID_RE.match(cat_id):
            loader.fail(line_no, f"category_id {cat_id!r} must match [A-Za-z0-9_.:-]+")
            continue
        if not label:
            loader.fail(line_no, "label must be non-empty")
            continue
        if not vocabulary:
            loader.fail(line_no, f"category {cat_id!r} has an empty vocabulary")
            continue
        if cat_id in seen:
            loader.fail(line_no, f"duplicate category_id {cat_id!r} (first seen on line {seen[cat_id]})")
            continue
        seen[cat_id] = line_no
        cats.append(Category(cat_id, label, vocabulary))
    if not cats:
        raise CorpusError(path, None, "taxonomy is empty; search needs at least one category")
    return Taxonomy(tuple(cats))


def load_training_labels(path, strict: bool = True) -> list[TrainingLabel]:
    loader = _Loader(path, strict)
    labels: list[TrainingLabel] = []
    for line_no, line in _records(path):
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3 or parts[2] not in ("0", "1"):
            loader.fail(line_no, "expected 'person_ref,category_id,0|1'")
            continue
        if not parts[0] or not parts[1]:
            loader.fail(line_no, "person_ref and category_id must be non-empty")
            continue
        labels.append(TrainingLabel(parts[0], parts[1], parts[2] == "1"))
    return labels


# ---------------------------------------------------------------------------
# serialization (inverse of the loaders; used for index dirs and goldens)
# ---------------------------------------------------------------------------


def _check_clean(value: str, *banned: str) -> str:
    for ch in banned:
        if ch in value:
            raise ValueError(f"value {value!r} may not contain {ch!r}")
    return value


def dump_profiles(profiles: list[Profile]) -> str:
    lines = []
    for p in profiles:
        interests = ";".join(_check_clean(i, "|", ";", "\n") for i in p.research_interests)
        lines.append(
            f"{_check_clean(p.profile_id, '|', chr(10))}|"
            f"{_check_clean(p.display_name, '|', chr(10))}|"
            f"{p.academic_status.value}|{p.source.value}|{interests}"
        )
    return "".join(line + "\n" for line in lines)


def dump_publications(pubs: list[Publication]) -> str:
    lines = []
    for pub in pubs:
        authors = ";".join(_check_clean(a, "|", ";", "\n") for a in pub.author_names)
        hist = ";".join(
            f"{status.value}:{pub.reader_status_histogram[status]}"
            for status in AcademicStatus
            if status in pub.reader_status_histogram
        )
        lines.append(
            f"{_check_clean(pub.pub_id, '|', chr(10))}|"
            f"{_check_clean(pub.title, '|', chr(10))}|{authors}|"
            f"{_check_clean(pub.journal or '', '|', chr(10))}|"
            f"{_check_clean(pub.category_id or '', '|', chr(10))}|"
            f"{pub.reader_count}|{hist}"
        )
    return "".join(line + "\n" for line in lines)


def dump_profile_edges(edges: list[ProfileEdge]) -> str:
    return "".join(f"{e.a},{e.b}\n" for e in sorted(edges))


def dump_journal_ranks(ranks: JournalRanks) -> str:
    return "".join(f"{name},{rank!r}\n" for name, rank in ranks.items())


def dump_taxonomy(taxonomy: Taxonomy) -> str:
    lines = []
    for cat in taxonomy:
        vocab = ";".join(_check_clean(w, "|", ";", "\n") for w in cat.vocabulary)
        lines.append(f"{cat.category_id}|{_check_clean(cat.label, '|', chr(10))}|{vocab}")
    return "".join(line + "\n" for line in lines)


def dump_training_labels(labels: list[TrainingLabel]) -> str:
    return "".join(
        f"{lab.person_ref},{lab.category_id},{1 if lab.is_expert else 0}\n" for lab in labels
    )


# ---------------------------------------------------------------------------
# cross-file validation
# ---------------------------------------------------------------------------


@dataclass
class CorpusReport:
    profile_count: int
    publication_count: int
    edge_count: int
    unknown_category_pubs: list[str]
    dangling_endpoints: list[tuple[str, str]]  # (edge "a,b", missing profile id)

    @property
    def is_clean(self) -> bool:
        return not self.unknown_category_pubs and not self.dangling_endpoints

    def render(self) -> str:
        lines = [
            f"profiles: {self.profile_count}",
            f"publications: {self.publication_count}",
            f"profile edges: {self.edge_count}",
            f"publications with unknown category_id: {len(self.unknown_category_pubs)}",
            f"dangling edge endpoints: {len(self.dangling_endpoints)}",
        ]
        for pub_id in self.unknown_category_pubs:
            lines.append(f"  unknown category in publication {pub_id}")
        for edge, missing in self.dangling_endpoints:
            lines.append(f"  edge {edge} references unknown profile {missing}")
        return "\n".join(lines)


def validate_corpus(
    profiles: list[Profile],
    publications: list[Publication],
    edges: list[ProfileEdge],
    taxonomy: Taxonomy,
    strict: bool = False,
) -> CorpusReport:
    """Cross-reference check; in strict mode any issue raises CorpusError."""
    profile_ids = {p.profile_id for p in profiles}
    category_ids = {c.category_id for c in taxonomy}

    unknown = [
        pub.pub_id
        for pub in publications
        if pub.category_id is not None and pub.category_id not in category_ids
    ]
    dangling = []
    for edge in edges:
        for endpoint in (edge.a, edge.b):
            if endpoint not in profile_ids:
                dangling.append((f"{edge.a},{edge.b}", endpoint))

    report = CorpusReport(
        profile_count=len(profiles),
        publication_count=len(publications),
        edge_count=len(edges),
        unknown_category_pubs=unknown,
        dangling_endpoints=dangling,
    )
    if strict and not report.is_clean:
        raise CorpusError("<corpus>", None, "validation failed:\n" + report.render())
    return report


# ---------------------------------------------------------------------------
# whole-corpus convenience
# ---------------------------------------------------------------------------


@dataclass
class Corpus:
    """Everything loaded from one corpus directory."""

    profiles: list[Profile]
    publications: list[Publication]
    edges: list[ProfileEdge]
    journal_ranks: JournalRanks
    taxonomy: Taxonomy
    labels: list[TrainingLabel]

    @classmethod
    def load(cls, corpus_dir, strict: bool = True) -> "Corpus":
        d = Path(corpus_dir)
        if not d.is_dir():
            raise CorpusError(corpus_dir, None, "corpus directory does not exist")
        labels_path = d / CORPUS_FILES["labels"]
        return cls(
            profiles=load_profiles(d / CORPUS_FILES["profiles"], strict),
            publications=load_publications(d / CORPUS_FILES["publications"], strict),
            edges=load_profile_edges(d / CORPUS_FILES["edges"], strict),
            journal_ranks=load_journal_ranks(d / CORPUS_FILES["journal_ranks"], strict),
            taxonomy=load_taxonomy(d / CORPUS_FILES["taxonomy"], strict),
            labels=load_training_labels(labels_path, strict) if labels_path.exists() else [],
        )

    def dump(self, out_dir) -> None:
        d = Path(out_dir)
        d.mkdir(parents=True, exist_ok=True)
        (d / CORPUS_FILES["profiles"]).write_text(dump_profiles(self.profiles), encoding="utf-8")
        (d / CORPUS_FILES["publications"]).write_text(
            dump_publications(self.publications), encoding="utf-8"
        )
        (d / CORPUS_FILES["edges"]).write_text(dump_profile_edges(self.edges), encoding="utf-8")
        (d / CORPUS_FILES["journal_ranks"]).write_text(
            dump_journal_ranks(self.journal_ranks), encoding="utf-8"
        )
        (d / CORPUS_FILES["taxonomy"]).write_text(dump_taxonomy(self.taxonomy), encoding="utf-8")
        (d / CORPUS_FILES["labels"]).write_text(dump_training_labels(self.labels), encoding="utf-8")

    def validate(self, strict: bool = False) -> CorpusReport:
        return validate_corpus(self.profiles, self.publications, self.edges, self.taxonomy, strict)
