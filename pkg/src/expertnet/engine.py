"""Search engine assembly: corpus -> graph -> features -> ranked experts.

The Engine owns every moving part the service and CLI need: the loaded
corpus, the resolved persons, the fused social graph, the trained tree,
the vote store, and a small LRU cache of per-category centrality scores.
Votes only ever change the user_rank feature, so cached centralities stay
valid across votes and a fresh tally is folded in at assembly time.

An engine can be built directly from a corpus directory, or from an index
directory previously written by ``build_index`` (same corpus files plus
precomputed persons, occurrences and graph, all byte-deterministic).
"""

from __future__ import annotations

import json
from collections import OrderedDict
from dataclasses import dataclass
from pathlib import Path

from .centrality import (
    CentralityScores,
    FEATURE_NAMES,
    FeatureVector,
    assemble_features,
    DEFAULT_DAMPING,
)
from .corpus import AcademicStatus, Corpus, CorpusError, Publication
from .graph import (
    DEFAULT_ALPHA,
    GraphStats,
    Person,
    Resolution,
    SocialGraph,
    build_coauthor_graph,
    overlay_profile_edges,
    pub_person_ids,
    resolve_persons,
)
from .keywords import CategorySuggestion, suggest_categories
from .names import DEFAULT_MATCH_THRESHOLD
from .ranking import (
    RankedList,
    UnknownPersonError,
    VoteStore,
    apply_vote,
    bootstrap_labels,
    build_training_set,
    rank_experts,
)
from .tree import DecisionTree, train_c45

INDEX_MANIFEST = "manifest.json"
INDEX_PERSONS = "persons.txt"
INDEX_OCCURRENCES = "occurrences.txt"
INDEX_GRAPH = "graph.txt"
INDEX_STATS = "stats.txt"
INDEX_FORMAT = 1
DEFAULT_MODEL_FILE = "model.txt"
DEFAULT_VOTE_LOG = "votes.log"
DEFAULT_CACHE_SIZE = 8


class UnknownCategoryError(KeyError):
    pass


@dataclass
class PersonDetail:
    person_id: str
    name: str
    status: AcademicStatus
    research_interests: tuple[str, ...]
    publications: list[Publication]
    vote_tally: int


@dataclass
class _CategoryStatics:
    """Vote-independent per-category data: centralities and readership."""

    scores: CentralityScores
    pubs_by_person: dict[str, list[Publication]]


def publications_by_person(
    publications: list[Publication], resolution: Resolution, category_id: str
) -> dict[str, list[Publication]]:
    grouped: dict[str, list[Publication]] = {}
    for pub in publications:
        if pub.category_id != category_id:
            continue
        for pid in pub_person_ids(pub, resolution):
            grouped.setdefault(pid, []).append(pub)
    return grouped


class Engine:
    def __init__(
        self,
        corpus: Corpus,
        graph: SocialGraph,
        resolution: Resolution,
        model: DecisionTree | None = None,
        vote_log: str | Path | None = None,
        damping: float = DEFAULT_DAMPING,
        cache_size: int = DEFAULT_CACHE_SIZE,
        full_graph_features: bool = False,
    ):
        self.corpus = corpus
        self.graph = graph
        self.resolution = resolution
        self.model = model
        self.damping = damping
        self.full_graph_features = full_graph_features
        self.votes = VoteStore(vote_log)
        self._cache_size = cache_size
        self._statics: OrderedDict[str, _CategoryStatics] = OrderedDict()
        self._profiles_by_id = {p.profile_id: p for p in corpus.profiles}
        for pid, tally in self.votes.tallies().items():
            person = self.resolution.persons.get(pid)
            if person is not None:
                person.vote_tally = tally

    # -- construction --------------------------------------------------------

    @classmethod
    def from_corpus(
        cls,
        corpus_dir,
        model_path=None,
        alpha: float = DEFAULT_ALPHA,
        damping: float = DEFAULT_DAMPING,
        strict: bool = True,
        match_threshold: float = DEFAULT_MATCH_THRESHOLD,
        vote_log=None,
        cache_size: int = DEFAULT_CACHE_SIZE,
        full_graph_features: bool = False,
    ) -> "Engine":
        corpus = Corpus.load(corpus_dir, strict=strict)
        corpus.validate(strict=strict)
        resolution = resolve_persons(corpus.publications, corpus.profiles, match_threshold)
        graph = build_coauthor_graph(corpus.publications, resolution, alpha=alpha)
        overlay_profile_edges(graph, corpus.edges, resolution)
        model = None
        if model_path is not None and Path(model_path).exists():
            model = DecisionTree.from_text(Path(model_path).read_text(encoding="utf-8"))
        return cls(
            corpus,
            graph,
            resolution,
            model=model,
            vote_log=vote_log,
            damping=damping,
            cache_size=cache_size,
            full_graph_features=full_graph_features,
        )

    @classmethod
    def from_index(
        cls,
        index_dir,
        model_path=None,
        damping: float = DEFAULT_DAMPING,
        vote_log=None,
        cache_size: int = DEFAULT_CACHE_SIZE,
        full_graph_features: bool = False,
    ) -> "Engine":
        d = Path(index_dir)
        manifest = json.loads((d / INDEX_MANIFEST).read_text(encoding="utf-8"))
        if manifest.get("format") != INDEX_FORMAT:
            raise CorpusError(d / INDEX_MANIFEST, None,
                              f"unsupported index format {manifest.get('format')!r}")
        corpus = Corpus.load(d, strict=True)

        persons: dict[str, Person] = {}
        for line in (d / INDEX_PERSONS).read_text(encoding="utf-8").splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            pid, name, profile_id, status, readers = line.split("|")
            persons[pid] = Person(
                person_id=pid,
                display_name=name,
                profile_id=profile_id or None,
                academic_status=AcademicStatus.parse(status),
                total_reader_count=int(readers),
            )
        occurrences: dict[tuple[str, int], str] = {}
        for line in (d / INDEX_OCCURRENCES).read_text(encoding="utf-8").splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            pub_id, idx, pid = line.split(",")
            occurrences[(pub_id, int(idx))] = pid
        profile_to_person = {
            p.profile_id: p.person_id for p in persons.values() if p.profile_id
        }
        resolution = Resolution(persons, occurrences, profile_to_person)
        graph = SocialGraph.from_edge_list(
            (d / INDEX_GRAPH).read_text(encoding="utf-8"),
            alpha=manifest["alpha"],
            nodes=sorted(persons),
        )
        if model_path is None and (d / DEFAULT_MODEL_FILE).exists():
            model_path = d / DEFAULT_MODEL_FILE
        model = None
        if model_path is not None and Path(model_path).exists():
            model = DecisionTree.from_text(Path(model_path).read_text(encoding="utf-8"))
        if vote_log is None:
            vote_log = d / DEFAULT_VOTE_LOG
        return cls(
            corpus,
            graph,
            resolution,
            model=model,
            vote_log=vote_log,
            damping=damping,
            cache_size=cache_size,
            full_graph_features=full_graph_features,
        )

    # -- features ------------------------------------------------------------

    def categories(self) -> list[str]:
        return [c.category_id for c in self.corpus.taxonomy]

    def _require_category(self, category_id: str) -> None:
        if self.corpus.taxonomy.get(category_id) is None:
            raise UnknownCategoryError(category_id)

    def _category_statics(self, category_id: str) -> _CategoryStatics:
        cached = self._statics.get(category_id)
        if cached is not None:
            self._statics.move_to_end(category_id)
            return cached
        pubs_by_person = publications_by_person(
            self.corpus.publications, self.resolution, category_id
        )
        if self.full_graph_features:
            graph = self.graph
        else:
            graph = self.graph.subgraph(set(pubs_by_person))
        statics = _CategoryStatics(
            scores=CentralityScores.of(graph, damping=self.damping),
            pubs_by_person=pubs_by_person,
        )
        if self._cache_size > 0:
            self._statics[category_id] = statics
            while len(self._statics) > self._cache_size:
                self._statics.popitem(last=False)
        return statics

    def category_features(self, category_id: str) -> dict[str, FeatureVector]:
        """Current feature vectors for the category (votes folded in live)."""
        self._require_category(category_id)
        statics = self._category_statics(category_id)
        return {
            pid: assemble_features(
                pid,
                category_id,
                statics.scores,
                pubs,
                self.corpus.journal_ranks,
                self.votes.tally(pid),
            )
            for pid, pubs in sorted(statics.pubs_by_person.items())
        }

    # -- queries -------------------------------------------------------------

    def categorize(self, text: str, max_suggestions: int = 5) -> list[CategorySuggestion]:
        return suggest_categories(text, self.corpus.taxonomy, max_suggestions)

    def experts(
        self,
        category_id: str,
        statuses: set[AcademicStatus] | None = None,
        k: int = 20,
    ) -> list[tuple[int, Person, float]]:
        """Ranked (rank, person, score) rows for one category."""
        if self.model is None:
            raise RuntimeError("no model loaded; train or pass a model file first")
        features = self.category_features(category_id)
        ranked: RankedList = rank_experts(
            features, self.resolution.persons, self.model, statuses, k
        )
        return [(e.rank, self.resolution.persons[e.person_id], e.score) for e in ranked]

    def person(self, person_id: str) -> PersonDetail:
        person = self.resolution.persons.get(person_id)
        if person is None:
            raise UnknownPersonError(person_id)
        pub_ids = set(self.resolution.publications_of(person_id))
        pubs = [p for p in self.corpus.publications if p.pub_id in pub_ids]
        interests: tuple[str, ...] = ()
        if person.profile_id is not None:
            profile = self._profiles_by_id.get(person.profile_id)
            if profile is not None:
                interests = profile.research_interests
        return PersonDetail(
            person_id=person.person_id,
            name=person.display_name,
            status=person.academic_status,
            research_interests=interests,
            publications=pubs,
            vote_tally=self.votes.tally(person_id),
        )

    def vote(self, voter_token: str, person_id: str, delta: int) -> int:
        return apply_vote(self.votes, self.resolution.persons, voter_token, person_id, delta)

    def stats(self) -> GraphStats:
        return self.graph.stats()

    # -- training ------------------------------------------------------------

    def train(self, min_leaf: int = 2, max_depth: int = 6) -> DecisionTree:
        """Fit the tree from corpus labels, or bootstrap labels if absent."""
        features_by_category = {cid: self.category_features(cid) for cid in self.categories()}
        labels = self.corpus.labels or bootstrap_labels(features_by_category)
        dataset = build_training_set(labels, features_by_category)
        self.model = train_c45(dataset, FEATURE_NAMES, min_leaf=min_leaf, max_depth=max_depth)
        return self.model


# ---------------------------------------------------------------------------
# index building
# ---------------------------------------------------------------------------


def build_index(
    corpus_dir,
    out_dir,
    alpha: float = DEFAULT_ALPHA,
    match_threshold: float = DEFAULT_MATCH_THRESHOLD,
    strict: bool = True,
) -> GraphStats:
    """Resolve, build the fused graph, and write a deterministic index dir.

    The index holds normalized copies of the corpus files plus persons,
    author occurrences, the graph edge list and a manifest; identical
    corpus input always produces byte-identical index files.
    """
    corpus = Corpus.load(corpus_dir, strict=strict)
    corpus.validate(strict=strict)
    resolution = resolve_persons(corpus.publications, corpus.profiles, match_threshold)
    graph = build_coauthor_graph(corpus.publications, resolution, alpha=alpha)
    overlay_profile_edges(graph, corpus.edges, resolution)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    corpus.dump(out)

    person_lines = []
    for person in resolution.persons_sorted():
        if "|" in person.display_name or "\n" in person.display_name:
            raise CorpusError(out / INDEX_PERSONS, None,
                              f"display name {person.display_name!r} cannot be indexed")
        person_lines.append(
            f"{person.person_id}|{person.display_name}|{person.profile_id or ''}|"
            f"{person.academic_status.value}|{person.total_reader_count}"
        )
    (out / INDEX_PERSONS).write_text("".join(l + "\n" for l in person_lines), encoding="utf-8")

    occ_lines = [
        f"{pub_id},{idx},{pid}"
        for (pub_id, idx), pid in sorted(resolution.occurrences.items())
    ]
    (out / INDEX_OCCURRENCES).write_text("".join(l + "\n" for l in occ_lines), encoding="utf-8")

    (out / INDEX_GRAPH).write_text(graph.to_edge_list(), encoding="utf-8")

    stats = graph.stats()
    (out / INDEX_STATS).write_text(stats.render() + "\n", encoding="utf-8")

    manifest = {"format": INDEX_FORMAT, "alpha": alpha, "match_threshold": match_threshold}
    (out / INDEX_MANIFEST).write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    return stats
