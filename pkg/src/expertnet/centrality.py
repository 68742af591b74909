"""Graph features: weighted PageRank, betweenness, harmonic closeness.

All three run on the undirected weighted graph. PageRank treats each edge
as bidirectional with weight-proportional transition probabilities. The
two distance-based measures use edge length 1/weight, so a strong
collaboration is a short hop (``lengths="unit"`` ignores weights).

Everything iterates nodes in sorted order and accumulates in a fixed
order, so results depend only on graph content, never on construction
order; golden files stay stable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .corpus import JournalRanks, Publication
from .graph import Resolution, SocialGraph, pub_person_ids

# Two float path sums within this are the same shortest-path length.
LENGTH_EPS = 1e-12

DEFAULT_DAMPING = 0.85
DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 100

# Canonical feature order for training; doubles as the tie-break order
# between equally good splits, so readership (the primary crowd signal)
# leads. The feature-dump column order below is fixed independently.
FEATURE_NAMES = (
    "reader_count",
    "pagerank",
    "betweenness",
    "closeness",
    "journal_rank",
    "user_rank",
)


def pagerank(
    graph: SocialGraph,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> dict[str, float]:
    """Power iteration; isolated nodes redistribute uniformly.

    Transition probability u->v is weight(u,v) / strength(u). Iterates
    until the L1 change drops below ``tol``. Scores sum to 1.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must be in (0,1), got {damping}")
    nodes = graph.nodes
    n = len(nodes)
    if n == 0:
        return {}

    strength = {
        v: sum(w for _nb, w in sorted(graph.neighbors(v).items())) for v in nodes
    }
    scores = {v: 1.0 / n for v in nodes}
    for _ in range(max_iter):
        dangling = sum(scores[v] for v in nodes if strength[v] == 0.0)
        base = (1.0 - damping) / n + damping * dangling / n
        nxt = {v: base for v in nodes}
        for u in nodes:
            s = strength[u]
            if s <= 0.0:
                continue
            out = damping * scores[u] / s
            for v, w in sorted(graph.neighbors(u).items()):
                nxt[v] += out * w
        change = sum(abs(nxt[v] - scores[v]) for v in nodes)
        scores = nxt
        if change < tol:
            break
    return scores


def _edge_length(weight: float, lengths: str) -> float:
    return 1.0 if lengths == "unit" else 1.0 / weight


def _sssp(graph: SocialGraph, source: str, lengths: str):
    """Dijkstra with shortest-path counting (the Brandes forward pass).

    Returns (dist, sigma, preds, order): distances, number of shortest
    paths, predecessor lists, and nodes in nondecreasing-distance order.
    Path-length equality is judged within LENGTH_EPS.
    """
    dist: dict[str, float] = {}
    sigma: dict[str, float] = {source: 1.0}
    preds: dict[str, list[str]] = {source: []}
    order: list[str] = []
    tentative = {source: 0.0}
    heap: list[tuple[float, str]] = [(0.0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if v in dist:
            continue
        dist[v] = d
        order.append(v)
        for w, weight in sorted(graph.neighbors(v).items()):
            if w in dist:
                continue
            nd = d + _edge_length(weight, lengths)
            known = tentative.get(w)
            if known is None or nd < known - LENGTH_EPS:
                tentative[w] = nd
                heapq.heappush(heap, (nd, w))
                sigma[w] = sigma[v]
                preds[w] = [v]
            elif abs(nd - known) <= LENGTH_EPS:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return dist, sigma, preds, order


def betweenness(graph: SocialGraph, lengths: str = "inverse") -> dict[str, float]:
    """Unnormalized shortest-path betweenness, unordered pairs, Brandes.

    Endpoints excluded. Running the accumulation from every source counts
    each unordered pair twice on an undirected graph, hence the final
    halving.
    """
    scores = {v: 0.0 for v in graph.nodes}
    for source in graph.nodes:
        _dist, sigma, preds, order = _sssp(graph, source, lengths)
        delta = {v: 0.0 for v in order}
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != source:
                scores[w] += delta[w]
    return {v: scores[v] / 2.0 for v in graph.nodes}


def closeness(graph: SocialGraph, lengths: str = "inverse") -> dict[str, float]:
    """Harmonic closeness: sum of 1/d(v,u); unreachable nodes add nothing.

    Well-defined on disconnected graphs, which coauthorship networks
    mostly are.
    """
    result: dict[str, float] = {}
    for v in graph.nodes:
        dist, _sigma, _preds, order = _sssp(graph, v, lengths)
        total = 0.0
        for u in sorted(order):
            if u != v:
                total += 1.0 / dist[u]
        result[v] = total
    return result


# ---------------------------------------------------------------------------
# feature assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FeatureVector:
    person_id: str
    category_id: str
    pagerank: float
    betweenness: float
    closeness: float
    journal_rank: float
    reader_count: int
    user_rank: int

    def as_dict(self) -> dict[str, float]:
        return {name: float(getattr(self, name)) for name in FEATURE_NAMES}

    def dump_line(self) -> str:
        return (
            f"{self.person_id},{self.category_id},"
            f"{self.pagerank:.9g},{self.betweenness:.9g},{self.closeness:.9g},"
            f"{self.journal_rank:.9g},{self.reader_count},{self.user_rank}"
        )


@dataclass
class CentralityScores:
    pagerank: dict[str, float]
    betweenness: dict[str, float]
    closeness: dict[str, float]

    @classmethod
    def of(cls, graph: SocialGraph, damping: float = DEFAULT_DAMPING,
           lengths: str = "inverse") -> "CentralityScores":
        return cls(
            pagerank=pagerank(graph, damping=damping),
            betweenness=betweenness(graph, lengths),
            closeness=closeness(graph, lengths),
        )


def assemble_features(
    person_id: str,
    category_id: str,
    scores: CentralityScores,
    person_pubs: list[Publication],
    journal_ranks: JournalRanks,
    user_rank: int,
) -> FeatureVector:
    """Combine graph scores with readership and journal evidence.

    ``person_pubs`` are the person's publications in this category.
    journal_rank is the mean table rank over those that name a journal
    (unknown journals rank 0.0); no journals at all also gives 0.0.
    """
    ranked = [journal_ranks.rank_of(p.journal) for p in person_pubs if p.journal]
    journal_rank = sum(ranked) / len(ranked) if ranked else 0.0
    reader_count = sum(p.reader_count for p in person_pubs)
    return FeatureVector(
        person_id=person_id,
        category_id=category_id,
        pagerank=scores.pagerank.get(person_id, 0.0),
        betweenness=scores.betweenness.get(person_id, 0.0),
        closeness=scores.closeness.get(person_id, 0.0),
        journal_rank=journal_rank,
        reader_count=reader_count,
        user_rank=user_rank,
    )


def compute_category_features(
    graph: SocialGraph,
    category_id: str,
    publications: list[Publication],
    resolution: Resolution,
    journal_ranks: JournalRanks,
    votes: dict[str, int] | None = None,
    damping: float = DEFAULT_DAMPING,
    lengths: str = "inverse",
) -> dict[str, FeatureVector]:
    """Feature vectors for every person in one category's subgraph.

    ``graph`` may be the category subgraph (default pipeline) or the full
    fused graph when full-graph centralities are wanted; membership in
    the category is decided by publications either way.
    """
    votes = votes or {}
    by_person: dict[str, list[Publication]] = {}
    for pub in publications:
        if pub.category_id != category_id:
            continue
        for pid in pub_person_ids(pub, resolution):
            by_person.setdefault(pid, []).append(pub)
    scores = CentralityScores.of(graph, damping=damping, lengths=lengths)
    return {
        pid: assemble_features(
            pid, category_id, scores, pubs, journal_ranks, votes.get(pid, 0)
        )
        for pid, pubs in sorted(by_person.items())
    }


def dump_features(features: dict[str, FeatureVector]) -> str:
    return "".join(features[pid].dump_line() + "\n" for pid in sorted(features))
