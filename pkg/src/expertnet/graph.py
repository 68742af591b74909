"""Fused social network over authors and profile owners.

Construction happens in three steps: resolve publication authors to
profiles (one person per distinct normalized author name, plus one person
per profile nobody matched), accumulate coauthorship edges, then overlay
profile friendships. Every edge carries

    weight = coauthor_count + alpha * [has_profile_edge]

with alpha configurable (default 1.0: one friendship counts like one
coauthored paper). The finished graph is treated as immutable and shared
read-only by the centrality code.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .corpus import AcademicStatus, Profile, ProfileEdge, Publication
from .names import match_author_to_profile, normalize_name, DEFAULT_MATCH_THRESHOLD

DEFAULT_ALPHA = 1.0


def author_person_id(author_name: str) -> str:
    """Stable person id for an author name: 'a:' + slug of the normalized name.

    Non-alphanumerics become underscores so ids stay safe inside the
    comma- and pipe-delimited index files and in URLs. Two distinct
    normalized names can collide on a slug (e.g. a comma vs a space);
    resolve_persons disambiguates those deterministically.
    """
    slug = "".join(ch if ch.isalnum() else "_" for ch in normalize_name(author_name))
    return "a:" + slug


def profile_person_id(profile_id: str) -> str:
    """Stable person id for a profile nobody's author name matched."""
    return "p:" + profile_id


@dataclass
class Person:
    person_id: str
    display_name: str
    profile_id: str | None = None
    academic_status: AcademicStatus = AcademicStatus.other
    total_reader_count: int = 0
    vote_tally: int = 0


@dataclass(frozen=True)
class EdgeData:
    coauthor_count: int
    has_profile_edge: bool
    weight: float


@dataclass
class GraphStats:
    node_count: int
    edge_count: int
    connected_component_count: int
    largest_component_size: int
    clique_like_component_count: int

    def render(self) -> str:
        return (
            f"nodes: {self.node_count}\n"
            f"edges: {self.edge_count}\n"
            f"connected components: {self.connected_component_count}\n"
            f"largest component size: {self.largest_component_size}\n"
            f"clique-like components: {self.clique_like_component_count}"
        )


class SocialGraph:
    """Undirected weighted graph over person ids. No self-loops."""

    def __init__(self, alpha: float = DEFAULT_ALPHA):
        self.alpha = alpha
        self._nodes: set[str] = set()
        self._edges: dict[tuple[str, str], EdgeData] = {}
        self._adj: dict[str, dict[str, float]] = {}

    # -- construction ------------------------------------------------------

    def add_node(self, person_id: str) -> None:
        if person_id not in self._nodes:
            self._nodes.add(person_id)
            self._adj[person_id] = {}

    def _put_edge(self, a: str, b: str, coauthor_count: int, has_profile_edge: bool) -> None:
        if a == b:
            raise ValueError(f"self-loop on {a!r}")
        key = (a, b) if a < b else (b, a)
        weight = coauthor_count + (self.alpha if has_profile_edge else 0.0)
        if weight <= 0:
            raise ValueError(f"edge {key} would have non-positive weight {weight}")
        self.add_node(a)
        self.add_node(b)
        self._edges[key] = EdgeData(coauthor_count, has_profile_edge, weight)
        self._adj[a][b] = weight
        self._adj[b][a] = weight

    def add_coauthorship(self, a: str, b: str, count: int = 1) -> None:
        existing = self.edge(a, b)
        cc = (existing.coauthor_count if existing else 0) + count
        pe = existing.has_profile_edge if existing else False
        self._put_edge(a, b, cc, pe)

    def add_profile_edge(self, a: str, b: str) -> None:
        existing = self.edge(a, b)
        cc = existing.coauthor_count if existing else 0
        self._put_edge(a, b, cc, True)

    # -- queries -----------------------------------------------------------

    @property
    def nodes(self) -> list[str]:
        return sorted(self._nodes)

    def has_node(self, person_id: str) -> bool:
        return person_id in self._nodes

    def edge(self, a: str, b: str) -> EdgeData | None:
        key = (a, b) if a < b else (b, a)
        return self._edges.get(key)

    def edges(self) -> list[tuple[str, str, EdgeData]]:
        return [(a, b, data) for (a, b), data in sorted(self._edges.items())]

    def neighbors(self, person_id: str) -> dict[str, float]:
        return self._adj.get(person_id, {})

    def node_count(self) -> int:
        return len(self._nodes)

    def edge_count(self) -> int:
        return len(self._edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SocialGraph)
            and self.alpha == other.alpha
            and self._nodes == other._nodes
            and self._edges == other._edges
        )

    # -- derived -----------------------------------------------------------

    def subgraph(self, keep: set[str]) -> "SocialGraph":
        """Induced subgraph on ``keep``; weights preserved."""
        sub = SocialGraph(alpha=self.alpha)
        for node in sorted(self._nodes & keep):
            sub.add_node(node)
        for (a, b), data in self._edges.items():
            if a in keep and b in keep:
                sub._edges[(a, b)] = data
                sub._adj[a][b] = data.weight
                sub._adj[b][a] = data.weight
        return sub

    def stats(self) -> GraphStats:
        """Component census; a component is clique-like iff e = n(n-1)/2."""
        seen: set[str] = set()
        components = 0
        largest = 0
        cliques = 0
        for start in self.nodes:
            if start in seen:
                continue
            members = {start}
            frontier = [start]
            while frontier:
                node = frontier.pop()
                for nxt in self._adj[node]:
                    if nxt not in members:
                        members.add(nxt)
                        frontier.append(nxt)
            seen |= members
            components += 1
            largest = max(largest, len(members))
            internal_edges = sum(1 for (a, b) in self._edges if a in members and b in members)
            n = len(members)
            if internal_edges == n * (n - 1) // 2:
                cliques += 1
        return GraphStats(
            node_count=len(self._nodes),
            edge_count=len(self._edges),
            connected_component_count=components,
            largest_component_size=largest,
            clique_like_component_count=cliques,
        )

    def to_edge_list(self) -> str:
        """Export for goldens: person_a,person_b,coauthor_count,has_profile_edge,weight."""
        lines = []
        for a, b, data in self.edges():
            lines.append(
                f"{a},{b},{data.coauthor_count},{1 if data.has_profile_edge else 0},{data.weight!r}"
            )
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_edge_list(cls, text: str, alpha: float = DEFAULT_ALPHA,
                       nodes: list[str] | None = None) -> "SocialGraph":
        graph = cls(alpha=alpha)
        for node in nodes or []:
            graph.add_node(node)
        for line in text.splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            a, b, cc, pe, _weight = line.split(",")
            graph._put_edge(a, b, int(cc), pe == "1")
        return graph


# ---------------------------------------------------------------------------
# entity resolution
# ---------------------------------------------------------------------------


@dataclass
class Resolution:
    """Outcome of matching authors to profiles.

    ``persons`` is keyed by person_id. ``occurrences`` maps every author
    occurrence (pub_id, author index) to its person; it is total over the
    input publications. ``profile_to_person`` holds the canonical person
    for each matched profile (used to attach friendship edges).
    """

    persons: dict[str, Person]
    occurrences: dict[tuple[str, int], str]
    profile_to_person: dict[str, str]
    tie_discards: list[str] = field(default_factory=list)  # author names dropped for ties

    def persons_sorted(self) -> list[Person]:
        return [self.persons[pid] for pid in sorted(self.persons)]

    def publications_of(self, person_id: str) -> list[str]:
        pubs = {pub_id for (pub_id, _idx), pid in self.occurrences.items() if pid == person_id}
        return sorted(pubs)


def resolve_persons(
    publications: list[Publication],
    profiles: list[Profile],
    threshold: float = DEFAULT_MATCH_THRESHOLD,
) -> Resolution:
    """Link author names to profiles; one Person per distinct author name.

    A name matching two or more profiles at the same minimal distance is
    kept as a person without a profile (the connection is discarded).
    Profiles never matched by any author become persons of their own, so
    the friendship overlay can reach them.
    """
    # Distinct normalized author names, with a deterministic display form:
    # the lexicographically smallest raw spelling seen for that name.
    display: dict[str, str] = {}
    for pub in publications:
        for raw in pub.author_names:
            key = normalize_name(raw)
            if not key:
                continue
            if key not in display or raw < display[key]:
                display[key] = raw

    # Slug collisions between distinct normalized names get a stable
    # numeric suffix; sorted processing keeps the assignment deterministic.
    ids: dict[str, str] = {}
    taken: set[str] = set()
    for key in sorted(display):
        pid = author_person_id(key)
        if pid in taken:
            n = 2
            while f"{pid}~{n}" in taken:
                n += 1
            pid = f"{pid}~{n}"
        taken.add(pid)
        ids[key] = pid

    persons: dict[str, Person] = {}
    profile_match: dict[str, tuple[int, str]] = {}  # profile_id -> (distance, person_id)
    tie_discards: list[str] = []

    for key in sorted(display):
        pid = ids[key]
        person = Person(person_id=pid, display_name=display[key])
        result = match_author_to_profile(display[key], profiles, threshold)
        if result.discarded_for_tie:
            tie_discards.append(display[key])
        elif result.matched_id is not None:
            profile = next(p for p in profiles if p.profile_id == result.matched_id)
            person.profile_id = profile.profile_id
            person.display_name = profile.display_name
            person.academic_status = profile.academic_status
            # Canonical person per profile: closest match wins, then id.
            prev = profile_match.get(profile.profile_id)
            if prev is None or (result.distance, pid) < prev:
                profile_match[profile.profile_id] = (result.distance, pid)
        persons[pid] = person

    # Profiles nobody matched exist in the friendship network regardless.
    for profile in profiles:
        if profile.profile_id not in profile_match:
            pid = profile_person_id(profile.profile_id)
            persons[pid] = Person(
                person_id=pid,
                display_name=profile.display_name,
                profile_id=profile.profile_id,
                academic_status=profile.academic_status,
            )
            profile_match[profile.profile_id] = (0, pid)

    occurrences: dict[tuple[str, int], str] = {}
    for pub in publications:
        for idx, raw in enumerate(pub.author_names):
            key = normalize_name(raw)
            if key:
                occurrences[(pub.pub_id, idx)] = ids[key]

    # Reader counts accumulate once per (person, publication).
    totals: dict[str, int] = {}
    for pub in publications:
        for pid in {occurrences[(pub.pub_id, i)] for i in range(len(pub.author_names))
                    if (pub.pub_id, i) in occurrences}:
            totals[pid] = totals.get(pid, 0) + pub.reader_count
    for pid, total in totals.items():
        persons[pid] = replace(persons[pid], total_reader_count=total)

    return Resolution(
        persons=persons,
        occurrences=occurrences,
        profile_to_person={k: v for k, (_d, v) in profile_match.items()},
        tie_discards=tie_discards,
    )


# ---------------------------------------------------------------------------
# graph builders
# ---------------------------------------------------------------------------


def pub_person_ids(pub: Publication, resolution: Resolution) -> list[str]:
    """Distinct persons appearing as authors of one publication, sorted."""
    ids = {
        resolution.occurrences[(pub.pub_id, i)]
        for i in range(len(pub.author_names))
        if (pub.pub_id, i) in resolution.occurrences
    }
    return sorted(ids)


def build_coauthor_graph(
    publications: list[Publication],
    resolution: Resolution,
    alpha: float = DEFAULT_ALPHA,
) -> SocialGraph:
    """Coauthorship edges only: +1 per publication per unordered author pair.

    Every resolved person becomes a node even without coauthors, so
    profile-only members stay in the network as isolated nodes.
    """
    graph = SocialGraph(alpha=alpha)
    for pid in sorted(resolution.persons):
        graph.add_node(pid)
    for pub in publications:
        ids = pub_person_ids(pub, resolution)
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                graph.add_coauthorship(ids[i], ids[j])
    return graph


@dataclass
class OverlayReport:
    added: int = 0
    reinforced: int = 0
    skipped: list[str] = field(default_factory=list)


def overlay_profile_edges(
    graph: SocialGraph,
    profile_edges: list[ProfileEdge],
    resolution: Resolution,
) -> OverlayReport:
    """Attach friendship edges to the coauthor graph, in place.

    An edge between persons already linked raises the existing weight by
    alpha; otherwise a fresh edge of weight alpha appears. Edges whose
    endpoints cannot be resolved are skipped and reported.
    """
    report = OverlayReport()
    for edge in sorted(profile_edges):
        pa = resolution.profile_to_person.get(edge.a)
        pb = resolution.profile_to_person.get(edge.b)
        if pa is None or pb is None or pa == pb:
            report.skipped.append(f"{edge.a},{edge.b}")
            continue
        existing = graph.edge(pa, pb)
        if existing is not None and existing.has_profile_edge:
            continue  # duplicate friendship; weight already includes alpha
        if existing is None:
            report.added += 1
        else:
            report.reinforced += 1
        graph.add_profile_edge(pa, pb)
    return report


def build_social_graph(
    publications: list[Publication],
    profiles: list[Profile],
    edges: list[ProfileEdge],
    alpha: float = DEFAULT_ALPHA,
    threshold: float = DEFAULT_MATCH_THRESHOLD,
) -> tuple[SocialGraph, Resolution, OverlayReport]:
    """Full pipeline: resolve, coauthor edges, friendship overlay."""
    resolution = resolve_persons(publications, profiles, threshold)
    graph = build_coauthor_graph(publications, resolution, alpha=alpha)
    report = overlay_profile_edges(graph, edges, resolution)
    return graph, resolution, report


def category_members(
    category_id: str,
    publications: list[Publication],
    resolution: Resolution,
) -> set[str]:
    members: set[str] = set()
    for pub in publications:
        if pub.category_id == category_id:
            members.update(pub_person_ids(pub, resolution))
    return members


def category_subgraph(
    graph: SocialGraph,
    category_id: str,
    publications: list[Publication],
    resolution: Resolution,
) -> SocialGraph:
    """Induced subgraph on persons with >= 1 publication in the category."""
    return graph.subgraph(category_members(category_id, publications, resolution))
