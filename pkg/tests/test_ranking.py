"""Votes, ranked retrieval, training-set assembly."""

import pytest

from expertnet.centrality import FeatureVector
from expertnet.corpus import AcademicStatus, TrainingLabel
from expertnet.graph import Person
from expertnet.ranking import (
    UnknownPersonError,
    VoteStore,
    apply_vote,
    bootstrap_labels,
    build_training_set,
    rank_experts,
)
from expertnet.tree import DecisionTree, Leaf, Node


def fv(pid, reader_count=0, user_rank=0, pagerank=0.0):
    return FeatureVector(
        person_id=pid, category_id="c1", pagerank=pagerank, betweenness=0.0,
        closeness=0.0, journal_rank=0.0, reader_count=reader_count, user_rank=user_rank,
    )


def person(pid, status=AcademicStatus.other):
    return Person(person_id=pid, display_name=pid, academic_status=status)


# Tree scoring by reader_count: > 100 scores high, <= 100 scores low.
TREE = DecisionTree(Node("reader_count", 100.0, Leaf(1, 9), Leaf(9, 1)), ("reader_count",))


class TestVoteStore:
    def test_fresh_vote(self):
        store = VoteStore()
        assert store.apply("v1", "p", +1) == 1

    def test_revote_replaces(self):
        store = VoteStore()
        store.apply("v1", "p", +1)
        assert store.apply("v1", "p", -1) == -1

    def test_two_voters_add(self):
        store = VoteStore()
        store.apply("v1", "p", +1)
        assert store.apply("v2", "p", +1) == 2

    def test_bad_delta(self):
        with pytest.raises(ValueError):
            VoteStore().apply("v1", "p", 2)

    def test_bad_token(self):
        with pytest.raises(ValueError):
            VoteStore().apply("has,comma", "p", 1)
        with pytest.raises(ValueError):
            VoteStore().apply("", "p", 1)

    def test_durable_replay(self, tmp_path):
        log = tmp_path / "votes.log"
        store = VoteStore(log)
        store.apply("v1", "p", +1)
        store.apply("v2", "p", +1)
        store.apply("v1", "p", -1)  # replacement
        again = VoteStore(log)
        assert again.tally("p") == 0
        assert again.vote_count() == 3

    def test_apply_vote_checks_person(self):
        store = VoteStore()
        persons = {"p1": person("p1")}
        assert apply_vote(store, persons, "v", "p1", 1) == 1
        assert persons["p1"].vote_tally == 1
        with pytest.raises(UnknownPersonError):
            apply_vote(store, persons, "v", "ghost", 1)


class TestRankExperts:
    def test_score_ordering(self):
        features = {"a": fv("a", reader_count=500), "b": fv("b", reader_count=50)}
        persons = {"a": person("a"), "b": person("b")}
        ranked = rank_experts(features, persons, TREE)
        assert [(e.person_id, e.rank) for e in ranked] == [("a", 1), ("b", 2)]
        assert ranked.entries[0].score > ranked.entries[1].score

    def test_vote_breaks_tie(self):
        features = {
            "a": fv("a", reader_count=300),
            "b": fv("b", reader_count=200, user_rank=1),
        }
        persons = {"a": person("a"), "b": person("b")}
        ranked = rank_experts(features, persons, TREE)
        assert [e.person_id for e in ranked] == ["b", "a"]

    def test_reader_count_breaks_tie_after_votes(self):
        features = {"a": fv("a", reader_count=300), "b": fv("b", reader_count=200)}
        persons = {"a": person("a"), "b": person("b")}
        ranked = rank_experts(features, persons, TREE)
        assert [e.person_id for e in ranked] == ["a", "b"]

    def test_pagerank_then_id_break_remaining_ties(self):
        features = {
            "c": fv("c", reader_count=200, pagerank=0.2),
            "b": fv("b", reader_count=200, pagerank=0.1),
            "a": fv("a", reader_count=200, pagerank=0.1),
        }
        persons = {k: person(k) for k in features}
        ranked = rank_experts(features, persons, TREE)
        assert [e.person_id for e in ranked] == ["c", "a", "b"]

    def test_status_filter(self):
        features = {"a": fv("a", 300), "b": fv("b", 250)}
        persons = {
            "a": person("a", AcademicStatus.professor),
            "b": person("b", AcademicStatus.postdoc),
        }
        ranked = rank_experts(features, persons, TREE, {AcademicStatus.professor})
        assert [e.person_id for e in ranked] == ["a"]

    def test_empty_filter_means_no_filter(self):
        features = {"a": fv("a", 300), "b": fv("b", 250)}
        persons = {
            "a": person("a", AcademicStatus.professor),
            "b": person("b", AcademicStatus.postdoc),
        }
        assert len(rank_experts(features, persons, TREE, set())) == 2

    def test_k_truncates_and_ranks_consecutive(self):
        features = {f"p{i}": fv(f"p{i}", reader_count=10 * i) for i in range(9)}
        persons = {k: person(k) for k in features}
        ranked = rank_experts(features, persons, TREE, k=4)
        assert [e.rank for e in ranked] == [1, 2, 3, 4]

    def test_k_nonpositive_errors(self):
        with pytest.raises(ValueError):
            rank_experts({}, {}, TREE, k=0)

    def test_deterministic(self):
        features = {f"p{i}": fv(f"p{i}", reader_count=(i * 37) % 90) for i in range(20)}
        persons = {k: person(k) for k in features}
        first = rank_experts(features, persons, TREE)
        second = rank_experts(dict(reversed(list(features.items()))), persons, TREE)
        assert first == second


class TestTrainingHelpers:
    def test_build_training_set(self):
        features = {"c1": {"a": fv("a", 300)}}
        labels = [TrainingLabel("a", "c1", True)]
        rows = build_training_set(labels, features)
        assert rows[0][1] is True
        assert rows[0][0]["reader_count"] == 300.0

    def test_unresolvable_ref_errors(self):
        features = {"c1": {"a": fv("a", 300)}}
        with pytest.raises(ValueError):
            build_training_set([TrainingLabel("ghost", "c1", True)], features)
        with pytest.raises(ValueError):
            build_training_set([TrainingLabel("a", "zzz", True)], features)

    def test_bootstrap_top_decile(self):
        members = {f"p{i:02d}": fv(f"p{i:02d}", reader_count=i * 10) for i in range(20)}
        labels = bootstrap_labels({"c1": members})
        experts = {l.person_ref for l in labels if l.is_expert}
        assert experts == {"p19", "p18"}  # ceil(0.1 * 20) = 2
        assert len(labels) == 20

    def test_bootstrap_small_category_gets_one_expert(self):
        members = {"a": fv("a", 5), "b": fv("b", 3)}
        labels = bootstrap_labels({"c1": members})
        assert sum(l.is_expert for l in labels) == 1
