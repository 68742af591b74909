"""Edit distance and the two matching rules."""

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

import pytest

from expertnet.names import (
    NO_CANDIDATE_DISTANCE,
    levenshtein,
    match_author_to_profile,
    match_keyword_to_category,
    normalize_name,
)


@lru_cache(maxsize=None)
def oracle_levenshtein(a: str, b: str) -> int:
    """Independent reference: plain memoized recursion."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    cost = 0 if a[0] == b[0] else 1
    return min(
        oracle_levenshtein(a[1:], b) + 1,
        oracle_levenshtein(a, b[1:]) + 1,
        oracle_levenshtein(a[1:], b[1:]) + cost,
    )


@dataclass
class FakeProfile:
    profile_id: str
    display_name: str


@dataclass
class FakeCategory:
    category_id: str
    vocabulary: tuple


class TestLevenshtein:
    def test_identity(self):
        assert levenshtein("abc", "abc") == 0
        assert levenshtein("", "") == 0

    def test_deletions_equal_length(self):
        assert levenshtein("kitten", "") == 6
        assert levenshtein("", "kitten") == 6

    def test_kitten_sitting(self):
        # classic DP table value, cross-checked against the oracle
        assert oracle_levenshtein("kitten", "sitting") == 3
        assert levenshtein("kitten", "sitting") == 3

    def test_exhaustive_small_alphabet(self):
        words = [
            "".join(w)
            for n in range(5)
            for w in itertools.product("ab", repeat=n)
        ]
        for a in words:
            for b in words:
                assert levenshtein(a, b) == oracle_levenshtein(a, b)

    def test_random_pairs_against_oracle(self):
        rng = random.Random(7)
        for _ in range(300):
            a = "".join(rng.choice("abcde") for _ in range(rng.randint(0, 10)))
            b = "".join(rng.choice("abcde") for _ in range(rng.randint(0, 10)))
            assert levenshtein(a, b) == oracle_levenshtein(a, b)

    def test_symmetry_and_bounds(self):
        rng = random.Random(11)
        for _ in range(200):
            a = "".join(rng.choice("abcdef") for _ in range(rng.randint(0, 9)))
            b = "".join(rng.choice("abcdef") for _ in range(rng.randint(0, 9)))
            d = levenshtein(a, b)
            assert d == levenshtein(b, a)
            assert abs(len(a) - len(b)) <= d <= max(len(a), len(b))

    def test_triangle_inequality(self):
        rng = random.Random(13)
        for _ in range(200):
            a, b, c = (
                "".join(rng.choice("abc") for _ in range(rng.randint(0, 7)))
                for _ in range(3)
            )
            assert levenshtein(a, c) <= levenshtein(a, b) + levenshtein(b, c)


class TestNormalizeName:
    def test_period_and_whitespace(self):
        assert normalize_name("  J. Smith ") == "j smith"

    def test_lowercase(self):
        assert normalize_name("ADA LOVELACE") == "ada lovelace"

    def test_collapse_runs(self):
        assert normalize_name("a  b") == "a b"


class TestMatchAuthorToProfile:
    def test_exact_unique_match(self):
        profiles = [FakeProfile("p1", "J. Smith"), FakeProfile("p2", "A. Jones")]
        res = match_author_to_profile("J. Smith", profiles)
        assert res.matched_id == "p1"
        assert res.distance == 0
        assert not res.discarded_for_tie

    def test_tie_discards(self):
        profiles = [FakeProfile("p1", "jon smith"), FakeProfile("p2", "ron smit")]
        res = match_author_to_profile("jon smit", profiles)
        assert res.matched_id is None
        assert res.distance == 1
        assert res.discarded_for_tie

    def test_empty_candidates(self):
        res = match_author_to_profile("anyone", [])
        assert res.matched_id is None
        assert res.distance == NO_CANDIDATE_DISTANCE
        assert not res.discarded_for_tie

    def test_threshold_rejects_distant_unique_minimum(self):
        profiles = [FakeProfile("p1", "completely unrelated name")]
        res = match_author_to_profile("xq", profiles)
        assert res.matched_id is None
        assert not res.discarded_for_tie
        assert res.distance > 0

    def test_planted_ties_never_match(self):
        rng = random.Random(23)
        letters = "abcdefgh"
        for _ in range(200):
            base = "".join(rng.choice(letters) for _ in range(rng.randint(4, 10)))
            # two candidates at the same (nonzero) distance from base
            i = rng.randrange(len(base))
            j = rng.randrange(len(base))
            cand1 = base[:i] + "z" + base[i + 1:]
            cand2 = base[:j] + "y" + base[j + 1:]
            profiles = [FakeProfile("p1", cand1), FakeProfile("p2", cand2)]
            # pad with clearly-worse candidates
            for k in range(rng.randint(0, 3)):
                profiles.append(FakeProfile(f"x{k}", base + "zzzz" + letters[k]))
            rng.shuffle(profiles)
            res = match_author_to_profile(base, profiles)
            d1 = levenshtein(normalize_name(base), normalize_name(cand1))
            d2 = levenshtein(normalize_name(base), normalize_name(cand2))
            if d1 == d2:
                assert res.matched_id is None
                assert res.discarded_for_tie


class TestMatchKeywordToCategory:
    TAXONOMY = [
        FakeCategory("c_info", ("information retrieval", "search engines")),
        FakeCategory("c_ml", ("machine learning", "classification")),
    ]

    def test_near_miss(self):
        cat, dist = match_keyword_to_category("information retrival", self.TAXONOMY)
        assert (cat, dist) == ("c_info", 1)

    def test_exact_vocabulary_word(self):
        cat, dist = match_keyword_to_category("classification", self.TAXONOMY)
        assert (cat, dist) == ("c_ml", 0)

    def test_cross_category_tie_lexicographic(self):
        taxonomy = [
            FakeCategory("c_b", ("abcd",)),
            FakeCategory("c_a", ("abce",)),
        ]
        # "abcf" is at distance 1 from both vocabularies
        cat, dist = match_keyword_to_category("abcf", taxonomy)
        assert (cat, dist) == ("c_a", 1)

    def test_minimum_over_all_words(self):
        # exhaustive scan oracle: global minimum over every vocabulary word
        rng = random.Random(31)
        for _ in range(50):
            keyword = "".join(rng.choice("abcd") for _ in range(rng.randint(1, 6)))
            best = min(
                (levenshtein(normalize_name(keyword), normalize_name(w)), c.category_id)
                for c in self.TAXONOMY
                for w in c.vocabulary
            )
            assert match_keyword_to_category(keyword, self.TAXONOMY) == (best[1], best[0])

    def test_empty_taxonomy_errors(self):
        with pytest.raises(ValueError):
            match_keyword_to_category("anything", [])
