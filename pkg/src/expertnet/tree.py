"""C4.5-style decision tree for binary expert/non-expert labels.

Continuous features only: every internal node is a ``feature <= threshold``
test with candidate thresholds at midpoints between consecutive distinct
sorted values. Split selection follows the gain-ratio recipe with the
average-gain guard: the winning feature maximizes gain ratio among
features whose information gain reaches the mean gain of all candidate
features. No pruning; ``max_depth`` and ``min_leaf`` regularize instead.

Leaves store raw class counts. Scoring routes a feature dict to its leaf
and applies Laplace smoothing, (e + 1) / (e + n + 2), so rankings get
graded scores instead of hard 0/1 decisions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

DEFAULT_MIN_LEAF = 2
DEFAULT_MAX_DEPTH = 6

_GAIN_EPS = 1e-12


def entropy(pos: int, neg: int) -> float:
    """Binary entropy in bits; H(0,n) = H(n,0) = 0 by the 0*log0 = 0 rule."""
    total = pos + neg
    if total == 0 or pos == 0 or neg == 0:
        return 0.0
    p = pos / total
    q = neg / total
    return -p * math.log2(p) - q * math.log2(q)


@dataclass(frozen=True)
class SplitCandidate:
    feature: str
    threshold: float
    gain: float
    split_info: float
    gain_ratio: float


def best_split(values: Sequence[float], labels: Sequence[bool], feature: str = "") -> SplitCandidate | None:
    """Best threshold for one feature, maximizing gain ratio.

    Thresholds are midpoints between consecutive distinct sorted values;
    a constant feature has no split and returns None. Ties between
    thresholds go to the smaller one.
    """
    n = len(values)
    if n != len(labels):
        raise ValueError("values and labels differ in length")
    order = sorted(range(n), key=lambda i: values[i])
    pos_total = sum(1 for flag in labels if flag)
    neg_total = n - pos_total
    parent = entropy(pos_total, neg_total)

    best: SplitCandidate | None = None
    pos_left = 0
    neg_left = 0
    for rank in range(n - 1):
        i = order[rank]
        if labels[i]:
            pos_left += 1
        else:
            neg_left += 1
        lo = values[order[rank]]
        hi = values[order[rank + 1]]
        if lo == hi:
            continue
        threshold = (lo + hi) / 2.0
        n_left = rank + 1
        n_right = n - n_left
        children = (
            n_left / n * entropy(pos_left, neg_left)
            + n_right / n * entropy(pos_total - pos_left, neg_total - neg_left)
        )
        gain = parent - children
        split_info = entropy(n_left, n_right)
        gain_ratio = gain / split_info if split_info > 0 else 0.0
        if best is None or gain_ratio > best.gain_ratio + _GAIN_EPS:
            best = SplitCandidate(feature, threshold, gain, split_info, gain_ratio)
    return best


Dataset = Sequence[tuple[Mapping[str, float], bool]]


@dataclass
class Leaf:
    expert_count: int
    non_expert_count: int

    def score(self) -> float:
        return (self.expert_count + 1) / (self.expert_count + self.non_expert_count + 2)


@dataclass
class Node:
    feature: str
    threshold: float
    left: Union["Node", Leaf]   # feature <= threshold
    right: Union["Node", Leaf]  # feature > threshold


class DecisionTree:
    def __init__(self, root: Node | Leaf, feature_names: tuple[str, ...]):
        self.root = root
        self.feature_names = feature_names

    def leaf_for(self, features: Mapping[str, float]) -> Leaf:
        node = self.root
        while isinstance(node, Node):
            node = node.left if features[node.feature] <= node.threshold else node.right
        return node

    def score(self, features: Mapping[str, float]) -> float:
        return self.leaf_for(features).score()

    def training_size(self) -> int:
        def count(node) -> int:
            if isinstance(node, Leaf):
                return node.expert_count + node.non_expert_count
            return count(node.left) + count(node.right)

        return count(self.root)

    def depth(self) -> int:
        def walk(node) -> int:
            if isinstance(node, Leaf):
                return 0
            return 1 + max(walk(node.left), walk(node.right))

        return walk(self.root)

    def paths_consistent(self) -> bool:
        """No root-to-leaf path constrains a feature to an empty interval."""

        def walk(node, intervals: dict[str, tuple[float, float]]) -> bool:
            if isinstance(node, Leaf):
                return True
            lo, hi = intervals.get(node.feature, (-math.inf, math.inf))
            if not lo <= node.threshold < hi:
                return False
            left = dict(intervals)
            left[node.feature] = (lo, node.threshold)
            right = dict(intervals)
            right[node.feature] = (node.threshold, hi)
            return walk(node.left, left) and walk(node.right, right)

        return walk(self.root, {})

    # -- persistence --------------------------------------------------------

    def to_text(self) -> str:
        """Deterministic preorder dump: reproducible byte-for-byte."""
        lines = ["features " + " ".join(self.feature_names)]

        def emit(node) -> None:
            if isinstance(node, Leaf):
                lines.append(f"leaf {node.expert_count} {node.non_expert_count}")
            else:
                lines.append(f"node {node.feature} {node.threshold!r}")
                emit(node.left)
                emit(node.right)

        emit(self.root)
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_text(cls, text: str) -> "DecisionTree":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("features "):
            raise ValueError("model text must start with a 'features' line")
        feature_names = tuple(lines[0].split()[1:])
        pos = 1

        def parse() -> Node | Leaf:
            nonlocal pos
            if pos >= len(lines):
                raise ValueError("truncated model text")
            parts = lines[pos].split()
            pos += 1
            if parts[0] == "leaf" and len(parts) == 3:
                return Leaf(int(parts[1]), int(parts[2]))
            if parts[0] == "node" and len(parts) == 3:
                left = parse()
                right = parse()
                return Node(parts[1], float(parts[2]), left, right)
            raise ValueError(f"bad model line: {lines[pos - 1]!r}")

        root = parse()
        if pos != len(lines):
            raise ValueError("trailing content after model tree")
        return cls(root, feature_names)


def _counts(dataset: Dataset) -> tuple[int, int]:
    pos = sum(1 for _f, label in dataset if label)
    return pos, len(dataset) - pos


def train_c45(
    dataset: Dataset,
    feature_names: Sequence[str],
    min_leaf: int = DEFAULT_MIN_LEAF,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> DecisionTree:
    """Grow a tree by recursive gain-ratio splitting.

    Growth stops on pure nodes, nodes smaller than 2 * min_leaf, depth
    max_depth, and when no feature offers a positive-gain split.
    """
    if not dataset:
        raise ValueError("training dataset is empty")
    feature_names = tuple(feature_names)

    def grow(subset: Dataset, depth: int) -> Node | Leaf:
        pos, neg = _counts(subset)
        if pos == 0 or neg == 0 or len(subset) < 2 * min_leaf or depth >= max_depth:
            return Leaf(pos, neg)

        labels = [label for _f, label in subset]
        candidates: list[tuple[int, SplitCandidate]] = []
        for idx, feature in enumerate(feature_names):
            cand = best_split([f[feature] for f, _l in subset], labels, feature)
            if cand is not None and cand.gain > _GAIN_EPS:
                candidates.append((idx, cand))
        if not candidates:
            return Leaf(pos, neg)

        # C4.5 guard: only features whose gain reaches the candidate mean
        # compete; among those the best gain ratio wins.
        mean_gain = sum(c.gain for _i, c in candidates) / len(candidates)
        eligible = [(i, c) for i, c in candidates if c.gain >= mean_gain - _GAIN_EPS]
        idx, chosen = min(
            eligible, key=lambda ic: (-ic[1].gain_ratio, -ic[1].gain, ic[0], ic[1].threshold)
        )
        left = [(f, l) for f, l in subset if f[chosen.feature] <= chosen.threshold]
        right = [(f, l) for f, l in subset if f[chosen.feature] > chosen.threshold]
        if not left or not right:  # degenerate; cannot happen with midpoints
            return Leaf(pos, neg)
        return Node(
            feature=chosen.feature,
            threshold=chosen.threshold,
            left=grow(left, depth + 1),
            right=grow(right, depth + 1),
        )

    return DecisionTree(grow(list(dataset), 0), feature_names)
