"""ID3 decision trees over categorical pattern features.

Each test node picks the feature with the highest information gain and has
one child per value seen in training plus a default child (a leaf with the
node's majority label) for values it has never seen.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from enum import Enum

from pydantic import Field, model_validator

from ..types.base import Frozen
from .errors import TrainingError
from .features import FEATURE_NAMES, Pattern

DEFAULT_MIN_PATTERNS = 2

# Gains below this are float noise, not information.
_EPSILON = 1e-12


class NodeKind(Enum):
    LEAF = "leaf"
    TEST = "test"


class TreeNode(Frozen):
    kind: NodeKind = NodeKind.LEAF
    feature: str | None = None
    children: dict[str, TreeNode] = Field(default_factory=dict)
    default: TreeNode | None = None
    split: bool = False
    # (no-split, split) training patterns that reached this node
    support: tuple[int, int] = (0, 0)

    @model_validator(mode="after")
    def _check_shape(self) -> TreeNode:
        if self.kind is NodeKind.TEST:
            if self.feature not in FEATURE_NAMES:
                msg = f"test node on unknown feature {self.feature!r}"
                raise ValueError(msg)
            if self.default is None:
                msg = "test node needs a default child"
                raise ValueError(msg)
        elif self.feature is not None or self.children or self.default is not None:
            msg = "leaf node cannot test a feature or have children"
            raise ValueError(msg)
        return self


class DecisionTree(Frozen):
    root: TreeNode
    patterns: int = Field(ge=0)
    errors: int = Field(default=0, ge=0)

    def classify(self, features: Sequence[str]) -> bool:
        """Whether the pair these features describe splits."""
        node = self.root
        while node.kind is NodeKind.TEST:
            value = features[FEATURE_NAMES.index(node.feature or "")]
            nxt = node.children.get(value, node.default)
            if nxt is None:
                break
            node = nxt
        return node.split

    @property
    def leaves(self) -> int:
        return sum(1 for n in _walk(self.root) if n.kind is NodeKind.LEAF)

    @property
    def depth(self) -> int:
        def go(node: TreeNode) -> int:
            if node.kind is NodeKind.LEAF:
                return 0
            return 1 + max((go(c) for c in node.children.values()), default=0)

        return go(self.root)

    def paths(self) -> list[list[str]]:
        """Features tested along each root-to-leaf path through real children."""
        out: list[list[str]] = []

        def go(node: TreeNode, tested: list[str]) -> None:
            if node.kind is NodeKind.LEAF:
                out.append(tested)
                return
            for child in node.children.values():
                go(child, [*tested, node.feature or ""])

        go(self.root, [])
        return out


def _walk(node: TreeNode) -> list[TreeNode]:
    out = [node]
    for child in node.children.values():
        out.extend(_walk(child))
    return out


def _entropy(splits: int, total: int) -> float:
    if splits == 0 or splits == total:
        return 0.0
    p = splits / total
    return -(p * math.log2(p) + (1 - p) * math.log2(1 - p))


def _gain(patterns: Sequence[Pattern], index: int, base: float) -> float:
    buckets: dict[str, list[int]] = {}
    for p in patterns:
        b = buckets.setdefault(p.features[index], [0, 0])
        b[0] += 1
        b[1] += p.split
    n = len(patterns)
    remainder = sum(total / n * _entropy(splits, total) for total, splits in buckets.values())
    return base - remainder


def _leaf(no: int, yes: int) -> TreeNode:
    # Ties go to no-split, the conservative reading.
    return TreeNode(split=yes > no, support=(no, yes))


def _grow(patterns: Sequence[Pattern], available: tuple[int, ...], min_patterns: int) -> TreeNode:
    yes = sum(p.split for p in patterns)
    no = len(patterns) - yes
    if yes == 0 or no == 0 or not available or len(patterns) < min_patterns:
        return _leaf(no, yes)

    base = _entropy(yes, len(patterns))
    best: int | None = None
    best_gain = _EPSILON
    # Strictly greater, so equal gains keep the earlier feature.
    for index in available:
        g = _gain(patterns, index, base)
        if g > best_gain:
            best, best_gain = index, g
    if best is None:
        return _leaf(no, yes)

    groups: dict[str, list[Pattern]] = {}
    for p in patterns:
        groups.setdefault(p.features[best], []).append(p)
    rest = tuple(i for i in available if i != best)
    return TreeNode(
        kind=NodeKind.TEST,
        feature=FEATURE_NAMES[best],
        children={v: _grow(groups[v], rest, min_patterns) for v in sorted(groups)},
        default=_leaf(no, yes),
        split=yes > no,
        support=(no, yes),
    )


def train_tree(
    patterns: Sequence[Pattern], *, min_patterns: int = DEFAULT_MIN_PATTERNS
) -> DecisionTree:
    """Grow a tree by information gain.

    Growth stops at pure nodes, when every feature has been tested on the
    path, when no feature gains information, or below `min_patterns`.
    """
    if not patterns:
        msg = "Cannot train a decision tree without patterns."
        raise TrainingError(msg)
    if min_patterns < 1:
        msg = f"min_patterns must be at least 1, got {min_patterns}"
        raise TrainingError(msg)
    width = len(FEATURE_NAMES)
    for p in patterns:
        if len(p.features) != width:
            msg = f"pattern has {len(p.features)} features, expected {width}"
            raise TrainingError(msg)
    root = _grow(patterns, tuple(range(width)), min_patterns)
    tree = DecisionTree(root=root, patterns=len(patterns))
    errors = sum(tree.classify(p.features) != p.split for p in patterns)
    return tree.model_copy(update={"errors": errors})
