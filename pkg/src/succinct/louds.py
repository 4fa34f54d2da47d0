"""LOUDS encoding of ordered trees and rank/select-based navigation.

The encoding writes, for each node in breadth-first order, as many 1s as
the node has children followed by a single 0 (the node's description).
An n-node tree therefore takes exactly 2n - 1 bits.  No "10" prefix is
prepended for an artificial root; wrap the tree with ``with_super_root``
to get the classic layout, since "10" is just the description of a
one-child node.

Navigation (child count, i-th child, parent) is pure rank/select
arithmetic on the bit sequence; ``bitvec`` documents the index
conventions the formulas rely on.  The module-level ``louds_children``,
``louds_child`` and ``louds_parent`` are the raw total formulas;
``Louds`` wraps them with position validation.

Positions in the inductive tree are paths: lists of 0-based child
indices from the root.  ``lo_traversal_lt`` produces the prefix of the
breadth-first traversal preceding a path's node, which is what makes
path <-> bit-offset conversion (``louds_position``) definable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Any, Callable, Sequence

from .bitvec import BitSeq, pred, rank, select, succ

Path = Sequence[int]

__all__ = [
    "Forest",
    "Louds",
    "Path",
    "Tree",
    "TreeParseError",
    "children",
    "children_of_forest",
    "children_of_node",
    "format_tree",
    "height",
    "level_traversal",
    "lo_fringe",
    "lo_index",
    "lo_traversal",
    "lo_traversal_lt",
    "lo_traversal_st",
    "louds_child",
    "louds_children",
    "louds_encode",
    "louds_lt",
    "louds_parent",
    "louds_position",
    "mzip",
    "node_description",
    "number_of_nodes",
    "parse_tree",
    "subtree",
    "valid_position",
    "with_super_root",
]


@dataclass(frozen=True)
class Tree:
    """Arbitrarily-branching ordered tree; a leaf has no children."""

    label: Any = None
    children: tuple["Tree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


Forest = Sequence[Tree]


def children_of_node(t: Tree) -> list[Tree]:
    return list(t.children)


def children_of_forest(f: Forest) -> list[Tree]:
    return [c for t in f for c in t.children]


def height(t: Tree) -> int:
    """Length of the longest root-to-leaf chain; a lone leaf has height 1."""
    best = 0
    stack = [(t, 1)]
    while stack:
        node, depth = stack.pop()
        if depth > best:
            best = depth
        for c in node.children:
            stack.append((c, depth + 1))
    return best


def number_of_nodes(t: Tree) -> int:
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        count += 1
        stack.extend(node.children)
    return count


def lo_traversal(f_map: Callable[[Tree], Any], t: Tree) -> list:
    """Breadth-first node images, by iterating height-many times on a forest."""
    out: list = []
    forest: list[Tree] = [t]
    for _ in range(height(t)):
        out.extend(f_map(node) for node in forest)
        forest = children_of_forest(forest)
    return out


def mzip(l: list[list], r: list[list]) -> list[list]:
    """Zip two level sequences by concatenating corresponding levels.

    The longer tail is passed through unchanged, which makes mzip an
    associative monoid with [] as its neutral element.
    """
    if not l:
        return r
    if not r:
        return l
    n = min(len(l), len(r))
    out = [l[k] + r[k] for k in range(n)]
    out.extend(l[n:] if len(l) > n else r[n:])
    return out


def level_traversal(f_map: Callable[[Tree], Any], t: Tree) -> list[list]:
    """Structurally recursive traversal: one inner list per tree level."""
    rest: list[list] = []
    for child in reversed(t.children):
        rest = mzip(level_traversal(f_map, child), rest)
    return [[f_map(t)]] + rest


def lo_traversal_st(f_map: Callable[[Tree], Any], t: Tree) -> list:
    """Flattened ``level_traversal``; equal to ``lo_traversal``."""
    return list(chain.from_iterable(level_traversal(f_map, t)))


def node_description(f: Forest) -> list[int]:
    """Unary degree code of a node with the given children: 1^k followed by 0."""
    return [1] * len(f) + [0]


def children_description(t: Tree) -> list[int]:
    return node_description(t.children)


def louds_encode(t: Tree) -> list[int]:
    """Level-order concatenation of node descriptions; 2n - 1 bits."""
    return list(chain.from_iterable(lo_traversal_st(children_description, t)))


def with_super_root(t: Tree, label: Any = None) -> Tree:
    """Wrap t under a one-child root, reproducing the classic "10"-prefixed layout."""
    return Tree(label, (t,))


def valid_position(t: Tree, p: Path) -> bool:
    """True when each path step addresses an existing child."""
    node = t
    for step in p:
        if not 0 <= step < len(node.children):
            return False
        node = node.children[step]
    return True


def subtree(t: Tree, p: Path) -> Tree:
    node = t
    for depth, step in enumerate(p):
        if not 0 <= step < len(node.children):
            raise ValueError(f"invalid path step {step} at depth {depth}")
        node = node.children[step]
    return node


def children(t: Tree, p: Path) -> int:
    """Child count of the node addressed by p."""
    return len(subtree(t, p).children)


def lo_traversal_lt(f_map: Callable[[Tree], Any], s: Forest, p: Path) -> list:
    """Breadth-first traversal up to (excluding) the node addressed by p.

    Works like the queue formulation of level-order traversal: the node
    reached so far sits at the queue front; a step n outputs every
    queued node plus the front's first n children, then continues with
    the remaining children and the children of everything just output.
    The path need not be valid; once it is at least as long as the
    height, the output is the complete traversal.
    """
    out: list = []
    queue = list(s)
    for n in p:
        if not queue:
            break
        head, rest = queue[0], queue[1:]
        kids = list(head.children)
        first, remaining = kids[:n], kids[n:]
        out.extend(f_map(node) for node in queue)
        out.extend(f_map(node) for node in first)
        queue = remaining + children_of_forest(rest + first)
    return out


def lo_fringe(s: Forest, p: Path) -> list[Tree]:
    """Queue state after consuming p: the forest generating the rest of
    the traversal."""
    queue = list(s)
    for n in p:
        if not queue:
            return []
        head, rest = queue[0], queue[1:]
        kids = list(head.children)
        first, remaining = kids[:n], kids[n:]
        queue = remaining + children_of_forest(rest + first)
    return queue


def lo_index(s: Forest, p: Path) -> int:
    """Number of nodes preceding p in traversal order (0-based)."""
    return len(lo_traversal_lt(lambda t: t, s, p))


def louds_lt(s: Forest, p: Path) -> list[int]:
    return list(chain.from_iterable(lo_traversal_lt(children_description, s, p)))


def louds_position(s: Forest, p: Path) -> int:
    """0-based bit offset of p's node description in the encoding."""
    return len(louds_lt(s, p))


def louds_children(bits: BitSeq, v: int) -> int:
    """Child count at bit position v: distance to the next 0-bit."""
    return succ(0, bits, v + 1) - (v + 1)


def louds_child(bits: BitSeq, v: int, i: int) -> int:
    """Bit position of the i-th child of the node at position v."""
    return select(0, rank(1, v + i, bits) + 1, bits)


def louds_parent(bits: BitSeq, v: int) -> int:
    """Bit position of the parent of the (non-root) node at position v."""
    j = select(1, rank(0, v, bits), bits)
    return pred(0, bits, j)


@dataclass(frozen=True)
class Louds:
    """A LOUDS bit sequence with validity-checked navigation.

    The raw formulas above are total and answer garbage for bit indices
    that do not start a node description; this wrapper rejects those
    loudly instead.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))

    @classmethod
    def encode(cls, t: Tree, super_root: bool = False) -> "Louds":
        if super_root:
            t = with_super_root(t)
        return cls(tuple(louds_encode(t)))

    def __len__(self) -> int:
        return len(self.bits)

    def is_position(self, v: int) -> bool:
        """True when v is the first bit of some node's description."""
        if not 0 <= v < len(self.bits):
            return False
        return v == 0 or self.bits[v - 1] == 0

    def _require_position(self, v: int) -> None:
        if not self.is_position(v):
            raise ValueError(f"{v} is not a node position in this encoding")

    def children(self, v: int) -> int:
        self._require_position(v)
        return louds_children(self.bits, v)

    def child(self, v: int, i: int) -> int:
        self._require_position(v)
        k = louds_children(self.bits, v)
        if not 0 <= i < k:
            raise ValueError(f"child index {i} out of range for node with {k} children")
        return louds_child(self.bits, v, i)

    def parent(self, v: int) -> int:
        self._require_position(v)
        if v == 0:
            raise ValueError("the root has no parent")
        return louds_parent(self.bits, v)


class TreeParseError(ValueError):
    """Tree text did not parse; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def _scan_tree(text: str):
    """Yield (kind, value, line, column) with kind in {'(', ')', 'label'}."""
    line, col = 1, 0
    label = None
    label_pos = (1, 1)
    for ch in text:
        if ch == "\n":
            line += 1
            col = 0
        else:
            col += 1
        if ch in "()" or ch.isspace():
            if label is not None:
                yield ("label", label, *label_pos)
                label = None
            if ch in "()":
                yield (ch, ch, line, col)
        else:
            if label is None:
                label = ch
                label_pos = (line, col)
            else:
                label += ch
    if label is not None:
        yield ("label", label, *label_pos)


def parse_tree(text: str) -> Tree:
    """Parse the parenthesized form ``(label child*)``; labels are
    arbitrary non-whitespace tokens and become string node labels."""
    tokens = list(_scan_tree(text))
    if not tokens:
        raise TreeParseError("empty input", 1, 1)
    stack: list[tuple[str, list[Tree]]] = []
    root: Tree | None = None
    pos = 0
    while pos < len(tokens):
        kind, value, line, col = tokens[pos]
        if root is not None:
            raise TreeParseError("trailing content after tree", line, col)
        if kind == "(":
            if pos + 1 >= len(tokens) or tokens[pos + 1][0] != "label":
                if pos + 1 < len(tokens):
                    line, col = tokens[pos + 1][2], tokens[pos + 1][3]
                raise TreeParseError("expected a label after '('", line, col)
            stack.append((tokens[pos + 1][1], []))
            pos += 2
        elif kind == ")":
            if not stack:
                raise TreeParseError("unbalanced ')'", line, col)
            label, kids = stack.pop()
            node = Tree(label, tuple(kids))
            if stack:
                stack[-1][1].append(node)
            else:
                root = node
            pos += 1
        else:
            raise TreeParseError(f"unexpected token {value!r}", line, col)
    if root is None:
        line, col = tokens[-1][2], tokens[-1][3]
        raise TreeParseError("unexpected end of input", line, col)
    return root


def format_tree(t: Tree) -> str:
    label = "_" if t.label is None else str(t.label)
    if not t.children:
        return f"({label})"
    return f"({label} {' '.join(format_tree(c) for c in t.children)})"
