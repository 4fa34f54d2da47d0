"""Dynamic bit vectors on red-black trees.

The tree keeps flat bit arrays in its leaves and, at every internal
node, the pair (num, ones) = bit count and 1-count of the left subtree,
so queries can steer left or right without touching the bits.  Leaves
hold between ``low`` and ``high - 1`` bits (a lone root leaf may be
smaller); a leaf that reaches ``high`` on insertion splits in two, and
a leaf that would drop below ``low`` on deletion borrows a bit from a
sibling leaf or merges with it.

Updates are purely functional: they return new trees that share all
untouched subtrees with the input.  ``dflatten`` defines the meaning of
a tree, and every operation here is equivalent to the corresponding
flat-sequence operation on ``dflatten`` -- the test suite checks
exactly that, against the naive implementations in ``oracle``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .bitvec import format_bits, parse_bits, rank, select

__all__ = [
    "BLACK",
    "Color",
    "DTree",
    "Deleted",
    "DynamicBitVector",
    "Leaf",
    "Node",
    "RED",
    "SizeBounds",
    "balance_left_deleted",
    "balance_right_deleted",
    "daccess",
    "dclear",
    "ddel",
    "ddelete",
    "dflatten",
    "dinsert",
    "drank",
    "dselect0",
    "dselect1",
    "dset",
    "dsize",
    "dump",
    "from_bits",
    "is_deleted_redblack",
    "parse_dump",
    "redblack_check",
    "wf_check",
]


class Color(Enum):
    RED = "Red"
    BLACK = "Black"


RED = Color.RED
BLACK = Color.BLACK


@dataclass(frozen=True)
class Leaf:
    bits: list[int]


@dataclass(frozen=True)
class Node:
    color: Color
    left: "DTree"
    num: int
    ones: int
    right: "DTree"


DTree = Leaf | Node


@dataclass(frozen=True)
class SizeBounds:
    """Leaf size window: every leaf keeps low <= len < high.

    high >= 2*low guarantees that merging two minimal leaves never
    reaches the split threshold.  ``from_w`` derives the window from a
    word-size parameter as w^2/2 and 2*w^2.
    """

    low: int
    high: int
    w: int | None = None

    def __post_init__(self):
        if self.low < 1:
            raise ValueError("low must be at least 1")
        if self.high < 2 * self.low:
            raise ValueError("high must be at least 2*low")

    @classmethod
    def from_w(cls, w: int) -> "SizeBounds":
        if w < 2:
            raise ValueError("w must be at least 2")
        return cls(w * w // 2, 2 * w * w, w)


@dataclass(frozen=True)
class Deleted:
    """Result of an internal delete step: the rebuilt subtree, whether
    its black height dropped, and the (count, ones) delta of the removed
    bit, applied to ancestor metadata on the way back up."""

    tree: DTree
    down: bool
    deleted: tuple[int, int]


# ---------------------------------------------------------------------------
# queries


def dflatten(t: DTree) -> list[int]:
    """In-order concatenation of the leaf arrays."""
    out: list[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.extend(node.bits)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return out


def dsize(t: DTree) -> int:
    total = 0
    while isinstance(t, Node):
        total += t.num
        t = t.right
    return total + len(t.bits)


def drank(t: DTree, i: int) -> int:
    """1-count of the first i bits; i saturates at the total size."""
    acc = 0
    while isinstance(t, Node):
        if i < t.num:
            t = t.left
        else:
            acc += t.ones
            i -= t.num
            t = t.right
    return acc + rank(1, i, t.bits)


def dselect1(t: DTree, i: int) -> int:
    """1-based position of the i-th 1-bit, with select's conventions."""
    acc = 0
    while isinstance(t, Node):
        if i <= t.ones:
            t = t.left
        else:
            acc += t.num
            i -= t.ones
            t = t.right
    return acc + select(1, i, t.bits)


def dselect0(t: DTree, i: int) -> int:
    """1-based position of the i-th 0-bit, with select's conventions."""
    acc = 0
    while isinstance(t, Node):
        zeros = t.num - t.ones
        if i <= zeros:
            t = t.left
        else:
            acc += t.num
            i -= zeros
            t = t.right
    return acc + select(0, i, t.bits)


def daccess(t: DTree, i: int) -> int:
    if i < 0 or i >= dsize(t):
        raise IndexError(f"bit index {i} out of range")
    while isinstance(t, Node):
        if i < t.num:
            t = t.left
        else:
            i -= t.num
            t = t.right
    return t.bits[i]


# ---------------------------------------------------------------------------
# structural checks


def _measure(t: DTree, low: int, high: int) -> tuple[bool, int, int]:
    """(well_formed, size, ones) in a single pass."""
    if isinstance(t, Leaf):
        n = len(t.bits)
        return low <= n < high, n, t.bits.count(1)
    ok_l, size_l, ones_l = _measure(t.left, low, high)
    ok_r, size_r, ones_r = _measure(t.right, low, high)
    ok = ok_l and ok_r and t.num == size_l and t.ones == ones_l
    return ok, size_l + size_r, ones_l + ones_r


def wf_check(t: DTree, bounds: SizeBounds, relaxed: bool = False) -> bool:
    """Structural well-formedness: metadata matches the leaves and every
    leaf is inside the size window.  ``relaxed`` drops the lower bound
    when the whole tree is a single leaf."""
    if relaxed and isinstance(t, Leaf):
        return len(t.bits) < bounds.high
    return _measure(t, bounds.low, bounds.high)[0]


def redblack_check(t: DTree, context: Color = RED) -> int | None:
    """Black height when the red-black invariant holds under ``context``
    (no red node with a red parent, equal black counts on every path),
    None otherwise.  The default Red context rejects a red root."""

    def walk(node: DTree, red_parent: bool) -> int | None:
        if isinstance(node, Leaf):
            return 0
        if node.color is RED:
            if red_parent:
                return None
            left = walk(node.left, True)
            if left is None:
                return None
            right = walk(node.right, True)
            return left if left == right else None
        left = walk(node.left, False)
        if left is None:
            return None
        right = walk(node.right, False)
        return left + 1 if left == right else None

    return walk(t, context is RED)


def is_deleted_redblack(d: Deleted, context: Color, bh: int) -> bool:
    """Red-black validity for a delete result: either the black height
    is unchanged under ``context``, or the down flag is set and the tree
    is valid one level shorter under a red context."""
    if d.down:
        return redblack_check(d.tree, RED) == bh - 1
    return redblack_check(d.tree, context) == bh


# ---------------------------------------------------------------------------
# insertion


def _ins_leaf(bits: list[int], b: int, i: int, bounds: SizeBounds) -> DTree:
    grown = bits[:i] + [b] + bits[i:]
    if len(bits) + 1 == bounds.high:
        n = (bounds.high + 1) // 2
        left, right = grown[:n], grown[n:]
        return Node(RED, Leaf(left), n, left.count(1), Leaf(right))
    return Leaf(grown)


def _balance_l(c: Color, l: DTree, num: int, ones: int, r: DTree) -> DTree:
    """Okasaki rebalance after an insert in the left subtree; num/ones
    already describe the new left subtree."""
    if c is BLACK and isinstance(l, Node) and l.color is RED:
        ll, lr = l.left, l.right
        if isinstance(ll, Node) and ll.color is RED:
            return Node(
                RED,
                Node(BLACK, ll.left, ll.num, ll.ones, ll.right),
                l.num,
                l.ones,
                Node(BLACK, lr, num - l.num, ones - l.ones, r),
            )
        if isinstance(lr, Node) and lr.color is RED:
            return Node(
                RED,
                Node(BLACK, ll, l.num, l.ones, lr.left),
                l.num + lr.num,
                l.ones + lr.ones,
                Node(BLACK, lr.right, num - l.num - lr.num, ones - l.ones - lr.ones, r),
            )
    return Node(c, l, num, ones, r)


def _balance_r(c: Color, l: DTree, num: int, ones: int, r: DTree) -> DTree:
    """Mirror of _balance_l for an insert in the right subtree."""
    if c is BLACK and isinstance(r, Node) and r.color is RED:
        rl, rr = r.left, r.right
        if isinstance(rl, Node) and rl.color is RED:
            return Node(
                RED,
                Node(BLACK, l, num, ones, rl.left),
                num + rl.num,
                ones + rl.ones,
                Node(BLACK, rl.right, r.num - rl.num, r.ones - rl.ones, rr),
            )
        if isinstance(rr, Node) and rr.color is RED:
            return Node(
                RED,
                Node(BLACK, l, num, ones, rl),
                num + r.num,
                ones + r.ones,
                Node(BLACK, rr.left, rr.num, rr.ones, rr.right),
            )
    return Node(c, l, num, ones, r)


def _dins(t: DTree, b: int, i: int, bounds: SizeBounds) -> DTree:
    if isinstance(t, Leaf):
        return _ins_leaf(t.bits, b, i, bounds)
    if i < t.num:
        return _balance_l(t.color, _dins(t.left, b, i, bounds), t.num + 1, t.ones + b, t.right)
    return _balance_r(t.color, t.left, t.num, t.ones, _dins(t.right, b, i - t.num, bounds))


def dinsert(t: DTree, b: int, i: int, bounds: SizeBounds) -> DTree:
    """Insert bit b at position i (0 <= i <= size); the root is repainted
    black afterwards."""
    if not 0 <= i <= dsize(t):
        raise IndexError(f"insert position {i} out of range")
    b = 1 if b else 0
    root = _dins(t, b, i, bounds)
    if isinstance(root, Node) and root.color is RED:
        return Node(BLACK, root.left, root.num, root.ones, root.right)
    return root


# ---------------------------------------------------------------------------
# set / clear


def _dset(t: DTree, i: int, value: int) -> tuple[DTree, bool]:
    if isinstance(t, Leaf):
        if t.bits[i] == value:
            return t, False
        bits = t.bits.copy()
        bits[i] = value
        return Leaf(bits), True
    if i < t.num:
        left, changed = _dset(t.left, i, value)
        if not changed:
            return t, False
        delta = 1 if value else -1
        return Node(t.color, left, t.num, t.ones + delta, t.right), True
    right, changed = _dset(t.right, i - t.num, value)
    if not changed:
        return t, False
    return Node(t.color, t.left, t.num, t.ones, right), True


def dset(t: DTree, i: int) -> tuple[DTree, bool]:
    """Set bit i to 1; reports whether anything changed.  Shape, colors
    and untouched metadata are preserved."""
    if i < 0 or i >= dsize(t):
        raise IndexError(f"bit index {i} out of range")
    return _dset(t, i, 1)


def dclear(t: DTree, i: int) -> tuple[DTree, bool]:
    """Clear bit i to 0; reports whether anything changed."""
    if i < 0 or i >= dsize(t):
        raise IndexError(f"bit index {i} out of range")
    return _dset(t, i, 0)


# ---------------------------------------------------------------------------
# deletion
#
# Underflow repairs when deleting from a leaf that sits at the lower
# size bound.  The sibling configurations are forced by the red-black
# invariant: a leaf has black height 0, so the sibling of a leaf is
# either a leaf or a red node with two leaf children.
#
#   target      sibling                     repair
#   ---------   -------------------------   -----------------------------------
#   left leaf   leaf with > low bits        borrow the sibling's first bit
#   left leaf   leaf with = low bits        merge both leaves; a black parent
#                                           reports a black-height drop
#   left leaf   red(l1, l2), len(l1) > low  rotate: parent keeps its children
#                                           as red(target+l1[0], rest of l1)
#                                           and l2
#   left leaf   red(l1, l2), len(l1) = low  merge target into l1, promote l2
#   right leaf  (the four mirrored cases, borrowing the last bit / merging
#               with the nearest leaf on the left)
#
# Deeper deletions delegate to balance_left_deleted/balance_right_deleted,
# which resolve a black-height deficit with the standard rotation /
# recoloring cases, rebuilding (num, ones) from existing metadata only.


def _del_left_leaf(c: Color, l: Leaf, num: int, ones: int, r: DTree, i: int, low: int) -> Deleted:
    s = l.bits
    b = s[i]
    shrunk = s[:i] + s[i + 1 :]
    if len(s) > low:
        return Deleted(Node(c, Leaf(shrunk), num - 1, ones - b, r), False, (1, b))
    if isinstance(r, Leaf):
        t = r.bits
        if len(t) > low:
            m = t[0]
            return Deleted(
                Node(c, Leaf(shrunk + [m]), num, ones - b + m, Leaf(t[1:])), False, (1, b)
            )
        return Deleted(Leaf(shrunk + t), c is BLACK, (1, b))
    rl, rr = r.left, r.right
    t1 = rl.bits
    if len(t1) > low:
        m = t1[0]
        inner = Node(RED, Leaf(shrunk + [m]), num, ones - b + m, Leaf(t1[1:]))
        return Deleted(Node(c, inner, num - 1 + r.num, ones - b + r.ones, rr), False, (1, b))
    return Deleted(Node(c, Leaf(shrunk + t1), num - 1 + r.num, ones - b + r.ones, rr), False, (1, b))


def _del_right_leaf(c: Color, l: DTree, num: int, ones: int, r: Leaf, j: int, low: int) -> Deleted:
    t = r.bits
    b = t[j]
    shrunk = t[:j] + t[j + 1 :]
    if len(t) > low:
        return Deleted(Node(c, l, num, ones, Leaf(shrunk)), False, (1, b))
    if isinstance(l, Leaf):
        s = l.bits
        if len(s) > low:
            m = s[-1]
            return Deleted(
                Node(c, Leaf(s[:-1]), num - 1, ones - m, Leaf([m] + shrunk)), False, (1, b)
            )
        return Deleted(Leaf(s + shrunk), c is BLACK, (1, b))
    ll, lr = l.left, l.right
    s2 = lr.bits
    if len(s2) > low:
        m = s2[-1]
        inner = Node(RED, ll, l.num, l.ones, Leaf(s2[:-1]))
        return Deleted(Node(c, inner, num - 1, ones - m, Leaf([m] + shrunk)), False, (1, b))
    return Deleted(Node(c, ll, l.num, l.ones, Leaf(s2 + shrunk)), False, (1, b))


def _fix_left_short(c: Color, l: DTree, num: int, ones: int, r: Node) -> tuple[DTree, bool]:
    """Rebuild a node whose left subtree is one black level short.

    Returns the fixed tree plus a flag saying the deficit escaped
    upward (possible only under a black parent with an all-black
    sibling side).
    """
    if r.color is BLACK:
        rl, rr = r.left, r.right
        if isinstance(rr, Node) and rr.color is RED:
            return (
                Node(
                    c,
                    Node(BLACK, l, num, ones, rl),
                    num + r.num,
                    ones + r.ones,
                    Node(BLACK, rr.left, rr.num, rr.ones, rr.right),
                ),
                False,
            )
        if isinstance(rl, Node) and rl.color is RED:
            return (
                Node(
                    c,
                    Node(BLACK, l, num, ones, rl.left),
                    num + rl.num,
                    ones + rl.ones,
                    Node(BLACK, rl.right, r.num - rl.num, r.ones - rl.ones, rr),
                ),
                False,
            )
        return (
            Node(BLACK, l, num, ones, Node(RED, rl, r.num, r.ones, rr)),
            c is BLACK,
        )
    # red sibling: rotate it above and resolve under a red parent
    inner, down = _fix_left_short(RED, l, num, ones, r.left)
    return Node(BLACK, inner, num + r.num, ones + r.ones, r.right), down


def _fix_right_short(c: Color, l: Node, num: int, ones: int, r: DTree) -> tuple[DTree, bool]:
    """Mirror of _fix_left_short for a right-side deficit."""
    if l.color is BLACK:
        ll, lr = l.left, l.right
        if isinstance(ll, Node) and ll.color is RED:
            return (
                Node(
                    c,
                    Node(BLACK, ll.left, ll.num, ll.ones, ll.right),
                    l.num,
                    l.ones,
                    Node(BLACK, lr, num - l.num, ones - l.ones, r),
                ),
                False,
            )
        if isinstance(lr, Node) and lr.color is RED:
            return (
                Node(
                    c,
                    Node(BLACK, ll, l.num, l.ones, lr.left),
                    l.num + lr.num,
                    l.ones + lr.ones,
                    Node(BLACK, lr.right, num - l.num - lr.num, ones - l.ones - lr.ones, r),
                ),
                False,
            )
        return (
            Node(BLACK, Node(RED, ll, l.num, l.ones, lr), num, ones, r),
            c is BLACK,
        )
    inner, down = _fix_right_short(RED, l.right, num - l.num, ones - l.ones, r)
    return Node(BLACK, l.left, l.num, l.ones, inner), down


def balance_left_deleted(c: Color, l: Deleted, num: int, ones: int, r: DTree) -> Deleted:
    """Rebuild after a delete in the left subtree; num/ones already
    account for the removed bit."""
    if not l.down:
        return Deleted(Node(c, l.tree, num, ones, r), False, l.deleted)
    fixed, down = _fix_left_short(c, l.tree, num, ones, r)
    return Deleted(fixed, down, l.deleted)


def balance_right_deleted(c: Color, l: DTree, num: int, ones: int, r: Deleted) -> Deleted:
    """Rebuild after a delete in the right subtree."""
    if not r.down:
        return Deleted(Node(c, l, num, ones, r.tree), False, r.deleted)
    fixed, down = _fix_right_short(c, l, num, ones, r.tree)
    return Deleted(fixed, down, r.deleted)


def ddel(t: DTree, i: int, bounds: SizeBounds) -> Deleted:
    """Delete bit i, reporting the black-height change and removed-bit
    metadata; callers guarantee a well-formed red-black input."""
    if isinstance(t, Leaf):
        # only the root can be a bare leaf
        b = t.bits[i]
        return Deleted(Leaf(t.bits[:i] + t.bits[i + 1 :]), False, (1, b))
    if i < t.num:
        if isinstance(t.left, Leaf):
            return _del_left_leaf(t.color, t.left, t.num, t.ones, t.right, i, bounds.low)
        d = ddel(t.left, i, bounds)
        return balance_left_deleted(t.color, d, t.num - 1, t.ones - d.deleted[1], t.right)
    j = i - t.num
    if isinstance(t.right, Leaf):
        return _del_right_leaf(t.color, t.left, t.num, t.ones, t.right, j, bounds.low)
    d = ddel(t.right, j, bounds)
    return balance_right_deleted(t.color, t.left, t.num, t.ones, d)


def ddelete(t: DTree, i: int, bounds: SizeBounds) -> DTree:
    """Delete bit i (0 <= i < size)."""
    if not 0 <= i < dsize(t):
        raise IndexError(f"delete position {i} out of range")
    return ddel(t, i, bounds).tree


# ---------------------------------------------------------------------------
# construction, dump format, facade


def from_bits(bits: Iterable[int], bounds: SizeBounds) -> DTree:
    """Build a tree by successive insertion; correctness rides on dinsert."""
    t: DTree = Leaf([])
    for i, b in enumerate(bits):
        t = dinsert(t, 1 if b else 0, i, bounds)
    return t


def dump(t: DTree) -> str:
    """Indented s-expression with color/num/ones per node and quoted leaf
    bits; ``parse_dump`` reads it back."""
    lines: list[str] = []

    def walk(node: DTree, depth: int) -> None:
        pad = "  " * depth
        if isinstance(node, Leaf):
            lines.append(f'{pad}(leaf "{format_bits(node.bits)}")')
        else:
            lines.append(f"{pad}({node.color.value} num={node.num} ones={node.ones}")
            walk(node.left, depth + 1)
            walk(node.right, depth + 1)
            lines[-1] += ")"

    walk(t, 0)
    return "\n".join(lines)


def _scan_sexpr(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, ch))
            i += 1
        elif ch == '"':
            end = text.find('"', i + 1)
            if end < 0:
                raise ValueError("unterminated string in tree dump")
            tokens.append(("str", text[i + 1 : end]))
            i = end + 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in '()"':
                j += 1
            tokens.append(("atom", text[i:j]))
            i = j
    return tokens


def _parse_dump_node(tokens: list[tuple[str, str]], pos: int) -> tuple[DTree, int]:
    def expect(kind: str) -> tuple[str, str]:
        if pos >= len(tokens) or tokens[pos][0] != kind:
            raise ValueError(f"malformed tree dump near token {pos}")
        return tokens[pos]

    expect("(")
    pos += 1
    kind, head = expect("atom")
    pos += 1
    if head == "leaf":
        bits: list[int] = []
        if pos < len(tokens) and tokens[pos][0] == "str":
            bits = parse_bits(tokens[pos][1])
            pos += 1
        expect(")")
        return Leaf(bits), pos + 1
    try:
        color = Color(head)
    except ValueError:
        raise ValueError(f"unknown node kind {head!r} in tree dump") from None
    meta = {}
    for key in ("num", "ones"):
        _, atom = expect("atom")
        name, _, value = atom.partition("=")
        if name != key or not value.lstrip("-").isdigit():
            raise ValueError(f"expected {key}=<int> in tree dump, got {atom!r}")
        meta[key] = int(value)
        pos += 1
    left, pos = _parse_dump_node(tokens, pos)
    right, pos = _parse_dump_node(tokens, pos)
    expect(")")
    return Node(color, left, meta["num"], meta["ones"], right), pos + 1


def parse_dump(text: str) -> DTree:
    tokens = _scan_sexpr(text)
    if not tokens:
        raise ValueError("empty tree dump")
    tree, pos = _parse_dump_node(tokens, 0)
    if pos != len(tokens):
        raise ValueError("trailing content in tree dump")
    return tree


class DynamicBitVector:
    """Sequence facade over the tree operations.

    A value is updated by one writer at a time; because every update
    builds a fresh tree, readers holding an old tree are unaffected.
    """

    def __init__(self, bits: Iterable[int] = (), bounds: SizeBounds | None = None):
        self.bounds = bounds if bounds is not None else SizeBounds.from_w(64)
        self.tree: DTree = from_bits(bits, self.bounds)

    def __len__(self) -> int:
        return dsize(self.tree)

    def insert(self, i: int, b: int) -> None:
        self.tree = dinsert(self.tree, b, i, self.bounds)

    def delete(self, i: int) -> None:
        self.tree = ddelete(self.tree, i, self.bounds)

    def set(self, i: int) -> bool:
        self.tree, changed = dset(self.tree, i)
        return changed

    def clear(self, i: int) -> bool:
        self.tree, changed = dclear(self.tree, i)
        return changed

    def rank(self, i: int) -> int:
        return drank(self.tree, i)

    def select1(self, k: int) -> int:
        return dselect1(self.tree, k)

    def select0(self, k: int) -> int:
        return dselect0(self.tree, k)

    def access(self, i: int) -> int:
        return daccess(self.tree, i)

    def to_bits(self) -> list[int]:
        return dflatten(self.tree)

    def dump(self) -> str:
        return dump(self.tree)
