"""Randomized cross-checking against the naive oracles.

Shared by the test suite, the CLI verify modes and scripts/.  All
generators take an explicit ``random.Random`` so runs are reproducible
from a seed.
"""

from __future__ import annotations

from random import Random

from .dynamic import (
    DTree,
    Leaf,
    SizeBounds,
    daccess,
    ddelete,
    dflatten,
    dinsert,
    drank,
    dselect0,
    dselect1,
    dset,
    dclear,
    redblack_check,
    wf_check,
)
from .louds import (
    Tree,
    height,
    lo_traversal,
    lo_traversal_lt,
    lo_traversal_st,
    louds_child,
    louds_children,
    louds_encode,
    louds_parent,
    louds_position,
    number_of_nodes,
)
from .oracle import (
    bfs_queue,
    delete_at,
    insert1,
    oracle_rank,
    oracle_select,
    tree_navigate,
    update_at,
)

__all__ = [
    "ScriptRunner",
    "VerifyError",
    "check_encoding",
    "check_navigation",
    "check_traversals",
    "random_path",
    "random_script",
    "random_tree",
]


class VerifyError(Exception):
    """An implementation result diverged from its oracle."""


def random_tree(rng: Random, max_nodes: int = 60, exact: int | None = None) -> Tree:
    """Random tree built by attaching each node to a random earlier one;
    labels are creation indices."""
    n = exact if exact is not None else rng.randint(1, max_nodes)
    kids: list[list[int]] = [[] for _ in range(n)]
    for node in range(1, n):
        kids[rng.randrange(node)].append(node)
    built: list[Tree | None] = [None] * n
    for node in range(n - 1, -1, -1):
        built[node] = Tree(node, tuple(built[c] for c in kids[node]))
    return built[0]


def random_path(rng: Random, t: Tree) -> list[int]:
    """Random valid path in t (possibly the root's empty path)."""
    path: list[int] = []
    node = t
    while node.children and rng.random() < 0.75:
        i = rng.randrange(len(node.children))
        path.append(i)
        node = node.children[i]
    return path


def all_paths(t: Tree) -> list[tuple[int, ...]]:
    """Paths of every node, in depth-first order starting with the root."""
    out: list[tuple[int, ...]] = []
    stack: list[tuple[Tree, tuple[int, ...]]] = [(t, ())]
    while stack:
        node, path = stack.pop()
        out.append(path)
        for i in range(len(node.children) - 1, -1, -1):
            stack.append((node.children[i], path + (i,)))
    return out


def check_traversals(t: Tree) -> None:
    """Level-order traversals must agree with each other and with the
    queue oracle; the path-bounded traversal must converge."""
    labels_st = lo_traversal_st(lambda n: n.label, t)
    labels_it = lo_traversal(lambda n: n.label, t)
    labels_bfs = bfs_queue(t)
    if labels_st != labels_bfs:
        raise VerifyError("structural traversal disagrees with the queue oracle")
    if labels_it != labels_bfs:
        raise VerifyError("height-iterated traversal disagrees with the queue oracle")
    converged = lo_traversal_lt(lambda n: n.label, [t], [0] * height(t))
    if converged != labels_st:
        raise VerifyError("path-bounded traversal did not converge to the full one")


def check_encoding(t: Tree) -> None:
    bits = louds_encode(t)
    n = number_of_nodes(t)
    if len(bits) != 2 * n - 1:
        raise VerifyError(f"encoding of {n} nodes has {len(bits)} bits, want {2 * n - 1}")
    if bits.count(0) != n or bits.count(1) != n - 1:
        raise VerifyError("encoding bit counts do not match the node count")


def check_navigation(t: Tree) -> None:
    """children/child/parent on the encoding must match the inductive
    oracle at every node of the tree."""
    bits = louds_encode(t)
    positions = {p: louds_position([t], p) for p in all_paths(t)}
    for path, v in positions.items():
        nav = tree_navigate(t, path)
        got = louds_children(bits, v)
        if got != nav["children"]:
            raise VerifyError(f"children at {path}: got {got}, oracle says {nav['children']}")
        for i in range(nav["children"]):
            want = positions[path + (i,)]
            got = louds_child(bits, v, i)
            if got != want:
                raise VerifyError(f"child {i} at {path}: got {got}, oracle says {want}")
        if path:
            want = positions[path[:-1]]
            got = louds_parent(bits, v)
            if got != want:
                raise VerifyError(f"parent at {path}: got {got}, oracle says {want}")


def random_script(rng: Random, n_ops: int = 200) -> list[tuple]:
    """Mixed op sequence, valid against the size it builds up itself."""
    ops: list[tuple] = []
    size = 0
    for _ in range(n_ops):
        r = rng.random()
        if size == 0 or r < 0.45:
            ops.append(("insert", rng.randint(0, size), rng.randint(0, 1)))
            size += 1
        elif r < 0.60:
            ops.append(("delete", rng.randrange(size)))
            size -= 1
        elif r < 0.68:
            ops.append(("set", rng.randrange(size)))
        elif r < 0.76:
            ops.append(("clear", rng.randrange(size)))
        elif r < 0.84:
            ops.append(("rank", rng.randint(0, size)))
        elif r < 0.90:
            ops.append(("select0", rng.randint(0, size + 1)))
        elif r < 0.96:
            ops.append(("select1", rng.randint(0, size + 1)))
        else:
            ops.append(("access", rng.randrange(size)))
    return ops


class ScriptRunner:
    """Applies script ops to a tree; with verify on, mirrors every op on
    a flat list and checks results plus structural invariants after each
    step."""

    def __init__(self, bounds: SizeBounds, verify: bool = False, tree: DTree | None = None):
        self.bounds = bounds
        self.verify = verify
        self.tree: DTree = tree if tree is not None else Leaf([])
        self.flat: list[int] = dflatten(self.tree)
        self.steps = 0
        if verify and tree is not None:
            self._check_invariants("initial state")

    def run(self, ops) -> list[int]:
        return [r for r in map(self.step, ops) if r is not None]

    def step(self, op: tuple) -> int | None:
        kind = op[0]
        result: int | None = None
        if kind == "insert":
            _, i, b = op
            self.tree = dinsert(self.tree, b, i, self.bounds)
            self.flat = insert1(self.flat, b, i)
        elif kind == "delete":
            self.tree = ddelete(self.tree, op[1], self.bounds)
            self.flat = delete_at(self.flat, op[1])
        elif kind == "set":
            self.tree, _ = dset(self.tree, op[1])
            self.flat = update_at(self.flat, op[1], 1)
        elif kind == "clear":
            self.tree, _ = dclear(self.tree, op[1])
            self.flat = update_at(self.flat, op[1], 0)
        elif kind == "rank":
            result = drank(self.tree, op[1])
            self._expect(op, result, oracle_rank(1, op[1], self.flat))
        elif kind == "select0":
            result = dselect0(self.tree, op[1])
            self._expect(op, result, oracle_select(0, op[1], self.flat))
        elif kind == "select1":
            result = dselect1(self.tree, op[1])
            self._expect(op, result, oracle_select(1, op[1], self.flat))
        elif kind == "access":
            result = daccess(self.tree, op[1])
            self._expect(op, result, self.flat[op[1]])
        else:
            raise ValueError(f"unknown op {kind!r}")
        self.steps += 1
        if self.verify:
            self._check_invariants(op)
        return result

    def _expect(self, op: tuple, got: int, want: int) -> None:
        if self.verify and got != want:
            raise VerifyError(f"step {self.steps} {op}: got {got}, oracle says {want}")

    def _check_invariants(self, op) -> None:
        if dflatten(self.tree) != self.flat:
            raise VerifyError(f"step {self.steps} {op}: contents diverged from the oracle")
        if not wf_check(self.tree, self.bounds, relaxed=True):
            raise VerifyError(f"step {self.steps} {op}: well-formedness lost")
        if redblack_check(self.tree) is None:
            raise VerifyError(f"step {self.steps} {op}: red-black invariant lost")
