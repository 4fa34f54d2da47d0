"""Command-line front end.

Subcommands: louds-build, louds-query, dbv-run, verify.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time
from random import Random

from .bitvec import format_bits, parse_bits
from .dynamic import SizeBounds, dump, from_bits, parse_dump
from .louds import (
    Louds,
    TreeParseError,
    louds_encode,
    louds_position,
    parse_tree,
    with_super_root,
)
from .oracle import tree_navigate
from .verify import (
    ScriptRunner,
    VerifyError,
    check_encoding,
    check_navigation,
    check_traversals,
    random_script,
    random_tree,
)

_SCRIPT_ARITY = {
    "insert": 2,
    "delete": 1,
    "set": 1,
    "clear": 1,
    "rank": 1,
    "select0": 1,
    "select1": 1,
    "access": 1,
}


class ScriptError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_script(text: str) -> list[tuple[int, tuple]]:
    """One op per line: insert <i> <0|1> | delete <i> | set <i> |
    clear <i> | rank <i> | select0 <k> | select1 <k> | access <i>.
    Blank lines and #-comments are skipped."""
    steps: list[tuple[int, tuple]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        name, rest = parts[0], parts[1:]
        if name not in _SCRIPT_ARITY:
            raise ScriptError(lineno, f"unknown op {name!r}")
        if len(rest) != _SCRIPT_ARITY[name]:
            raise ScriptError(lineno, f"{name} takes {_SCRIPT_ARITY[name]} argument(s)")
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise ScriptError(lineno, f"non-integer argument in {body!r}") from None
        if nums[0] < 0:
            raise ScriptError(lineno, "indices must be non-negative")
        if name == "insert" and nums[1] not in (0, 1):
            raise ScriptError(lineno, "inserted bit must be 0 or 1")
        steps.append((lineno, (name, *nums)))
    return steps


def _bounds_arg(text: str) -> SizeBounds:
    try:
        low_s, high_s = text.split(",")
        return SizeBounds(int(low_s), int(high_s))
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(f"bad bounds {text!r}: {e}") from None


def _path_arg(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad path {text!r}") from None


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read_file(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cmd_louds_build(args) -> int:
    try:
        text = _read_file(args.tree_file)
    except OSError as e:
        return _fail(str(e), 2)
    if not text.strip():
        return _fail(f"{args.tree_file}: empty input", 2)
    try:
        tree = parse_tree(text)
    except TreeParseError as e:
        return _fail(f"{args.tree_file}: {e}", 2)
    if args.super_root:
        tree = with_super_root(tree)
    start = time.perf_counter()
    bits = louds_encode(tree)
    if args.time:
        print(f"time: {time.perf_counter() - start:.6f}s", file=sys.stderr)
    print(format_bits(bits))
    return 0


def _load_bits(args) -> list[int]:
    if args.bits_file is not None:
        return parse_bits(_read_file(args.bits_file))
    if args.bits is None:
        raise ValueError("provide a bit string or --bits-file")
    return parse_bits(args.bits)


def _cmd_louds_query(args) -> int:
    try:
        bits = _load_bits(args)
    except (OSError, ValueError) as e:
        return _fail(str(e), 2)
    nav = Louds(tuple(bits))
    try:
        if args.op == "children":
            result = nav.children(args.pos)
        elif args.op == "child":
            if args.index is None:
                return _fail("child requires --index", 2)
            result = nav.child(args.pos, args.index)
        else:
            result = nav.parent(args.pos)
    except ValueError as e:
        return _fail(str(e), 2)
    if args.verify is not None:
        code = _verify_query(args, result)
        if code != 0:
            return code
    print(result)
    return 0


def _verify_query(args, result: int) -> int:
    """Re-derive the query on the inductive tree and compare."""
    try:
        tree = parse_tree(_read_file(args.verify))
    except (OSError, TreeParseError) as e:
        return _fail(str(e), 2)
    if args.super_root:
        tree = with_super_root(tree)
    path = args.path if args.path is not None else []
    forest = [tree]
    try:
        nav = tree_navigate(tree, path)
        want_pos = louds_position(forest, path)
        if args.pos != want_pos:
            return _fail(
                f"--pos {args.pos} is not the position of path {path} (oracle: {want_pos})", 1
            )
        if args.op == "children":
            want = nav["children"]
        elif args.op == "child":
            want = louds_position(forest, list(path) + [args.index])
        else:
            want = louds_position(forest, path[:-1])
    except ValueError as e:
        return _fail(str(e), 2)
    if result != want:
        return _fail(f"{args.op} mismatch: encoding says {result}, oracle says {want}", 1)
    return 0


def _cmd_dbv_run(args) -> int:
    try:
        steps = parse_script(_read_file(args.script))
    except OSError as e:
        return _fail(str(e), 2)
    except ScriptError as e:
        return _fail(f"{args.script}: {e}", 2)
    bounds = args.bounds if args.bounds is not None else SizeBounds.from_w(64)
    try:
        if args.init_tree is not None:
            tree = parse_dump(_read_file(args.init_tree))
        elif args.init is not None:
            tree = from_bits(parse_bits(args.init), bounds)
        else:
            tree = None
    except (OSError, ValueError) as e:
        return _fail(str(e), 2)
    try:
        runner = ScriptRunner(bounds, verify=args.verify, tree=tree)
    except VerifyError as e:
        return _fail(str(e), 1)
    start = time.perf_counter()
    for lineno, op in steps:
        try:
            result = runner.step(op)
        except VerifyError as e:
            return _fail(f"line {lineno}: {e}", 1)
        except (IndexError, ValueError) as e:
            return _fail(f"line {lineno}: {e}", 2)
        if result is not None:
            print(result)
    if args.time:
        print(f"time: {time.perf_counter() - start:.6f}s", file=sys.stderr)
    if args.dump:
        print(dump(runner.tree))
    return 0


def _cmd_verify(args) -> int:
    rng = Random(args.seed)
    bounds = args.bounds if args.bounds is not None else SizeBounds(8, 32)
    try:
        for _ in range(args.trees):
            tree = random_tree(rng, args.max_nodes)
            check_traversals(tree)
            check_encoding(tree)
            check_navigation(tree)
        print(f"louds: {args.trees} trees checked")
        for _ in range(args.scripts):
            runner = ScriptRunner(bounds, verify=True)
            runner.run(random_script(rng, args.ops))
        print(f"dynamic: {args.scripts} scripts of {args.ops} ops checked")
    except VerifyError as e:
        return _fail(str(e), 1)
    print("ok")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="succinct")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("louds-build", help="encode a tree file as a LOUDS bit string")
    p.add_argument("tree_file", help="file holding one parenthesized tree, e.g. (a (b) (c))")
    p.add_argument("--super-root", action="store_true", help="wrap the tree under a one-child root")
    p.add_argument("--time", action="store_true", help="print encoding time to stderr")
    p.set_defaults(func=_cmd_louds_build)

    p = sub.add_parser("louds-query", help="navigate a LOUDS bit string")
    p.add_argument("op", choices=["children", "child", "parent"])
    p.add_argument("bits", nargs="?", help="ASCII bit string")
    p.add_argument("--bits-file", help="read the bit string from a file instead")
    p.add_argument("--pos", type=int, required=True, help="bit position of the node")
    p.add_argument("--index", type=int, help="child ordinal (for child)")
    p.add_argument("--verify", metavar="TREE_FILE", help="cross-check against this tree")
    p.add_argument("--path", type=_path_arg, help="comma-separated path of --pos (with --verify)")
    p.add_argument("--super-root", action="store_true", help="wrap the verify tree first")
    p.set_defaults(func=_cmd_louds_query)

    p = sub.add_parser("dbv-run", help="replay a dynamic bit vector op script")
    p.add_argument("script", help="op script file, one op per line")
    p.add_argument("--init", help="initial contents as an ASCII bit string")
    p.add_argument("--init-tree", help="initial tree in the debug dump format")
    p.add_argument("--bounds", type=_bounds_arg, help="leaf bounds as low,high (default w=64)")
    p.add_argument("--verify", action="store_true", help="mirror every op on the flat oracle")
    p.add_argument("--dump", action="store_true", help="print the final tree")
    p.add_argument("--time", action="store_true", help="print replay time to stderr")
    p.set_defaults(func=_cmd_dbv_run)

    p = sub.add_parser("verify", help="randomized self-check against the oracles")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trees", type=int, default=25)
    p.add_argument("--max-nodes", type=int, default=40)
    p.add_argument("--scripts", type=int, default=10)
    p.add_argument("--ops", type=int, default=200)
    p.add_argument("--bounds", type=_bounds_arg, help="leaf bounds as low,high (default 8,32)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
