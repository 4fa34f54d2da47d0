"""Succinct data structures.

Three layers, each validated against a naive reference oracle:

- ``bitvec``: static rank/select/succ/pred over flat bit sequences,
  plus a one-level block index accelerating rank.
- ``louds``: pointerless level-order tree encoding with rank/select
  navigation (child count, i-th child, parent).
- ``dynamic``: dynamic bit vectors as red-black trees over small flat
  leaf arrays, with insert/delete/set/clear and tree-steered queries.
"""

from .bitvec import (
    Bit,
    BitSeq,
    RankIndex,
    build_rank_index,
    format_bits,
    parse_bits,
    pred,
    rank,
    select,
    succ,
)
from .dynamic import (
    BLACK,
    RED,
    Color,
    Deleted,
    DTree,
    DynamicBitVector,
    Leaf,
    Node,
    SizeBounds,
    daccess,
    dclear,
    ddel,
    ddelete,
    dflatten,
    dinsert,
    drank,
    dselect0,
    dselect1,
    dset,
    dsize,
    dump,
    from_bits,
    is_deleted_redblack,
    parse_dump,
    redblack_check,
    wf_check,
)
from .louds import (
    Forest,
    Louds,
    Path,
    Tree,
    TreeParseError,
    children,
    children_of_forest,
    children_of_node,
    format_tree,
    height,
    level_traversal,
    lo_fringe,
    lo_index,
    lo_traversal,
    lo_traversal_lt,
    lo_traversal_st,
    louds_child,
    louds_children,
    louds_encode,
    louds_lt,
    louds_parent,
    louds_position,
    mzip,
    node_description,
    number_of_nodes,
    parse_tree,
    subtree,
    valid_position,
    with_super_root,
)

__version__ = "0.1.0"
