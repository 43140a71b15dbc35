"""Prefix codes to explicit trees and back, plus text renderings.

A preorder outdegree code maps to a unique ordered tree: reading left to
right, a symbol of value ``d`` opens a node that owns the next ``d``
complete subtrees.  All traversals here are iterative with explicit
stacks, so unary chains of millions of nodes never hit the interpreter
recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import index
from typing import Callable, Mapping, Sequence

from .errors import MissingArityError, TrailingSymbolsError, TruncatedCodeError


@dataclass
class TreeNode:
    """Ordered tree node: an outdegree and exactly that many children."""

    outdegree: int
    children: list["TreeNode"] = field(default_factory=list)


class OperatorAlphabet:
    """Display symbols per arity for rendering trees as expressions.

    Maps an outdegree to the non-empty list of operator or terminal
    spellings available at that arity, e.g. ``{0: ["x", "y", "1"],
    2: ["+", "*"]}``.
    """

    def __init__(self, symbols: Mapping[int, Sequence[str]]):
        table: dict[int, tuple[str, ...]] = {}
        for arity, choices in symbols.items():
            if arity < 0:
                raise ValueError(f"arity must be non-negative, got {arity}")
            choices = tuple(choices)
            if not choices:
                raise ValueError(f"arity {arity} has an empty symbol list")
            if not all(isinstance(s, str) for s in choices):
                raise ValueError(f"arity {arity} has non-string symbols")
            table[int(arity)] = choices
        self._table = table

    def symbols_for(self, arity: int) -> tuple[str, ...]:
        """Candidate spellings for ``arity``; raises MissingArityError if none."""
        try:
            return self._table[arity]
        except KeyError:
            raise MissingArityError(arity) from None

    @property
    def arities(self) -> set[int]:
        return set(self._table)


def decode_prefix(code: Sequence[int]) -> TreeNode:
    """Decode a preorder outdegree code into its unique tree.

    Consumes the entire sequence; decoding succeeds exactly on well-formed
    codes.  Iterative, so arbitrarily deep chains are fine.

    Raises:
        TruncatedCodeError: the code ended (or was empty) while nodes
            still waited for children.
        TrailingSymbolsError: a complete tree was closed before the end;
            carries the position of the first extra symbol.
    """
    root: TreeNode | None = None
    open_nodes: list[TreeNode] = []  # nodes whose child lists are incomplete
    for position, degree in enumerate(code):
        degree = index(degree)
        if degree < 0:
            raise ValueError(f"outdegree at position {position} is negative")
        node = TreeNode(degree)
        if root is None:
            root = node
        elif open_nodes:
            parent = open_nodes[-1]
            parent.children.append(node)
            if len(parent.children) == parent.outdegree:
                open_nodes.pop()
        else:
            raise TrailingSymbolsError(position)
        if node.outdegree > 0:
            open_nodes.append(node)
    if root is None:
        raise TruncatedCodeError("empty code: a tree needs at least one node")
    if open_nodes:
        raise TruncatedCodeError(
            f"code ended with {len(open_nodes)} node(s) still missing children"
        )
    return root


def encode_prefix(tree: TreeNode) -> list[int]:
    """Preorder outdegree listing of ``tree``; inverse of decode_prefix."""
    out: list[int] = []
    stack = [tree]
    while stack:
        node = stack.pop()
        out.append(node.outdegree)
        stack.extend(reversed(node.children))
    return out


def _fold(tree: TreeNode, combine: Callable[[TreeNode, list], object]):
    """Bottom-up fold: combine(node, child_values) -> value.  Iterative."""
    values: list = []
    stack: list[tuple[TreeNode, bool]] = [(tree, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            arity = node.outdegree
            if arity:
                args = values[-arity:]
                del values[-arity:]
            else:
                args = []
            values.append(combine(node, args))
        else:
            stack.append((node, True))
            stack.extend((child, False) for child in reversed(node.children))
    return values[0]


def to_sexpr(tree: TreeNode) -> str:
    """Parenthesised preorder: leaves as ``0``, a degree-d node as ``(d c1 ... cd)``."""
    return _fold(
        tree,
        lambda node, parts: "0"
        if node.outdegree == 0
        else "({} {})".format(node.outdegree, " ".join(parts)),
    )


def to_json(tree: TreeNode) -> str:
    """Compact JSON nesting ``{"degree": d, "children": [...]}``.

    Parses back (for example with ``json.loads``) to a structure mirroring
    the tree exactly.
    """
    return _fold(
        tree,
        lambda node, parts: '{"degree":%d,"children":[%s]}'
        % (node.outdegree, ",".join(parts)),
    )


def to_dot(tree: TreeNode) -> str:
    """Graphviz digraph: nodes numbered in preorder, labelled by outdegree.

    All node lines come first (preorder order), then one edge line per
    parent-child pair in visiting order.  Byte-stable for a given tree.
    """
    labels: list[str] = []
    edges: list[str] = []
    stack: list[tuple[TreeNode, int]] = [(tree, -1)]
    next_id = 0
    while stack:
        node, parent_id = stack.pop()
        node_id = next_id
        next_id += 1
        labels.append(f'  {node_id} [label="{node.outdegree}"];')
        if parent_id >= 0:
            edges.append(f"  {parent_id} -> {node_id};")
        stack.extend((child, node_id) for child in reversed(node.children))
    return "digraph tree {\n" + "\n".join(labels + edges) + "\n}\n"


def render_expression(
    tree: TreeNode,
    alphabet: OperatorAlphabet,
    source,
    style: str = "prefix",
) -> str:
    """Render ``tree`` as an expression, drawing each symbol uniformly.

    Symbols are assigned in preorder via ``source.next_below``; the source
    must not be one that is mid-way through producing the tree itself,
    otherwise labelling would correlate with shape.  Styles:

    * ``"prefix"``: space-separated Polish notation, ``op a1 ... ak``.
    * ``"infix"``: fully parenthesised; binary nodes as ``(a op b)``,
      unary as ``op(a)``, arity >= 3 as calls ``op(a1, a2, a3)``, leaves
      as bare symbols.

    Raises:
        MissingArityError: some outdegree in the tree has no alphabet
            entry (checked before any randomness is consumed).
        ValueError: unknown style.
    """
    if style not in ("prefix", "infix"):
        raise ValueError(f"unknown style {style!r}")
    seen: set[int] = set()
    stack = [tree]
    while stack:
        node = stack.pop()
        seen.add(node.outdegree)
        stack.extend(node.children)
    for arity in sorted(seen):
        alphabet.symbols_for(arity)
    chosen: dict[int, str] = {}
    stack = [tree]
    while stack:
        node = stack.pop()
        options = alphabet.symbols_for(node.outdegree)
        chosen[id(node)] = options[source.next_below(len(options))]
        stack.extend(reversed(node.children))
    if style == "prefix":
        return _fold(
            tree, lambda node, parts: " ".join([chosen[id(node)], *parts])
        )

    def infix(node: TreeNode, parts: list) -> str:
        symbol = chosen[id(node)]
        if node.outdegree == 0:
            return symbol
        if node.outdegree == 1:
            return f"{symbol}({parts[0]})"
        if node.outdegree == 2:
            return f"({parts[0]} {symbol} {parts[1]})"
        return "{}({})".format(symbol, ", ".join(parts))

    return _fold(tree, infix)
