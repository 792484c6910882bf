"""Binary region trees emulating 2^k-trees.

A tree models a subset of the unit hypercube ``[0, 1)^k``.  Level ``l`` of the
tree (0 at the root) halves the current block along axis ``l mod k``; the left
son holds the lower half.  Terminal nodes carry a color, internal nodes carry
two sons.  Descending below a terminal yields the terminal itself, so trees of
different precisions can be walked in parallel.
"""

from __future__ import annotations

from enum import IntEnum

__all__ = [
    "Color",
    "Tree",
    "WHITE",
    "BLACK",
    "make_tree",
    "fission",
    "merge",
    "union_subtrees",
    "copy_tree",
    "delete_tree",
    "node_count",
    "depth_of",
    "develop",
    "is_canonical",
    "leaves",
]


class Color(IntEnum):
    WHITE = 0
    BLACK = 1


class Tree:
    """Node of a binary region tree.

    ``color`` is set for terminals and ``None`` for internal nodes.  The
    ``annotation`` slot is an opaque payload used transiently by labeling,
    adjacency search and the fast transform; public constructors leave it
    empty.
    """

    __slots__ = ("color", "left", "right", "annotation")

    def __init__(self, color=None, left=None, right=None, annotation=None):
        if color is None and (left is None or right is None):
            raise ValueError("internal node needs two sons")
        if color is not None and (left is not None or right is not None):
            raise ValueError("terminal node cannot have sons")
        self.color = color
        self.left = left
        self.right = right
        self.annotation = annotation

    @property
    def terminal(self) -> bool:
        return self.left is None

    @property
    def white(self) -> bool:
        return self.color is Color.WHITE

    @property
    def black(self) -> bool:
        return self.color is Color.BLACK

    def son(self, side: int) -> "Tree":
        """Son on ``side`` (0 = left, 1 = right); a terminal is its own son."""
        if self.left is None:
            return self
        return self.right if side else self.left

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return _same_shape(self, other)

    __hash__ = None

    def __repr__(self):
        from .io import encode_tree

        code = encode_tree(self)
        if len(code) > 60:
            code = code[:57] + "..."
        return f"Tree({code!r})"


def _same_shape(a: Tree, b: Tree) -> bool:
    if a is b:
        return True
    if a.left is None or b.left is None:
        return a.left is None and b.left is None and a.color == b.color
    return _same_shape(a.left, b.left) and _same_shape(a.right, b.right)


# Shared unannotated terminals.  Never annotate these; copy first.
WHITE = Tree(Color.WHITE)
BLACK = Tree(Color.BLACK)


def make_tree(color) -> Tree:
    """Fresh terminal tree of ``color``."""
    return Tree(Color(color))


def terminal(color) -> Tree:
    """Shared terminal of ``color`` (cheap; must not be annotated)."""
    return BLACK if color else WHITE


def fission(t: Tree) -> Tree:
    """Split a terminal into an internal node with two sons of its color."""
    if not t.terminal:
        raise ValueError("fission of an internal node")
    return Tree(left=Tree(t.color), right=Tree(t.color))


def merge(t: Tree) -> Tree:
    """Collapse an internal node whose sons are equal unannotated terminals."""
    if t.left is None:
        return t
    a, b = t.left, t.right
    if (
        a.left is None
        and b.left is None
        and a.color == b.color
        and a.annotation is None
        and b.annotation is None
    ):
        return terminal(a.color)
    return t


def union_subtrees(left: Tree, right: Tree) -> Tree:
    """Join two subtrees under a new root, merging them if possible."""
    if (
        left.left is None
        and right.left is None
        and left.color == right.color
        and left.annotation is None
        and right.annotation is None
    ):
        return terminal(left.color)
    return Tree(left=left, right=right)


def copy_tree(t: Tree) -> Tree:
    """Deep copy, annotations included (annotations are shallow-copied)."""
    if t.left is None:
        return Tree(t.color, annotation=_copy_value(t.annotation))
    return Tree(
        left=copy_tree(t.left),
        right=copy_tree(t.right),
        annotation=_copy_value(t.annotation),
    )


def _copy_value(value):
    if value is None:
        return None
    if isinstance(value, (list, dict, set)):
        return type(value)(value)
    return value


def delete_tree(t: Tree) -> None:
    """Detach every node of ``t`` so nothing is kept alive through it.

    Python frees memory on its own; this exists to mirror explicit disposal in
    pipelines that recycle annotated trees.  Shared terminals are untouched.
    """
    stack = [t]
    while stack:
        node = stack.pop()
        if node is WHITE or node is BLACK:
            continue
        node.annotation = None
        if node.left is not None:
            stack.append(node.left)
            stack.append(node.right)


def node_count(t: Tree) -> int:
    if t.left is None:
        return 1
    return 1 + node_count(t.left) + node_count(t.right)


def depth_of(t: Tree) -> int:
    """Length of the longest root-to-leaf path."""
    if t.left is None:
        return 0
    return 1 + max(depth_of(t.left), depth_of(t.right))


def develop(t: Tree, depth: int) -> Tree:
    """Fully developed (non-canonical) copy: every leaf sits at ``depth``."""
    if depth == 0:
        if t.left is None:
            return Tree(t.color)
        raise ValueError("tree is deeper than the requested development depth")
    return Tree(left=develop(t.son(0), depth - 1), right=develop(t.son(1), depth - 1))


def is_canonical(t: Tree) -> bool:
    if t.left is None:
        return True
    if merge(t) is not t:
        return False
    return is_canonical(t.left) and is_canonical(t.right)


def leaves(t: Tree, path: str = ""):
    """Yield ``(path, node)`` for every terminal, depth first, left to right.

    Paths are strings over ``L``/``R``.
    """
    stack = [(t, path)]
    while stack:
        node, p = stack.pop()
        if node.left is None:
            yield p, node
        else:
            stack.append((node.right, p + "R"))
            stack.append((node.left, p + "L"))
