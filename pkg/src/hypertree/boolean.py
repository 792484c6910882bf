"""Set algebra on trees at an explicit output precision.

Operands are walked in parallel; a terminal stands for its own sons, so trees
of unequal depths combine without trouble.  A node still internal at depth
``k*r`` counts as black (upper hull), which makes results at coarser
precisions enclose those at finer ones.
"""

from __future__ import annotations

from .core import BLACK, WHITE, Tree, terminal, union_subtrees

__all__ = [
    "assert_tree",
    "not_tree",
    "union",
    "intersect",
    "xor",
    "diff",
    "apply",
    "union_any",
]


def _assert(node: Tree, level: int, depth: int) -> Tree:
    if node.left is None:
        return terminal(node.color)
    if level == depth:
        return BLACK
    return union_subtrees(_assert(node.left, level + 1, depth), _assert(node.right, level + 1, depth))


def _not(node: Tree, level: int, depth: int) -> Tree:
    if node.left is None:
        return BLACK if node.white else WHITE
    if level == depth:
        return WHITE
    return union_subtrees(_not(node.left, level + 1, depth), _not(node.right, level + 1, depth))


def assert_tree(t: Tree, k: int, r: int) -> Tree:
    """Copy of ``t`` truncated to precision ``r``, gray-at-limit made black."""
    return _assert(t, 0, k * r)


def not_tree(t: Tree, k: int, r: int) -> Tree:
    return _not(t, 0, k * r)


# Leaf rules on (a_is_black, b_is_black).
_RULES = {
    "union": lambda a, b: a or b,
    "intersect": lambda a, b: a and b,
    "xor": lambda a, b: a != b,
    "diff": lambda a, b: a and not b,
}


def _shortcut(op, a, b, level, depth):
    """Result when one operand is terminal, or None to keep descending."""
    if a.left is None:
        if op == "union":
            return BLACK if a.black else _assert(b, level, depth)
        if op == "intersect":
            return _assert(b, level, depth) if a.black else WHITE
        if op == "xor":
            return _not(b, level, depth) if a.black else _assert(b, level, depth)
        return _not(b, level, depth) if a.black else WHITE
    if b.left is None:
        if op == "union":
            return BLACK if b.black else _assert(a, level, depth)
        if op == "intersect":
            return _assert(a, level, depth) if b.black else WHITE
        if op == "xor":
            return _not(a, level, depth) if b.black else _assert(a, level, depth)
        return WHITE if b.black else _assert(a, level, depth)
    return None


def _binary(op, a, b, level, depth):
    if level == depth:
        return terminal(_RULES[op](not a.white, not b.white))
    out = _shortcut(op, a, b, level, depth)
    if out is not None:
        return out
    return union_subtrees(
        _binary(op, a.left, b.left, level + 1, depth),
        _binary(op, a.right, b.right, level + 1, depth),
    )


def apply(op: str, a: Tree, b: Tree, k: int, r: int, level: int = 0) -> Tree:
    """Binary operation ``op`` on two trees whose roots sit at ``level``."""
    if op not in _RULES:
        raise ValueError(f"unknown operation {op!r}")
    return _binary(op, a, b, level, k * r)


def union(a: Tree, b: Tree, k: int, r: int) -> Tree:
    return _binary("union", a, b, 0, k * r)


def intersect(a: Tree, b: Tree, k: int, r: int) -> Tree:
    return _binary("intersect", a, b, 0, k * r)


def xor(a: Tree, b: Tree, k: int, r: int) -> Tree:
    return _binary("xor", a, b, 0, k * r)


def diff(a: Tree, b: Tree, k: int, r: int) -> Tree:
    return _binary("diff", a, b, 0, k * r)


def union_any(a: Tree, b: Tree) -> Tree:
    """Union with no precision limit (both operands already truncated)."""
    if a.left is None:
        return BLACK if a.black else b
    if b.left is None:
        return BLACK if b.black else a
    return union_subtrees(union_any(a.left, b.left), union_any(a.right, b.right))
