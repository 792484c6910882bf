"""Neighbour search between black leaves, connected-component labeling, segment forests."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import BLACK, WHITE, Tree, copy_tree, depth_of, leaves, union_subtrees

__all__ = [
    "AdjacencyGraph",
    "search_adjacencies",
    "label_components",
    "extract_component",
    "segment_forest",
]

METRICS = ("d1", "dinf")

# Relation of the pair (n1, n2) along one axis: not yet separated, n2 just
# after n1 ("S", successor), or n2 just before n1 ("A", antecedent).
_N, _S, _A = 0, 1, 2


@dataclass
class AdjacencyGraph:
    """Black leaves (as ``L``/``R`` paths) and the undirected edges between them."""

    nodes: list
    edges: set = field(default_factory=set)

    def neighbors(self, path: str) -> set:
        out = set()
        for a, b in self.edges:
            if a == path:
                out.add(b)
            elif b == path:
                out.add(a)
        return out

    def adjacency(self) -> dict:
        adj = {n: set() for n in self.nodes}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degree(self, path: str) -> int:
        return len(self.neighbors(path))


def _check(t, metric, k, r):
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS}")
    if depth_of(t) > k * r:
        raise ValueError("tree is deeper than precision r allows")


def search_adjacencies(t: Tree, metric: str, k: int, r: int) -> AdjacencyGraph:
    """All pairs of black leaves sharing a facet (``d1``) or any boundary point (``dinf``).

    Pairs of sons of every internal node are followed downward together; the
    per-axis relation vector says which son of each member may still touch
    the other.  Fully developed, non-canonical trees are accepted, so single
    cells of a uniform region can be treated as separate vertices.
    """
    _check(t, metric, k, r)
    diagonal = metric == "dinf"
    depth = k * r
    edges = set()

    def sons(node, path):
        if node.left is None:
            return (node, path), (node, path)
        return (node.left, path + "L"), (node.right, path + "R")

    def pair(n1, p1, n2, p2, rel, level):
        if n1.white or n2.white:
            return
        if level >= depth or (n1.left is None and n2.left is None):
            edges.add((p1, p2) if p1 < p2 else (p2, p1))
            return
        axis = level % k
        (l1, q1), (r1, s1) = sons(n1, p1)
        (l2, q2), (r2, s2) = sons(n2, p2)
        state = rel[axis]
        if state == _N:
            pair(l1, q1, l2, q2, rel, level + 1)
            pair(r1, s1, r2, s2, rel, level + 1)
            if diagonal:
                pair(r1, s1, l2, q2, rel[:axis] + (_A,) + rel[axis + 1:], level + 1)
                pair(l1, q1, r2, s2, rel[:axis] + (_S,) + rel[axis + 1:], level + 1)
        elif state == _S:
            pair(r1, s1, l2, q2, rel, level + 1)
        else:
            pair(l1, q1, r2, s2, rel, level + 1)

    def walk(node, path, level):
        if node.left is None or level >= depth:
            return
        rel = tuple(_S if a == level % k else _N for a in range(k))
        pair(node.left, path + "L", node.right, path + "R", rel, level + 1)
        walk(node.left, path + "L", level + 1)
        walk(node.right, path + "R", level + 1)

    walk(t, "", 0)
    nodes = [p for p, leaf in leaves(t) if not leaf.white]
    return AdjacencyGraph(nodes=nodes, edges=edges)


def _path_node(t, path):
    node = t
    for ch in path:
        node = node.left if ch == "L" else node.right
    return node


def label_components(t: Tree, metric: str, k: int, r: int):
    """Label connected components of black leaves.

    Returns ``(labeled, count)``: ``labeled`` is a private copy of ``t``
    whose black leaves carry labels ``1..count`` in their annotations, the
    numbering following the depth-first order of the first leaf reached in
    each component.
    """
    graph = search_adjacencies(t, metric, k, r)
    adj = graph.adjacency()
    labels = {}
    count = 0
    for seed in graph.nodes:
        if seed in labels:
            continue
        count += 1
        labels[seed] = count
        queue = deque([seed])
        while queue:
            cur = queue.popleft()
            for nb in adj[cur]:
                if nb not in labels:
                    labels[nb] = count
                    queue.append(nb)
    labeled = copy_tree(t)
    for path, lab in labels.items():
        _path_node(labeled, path).annotation = lab
    return labeled, count


def extract_component(labeled: Tree, label: int, k: int, r: int) -> Tree:
    """Canonical tree of the leaves carrying ``label``."""

    def rec(node):
        if node.left is None:
            return BLACK if node.black and node.annotation == label else WHITE
        return union_subtrees(rec(node.left), rec(node.right))

    return rec(labeled)


def segment_forest(labeled: Tree, count: int, k: int, r: int) -> list:
    """One canonical tree per label ``1..count``."""
    return [extract_component(labeled, i, k, r) for i in range(1, count + 1)]
