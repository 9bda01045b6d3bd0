"""Simple undirected graphs with 1-indexed vertices and lexicographically
ordered edges, plus the generators and reductions the rigidity machinery
builds on."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass


class GraphFormatError(ValueError):
    """Graph JSON does not match the expected schema."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n_vertices.

    Edges are (i, j) pairs with i < j, stored strictly ascending in
    lexicographic order with no duplicates. Use make_graph to canonicalize
    arbitrary pair lists.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.n_vertices, int) or self.n_vertices < 1:
            raise ValueError(f"n_vertices must be a positive integer, got {self.n_vertices!r}")
        prev = None
        for edge in self.edges:
            i, j = edge
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i < j <= self.n_vertices):
                raise ValueError(f"edge {edge} out of range for {self.n_vertices} vertices")
            if prev is not None and edge <= prev:
                raise ValueError("edges must be strictly ascending; use make_graph to canonicalize")
            prev = edge

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for i, j in self.edges if v == i or v == j)

    def neighbors(self, v: int) -> list[int]:
        out = [j if i == v else i for i, j in self.edges if v == i or v == j]
        return sorted(out)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n_vertices + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj


@dataclass(frozen=True)
class PruneTrace:
    """Record of iterated degree-1 removals.

    removed_vertices holds original labels in removal order; remaining is the
    surviving graph relabeled to 1..n preserving vertex order.
    """

    removed_vertices: tuple[int, ...]
    remaining: Graph

    @property
    def n(self) -> int:
        return len(self.removed_vertices)


def make_graph(n_vertices: int, edges) -> Graph:
    """Canonical Graph: pairs normalized to (min, max), duplicates dropped,
    edge list sorted lexicographically."""
    canon = set()
    for edge in edges:
        try:
            i, j = edge
        except (TypeError, ValueError):
            raise ValueError(f"edge {edge!r} is not a vertex pair") from None
        i, j = int(i), int(j)
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if i > j:
            i, j = j, i
        if i < 1 or j > int(n_vertices):
            raise ValueError(f"edge ({i},{j}) out of range for {n_vertices} vertices")
        canon.add((i, j))
    return Graph(int(n_vertices), tuple(sorted(canon)))


def connected_components(g: Graph) -> list[tuple[Graph, dict[int, int]]]:
    """Connected components with their vertex relabelings.

    Returns (component, relabel) pairs ordered by smallest original vertex,
    where relabel maps original labels to the component's 1..k_j labels in
    increasing original order.
    """
    adj = g.adjacency()
    seen: set[int] = set()
    comps = []
    for start in range(1, g.n_vertices + 1):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        verts = []
        while stack:
            v = stack.pop()
            verts.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        verts.sort()
        relabel = {v: idx for idx, v in enumerate(verts, start=1)}
        edges = [(relabel[i], relabel[j]) for i, j in g.edges if i in relabel]
        comps.append((make_graph(len(verts), edges), relabel))
    return comps


def spanning_tree(g: Graph) -> Graph:
    """Lexicographically earliest spanning tree.

    Scans edges in order and keeps each one that joins two distinct
    components, so the kept set is the lexicographically least basis of the
    graphic matroid. Raises on disconnected input.
    """
    parent = list(range(g.n_vertices + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    kept = []
    for i, j in g.edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            kept.append((i, j))
            if len(kept) == g.n_vertices - 1:
                break
    if len(kept) != g.n_vertices - 1:
        raise ValueError("graph is not connected")
    return Graph(g.n_vertices, tuple(kept))


def prune_degree_one(g: Graph) -> PruneTrace:
    """Iteratively remove degree-1 vertices, lowest index first.

    A vertex is removed only while its neighbor keeps degree at least 2
    afterwards, so pruning never strands an isolated vertex and stops at K2
    (per component) or when no degree-1 vertices remain. The removal count is
    order-independent; lowest-index-first only fixes the recorded order.
    """
    adj = g.adjacency()
    if any(not nbrs for nbrs in adj.values()):
        raise ValueError("isolated vertex present")
    removed = []
    while True:
        victim = None
        for v in sorted(adj):
            if len(adj[v]) == 1:
                nbr = next(iter(adj[v]))
                if len(adj[nbr]) >= 2:
                    victim = v
                    break
        if victim is None:
            break
        nbr = next(iter(adj[victim]))
        adj[nbr].discard(victim)
        del adj[victim]
        removed.append(victim)
    alive = sorted(adj)
    relabel = {v: idx for idx, v in enumerate(alive, start=1)}
    edges = [(relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel]
    return PruneTrace(tuple(removed), make_graph(len(alive), edges))


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete_graph needs n >= 2")
    return Graph(n, tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1)))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("path_graph needs n >= 2")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def star_graph(n: int) -> Graph:
    """Star with center 1 and leaves 2..n."""
    if n < 2:
        raise ValueError("star_graph needs n >= 2")
    return Graph(n, tuple((1, j) for j in range(2, n + 1)))


def double_banana() -> Graph:
    """Two copies of K5 minus an edge, glued along the endpoints 1, 2 of the
    missing edge: 8 vertices and 18 edges, minimum degree 4.

    The standard counterexample in three dimensions: it has the edge count of
    a minimally rigid graph but is generically flexible, so edge counting
    alone cannot certify rigidity for d >= 3.
    """
    blocks = ((1, 2, 3, 4, 5), (1, 2, 6, 7, 8))
    edges = set()
    for block in blocks:
        for a in range(5):
            for b in range(a + 1, 5):
                if (block[a], block[b]) != (1, 2):
                    edges.add((block[a], block[b]))
    return make_graph(8, edges)


def graph_from_json(text: str) -> Graph:
    """Parse {"vertices": n, "edges": [[i, j], ...]} (1-indexed pairs).

    The reader canonicalizes: pair order and duplicates are forgiven,
    structural problems raise GraphFormatError.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise GraphFormatError('graph JSON needs "vertices" and "edges" keys')
    n = obj["vertices"]
    edges = obj["edges"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise GraphFormatError('"vertices" must be an integer')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be a list of [i, j] pairs')
    pairs = []
    for entry in edges:
        if (not isinstance(entry, (list, tuple)) or len(entry) != 2
                or any(isinstance(v, bool) or not isinstance(v, int) for v in entry)):
            raise GraphFormatError(f"bad edge entry: {entry!r}")
        pairs.append((entry[0], entry[1]))
    try:
        return make_graph(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def graph_to_json(g: Graph) -> str:
    return json.dumps({"vertices": g.n_vertices, "edges": [list(e) for e in g.edges]})


def named_graph(name: str) -> Graph:
    """Resolve a built-in graph name: k<n>, path-<n>, star-<n>, double-banana.

    Raises KeyError for names that do not match any pattern, so callers can
    fall back to reading a file.
    """
    if name == "double-banana":
        return double_banana()
    for pattern, builder in (
        (r"k(\d+)", complete_graph),
        (r"path-(\d+)", path_graph),
        (r"star-(\d+)", star_graph),
    ):
        match = re.fullmatch(pattern, name)
        if match:
            return builder(int(match.group(1)))
    raise KeyError(name)
