"""Pointed directed multigraphs: the computable base space.

A complex is a finite set of vertices, a set of directed edges (parallel
edges and self-loops allowed), and a chosen basepoint.  Spanning trees give
every vertex a canonical path from the basepoint, and the edges left out of
the tree (chords) generate every based loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EndpointMismatch, NotConnected, ParseError, UnknownEdge
from .words import EdgeStep, PathWord, concat, empty_word, parse_step, reduce_word, reverse_word


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class BaseComplex:
    """Pointed directed multigraph with lexicographically ordered ids."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    basepoint: str
    _by_id: dict[str, Edge] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))
        vset = set(self.vertices)
        by_id: dict[str, Edge] = {}
        for e in self.edges:
            if e.id in by_id:
                raise ParseError(f"duplicate edge id {e.id!r}")
            if e.src not in vset:
                raise ParseError(f"edge {e.id!r} has unknown source vertex {e.src!r}")
            if e.dst not in vset:
                raise ParseError(f"edge {e.id!r} has unknown target vertex {e.dst!r}")
            by_id[e.id] = e
        if self.basepoint not in vset:
            raise ParseError(f"basepoint {self.basepoint!r} is not a vertex")
        object.__setattr__(self, "_by_id", by_id)

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownEdge(f"edge {edge_id!r} not in complex") from None

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._by_id

    def step_tail(self, step: EdgeStep) -> str:
        e = self.edge(step.edge)
        return e.src if step.forward else e.dst

    def step_head(self, step: EdgeStep) -> str:
        e = self.edge(step.edge)
        return e.dst if step.forward else e.src

    def out_steps(self, vertex: str) -> list[EdgeStep]:
        """All steps leaving `vertex`, ordered by (edge id, forward first)."""
        out = []
        for e in self.edges:
            if e.src == vertex:
                out.append(EdgeStep(e.id, True))
            if e.dst == vertex:
                out.append(EdgeStep(e.id, False))
        out.sort(key=lambda s: (s.edge, not s.forward))
        return out

    def word(self, steps, at: str | None = None) -> PathWord:
        """Build a word from steps, checking incidence; `at` anchors the empty word."""
        steps = tuple(steps)
        if not steps:
            if at is None:
                raise EndpointMismatch("empty word needs an anchor vertex")
            if at not in set(self.vertices):
                raise ParseError(f"unknown vertex {at!r}")
            return empty_word(at)
        verts = [self.step_tail(steps[0])]
        for step in steps:
            if self.step_tail(step) != verts[-1]:
                raise EndpointMismatch(
                    f"step {step} starts at {self.step_tail(step)!r}, expected {verts[-1]!r}"
                )
            verts.append(self.step_head(step))
        if at is not None and at != verts[0]:
            raise EndpointMismatch(f"word starts at {verts[0]!r}, not at {at!r}")
        return PathWord(steps, tuple(verts))

    def word_from_literal(self, text: str) -> PathWord:
        text = text.strip()
        if text.startswith("@"):
            return self.word((), at=text[1:].strip())
        return self.word(parse_step(tok) for tok in text.split(","))

    def is_connected(self) -> bool:
        """Every vertex reachable from the basepoint, ignoring edge direction."""
        seen = {self.basepoint}
        stack = [self.basepoint]
        while stack:
            v = stack.pop()
            for e in self.edges:
                for other in ((e.dst,) if e.src == v else ()) + ((e.src,) if e.dst == v else ()):
                    if other not in seen:
                        seen.add(other)
                        stack.append(other)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True, eq=False)
class SpanningTree:
    """A spanning tree with parent steps pointing toward the basepoint.

    `parent[v]` is the step that moves from v one tree edge closer to the
    basepoint; following parents from any vertex reaches the basepoint.
    """

    complex: BaseComplex
    tree_edges: frozenset[str]
    parent: dict[str, EdgeStep]

    def __eq__(self, other: object) -> bool:
        # parent map is determined by (complex, tree_edges)
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.complex == other.complex and self.tree_edges == other.tree_edges

    def __hash__(self) -> int:
        return hash((self.complex, self.tree_edges))

    def chords(self) -> list[str]:
        return [e.id for e in self.complex.edges if e.id not in self.tree_edges]


def build_tree(cx: BaseComplex) -> SpanningTree:
    """Deterministic spanning tree grown from the basepoint.

    Repeatedly attach the frontier edge minimizing (new vertex id, edge id);
    self-loops never enter the tree.  Identical inputs give identical trees.
    """
    if not cx.is_connected():
        raise NotConnected("complex is not connected")
    visited = {cx.basepoint}
    tree: set[str] = set()
    parent: dict[str, EdgeStep] = {}
    while len(visited) < len(cx.vertices):
        best = None
        for e in cx.edges:
            if e.src == e.dst:
                continue
            if e.src in visited and e.dst not in visited:
                cand = (e.dst, e.id, EdgeStep(e.id, False))  # step dst -> src, toward tree
            elif e.dst in visited and e.src not in visited:
                cand = (e.src, e.id, EdgeStep(e.id, True))
            else:
                continue
            if best is None or (cand[0], cand[1]) < (best[0], best[1]):
                best = cand
        assert best is not None  # connectivity guarantees a frontier edge
        new_vertex, _, step = best
        visited.add(new_vertex)
        tree.add(step.edge)
        parent[new_vertex] = step
    return SpanningTree(cx, frozenset(tree), parent)


def tree_path(tree: SpanningTree, vertex: str) -> PathWord:
    """Reduced word from the basepoint to `vertex` using only tree edges."""
    cx = tree.complex
    if vertex not in set(cx.vertices):
        raise ParseError(f"unknown vertex {vertex!r}")
    down: list[EdgeStep] = []
    v = vertex
    while v != cx.basepoint:
        step = tree.parent[v]
        down.append(step)
        v = cx.step_head(step)
    steps = tuple(s.flipped() for s in reversed(down))
    verts = [cx.basepoint]
    for s in steps:
        verts.append(cx.step_head(s))
    return PathWord(steps, tuple(verts))


def chord_loops(cx: BaseComplex, tree: SpanningTree) -> dict[str, PathWord]:
    """Generating based loops, one per chord.

    The loop for a chord e runs from the basepoint to the chord's tail along
    the tree, across e forward, and back along the tree; it traverses e
    exactly once and no other chord.
    """
    loops: dict[str, PathWord] = {}
    for chord in tree.chords():
        e = cx.edge(chord)
        across = cx.word((EdgeStep(chord, True),))
        loop = concat(concat(tree_path(tree, e.src), across), reverse_word(tree_path(tree, e.dst)))
        loops[chord] = reduce_word(loop)
    return loops


def radial_paths(cx: BaseComplex, origin: str) -> dict[str, PathWord]:
    """Shortest-path family from `origin`: one word per vertex, empty at origin.

    Layered breadth-first search with lexicographic (vertex id, edge id)
    tie-breaking, so the family is deterministic.
    """
    if origin not in set(cx.vertices):
        raise ParseError(f"unknown vertex {origin!r}")
    if not cx.is_connected():
        raise NotConnected("complex is not connected")
    parent: dict[str, EdgeStep] = {}
    seen = {origin}
    frontier = [origin]
    while frontier:
        candidates = []
        for v in frontier:
            for step in cx.out_steps(v):
                w = cx.step_head(step)
                if w not in seen:
                    candidates.append((w, step.edge, step))
        candidates.sort(key=lambda c: (c[0], c[1]))
        next_frontier = []
        for w, _, step in candidates:
            if w in seen:
                continue
            seen.add(w)
            parent[w] = step.flipped()  # step from w back toward origin
            next_frontier.append(w)
        frontier = next_frontier

    paths: dict[str, PathWord] = {}
    for v in cx.vertices:
        down: list[EdgeStep] = []
        u = v
        while u != origin:
            step = parent[u]
            down.append(step)
            u = cx.step_head(step)
        steps = tuple(s.flipped() for s in reversed(down))
        verts = [origin]
        for s in steps:
            verts.append(cx.step_head(s))
        paths[v] = PathWord(steps, tuple(verts))
    return paths


def factor_loop(tree: SpanningTree, loop: PathWord) -> list[tuple[str, int]]:
    """Chord occurrences of a based loop, in traversal order, with signs.

    Every reduced based loop is the product of its chord loops in this order;
    tree steps contribute nothing.
    """
    return [
        (s.edge, 1 if s.forward else -1)
        for s in loop.steps
        if s.edge not in tree.tree_edges
    ]
