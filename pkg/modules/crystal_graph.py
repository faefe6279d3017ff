"""Generic crystal-graph engine.

Any realization that implements `CrystalElement` can be closed under the
Kashiwara operators by `bfs_generate`, compared with `graphs_isomorphic` and
exported as DOT, JSON or plain text. Vertices are labelled by the element's
canonical key; edges carry the colour i of the lowering operator f_i.
"""

from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Optional

import networkx as nx
from networkx.algorithms import isomorphism

from .cartan import Weight, root_height
from .config_manager import thread_count
from .error_dispatcher import ErrorLevel, get_dispatcher
from .exceptions import DomainError, InfiniteCrystalError


class _Zero:
    """The crystal zero: the value of an operator that is undefined."""

    _instance: Optional[_Zero] = None

    def __new__(cls) -> _Zero:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


class CrystalElement:
    """Uniform face of every realization.

    Subclasses wrap one model element and expose the operators, the weight
    and the string functions. `infinite` marks models whose crystal has no
    lowest vertices, so that BFS insists on a depth limit.
    """

    infinite: bool = False

    @property
    def n(self) -> int:
        raise NotImplementedError()

    def canonical_key(self) -> str:
        raise NotImplementedError()

    def apply_f(self, i: int) -> Any:
        raise NotImplementedError()

    def apply_e(self, i: int) -> Any:
        raise NotImplementedError()

    def weight(self) -> Weight:
        raise NotImplementedError()

    def eps(self, i: int) -> int:
        raise NotImplementedError()

    def phi(self, i: int) -> int:
        raise NotImplementedError()

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.canonical_key()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.canonical_key()})"


@dataclass(frozen=True)
class Vertex:
    key: str
    wt: tuple[int, ...]
    depth: int


@dataclass(frozen=True)
class Edge:
    s: int
    t: int
    i: int


@dataclass
class CrystalGraph:
    """Rooted digraph with colour-labelled edges."""

    n: int
    vertices: list[Vertex]
    edges: list[Edge]
    root: int = 0
    truncated: bool = False
    depth_limit: Optional[int] = None
    elements: list[Any] = field(default_factory=list, compare=False, repr=False)

    def index_of(self, key: str) -> Optional[int]:
        for idx, vertex in enumerate(self.vertices):
            if vertex.key == key:
                return idx
        return None

    def keys(self) -> list[str]:
        return [v.key for v in self.vertices]

    def out_map(self) -> dict[tuple[int, int], int]:
        return {(e.s, e.i): e.t for e in self.edges}

    def in_map(self) -> dict[tuple[int, int], int]:
        return {(e.t, e.i): e.s for e in self.edges}

    def relative_weight(self, idx: int) -> tuple[int, ...]:
        """wt(root) - wt(v), a sum of simple roots."""
        root_wt = self.vertices[self.root].wt
        return tuple(a - b for a, b in zip(root_wt, self.vertices[idx].wt))

    def max_depth(self) -> int:
        return max((v.depth for v in self.vertices), default=0)


def _depth(root_wt: tuple[int, ...], wt: tuple[int, ...]) -> int:
    return root_height(Weight(tuple(a - b for a, b in zip(root_wt, wt))))


def _neighbours(element: Any, n: int, with_e: bool) -> tuple[list[Any], list[Any]]:
    f_results = [element.apply_f(i) for i in range(1, n + 1)]
    e_results = [element.apply_e(i) for i in range(1, n + 1)] if with_e else []
    return f_results, e_results


def bfs_generate(
    seed: CrystalElement,
    depth_limit: Optional[int] = None,
    threads: Optional[int] = None,
) -> CrystalGraph:
    """Close `seed` under the Kashiwara operators.

    Children are explored in colour order 1..n (f first, then e when the
    model is finite and no limit is set). `depth_limit` counts f-steps from
    the seed. Frontier vertices may be expanded on a thread pool; the merge
    walks the frontier in discovery order so the result does not depend on
    scheduling.

    Raises:
        InfiniteCrystalError: the model is infinite and no limit was given
    """
    if depth_limit is None and getattr(seed, "infinite", False):
        raise InfiniteCrystalError(
            f"{type(seed).__name__} generates an infinite crystal; a depth limit is required"
        )
    if depth_limit is not None and depth_limit < 0:
        raise DomainError(f"depth limit must be non-negative, got {depth_limit}")

    n = seed.n
    workers = thread_count() if threads is None else max(0, int(threads))
    with_e = depth_limit is None

    root_wt = seed.weight().coeffs
    elements: list[Any] = [seed]
    vertices: list[Vertex] = [Vertex(seed.canonical_key(), root_wt, 0)]
    index: dict[str, int] = {vertices[0].key: 0}
    f_cache: dict[int, list[Any]] = {}
    truncated = False

    frontier = [0]
    executor = ThreadPoolExecutor(max_workers=workers) if workers > 0 else None
    try:
        while frontier:
            expandable = [
                idx for idx in frontier
                if depth_limit is None or vertices[idx].depth < depth_limit
            ]
            for idx in frontier:
                if idx in expandable:
                    continue
                if any(elements[idx].apply_f(i) is not ZERO for i in range(1, n + 1)):
                    truncated = True
            jobs = [elements[idx] for idx in expandable]
            if executor is not None:
                results = list(executor.map(lambda el: _neighbours(el, n, with_e), jobs))
            else:
                results = [_neighbours(el, n, with_e) for el in jobs]

            next_frontier: list[int] = []
            for idx, (f_results, e_results) in zip(expandable, results):
                f_cache[idx] = f_results
                for child in list(f_results) + list(e_results):
                    if child is ZERO:
                        continue
                    key = child.canonical_key()
                    if key in index:
                        continue
                    wt = child.weight().coeffs
                    index[key] = len(vertices)
                    vertices.append(Vertex(key, wt, _depth(root_wt, wt)))
                    elements.append(child)
                    next_frontier.append(index[key])
            frontier = next_frontier
    finally:
        if executor is not None:
            executor.shutdown(wait=True)

    edges: list[Edge] = []
    for idx in range(len(vertices)):
        f_results = f_cache.get(idx)
        if f_results is None:
            continue
        for colour, child in enumerate(f_results, start=1):
            if child is ZERO:
                continue
            target = index.get(child.canonical_key())
            if target is not None:
                edges.append(Edge(idx, target, colour))

    graph = CrystalGraph(
        n=n,
        vertices=vertices,
        edges=edges,
        root=0,
        truncated=truncated,
        depth_limit=depth_limit,
        elements=elements,
    )
    get_dispatcher().emit(
        ErrorLevel.INFO,
        "crystal generated",
        context="crystal_graph.bfs_generate",
        data={
            "model": type(seed).__name__,
            "vertices": len(vertices),
            "edges": len(edges),
            "truncated": truncated,
            "threads": workers,
        },
    )
    return graph


def _comparison_limit(g1: CrystalGraph, g2: CrystalGraph) -> Optional[int]:
    limits = [g.depth_limit for g in (g1, g2) if g.truncated and g.depth_limit is not None]
    if not limits:
        return None
    return min(limits)


def graphs_isomorphic(g1: CrystalGraph, g2: CrystalGraph, compare_weights: bool = True) -> bool:
    """Decide whether two rooted coloured crystal graphs are isomorphic.

    Each vertex has at most one outgoing and one incoming edge per colour,
    so a colour-preserving map fixing the root is forced; it is built by a
    parallel traversal over both edge directions. Truncated graphs are
    compared up to the smaller depth limit: vertices at that depth are
    matched, their missing children are not.
    """
    if g1.n != g2.n:
        return False
    limit = _comparison_limit(g1, g2)

    def in_scope(g: CrystalGraph, idx: int) -> bool:
        return limit is None or g.vertices[idx].depth <= limit

    scope1 = [idx for idx in range(len(g1.vertices)) if in_scope(g1, idx)]
    scope2 = [idx for idx in range(len(g2.vertices)) if in_scope(g2, idx)]
    if len(scope1) != len(scope2):
        return False

    out1, out2 = g1.out_map(), g2.out_map()
    in1, in2 = g1.in_map(), g2.in_map()
    forward = {g1.root: g2.root}
    backward = {g2.root: g1.root}
    queue = deque([(g1.root, g2.root)])

    def pair(u: Optional[int], v: Optional[int]) -> bool:
        if u is not None and not in_scope(g1, u):
            u = None
        if v is not None and not in_scope(g2, v):
            v = None
        if (u is None) != (v is None):
            return False
        if u is None:
            return True
        if forward.get(u, v) != v or backward.get(v, u) != u:
            return False
        if u not in forward:
            forward[u] = v
            backward[v] = u
            queue.append((u, v))
        return True

    while queue:
        u, v = queue.popleft()
        if compare_weights and g1.relative_weight(u) != g2.relative_weight(v):
            return False
        at_frontier = limit is not None and (
            g1.vertices[u].depth >= limit or g2.vertices[v].depth >= limit
        )
        for colour in range(1, g1.n + 1):
            if not at_frontier and not pair(out1.get((u, colour)), out2.get((v, colour))):
                return False
            if not pair(in1.get((u, colour)), in2.get((v, colour))):
                return False

    return len(forward) == len(scope1)


# ---------------------------------------------------------------------------
# Export / import
# ---------------------------------------------------------------------------

EDGE_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {", "    node [shape=box];"]
    for idx, vertex in enumerate(g.vertices):
        lines.append(f'    v{idx} [label="{_dot_escape(vertex.key)}"];')
    for edge in g.edges:
        colour = EDGE_PALETTE[(edge.i - 1) % len(EDGE_PALETTE)]
        lines.append(f'    v{edge.s} -> v{edge.t} [label="{edge.i}", color="{colour}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: CrystalGraph) -> dict:
    return {
        "n": g.n,
        "root": g.root,
        "truncated": g.truncated,
        "depth_limit": g.depth_limit,
        "vertices": [{"key": v.key, "wt": list(v.wt)} for v in g.vertices],
        "edges": [{"s": e.s, "t": e.t, "i": e.i} for e in g.edges],
    }


def export_json(g: CrystalGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2) + "\n"


def import_json(text: str) -> CrystalGraph:
    """Rebuild a graph written by `export_json`; depths are recomputed from weights."""
    data = json.loads(text)
    try:
        root = int(data["root"])
        raw_vertices = data["vertices"]
        root_wt = tuple(int(c) for c in raw_vertices[root]["wt"])
        vertices = []
        for raw in raw_vertices:
            wt = tuple(int(c) for c in raw["wt"])
            vertices.append(Vertex(str(raw["key"]), wt, _depth(root_wt, wt)))
        edges = [Edge(int(e["s"]), int(e["t"]), int(e["i"])) for e in data["edges"]]
        n = int(data.get("n", len(root_wt)))
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed crystal graph JSON: {exc}") from exc
    limit = data.get("depth_limit")
    return CrystalGraph(
        n=n,
        vertices=vertices,
        edges=edges,
        root=root,
        truncated=bool(data.get("truncated", False)),
        depth_limit=None if limit is None else int(limit),
    )


def export_text(g: CrystalGraph) -> str:
    lines = [f"# n={g.n} vertices={len(g.vertices)} edges={len(g.edges)} truncated={str(g.truncated).lower()}"]
    for idx, vertex in enumerate(g.vertices):
        wt = ",".join(str(c) for c in vertex.wt)
        lines.append(f"{idx}\t{vertex.key}\twt=({wt})\tdepth={vertex.depth}")
    for edge in g.edges:
        lines.append(f"{edge.s} -{edge.i}-> {edge.t}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# networkx bridge
# ---------------------------------------------------------------------------

def to_networkx(g: CrystalGraph, max_depth: Optional[int] = None) -> nx.DiGraph:
    graph = nx.DiGraph()
    for idx, vertex in enumerate(g.vertices):
        if max_depth is not None and vertex.depth > max_depth:
            continue
        graph.add_node(
            idx,
            key=vertex.key,
            rel_wt=g.relative_weight(idx),
            depth=vertex.depth,
            is_root=(idx == g.root),
        )
    for edge in g.edges:
        if edge.s in graph and edge.t in graph:
            graph.add_edge(edge.s, edge.t, color=edge.i)
    return graph


def networkx_isomorphic(g1: CrystalGraph, g2: CrystalGraph, compare_weights: bool = True) -> bool:
    """Independent check of `graphs_isomorphic` through VF2."""
    if g1.n != g2.n:
        return False
    limit = _comparison_limit(g1, g2)
    nx1 = to_networkx(g1, limit)
    nx2 = to_networkx(g2, limit)

    def node_match(a: dict, b: dict) -> bool:
        if a["is_root"] != b["is_root"]:
            return False
        return not compare_weights or a["rel_wt"] == b["rel_wt"]

    matcher = isomorphism.DiGraphMatcher(
        nx1,
        nx2,
        node_match=node_match,
        edge_match=isomorphism.categorical_edge_match("color", None),
    )
    return matcher.is_isomorphic()


def check_edge_axioms(g: CrystalGraph, elements: Optional[list[Any]] = None) -> list[str]:
    """List violations of: edge (u -> v, i) iff f_i u = v iff e_i v = u."""
    elements = elements if elements is not None else g.elements
    if len(elements) != len(g.vertices):
        raise DomainError("edge axioms need one element per vertex")
    out_edges = g.out_map()
    index = {v.key: idx for idx, v in enumerate(g.vertices)}
    problems: list[str] = []
    for idx, element in enumerate(elements):
        expandable = g.depth_limit is None or g.vertices[idx].depth < g.depth_limit
        for colour in range(1, g.n + 1):
            image = element.apply_f(colour)
            target = None if image is ZERO else index.get(image.canonical_key())
            if expandable and out_edges.get((idx, colour)) != target:
                problems.append(f"f_{colour} of vertex {idx} disagrees with the recorded edge")
            if target is not None:
                back = elements[target].apply_e(colour)
                if back is ZERO or back.canonical_key() != g.vertices[idx].key:
                    problems.append(f"e_{colour} does not invert f_{colour} at vertex {idx}")
    for edge in g.edges:
        back = elements[edge.t].apply_e(edge.i)
        if back is ZERO or back.canonical_key() != g.vertices[edge.s].key:
            problems.append(f"edge {edge.s} -{edge.i}-> {edge.t} is not inverted by e_{edge.i}")
    return problems


__all__ = [
    "ZERO",
    "CrystalElement",
    "Vertex",
    "Edge",
    "CrystalGraph",
    "bfs_generate",
    "graphs_isomorphic",
    "export_dot",
    "export_json",
    "graph_to_dict",
    "import_json",
    "export_text",
    "to_networkx",
    "networkx_isomorphic",
    "check_edge_axioms",
]
