"""Graphs and simplicial complexes on the vertex set {1, ..., m}.

Complexes are kept as their maximal faces; the full face set is only
materialised on request, since clique complexes of dense graphs are large.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from .errors import ValidationError

Face = Tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..m."""

    m: int
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 0:
            raise ValidationError(f"vertex count must be a nonnegative integer, got {self.m!r}")
        norm = set()
        for e in self.edges:
            try:
                a, b = e
            except (TypeError, ValueError):
                raise ValidationError(f"edge {e!r} is not a pair") from None
            for v in (a, b):
                if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= self.m:
                    raise ValidationError(f"edge {e!r} has vertex outside 1..{self.m}")
            if a == b:
                raise ValidationError(f"loop at vertex {a}")
            pair = (min(a, b), max(a, b))
            if pair in norm:
                raise ValidationError(f"double edge {pair}")
            norm.add(pair)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, m: int, edges: Iterable) -> "Graph":
        return cls(m, frozenset(tuple(e) for e in edges))

    @classmethod
    def cycle(cls, m: int) -> "Graph":
        return cls(m, frozenset((i, i % m + 1) for i in range(1, m + 1)))

    @classmethod
    def complete(cls, m: int) -> "Graph":
        return cls(m, frozenset(combinations(range(1, m + 1), 2)))

    @classmethod
    def empty(cls, m: int) -> "Graph":
        return cls(m)

    @property
    def vertices(self) -> range:
        return range(1, self.m + 1)

    @cached_property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        adj: Dict[int, set] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(n) for v, n in adj.items()}

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex given by its maximal faces.

    ``vertices`` defaults to 1..m; restrictions keep the original labels and
    shrink ``vertices`` instead of relabelling.
    """

    m: int
    maximal_faces: Tuple[Face, ...]
    vertices: Tuple[int, ...] = field(default=None)

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 0:
            raise ValidationError(f"vertex count must be a nonnegative integer, got {self.m!r}")
        verts = tuple(range(1, self.m + 1)) if self.vertices is None else tuple(sorted(set(self.vertices)))
        for v in verts:
            if not 1 <= v <= self.m:
                raise ValidationError(f"vertex {v} outside 1..{self.m}")
        vset = set(verts)
        faces = set()
        for f in self.maximal_faces:
            f = tuple(sorted(set(f)))
            if not set(f) <= vset:
                raise ValidationError(f"face {list(f)} uses a vertex outside {list(verts)}")
            if f:
                faces.add(f)
        # singletons are always faces
        faces.update((v,) for v in verts)
        maximal = [f for f in faces if not any(len(g) > len(f) and set(f) < set(g) for g in faces)]
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "maximal_faces", tuple(sorted(maximal, key=lambda f: (len(f), f))))

    def contains(self, face: Iterable[int]) -> bool:
        s = set(face)
        if not s:
            return True
        return any(s <= set(f) for f in self.maximal_faces)

    def faces(self, max_size: Optional[int] = None) -> FrozenSet[Face]:
        """All faces (including the empty face), optionally capped by size."""
        out = {()}
        for f in self.maximal_faces:
            top = len(f) if max_size is None else min(len(f), max_size)
            for k in range(1, top + 1):
                out.update(combinations(f, k))
        return frozenset(out)

    def faces_of_size(self, k: int) -> List[Face]:
        return sorted(f for f in self.faces(max_size=k) if len(f) == k)

    def one_skeleton(self) -> Graph:
        return Graph(self.m, frozenset(self.faces_of_size(2)))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.maximal_faces), default=0) - 1


def clique_complex(g: Graph) -> SimplicialComplex:
    """Flag complex whose faces are the cliques of ``g``."""
    cliques = nx.find_cliques(g.to_networkx()) if g.m else []
    return SimplicialComplex(g.m, tuple(tuple(sorted(c)) for c in cliques))


def restriction(K: SimplicialComplex, J: Iterable[int]) -> SimplicialComplex:
    """Full subcomplex ``K_J``; labels are kept."""
    J = set(J)
    for v in J:
        if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= K.m:
            raise ValidationError(f"restriction index {v!r} outside 1..{K.m}")
    bad = J - set(K.vertices)
    if bad:
        raise ValidationError(f"vertices {sorted(bad)} are not in the complex")
    faces = {tuple(v for v in f if v in J) for f in K.maximal_faces}
    return SimplicialComplex(K.m, tuple(faces), vertices=tuple(sorted(J)))


def _components(vertices: Iterable[int], edges: Iterable[Tuple[int, int]]) -> Dict[int, int]:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(v) for v in parent})
    ids = {r: n for n, r in enumerate(roots)}
    return {v: ids[find(v)] for v in parent}


def connected_components(K: SimplicialComplex) -> Tuple[int, Dict[int, int]]:
    """Number of components and a vertex -> component id map.

    Ids are assigned in order of each component's smallest vertex; the empty
    complex has zero components.
    """
    edges = [(f[0], f[1]) for f in K.faces_of_size(2)]
    labels = _components(K.vertices, edges)
    return len(set(labels.values())), labels


def induced_components(g: Graph, J: Iterable[int]) -> Dict[int, int]:
    """Component labelling of the subgraph of ``g`` induced on ``J``."""
    J = set(J)
    return _components(sorted(J), [e for e in g.edges if e[0] in J and e[1] in J])


def count_components(g: Graph, J: Iterable[int]) -> int:
    return len(set(induced_components(g, J).values()))


def missing_face(K: SimplicialComplex) -> Optional[Face]:
    """A minimal non-face with at least three vertices, or None if K is flag.

    Cliques of the 1-skeleton are scanned by increasing size, so the first
    clique that is not a face has all its proper subsets in K.
    """
    graph = clique_complex(K.one_skeleton())
    by_size = sorted(graph.faces(), key=lambda f: (len(f), f))
    for f in by_size:
        if len(f) >= 3 and not K.contains(f):
            return f
    return None


def is_flag(K: SimplicialComplex) -> bool:
    return missing_face(K) is None


def lex_bfs(g: Graph) -> List[int]:
    """Lexicographic breadth-first ordering by partition refinement.

    Ties are broken by smallest label so the ordering is deterministic.
    """
    order: List[int] = []
    partition: List[List[int]] = [sorted(g.vertices)] if g.m else []
    adj = g.adjacency
    while partition:
        head = partition[0]
        v = head.pop(0)
        if not head:
            partition.pop(0)
        order.append(v)
        refined: List[List[int]] = []
        for block in partition:
            inside = [u for u in block if u in adj[v]]
            outside = [u for u in block if u not in adj[v]]
            refined.extend(b for b in (inside, outside) if b)
        partition = refined
    return order


def is_perfect_elimination_order(g: Graph, order: List[int]) -> bool:
    """Check that ``order`` eliminates vertices with clique later-neighbourhoods."""
    pos = {v: n for n, v in enumerate(order)}
    adj = g.adjacency
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if not set(later) - {parent} <= adj[parent]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    """Every cycle of length >= 4 has a chord.

    The reverse of a LexBFS order is a perfect elimination order exactly when
    the graph is chordal.
    """
    return is_perfect_elimination_order(g, lex_bfs(g)[::-1])


def canonicalize(K: SimplicialComplex) -> Tuple[SimplicialComplex, bool]:
    """Replace K by the clique complex of its 1-skeleton.

    Returns the flag complex and whether K already was flag.
    """
    was_flag = is_flag(K)
    return clique_complex(K.one_skeleton()), was_flag


def complex_from_json(data: dict) -> SimplicialComplex:
    """Build a complex from ``{"m":..., "edges":[...]}`` or ``{"m":..., "maximal_faces":[...]}``."""
    if not isinstance(data, dict):
        raise ValidationError("complex JSON must be an object")
    if "m" not in data:
        raise ValidationError("complex JSON needs an 'm' field")
    has_edges, has_faces = "edges" in data, "maximal_faces" in data
    if has_edges and has_faces:
        raise ValidationError("give either 'edges' or 'maximal_faces', not both")
    m = data["m"]
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValidationError(f"'m' must be a positive integer, got {m!r}")
    if has_faces:
        faces = data["maximal_faces"]
        if not isinstance(faces, list) or not all(isinstance(f, list) for f in faces):
            raise ValidationError("'maximal_faces' must be a list of lists")
        return SimplicialComplex(m, tuple(tuple(f) for f in faces))
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise ValidationError("'edges' must be a list of pairs")
    return clique_complex(Graph.from_edges(m, edges))


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"m": K.m, "maximal_faces": [list(f) for f in K.maximal_faces]}


def all_graphs(m: int) -> Iterator[Graph]:
    """Every labelled simple graph on 1..m (2^(m choose 2) of them)."""
    pairs = list(combinations(range(1, m + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(m, frozenset(p for n, p in enumerate(pairs) if mask >> n & 1))


def random_graph(m: int, rng, p: float = 0.5) -> Graph:
    pairs = combinations(range(1, m + 1), 2)
    return Graph(m, frozenset(e for e in pairs if rng.random() < p))
