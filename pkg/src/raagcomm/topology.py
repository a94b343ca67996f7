"""Finite pieces of the covering spaces and their first homology.

``E_m^(s)`` is the grid graph on {0..s}^m whose edges are unit segments
parallel to the axes; it is the truncation of the covering of the wedge of
m circles that corresponds to the commutator subgroup of F_m.  For a flag
complex K, ``L_K^(s)`` adds a unit square for every edge {i, j} of K in the
(i, j)-plane; its H_1 counts minimal generators of the commutator subgroup.

Points are 0-based coordinate tuples; directions are 1-based generator
labels, so the edge ``(c, p)`` joins ``c`` to ``c + e_p``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .combinatorics import Graph, SimplicialComplex, canonicalize
from .errors import ConsistencyError, ValidationError
from .freegroup import Word
from .linalg import IntegerMatrix, rank, smith_invariants

Point = Tuple[int, ...]
Edge = Tuple[Point, int]


def _step(c: Point, direction: int, delta: int = 1) -> Point:
    lst = list(c)
    lst[direction - 1] += delta
    return tuple(lst)


@dataclass(frozen=True)
class GridGraph:
    m: int
    s: int

    def __post_init__(self):
        for name, v, lo in (("m", self.m, 1), ("s", self.s, 1)):
            if isinstance(v, bool) or not isinstance(v, int) or v < lo:
                raise ValidationError(f"{name} must be an integer >= {lo}, got {v!r}")

    def vertices(self) -> Iterable[Point]:
        return product(range(self.s + 1), repeat=self.m)

    def edges(self) -> Iterable[Edge]:
        for c in self.vertices():
            for p in range(1, self.m + 1):
                if c[p - 1] < self.s:
                    yield c, p

    def contains_point(self, c: Point) -> bool:
        return len(c) == self.m and all(0 <= x <= self.s for x in c)

    def contains_edge(self, edge: Edge) -> bool:
        c, p = edge
        return 1 <= p <= self.m and self.contains_point(c) and c[p - 1] < self.s

    @property
    def vertex_count(self) -> int:
        return (self.s + 1) ** self.m

    @property
    def edge_count(self) -> int:
        return self.m * self.s * (self.s + 1) ** (self.m - 1)


def build_grid(m: int, s: int) -> GridGraph:
    if isinstance(m, int) and m < 2:
        raise ValidationError(f"the grid needs m >= 2, got {m}")
    return GridGraph(m, s)


def cycle_rank(g) -> int:
    """E - V + (number of components) for a grid, a :class:`Graph`, or a ``(vertices, edges)`` pair."""
    if isinstance(g, GridGraph):
        vertices = list(g.vertices())
        edges = [(c, _step(c, p)) for c, p in g.edges()]
    elif isinstance(g, Graph):
        vertices = list(g.vertices)
        edges = list(g.edges)
    else:
        vertices, edges = g
        vertices, edges = list(vertices), list(edges)
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    components = len(parent)
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
    return len(edges) - len(vertices) + components


# -- the inductive maximal tree ----------------------------------------------


def in_maximal_tree(m: int, edge: Edge) -> bool:
    """Membership in the inductively built maximal tree of E_m.

    Edges along the last axis always belong to the tree.  An edge along axis
    ``p < m`` belongs to it iff the coordinates 1..p-1 and m are all zero.
    """
    c, p = edge
    if p == m:
        return True
    return c[m - 1] == 0 and all(x == 0 for x in c[: p - 1])


@lru_cache(maxsize=None)
def paper_spanning_tree(m: int, s: int) -> FrozenSet[Edge]:
    grid = build_grid(m, s)
    return frozenset(e for e in grid.edges() if in_maximal_tree(m, e))


def nontree_edges(m: int, s: int) -> List[Edge]:
    grid = build_grid(m, s)
    return [e for e in grid.edges() if not in_maximal_tree(m, e)]


@lru_cache(maxsize=None)
def _tree_parents(m: int, s: int) -> Dict[Point, Tuple[Point, int, int]]:
    """BFS in the tree from the origin: point -> (parent, direction, sign)."""
    tree = paper_spanning_tree(m, s)
    adj: Dict[Point, List[Tuple[Point, int, int]]] = {}
    for c, p in tree:
        d = _step(c, p)
        adj.setdefault(c, []).append((d, p, 1))
        adj.setdefault(d, []).append((c, p, -1))
    origin = (0,) * m
    parents: Dict[Point, Tuple[Point, int, int]] = {origin: None}
    queue = deque([origin])
    while queue:
        v = queue.popleft()
        for u, p, sign in sorted(adj.get(v, ())):
            if u not in parents:
                parents[u] = (v, p, sign)
                queue.append(u)
    return parents


def tree_path_word(m: int, s: int, point: Point) -> Word:
    """Word read along the tree path from the origin to ``point``."""
    parents = _tree_parents(m, s)
    if point not in parents:
        raise ValidationError(f"point {point} is not a vertex of E_{m}^({s})")
    steps = []
    v = point
    while parents[v] is not None:
        v, p, sign = parents[v]
        steps.append((p, sign))
    return Word(m, steps[::-1])


def nontree_loop_word(m: int, s: int, edge: Edge) -> Word:
    """Loop at the origin: tree path to ``c``, across the edge, tree path back."""
    c, p = tuple(edge[0]), edge[1]
    grid = build_grid(m, s)
    if not grid.contains_edge((c, p)):
        raise ValidationError(f"{(c, p)} is not an edge of E_{m}^({s})")
    if in_maximal_tree(m, (c, p)):
        raise ValidationError(f"edge {(c, p)} lies in the maximal tree")
    return tree_path_word(m, s, c) * Word.gen(m, p) * ~tree_path_word(m, s, _step(c, p))


def is_spanning_tree(vertices: Iterable[Point], edges: Iterable[Edge]) -> bool:
    vertices = list(vertices)
    pairs = [(c, _step(c, p)) for c, p in edges]
    if len(pairs) != len(vertices) - 1:
        return False
    return cycle_rank((vertices, pairs)) == 0


# -- cube complex ---------------------------------------------------------------

Cell = Tuple[Tuple[int, ...], Point]


class CubeComplex:
    """Cells of dimension 0..2 of ``(I_s, Z_{s+1})^K`` and their boundaries.

    A d-cell is ``(I, a)`` with ``I`` a d-face of K: it spans ``[a_i, a_i+1]``
    for ``i in I`` and sits at ``a_j`` in the other coordinates.  Edges are
    oriented toward increasing coordinate; the square ``((i, j), a)`` with
    ``i < j`` has boundary ``e_i(a) + e_j(a+e_i) - e_i(a+e_j) - e_j(a)``.
    """

    def __init__(self, K: SimplicialComplex, s: int):
        if isinstance(s, bool) or not isinstance(s, int) or s < 1:
            raise ValidationError(f"bound s must be a positive integer, got {s!r}")
        self.K, self.was_flag = canonicalize(K)
        self.m = K.m
        self.s = s
        self.cells: List[List[Cell]] = []
        for d in range(3):
            cells = []
            for face in self.K.faces_of_size(d):
                ranges = [range(s) if k in face else range(s + 1) for k in range(1, self.m + 1)]
                cells.extend((face, a) for a in product(*ranges))
            cells.sort()
            self.cells.append(cells)
        self.index = [{cell: n for n, cell in enumerate(cells)} for cells in self.cells]

    def counts(self) -> Tuple[int, int, int]:
        return tuple(len(c) for c in self.cells)

    def boundary(self, d: int) -> IntegerMatrix:
        if d not in (1, 2):
            raise ValidationError("only boundaries d1 and d2 are built")
        rows, cols = self.index[d - 1], self.cells[d]
        M = IntegerMatrix(len(rows), len(cols))
        for n, (face, a) in enumerate(cols):
            if d == 1:
                (i,) = face
                M.add(rows[((), _step(a, i))], n, 1)
                M.add(rows[((), a)], n, -1)
            else:
                i, j = face
                M.add(rows[((i,), a)], n, 1)
                M.add(rows[((j,), _step(a, i))], n, 1)
                M.add(rows[((i,), _step(a, j))], n, -1)
                M.add(rows[((j,), a)], n, -1)
        return M


def build_cube_complex(K: SimplicialComplex, s: int) -> CubeComplex:
    return CubeComplex(K, s)


def expected_cell_counts(K: SimplicialComplex, s: int) -> Tuple[int, int, int]:
    flag, _ = canonicalize(K)
    return tuple(
        len(flag.faces_of_size(d)) * s**d * (s + 1) ** (K.m - d) for d in range(3)
    )


def h1_rank_and_torsion(C: CubeComplex) -> Tuple[int, List[int]]:
    """Rank of H_1 and its torsion invariants (those > 1 among d2's Smith factors)."""
    d1, d2 = C.boundary(1), C.boundary(2)
    if not (d1 @ d2).is_zero():
        raise ConsistencyError("boundary of boundary is nonzero")
    edges = len(C.cells[1])
    inv2 = smith_invariants(d2)
    h1 = edges - rank(d1) - len(inv2)
    return h1, [d for d in inv2 if d > 1]
