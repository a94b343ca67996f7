"""Graph products with cyclic vertex groups.

The kernel of ``G^K -> prod G_k`` is free exactly when the 1-skeleton of K is
chordal, whatever the (nontrivial) vertex groups are.  Its minimal
generators carry the same vertex data as in the right-angled Artin case,
with one nontrivial element of ``G_k`` per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod
from typing import List, Optional, Tuple

from .combinatorics import Graph, count_components, is_chordal
from .errors import ValidationError
from .generators import skeleton_of, structural_problem, vertex_patterns


@dataclass(frozen=True)
class CyclicGroup:
    """Infinite cyclic when ``order`` is None, otherwise Z/order."""

    order: Optional[int] = None

    def __post_init__(self):
        if self.order is not None and (
            isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 2
        ):
            raise ValidationError(f"finite cyclic order must be an integer >= 2, got {self.order!r}")

    @property
    def infinite(self) -> bool:
        return self.order is None

    def elements(self, s: int) -> range:
        """Nontrivial elements used in enumeration: residues 1..n-1, or 1..s for Z."""
        return range(1, s + 1) if self.order is None else range(1, self.order)

    def to_json(self) -> dict:
        return {"type": "Z"} if self.order is None else {"type": "cyclic", "order": self.order}


Z = CyclicGroup()


@dataclass(frozen=True)
class VertexGroupSpec:
    groups: Tuple[CyclicGroup, ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))

    @property
    def m(self) -> int:
        return len(self.groups)

    def __getitem__(self, vertex: int) -> CyclicGroup:
        return self.groups[vertex - 1]

    @classmethod
    def all_infinite(cls, m: int) -> "VertexGroupSpec":
        return cls((Z,) * m)

    @classmethod
    def all_cyclic(cls, m: int, order: int) -> "VertexGroupSpec":
        return cls((CyclicGroup(order),) * m)

    def to_json(self) -> dict:
        return {"groups": [g.to_json() for g in self.groups]}

    @classmethod
    def from_json(cls, data: dict) -> "VertexGroupSpec":
        if not isinstance(data, dict) or not isinstance(data.get("groups"), list):
            raise ValidationError("group spec JSON needs a 'groups' list")
        groups = []
        for pos, g in enumerate(data["groups"], start=1):
            kind = g.get("type") if isinstance(g, dict) else None
            if kind == "Z":
                groups.append(Z)
            elif kind == "cyclic":
                groups.append(CyclicGroup(g.get("order")))
            else:
                raise ValidationError(f"vertex {pos}: group type must be 'Z' or 'cyclic', got {g!r}")
        return cls(tuple(groups))


@dataclass(frozen=True)
class GPDescriptor:
    ks: Tuple[int, ...]
    j: int
    i: int
    elements: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(self.ks))
        object.__setattr__(self, "elements", tuple(self.elements))
        problem = structural_problem(self.ks, self.j, self.i)
        if problem:
            raise ValidationError(f"invalid descriptor {self.vertices}: {problem}")
        if len(self.elements) != len(self.ks) + 2:
            raise ValidationError("one element per vertex is required")

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.ks + (self.j, self.i)

    def check_elements(self, spec: VertexGroupSpec):
        for v, x in zip(self.vertices, self.elements):
            group = spec[v]
            if x == 0 or (not group.infinite and x % group.order == 0):
                raise ValidationError(f"element {x} at vertex {v} is trivial")

    def to_json(self) -> dict:
        return {"ks": list(self.ks), "j": self.j, "i": self.i, "elements": list(self.elements)}

    @classmethod
    def from_json(cls, data: dict) -> "GPDescriptor":
        return cls(tuple(data["ks"]), data["j"], data["i"], tuple(data["elements"]))


def _check_spec(K, spec: VertexGroupSpec) -> Graph:
    g = skeleton_of(K)
    if spec.m != g.m:
        raise ValidationError(f"group spec has {spec.m} entries for {g.m} vertices")
    return g


def gp_is_free_kernel(K, spec: VertexGroupSpec) -> bool:
    """Freeness depends only on chordality of the 1-skeleton."""
    return is_chordal(_check_spec(K, spec))


def enumerate_gp_descriptors(K, spec: VertexGroupSpec, s: int = 1) -> List[GPDescriptor]:
    """Minimal generators with Z-vertex elements truncated to 1..s."""
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise ValidationError(f"bound s must be a positive integer, got {s!r}")
    g = _check_spec(K, spec)
    out = []
    for ks, j, i in vertex_patterns(g):
        verts = ks + (j, i)
        for elems in product(*(spec[v].elements(s) for v in verts)):
            out.append(GPDescriptor(ks, j, i, elems))
    return out


def gp_count(K, spec: VertexGroupSpec, s: int = 1) -> int:
    """Tuple count: sum over |J| >= 2 of (cc(K_J) - 1) * prod of per-vertex choices."""
    g = _check_spec(K, spec)
    choices = {v: len(spec[v].elements(s)) for v in g.vertices}
    return sum(
        (count_components(g, J) - 1) * prod(choices[v] for v in J)
        for size in range(2, g.m + 1)
        for J in combinations(g.vertices, size)
    )
