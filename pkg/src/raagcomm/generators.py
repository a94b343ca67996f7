"""Minimal iterated-commutator generating sets and their counting formulas.

A generator is described by its vertex data ``k_1 < ... < k_r < j > i`` and
one nonzero exponent per vertex; it stands for the nested commutator

    (g_{k_1}^{n}, (g_{k_2}^{n}, ..., (g_{k_r}^{n}, (g_j^{n}, g_i^{n}))...))

For a complex K it belongs to the minimal generating set of the commutator
subgroup when, inside the full subcomplex on its vertex set, ``i`` is the
smallest vertex of its connected component and that component misses ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .combinatorics import Graph, SimplicialComplex, induced_components
from .errors import ValidationError


@dataclass(frozen=True)
class CommutatorDescriptor:
    ks: Tuple[int, ...]
    j: int
    i: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(self.ks))
        object.__setattr__(self, "exponents", tuple(self.exponents))
        problem = structural_problem(self.ks, self.j, self.i)
        if problem:
            raise ValidationError(f"invalid descriptor {self.vertices}: {problem}")
        if len(self.exponents) != len(self.ks) + 2:
            raise ValidationError(
                f"descriptor {self.vertices} needs {len(self.ks) + 2} exponents, got {len(self.exponents)}"
            )
        if any(isinstance(n, bool) or not isinstance(n, int) or n == 0 for n in self.exponents):
            raise ValidationError(f"exponents must be nonzero integers, got {self.exponents}")

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.ks + (self.j, self.i)

    @property
    def depth(self) -> int:
        return len(self.ks) + 2

    def sort_key(self):
        return (self.depth, self.vertices, self.exponents)

    def negated(self) -> "CommutatorDescriptor":
        return CommutatorDescriptor(self.ks, self.j, self.i, tuple(-n for n in self.exponents))

    def to_json(self) -> dict:
        return {"ks": list(self.ks), "j": self.j, "i": self.i, "exponents": list(self.exponents)}

    @classmethod
    def from_json(cls, data: dict) -> "CommutatorDescriptor":
        try:
            return cls(tuple(data["ks"]), data["j"], data["i"], tuple(data["exponents"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed descriptor JSON {data!r}: {exc}") from None

    def __str__(self) -> str:
        inner = f"(g{self.j}^{self.exponents[-2]}, g{self.i}^{self.exponents[-1]})"
        for k, n in zip(reversed(self.ks), reversed(self.exponents[:-2])):
            inner = f"(g{k}^{n}, {inner})"
        return inner


def structural_problem(ks: Sequence[int], j: int, i: int) -> Optional[str]:
    """Why ``(ks; j, i)`` violates the ordering conditions, or None."""
    if any(a >= b for a, b in zip(ks, ks[1:])):
        return "ks must be strictly increasing"
    if any(k >= j for k in ks):
        return "every k must be smaller than j"
    if not i < j:
        return "i must be smaller than j"
    if i in ks:
        return "i must differ from every k"
    if min((*ks, j, i)) < 1:
        return "vertex labels start at 1"
    return None


def skeleton_of(K) -> Graph:
    return K if isinstance(K, Graph) else K.one_skeleton()


def satisfies_component_condition(K, ks: Sequence[int], j: int, i: int) -> bool:
    """``i`` is the least vertex of its component in K restricted to the vertex set, away from ``j``."""
    g = skeleton_of(K)
    verts = set(ks) | {j, i}
    labels = induced_components(g, verts)
    comp = labels[i]
    if labels[j] == comp:
        return False
    return min(v for v, c in labels.items() if c == comp) == i


def is_generator(K, d: CommutatorDescriptor) -> bool:
    return satisfies_component_condition(K, d.ks, d.j, d.i)


def vertex_patterns(K) -> List[Tuple[Tuple[int, ...], int, int]]:
    """All ``(ks, j, i)`` meeting the generator conditions, in canonical order.

    For a vertex set V, j is forced to be max(V); the admissible i are the
    minima of the components of K_V other than the one holding j.
    """
    g = skeleton_of(K)
    patterns = []
    for size in range(2, g.m + 1):
        level = []
        for V in combinations(g.vertices, size):
            j = V[-1]
            labels = induced_components(g, V)
            mins: Dict[int, int] = {}
            for v in V:
                mins[labels[v]] = min(mins.get(labels[v], v), v)
            for comp, i in mins.items():
                if comp == labels[j]:
                    continue
                ks = tuple(v for v in V if v not in (i, j))
                level.append((ks, j, i))
        level.sort(key=lambda p: p[0] + (p[1], p[2]))
        patterns.extend(level)
    return patterns


def enumerate_descriptors(K, s: int) -> List[CommutatorDescriptor]:
    """Generators whose exponents all lie in 1..s, in canonical order."""
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise ValidationError(f"bound s must be a positive integer, got {s!r}")
    out = []
    for ks, j, i in vertex_patterns(K):
        for exps in product(range(1, s + 1), repeat=len(ks) + 2):
            out.append(CommutatorDescriptor(ks, j, i, exps))
    return out


def iter_all_descriptors(K) -> Iterator[CommutatorDescriptor]:
    """Lazy enumeration over exponents in Z minus 0.

    Stage s emits exactly the descriptors with all |n| <= s and some |n| == s,
    so every generator appears once, at the first stage that reaches it.
    """
    patterns = vertex_patterns(K)
    if not patterns:
        return
    s = 1
    while True:
        values = [n for a in range(1, s + 1) for n in (-a, a)]
        values.sort()
        for ks, j, i in patterns:
            for exps in product(values, repeat=len(ks) + 2):
                if max(abs(n) for n in exps) == s:
                    yield CommutatorDescriptor(ks, j, i, exps)
        s += 1


# -- counting ---------------------------------------------------------------


def _check_ms(m, s):
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise ValidationError(f"m must be an integer >= 2, got {m!r}")
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise ValidationError(f"s must be a positive integer, got {s!r}")


def count_J(m: int, s: int) -> int:
    """Number of free-group basis commutators with exponents in 1..s."""
    _check_ms(m, s)
    return sum(comb(m, i) * (i - 1) * s**i for i in range(2, m + 1))


def count_W_recursive(m: int, s: int) -> int:
    _check_ms(m, s)
    w = s * s
    for n in range(3, m + 1):
        w = w * (s + 1) + (s + 1) ** (n - 1) * s - s
    return w


def count_W_closed(m: int, s: int) -> int:
    _check_ms(m, s)
    return (
        s * s * (s + 1) ** (m - 2)
        + (m - 2) * (s + 1) ** (m - 1) * s
        - s * sum((s + 1) ** i for i in range(m - 2))
    )


# Integer polynomials in s as coefficient lists, lowest degree first.


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for n, c in enumerate(a):
        out[n] += c
    for n, c in enumerate(b):
        out[n] += c
    return out


def _pscale(a, c, shift=0):
    return [0] * shift + [c * x for x in a]


def _binomial_poly(n):
    return [comb(n, k) for k in range(n + 1)]


def J_polynomial(m: int) -> List[int]:
    _check_ms(m, 1)
    coeffs = [0] * (m + 1)
    for i in range(2, m + 1):
        coeffs[i] = comb(m, i) * (i - 1)
    return coeffs


def W_closed_polynomial(m: int) -> List[int]:
    """Expand the closed form of W_m as a polynomial in s."""
    _check_ms(m, 1)
    poly = _pscale(_binomial_poly(m - 2), 1, shift=2)
    poly = _padd(poly, _pscale(_binomial_poly(m - 1), m - 2, shift=1))
    for i in range(m - 2):
        poly = _padd(poly, _pscale(_binomial_poly(i), -1, shift=1))
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def coefficient_of(m: int, k: int) -> int:
    """Coefficient of s^k in J_m, which is (k - 1) * C(m, k)."""
    if isinstance(m, bool) or not isinstance(m, int) or isinstance(k, bool) or not isinstance(k, int):
        raise ValidationError("m and k must be integers")
    if not 2 <= k <= m:
        raise ValidationError(f"need 2 <= k <= m, got k={k}, m={m}")
    return (k - 1) * comb(m, k)


@dataclass
class CountReport:
    m: int
    s: int
    J: int
    W_closed: int
    W_recursive: int
    P: int
    table: Dict[Tuple[int, ...], Tuple[int, int]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "s": self.s,
            "J": self.J,
            "W_closed": self.W_closed,
            "W_recursive": self.W_recursive,
            "P": self.P,
            "table": [
                {"subset": list(J), "cc": cc, "contribution": contrib}
                for J, (cc, contrib) in sorted(self.table.items(), key=lambda kv: (len(kv[0]), kv[0]))
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CountReport":
        table = {tuple(row["subset"]): (row["cc"], row["contribution"]) for row in data["table"]}
        return cls(data["m"], data["s"], data["J"], data["W_closed"], data["W_recursive"], data["P"], table)


def count_P(K, s: int) -> CountReport:
    """Sum of (cc(K_J) - 1) * s^|J| over subsets with |J| >= 2, plus the free-case numbers."""
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise ValidationError(f"bound s must be a positive integer, got {s!r}")
    g = skeleton_of(K)
    table = {}
    total = 0
    for size in range(2, g.m + 1):
        for J in combinations(g.vertices, size):
            cc = len(set(induced_components(g, J).values()))
            contrib = (cc - 1) * s**size
            table[J] = (cc, contrib)
            total += contrib
    if g.m >= 2:
        free = (count_J(g.m, s), count_W_closed(g.m, s), count_W_recursive(g.m, s))
    else:
        free = (0, 0, 0)
    return CountReport(g.m, s, *free, P=total, table=table)
