"""Constructive rewriting of commutator-subgroup elements of F_m.

* :func:`rewrite_f2` splits basis commutators off the left of a word in F_2'.
* :func:`lift_path` and :func:`decompose_loop` lift a word to the grid and
  cut the lifted loop at non-tree edges of the maximal tree.
* :func:`express_in_basis` writes each such loop as a product of the
  nested-commutator basis.  The basis elements with exponents in -s..-1 are
  loops inside {0..s}^m; folding their bouquet (Stallings) while carrying,
  on every edge, the element of the free group on the basis that the edge
  stands for turns reading a loop into reading off its factorisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .combinatorics import Graph
from .errors import BoundError, ValidationError, VerificationError
from .freegroup import Word, commutator, exponent_sums, invert, product, realize_nested
from .generators import CommutatorDescriptor, enumerate_descriptors
from .topology import Edge, Point, in_maximal_tree, nontree_loop_word

Factor = Tuple[CommutatorDescriptor, int]


@dataclass(frozen=True)
class FactorizedWord:
    """Ordered product of basis commutators, each raised to a sign ±1."""

    m: int
    factors: Tuple[Factor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for d, sign in self.factors:
            if sign not in (1, -1):
                raise ValidationError(f"factor sign must be +-1, got {sign!r}")
            if max(d.vertices) > self.m:
                raise ValidationError(f"factor {d} uses a generator beyond {self.m}")

    def __len__(self) -> int:
        return len(self.factors)

    def word(self) -> Word:
        parts = []
        for d, sign in self.factors:
            w = realize_nested(d, self.m)
            parts.append(w if sign == 1 else invert(w))
        return product(parts, self.m)

    def verifies(self, w: Word) -> bool:
        return self.word() == w.with_alphabet(self.m)

    def __add__(self, other: "FactorizedWord") -> "FactorizedWord":
        if self.m != other.m:
            raise ValidationError("alphabet mismatch between factorisations")
        return FactorizedWord(self.m, self.factors + other.factors)

    def to_json(self) -> dict:
        return {"m": self.m, "factors": [{"sign": s, "descriptor": d.to_json()} for d, s in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> "FactorizedWord":
        return cls(
            data["m"],
            tuple((CommutatorDescriptor.from_json(f["descriptor"]), f["sign"]) for f in data["factors"]),
        )


def alternation_count(w: Word) -> int:
    """Number of switches between generators, i.e. syllables minus one."""
    return max(len(w.syllables) - 1, 0)


def _require_commutator(w: Word):
    if any(exponent_sums(w)):
        raise ValidationError(f"word {w} is not in the commutator subgroup: exponent sums {exponent_sums(w)}")


def split_off_steps(w: Word) -> Iterator[Tuple[Factor, Word]]:
    """Yield ``(factor, remainder)`` pairs of the left split-off loop in F_2'.

    With ``phi = g_a^x g_b^y g_a^z psi`` one step uses
    ``g_a^x g_b^y g_a^-x g_b^-y``, which is ``(g_2^-y, g_1^-x)^-1`` when a = 1
    and ``(g_2^-x, g_1^-y)`` when a = 2, and continues with
    ``g_b^y g_a^(x+z) psi``, which has fewer alternations.
    """
    if w.generators_used() - {1, 2}:
        raise ValidationError("rewrite_f2 takes words in g_1 and g_2 only")
    _require_commutator(w)
    phi = w
    while phi.syllables:
        (a, x), (b, y) = phi.syllables[0], phi.syllables[1]
        if a == 1:
            factor = (CommutatorDescriptor((), 2, 1, (-y, -x)), -1)
        else:
            factor = (CommutatorDescriptor((), 2, 1, (-x, -y)), 1)
        phi = Word(phi.m, ((b, y), (a, x)) + phi.syllables[2:])
        yield factor, phi


def rewrite_f2(w: Word) -> FactorizedWord:
    """Factor ``w`` in F_2' into depth-2 commutators ``(g_2^n, g_1^k)^{±1}``."""
    factors = [f for f, _ in split_off_steps(w)]
    return FactorizedWord(max(w.m, 2), tuple(factors))


def lift_path(w: Word, m: int, s: int) -> List[Point]:
    """Vertices visited by the lift of ``w`` that starts at the origin.

    ``g_p`` steps along +e_p.  Raises :class:`BoundError` at the first prefix
    that leaves {0..s}^m.
    """
    if w.m > m or any(g > m for g in w.generators_used()):
        raise ValidationError(f"word uses generators beyond {m}")
    pos = [0] * m
    path = [tuple(pos)]
    for n, (g, sign) in enumerate(w.letters(), start=1):
        pos[g - 1] += sign
        if not 0 <= pos[g - 1] <= s:
            raise BoundError(
                f"lift leaves the cube [0,{s}]^{m} after {n} letters at {tuple(pos)}",
                prefix_length=n,
                position=tuple(pos),
            )
        path.append(tuple(pos))
    return path


@dataclass(frozen=True)
class LoopFactor:
    """A non-tree edge crossed forwards (+1) or backwards (-1)."""

    edge: Edge
    sign: int
    m: int
    s: int

    def word(self) -> Word:
        w = nontree_loop_word(self.m, self.s, self.edge)
        return w if self.sign == 1 else invert(w)


def decompose_loop(w: Word, m: int, s: int) -> List[LoopFactor]:
    """Non-tree edges crossed by the lifted loop, in order, with direction."""
    _require_commutator(w)
    path = lift_path(w, m, s)
    out = []
    for (g, sign), start, end in zip(w.letters(), path, path[1:]):
        tail = start if sign == 1 else end
        edge = (tail, g)
        if not in_maximal_tree(m, edge):
            out.append(LoopFactor(edge, sign, m, s))
    return out


class _FoldedBasis:
    """Stallings graph of the basis loops in E_m^(s), labelled by F(basis).

    Vertex 0 is the base point.  ``adj[v][(g, e)]`` is ``(u, label)``: the
    letter ``g^e`` leads from v to u and stands for ``label`` in the free
    group on the basis (alphabet size = number of basis elements).
    """

    def __init__(self, m: int, s: int):
        self.m, self.s = m, s
        self.basis = [d.negated() for d in enumerate_descriptors(Graph.empty(m), s)]
        self.rank = len(self.basis)
        n = max(self.rank, 1)
        self._one = Word.identity(n)
        self.adj: Dict[int, Dict[Tuple[int, int], List[Tuple[int, Word]]]] = {0: {}}
        next_vertex = 1
        for idx, d in enumerate(self.basis, start=1):
            letters = list(realize_nested(d, m).letters())
            v = 0
            for pos, (g, e) in enumerate(letters):
                last = pos == len(letters) - 1
                u = 0 if last else next_vertex
                if not last:
                    self.adj[u] = {}
                    next_vertex += 1
                label = Word.gen(n, idx) if last else self._one
                self._add_edge(v, g, e, u, label)
                v = u
        self._fold()

    def _add_edge(self, v, g, e, u, label):
        self.adj[v].setdefault((g, e), []).append((u, label))
        self.adj[u].setdefault((g, -e), []).append((v, invert(label)))

    def _fold(self):
        pending = list(self.adj)
        while pending:
            v = pending.pop()
            if v not in self.adj:
                continue
            for key, targets in list(self.adj[v].items()):
                if len(targets) < 2:
                    continue
                (u1, l1), (u2, l2) = targets[0], targets[1]
                g, e = key
                if u1 == u2:
                    if l1 != l2:
                        raise VerificationError(
                            "basis loops satisfy a relation; they are not free", counterexample=(l1, l2)
                        )
                    targets.pop(1)
                    self.adj[u1][(g, -e)].remove((v, invert(l2)))
                else:
                    if u2 == 0:
                        u1, u2, l1, l2 = u2, u1, l2, l1
                    self._merge(keep=u1, drop=u2, delta=invert(l1) * l2)
                    pending.extend((u1, v))
                pending.append(v)
                break

    def _merge(self, keep, drop, delta):
        # arriving at `drop` equals arriving at `keep` followed by `delta`
        inv_delta = invert(delta)
        out = self.adj.pop(drop)
        for (g, e), targets in out.items():
            for t, _ in targets:
                if t != drop:
                    rev = self.adj[t][(g, -e)]
                    self.adj[t][(g, -e)] = [(keep, lab * inv_delta) if x == drop else (x, lab) for x, lab in rev]
        for key, targets in out.items():
            for t, lab in targets:
                if t == drop:
                    t, lab = keep, lab * inv_delta
                self.adj[keep].setdefault(key, []).append((t, delta * lab))

    def read(self, w: Word) -> Word:
        """Element of F(basis) that the loop ``w`` at the base point spells."""
        v = 0
        acc = []
        for g, e in w.letters():
            targets = self.adj[v].get((g, e))
            if not targets:
                raise VerificationError(f"word {w} leaves the folded basis graph", counterexample=str(w))
            v, label = targets[0]
            acc.append(label)
        if v != 0:
            raise VerificationError(f"word {w} does not close up at the base point")
        return product(acc, self._one.m)

    def factorize(self, w: Word) -> FactorizedWord:
        out = []
        for idx, exp in self.read(w).syllables:
            d = self.basis[idx - 1]
            out.extend([(d, 1 if exp > 0 else -1)] * abs(exp))
        return FactorizedWord(self.m, tuple(out))


@lru_cache(maxsize=None)
def _folded_basis(m: int, s: int) -> _FoldedBasis:
    return _FoldedBasis(m, s)


def basis_elements(m: int, s: int) -> List[CommutatorDescriptor]:
    """Free-group basis commutators whose loops stay in {0..s}^m (exponents -s..-1)."""
    return list(_folded_basis(m, s).basis)


@lru_cache(maxsize=None)
def _express_edge(m: int, s: int, edge: Edge) -> FactorizedWord:
    loop = nontree_loop_word(m, s, edge)
    fw = _folded_basis(m, s).factorize(loop)
    if not fw.verifies(loop):
        raise VerificationError(f"factorisation of the loop at {edge} does not reduce to it")
    return fw


def express_in_basis(w: Word, m: int, s: int) -> FactorizedWord:
    """Write ``w`` in F_m' as a signed product of basis commutators.

    The result is checked by free reduction before it is returned; a failure
    raises :class:`VerificationError` rather than returning a wrong answer.
    """
    w = w.with_alphabet(m) if w.m < m else w
    pieces = decompose_loop(w, m, s)
    out = FactorizedWord(m)
    for piece in pieces:
        fw = _express_edge(m, s, piece.edge)
        if piece.sign == -1:
            fw = FactorizedWord(m, tuple((d, -sign) for d, sign in reversed(fw.factors)))
        out = out + fw
    if not out.verifies(w):
        raise VerificationError(f"factorisation of {w} does not reduce to it", counterexample=str(w))
    return out


def m3_loop_identity(c: Tuple[int, int, int], p: int) -> Tuple[Word, FactorizedWord]:
    """The two explicit m = 3 loop factorisations, as (loop word, factors).

    Factors whose commutator has a zero exponent are trivial and dropped.
    """
    c1, c2, c3 = c
    if p not in (1, 2):
        raise ValidationError("p must be 1 or 2")

    def f(vertices, exps, sign):
        ks, (j, i) = tuple(vertices[:-2]), vertices[-2:]
        if 0 in exps:
            return None
        return CommutatorDescriptor(ks, j, i, tuple(exps)), sign

    if p == 1:
        loop = Word(3, [(2, c2), (1, c1), (3, c3), (1, 1), (3, -c3), (1, -c1 - 1), (2, -c2)])
        raw = [
            f((2, 3, 1), (-c2, -c3, -c1), 1),
            f((3, 1), (-c3, -c1), -1),
            f((3, 1), (-c3, -c1 - 1), 1),
            f((2, 3, 1), (-c2, -c3, -c1 - 1), -1),
        ]
    else:
        loop = Word(3, [(2, c2), (1, c1), (3, c3), (2, 1), (3, -c3), (1, -c1), (2, -c2 - 1)])
        raw = [
            f((2, 1), (-c2, -c1), 1),
            f((1, 3, 2), (-c1, -c3, -c2), 1),
            f((3, 2), (-c3, -c2), -1),
            f((3, 2), (-c3, -c2 - 1), 1),
            f((1, 3, 2), (-c1, -c3, -c2 - 1), -1),
            f((2, 1), (-c2 - 1, -c1), -1),
        ]
    return loop, FactorizedWord(3, tuple(x for x in raw if x is not None))
