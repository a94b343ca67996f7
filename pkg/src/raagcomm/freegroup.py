"""Words in the free group F_m stored as run-length syllables.

A word is a tuple of ``(generator, exponent)`` pairs with generators in
``1..m``.  Every :class:`Word` is freely reduced on construction, so two
words are equal as group elements iff they compare equal.

The commutator convention is ``(g, h) = g^-1 h^-1 g h`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import ValidationError

Syllable = Tuple[int, int]


def _freely_reduce(raw: Iterable[Syllable], m: int) -> Tuple[Syllable, ...]:
    out: list[list[int]] = []
    for gen, exp in raw:
        if isinstance(gen, bool) or not isinstance(gen, int) or not 1 <= gen <= m:
            raise ValidationError(f"generator index {gen!r} outside 1..{m}")
        if isinstance(exp, bool) or not isinstance(exp, int):
            raise ValidationError(f"exponent {exp!r} is not an integer")
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True)
class Word:
    """Freely reduced element of F_m.

    >>> Word(2, [(1, 1), (2, 1), (2, -1), (1, 1)]).syllables
    ((1, 2),)
    """

    m: int
    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ValidationError(f"alphabet size must be a positive integer, got {self.m!r}")
        object.__setattr__(self, "syllables", _freely_reduce(self.syllables, self.m))

    @classmethod
    def identity(cls, m: int) -> "Word":
        return cls(m, ())

    @classmethod
    def gen(cls, m: int, index: int, exponent: int = 1) -> "Word":
        return cls(m, ((index, exponent),))

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert(self) ** (-n)
        result = Word.identity(self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __len__(self) -> int:
        """Letter length of the reduced word."""
        return sum(abs(e) for _, e in self.syllables)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def letters(self) -> Iterator[Syllable]:
        """Yield the word one unit step ``(generator, +-1)`` at a time."""
        for gen, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, step

    def generators_used(self) -> frozenset:
        return frozenset(g for g, _ in self.syllables)

    def with_alphabet(self, m: int) -> "Word":
        """Same word viewed in F_m for a (possibly larger) alphabet."""
        return Word(m, self.syllables)


def reduce(raw: Sequence[Syllable], m: int | None = None) -> Word:
    """Freely reduce a raw syllable list; ``m`` defaults to the largest generator."""
    raw = list(raw)
    if m is None:
        m = max((g for g, _ in raw), default=1)
    return Word(m, raw)


def _check_alphabet(a: Word, b: Word):
    if a.m != b.m:
        raise ValidationError(f"alphabet mismatch: F_{a.m} vs F_{b.m}")


def multiply(a: Word, b: Word) -> Word:
    _check_alphabet(a, b)
    # only the junction can cancel, so reduce the concatenation directly
    return Word(a.m, a.syllables + b.syllables)


def invert(a: Word) -> Word:
    return Word(a.m, tuple((g, -e) for g, e in reversed(a.syllables)))


def product(words: Iterable[Word], m: int) -> Word:
    raw: list[Syllable] = []
    for w in words:
        if w.m != m:
            raise ValidationError(f"alphabet mismatch: F_{w.m} vs F_{m}")
        raw.extend(w.syllables)
    return Word(m, raw)


def commutator(a: Word, b: Word) -> Word:
    """``(a, b) = a^-1 b^-1 a b``."""
    _check_alphabet(a, b)
    return product((invert(a), invert(b), a, b), a.m)


def nested_commutator(entries: Sequence[Word]) -> Word:
    """Right-nested ``(e_1, (e_2, ..., (e_{l-1}, e_l)...))`` for ``l >= 2``."""
    if len(entries) < 2:
        raise ValidationError("a nested commutator needs at least two entries")
    acc = commutator(entries[-2], entries[-1])
    for e in reversed(entries[:-2]):
        acc = commutator(e, acc)
    return acc


def realize_nested(descriptor, m: int | None = None) -> Word:
    """Expand a descriptor ``(k_1, ..., k_r; j, i; exponents)`` into a word.

    The innermost pair is ``(g_j^{n_j}, g_i^{n_i})`` and the ``k`` entries wrap
    it from the inside out, so ``k_1`` ends up outermost.
    """
    vertices = descriptor.vertices
    if m is None:
        m = max(vertices)
    entries = [Word.gen(m, v, n) for v, n in zip(vertices, descriptor.exponents)]
    return nested_commutator(entries)


def exponent_sums(w: Word) -> Tuple[int, ...]:
    sums = [0] * w.m
    for g, e in w.syllables:
        sums[g - 1] += e
    return tuple(sums)


def in_commutator_subgroup(w: Word) -> bool:
    return not any(exponent_sums(w))


def swap_expand(q: Word, p: Word, x: Word) -> Word:
    """Right-hand side of the identity that moves ``q`` past ``p``.

    ``(q,(p,x)) = (q,x)(x,(p,q))(q,p)(x,p)(p,(q,x))(x,q)(p,q)(p,x)``
    """
    c = commutator
    factors = (
        c(q, x),
        c(x, c(p, q)),
        c(q, p),
        c(x, p),
        c(p, c(q, x)),
        c(x, q),
        c(p, q),
        c(p, x),
    )
    return product(factors, q.m)


def parse_word(text: str, m: int | None = None) -> Word:
    """Parse ``"1^2,2^-1,1^-2,2"``; a missing exponent means 1.

    An empty string or ``e`` gives the identity.
    """
    raw: list[Syllable] = []
    text = text.strip()
    if text and text not in ("e", "id"):
        for pos, token in enumerate(text.split(",")):
            token = token.strip()
            gen_s, sep, exp_s = token.partition("^")
            try:
                gen = int(gen_s)
                exp = int(exp_s) if sep else 1
            except ValueError:
                raise ValidationError(f"bad word token {token!r} at position {pos}") from None
            raw.append((gen, exp))
    if m is None:
        m = max((g for g, _ in raw), default=1)
    return Word(m, raw)


def format_word(w: Word) -> str:
    if not w.syllables:
        return "e"
    return ",".join(f"{g}^{e}" if e != 1 else f"{g}" for g, e in w.syllables)
