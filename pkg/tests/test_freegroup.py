from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raagcomm.errors import ValidationError
from raagcomm.freegroup import (
    Word,
    commutator,
    exponent_sums,
    format_word,
    invert,
    multiply,
    nested_commutator,
    parse_word,
    realize_nested,
    reduce,
    swap_expand,
)
from raagcomm.generators import CommutatorDescriptor

from oracles import expand_letters, letter_reduce

M = 4
raw_words = st.lists(st.tuples(st.integers(1, M), st.integers(-4, 4)), max_size=12)
words = raw_words.map(lambda raw: Word(M, raw))


def g(i, n=1, m=M):
    return Word.gen(m, i, n)


def test_reduce_examples():
    assert reduce([(1, 2), (1, -2)]).syllables == ()
    assert reduce([(1, 1), (2, 1), (2, -1), (1, 1)]).syllables == ((1, 2),)
    assert reduce([(1, 1), (2, 3)]).syllables == ((1, 1), (2, 3))
    assert reduce([(1, 0), (2, 0)], m=2).is_identity


def test_reduce_rejects_out_of_range():
    with pytest.raises(ValidationError):
        Word(2, [(3, 1)])
    with pytest.raises(ValidationError):
        Word(2, [(0, 1)])


@given(raw_words)
def test_reduce_matches_letter_stack(raw):
    w = Word(M, raw)
    assert expand_letters(w.syllables) == letter_reduce(expand_letters(raw))
    assert Word(M, w.syllables) == w


def test_multiply_and_invert_examples():
    assert (g(1) * g(1, -1)).is_identity
    assert invert(Word(2, [(1, 2), (2, -1)])).syllables == ((2, 1), (1, -2))
    b = Word(M, [(3, 2), (1, -1)])
    assert multiply(Word.identity(M), b) == b
    with pytest.raises(ValidationError):
        multiply(Word.identity(2), Word.identity(3))


@given(words, words, words)
def test_group_laws(a, b, c):
    assert (a * ~a).is_identity
    assert (a * b) * c == a * (b * c)
    assert exponent_sums(a * b) == tuple(x + y for x, y in zip(exponent_sums(a), exponent_sums(b)))
    assert not any(exponent_sums(commutator(a, b)))


def test_commutator_examples():
    assert commutator(g(1), g(2)).syllables == ((1, -1), (2, -1), (1, 1), (2, 1))
    w = Word(M, [(1, 2), (3, -1)])
    assert commutator(w, w).is_identity
    assert commutator(g(1), Word.identity(M)).is_identity


def test_power():
    assert g(2) ** 3 == g(2, 3)
    w = Word(M, [(1, 1), (2, 1)])
    assert w**-2 == ~w * ~w
    assert (w**0).is_identity


def test_realize_depth_two():
    d = CommutatorDescriptor((), 2, 1, (1, 1))
    assert realize_nested(d).syllables == ((2, -1), (1, -1), (2, 1), (1, 1))


def test_realize_depth_three_by_hand():
    # g1^-1 (g3,g2)^-1 g1 (g3,g2), expanded and reduced by hand
    d = CommutatorDescriptor((1,), 3, 2, (1, 1, 1))
    expected = ((1, -1), (2, -1), (3, -1), (2, 1), (3, 1), (1, 1), (3, -1), (2, -1), (3, 1), (2, 1))
    assert realize_nested(d).syllables == expected
    inner = commutator(g(3, m=3), g(2, m=3))
    assert realize_nested(d) == Word(3, letter_reduce(expand_letters(
        invert(g(1, m=3)).syllables + invert(inner).syllables + g(1, m=3).syllables + inner.syllables
    )))


def test_nested_commutator_needs_two_entries():
    with pytest.raises(ValidationError):
        nested_commutator([g(1)])


def test_exponent_sums_examples():
    assert exponent_sums(Word(2, [(1, 2), (2, -1), (1, -2), (2, 1)])) == (0, 0)
    assert exponent_sums(Word(3, [(1, 3)])) == (3, 0, 0)


@settings(max_examples=50)
@given(st.integers(2, 5).flatmap(lambda l: st.tuples(st.just(l), st.lists(st.sampled_from([-3, -1, 1, 2]), min_size=l, max_size=l))))
def test_realized_descriptors_lie_in_commutator_subgroup(data):
    size, exps = data
    d = CommutatorDescriptor(tuple(range(1, size - 1)), size, size - 1, tuple(exps))
    w = realize_nested(d)
    assert not any(exponent_sums(w))
    assert not w.is_identity


def _lhs(q, p, x):
    return commutator(q, commutator(p, x))


@pytest.mark.parametrize("nq,np_,nx", list(product([-2, -1, 1, 2], repeat=3)))
def test_swap_identity_single_syllables(nq, np_, nx):
    q, p, x = g(1, nq), g(2, np_), g(3, nx)
    assert (_lhs(q, p, x) * ~swap_expand(q, p, x)).is_identity


def test_swap_identity_degenerate_cases():
    q = g(1, 2)
    x = Word(M, [(3, 1), (2, -1)])
    assert _lhs(q, q, x) == swap_expand(q, q, x)
    e = Word.identity(M)
    assert swap_expand(q, g(2), e).is_identity
    assert _lhs(q, g(2), e).is_identity


@settings(max_examples=100)
@given(words, words, words)
def test_swap_identity_on_arbitrary_words(q, p, x):
    assert _lhs(q, p, x) == swap_expand(q, p, x)


def test_parse_and_format_round_trip():
    w = parse_word("1^2,2^-1,1^-2,2", 2)
    assert w.syllables == ((1, 2), (2, -1), (1, -2), (2, 1))
    assert format_word(w) == "1^2,2^-1,1^-2,2"
    assert parse_word(format_word(w), 2) == w
    assert parse_word("", 3).is_identity
    assert parse_word("e", 3).is_identity
    with pytest.raises(ValidationError):
        parse_word("1^x")
    with pytest.raises(ValidationError):
        parse_word("4", 3)
