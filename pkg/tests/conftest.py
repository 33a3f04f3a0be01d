import pytest

from paracon import (
    FinitePermutationAction,
    FiniteRegularAction,
    FreeSelfAction,
    Permutation,
    SymbolicSet,
    TrivialAction,
    parse_word,
)


@pytest.fixture
def f2():
    return FreeSelfAction(2)


@pytest.fixture
def five_blocks(f2):
    """{e}, cone(a), cone(A), cone(b), cone(B): the first-letter partition."""
    return [
        SymbolicSet.singleton(parse_word("e"), 2),
        SymbolicSet.cone(parse_word("a"), 2),
        SymbolicSet.cone(parse_word("A"), 2),
        SymbolicSet.cone(parse_word("b"), 2),
        SymbolicSet.cone(parse_word("B"), 2),
    ]


@pytest.fixture
def z3():
    return FinitePermutationAction(3, {1: Permutation((1, 2, 0))})


@pytest.fixture
def z4():
    return FinitePermutationAction(4, {1: Permutation((1, 2, 3, 0))})


@pytest.fixture
def s3_regular():
    return FiniteRegularAction({1: Permutation((1, 0, 2)), 2: Permutation((0, 2, 1))})


@pytest.fixture
def trivial3():
    return TrivialAction(degree=3)


def cone(text, rank=2):
    return SymbolicSet.cone(parse_word(text), rank)


def singleton(text, rank=2):
    return SymbolicSet.singleton(parse_word(text), rank)
