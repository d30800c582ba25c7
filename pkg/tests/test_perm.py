import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigmagraph.errors import GroupInputError
from sigmagraph.perm import Permutation

perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(range(n))).map(lambda xs: Permutation(tuple(xs)))


def test_from_cycles_zero_based():
    p = Permutation.from_cycles(4, [(0, 1, 2)])
    assert p.images == (1, 2, 0, 3)


def test_from_cycles_one_based():
    p = Permutation.from_cycles(4, [[1, 2], [3, 4]], one_based=True)
    assert p.images == (1, 0, 3, 2)


def test_from_cycles_rejects_out_of_range():
    with pytest.raises(GroupInputError):
        Permutation.from_cycles(3, [(0, 3)])


def test_from_cycles_rejects_overlap():
    with pytest.raises(GroupInputError):
        Permutation.from_cycles(4, [(0, 1), (1, 2)])


def test_mul_applies_left_factor_first():
    a = Permutation.from_cycles(3, [(0, 1)])
    b = Permutation.from_cycles(3, [(1, 2)])
    assert (a * b)(0) == 2
    assert (b * a)(0) == 1


def test_mul_degree_mismatch():
    with pytest.raises(GroupInputError):
        Permutation((1, 0)) * Permutation((1, 0, 2))


def test_order_and_cycles():
    p = Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])
    assert p.order() == 6
    assert p.cycles() == [(0, 1), (2, 3, 4)]
    assert str(p) == "(0 1)(2 3 4)"
    assert str(Permutation((0, 1, 2))) == "()"


@given(perms)
def test_inverse_cancels(p):
    assert (p * p.inverse()).is_identity
    assert (p.inverse() * p).is_identity


@given(perms)
def test_order_is_exponent(p):
    q = p
    for _ in range(p.order() - 1):
        q = q * p
    assert q.is_identity


@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(*(st.permutations(range(n)),) * 3)))
def test_associativity(triple):
    a, b, c = (Permutation(tuple(x)) for x in triple)
    assert (a * b) * c == a * (b * c)
