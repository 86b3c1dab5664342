import random
from fractions import Fraction

import pytest

from dvcomplex.complex import (
    ComplexPosition,
    MembershipError,
    de_rham_scale,
    dv_differential,
    exterior_derivative,
    is_member,
    iterate_differential,
    project,
)
from dvcomplex.polynomial import coordinates, parse_polynomial
from dvcomplex.random_fields import random_member, random_tensor
from dvcomplex.tensor import TensorField, gradient

CTX = coordinates(3)


def P(text):
    return parse_polynomial(text, CTX)


def test_position_dimension():
    assert ComplexPosition(2, 4, 3).dimension == 6
    assert ComplexPosition(1, 2, 3).dimension == 3
    assert ComplexPosition(2, 2, 2).dimension == 3
    with pytest.raises(ValueError):
        ComplexPosition(0, 1, 3)


def test_d0_is_gradient():
    f = TensorField.scalar(P("x1^2 x3 - 2 x2"), 3)
    assert dv_differential(ComplexPosition(2, 0, 3), f) == gradient(f)


def test_membership_enforced():
    asym = TensorField.from_function(3, "cc", lambda ij: P("x1") if ij == (0, 1) else P("0"))
    assert not is_member(ComplexPosition(2, 2, 3), asym)
    with pytest.raises(MembershipError):
        dv_differential(ComplexPosition(2, 2, 3), asym)


@pytest.mark.parametrize("N,k", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 2)])
def test_output_is_member(N, k):
    rng = random.Random(N * 10 + k)
    pos = ComplexPosition(N, k, 3)
    T = random_member(rng, pos, 3)
    assert is_member(pos.next(), dv_differential(pos, T))


def test_exterior_derivative_of_one_form():
    # α = x2 x3 dx1 ;  dα = x3 dx2∧dx1 + x2 dx3∧dx1
    a = TensorField.from_nested([P("x2 x3"), P("0"), P("0")], 3, "c")
    d = exterior_derivative(a)
    assert d[1, 0] == P("x3") and d[0, 1] == P("-1 x3")
    assert d[2, 0] == P("x2") and d[1, 2] == P("0")


def test_de_rham_scale():
    assert [de_rham_scale(k) for k in range(4)] == [1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4)]


@pytest.mark.parametrize("N", [1, 2, 3])
def test_high_degree_nilpotency_in_plane(N):
    rng = random.Random(N)
    pos = ComplexPosition(N, 1, 2)
    T = random_member(rng, pos, N + 2)
    assert iterate_differential(pos, T, N + 1).is_zero()
    # one fewer step generally does not vanish
    assert not iterate_differential(pos, T, N).is_zero()


def test_projection_of_random_tensor_is_member():
    rng = random.Random(5)
    pos = ComplexPosition(2, 3, 3)
    assert is_member(pos, project(pos, random_tensor(rng, 3, 3, 2)))
