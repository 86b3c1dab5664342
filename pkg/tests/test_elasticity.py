import random

import pytest

from dvcomplex.complex import ComplexPosition, dv_differential, is_member
from dvcomplex.elasticity import (
    column_curl,
    has_saint_venant_symmetries,
    inc_from_W,
    incompatibility,
    kulkarni_nomizu,
    reconstruct_W,
    require_saint_venant,
    row_curl,
    saint_venant,
    scal,
    scal_2d,
    spin,
    sym_gradient,
)
from dvcomplex.polynomial import coordinates, parse_polynomial
from dvcomplex.random_fields import random_symmetric, random_tensor
from dvcomplex.tensor import SymmetryError, TensorError, TensorField, euclid_metric, gradient

CTX = coordinates(3)


def P(text, n=3):
    return parse_polynomial(text, coordinates(n))


def test_strain_plus_spin_is_gradient():
    rng = random.Random(0)
    xi = random_tensor(rng, 3, 1, 3)
    # ∇ξ stores ∂_j ξ_i at (i, j)
    assert sym_gradient(xi) + spin(xi) == gradient(xi)


def test_W_is_three_times_d3_d2():
    rng = random.Random(1)
    eps = random_symmetric(rng, 3, 3)
    K = dv_differential(ComplexPosition(2, 2, 3), eps)
    assert dv_differential(ComplexPosition(2, 3, 3), K) * 3 == saint_venant(eps)


def test_W_symmetries():
    rng = random.Random(2)
    W = saint_venant(random_symmetric(rng, 3, 4))
    assert has_saint_venant_symmetries(W)
    assert is_member(ComplexPosition(2, 4, 3), W)
    require_saint_venant(W)


def test_require_saint_venant_rejects():
    rng = random.Random(3)
    with pytest.raises(SymmetryError):
        require_saint_venant(random_tensor(rng, 3, 4, 1))


def test_inc_is_curl_curl():
    rng = random.Random(4)
    eps = random_symmetric(rng, 3, 3)
    assert incompatibility(eps) == row_curl(column_curl(eps))


def test_scal_and_trace_of_inc():
    rng = random.Random(5)
    eps = random_symmetric(rng, 3, 3)
    W = saint_venant(eps)
    inc, s = inc_from_W(W)
    assert s == scal(W)
    assert s == inc[0, 0] + inc[1, 1] + inc[2, 2]


def test_incompatible_example_values():
    eps = TensorField.from_function(3, "cc", lambda ij: P("x2^2") if ij == (0, 0) else P("0"))
    W = saint_venant(eps)
    nz = W.nonzero()
    assert nz == {
        (0, 0, 1, 1): P("2"), (1, 1, 0, 0): P("2"),
        (0, 1, 1, 0): P("-2"), (1, 0, 0, 1): P("-2"),
    }
    inc, s = inc_from_W(W)
    assert s == P("2")
    assert inc.nonzero() == {(2, 2): P("2")}


def test_kulkarni_nomizu_of_metric():
    q = euclid_metric(3)
    qq = kulkarni_nomizu(q, q)
    assert qq[0, 0, 1, 1] == P("2")
    assert qq[0, 1, 1, 0] == P("-2")
    assert has_saint_venant_symmetries(qq)


def test_reconstruction_random_inc():
    # any symmetric a gives a W whose Inc is a again
    rng = random.Random(6)
    a = random_symmetric(rng, 3, 2)
    W = reconstruct_W(a)
    inc, _ = inc_from_W(W)
    assert inc == a


def test_planar_compatibility_scalar():
    # in the plane W = 0 reduces to Scal = 0
    eps = TensorField.from_function(2, "cc", lambda ij: P("x2^2", 2) if ij == (0, 0) else P("0", 2))
    assert scal_2d(saint_venant(eps)) == P("2", 2)
    rng = random.Random(7)
    xi = random_tensor(rng, 2, 1, 3)
    assert scal_2d(saint_venant(sym_gradient(xi))).is_zero()


def test_dimension_guards():
    eps2 = TensorField.zeros(2, "cc")
    with pytest.raises(TensorError):
        incompatibility(eps2)
    with pytest.raises(TensorError):
        scal_2d(saint_venant(TensorField.zeros(3, "cc")))
    bad = TensorField.from_function(3, "cc", lambda ij: P("1") if ij == (0, 1) else P("0"))
    with pytest.raises(SymmetryError):
        saint_venant(bad)
