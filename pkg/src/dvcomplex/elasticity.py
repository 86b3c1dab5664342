"""Strain, the Saint-Venant tensor and the incompatibility tensor.

All fields are stored covariantly; the flat metric identifies upper and
lower indices.  The Saint-Venant tensor ``W`` is taken without the 1/3
factor that the second elasticity operator ``d_3 ∘ d_2`` carries, i.e.
``W = 3 · d_3 d_2 ε``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .complex import ComplexPosition, is_member
from .polynomial import Polynomial
from .tensor import (
    SymmetryError,
    TensorError,
    TensorField,
    contract,
    euclid_metric,
    levi_civita_value,
    require_symmetric,
)

SAINT_VENANT_POSITION = 4


def _require_dim3(T: TensorField, what: str):
    if T.dim != 3:
        raise TensorError(f"{what} is only defined in dimension 3")


def sym_gradient(xi: TensorField) -> TensorField:
    """``ε_ij = ½(∂_j ξ_i + ∂_i ξ_j)`` for a covariant displacement ``ξ♭``."""
    if xi.order != 1:
        raise TensorError("displacement must be a one-form")
    ctx = xi.variables
    half = Fraction(1, 2)
    return TensorField.from_function(
        xi.dim, "cc", lambda ij: (xi[ij[0]].diff(ctx[ij[1]]) + xi[ij[1]].diff(ctx[ij[0]])) * half
    )


def spin(xi: TensorField) -> TensorField:
    """``Ω_ij = ½(∂_j ξ_i - ∂_i ξ_j)``."""
    ctx = xi.variables
    half = Fraction(1, 2)
    return TensorField.from_function(
        xi.dim, "cc", lambda ij: (xi[ij[0]].diff(ctx[ij[1]]) - xi[ij[1]].diff(ctx[ij[0]])) * half
    )


def saint_venant(eps: TensorField) -> TensorField:
    """``W_ijkl = ∂_l∂_k ε_ij − ∂_l∂_i ε_jk + ∂_i∂_j ε_kl − ∂_k∂_j ε_il``."""
    require_symmetric(eps, "strain")
    n = eps.dim
    ctx = eps.variables
    # second derivatives, cached per (component, a, b)
    dd = {}
    for (i, j), p in eps.items():
        for a in range(n):
            pa = p.diff(ctx[a])
            for b in range(a, n):
                dd[i, j, a, b] = dd[i, j, b, a] = pa.diff(ctx[b])

    def comp(idx):
        i, j, k, l = idx
        return dd[i, j, l, k] - dd[j, k, l, i] + dd[k, l, i, j] - dd[i, l, k, j]

    return TensorField.from_function(n, "cccc", comp)


def has_saint_venant_symmetries(W: TensorField) -> bool:
    """Check the index symmetries of the (12|34) tableau and the pair symmetry."""
    n = W.dim
    for i, j, k, l in itertools.product(range(n), repeat=4):
        w = W[i, j, k, l]
        if W[k, j, i, l] != -w or W[i, l, k, j] != -w or W[k, l, i, j] != w:
            return False
        if W[i, j, k, l] + W[j, k, i, l] + W[k, i, j, l]:
            return False
        if W[i, j, k, l] + W[i, k, l, j] + W[i, l, j, k]:
            return False
    return True


def require_saint_venant(W: TensorField) -> None:
    if W.order != 4:
        raise TensorError("Saint-Venant tensor must have order 4")
    if not is_member(ComplexPosition(2, SAINT_VENANT_POSITION, W.dim), W.with_variance("cccc")):
        raise SymmetryError("tensor lacks the Saint-Venant index symmetries")


# -- curls and incompatibility (n = 3) -------------------------------------


def column_curl(L: TensorField) -> TensorField:
    """``(rot^c L)^i_j = ε^{ip}_q ∂_p L^q_j``."""
    _require_dim3(L, "column curl")
    if L.order != 2:
        raise TensorError("curl needs an order-2 field")
    ctx = L.variables

    def comp(ij):
        i, j = ij
        pairs = []
        for p in range(3):
            for q in range(3):
                e = levi_civita_value((i, p, q))
                if e:
                    pairs.append((e, L[q, j].diff(ctx[p])))
        return Polynomial.lincomb(pairs, ctx)

    return TensorField.from_function(3, L.variance, comp)


def row_curl(L: TensorField) -> TensorField:
    """``(rot^r L)^i_j = ε_j^{pq} ∂_p L^i_q``."""
    _require_dim3(L, "row curl")
    if L.order != 2:
        raise TensorError("curl needs an order-2 field")
    ctx = L.variables

    def comp(ij):
        i, j = ij
        pairs = []
        for p in range(3):
            for q in range(3):
                e = levi_civita_value((j, p, q))
                if e:
                    pairs.append((e, L[i, q].diff(ctx[p])))
        return Polynomial.lincomb(pairs, ctx)

    return TensorField.from_function(3, L.variance, comp)


def incompatibility(eps: TensorField) -> TensorField:
    """``(Inc ε)_kl = ε_k^{pi} ε_l^{rj} ∂_p ∂_r ε_ij``, the double-epsilon form."""
    _require_dim3(eps, "incompatibility")
    require_symmetric(eps, "strain")
    ctx = eps.variables
    eps_terms = [
        (t, levi_civita_value(t)) for t in itertools.product(range(3), repeat=3) if levi_civita_value(t)
    ]

    def comp(kl):
        k, l = kl
        pairs = []
        for (k1, p, i), e1 in eps_terms:
            if k1 != k:
                continue
            for (l1, r, j), e2 in eps_terms:
                if l1 != l:
                    continue
                pairs.append((e1 * e2, eps[i, j].diff(ctx[p]).diff(ctx[r])))
        return Polynomial.lincomb(pairs, ctx)

    return TensorField.from_function(3, "cc", comp)


def trace12(W: TensorField) -> TensorField:
    """``(tr_12 W)_kl = δ^{ij} W_ijkl``."""
    return contract(W, 0, 1, flat=True)


def scal(W: TensorField) -> Polynomial:
    """``Scal = ½ tr(tr_12 W)``."""
    t = contract(trace12(W), 0, 1, flat=True).scalar_value()
    return t * Fraction(1, 2)


def inc_from_W(W: TensorField, *, check: bool = True) -> tuple[TensorField, Polynomial]:
    """``Inc ε = −tr_12 W + Scal q`` together with ``Scal``."""
    _require_dim3(W, "Inc from W")
    if check:
        require_saint_venant(W)
    s = scal(W)
    q = euclid_metric(3)
    return -trace12(W) + q * s, s


def scal_2d(W: TensorField) -> Polynomial:
    """In the plane ``W = 0`` reduces to the single scalar ``Scal = 0``."""
    if W.dim != 2:
        raise TensorError("scal_2d expects a planar Saint-Venant tensor")
    return scal(W)


def kulkarni_nomizu(a: TensorField, b: TensorField) -> TensorField:
    """``(a∧b)_ijkl = a_ij b_kl + a_kl b_ij − a_jk b_il − a_il b_jk``."""
    require_symmetric(a, "first factor")
    require_symmetric(b, "second factor")
    if a.dim != b.dim:
        raise TensorError("dimension mismatch")

    def comp(idx):
        i, j, k, l = idx
        return a[i, j] * b[k, l] + a[k, l] * b[i, j] - a[j, k] * b[i, l] - a[i, l] * b[j, k]

    return TensorField.from_function(a.dim, "cccc", comp)


def reconstruct_W(inc: TensorField) -> TensorField:
    """``W = −Inc∧q + ½ Scal q∧q`` with ``Scal = tr Inc`` (dimension 3 only)."""
    _require_dim3(inc, "Saint-Venant reconstruction")
    require_symmetric(inc, "incompatibility tensor")
    q = euclid_metric(3)
    s = contract(inc, 0, 1, flat=True).scalar_value()
    return -kulkarni_nomizu(inc, q) + kulkarni_nomizu(q, q) * (s * Fraction(1, 2))
