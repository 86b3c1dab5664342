"""Radial homotopy integrators based at the origin.

Every integral runs along the straight segment ``t ↦ t x``, so polynomial
inputs give polynomial outputs.  The auxiliary variables ``t`` and ``s`` are
integrated out before anything is returned.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .elasticity import require_saint_venant, saint_venant, sym_gradient
from .polynomial import (
    Polynomial,
    definite_integral,
    drop_variable,
    scale_substitute,
)
from .tensor import SymmetryError, TensorError, TensorField, permutation_sign, require_symmetric

T_VAR = "t"
S_VAR = "s"


def _radial(p: Polynomial, var: str) -> Polynomial:
    """``p(var · x)`` in the context ``x + (var,)``."""
    return scale_substitute(p, var)


def _integrate_unit(p: Polynomial, var: str) -> Polynomial:
    return drop_variable(definite_integral(p, var, 0, 1), var)


def _coord(ctx: Sequence[str], i: int) -> Polynomial:
    return Polynomial.var(ctx[i], ctx)


def is_alternating(T: TensorField) -> bool:
    k = T.order
    for idx, p in T.items():
        for perm in itertools.permutations(range(k)):
            src = tuple(idx[perm[m]] for m in range(k))
            if T[src] != p * permutation_sign(perm):
                return False
    return True


def poincare_integrator(alpha: TensorField) -> TensorField:
    """``(K α)(x) = ∫₀¹ s^{k−1} (ι_x α)(s x) ds`` for a k-form ``α``, k ≥ 1.

    With the standard exterior derivative ``d``, ``K d α + d K α = α``.
    """
    k = alpha.order
    if k < 1:
        raise TensorError("the Poincaré integrator needs a form of degree >= 1")
    if not alpha.is_covariant():
        raise TensorError("expected a covariant form")
    if not is_alternating(alpha):
        raise SymmetryError("input is not an alternating form")
    n = alpha.dim
    ctx = alpha.variables
    ext = ctx + (S_VAR,)
    s = Polynomial.var(S_VAR, ext)
    weight = s ** (k - 1)
    xs = [_coord(ctx, i).embed(ext) for i in range(n)]

    def comp(rest):
        pairs = [(1, xs[i] * _radial(alpha[(i,) + rest], S_VAR)) for i in range(n)]
        integrand = Polynomial.lincomb(pairs, ext) * weight
        return _integrate_unit(integrand, S_VAR)

    return TensorField.from_function(n, "c" * (k - 1), comp)


def obstruction_K2(W: TensorField, *, check: bool = True) -> TensorField:
    """``(K₂W)_ij = ∫₀¹ dt ∫₀ᵗ s x^k x^l W_ijkl(s x) ds``.

    Nonzero output measures how far the strain behind ``W`` is from being
    compatible.
    """
    if W.order != 4:
        raise TensorError("K2 acts on order-4 fields")
    if check:
        require_saint_venant(W)
    n = W.dim
    ctx = W.variables
    ext = ctx + (T_VAR, S_VAR)
    s = Polynomial.var(S_VAR, ext)
    t = Polynomial.var(T_VAR, ext)
    xx = {
        (k, l): (_coord(ctx, k) * _coord(ctx, l)).embed(ext) for k in range(n) for l in range(n)
    }

    def comp(ij):
        pairs = []
        for k in range(n):
            for l in range(n):
                w = W[ij + (k, l)]
                if w:
                    pairs.append((1, xx[k, l] * _radial(w, S_VAR).embed(ext)))
        if not pairs:
            return Polynomial.zero(ctx)
        integrand = Polynomial.lincomb(pairs, ext) * s
        inner = definite_integral(integrand, S_VAR, 0, t)
        outer = definite_integral(inner, T_VAR, 0, 1)
        return drop_variable(drop_variable(outer, S_VAR), T_VAR)

    return TensorField.from_function(n, "cc", comp)


def cesaro_volterra_K1(eps: TensorField) -> TensorField:
    """Straight-path Cesàro-Volterra operator without the rigid part.

    ``(K₁ε)_i = ∫₀¹ x^k ε_ik(tx) dt + ∫₀¹ (1−t) x^k x^l (∂_l ε_ik − ∂_i ε_kl)(tx) dt``
    """
    require_symmetric(eps, "strain")
    n = eps.dim
    ctx = eps.variables
    ext = ctx + (T_VAR,)
    one_minus_t = 1 - Polynomial.var(T_VAR, ext)
    xs = [_coord(ctx, i) for i in range(n)]

    def comp(idx):
        (i,) = idx
        first = Polynomial.lincomb(((1, xs[k].embed(ext) * _radial(eps[i, k], T_VAR)) for k in range(n)), ext)
        second_pairs = []
        for k in range(n):
            for l in range(n):
                g = eps[i, k].diff(ctx[l]) - eps[k, l].diff(ctx[i])
                if g:
                    second_pairs.append((1, (xs[k] * xs[l]).embed(ext) * _radial(g, T_VAR)))
        second = Polynomial.lincomb(second_pairs, ext) * one_minus_t
        return _integrate_unit(first + second, T_VAR)

    return TensorField.from_function(n, "c", comp)


def rigid_displacement(xi0: Sequence, omega0: Sequence[Sequence], dim: int) -> TensorField:
    """``ξ₀ + Ω₀·x`` for a translation and an antisymmetric matrix."""
    ctx = tuple(f"x{i}" for i in range(1, dim + 1))
    xi0 = [Fraction(v) for v in xi0]
    om = [[Fraction(v) for v in row] for row in omega0]
    if len(xi0) != dim or len(om) != dim or any(len(r) != dim for r in om):
        raise TensorError("rigid motion data has the wrong size")
    if any(om[i][j] != -om[j][i] for i in range(dim) for j in range(dim)):
        raise SymmetryError("Ω₀ must be antisymmetric")
    xs = [_coord(ctx, i) for i in range(dim)]

    def comp(idx):
        (i,) = idx
        return Polynomial.lincomb(((om[i][j], xs[j]) for j in range(dim)), ctx) + xi0[i]

    return TensorField.from_function(dim, "c", comp)


def cesaro_volterra(eps: TensorField, xi0: Sequence | None = None, omega0: Sequence[Sequence] | None = None) -> TensorField:
    """Recover a displacement from a strain: ``K₁ε + ξ₀ + Ω₀·x``.

    When ``saint_venant(eps)`` vanishes, ``sym_gradient`` of the result is
    ``eps`` exactly.
    """
    n = eps.dim
    xi0 = [0] * n if xi0 is None else xi0
    omega0 = [[0] * n for _ in range(n)] if omega0 is None else omega0
    rigid = rigid_displacement(xi0, omega0, n)
    return cesaro_volterra_K1(eps) + rigid


def homotopy_residual(eps: TensorField) -> TensorField:
    """``ε − D₁K₁ε − K₂W(ε)``; identically zero for every polynomial strain."""
    W = saint_venant(eps)
    return eps - sym_gradient(cesaro_volterra_K1(eps)) - obstruction_K2(W, check=False)


def hessian_integrator(e: TensorField) -> TensorField:
    """Second-order radial integrator ``φ(x) = ∫₀¹ (1−t) x^i x^j e_ij(tx) dt``.

    If ``e`` is the Hessian of some ``ψ``, the result differs from ``ψ`` by an
    affine function, so its Hessian is ``e`` again.
    """
    require_symmetric(e, "tensor")
    n = e.dim
    ctx = e.variables
    ext = ctx + (T_VAR,)
    one_minus_t = 1 - Polynomial.var(T_VAR, ext)
    pairs = []
    for i in range(n):
        for j in range(n):
            if e[i, j]:
                xij = (_coord(ctx, i) * _coord(ctx, j)).embed(ext)
                pairs.append((1, xij * _radial(e[i, j], T_VAR)))
    integrand = Polynomial.lincomb(pairs, ext) * one_minus_t
    return TensorField.scalar(_integrate_unit(integrand, T_VAR), n)


def hessian(phi: TensorField) -> TensorField:
    p = phi.scalar_value()
    ctx = phi.variables
    return TensorField.from_function(phi.dim, "cc", lambda ij: p.diff(ctx[ij[0]]).diff(ctx[ij[1]]))

