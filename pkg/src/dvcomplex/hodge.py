"""Generalized Hodge star for the N=2 complex, the dual complex and stress potentials.

For a member ``T`` of Ω^k_2(R^n) the first tableau column holds the odd
slots and the second column the even slots.  The star contracts each input
column with one Levi-Civita symbol, filling that symbol up with output
indices of the dual degree ``m = 2n − k``:

* ``k`` even: input column 1 pairs with output column 1, column 2 with column 2;
* ``k`` odd: input column 2 pairs with output column 1, column 1 with column 2.

Within each symbol the input indices come first, then the output indices.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .complex import ComplexPosition, MembershipError, dv_differential, is_member
from .elasticity import saint_venant, sym_gradient
from .homotopy import cesaro_volterra_K1, hessian_integrator, obstruction_K2
from .polynomial import Polynomial
from .tensor import (
    TensorError,
    TensorField,
    divergence,
    flat_index,
    levi_civita_value,
    multi_indices,
    require_symmetric,
)


def _columns(k: int) -> tuple[list[int], list[int]]:
    """0-based slots of the two columns of the N=2 tableau of size ``k``."""
    return list(range(0, k, 2)), list(range(1, k, 2))


def _pairing(k: int, n: int):
    """Which input column feeds which output column, as slot lists."""
    in1, in2 = _columns(k)
    out1, out2 = _columns(2 * n - k)
    if k % 2 == 0:
        return [(in1, out1), (in2, out2)]
    return [(in2, out1), (in1, out2)]


def _check_range(k: int, n: int):
    if n not in (2, 3):
        raise TensorError("the generalized star is provided for n = 2 and n = 3")
    if not 0 <= k <= 2 * n:
        raise TensorError(f"degree {k} outside 0..{2 * n}")


def _star_normalization(k: int, n: int) -> int:
    """``★⁻¹ ★`` via the transposed contraction multiplies members by this."""
    in1, in2 = _columns(k)
    return math.prod(math.factorial(n - len(c)) * math.factorial(len(c)) for c in (in1, in2))


def _contraction_table(k: int, n: int):
    """Nonzero entries ``(input flat, output flat, sign)`` of the double-epsilon map."""
    m = 2 * n - k
    pairing = _pairing(k, n)
    entries = []
    for out_idx in multi_indices(n, m):
        for in_idx in multi_indices(n, k):
            sign = 1
            for in_slots, out_slots in pairing:
                e = levi_civita_value([in_idx[s] for s in in_slots] + [out_idx[s] for s in out_slots])
                if not e:
                    sign = 0
                    break
                sign *= e
            if sign:
                entries.append((flat_index(in_idx, n), flat_index(out_idx, n), sign))
    return entries


_TABLES: dict[tuple[int, int], list] = {}


def _table(k: int, n: int):
    key = (k, n)
    if key not in _TABLES:
        _TABLES[key] = _contraction_table(k, n)
    return _TABLES[key]


def hodge_star(T: TensorField, *, check: bool = True) -> TensorField:
    """``★_k : Ω^k_2(R^n) → Ω^{2n−k}_2(R^n)*``."""
    k, n = T.order, T.dim
    _check_range(k, n)
    if not T.is_covariant():
        raise TensorError("the star acts on covariant fields")
    if check and not is_member(ComplexPosition(2, k, n), T):
        raise MembershipError(f"field is not a member of Ω^{k}_2(R^{n})")
    m = 2 * n - k
    ctx = T.variables
    buckets: list[list] = [[] for _ in range(n**m)]
    for src, dst, sign in _table(k, n):
        if T.components[src]:
            buckets[dst].append((sign, T.components[src]))
    return TensorField(n, "v" * m, [Polynomial.lincomb(b, ctx) for b in buckets])


def hodge_star_inverse(P: TensorField, *, check: bool = True) -> TensorField:
    """Inverse of ``★_k`` where ``k = 2n − order(P)``."""
    n = P.dim
    k = 2 * n - P.order
    _check_range(k, n)
    if not P.is_contravariant():
        raise TensorError("the inverse star acts on contravariant fields")
    if check and not is_member(ComplexPosition(2, P.order, n), P):
        raise MembershipError(f"field is not a member of Ω^{P.order}_2(R^{n})*")
    c = Fraction(1, _star_normalization(k, n))
    ctx = P.variables
    buckets: list[list] = [[] for _ in range(n**k)]
    for src, dst, sign in _table(k, n):
        if P.components[dst]:
            buckets[src].append((sign * c, P.components[dst]))
    return TensorField(n, "c" * k, [Polynomial.lincomb(b, ctx) for b in buckets])


def codifferential(P: TensorField, *, check: bool = True) -> TensorField:
    """``d*_j = ★_{2n−j} ∘ d_{2n−j−1} ∘ ★⁻¹_{2n−j−1}`` for ``P`` of dual degree ``j+1``."""
    n = P.dim
    primal = hodge_star_inverse(P, check=check)
    k = primal.order
    dT = dv_differential(ComplexPosition(2, k, n), primal, check=False)
    return hodge_star(dT, check=False)


def is_dual_member(P: TensorField) -> bool:
    return P.is_contravariant() and is_member(ComplexPosition(2, P.order, P.dim), P)


# -- stress potentials -------------------------------------------------------


def airy_stress(phi: Polynomial | TensorField) -> TensorField:
    """``σ^{ij} = ε^{ik} ε^{jl} ∂_k ∂_l φ`` in the plane."""
    if isinstance(phi, TensorField):
        phi = phi.scalar_value()
    ctx = phi.variables
    if len(ctx) != 2:
        raise TensorError("Airy stress functions live in dimension 2")
    h = [[phi.diff(ctx[a]).diff(ctx[b]) for b in range(2)] for a in range(2)]
    return TensorField.from_nested([[h[1][1], -h[0][1]], [-h[1][0], h[0][0]]], 2, "vv")


def beltrami_stress(phi: TensorField) -> TensorField:
    """``σ^{ij} = ε^{imk} ε^{jnl} ∂_k ∂_l φ_mn`` in dimension 3."""
    if phi.dim != 3:
        raise TensorError("Beltrami stress functions live in dimension 3")
    require_symmetric(phi, "Beltrami potential")
    ctx = phi.variables
    eps = [(t, levi_civita_value(t)) for t in itertools.product(range(3), repeat=3) if levi_civita_value(t)]

    def comp(ij):
        i, j = ij
        pairs = []
        for (a, m, k), e1 in eps:
            if a != i:
                continue
            for (b, nn, l), e2 in eps:
                if b != j:
                    continue
                pairs.append((e1 * e2, phi[m, nn].diff(ctx[k]).diff(ctx[l])))
        return Polynomial.lincomb(pairs, ctx)

    return TensorField.from_function(3, "vv", comp)


def stress_divergence(sigma: TensorField) -> TensorField:
    """``∂_i σ^{ij}``."""
    return divergence(sigma, 0)


class NotDivergenceFree(ValueError):
    def __init__(self, div: TensorField):
        super().__init__("stress field is not divergence-free")
        self.divergence = div


# Dual homotopy operators K*_j = ★ K ★⁻¹.


def dual_hessian_integrator(sigma: TensorField) -> TensorField:
    """``★₀ ∘ K ∘ ★₂⁻¹`` on planar stresses (K the second-order radial integrator)."""
    return hodge_star(hessian_integrator(hodge_star_inverse(sigma)), check=False)


def dual_K1(A: TensorField) -> TensorField:
    """``★₁ ∘ K₁ ∘ ★₂⁻¹ : Ω^4_2(R^3)* → Ω^5_2(R^3)*``."""
    return hodge_star(cesaro_volterra_K1(hodge_star_inverse(A)), check=False)


def dual_K2(sigma: TensorField) -> TensorField:
    """``★₂ ∘ K₂ ∘ ★₄⁻¹ : Ω^2_2(R^3)* → Ω^4_2(R^3)*``."""
    return hodge_star(obstruction_K2(hodge_star_inverse(sigma), check=False), check=False)


# ★₄ ∘ saint_venant = 4 · beltrami_stress on symmetric potentials.
BELTRAMI_FACTOR = 4


def recover_potential(sigma: TensorField) -> TensorField:
    """Find a stress potential for a divergence-free symmetric stress.

    Returns a scalar field ``φ`` with ``airy_stress(φ) = σ`` in 2D, or a
    symmetric ``φ_mn`` with ``beltrami_stress(φ) = σ`` in 3D.  The potential
    is one choice among many (it is unique only up to a gauge).
    """
    n = sigma.dim
    if sigma.order != 2:
        raise TensorError("stress must have order 2")
    sigma = sigma.with_variance("vv")
    require_symmetric(sigma, "stress")
    div = stress_divergence(sigma)
    if not div.is_zero():
        raise NotDivergenceFree(div)
    if n == 2:
        A = dual_hessian_integrator(sigma)
        return hodge_star_inverse(A, check=False)
    if n == 3:
        A = dual_K2(sigma * BELTRAMI_FACTOR)
        return hodge_star_inverse(A, check=False)
    raise TensorError("potentials are provided for n = 2 and n = 3")


def tonti_rows(xi: TensorField, phi: TensorField) -> tuple[TensorField, TensorField]:
    """Compose the horizontal maps of the elasticity Tonti diagram.

    Returns ``(d₄ W(d₁ ξ), div beltrami(φ))``; both vanish identically.
    """
    eps = sym_gradient(xi)
    W = saint_venant(eps)
    top = dv_differential(ComplexPosition(2, 4, xi.dim), W, check=False)
    bottom = stress_divergence(beltrami_stress(phi))
    return top, bottom

