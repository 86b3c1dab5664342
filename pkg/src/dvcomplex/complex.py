"""Generalized differential complexes Ω^k_N(R^n).

The differential is ``d_k = F_{D^{k+1}_N} ∘ ∇`` for every ``N`` and ``k``;
``N = 1`` is the de Rham complex up to a degree-dependent constant (see
:func:`exterior_derivative`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .tensor import SymmetryError, TensorError, TensorField, gradient
from .young import YoungTableau, dv_tableau, schur_dimension, young_project


class MembershipError(SymmetryError):
    """Field does not have the index symmetry of its complex position."""


@dataclass(frozen=True)
class ComplexPosition:
    N: int
    k: int
    n: int

    def __post_init__(self):
        if self.N < 1 or self.k < 0 or self.n < 1:
            raise ValueError(f"invalid complex position {self}")

    @property
    def tableau(self) -> YoungTableau:
        return dv_tableau(self.N, self.k)

    @property
    def dimension(self) -> int:
        """Pointwise dimension of the fibre of Ω^k_N(R^n)."""
        return schur_dimension(self.tableau.shape, self.n)

    def next(self, steps: int = 1) -> ComplexPosition:
        return ComplexPosition(self.N, self.k + steps, self.n)


def _check_shape(pos: ComplexPosition, T: TensorField) -> None:
    if T.order != pos.k or T.dim != pos.n:
        raise TensorError(
            f"field of order {T.order} in R^{T.dim} does not sit at (N={pos.N}, k={pos.k}, n={pos.n})"
        )


def project(pos: ComplexPosition, T: TensorField) -> TensorField:
    _check_shape(pos, T)
    if pos.k == 0:
        return T
    return young_project(pos.tableau, T)


def is_member(pos: ComplexPosition, T: TensorField) -> bool:
    """True iff ``T`` is a fixed point of the projector of its position."""
    return project(pos, T) == T


def require_member(pos: ComplexPosition, T: TensorField) -> None:
    if not is_member(pos, T):
        raise MembershipError(f"field is not a member of Ω^{pos.k}_{pos.N}(R^{pos.n})")


def dv_differential(pos: ComplexPosition, T: TensorField, *, check: bool = True) -> TensorField:
    """``(d_k T) = F_{D^{k+1}_N} ⋆ ∇T``; the result sits at ``pos.next()``."""
    _check_shape(pos, T)
    if not T.is_covariant():
        raise TensorError("the differential acts on covariant fields")
    if check:
        require_member(pos, T)
    grad = gradient(T)
    if pos.k == 0:
        return grad
    return young_project(dv_tableau(pos.N, pos.k + 1), grad)


def iterate_differential(pos: ComplexPosition, T: TensorField, times: int, *, check: bool = True) -> TensorField:
    out = T
    for step in range(times):
        out = dv_differential(pos.next(step), out, check=check and step == 0)
    return out


def check_nilpotency(pos: ComplexPosition, T: TensorField) -> TensorField:
    """``d_{k+N} ∘ … ∘ d_k (T)``, which must vanish identically."""
    return iterate_differential(pos, T, pos.N + 1)


def de_rham_scale(k: int) -> Fraction:
    """Constant ``c_k`` with ``d^{(1)}_k = c_k · d`` on k-forms.

    Antisymmetrizing ``∇α`` with the derivative slot last gives
    ``(-1)^k / (k+1)`` times the usual exterior derivative
    ``(dα)_{i_0..i_k} = Σ_m (-1)^m ∂_{i_m} α_{..î_m..}``.
    """
    return Fraction((-1) ** k, k + 1)


def exterior_derivative(alpha: TensorField, *, check: bool = True) -> TensorField:
    """The standard exterior derivative, obtained from the N=1 projector pipeline."""
    k = alpha.order
    out = dv_differential(ComplexPosition(1, k, alpha.dim), alpha, check=check)
    return out / de_rham_scale(k)
