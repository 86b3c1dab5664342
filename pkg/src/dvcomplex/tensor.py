"""Polynomial-valued tensor fields on R^n with dense component storage.

Components are stored row-major over 0-based multi-indices, so slot 1 is
the most significant digit.  Each slot carries a variance flag: ``"c"`` for
covariant (lower) and ``"v"`` for contravariant (upper).  The metric is the
flat Euclidean one, so raising and lowering never changes component values.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .polynomial import Polynomial, Scalar, coordinates


class TensorError(ValueError):
    pass


class SymmetryError(TensorError):
    """Input violates a required index symmetry."""


COVARIANT = "c"
CONTRAVARIANT = "v"


def multi_indices(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(n), repeat=k)


def flat_index(idx: Sequence[int], n: int) -> int:
    f = 0
    for i in idx:
        f = f * n + i
    return f


class TensorField:
    """Order-``k`` tensor field on ``R^dim`` with polynomial components."""

    __slots__ = ("dim", "variance", "components")

    def __init__(self, dim: int, variance: str, components: Sequence[Polynomial]):
        if dim < 1:
            raise TensorError("dimension must be positive")
        if any(f not in (COVARIANT, CONTRAVARIANT) for f in variance):
            raise TensorError(f"variance flags must be 'c' or 'v', got {variance!r}")
        components = tuple(components)
        if len(components) != dim ** len(variance):
            raise TensorError(
                f"expected {dim ** len(variance)} components, got {len(components)}"
            )
        ctx = coordinates(dim)
        for p in components:
            if p.variables != ctx:
                raise TensorError(f"component context {p.variables} is not {ctx}")
        self.dim = dim
        self.variance = variance
        self.components: tuple[Polynomial, ...] = components

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, dim: int, variance: str) -> TensorField:
        z = Polynomial.zero(coordinates(dim))
        return cls(dim, variance, [z] * dim ** len(variance))

    @classmethod
    def from_function(cls, dim: int, variance: str, f: Callable[[tuple[int, ...]], Polynomial | Scalar]) -> TensorField:
        ctx = coordinates(dim)
        comps = []
        for idx in multi_indices(dim, len(variance)):
            v = f(idx)
            comps.append(v if isinstance(v, Polynomial) else Polynomial.constant(v, ctx))
        return cls(dim, variance, comps)

    @classmethod
    def scalar(cls, p: Polynomial | Scalar, dim: int) -> TensorField:
        if not isinstance(p, Polynomial):
            p = Polynomial.constant(p, coordinates(dim))
        return cls(dim, "", [p])

    @classmethod
    def from_nested(cls, rows, dim: int, variance: str) -> TensorField:
        """Build from nested lists of polynomials or rationals."""

        def get(idx):
            v = rows
            for i in idx:
                v = v[i]
            return v

        return cls.from_function(dim, variance, get)

    # -- access -----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.variance)

    @property
    def variables(self) -> tuple[str, ...]:
        return coordinates(self.dim)

    def __getitem__(self, idx) -> Polynomial:
        if isinstance(idx, int):
            idx = (idx,)
        if len(idx) != self.order:
            raise TensorError(f"index {idx} has wrong length for order {self.order}")
        for i in idx:
            if not 0 <= i < self.dim:
                raise TensorError(f"index {idx} out of range")
        return self.components[flat_index(idx, self.dim)]

    def items(self) -> Iterator[tuple[tuple[int, ...], Polynomial]]:
        return zip(multi_indices(self.dim, self.order), self.components)

    def nonzero(self) -> dict[tuple[int, ...], Polynomial]:
        return {idx: p for idx, p in self.items() if p}

    def is_zero(self) -> bool:
        return all(not p for p in self.components)

    def is_covariant(self) -> bool:
        return all(f == COVARIANT for f in self.variance)

    def is_contravariant(self) -> bool:
        return all(f == CONTRAVARIANT for f in self.variance)

    def scalar_value(self) -> Polynomial:
        if self.order:
            raise TensorError("not a scalar field")
        return self.components[0]

    # -- algebra ----------------------------------------------------------

    def _check_compatible(self, other: TensorField):
        if self.dim != other.dim or self.variance != other.variance:
            raise TensorError(
                f"incompatible tensors: dim {self.dim}/{other.dim}, "
                f"variance {self.variance!r}/{other.variance!r}"
            )

    def __add__(self, other: TensorField) -> TensorField:
        self._check_compatible(other)
        return TensorField(self.dim, self.variance, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: TensorField) -> TensorField:
        self._check_compatible(other)
        return TensorField(self.dim, self.variance, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> TensorField:
        return TensorField(self.dim, self.variance, [-a for a in self.components])

    def __mul__(self, c) -> TensorField:
        if isinstance(c, (int, Fraction, Polynomial)):
            return TensorField(self.dim, self.variance, [a * c for a in self.components])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c) -> TensorField:
        return self * (1 / Fraction(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorField):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.variance == other.variance
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.dim, self.variance, self.components))

    def map(self, f: Callable[[Polynomial], Polynomial]) -> TensorField:
        return TensorField(self.dim, self.variance, [f(p) for p in self.components])

    def with_variance(self, variance: str) -> TensorField:
        """Raise/lower slots with the flat metric (component values unchanged)."""
        if len(variance) != self.order:
            raise TensorError("variance length must equal the order")
        return TensorField(self.dim, variance, self.components)

    def degree(self) -> int:
        return max((p.degree() for p in self.components), default=-1)

    def __repr__(self) -> str:
        nz = ", ".join(
            f"{''.join(str(i + 1) for i in idx)}: {p}" for idx, p in self.nonzero().items()
        )
        return f"TensorField(dim={self.dim}, variance={self.variance!r}, {{{nz}}})"


# -- multilinear algebra ----------------------------------------------------


def gradient(T: TensorField) -> TensorField:
    """``(∇T)_{i1..ik j} = ∂_j T_{i1..ik}``; the derivative slot is appended last."""
    if not T.is_covariant():
        raise TensorError("gradient expects a covariant field")
    ctx = T.variables
    comps = []
    for p in T.components:
        for v in ctx:
            comps.append(p.diff(v))
    return TensorField(T.dim, T.variance + COVARIANT, comps)


def partial(T: TensorField, j: int) -> TensorField:
    """Componentwise ``∂_j`` (0-based coordinate index)."""
    v = T.variables[j]
    return T.map(lambda p: p.diff(v))


def divergence(T: TensorField, slot: int = 0) -> TensorField:
    """Flat divergence ``∂_i T^{..i..}`` over the given 0-based slot."""
    if not 0 <= slot < T.order:
        raise TensorError("slot out of range")
    n = T.dim
    variance = T.variance[:slot] + T.variance[slot + 1 :]
    ctx = T.variables

    def comp(idx):
        return Polynomial.lincomb(
            ((1, T[idx[:slot] + (i,) + idx[slot:]].diff(ctx[i])) for i in range(n)), ctx
        )

    return TensorField.from_function(n, variance, comp)


def permute_slots(T: TensorField, perm: Sequence[int]) -> TensorField:
    """Place-permutation of slots: ``(σ⋆T)_{i_1..i_k} = T_{i_{σ(1)}..i_{σ(k)}}``.

    ``perm`` is 0-based: ``perm[m]`` is the source slot read for target slot ``m``.
    """
    k = T.order
    if sorted(perm) != list(range(k)):
        raise TensorError(f"{perm} is not a permutation of {k} slots")
    variance = "".join(T.variance[perm[m]] for m in range(k))
    return TensorField.from_function(T.dim, variance, lambda idx: T[tuple(idx[perm[m]] for m in range(k))])


def transpose(T: TensorField) -> TensorField:
    if T.order != 2:
        raise TensorError("transpose needs an order-2 field")
    return permute_slots(T, (1, 0))


def tensor_product(T: TensorField, U: TensorField) -> TensorField:
    if T.dim != U.dim:
        raise TensorError("dimension mismatch")
    comps = [a * b for a in T.components for b in U.components]
    return TensorField(T.dim, T.variance + U.variance, comps)


def contract(T: TensorField, a: int, b: int, *, flat: bool = False) -> TensorField:
    """Contract 0-based slots ``a`` and ``b``.

    The slots must have opposite variance unless ``flat=True``, in which case
    the Euclidean metric ``δ`` is used implicitly to pair same-variance slots.
    """
    k = T.order
    if not (0 <= a < k and 0 <= b < k) or a == b:
        raise TensorError(f"bad contraction slots {a}, {b} for order {k}")
    if not flat and T.variance[a] == T.variance[b]:
        raise TensorError("contraction of two slots with equal variance needs flat=True")
    a, b = sorted((a, b))
    keep = [m for m in range(k) if m not in (a, b)]
    variance = "".join(T.variance[m] for m in keep)
    n = T.dim

    def comp(idx):
        pairs = []
        for i in range(n):
            full = [0] * k
            for m, v in zip(keep, idx):
                full[m] = v
            full[a] = full[b] = i
            pairs.append((1, T[tuple(full)]))
        return Polynomial.lincomb(pairs, T.variables)

    return TensorField.from_function(n, variance, comp)


def full_contraction(T: TensorField, U: TensorField) -> Polynomial:
    """``T_{I} U^{I}`` summed over all indices (flat metric)."""
    if T.dim != U.dim or T.order != U.order:
        raise TensorError("shape mismatch")
    return Polynomial.lincomb(((1, a * b) for a, b in zip(T.components, U.components)), T.variables)


def permutation_sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def levi_civita_value(idx: Sequence[int]) -> int:
    if len(set(idx)) != len(idx):
        return 0
    return permutation_sign(idx)


def levi_civita(n: int, variance: str | None = None) -> TensorField:
    """``ε_{i1..in} = det(e_{i1}, .., e_{in})``."""
    variance = COVARIANT * n if variance is None else variance
    return TensorField.from_function(n, variance, levi_civita_value)


def euclid_metric(n: int, variance: str = "cc") -> TensorField:
    return TensorField.from_function(n, variance, lambda idx: int(idx[0] == idx[1]))


def is_symmetric(T: TensorField) -> bool:
    n = T.dim
    return all(T[i, j] == T[j, i] for i in range(n) for j in range(i + 1, n))


def is_antisymmetric(T: TensorField) -> bool:
    n = T.dim
    return all(T[i, j] == -T[j, i] for i in range(n) for j in range(i, n))


def require_symmetric(T: TensorField, what: str = "tensor") -> None:
    if T.order != 2:
        raise TensorError(f"{what} must have order 2")
    if not is_symmetric(T):
        raise SymmetryError(f"{what} is not symmetric")
