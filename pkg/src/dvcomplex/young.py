"""Young diagrams, tableaux and the normalized Young projector.

Permutations act on tensor *slots*: the cell labelled ``m`` governs slot
``m`` and ``(σ⋆T)_{i_1..i_k} = T_{i_{σ(1)}..i_{σ(k)}}``.  Because the row
and column groups are groups, the symmetrizer and antisymmetrizer are the
same whether σ or σ⁻¹ is used here; only the order "antisymmetrize after
symmetrizing" matters, and it is fixed by ``F = (1/μ) A ∘ S``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polynomial import Polynomial
from .tensor import TensorError, TensorField, flat_index, multi_indices, permutation_sign


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r < 1 for r in rows):
            raise ValueError("row lengths must be positive")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def columns(self) -> tuple[int, ...]:
        """Column lengths (the conjugate partition)."""
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0]))

    def cells(self):
        for i, r in enumerate(self.rows):
            for j in range(r):
                yield i, j


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{0..k-1}`` stored as its image array."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation")

    @property
    def sign(self) -> int:
        return permutation_sign(self.images)

    def __call__(self, m: int) -> int:
        return self.images[m]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self ∘ other)(m) = self(other(m))``."""
        return Permutation(tuple(self.images[other.images[m]] for m in range(len(self.images))))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for m, v in enumerate(self.images):
            inv[v] = m
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class YoungTableau:
    """A Young diagram filled bijectively with the labels ``1..k``."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        YoungDiagram(tuple(len(r) for r in rows))
        labels = sorted(x for r in rows for x in r)
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError(f"tableau labels must be exactly 1..k, got {labels}")

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        if not self.rows:
            return ()
        return tuple(
            tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))
        )

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> YoungTableau:
        return cls(tuple(tuple(int(x) for x in r) for r in data))

    def row_group(self) -> list[Permutation]:
        return _block_group(self.rows, self.size)

    def column_group(self) -> list[Permutation]:
        return _block_group(self.columns, self.size)

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, r)) for r in self.rows) or "∅"


def _block_group(blocks, k: int) -> list[Permutation]:
    """Direct product of the symmetric groups on each block of labels."""
    slot_blocks = [[x - 1 for x in b] for b in blocks if len(b) > 1]
    perms = []
    for choice in itertools.product(*(itertools.permutations(b) for b in slot_blocks)):
        img = list(range(k))
        for block, image in zip(slot_blocks, choice):
            for src, dst in zip(block, image):
                img[src] = dst
        perms.append(Permutation(tuple(img)))
    return perms


# -- combinatorics ----------------------------------------------------------


def hook_lengths(Y: YoungDiagram) -> list[list[int]]:
    cols = Y.columns
    return [[(r - j - 1) + (cols[j] - i - 1) + 1 for j in range(r)] for i, r in enumerate(Y.rows)]


def hook_product(Y: YoungDiagram) -> int:
    """The normalization ``μ(Y)``."""
    return math.prod(h for row in hook_lengths(Y) for h in row)


def schur_dimension(Y: YoungDiagram, n: int) -> int:
    """Hook-content formula for the dimension of the symmetry class of ``Y`` in ``R^n``.

    Zero when a column is longer than ``n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = math.prod(n + j - i for i, j in Y.cells())
    q, r = divmod(num, hook_product(Y))
    assert r == 0
    return q


def dv_tableau(N: int, k: int) -> YoungTableau:
    """The k-th tableau of the Dubois-Violette sequence of width ``N``.

    Label ``m+1`` goes into the first row shorter than ``N``, or opens a new
    row at the bottom.
    """
    if N < 1 or k < 0:
        raise ValueError("need N >= 1 and k >= 0")
    rows: list[list[int]] = []
    for label in range(1, k + 1):
        for r in rows:
            if len(r) < N:
                r.append(label)
                break
        else:
            rows.append([label])
    return YoungTableau(tuple(tuple(r) for r in rows))


# -- the projector ----------------------------------------------------------


@lru_cache(maxsize=None)
def _group_terms(rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    D = YoungTableau(rows)
    acc: dict[tuple[int, ...], int] = {}
    for tau in D.column_group():
        s = tau.sign
        for sigma in D.row_group():
            pi = (tau * sigma).images
            acc[pi] = acc.get(pi, 0) + s
    return tuple((pi, c) for pi, c in acc.items() if c)


@lru_cache(maxsize=None)
def projector_rows(rows: tuple[tuple[int, ...], ...], n: int) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
    """Sparse matrix of ``F_D`` on ``⊗^k R^n``: one row per output flat index."""
    D = YoungTableau(rows)
    k = D.size
    mu = hook_product(D.shape)
    terms = _group_terms(rows)
    out = []
    for idx in multi_indices(n, k):
        acc: dict[int, int] = {}
        for pi, c in terms:
            g = flat_index([idx[pi[m]] for m in range(k)], n)
            acc[g] = acc.get(g, 0) + c
        out.append(tuple((g, Fraction(c, mu)) for g, c in acc.items() if c))
    return tuple(out)


def young_project(D: YoungTableau, T: TensorField) -> TensorField:
    """``F_D ⋆ T = (1/μ(Y)) A_D ⋆ (S_D ⋆ T)``."""
    if T.order != D.size:
        raise TensorError(f"tableau of size {D.size} cannot act on an order-{T.order} tensor")
    if not (T.is_covariant() or T.is_contravariant()):
        raise TensorError("projection needs uniformly covariant or contravariant slots")
    rows = projector_rows(D.rows, T.dim)
    comps = T.components
    ctx = T.variables
    out = [Polynomial.lincomb(((c, comps[g]) for g, c in row), ctx) for row in rows]
    return TensorField(T.dim, T.variance, out)


def symmetrizer(D: YoungTableau, T: TensorField) -> TensorField:
    """``S_D ⋆ T`` (unnormalized sum over the row group)."""
    return _group_sum(T, D.row_group(), signed=False)


def antisymmetrizer(D: YoungTableau, T: TensorField) -> TensorField:
    """``A_D ⋆ T`` (signed sum over the column group)."""
    return _group_sum(T, D.column_group(), signed=True)


def _group_sum(T: TensorField, group: list[Permutation], signed: bool) -> TensorField:
    k = T.order
    n = T.dim

    def comp(idx):
        pairs = []
        for p in group:
            src = tuple(idx[p.images[m]] for m in range(k))
            pairs.append((p.sign if signed else 1, T.components[flat_index(src, n)]))
        return Polynomial.lincomb(pairs, T.variables)

    return TensorField.from_function(n, T.variance, comp)


# -- exact rank (independent dimension check) -------------------------------


def exact_rank(matrix: list[list[Fraction]]) -> int:
    """Rank by fraction-exact Gaussian elimination."""
    m = [list(r) for r in matrix]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                f = m[r][col] / pv
                row_r, row_p = m[r], m[rank]
                for c in range(col, ncols):
                    if row_p[c]:
                        row_r[c] -= f * row_p[c]
        rank += 1
    return rank


def projector_rank(D: YoungTableau, n: int) -> int:
    """Rank of ``F_D`` on ``⊗^k R^n``.

    Slot permutations preserve the multiset of index values, so the matrix
    is block diagonal over those multisets; each block is eliminated exactly.
    """
    k = D.size
    rows = projector_rows(D.rows, n)
    blocks: dict[tuple[int, ...], list[int]] = {}
    for f, idx in enumerate(multi_indices(n, k)):
        blocks.setdefault(tuple(sorted(idx)), []).append(f)
    total = 0
    for members in blocks.values():
        pos = {f: i for i, f in enumerate(members)}
        mat = []
        for f in members:
            row = [Fraction(0)] * len(members)
            for g, c in rows[f]:
                row[pos[g]] = c
            mat.append(row)
        total += exact_rank(mat)
    return total
