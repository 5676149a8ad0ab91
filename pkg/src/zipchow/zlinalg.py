"""Exact integer linear algebra: Smith normal form, cokernels, ranks.

Matrices are plain lists of rows of Python ints, so coefficients never
overflow.  The Smith reduction picks the nonzero pivot of minimal absolute
value (ties: lowest row, then lowest column) to limit coefficient growth, and
can optionally carry unimodular transformation certificates U, V with
U * A * V diagonal.

A safety cap rejects matrices beyond 2000x2000 by default; override with the
ZIPCHOW_MATRIX_CAP environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import MatrixCapExceeded

DEFAULT_MATRIX_CAP = 2000
MATRIX_CAP_ENV = "ZIPCHOW_MATRIX_CAP"

IntMatrix = list[list[int]]


def matrix_cap() -> int:
    raw = os.environ.get(MATRIX_CAP_ENV)
    if raw is None:
        return DEFAULT_MATRIX_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MATRIX_CAP_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise ValueError(f"{MATRIX_CAP_ENV} must be >= 1, got {cap}")
    return cap


def _copy_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    out = [list(map(int, row)) for row in rows]
    if out:
        width = len(out[0])
        for row in out:
            if len(row) != width:
                raise ValueError("matrix rows have unequal lengths")
    cap = matrix_cap()
    if len(out) > cap or (out and len(out[0]) > cap):
        raise MatrixCapExceeded(len(out), len(out[0]) if out else 0, cap)
    return out


@dataclass(frozen=True)
class SmithForm:
    """Invariant chain d_1 | d_2 | ... | d_k plus optional certificates.

    When certificates are present, left * A * right is the diagonal matrix
    carrying the chain, and both transformations are unimodular.
    """

    invariants: tuple[int, ...]
    left: tuple[tuple[int, ...], ...] | None = None
    right: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if any(d < 1 for d in self.invariants):
            raise ValueError(f"invariants must be positive: {self.invariants}")
        for a, b in zip(self.invariants, self.invariants[1:]):
            if b % a:
                raise ValueError(f"not a divisibility chain: {self.invariants}")

    @property
    def rank(self) -> int:
        return len(self.invariants)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free + sum of Z/d_i, chain order."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError(f"free rank must be >= 0, got {self.free_rank}")
        chain = self.torsion
        if any(d < 2 for d in chain):
            raise ValueError(f"torsion entries must be >= 2: {chain}")
        for a, b in zip(chain, chain[1:]):
            if b % a:
                raise ValueError(f"torsion is not a divisibility chain: {chain}")

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GradedAbelianGroup:
    """One abelian group per degree, contiguous from degree 0."""

    components: tuple[AbelianGroup, ...]

    @property
    def max_degree(self) -> int:
        return len(self.components) - 1

    def degree(self, d: int) -> AbelianGroup:
        if not 0 <= d <= self.max_degree:
            raise IndexError(f"degree {d} outside 0..{self.max_degree}")
        return self.components[d]

    def free_ranks(self) -> list[int]:
        return [c.free_rank for c in self.components]


def smith_normal_form(rows: Sequence[Sequence[int]], with_certificates: bool = False) -> SmithForm:
    """Smith normal form of an integer matrix.

    The product d_1 * ... * d_i of the invariants equals the gcd of all i x i
    minors; an empty matrix yields an empty chain.
    """
    a = _copy_matrix(rows)
    nr = len(a)
    nc = len(a[0]) if a else 0
    u: IntMatrix | None = None
    v: IntMatrix | None = None
    if with_certificates:
        u = [[int(i == j) for j in range(nr)] for i in range(nr)]
        v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def add_row(src: int, dst: int, mult: int) -> None:
        arow, srow = a[dst], a[src]
        for j in range(nc):
            arow[j] += mult * srow[j]
        if u is not None:
            urow, usrc = u[dst], u[src]
            for j in range(nr):
                urow[j] += mult * usrc[j]

    def add_col(src: int, dst: int, mult: int) -> None:
        for row in a:
            row[dst] += mult * row[src]
        if v is not None:
            for row in v:
                row[dst] += mult * row[src]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    def find_pivot(t: int) -> tuple[int, int] | None:
        best: tuple[int, int] | None = None
        best_val = 0
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                val = abs(row[j])
                if val and (best is None or val < best_val):
                    best = (i, j)
                    best_val = val
                    if val == 1:
                        return best
        return best

    t = 0
    dim = min(nr, nc)
    while t < dim:
        pivot = find_pivot(t)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)
        if a[t][t] < 0:
            negate_row(t)
        piv = a[t][t]

        dirty = False
        for i in range(t + 1, nr):
            if a[i][t]:
                q = a[i][t] // piv
                if q:
                    add_row(t, i, -q)
                if a[i][t]:
                    dirty = True  # remainder smaller than the pivot remains
        for j in range(t + 1, nc):
            if a[t][j]:
                q = a[t][j] // piv
                if q:
                    add_col(t, j, -q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue

        # Row and column are clear; the pivot must divide the remaining
        # submatrix for the invariant chain, otherwise pull an offending row
        # into the pivot row and reduce again.
        offender = -1
        for i in range(t + 1, nr):
            row = a[i]
            for j in range(t + 1, nc):
                if row[j] % piv:
                    offender = i
                    break
            if offender >= 0:
                break
        if offender >= 0:
            add_row(offender, t, 1)
            continue
        t += 1

    invariants = tuple(a[k][k] for k in range(dim) if a[k][k])
    return SmithForm(
        invariants=invariants,
        left=tuple(tuple(row) for row in u) if u is not None else None,
        right=tuple(tuple(row) for row in v) if v is not None else None,
    )


def cokernel(rows: Sequence[Sequence[int]], ambient_rank: int) -> AbelianGroup:
    """Quotient of Z^ambient by the lattice spanned by the given row vectors."""
    if ambient_rank < 0:
        raise ValueError(f"ambient rank must be >= 0, got {ambient_rank}")
    mat = list(rows)
    for row in mat:
        if len(row) != ambient_rank:
            raise ValueError(
                f"relation vector of length {len(row)} in ambient rank {ambient_rank}"
            )
    form = smith_normal_form(mat)
    return AbelianGroup(
        free_rank=ambient_rank - form.rank,
        torsion=tuple(d for d in form.invariants if d > 1),
    )


def rational_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals; the length of the Smith invariant chain."""
    return smith_normal_form(rows).rank


def normalize_torsion(values: Sequence[int]) -> tuple[int, ...]:
    """Merge cyclic orders into an invariant-factor chain (entries >= 2).

    Repeated gcd/lcm exchanges preserve the group while enforcing
    divisibility; entries equal to 1 are dropped.
    """
    vals = [int(v) for v in values if v > 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a * b // g
                    changed = True
    vals.sort()
    return tuple(v for v in vals if v > 1)
