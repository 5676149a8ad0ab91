"""Root-datum and Weyl-group combinatorics for the supported zip data.

Two group kinds are supported, GL(h) and Sp(2n); both are special, so the
integral quotient presentation downstream applies.  The Levi datum is kept as
a tuple of variable blocks: an ordered composition of h for GL, and for Sp
either the Borel choice (trivial Weyl group of the Levi, blocks of size 1) or
the Siegel parabolic (Levi GL(n) inside Sp(2n), a single block that the
symmetric group permutes).

The degree-d invariants of the Levi Weyl group have an integral basis of
orbit sums: each orbit of monomials contributes the sum of its members with
coefficient 1.  Orbits are keyed by their canonical representative, the
monomial whose exponents are non-increasing inside every block, and bases are
listed with representatives in canonical term order (leading first).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import DecompositionError, ParameterError
from .intpoly import (
    Exponents,
    Poly,
    elementary_symmetric,
    elementary_symmetric_squares,
    grevlex_key,
)

GROUP_KINDS = ("gl", "sp")
SP_PARABOLICS = ("borel", "siegel")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- zip datum types ----------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    """A connected split reductive group of the supported kinds.

    rank is the torus rank: h for GL(h), n for Sp(2n).
    """

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise ParameterError("group", f"unsupported group kind {self.kind!r} (use gl or sp)")
        if self.rank < 1:
            raise ParameterError("rank", f"rank must be >= 1, got {self.rank}")

    def describe(self) -> str:
        return f"GL({self.rank})" if self.kind == "gl" else f"Sp({2 * self.rank})"


@dataclass(frozen=True)
class LeviSpec:
    """Levi choice: a composition of h for GL, borel/siegel for Sp."""

    blocks: tuple[int, ...] | None = None
    parabolic: str | None = None

    def __post_init__(self):
        if (self.blocks is None) == (self.parabolic is None):
            raise ParameterError(
                "levi", "give exactly one of a GL composition or an Sp parabolic"
            )
        if self.blocks is not None:
            if not self.blocks or any(b < 1 for b in self.blocks):
                raise ParameterError("composition", f"block sizes must be positive, got {self.blocks}")
        if self.parabolic is not None and self.parabolic not in SP_PARABOLICS:
            raise ParameterError("parabolic", f"unknown parabolic {self.parabolic!r} (use borel or siegel)")

    @classmethod
    def composition(cls, *sizes: int) -> LeviSpec:
        return cls(blocks=tuple(sizes))

    @classmethod
    def borel(cls) -> LeviSpec:
        return cls(parabolic="borel")

    @classmethod
    def siegel(cls) -> LeviSpec:
        return cls(parabolic="siegel")

    def describe(self) -> str:
        if self.blocks is not None:
            return "(" + ", ".join(str(b) for b in self.blocks) + ")"
        return self.parabolic  # type: ignore[return-value]


@dataclass(frozen=True)
class ZipDatum:
    """A connected algebraic zip datum with q-power Frobenius isogeny.

    q >= 1 is the Frobenius power (q = p in the display case); p, when given,
    is the prime to localize at and must have q as a positive power.
    display_dim records the dimension d for data built from a display pair
    (h, d); it only affects report labels, never the computation.
    """

    group: GroupSpec
    levi: LeviSpec
    q: int
    p: int | None = None
    display_dim: int | None = None

    def __post_init__(self):
        levi_blocks(self.group, self.levi)  # validates the pairing
        if self.q < 1:
            raise ParameterError("q", f"Frobenius power must be >= 1, got {self.q}")
        if self.p is not None:
            if not is_prime(self.p):
                raise ParameterError("p", f"{self.p} is not prime")
            q = self.q
            while q % self.p == 0:
                q //= self.p
            if q != 1 or self.q == 1:
                raise ParameterError("q", f"{self.q} is not a positive power of p={self.p}")

    def describe(self) -> str:
        parts = [self.group.describe(), self.levi.describe(), f"q={self.q}"]
        if self.p is not None:
            parts.append(f"p={self.p}")
        return ", ".join(parts)


def levi_blocks(group: GroupSpec, levi: LeviSpec) -> tuple[int, ...]:
    """Variable blocks permuted by the Levi Weyl group; validates the pair."""
    if group.kind == "gl":
        if levi.blocks is None:
            raise ParameterError("composition", "GL data need a composition of h")
        if sum(levi.blocks) != group.rank:
            raise ParameterError(
                "composition",
                f"blocks {levi.blocks} sum to {sum(levi.blocks)}, not h={group.rank}",
            )
        return levi.blocks
    if levi.parabolic is None:
        raise ParameterError("parabolic", "Sp data need a parabolic (borel or siegel)")
    if levi.parabolic == "borel":
        return (1,) * group.rank
    return (group.rank,)


# -- invariant generators of the full Weyl group ------------------------------


def invariant_generators(group: GroupSpec) -> list[tuple[Poly, int]]:
    """Algebraically independent generators of the W_G-invariant subring.

    GL(h): elementary symmetric polynomials c_1..c_h (degrees 1..h).
    Sp(2n): elementary symmetric polynomials in the squared variables
    (degrees 2, 4, ..., 2n); these are also invariant under all sign flips.
    """
    if group.kind == "gl":
        return [(elementary_symmetric(k, group.rank), k) for k in range(1, group.rank + 1)]
    return [
        (elementary_symmetric_squares(k, group.rank), 2 * k)
        for k in range(1, group.rank + 1)
    ]


def weyl_order(group: GroupSpec) -> int:
    if group.kind == "gl":
        return factorial(group.rank)
    return 2 ** group.rank * factorial(group.rank)


def weyl_degrees(group: GroupSpec) -> tuple[int, ...]:
    """Degrees of the basic invariants of W_G."""
    if group.kind == "gl":
        return tuple(range(1, group.rank + 1))
    return tuple(2 * k for k in range(1, group.rank + 1))


def levi_weyl_order(group: GroupSpec, levi: LeviSpec) -> int:
    return prod(factorial(b) for b in levi_blocks(group, levi))


def levi_degrees(group: GroupSpec, levi: LeviSpec) -> tuple[int, ...]:
    """Degrees of the basic invariants of W_L (block-wise symmetric groups)."""
    out: list[int] = []
    for b in levi_blocks(group, levi):
        out.extend(range(1, b + 1))
    return tuple(out)


def coset_count(group: GroupSpec, levi: LeviSpec) -> int:
    """|W_G / W_L|, the number of orbits of the zip-group action."""
    return weyl_order(group) // levi_weyl_order(group, levi)


def top_degree_bound(group: GroupSpec, levi: LeviSpec) -> int:
    """Largest degree with nonzero rational rank in the graded quotient.

    Counts the positive roots outside the Levi: GL with blocks (n_1..n_r)
    gives sum_{i<j} n_i n_j; Sp(2n) gives n^2 for the Borel and n(n+1)/2 for
    the Siegel parabolic.
    """
    blocks = levi_blocks(group, levi)
    if group.kind == "gl":
        total = 0
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                total += blocks[i] * blocks[j]
        return total
    n = group.rank
    return n * n if levi.parabolic == "borel" else n * (n + 1) // 2


# -- Poincare series of the coset space ---------------------------------------


def _series_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _series_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials; raises if a remainder is left."""
    rem = list(num)
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        coeff = rem[k + len(den) - 1]
        if coeff % lead:
            raise ArithmeticError("series division is not exact (implementation bug)")
        q = coeff // lead
        quot[k] = q
        if q:
            for j, d in enumerate(den):
                rem[k + j] -= q * d
    if any(rem):
        raise ArithmeticError("series division is not exact (implementation bug)")
    return quot


def rational_rank_series(group: GroupSpec, levi: LeviSpec) -> list[int]:
    """Per-degree rational ranks of the graded quotient, degrees 0..bound.

    Poincare series of the coset space W_L \\ W_G: the product of
    (1 + x + ... + x^(d-1)) over the W_G degrees divided by the same product
    over the W_L degrees.  The division is exact with non-negative integer
    coefficients; for GL with two blocks (d, h-d) the result is the Gaussian
    binomial, counting partitions inside a d x (h-d) box by size.
    """
    num = [1]
    for d in weyl_degrees(group):
        num = _series_mul(num, [1] * d)
    den = [1]
    for d in levi_degrees(group, levi):
        den = _series_mul(den, [1] * d)
    return _series_divexact(num, den)


# -- orbit-sum bases of the Levi invariants ------------------------------------


def _partitions_at_most(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of length `parts` (zero-padded) summing to total."""

    def gen(remaining: int, slots: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield (0,) * slots
            return
        if slots == 0:
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, slots - 1, first):
                yield (first,) + rest

    yield from gen(total, parts, total)


@lru_cache(maxsize=None)
def _partition_count(total: int, parts: int) -> int:
    """Number of partitions of `total` into at most `parts` parts."""
    if total == 0:
        return 1
    if parts == 0:
        return 0
    count = _partition_count(total, parts - 1)
    if total >= parts:
        count += _partition_count(total - parts, parts)
    return count


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def canonical_representative(group: GroupSpec, levi: LeviSpec, exps: Exponents) -> Exponents:
    """The orbit representative: exponents sorted non-increasing per block."""
    blocks = levi_blocks(group, levi)
    out: list[int] = []
    start = 0
    for b in blocks:
        out.extend(sorted(exps[start : start + b], reverse=True))
        start += b
    return tuple(out)


def orbit_representatives(group: GroupSpec, levi: LeviSpec, degree: int) -> list[Exponents]:
    """Canonical representatives of the degree-d monomial orbits, in canonical order."""
    if degree < 0:
        raise ParameterError("degree", f"degree must be >= 0, got {degree}")
    blocks = levi_blocks(group, levi)
    reps: list[Exponents] = []
    for split in _weak_compositions(degree, len(blocks)):
        per_block = [list(_partitions_at_most(d, b)) for d, b in zip(split, blocks)]
        for combo in product(*per_block):
            reps.append(tuple(e for part in combo for e in part))
    reps.sort(key=grevlex_key, reverse=True)
    return reps


def orbit_sum(group: GroupSpec, levi: LeviSpec, rep: Exponents) -> Poly:
    """Sum of the orbit of `rep` under the block permutations, coefficients 1."""
    blocks = levi_blocks(group, levi)
    nvars = sum(blocks)
    per_block: list[list[tuple[int, ...]]] = []
    start = 0
    for b in blocks:
        chunk = rep[start : start + b]
        per_block.append(sorted(set(permutations(chunk))))
        start += b
    terms: dict[Exponents, int] = {}
    for combo in product(*per_block):
        terms[tuple(e for part in combo for e in part)] = 1
    return Poly(nvars, terms)


def orbit_size(group: GroupSpec, levi: LeviSpec, rep: Exponents) -> int:
    """Number of monomials in the orbit of `rep`."""
    blocks = levi_blocks(group, levi)
    size = 1
    start = 0
    for b in blocks:
        chunk = rep[start : start + b]
        counts: dict[int, int] = {}
        for e in chunk:
            counts[e] = counts.get(e, 0) + 1
        size *= factorial(b) // prod(factorial(c) for c in counts.values())
        start += b
    return size


def invariant_basis(group: GroupSpec, levi: LeviSpec, degree: int) -> list[Poly]:
    """Integral basis of the degree-d Levi invariants as orbit sums."""
    return [orbit_sum(group, levi, rep) for rep in orbit_representatives(group, levi, degree)]


def invariant_basis_size(group: GroupSpec, levi: LeviSpec, degree: int) -> int:
    """Orbit count of degree-d monomials, computed without building Polys."""
    if degree < 0:
        raise ParameterError("degree", f"degree must be >= 0, got {degree}")
    blocks = levi_blocks(group, levi)
    counts = [1] + [0] * degree
    for b in blocks:
        nxt = [0] * (degree + 1)
        for have in range(degree + 1):
            if counts[have]:
                for add in range(degree + 1 - have):
                    nxt[have + add] += counts[have] * _partition_count(add, b)
        counts = nxt
    return counts[degree]


def invariant_coordinates(
    group: GroupSpec,
    levi: LeviSpec,
    poly: Poly,
    representatives: Sequence[Exponents] | None = None,
) -> list[int]:
    """Coordinates of a homogeneous Levi-invariant Poly over the orbit basis.

    Orbit sums carry coefficient 1 on every member, so the coordinate of an
    orbit is the coefficient of its representative.  The input is verified to
    be genuinely invariant (constant coefficients on each orbit, no partial
    orbits); failure raises DecompositionError.
    """
    if not poly:
        raise DecompositionError("cannot infer the degree of the zero polynomial")
    if not poly.is_homogeneous():
        raise DecompositionError(f"not homogeneous: {poly}")
    degree = poly.total_degree()
    if representatives is None:
        representatives = orbit_representatives(group, levi, degree)
    index = {rep: i for i, rep in enumerate(representatives)}
    coords = [0] * len(representatives)
    covered_terms = 0
    for exps, coeff in poly.sorted_terms():
        rep = canonical_representative(group, levi, exps)
        if poly.coefficient(rep) != coeff:
            raise DecompositionError(
                f"coefficients differ inside one orbit: {poly} at {exps} vs {rep}"
            )
        if exps == rep:
            if rep not in index:
                raise DecompositionError(f"unexpected representative {rep} in degree {degree}")
            coords[index[rep]] = coeff
            covered_terms += orbit_size(group, levi, rep)
    if covered_terms != len(poly):
        raise DecompositionError(f"partial orbit support in {poly}")
    return coords


def levi_transpositions(group: GroupSpec, levi: LeviSpec) -> list[tuple[int, int]]:
    """Adjacent transpositions generating the Levi Weyl group (0-based pairs)."""
    out: list[tuple[int, int]] = []
    start = 0
    for b in levi_blocks(group, levi):
        out.extend((start + i, start + i + 1) for i in range(b - 1))
        start += b
    return out
