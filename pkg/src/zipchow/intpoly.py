"""Exact multivariate polynomial arithmetic over arbitrary-precision integers.

A monomial is a tuple of non-negative exponents, one entry per torus variable
t1..tn.  A polynomial stores {exponent tuple: nonzero integer coefficient}
together with the variable count, so two Poly values are equal exactly when
they are the same element of Z[t1,...,tn].  The zero polynomial stores no
terms.

Every operation is a pure function of immutable inputs and returns a Poly in
canonical form.  The canonical term order (used for printing and for matrix
coordinates downstream) is graded reverse lexicographic with t1 > ... > tn,
leading term first.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

Exponents = tuple[int, ...]


def grevlex_key(exponents: Sequence[int]) -> tuple:
    """Ascending sort key realizing the canonical graded reverse lex order."""
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


class Poly:
    """An element of Z[t1,...,tn] in canonical form (no zero coefficients)."""

    __slots__ = ("nvars", "_terms")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]] = (),
    ):
        if nvars < 0:
            raise ValueError("variable count must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, int] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"monomial {exps} does not have {nvars} exponents")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in monomial {exps}")
            if coeff:
                acc[exps] = acc.get(exps, 0) + int(coeff)
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> Poly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> Poly:
        """The variable t_{index+1} (zero-based index)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: int = 1) -> Poly:
        return cls(nvars, {tuple(exps): coeff})

    # -- inspection ----------------------------------------------------------

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in canonical order, leading term first."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def monomials(self) -> list[Exponents]:
        return [e for e, _ in self.sorted_terms()]

    def leading_coefficient(self) -> int:
        """Coefficient of the canonical leading term (0 for the zero Poly)."""
        if not self._terms:
            return 0
        lead = max(self._terms, key=grevlex_key)
        return self._terms[lead]

    def total_degree(self) -> int:
        """Max total degree over the terms; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]  # mutable-dict carrier

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other: Poly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: Poly) -> Poly:
        self._check_compatible(other)
        acc = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc[exps] = acc.get(exps, 0) + coeff
        return Poly(self.nvars, acc)

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly(self.nvars, {e: c * other for e, c in self._terms.items()})
        self._check_compatible(other)
        acc: dict[Exponents, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                acc[key] = acc.get(key, 0) + ca * cb
        return Poly(self.nvars, acc)

    def __rmul__(self, other: int) -> Poly:
        return self * other

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = Poly.constant(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- text form -----------------------------------------------------------

    def __str__(self) -> str:
        """Deterministic text form, e.g. "2*t1^2 + 2*t1*t2"."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.sorted_terms():
            factors = [
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            mono = "*".join(factors)
            if mono:
                body = mono if abs(coeff) == 1 else f"{abs(coeff)}*{mono}"
            else:
                body = str(abs(coeff))
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self})"


# -- spec operation aliases ---------------------------------------------------


def add(p: Poly, q: Poly) -> Poly:
    """Coefficient-wise sum; the Polys must share one variable count."""
    return p + q


def multiply(p: Poly, q: Poly) -> Poly:
    """Distributive product; the Polys must share one variable count."""
    return p * q


def elementary_symmetric(k: int, n: int) -> Poly:
    """e_k(t1,...,tn): homogeneous of degree k with C(n,k) unit terms."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    terms: dict[Exponents, int] = {}
    for subset in combinations(range(n), k):
        exps = [0] * n
        for i in subset:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return Poly(n, terms)


def elementary_symmetric_squares(k: int, n: int) -> Poly:
    """e_k(t1^2,...,tn^2): homogeneous of degree 2k."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    terms: dict[Exponents, int] = {}
    for subset in combinations(range(n), k):
        exps = [0] * n
        for i in subset:
            exps[i] = 2
        terms[tuple(exps)] = 1
    return Poly(n, terms)


def frobenius_twist(p: Poly, q: int) -> Poly:
    """Scale each degree-d term by q^d; equals the substitution t_i -> q*t_i.

    This is the action induced on the symmetric algebra of the character
    lattice by the q-power Frobenius, a ring endomorphism.
    """
    if q < 1:
        raise ValueError(f"Frobenius power q={q} must be >= 1")
    return Poly(p.nvars, {e: c * q ** sum(e) for e, c in p._terms.items()})


def permute_variables(p: Poly, images: Sequence[int]) -> Poly:
    """Apply the variable permutation t_i -> t_{images[i]} (zero-based)."""
    if sorted(images) != list(range(p.nvars)):
        raise ValueError(f"{images} is not a permutation of 0..{p.nvars - 1}")
    terms: dict[Exponents, int] = {}
    for exps, coeff in p._terms.items():
        new = [0] * p.nvars
        for i, e in enumerate(exps):
            new[images[i]] = e
        terms[tuple(new)] = coeff
    return Poly(p.nvars, terms)


def flip_signs(p: Poly, flips: Sequence[bool]) -> Poly:
    """Apply t_i -> -t_i for each flagged variable."""
    if len(flips) != p.nvars:
        raise ValueError("one flag per variable required")
    terms: dict[Exponents, int] = {}
    for exps, coeff in p._terms.items():
        parity = sum(e for e, f in zip(exps, flips) if f)
        terms[exps] = -coeff if parity % 2 else coeff
    return Poly(p.nvars, terms)
