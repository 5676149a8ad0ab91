"""Graded Chow rings of zip-datum quotients, computed with exact arithmetic.

The graded ring is presented as the Levi-invariant subring modulo the ideal
generated by f - twist(f) over the invariant generators f of the full Weyl
group; with the q-power Frobenius the twist scales a degree-e generator by
q^e, so the relations normalize to (q^e - 1) * f.  Because every relation is
homogeneous and Levi-invariant, the degree-d piece of the ideal is the
lattice spanned by products basis(d - e) * relation(e), and each graded piece
is read off from a Smith reduction of that lattice inside the orbit-sum
basis: no Groebner machinery, just per-degree integer linear algebra.

Localization at p keeps the free ranks and strips the p-part of every torsion
invariant; it converts display reports into reports about truncated
Barsotti-Tate groups, independently of the truncation level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, prod

from .errors import ParameterError
from .intpoly import Poly, frobenius_twist
from .weyl import (
    GroupSpec,
    LeviSpec,
    ZipDatum,
    coset_count,
    invariant_basis,
    invariant_coordinates,
    invariant_generators,
    is_prime,
    levi_blocks,
    orbit_representatives,
    top_degree_bound,
)
from .zlinalg import AbelianGroup, GradedAbelianGroup, cokernel, normalize_torsion

LIE_BUNDLE = "Lie"
DUAL_LIE_BUNDLE = "tLie_dual"


# -- datum constructors ---------------------------------------------------------


def display_datum(height: int, dimension: int, q: int, p: int | None = None) -> ZipDatum:
    """Zip datum of the height-h, dimension-d display stack at level 1.

    Blocks are ordered (d, h-d) with the Lie block first; a zero-size block
    is dropped, leaving the single block (h).
    """
    if height < 1:
        raise ParameterError("h", f"height must be >= 1, got {height}")
    if not 0 <= dimension <= height:
        raise ParameterError("d", f"dimension must lie in 0..{height}, got {dimension}")
    blocks = tuple(b for b in (dimension, height - dimension) if b)
    return ZipDatum(
        group=GroupSpec("gl", height),
        levi=LeviSpec.composition(*blocks),
        q=q,
        p=p,
        display_dim=dimension,
    )


# -- relations and presentation --------------------------------------------------


def relations(datum: ZipDatum) -> list[Poly]:
    """The relation ideal generators: f - twist(f), sign-normalized.

    For each invariant generator f of degree e this is (q^e - 1) * f after
    normalizing to a positive leading coefficient; generators fixed by the
    twist (q = 1) contribute nothing and are dropped.
    """
    out: list[Poly] = []
    for f, _degree in invariant_generators(datum.group):
        rel = f - frobenius_twist(f, datum.q)
        if not rel:
            continue
        if rel.leading_coefficient() < 0:
            rel = -rel
        out.append(rel)
    return out


@dataclass(frozen=True)
class GeneratorInfo:
    """One polynomial generator of the Levi-invariant subring."""

    name: str
    degree: int
    block: int | None = None  # 1-based block index for GL data
    bundle: str | None = None  # vector bundle whose Chern class this is


@dataclass(frozen=True)
class ChowPresentation:
    """Generators-and-relations description of the graded quotient."""

    variables: int
    ring: str
    blocks: tuple[int, ...]
    bundles: tuple[str | None, ...]  # one label per block
    generators: tuple[GeneratorInfo, ...]
    relations: tuple[Poly, ...]
    notes: dict[str, str] = field(default_factory=dict)


def _block_bundles(datum: ZipDatum, blocks: tuple[int, ...]) -> tuple[str | None, ...]:
    if datum.group.kind != "gl":
        return (None,) * len(blocks)
    if datum.display_dim is not None:
        d = datum.display_dim
        labels = []
        if d:
            labels.append(LIE_BUNDLE)
        if datum.group.rank - d:
            labels.append(DUAL_LIE_BUNDLE)
        return tuple(labels)
    if len(blocks) == 2:
        return (LIE_BUNDLE, DUAL_LIE_BUNDLE)
    return (None,) * len(blocks)


def present(datum: ZipDatum) -> ChowPresentation:
    """Presentation of the graded ring: Levi generators plus twist relations."""
    group, levi = datum.group, datum.levi
    blocks = levi_blocks(group, levi)
    nvars = group.rank
    names = [f"t{i + 1}" for i in range(nvars)]

    bundles = _block_bundles(datum, blocks)
    generators: list[GeneratorInfo] = []
    if group.kind == "gl" or levi.parabolic == "siegel":
        start = 0
        for bi, b in enumerate(blocks):
            span = f"t{start + 1}..t{start + b}"
            for k in range(1, b + 1):
                if b == 1:
                    name = f"t{start + 1}"
                elif len(blocks) == 1:
                    name = f"c{k}"
                else:
                    name = f"c{k}({span})"
                generators.append(
                    GeneratorInfo(name=name, degree=k, block=bi + 1, bundle=bundles[bi])
                )
            start += b
    else:  # Sp Borel: trivial Levi Weyl group, the variables generate
        generators.extend(
            GeneratorInfo(name=f"t{i + 1}", degree=1, block=None, bundle=None)
            for i in range(nvars)
        )

    symmetric = [b for b in blocks if b > 1]
    ring = f"Z[{', '.join(names)}]"
    if symmetric and group.kind == "gl":
        ring += "^(" + " x ".join(f"S{b}" for b in blocks) + ")"
    elif levi.parabolic == "siegel":
        ring += f"^(S{group.rank})"

    notes: dict[str, str] = {
        "group": group.describe(),
        "levi": levi.describe(),
        "q": str(datum.q),
        "relation_form": "each relation is (q^e - 1) * f for a degree-e invariant generator f",
        "generator_convention": "invariant generators are elementary symmetric polynomials, ordered by degree",
    }
    if datum.p is not None:
        notes["p"] = str(datum.p)
    if datum.display_dim is not None:
        notes["block_order"] = (
            f"blocks ordered (d, h-d) = ({datum.display_dim}, "
            f"{group.rank - datum.display_dim}) with the Lie block first; "
            "swapping the blocks gives a canonically isomorphic ring"
        )
        notes["bundles"] = (
            f"{LIE_BUNDLE}: rank-{datum.display_dim} Lie algebra bundle; "
            f"{DUAL_LIE_BUNDLE}: rank-{group.rank - datum.display_dim} dual Lie "
            "algebra bundle of the dual object; block variables are their Chern roots"
        )

    return ChowPresentation(
        variables=nvars,
        ring=ring,
        blocks=blocks,
        bundles=bundles,
        generators=tuple(generators),
        relations=tuple(relations(datum)),
        notes=notes,
    )


# -- graded computation -----------------------------------------------------------


def graded_quotient(
    group: GroupSpec,
    levi: LeviSpec,
    rels: list[Poly],
    max_degree: int,
) -> GradedAbelianGroup:
    """Quotient of the Levi invariants by the lattice ideal the relations span."""
    if max_degree < 0:
        raise ParameterError("max_degree", f"must be >= 0, got {max_degree}")
    graded_rels: list[tuple[Poly, int]] = []
    for rel in rels:
        if not rel.is_homogeneous() or not rel:
            raise ValueError(f"relations must be nonzero homogeneous, got {rel}")
        graded_rels.append((rel, rel.total_degree()))

    components: list[AbelianGroup] = []
    for degree in range(max_degree + 1):
        reps = orbit_representatives(group, levi, degree)
        rows: list[list[int]] = []
        for rel, e in graded_rels:
            if e > degree:
                continue
            for b in invariant_basis(group, levi, degree - e):
                rows.append(invariant_coordinates(group, levi, b * rel, reps))
        components.append(cokernel(rows, len(reps)))
    return GradedAbelianGroup(tuple(components))


def graded_chow(datum: ZipDatum, max_degree: int) -> GradedAbelianGroup:
    """Graded pieces of the quotient ring, degrees 0..max_degree.

    Degree 0 is always Z.  Torsion persists above top_degree_bound for some
    data (single-block GL, for instance), so completeness in a degree is only
    claimed up to the requested bound.
    """
    return graded_quotient(datum.group, datum.levi, relations(datum), max_degree)


def picard(datum: ZipDatum) -> AbelianGroup:
    """The degree-1 graded piece."""
    return graded_chow(datum, 1).degree(1)


def q_dimension(datum: ZipDatum) -> int:
    """Total rational dimension of the quotient; equals the orbit count."""
    if datum.q < 2:
        raise ParameterError("q", "quotient not finite-dimensional for q = 1")
    bound = top_degree_bound(datum.group, datum.levi)
    graded = graded_chow(datum, bound)
    return sum(graded.free_ranks())


# -- aggregate reports -------------------------------------------------------------


@dataclass(frozen=True)
class ChowReport:
    """Presentation plus graded data, Picard, dimension and orbit count."""

    datum: ZipDatum
    presentation: ChowPresentation
    graded: GradedAbelianGroup
    picard: AbelianGroup
    rational_dimension: int | None  # None when q = 1 (not finite-dimensional)
    orbit_count: int
    top_degree_bound: int
    max_degree: int


def build_report(datum: ZipDatum, max_degree: int | None = None) -> ChowReport:
    bound = top_degree_bound(datum.group, datum.levi)
    if max_degree is None:
        max_degree = bound
    if max_degree < 0:
        raise ParameterError("max_degree", f"must be >= 0, got {max_degree}")
    graded = graded_chow(datum, max(max_degree, bound, 1))
    rational_dimension = None
    if datum.q >= 2:
        rational_dimension = sum(c.free_rank for c in graded.components[: bound + 1])
    orbits = coset_count(datum.group, datum.levi)
    if rational_dimension is not None and rational_dimension != orbits:
        raise AssertionError(
            f"rational dimension {rational_dimension} != orbit count {orbits} "
            f"for {datum.describe()}"
        )
    return ChowReport(
        datum=datum,
        presentation=present(datum),
        graded=GradedAbelianGroup(graded.components[: max_degree + 1]),
        picard=graded.degree(1),
        rational_dimension=rational_dimension,
        orbit_count=orbits,
        top_degree_bound=bound,
        max_degree=max_degree,
    )


def fzip_report(
    composition: tuple[int, ...] | list[int],
    p: int,
    max_degree: int | None = None,
    support: tuple[int, ...] | list[int] | None = None,
) -> ChowReport:
    """Report for the F-zip type with the given block sizes at the prime p.

    Support labels (one strictly increasing integer per block) only name the
    filtration steps; the ring depends on the block sizes alone.  The report
    is cross-checked against the closed forms: Picard is Z^(r-1) x Z/(p-1)
    and the rational dimension is the multinomial coefficient.
    """
    blocks = tuple(int(b) for b in composition)
    if support is not None:
        support = tuple(int(s) for s in support)
        if len(support) != len(blocks):
            raise ParameterError("support", "need exactly one label per block")
        if any(a >= b for a, b in zip(support, support[1:])):
            raise ParameterError("support", f"labels must be strictly increasing: {support}")
    if not is_prime(p):
        raise ParameterError("p", f"{p} is not prime")
    datum = ZipDatum(
        group=GroupSpec("gl", sum(blocks)),
        levi=LeviSpec.composition(*blocks),
        q=p,
        p=p,
    )
    report = build_report(datum, max_degree)

    r = len(blocks)
    expected_picard = AbelianGroup(r - 1, (p - 1,) if p > 2 else ())
    if report.picard != expected_picard:
        raise AssertionError(
            f"Picard group {report.picard} differs from the closed form {expected_picard}"
        )
    h = sum(blocks)
    expected_dim = factorial(h) // prod(factorial(b) for b in blocks)
    if report.rational_dimension != expected_dim:
        raise AssertionError(
            f"rational dimension {report.rational_dimension} differs from the "
            f"multinomial {expected_dim}"
        )
    return report


# -- localization -------------------------------------------------------------------


@dataclass(frozen=True)
class LocalizedReport:
    """Graded data over the integers with a prime inverted.

    Free ranks are unchanged; every torsion invariant has its p-part removed,
    so no entry is divisible by p.
    """

    prime: int
    graded: GradedAbelianGroup

    def __post_init__(self):
        for component in self.graded.components:
            if any(d % self.prime == 0 for d in component.torsion):
                raise ValueError(f"torsion {component.torsion} still has {self.prime}-part")


def localize(graded: GradedAbelianGroup, p: int) -> LocalizedReport:
    """Invert p: strip the p-part of each torsion invariant, drop trivial ones."""
    if not is_prime(p):
        raise ParameterError("p", f"{p} is not prime")
    components = []
    for component in graded.components:
        stripped = []
        for d in component.torsion:
            while d % p == 0:
                d //= p
            stripped.append(d)
        components.append(
            AbelianGroup(component.free_rank, normalize_torsion(stripped))
        )
    return LocalizedReport(prime=p, graded=GradedAbelianGroup(tuple(components)))


def bt_report(
    height: int,
    dimension: int,
    level: int,
    p: int,
    max_degree: int | None = None,
) -> LocalizedReport:
    """p-localized graded report for truncated Barsotti-Tate groups.

    The output is the p-localization of the matching display report and does
    not depend on the truncation level; the level is validated and then
    intentionally left out of the result so reports for different levels are
    identical.
    """
    if level < 1:
        raise ParameterError("level", f"level must be >= 1, got {level}")
    if not is_prime(p):
        raise ParameterError("p", f"{p} is not prime")
    datum = display_datum(height, dimension, q=p, p=p)
    if max_degree is None:
        max_degree = top_degree_bound(datum.group, datum.levi)
    return localize(graded_chow(datum, max_degree), p)


# -- the elliptic-curve compatibility check ------------------------------------------


@dataclass(frozen=True)
class M11Image:
    """One relation pushed to the single-variable ring, with its reduction."""

    relation: Poly
    image: Poly
    reduction: Poly
    in_ideal: bool


@dataclass(frozen=True)
class M11Check:
    prime: int
    compatible: bool
    images: tuple[M11Image, ...]


def _substitute_pm(poly: Poly) -> Poly:
    """Substitute t1 -> -t, t2 -> t into a two-variable polynomial."""
    terms: dict[tuple[int, ...], int] = {}
    for (a, b), coeff in poly.sorted_terms():
        signed = -coeff if a % 2 else coeff
        key = (a + b,)
        terms[key] = terms.get(key, 0) + signed
    return Poly(1, terms)


def _reduce_mod_12t(poly: Poly) -> Poly:
    """Canonical representative modulo the ideal (12t) of Z[t].

    Non-constant coefficients are reduced into 0..11; the constant term is
    untouched (the ideal contains no constants).
    """
    terms: dict[tuple[int, ...], int] = {}
    for (e,), coeff in poly.sorted_terms():
        terms[(e,)] = coeff if e == 0 else coeff % 12
    return Poly(1, terms)


def m11_compatibility(p: int) -> M11Check:
    """Whether the height-2 display relations land in the ideal (12t) of Z[t].

    Substituting t1 -> -t, t2 -> t (the elliptic-curve comparison map) sends
    the degree-1 relation to 0 and the degree-2 relation to -(p^2 - 1) t^2,
    so the check passes exactly when 12 divides p^2 - 1, i.e. for p >= 5.
    """
    datum = display_datum(2, 1, q=p, p=p)
    images = []
    for rel in relations(datum):
        image = _substitute_pm(rel)
        reduction = _reduce_mod_12t(image)
        images.append(
            M11Image(relation=rel, image=image, reduction=reduction, in_ideal=not reduction)
        )
    return M11Check(prime=p, compatible=all(im.in_ideal for im in images), images=tuple(images))


# -- convenience -----------------------------------------------------------------------


def display_report(height: int, dimension: int, p: int, max_degree: int | None = None) -> ChowReport:
    """Full report for the level-1 display stack of the given height and dimension."""
    return build_report(display_datum(height, dimension, q=p, p=p), max_degree)


def binomial_dimension(height: int, dimension: int) -> int:
    """Closed form C(h,d) for the display rational dimension."""
    return comb(height, dimension)
