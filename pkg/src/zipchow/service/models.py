"""Pydantic request/response models for the report service.

The response models define the wire format shared by the HTTP endpoints and
the CLI JSON output: fixed key order (field order below), canonical Poly
strings, compact rendering.  Requests perform the semantic validation and
raise ParameterError with the offending parameter name.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

from ..chow import (
    ChowPresentation,
    ChowReport,
    LocalizedReport,
    M11Check,
    display_datum,
)
from ..errors import ParameterError
from ..weyl import GroupSpec, LeviSpec, ZipDatum
from ..zlinalg import AbelianGroup, GradedAbelianGroup

# -- requests -------------------------------------------------------------------


class DatumRequest(BaseModel):
    """Zip datum described the way the CLI flags spell it."""

    group: Literal["gl", "sp"]
    h: int | None = None
    d: int | None = None
    composition: list[int] | None = None
    n: int | None = None
    parabolic: Literal["borel", "siegel"] | None = None
    q: int | None = None
    p: int | None = None

    def _resolve_qp(self) -> tuple[int, int | None]:
        if self.q is None and self.p is None:
            raise ParameterError("q", "give q (or p, which sets q = p)")
        q = self.q if self.q is not None else self.p
        return q, self.p  # type: ignore[return-value]

    def to_group_levi(self) -> tuple[GroupSpec, LeviSpec]:
        if self.group == "gl":
            if self.h is None:
                raise ParameterError("h", "GL data need h")
            if (self.d is None) == (self.composition is None):
                raise ParameterError("d", "give exactly one of d or composition")
            group = GroupSpec("gl", self.h)
            if self.d is not None:
                if not 0 <= self.d <= self.h:
                    raise ParameterError("d", f"d must lie in 0..{self.h}, got {self.d}")
                blocks = tuple(b for b in (self.d, self.h - self.d) if b)
            else:
                blocks = tuple(self.composition or ())
            return group, LeviSpec.composition(*blocks)
        if self.n is None:
            raise ParameterError("n", "Sp data need n")
        if self.parabolic is None:
            raise ParameterError("parabolic", "Sp data need a parabolic (borel or siegel)")
        if self.h is not None or self.d is not None or self.composition is not None:
            raise ParameterError("group", "h/d/composition only apply to GL data")
        return GroupSpec("sp", self.n), LeviSpec(parabolic=self.parabolic)

    def to_datum(self) -> ZipDatum:
        q, p = self._resolve_qp()
        group, levi = self.to_group_levi()  # validates the flag combination
        if self.group == "gl" and self.d is not None:
            return display_datum(self.h, self.d, q=q, p=p)  # type: ignore[arg-type]
        return ZipDatum(group=group, levi=levi, q=q, p=p)


class ReportRequest(DatumRequest):
    max_degree: int | None = None


class OrbitsRequest(DatumRequest):
    # orbit counting is purely combinatorial, so q/p may be omitted
    pass


class FzipRequest(BaseModel):
    composition: list[int]
    support: list[int] | None = None
    p: int
    max_degree: int | None = None


class BtRequest(BaseModel):
    h: int
    d: int
    level: int = 1
    p: int
    max_degree: int | None = None


class M11Request(BaseModel):
    p: int


# -- responses ------------------------------------------------------------------


class AbelianGroupModel(BaseModel):
    free_rank: int
    torsion: list[int]

    @classmethod
    def from_core(cls, group: AbelianGroup) -> AbelianGroupModel:
        return cls(free_rank=group.free_rank, torsion=list(group.torsion))

    def text(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


class GradedEntryModel(BaseModel):
    degree: int
    free_rank: int
    torsion: list[int]

    def text(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def graded_entries(graded: GradedAbelianGroup) -> list[GradedEntryModel]:
    return [
        GradedEntryModel(degree=d, free_rank=c.free_rank, torsion=list(c.torsion))
        for d, c in enumerate(graded.components)
    ]


class GeneratorModel(BaseModel):
    name: str
    degree: int
    block: int | None = None
    bundle: str | None = None


class RelationModel(BaseModel):
    text: str
    degree: int


class PresentationModel(BaseModel):
    ring: str
    variables: list[str]
    blocks: list[int]
    generators: list[GeneratorModel]
    relations: list[RelationModel]
    notes: dict[str, str]

    @classmethod
    def from_core(
        cls, pres: ChowPresentation, inverted_prime: int | None = None
    ) -> PresentationModel:
        ring = pres.ring
        if inverted_prime is not None:
            ring = f"Z[1/{inverted_prime}]" + ring[1:]
        return cls(
            ring=ring,
            variables=[f"t{i + 1}" for i in range(pres.variables)],
            blocks=list(pres.blocks),
            generators=[
                GeneratorModel(name=g.name, degree=g.degree, block=g.block, bundle=g.bundle)
                for g in pres.generators
            ],
            relations=[
                RelationModel(text=str(r), degree=r.total_degree()) for r in pres.relations
            ],
            notes=dict(pres.notes),
        )


class DatumModel(BaseModel):
    group: str
    rank: int
    composition: list[int] | None = None
    parabolic: str | None = None
    support: list[int] | None = None
    q: int
    p: int | None = None

    @classmethod
    def from_core(cls, datum: ZipDatum, support: list[int] | None = None) -> DatumModel:
        return cls(
            group=datum.group.kind,
            rank=datum.group.rank,
            composition=list(datum.levi.blocks) if datum.levi.blocks is not None else None,
            parabolic=datum.levi.parabolic,
            support=support,
            q=datum.q,
            p=datum.p,
        )


class ReportModel(BaseModel):
    """The full report schema shared by present/graded/fzip/bt outputs."""

    datum: DatumModel
    presentation: PresentationModel
    graded: list[GradedEntryModel]
    picard: AbelianGroupModel
    rational_dimension: int | None
    orbit_count: int
    metadata: dict[str, int | str]

    @classmethod
    def from_report(
        cls,
        report: ChowReport,
        kind: str,
        support: list[int] | None = None,
    ) -> ReportModel:
        metadata: dict[str, int | str] = {
            "report": kind,
            "top_degree_bound": report.top_degree_bound,
            "max_degree": report.max_degree,
            "torsion_note": "torsion above max_degree is not computed",
        }
        return cls(
            datum=DatumModel.from_core(report.datum, support=support),
            presentation=PresentationModel.from_core(report.presentation),
            graded=graded_entries(report.graded),
            picard=AbelianGroupModel.from_core(report.picard),
            rational_dimension=report.rational_dimension,
            orbit_count=report.orbit_count,
            metadata=metadata,
        )

    @classmethod
    def from_localized(
        cls,
        localized: LocalizedReport,
        datum: ZipDatum,
        presentation: ChowPresentation,
        picard: AbelianGroup,
        rational_dimension: int,
        orbit_count: int,
        top_bound: int,
    ) -> ReportModel:
        metadata: dict[str, int | str] = {
            "report": "bt",
            "localized_at": localized.prime,
            "top_degree_bound": top_bound,
            "max_degree": localized.graded.max_degree,
            "level_independence": "identical for every truncation level n >= 1",
            "torsion_note": "torsion above max_degree is not computed",
        }
        return cls(
            datum=DatumModel.from_core(datum),
            presentation=PresentationModel.from_core(presentation, inverted_prime=localized.prime),
            graded=graded_entries(localized.graded),
            picard=AbelianGroupModel.from_core(picard),
            rational_dimension=rational_dimension,
            orbit_count=orbit_count,
            metadata=metadata,
        )


class QDimensionModel(BaseModel):
    q_dimension: int


class OrbitCountModel(BaseModel):
    orbit_count: int


class M11ImageModel(BaseModel):
    relation: str
    image: str
    reduction: str
    in_ideal: bool


class M11Model(BaseModel):
    prime: int
    compatible: bool
    images: list[M11ImageModel]

    @classmethod
    def from_core(cls, check: M11Check) -> M11Model:
        return cls(
            prime=check.prime,
            compatible=check.compatible,
            images=[
                M11ImageModel(
                    relation=str(im.relation),
                    image=str(im.image),
                    reduction=str(im.reduction),
                    in_ideal=im.in_ideal,
                )
                for im in check.images
            ],
        )
