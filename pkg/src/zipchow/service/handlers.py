"""Report handlers shared by the HTTP endpoints and the CLI."""

from __future__ import annotations

from ..chow import (
    bt_report,
    build_report,
    display_datum,
    fzip_report,
    graded_chow,
    localize,
    m11_compatibility,
    picard,
    q_dimension,
    present,
)
from ..weyl import coset_count, top_degree_bound
from .models import (
    AbelianGroupModel,
    BtRequest,
    DatumRequest,
    FzipRequest,
    M11Model,
    M11Request,
    OrbitCountModel,
    OrbitsRequest,
    QDimensionModel,
    ReportModel,
    ReportRequest,
)


def handle_present(req: ReportRequest) -> ReportModel:
    return ReportModel.from_report(build_report(req.to_datum(), req.max_degree), kind="present")


def handle_graded(req: ReportRequest) -> ReportModel:
    return ReportModel.from_report(build_report(req.to_datum(), req.max_degree), kind="graded")


def handle_picard(req: DatumRequest) -> AbelianGroupModel:
    return AbelianGroupModel.from_core(picard(req.to_datum()))


def handle_qdim(req: DatumRequest) -> QDimensionModel:
    return QDimensionModel(q_dimension=q_dimension(req.to_datum()))


def handle_orbits(req: OrbitsRequest) -> OrbitCountModel:
    group, levi = req.to_group_levi()
    return OrbitCountModel(orbit_count=coset_count(group, levi))


def handle_fzip(req: FzipRequest) -> ReportModel:
    report = fzip_report(req.composition, req.p, req.max_degree, req.support)
    support = req.support if req.support is not None else list(range(len(req.composition)))
    return ReportModel.from_report(report, kind="fzip", support=support)


def handle_bt(req: BtRequest) -> ReportModel:
    localized = bt_report(req.h, req.d, req.level, req.p, req.max_degree)
    datum = display_datum(req.h, req.d, q=req.p, p=req.p)
    bound = top_degree_bound(datum.group, datum.levi)
    picard_localized = localize(graded_chow(datum, 1), req.p).graded.degree(1)
    return ReportModel.from_localized(
        localized,
        datum=datum,
        presentation=present(datum),
        picard=picard_localized,
        rational_dimension=q_dimension(datum),
        orbit_count=coset_count(datum.group, datum.levi),
        top_bound=bound,
    )


def handle_m11(req: M11Request) -> M11Model:
    return M11Model.from_core(m11_compatibility(req.p))
