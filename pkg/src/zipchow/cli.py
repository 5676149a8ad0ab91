"""Command-line front end; a thin client over the service handlers.

Every command is computed in-process through the same handler layer the HTTP
endpoints use, then rendered either as deterministic text or as the compact
JSON wire format.  Exit codes: 0 success, 2 invalid parameters (one line on
stderr naming the offending flag), 3 matrix cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .errors import MatrixCapExceeded, ParameterError
from .service import handlers
from .service.models import (
    BtRequest,
    DatumRequest,
    FzipRequest,
    M11Model,
    M11Request,
    OrbitsRequest,
    ReportModel,
    ReportRequest,
)


def _parse_int_list(raw: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError:
        raise ParameterError(flag, f"expected comma-separated integers, got {raw!r}") from None


def _add_datum_flags(sp: argparse.ArgumentParser, with_q: bool = True) -> None:
    sp.add_argument("--group", choices=["gl", "sp"], required=True, help="group kind")
    sp.add_argument("--h", type=int, help="GL torus rank h")
    sp.add_argument("--d", type=int, help="display dimension d (blocks (d, h-d))")
    sp.add_argument("--composition", help="GL blocks, e.g. 2,1,1")
    sp.add_argument("--n", type=int, help="Sp rank n (the group is Sp(2n))")
    sp.add_argument("--parabolic", choices=["borel", "siegel"], help="Sp parabolic")
    if with_q:
        sp.add_argument("--q", type=int, help="Frobenius power")
        sp.add_argument("--p", type=int, help="prime; sets q = p when --q is omitted")


def _add_output_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zipchow",
        description="Exact graded Chow rings of stacks of zips and truncated displays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("present", help="generators-and-relations presentation")
    _add_datum_flags(sp)
    sp.add_argument("--max-degree", type=int, help="graded range (default: top degree bound)")
    _add_output_flags(sp)

    sp = sub.add_parser("graded", help="per-degree free ranks and torsion chains")
    _add_datum_flags(sp)
    sp.add_argument("--max-degree", type=int, help="graded range (default: top degree bound)")
    _add_output_flags(sp)

    sp = sub.add_parser("picard", help="the degree-1 group")
    _add_datum_flags(sp)
    _add_output_flags(sp)

    sp = sub.add_parser("qdim", help="total rational dimension (needs q >= 2)")
    _add_datum_flags(sp)
    _add_output_flags(sp)

    sp = sub.add_parser("orbits", help="orbit count |W_G / W_L|")
    _add_datum_flags(sp, with_q=False)
    _add_output_flags(sp)

    sp = sub.add_parser("fzip", help="report for an F-zip type")
    sp.add_argument("--composition", required=True, help="block sizes, e.g. 1,1,1")
    sp.add_argument("--support", help="filtration labels, strictly increasing, one per block")
    sp.add_argument("--p", type=int, required=True, help="prime")
    sp.add_argument("--max-degree", type=int)
    _add_output_flags(sp)

    sp = sub.add_parser("bt", help="p-localized report for truncated Barsotti-Tate groups")
    sp.add_argument("--h", type=int, required=True, help="height")
    sp.add_argument("--d", type=int, required=True, help="dimension")
    sp.add_argument("--level", type=int, default=1, help="truncation level (never changes the output)")
    sp.add_argument("--p", type=int, required=True, help="prime")
    sp.add_argument("--max-degree", type=int)
    _add_output_flags(sp)

    sp = sub.add_parser("m11", help="compatibility of the (2,1) relations with the ideal (12t)")
    sp.add_argument("--p", type=int, required=True, help="prime")
    _add_output_flags(sp)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)

    return parser


# -- text rendering ----------------------------------------------------------------


def _group_text(free_rank: int, torsion: list[int]) -> str:
    parts = ["Z"] * free_rank + [f"Z/{d}" for d in torsion]
    return " + ".join(parts) if parts else "0"


def _render_report_text(model: ReportModel, show_presentation: bool, show_graded: bool) -> str:
    lines: list[str] = []
    datum = model.datum
    group_name = f"GL({datum.rank})" if datum.group == "gl" else f"Sp({2 * datum.rank})"
    datum_bits = [group_name]
    if datum.composition is not None:
        datum_bits.append("blocks (" + ", ".join(map(str, datum.composition)) + ")")
    if datum.parabolic is not None:
        datum_bits.append(f"parabolic {datum.parabolic}")
    if datum.support is not None:
        datum_bits.append("support (" + ", ".join(map(str, datum.support)) + ")")
    datum_bits.append(f"q = {datum.q}")
    if datum.p is not None:
        datum_bits.append(f"p = {datum.p}")
    lines.append("datum: " + ", ".join(datum_bits))

    if show_presentation:
        pres = model.presentation
        lines.append(f"ring: {pres.ring}")
        lines.append("generators:")
        for gen in pres.generators:
            extra = f", {gen.bundle} roots" if gen.bundle else ""
            lines.append(f"  {gen.name}  (degree {gen.degree}{extra})")
        lines.append("relations:")
        if pres.relations:
            for rel in pres.relations:
                lines.append(f"  {rel.text}  (degree {rel.degree})")
        else:
            lines.append("  (none)")
        if pres.notes:
            lines.append("notes:")
            for key, value in pres.notes.items():
                lines.append(f"  {key}: {value}")

    if show_graded:
        lines.append("graded:")
        for entry in model.graded:
            lines.append(f"  degree {entry.degree}: {_group_text(entry.free_rank, entry.torsion)}")

    lines.append(f"picard: {_group_text(model.picard.free_rank, model.picard.torsion)}")
    if model.rational_dimension is not None:
        lines.append(f"rational dimension: {model.rational_dimension}")
    lines.append(f"orbit count: {model.orbit_count}")
    for key, value in model.metadata.items():
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _render_m11_text(model: M11Model) -> str:
    lines = [f"prime: {model.prime}"]
    for image in model.images:
        status = "in ideal (12*t1)" if image.in_ideal else f"reduction {image.reduction}"
        lines.append(f"relation {image.relation} -> image {image.image}; {status}")
    lines.append(f"compatible: {'true' if model.compatible else 'false'}")
    return "\n".join(lines) + "\n"


# -- dispatch ----------------------------------------------------------------------


def _datum_request(args: argparse.Namespace, cls=DatumRequest, **extra):
    composition = None
    if getattr(args, "composition", None):
        composition = _parse_int_list(args.composition, "composition")
    return cls(
        group=args.group,
        h=args.h,
        d=args.d,
        composition=composition,
        n=args.n,
        parabolic=args.parabolic,
        q=getattr(args, "q", None),
        p=getattr(args, "p", None),
        **extra,
    )


def _run_command(args: argparse.Namespace) -> str:
    if args.command in ("present", "graded"):
        req = _datum_request(args, ReportRequest, max_degree=args.max_degree)
        model = handlers.handle_present(req) if args.command == "present" else handlers.handle_graded(req)
        if args.format == "json":
            return model.model_dump_json() + "\n"
        return _render_report_text(
            model,
            show_presentation=True,
            show_graded=args.command == "graded",
        )

    if args.command == "picard":
        model = handlers.handle_picard(_datum_request(args))
        if args.format == "json":
            return model.model_dump_json() + "\n"
        return _group_text(model.free_rank, model.torsion) + "\n"

    if args.command == "qdim":
        model = handlers.handle_qdim(_datum_request(args))
        if args.format == "json":
            return model.model_dump_json() + "\n"
        return f"{model.q_dimension}\n"

    if args.command == "orbits":
        model = handlers.handle_orbits(_datum_request(args, OrbitsRequest))
        if args.format == "json":
            return model.model_dump_json() + "\n"
        return f"{model.orbit_count}\n"

    if args.command == "fzip":
        support = _parse_int_list(args.support, "support") if args.support else None
        req = FzipRequest(
            composition=_parse_int_list(args.composition, "composition"),
            support=support,
            p=args.p,
            max_degree=args.max_degree,
        )
        model = handlers.handle_fzip(req)
        if args.format == "json":
            return model.model_dump_json() + "\n"
        return _render_report_text(model, show_presentation=True, show_graded=True)

    if args.command == "bt":
        req = BtRequest(h=args.h, d=args.d, level=args.level, p=args.p, max_degree=args.max_degree)
        model = handlers.handle_bt(req)
        if args.format == "json":
            return model.model_dump_json() + "\n"
        return _render_report_text(model, show_presentation=True, show_graded=True)

    if args.command == "m11":
        model = handlers.handle_m11(M11Request(p=args.p))
        if args.format == "json":
            return model.model_dump_json() + "\n"
        return _render_m11_text(model)

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        rendered = _run_command(args)
    except ParameterError as exc:
        flag = "--" + exc.param.replace("_", "-")
        print(f"error: {flag}: {exc.message}", file=sys.stderr)
        return 2
    except MatrixCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
