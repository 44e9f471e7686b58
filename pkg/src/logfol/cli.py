"""Command line front end.

Reads a JSON problem description, validates it, and runs one of the
subcommands: ``verify`` (compare the Chern-number side with the
stratified index side), ``chern`` (just the integral), ``indices``
(per-point table) or ``count-complement`` (singularities off the
divisor).

Input schema::

    {
      "n": 2,
      "foliation": ["0", "z1*(z1 - z0)", "z2*(z2 - z0)"],
      "hyperplanes": ["z0", "z1", "z2"],
      "points": [["1", "1", "1"], ["1", "0", "0"]]
    }

Polynomials use variables z0..zn with integer or rational ("p/q")
coefficients and the operators + - * ^ and parentheses.  ``points`` is
optional; entries are homogeneous coordinates.  Exit status: 0 when the
command succeeds (for ``verify``, when both sides agree), 1 when
verification fails, 2 on any validation error, 3 on an internal error.

The divisor components accepted here are hyperplanes.  The underlying
Chern-class routines also handle higher-degree smooth components; that
generality has no index-side counterpart, so the CLI does not expose it.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .chern import (
    ChernInput,
    closed_form_sigma,
    lhs_integral,
    sigma_convention_note,
)
from .errors import NC_VIOLATION, SYNTAX_ERROR, InputError
from .foliations import (
    Arrangement,
    Foliation,
    ambient_names,
    require_logarithmic,
    validate_arrangement,
)
from .indices import (
    RationalPoint,
    complement_milnor_sum,
    point_record,
    verify_instance,
)
from .polynomials import format_poly, parse_polynomial


@dataclass(frozen=True)
class ProblemSpec:
    """A parsed and fully validated problem description."""

    n: int
    components: tuple
    forms: tuple
    points: tuple

    def foliation(self) -> Foliation:
        return Foliation(self.components)

    def arrangement(self) -> Arrangement:
        return Arrangement(self.n, self.forms)

    def serialize(self) -> dict:
        names = ambient_names(self.n)
        doc = {
            "n": self.n,
            "foliation": [format_poly(p, names) for p in self.components],
            "hyperplanes": [format_poly(f, names) for f in self.forms],
        }
        if self.points:
            doc["points"] = [[str(c) for c in p.coords] for p in self.points]
        return doc


def _fail(message: str) -> InputError:
    return InputError(SYNTAX_ERROR, message)


def parse_spec(text: str) -> ProblemSpec:
    """Parse and validate a JSON problem document.

    Raises InputError with a field locus in the message; the error code
    identifies the first failing validation layer.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _fail(f"invalid JSON at line {exc.lineno} column {exc.colno}: "
                    f"{exc.msg}") from None
    if not isinstance(doc, dict):
        raise _fail("top level must be a JSON object")
    unknown = set(doc) - {"n", "foliation", "hyperplanes", "points"}
    if unknown:
        raise _fail(f"unknown fields: {', '.join(sorted(unknown))}")

    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise _fail("field 'n': expected an integer >= 1")
    names = ambient_names(n)

    raw_comps = doc.get("foliation")
    if not isinstance(raw_comps, list) or len(raw_comps) != n + 1:
        raise _fail(f"field 'foliation': expected a list of {n + 1} "
                    "polynomial strings")
    components = []
    for i, item in enumerate(raw_comps):
        if not isinstance(item, str):
            raise _fail(f"foliation[{i}]: expected a string")
        try:
            components.append(parse_polynomial(item, names))
        except ValueError as exc:
            raise _fail(f"foliation[{i}]: {exc}") from None

    raw_forms = doc.get("hyperplanes", [])
    if not isinstance(raw_forms, list):
        raise _fail("field 'hyperplanes': expected a list of linear forms")
    forms = []
    for i, item in enumerate(raw_forms):
        if not isinstance(item, str):
            raise _fail(f"hyperplanes[{i}]: expected a string")
        try:
            forms.append(parse_polynomial(item, names))
        except ValueError as exc:
            raise _fail(f"hyperplanes[{i}]: {exc}") from None

    raw_points = doc.get("points", [])
    if not isinstance(raw_points, list):
        raise _fail("field 'points': expected a list of coordinate lists")
    points = []
    for i, item in enumerate(raw_points):
        if not isinstance(item, list) or len(item) != n + 1:
            raise _fail(f"points[{i}]: expected {n + 1} homogeneous "
                        "coordinates")
        try:
            points.append(RationalPoint.parse(item))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise _fail(f"points[{i}]: {exc}") from None

    spec = ProblemSpec(n=n, components=tuple(components), forms=tuple(forms),
                       points=tuple(points))
    # run every structural validation now so commands can assume a good spec
    fol = spec.foliation()
    arr = spec.arrangement()
    violation = validate_arrangement(arr)
    if violation is not None:
        raise InputError(NC_VIOLATION, violation.describe())
    require_logarithmic(fol, arr)
    return spec


# ------------------------------------------------------------------ payloads


def _point_payload(rec) -> dict:
    return {
        "point": rec.point.display(),
        "coordinates": [str(c) for c in rec.point.coords],
        "on_hyperplanes": list(rec.on_divisor),
        "singular": rec.singular,
        "milnor": rec.milnor,
        "log_index": rec.log_index,
        "hom_index": rec.hom_index,
    }


def _stratum_payload(s) -> dict:
    return {
        "hyperplanes": list(s.indices),
        "dim": s.dim,
        "sign": s.sign,
        "total_milnor": s.total,
    }


def _sigma_payload(spec: ProblemSpec) -> dict:
    data = ChernInput(n=spec.n, divisor_degrees=(1,) * len(spec.forms),
                      foliation_degree=spec.foliation().degree)
    return {
        "sigma_closed_form": closed_form_sigma(data),
        "sigma_matches": closed_form_sigma(data) == lhs_integral(data),
        "warnings": [sigma_convention_note()],
    }


def cmd_verify(spec: ProblemSpec, check_sigma: bool = False) -> dict:
    report = verify_instance(spec.foliation(), spec.arrangement(), spec.points)
    payload = {
        "command": "verify",
        "n": report.n,
        "degree": report.degree,
        "hyperplanes": report.hyperplanes,
        "lhs_chern": report.lhs_chern,
        "rhs_total": report.rhs_total,
        "verified": report.verified,
        "strata": [_stratum_payload(s) for s in report.strata],
        "points": [_point_payload(r) for r in report.points],
        "warnings": [],
    }
    if check_sigma:
        extra = _sigma_payload(spec)
        payload["sigma_closed_form"] = extra["sigma_closed_form"]
        payload["sigma_matches"] = extra["sigma_matches"]
        payload["warnings"] = extra["warnings"]
    return payload


def cmd_chern(spec: ProblemSpec, check_sigma: bool = False) -> dict:
    fol = spec.foliation()
    data = ChernInput(n=spec.n, divisor_degrees=(1,) * len(spec.forms),
                      foliation_degree=fol.degree)
    payload = {
        "command": "chern",
        "n": spec.n,
        "degree": fol.degree,
        "hyperplanes": len(spec.forms),
        "lhs_chern": lhs_integral(data),
        "warnings": [],
    }
    if check_sigma:
        extra = _sigma_payload(spec)
        payload["sigma_closed_form"] = extra["sigma_closed_form"]
        payload["sigma_matches"] = extra["sigma_matches"]
        payload["warnings"] = extra["warnings"]
    return payload


def cmd_indices(spec: ProblemSpec, extra_points=()) -> dict:
    fol = spec.foliation()
    arr = spec.arrangement()
    points = list(spec.points) + list(extra_points)
    records = [point_record(fol, arr, p) for p in points]
    return {
        "command": "indices",
        "n": spec.n,
        "degree": fol.degree,
        "hyperplanes": len(spec.forms),
        "points": [_point_payload(r) for r in records],
        "warnings": [],
    }


def cmd_count_complement(spec: ProblemSpec) -> dict:
    fol = spec.foliation()
    total = complement_milnor_sum(fol, spec.arrangement())
    return {
        "command": "count-complement",
        "n": spec.n,
        "degree": fol.degree,
        "hyperplanes": len(spec.forms),
        "complement_milnor_sum": total,
        "warnings": [],
    }


# ----------------------------------------------------------------- rendering


def _point_lines(payload) -> list:
    lines = []
    for rec in payload:
        where = ("on hyperplanes " + ",".join(str(i) for i in rec["on_hyperplanes"])
                 if rec["on_hyperplanes"] else "off divisor")
        bits = [f"point {rec['point']}: {where}",
                "singular" if rec["singular"] else "nonsingular",
                f"mu={rec['milnor']}", f"log={rec['log_index']}"]
        if rec["hom_index"] is not None:
            bits.append(f"hom={rec['hom_index']}")
        lines.append("  " + ", ".join(bits))
    return lines


def render_text(payload: dict) -> str:
    lines = [f"instance: P^{payload['n']}, degree {payload['degree']} "
             f"foliation, {payload['hyperplanes']} hyperplanes"]
    if payload["command"] in ("verify", "chern"):
        lines.append(f"lhs chern integral: {payload['lhs_chern']}")
    if payload["command"] == "verify":
        lines.append(f"rhs stratified total: {payload['rhs_total']}")
        lines.append("verified: " + ("yes" if payload["verified"] else "no"))
        lines.append("strata (sign * total milnor):")
        for s in payload["strata"]:
            label = "{" + ",".join(str(i) for i in s["hyperplanes"]) + "}"
            lines.append(f"  {label} dim {s['dim']}: "
                         f"{'+' if s['sign'] > 0 else '-'}{s['total_milnor']}")
    if payload["command"] == "count-complement":
        lines.append(f"complement milnor sum: {payload['complement_milnor_sum']}")
    if payload.get("points"):
        lines.append("points:")
        lines.extend(_point_lines(payload["points"]))
    if "sigma_closed_form" in payload:
        agrees = "agrees" if payload["sigma_matches"] else "DISAGREES"
        lines.append(f"sigma closed form: {payload['sigma_closed_form']} "
                     f"({agrees})")
    for note in payload["warnings"]:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------- entrypoint


def _parse_cli_point(text: str, n: int) -> RationalPoint:
    parts = [piece.strip() for piece in text.split(",")]
    if len(parts) != n + 1:
        raise _fail(f"--point {text!r}: expected {n + 1} comma-separated "
                    "coordinates")
    try:
        return RationalPoint.parse(parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise _fail(f"--point {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logfol",
        description="Exact residue bookkeeping for foliations logarithmic "
                    "along hyperplane arrangements.")
    parser.add_argument("--report", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="compare the Chern integral with the index sum")
    p_verify.add_argument("file", help="JSON problem description")
    p_verify.add_argument("--check-sigma", action="store_true",
                          help="also evaluate the closed form and report "
                               "the sign convention")

    p_chern = sub.add_parser(
        "chern", help="compute the Chern-number side only")
    p_chern.add_argument("file")
    p_chern.add_argument("--check-sigma", action="store_true",
                         help="also evaluate the closed form and report "
                              "the sign convention")

    p_idx = sub.add_parser(
        "indices", help="per-point Milnor / log / hom index table")
    p_idx.add_argument("file")
    p_idx.add_argument("--point", action="append", default=[],
                       metavar="a,b,c",
                       help="extra rational point in homogeneous coordinates "
                            "(repeatable)")

    p_cc = sub.add_parser(
        "count-complement", help="total Milnor number off the divisor")
    p_cc.add_argument("file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        try:
            with open(args.file, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise _fail(f"cannot read {args.file}: {exc.strerror}") from None
        spec = parse_spec(text)
        if args.command == "verify":
            payload = cmd_verify(spec, check_sigma=args.check_sigma)
        elif args.command == "chern":
            payload = cmd_chern(spec, check_sigma=args.check_sigma)
        elif args.command == "indices":
            extra = [_parse_cli_point(raw, spec.n) for raw in args.point]
            payload = cmd_indices(spec, extra)
        else:
            payload = cmd_count_complement(spec)
    except InputError as exc:
        print(f"error {exc.code}: {exc.message}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3

    renderer = render_json if args.report == "json" else render_text
    sys.stdout.write(renderer(payload))
    if payload.get("verified") is False:
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
