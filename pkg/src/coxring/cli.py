"""Command line front end: curve and fan reports with deterministic output.

Subcommands: curve (presentation of a glued curve), toric (polynomial ring
of a fan), verify (the verification checks on either input), crosscheck
(agreement of the two lattice pipelines).  Reports are emitted as JSON with
sorted keys or as flat text, and repeated runs on the same input produce
identical bytes.

Exit codes: 0 when nothing failed (nonseparatedness and inconclusive checks
are findings, reported with a flag), 2 when a verification check failed,
1 for unreadable or malformed input.
"""

import argparse
import json
import sys
from fractions import Fraction

from .coxalg import (
    Fail,
    Inconclusive,
    NotSeparated,
    Pass,
    Separated,
    build_presentation,
    curve_algebra,
    default_box,
    freely_graded_check,
    irrelevant_sections,
    is_pointed,
    sections_as_polynomials,
    separatedness_check,
    uniqueness_crosscheck,
    weight_monoid_check,
)
from .ratcurve import curve_from_json
from .toric import (
    MalformedFan,
    class_group,
    cox_presentation,
    fan_from_json,
    toric_cox_data,
)


class InputError(Exception):
    """The input file cannot be read or fails schema validation."""


def _plain(value):
    """Recursively convert report values to JSON-serializable ones."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


def _verdict_entry(verdict, **context):
    if isinstance(verdict, Pass):
        out = {"verdict": "pass"}
        if verdict.details:
            out["details"] = _plain(verdict.details)
    elif isinstance(verdict, Fail):
        out = {"verdict": "fail"}
        if verdict.cokernel is not None:
            out["cokernel"] = _plain(verdict.cokernel)
        if verdict.details:
            out["details"] = _plain(verdict.details)
    elif isinstance(verdict, Inconclusive):
        out = {"verdict": "inconclusive", "reason": verdict.reason}
        if verdict.details:
            out["details"] = _plain(verdict.details)
    elif isinstance(verdict, Separated):
        out = {"verdict": "separated", "levels": verdict.levels}
    elif isinstance(verdict, NotSeparated):
        out = {"verdict": "not_separated", "pair": list(verdict.pair),
               "level": verdict.level, "witness": str(verdict.witness),
               "shifted": str(verdict.shifted)}
    else:
        raise TypeError("unknown verdict %r" % (verdict,))
    out.update(context)
    return out


def _pointed_entry(report):
    if not report["a0_is_field"] or report["units_are_constants"] == "fail":
        verdict = "fail"
    elif report["units_are_constants"] == "inconclusive":
        verdict = "inconclusive"
    else:
        verdict = "pass"
    return {"verdict": verdict, "a0_is_field": report["a0_is_field"],
            "units_are_constants": report["units_are_constants"],
            "witness": _plain(report["witness"]), "note": report["note"]}


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise InputError("%s is not valid JSON: %s" % (path, exc)) from exc


def _load_curve(path):
    try:
        return curve_from_json(_load(path))
    except ValueError as exc:
        raise InputError("%s: %s" % (path, exc)) from exc


def _load_fan(path):
    try:
        return fan_from_json(_load(path))
    except MalformedFan as exc:
        raise InputError("%s: %s" % (path, exc)) from exc


def _curve_pipeline(X, box_radius, lambda_mode):
    A = curve_algebra(X, mode=lambda_mode)
    box = default_box(X, box_radius)
    P = build_presentation(A, box)
    return A, box, P


def _run_curve(path, options):
    X = _load_curve(path)
    A, _, P = _curve_pipeline(X, options["box_radius"],
                              options["lambda"])
    report = {
        "mode": "curve",
        "options": options,
        "picard": A.pic.describe(),
        "lattice_rank": A.lattice.rank,
        "presentation": P.to_json(),
    }
    return report, 0


def _run_toric(path, options):
    fan = _load_fan(path)
    data = toric_cox_data(fan)
    P = cox_presentation(fan, options["box_radius"])
    report = {
        "mode": "toric",
        "options": options,
        "class_group": data.class_group.describe(),
        "ray_degrees": [list(d) for d in data.degree_of_ray],
        "presentation": P.to_json(),
        "irrelevant_monomials": [list(e)
                                 for e in data.irrelevant_monomials],
        "irrelevant_polynomials": [str(p)
                                   for p in data.irrelevant_polynomials()],
    }
    return report, 0


def _run_verify(path, options):
    data = _load(path)
    checks = {}
    if isinstance(data, dict) and "special" in data:
        kind = "curve"
        X = _load_curve(path)
        A, box, P = _curve_pipeline(X, options["box_radius"],
                                    options["lambda"])
        checks["weight_monoid"] = _verdict_entry(
            weight_monoid_check(A, list(P.generators)))
        checks["pointed"] = _pointed_entry(is_pointed(A, box))
        elems = irrelevant_sections(A)
        checks["separatedness"] = _verdict_entry(
            separatedness_check(A, elems, levels=2), levels=2)
        polys = sections_as_polynomials(A, P, elems)
        checks["freely_graded"] = _verdict_entry(
            freely_graded_check(P, polys, options["power_bound"]),
            power_bound=options["power_bound"])
    elif isinstance(data, dict) and "rays" in data:
        kind = "toric"
        fan = _load_fan(path)
        group, degrees = class_group(fan)
        P = cox_presentation(fan, options["box_radius"])
        checks["weight_monoid"] = _verdict_entry(
            weight_monoid_check(group, degrees))
        irr = toric_cox_data(fan).irrelevant_polynomials()
        checks["freely_graded"] = _verdict_entry(
            freely_graded_check(P, irr, options["power_bound"]),
            power_bound=options["power_bound"])
    else:
        raise InputError(
            "%s: neither a curve (needs 'special') nor a fan "
            "(needs 'rays')" % path)
    failed = any(entry["verdict"] == "fail" for entry in checks.values())
    findings = {
        "not_separated": any(entry["verdict"] == "not_separated"
                             for entry in checks.values()),
        "inconclusive": sorted(name for name, entry in checks.items()
                               if entry["verdict"] == "inconclusive"),
    }
    report = {
        "mode": "verify",
        "input_kind": kind,
        "options": options,
        "checks": checks,
        "findings": findings,
        "all_passed": not failed,
    }
    return report, (2 if failed else 0)


def _run_crosscheck(path, options):
    X = _load_curve(path)
    result = uniqueness_crosscheck(X, radius=options["box_radius"])
    agreed = (result["hilbert_equal"] and result["iso_verified"]
              and result["witness_multiplicative"])
    report = {
        "mode": "crosscheck",
        "options": options,
        "result": dict(result),
        "agreed": agreed,
    }
    return report, (0 if agreed else 2)


_RUNNERS = {
    "curve": _run_curve,
    "toric": _run_toric,
    "verify": _run_verify,
    "crosscheck": _run_crosscheck,
}


def run(mode, path, box_radius=2, power_bound=4, lambda_mode="canonical"):
    """Produce the report dict and exit code for one invocation."""
    options = {"box_radius": box_radius, "power_bound": power_bound,
               "lambda": lambda_mode}
    return _RUNNERS[mode](path, options)


def _text_lines(prefix, value):
    if isinstance(value, dict):
        if not value:
            yield "%s: (empty)" % prefix
        for k in sorted(value):
            sub = "%s.%s" % (prefix, k) if prefix else str(k)
            yield from _text_lines(sub, value[k])
    elif isinstance(value, list):
        if not value:
            yield "%s: (none)" % prefix
        elif all(not isinstance(x, (dict, list)) for x in value):
            yield "%s: %s" % (prefix, " ".join(str(x) for x in value))
        else:
            for i, x in enumerate(value):
                yield from _text_lines("%s[%d]" % (prefix, i), x)
    else:
        yield "%s: %s" % (prefix, value)


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    return "\n".join(_text_lines("", report))


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the input-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _nonnegative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _build_parser():
    shared = _Parser(add_help=False)
    shared.add_argument("--box", type=_nonnegative, default=2,
                        metavar="RADIUS",
                        help="degree box radius (default 2)")
    shared.add_argument("--power-bound", type=_nonnegative, default=4,
                        dest="power_bound", metavar="N",
                        help="power search bound for the freely graded "
                             "check (default 4)")
    shared.add_argument("--lambda", choices=("canonical", "full"),
                        default="canonical", dest="lambda_mode",
                        help="lattice pipeline (default canonical)")
    shared.add_argument("--format", choices=("json", "text"),
                        default="json",
                        help="report format (default json)")
    parser = _Parser(prog="coxring",
                     description="Homogeneous coordinate rings of glued "
                                 "curves and toric varieties, exactly.")
    sub = parser.add_subparsers(dest="mode", required=True)
    sub.add_parser("curve", parents=[shared],
                   help="presentation of a glued curve")\
       .add_argument("file", help="curve JSON file")
    sub.add_parser("toric", parents=[shared],
                   help="polynomial ring of a fan")\
       .add_argument("file", help="fan JSON file")
    sub.add_parser("verify", parents=[shared],
                   help="verification checks on a curve or fan")\
       .add_argument("file", help="curve or fan JSON file")
    sub.add_parser("crosscheck", parents=[shared],
                   help="agreement of the two lattice pipelines")\
       .add_argument("file", help="curve JSON file")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        report, code = run(args.mode, args.file, box_radius=args.box,
                           power_bound=args.power_bound,
                           lambda_mode=args.lambda_mode)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    print(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
