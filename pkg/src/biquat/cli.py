"""Command-line surface.

Subcommands: square, classify, make-root, sample, convert, table,
lattice, verify-examples. Biquaternions travel as eight whitespace
separated numbers in canonical coefficient order, or as a JSON object
{"qr": [4 numbers], "qi": [4 numbers]}; numbers are printed with 17
significant digits by default so that output re-parses losslessly.

Exit codes: 0 success (or: is a root / hits found); 1 not-a-root or an
empty census; 2 usage error; 3 an internal theorem-violation finding.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .algebra import (
    COMPLEX_COMPONENTS,
    Biquaternion,
    PureUnit,
    biquat_mul,
    convert_view,
)
from .oracle import (
    LatticeSpec,
    format_terms,
    lattice_search,
    sample_root,
    term_table,
)
from .roots import (
    ImaginaryUnit,
    Nontrivial,
    NotRoot,
    TheoremViolationError,
    UnitPure,
    classify_root,
    make_nontrivial_root,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3


class ParseError(ValueError):
    """Malformed wire-format input; the message locates the bad token."""


def _parse_number(token: str, where: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"{where}: {token!r} is not a number") from None
    if not math.isfinite(value):
        raise ParseError(f"{where}: {token!r} is not finite")
    return value


def parse_biquaternion(text: str) -> Biquaternion:
    """Parse the 8-number text form or the {"qr": [...], "qi": [...]} form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict) or set(obj) != {"qr", "qi"}:
            raise ParseError('structured form requires exactly the keys "qr" and "qi"')
        coeffs = []
        for key in ("qr", "qi"):
            part = obj[key]
            if not isinstance(part, list) or len(part) != 4:
                raise ParseError(f'"{key}" must be a list of 4 numbers')
            for pos, entry in enumerate(part):
                if isinstance(entry, bool) or not isinstance(entry, (int, float)):
                    raise ParseError(f'"{key}"[{pos}]: {entry!r} is not a number')
                if not math.isfinite(entry):
                    raise ParseError(f'"{key}"[{pos}]: {entry!r} is not finite')
                coeffs.append(float(entry))
        return Biquaternion.from_coefficients(*coeffs)

    tokens = stripped.split()
    if len(tokens) != 8:
        raise ParseError(f"expected 8 numbers, got {len(tokens)}")
    values = [_parse_number(tok, f"token {pos + 1}") for pos, tok in enumerate(tokens)]
    return Biquaternion.from_coefficients(*values)


def parse_pure_unit(text: str, name: str) -> PureUnit:
    tokens = text.strip().split()
    if len(tokens) != 3:
        raise ParseError(f"{name}: expected 3 numbers, got {len(tokens)}")
    values = [_parse_number(tok, f"{name} token {pos + 1}")
              for pos, tok in enumerate(tokens)]
    try:
        return PureUnit(*values)
    except ValueError as exc:
        raise ParseError(f"{name}: {exc}") from None


def _fmt(value: float, digits: int) -> str:
    return format(value, f".{digits}g")


def format_coefficients(q: Biquaternion, digits: int = 17) -> str:
    return " ".join(_fmt(v, digits) for v in q.coefficients())


def _coeff_lists(q: Biquaternion) -> dict:
    c = q.coefficients()
    return {"qr": list(c[:4]), "qi": list(c[4:])}


def _pure_tuple(u: PureUnit, digits: int) -> str:
    return f"({_fmt(u.x, digits)} {_fmt(u.y, digits)} {_fmt(u.z, digits)})"


def _inputs(args) -> list[str]:
    if args.biquaternion:
        return list(args.biquaternion)
    return [line for line in (raw.strip() for raw in sys.stdin) if line]


def _cmd_square(args) -> int:
    for text in _inputs(args):
        q = parse_biquaternion(text)
        sq = biquat_mul(q, q)
        if args.json:
            print(json.dumps(_coeff_lists(sq)))
        else:
            print(format_coefficients(sq, args.digits))
    return EXIT_OK


def _classification_fields(result, digits: int) -> tuple[str, dict]:
    if isinstance(result, Nontrivial):
        text = (f"nontrivial mu={_pure_tuple(result.mu, digits)} "
                f"nu={_pure_tuple(result.nu, digits)} t={_fmt(result.t, digits)}")
        data = {"family": "nontrivial",
                "mu": [result.mu.x, result.mu.y, result.mu.z],
                "nu": [result.nu.x, result.nu.y, result.nu.z],
                "t": result.t}
    elif isinstance(result, UnitPure):
        text = f"unit-pure mu={_pure_tuple(result.mu, digits)}"
        data = {"family": "unit-pure",
                "mu": [result.mu.x, result.mu.y, result.mu.z]}
    elif isinstance(result, ImaginaryUnit):
        text = f"imaginary-unit sign={result.sign:+d}"
        data = {"family": "imaginary-unit", "sign": result.sign}
    else:
        text = "not-a-root"
        data = {"family": "not-a-root"}
    return text, data


def _cmd_classify(args) -> int:
    code = EXIT_OK
    for text in _inputs(args):
        q = parse_biquaternion(text)
        try:
            result = classify_root(q, args.tol)
        except TheoremViolationError as exc:
            if args.json:
                print(json.dumps({"family": "theorem-violation",
                                  "residual": exc.residual,
                                  "failures": list(exc.failures)}))
            else:
                print(f"theorem-violation residual={_fmt(exc.residual, args.digits)} "
                      f"({'; '.join(exc.failures)})")
            code = max(code, EXIT_VIOLATION)
            continue
        residual = (result.residual if isinstance(result, NotRoot)
                    else (biquat_mul(q, q) + 1.0).coefficient_norm())
        line, data = _classification_fields(result, args.digits)
        if args.json:
            data["residual"] = residual
            print(json.dumps(data))
        else:
            print(f"{line} residual={_fmt(residual, args.digits)}")
        if isinstance(result, NotRoot):
            code = max(code, EXIT_NEGATIVE)
    return code


def _cmd_make_root(args) -> int:
    mu = parse_pure_unit(args.mu, "mu")
    nu = parse_pure_unit(args.nu, "nu")
    root = make_nontrivial_root(mu, nu, args.t, perp_tol=args.tol)
    if args.json:
        print(json.dumps(_coeff_lists(root)))
    else:
        print(format_coefficients(root, args.digits))
    return EXIT_OK


def _cmd_sample(args) -> int:
    rng = np.random.default_rng(args.seed)
    for _ in range(args.count):
        root = sample_root(rng, args.t_max)
        if args.json:
            print(json.dumps(_coeff_lists(root)))
        else:
            print(format_coefficients(root, args.digits))
    return EXIT_OK


def _cmd_convert(args) -> int:
    for text in _inputs(args):
        view = convert_view(parse_biquaternion(text), COMPLEX_COMPONENTS)
        if args.json:
            print(json.dumps({name: [comp.re, comp.im]
                              for name, comp in
                              (("w", view.w), ("x", view.x), ("y", view.y), ("z", view.z))}))
        else:
            d = args.digits
            print(" ".join(
                f"{name}={_fmt(comp.re, d)}{'-' if comp.im < 0 else '+'}{_fmt(abs(comp.im), d)}I"
                for name, comp in
                (("w", view.w), ("x", view.x), ("y", view.y), ("z", view.z))))
    return EXIT_OK


def _cmd_table(args) -> int:
    texts = _inputs(args)
    if not texts:
        raise ParseError("table needs at least one summand")
    parts = [parse_biquaternion(t) for t in texts]
    table = term_table(parts)
    if args.json:
        print(json.dumps({
            "parts": [list(p.coefficients()) for p in table.parts],
            "entries": [[list(e.coefficients()) for e in row] for row in table.entries],
            "total": list(table.total.coefficients()),
        }))
    else:
        print(table.render(args.digits))
        print(f"total: {format_terms(table.total, args.digits)}")
    return EXIT_OK


def _cmd_lattice(args) -> int:
    spec = LatticeSpec(args.bound, args.step,
                       parse_pure_unit(args.mu, "mu"), parse_pure_unit(args.nu, "nu"))
    report = lattice_search(spec, args.tol)
    if args.json:
        print(json.dumps({
            "scanned": report.scanned,
            "tolerance": report.tolerance,
            "hits": [{"a": h.a, "b": h.b, "c": h.c, "d": h.d,
                      "residual": h.residual,
                      "family": _classification_fields(h.classification, args.digits)[1]["family"]}
                     for h in report.hits],
            "violations": list(report.violations),
        }))
    else:
        print(f"scanned {report.scanned} points at tolerance "
              f"{_fmt(report.tolerance, args.digits)}: {len(report.hits)} hits, "
              f"{len(report.violations)} violations")
        for h in report.hits:
            family = _classification_fields(h.classification, args.digits)[1]["family"]
            print(f"hit a={_fmt(h.a, args.digits)} b={_fmt(h.b, args.digits)} "
                  f"c={_fmt(h.c, args.digits)} d={_fmt(h.d, args.digits)} "
                  f"residual={_fmt(h.residual, args.digits)} family={family}")
        for message in report.violations:
            print(f"violation: {message}")
    if report.violations:
        return EXIT_VIOLATION
    return EXIT_OK if report.hits else EXIT_NEGATIVE


# The three worked examples, end to end through parse -> compute -> format.
# Coefficient strings are exact double literals of the constructions
# sqrt(2)i + jI, (i+j+k) + (j-k)I, and 3*(j-k)/sqrt(2) + 2*sqrt(2)*(i+j+k)/sqrt(3)*I.
_EXAMPLE1_INPUT = "0 1.4142135623730951 0 0 0 0 1 0"
_EXAMPLE2_INPUT = "0 1 1 1 0 0 1 -1"
_EXAMPLE2_PARTS = (
    "0 1 0 0 0 0 0 0",    # i
    "0 0 1 0 0 0 0 0",    # j
    "0 0 0 1 0 0 0 0",    # k
    "0 0 0 0 0 0 1 0",    # jI
    "0 0 0 0 0 0 0 -1",   # -kI
)
_EXAMPLE2_TABLE = (
    ("-1", "k", "-j", "kI", "jI"),
    ("-k", "-1", "i", "-I", "-iI"),
    ("j", "-i", "-1", "-iI", "I"),
    ("-kI", "-I", "iI", "1", "i"),
    ("-jI", "iI", "I", "-i", "1"),
)
_EXAMPLE3_PARTS = (
    "0 0 2.1213203435596424 -2.1213203435596424 0 0 0 0",
    "0 0 0 0 0 1.6329931618554523 1.6329931618554523 1.6329931618554523",
)
_EXAMPLE3_INPUT = ("0 0 2.1213203435596424 -2.1213203435596424 "
                   "0 1.6329931618554523 1.6329931618554523 1.6329931618554523")

_UNIT_INDEX = {"1": 0, "i": 1, "j": 2, "k": 3, "I": 4, "iI": 5, "jI": 6, "kI": 7}


def _unit_biquaternion(symbol: str) -> Biquaternion:
    sign = 1.0
    if symbol.startswith("-"):
        sign, symbol = -1.0, symbol[1:]
    coeffs = [0.0] * 8
    coeffs[_UNIT_INDEX[symbol]] = sign
    return Biquaternion.from_coefficients(*coeffs)


def _max_error(got: Biquaternion, expected: Biquaternion) -> float:
    return max(abs(g - e) for g, e in zip(got.coefficients(), expected.coefficients()))


def _square_through_wire(text: str) -> Biquaternion:
    # parse -> square -> format -> re-parse; 17 digits keeps the wire lossless
    q = parse_biquaternion(text)
    return parse_biquaternion(format_coefficients(biquat_mul(q, q), 17))


def run_examples(tol: float = 1e-12) -> list[tuple[str, bool, float]]:
    """Run the three worked examples; returns (description, passed, max error)."""
    minus_one = Biquaternion.from_scalar(-1.0)
    results = []

    err = _max_error(_square_through_wire(_EXAMPLE1_INPUT), minus_one)
    results.append(("square of sqrt(2)i + jI is -1", err <= tol, err))

    err = _max_error(_square_through_wire(_EXAMPLE2_INPUT), minus_one)
    table = term_table([parse_biquaternion(t) for t in _EXAMPLE2_PARTS])
    for row, expected_row in zip(table.entries, _EXAMPLE2_TABLE):
        for entry, symbol in zip(row, expected_row):
            err = max(err, _max_error(entry, _unit_biquaternion(symbol)))
    err = max(err, _max_error(table.total, minus_one))
    results.append(("square of (i+j+k) + (j-k)I is -1 and its 5x5 term table "
                    "matches entry for entry with total -1", err <= tol, err))

    err = _max_error(_square_through_wire(_EXAMPLE3_INPUT), minus_one)
    table = term_table([parse_biquaternion(t) for t in _EXAMPLE3_PARTS])
    err = max(err, _max_error(table.entries[0][0], Biquaternion.from_scalar(-9.0)))
    err = max(err, _max_error(table.entries[1][1], Biquaternion.from_scalar(8.0)))
    err = max(err, _max_error(table.total, minus_one))
    results.append(("square of 3nu + 2sqrt(2)mu I is -1 with diagonal terms "
                    "-9 and +8", err <= tol, err))
    return results


def _cmd_verify_examples(args) -> int:
    results = run_examples()
    if args.json:
        print(json.dumps({"results": [
            {"example": n, "description": desc, "passed": ok, "max_error": err}
            for n, (desc, ok, err) in enumerate(results, start=1)]}))
    else:
        for n, (desc, ok, err) in enumerate(results, start=1):
            status = "PASS" if ok else "FAIL"
            print(f"{status} example {n}: {desc} (max error {err:.2e})")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_NEGATIVE


def _add_common(sub, *, tol=False, digits=True):
    if tol:
        sub.add_argument("--tol", type=float, default=1e-9,
                         help="absolute tolerance (default 1e-9)")
    if digits:
        sub.add_argument("--digits", type=int, default=17,
                         help="significant digits in output (default 17)")
    sub.add_argument("--json", action="store_true",
                     help="structured output mirroring the text output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biquat",
        description="Biquaternion square roots of -1: construct, classify, verify.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("square", help="square a biquaternion")
    sub.add_argument("biquaternion", nargs="*",
                     help="8 numbers or JSON; omitted: read lines from stdin")
    _add_common(sub)
    sub.set_defaults(func=_cmd_square)

    sub = subs.add_parser("classify", help="classify against the root families")
    sub.add_argument("biquaternion", nargs="*",
                     help="8 numbers or JSON; omitted: read lines from stdin")
    _add_common(sub, tol=True)
    sub.set_defaults(func=_cmd_classify)

    sub = subs.add_parser("make-root", help="construct cosh(t) mu + sinh(t) nu I")
    sub.add_argument("--mu", required=True, help="3 numbers, unit length")
    sub.add_argument("--nu", required=True,
                     help="3 numbers, unit length, perpendicular to mu")
    sub.add_argument("--t", type=float, required=True, help="hyperbolic parameter")
    _add_common(sub, tol=True)
    sub.set_defaults(func=_cmd_make_root)

    sub = subs.add_parser("sample", help="sample random nontrivial roots")
    sub.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    sub.add_argument("--count", type=int, default=1, help="number of roots")
    sub.add_argument("--t-max", type=float, default=5.0,
                     help="t drawn uniformly from (0, t-max] (default 5)")
    _add_common(sub)
    sub.set_defaults(func=_cmd_sample)

    sub = subs.add_parser("convert",
                          help="re-print in the complex-components labeling")
    sub.add_argument("biquaternion", nargs="*",
                     help="8 numbers or JSON; omitted: read lines from stdin")
    _add_common(sub)
    sub.set_defaults(func=_cmd_convert)

    sub = subs.add_parser("table", help="pairwise product table of summands")
    sub.add_argument("biquaternion", nargs="*", metavar="summand",
                     help="each summand as 8 numbers or JSON; omitted: stdin lines")
    _add_common(sub)
    sub.set_defaults(func=_cmd_table)

    sub = subs.add_parser("lattice",
                          help="census of roots over an (a, b, c, d) grid")
    sub.add_argument("--mu", required=True, help="3 numbers, unit length")
    sub.add_argument("--nu", required=True, help="3 numbers, unit length")
    sub.add_argument("--bound", type=float, default=2.0,
                     help="coefficients range over [-bound, bound] (default 2)")
    sub.add_argument("--step", type=float, default=0.25,
                     help="grid spacing (default 0.25)")
    _add_common(sub, tol=True)
    sub.set_defaults(func=_cmd_lattice)

    sub = subs.add_parser("verify-examples",
                          help="run the three worked examples end to end")
    _add_common(sub)
    sub.set_defaults(func=_cmd_verify_examples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
