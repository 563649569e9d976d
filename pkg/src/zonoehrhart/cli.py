"""JSON command-line interface.

Input documents are JSON files of the form

    {"generators": [[1,0],[0,1],[1,1]],
     "mode": "standard",
     "box_table": {"[1,2]": "3"}}

with mode optional (default "standard") and box_table optional; its keys are
JSON-encoded 1-based index lists and its values integers or "p/q" strings.
Supplied entries override the default lattice-count table entry by entry.

Results go to stdout as JSON with a stable key order; errors go to stderr as
JSON with a machine-readable "code".  Exit codes: 0 ok, 1 mathematical
precondition, 2 resource guard, 3 internal disagreement.  Integers beyond
2^53 in magnitude are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import eulerian, oracle, polycore, zonotope
from .errors import (EnumerationLimitError, InternalDisagreementError,
                     LatticeMathError, NotFullDimensionalError)
from .matroid import VectorConfiguration
from .polycore import HStarVector, Poly

_BIG = 2**53


class _CliError(Exception):
    def __init__(self, message, code="bad-input", exit_code=1):
        super().__init__(message)
        self.code = code
        self.exit_code = exit_code


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > _BIG else value
    if isinstance(value, Fraction):
        return _jsonable(int(value)) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, Poly):
        return [_jsonable(c) for c in value.coeffs]
    if isinstance(value, HStarVector):
        return [_jsonable(c) for c in value.h]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _parse_rational(raw):
    if isinstance(raw, bool):
        raise _CliError("booleans are not valid table values")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise _CliError(f"cannot parse rational {raw!r}: {exc}")
    raise _CliError(f"table values must be integers or 'p/q' strings, got {raw!r} "
                    "(floats are rejected to keep arithmetic exact)")


class _InputDocument:
    def __init__(self, config, mode, table, echo):
        self.config = config
        self.mode = mode
        self.table = table
        self.echo = echo

    @property
    def spec(self):
        return zonotope.ZonotopeSpec(self.config, self.mode)


def _load_input(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise _CliError(f"invalid JSON in {path}: {exc}")
    if not isinstance(doc, dict) or "generators" not in doc:
        raise _CliError("input document must be an object with a 'generators' key")
    generators = doc["generators"]
    if (not isinstance(generators, list)
            or any(not isinstance(v, list) for v in generators)
            or any(not isinstance(x, int) or isinstance(x, bool)
                   for v in generators for x in v)):
        raise _CliError("'generators' must be a list of integer vectors")
    mode = doc.get("mode", "standard")
    if mode not in zonotope.MODES:
        raise _CliError(f"mode must be one of {zonotope.MODES}, got {mode!r}")
    dim = doc.get("dim")
    if dim is None and not generators:
        raise _CliError("an empty generator list needs an explicit 'dim'")
    config = VectorConfiguration(generators, dim)
    table = None
    if "box_table" in doc:
        raw_table = doc["box_table"]
        if not isinstance(raw_table, dict):
            raise _CliError("'box_table' must be an object keyed by index lists")
        overrides = {}
        for key, raw in raw_table.items():
            try:
                indices = json.loads(key)
            except json.JSONDecodeError:
                raise _CliError(f"box_table key {key!r} is not a JSON index list")
            if (not isinstance(indices, list)
                    or any(not isinstance(i, int) or isinstance(i, bool) for i in indices)):
                raise _CliError(f"box_table key {key!r} is not a list of integers")
            overrides[tuple(indices)] = _parse_rational(raw)
        table = zonotope.default_box_table(config).override(overrides)
    echo = {"generators": [list(v) for v in config.vectors], "mode": mode}
    if "box_table" in doc:
        echo["box_table"] = doc["box_table"]
    return _InputDocument(config, mode, table, echo)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_ehrhart(args):
    inp = _load_input(args.input)
    doc = {"command": "ehrhart", "input": inp.echo, "method": args.method}
    formula = oracle_poly = None
    if args.method in ("formula", "both"):
        if inp.mode == "typeB":
            formula = zonotope.ehrhart_type_b_zonotope(inp.spec, inp.table)
        else:
            formula = zonotope.ehrhart_zonotope(inp.spec, inp.table)
    if args.method in ("oracle", "both"):
        if inp.table is not None:
            raise _CliError("the oracle counts lattice points and cannot honor a "
                            "custom box_table", code="bad-input")
        r = inp.config.full_rank
        counts = [oracle.count_lattice_points(inp.spec, n) for n in range(r + 2)]
        oracle_poly = oracle.interpolate_ehrhart(counts, r)
        doc["counts"] = counts
    doc["coefficients"] = formula if formula is not None else oracle_poly
    if args.method == "both":
        agree = formula == oracle_poly
        doc["agree"] = agree
        if not agree:
            raise InternalDisagreementError(
                f"formula gives {formula.coeffs}, oracle gives {oracle_poly.coeffs}")
    return doc


def _cmd_hstar(args):
    inp = _load_input(args.input)
    if inp.mode == "typeB":
        h = zonotope.hstar_type_b_zonotope(inp.spec, inp.table)
    else:
        h = zonotope.hstar_zonotope(inp.spec, inp.table)
    doc = {"command": "hstar", "input": inp.echo, "hstar": h, "degree": h.d}
    if args.diagnostics:
        config = inp.config
        table = inp.table if inp.table is not None else zonotope.default_box_table(config)
        bases = config.bases()
        diag = {
            "bases": [list(b) for b in bases],
            "internally_passive": [list(config.internally_passive(b)) for b in bases],
            "box_table": {json.dumps(list(s), separators=(",", ":")): table.value(s)
                          for s in config.independent_sets()},
        }
        if inp.mode == "standard":
            diag["eulerian_multiplicities"] = list(zonotope.express_in_eulerian_basis(h))
        doc["diagnostics"] = diag
    return doc


_PROPERTIES = ("real-rooted", "unimodal", "alt-inc", "palindromic", "reflexive", "cone")


def _cmd_check(args):
    doc = {"command": "check"}
    if args.hvector is not None:
        try:
            entries = [int(x) for x in args.hvector.split(",")]
        except ValueError:
            raise _CliError(f"cannot parse h-vector {args.hvector!r}")
        h = HStarVector(entries, args.degree)
        doc["source"] = "literal"
    else:
        if args.input is None:
            raise _CliError("check needs an input file or --hvector")
        inp = _load_input(args.input)
        if inp.mode == "typeB":
            h = zonotope.hstar_type_b_zonotope(inp.spec, inp.table)
        else:
            h = zonotope.hstar_zonotope(inp.spec, inp.table)
        doc["source"] = "input"
        doc["input"] = inp.echo
    doc["hstar"] = h
    doc["degree"] = h.d
    wanted = _PROPERTIES if args.properties is None else tuple(args.properties.split(","))
    for name in wanted:
        if name not in _PROPERTIES:
            raise _CliError(f"unknown property {name!r}; choose from {', '.join(_PROPERTIES)}")
    results = {}
    for name in wanted:
        results[name] = _check_property(name, h)
    doc["results"] = results
    return doc


def _check_property(name, h):
    if name == "real-rooted":
        p = h.poly()
        if not p:
            return {"value": False, "note": "zero polynomial"}
        return {"value": polycore.is_real_rooted(p)}
    if name == "unimodal":
        ok, peaks = polycore.is_unimodal(h)
        out = {"value": ok}
        if ok:
            out["peaks"] = sorted(peaks)
        else:
            out["witness_index"] = polycore.unimodality_violation(h)
        return out
    if name == "alt-inc":
        ok = polycore.is_alternatingly_increasing(h)
        out = {"value": ok}
        if not ok:
            i, j = polycore.alternating_increase_violation(h)
            out["violated"] = {"lhs_index": i, "rhs_index": j}
        return out
    if name == "palindromic":
        return {"value": polycore.is_palindromic(h)}
    if name == "reflexive":
        ehr = polycore.ehrhart_from_hstar(h)
        coords = zonotope.express_in_shifted_power_basis(ehr, h.d)
        return {"value": zonotope.is_reflexive_by_ehrhart(ehr, h.d),
                "shifted_power_coordinates": list(coords)}
    if name == "cone":
        coords = zonotope.express_in_eulerian_basis(h)
        return {"value": zonotope.is_in_zonotope_cone(h),
                "eulerian_coordinates": list(coords)}
    raise AssertionError(name)


def _cmd_eulerian(args):
    family, d = args.family, args.d
    if d < 1:
        raise _CliError("--d must be at least 1")
    method = args.method or ("recurrence" if family == "A" else "identity")
    if family == "A" and method == "identity":
        raise _CliError("--method identity applies to family B only")
    if family == "B" and method == "recurrence":
        raise _CliError("--method recurrence applies to family A only")
    if args.index is not None:
        if family == "A":
            p = (eulerian.a_j_polynomial_enumerate(d, args.index) if method == "enumerate"
                 else eulerian.a_j_polynomial(d, args.index))
        else:
            if method == "enumerate":
                p = eulerian.b_l_polynomial_enumerate(d, args.index)
            else:
                if not 1 <= args.index <= d:
                    raise _CliError(f"--index must lie in 1..{d}")
                p = eulerian.b_l_polynomial_via_a(d - 1, args.index - 1)
    else:
        if family == "A":
            p = (eulerian.eulerian_a_enumerate(d) if method == "enumerate"
                 else eulerian.eulerian_a(d))
        else:
            p = (eulerian.eulerian_b(d) if method == "enumerate"
                 else eulerian.eulerian_b_via_a(d))
    doc = {"command": "eulerian", "family": family, "d": d}
    if args.index is not None:
        doc["index"] = args.index
    doc["method"] = method
    doc["coefficients"] = p
    return doc


def _cmd_matroid(args):
    inp = _load_input(args.input)
    config = inp.config
    bases = config.bases()
    return {
        "command": "matroid",
        "input": inp.echo,
        "n": config.n,
        "dim": config.dim,
        "rank": config.full_rank,
        "independent_sets": [list(s) for s in config.independent_sets()],
        "bases": [list(b) for b in bases],
        "internally_passive": [list(config.internally_passive(b)) for b in bases],
        "coloop_free": config.is_coloop_free(),
    }


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message, code="bad-input")


def _build_parser():
    parser = _Parser(prog="zonoehrhart",
                     description="Exact Ehrhart/h* computations for lattice zonotopes")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial of a zonotope")
    p.add_argument("input", help="JSON input document")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    p.set_defaults(fn=_cmd_ehrhart)

    p = sub.add_parser("hstar", help="h*-vector of a zonotope")
    p.add_argument("input")
    p.add_argument("--diagnostics", action="store_true")
    p.set_defaults(fn=_cmd_hstar)

    p = sub.add_parser("check", help="coefficient-shape predicates")
    p.add_argument("input", nargs="?")
    p.add_argument("--hvector", help="literal h-vector, e.g. 1,4,1")
    p.add_argument("--degree", type=int, default=None, help="ambient degree for --hvector")
    p.add_argument("--properties", help=f"comma list from: {','.join(_PROPERTIES)}")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("eulerian", help="refined Eulerian polynomials")
    p.add_argument("--family", choices=("A", "B"), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--index", type=int, default=None)
    p.add_argument("--method", choices=("enumerate", "recurrence", "identity"), default=None)
    p.set_defaults(fn=_cmd_eulerian)

    p = sub.add_parser("matroid", help="independent sets, bases, internally passive sets")
    p.add_argument("input")
    p.set_defaults(fn=_cmd_matroid)
    return parser


def _emit_error(message, code, exit_code):
    sys.stderr.write(json.dumps({"error": str(message), "code": code}) + "\n")
    return exit_code


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        doc = args.fn(args)
    except _CliError as exc:
        return _emit_error(exc, exc.code, exc.exit_code)
    except NotFullDimensionalError as exc:
        return _emit_error(exc, "not-full-dimensional", 1)
    except LatticeMathError as exc:
        return _emit_error(exc, "math-precondition", 1)
    except EnumerationLimitError as exc:
        return _emit_error(exc, "resource-limit", 2)
    except InternalDisagreementError as exc:
        return _emit_error(exc, "disagreement", 3)
    sys.stdout.write(json.dumps(_jsonable(doc), indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
