"""Command-line surface: catalog inspection, formula emission, numeric
chi_q evaluation, and the self-verification suite.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
All numbers are emitted as exact rational strings; series round-trip
losslessly through the JSON record schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .charclasses import RootForm
from .fibrations import (
    FAMILIES,
    DEFAULT_QMAX,
    DEFAULT_WMAX,
    FibrationSpec,
    catalog_spec,
    closed_form_q,
    closed_form_text,
    derived_q,
    p_polynomial,
    p_table_reference,
)
from .genseries import BaseSpec, chi_series, integrate
from .pushforward import BundleSpec
from .series import WSeries, mono_from_dict, mono_weight
from .verify import run_suites


class UsageError(ValueError):
    """Bad arguments, unknown family, or a malformed input file."""


# ---------------------------------------------------------------------------
# JSON record schema for series


@dataclass
class OutputRecord:
    """One homogeneous (t-degree, y-degree) block of a series."""

    t_deg: int
    y_deg: int
    terms: list  # [{"exps": {var: exp}, "coeff": "num/den"}], sorted

    def to_json(self):
        return {"t_deg": self.t_deg, "y_deg": self.y_deg, "terms": self.terms}


def series_to_records(series):
    blocks = {}
    for (mono, q), coeff in series.sorted_items():
        blocks.setdefault((mono_weight(mono), q), []).append(
            {"exps": {v: e for v, e in mono}, "coeff": _frac_str(coeff)}
        )
    return [
        OutputRecord(k, q, terms) for (k, q), terms in sorted(blocks.items())
    ]


def emit_series_json(series):
    return {
        "wmax": series.wmax,
        "qmax": series.qmax,
        "records": [r.to_json() for r in series_to_records(series)],
    }


def parse_series_json(data):
    try:
        wmax, qmax = int(data["wmax"]), int(data["qmax"])
        terms = {}
        for record in data["records"]:
            q = int(record["y_deg"])
            for term in record["terms"]:
                mono = mono_from_dict({v: int(e) for v, e in term["exps"].items()})
                terms[(mono, q)] = Fraction(term["coeff"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("malformed series JSON: %s" % exc)
    return WSeries.from_terms(terms, wmax, qmax)


def _frac_str(value):
    return str(value)


# ---------------------------------------------------------------------------
# input files


def load_fibration_spec(path):
    """{"name": str, "bundle": [int], "n_roots": [[a,b]], "f_roots"?: [[a,b]]}"""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError("cannot read spec file %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise UsageError("spec file %s is not valid JSON: %s" % (path, exc))
    for field_name in ("name", "bundle", "n_roots"):
        if field_name not in data:
            raise UsageError("spec file %s: missing field %r" % (path, field_name))
    try:
        bundle = BundleSpec(tuple(int(m) for m in data["bundle"]))
        n_roots = tuple(RootForm(int(a), int(b)) for a, b in data["n_roots"])
        f_roots = None
        if "f_roots" in data:
            f_roots = tuple(RootForm(int(a), int(b)) for a, b in data["f_roots"])
        return FibrationSpec(
            name=str(data["name"]), bundle=bundle, n_roots=n_roots, f_roots=f_roots
        )
    except (TypeError, ValueError) as exc:
        raise UsageError("spec file %s: %s" % (path, exc))


def load_base_spec(path):
    """{"dim": d, "monomials": [{"exps": {...}, "value": "num/den"}]}"""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError("cannot read base file %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise UsageError("base file %s is not valid JSON: %s" % (path, exc))
    try:
        dim = int(data["dim"])
        table = {}
        for entry in data["monomials"]:
            mono = mono_from_dict({v: int(e) for v, e in entry["exps"].items()})
            table[mono] = Fraction(entry["value"])
        return BaseSpec(dim=dim, mode="table", table=table)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("base file %s: %s" % (path, exc))


def parse_base_arg(text):
    """pd:<d>:<n> means P^d with L = O(n)."""
    parts = text.split(":")
    if len(parts) != 3 or parts[0] != "pd":
        raise UsageError("base %r not understood (expected pd:<d>:<n>)" % text)
    try:
        d, n = int(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError("base %r not understood (expected integers)" % text)
    if d < 0:
        raise UsageError("base dimension must be >= 0")
    return BaseSpec.projective_space(d, n)


def resolve_family_or_spec(token):
    """A catalog family name, or a path to a spec JSON file."""
    if token in FAMILIES:
        return token
    import os

    if os.path.exists(token):
        return load_fibration_spec(token)
    raise UsageError(
        "unknown family %r (expected one of %s, or a spec file path)"
        % (token, "/".join(FAMILIES))
    )


# ---------------------------------------------------------------------------
# commands


def cmd_q(args):
    target = resolve_family_or_spec(args.family)
    if args.closed:
        if not isinstance(target, str):
            raise UsageError("--closed is only available for catalog families")
        print("Q(%s) = %s   [U = exp(-L)]" % (target, closed_form_text(target)))
        return 0
    if isinstance(target, str):
        series = closed_form_q(target, args.wmax, args.qmax)
        label = target
    else:
        series = derived_q(target, args.wmax, args.qmax)
        label = target.name
    if args.format == "json":
        print(json.dumps(emit_series_json(series), indent=2, sort_keys=True))
    elif args.format == "latex":
        print(series.to_latex())
    else:
        print("Q(%s) expanded to weight %d, y-degree %d:" % (label, args.wmax, args.qmax))
        for q in range(0, args.qmax + 1):
            part = series.y_slice(q)
            if part.is_zero() and q > args.wmax + 1:
                continue
            print("  y^%d: %s" % (q, part.to_text()))
    return 0


def cmd_ptable(args):
    if args.family not in FAMILIES:
        raise UsageError("unknown family %r" % args.family)
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    mismatches = []
    for n in range(0, args.nmax + 1):
        poly = p_polynomial(args.family, n)
        print("P%d = %s" % (n, poly.to_text()))
        if args.check and poly != p_table_reference(args.family, n):
            mismatches.append(n)
    if args.check:
        if mismatches:
            print("check: FAIL at n = %s" % mismatches)
            return 1
        print("check: PASS (n <= %d)" % args.nmax)
    return 0


def cmd_chi(args):
    target = resolve_family_or_spec(args.family)
    if args.base_file:
        base = load_base_spec(args.base_file)
    elif args.base:
        base = parse_base_arg(args.base)
    else:
        raise UsageError("a base is required (--base pd:<d>:<n> or --base-file)")
    d = base.dim
    if args.q == "all":
        qs = list(range(0, d + 2))
    else:
        try:
            qs = [int(args.q)]
        except ValueError:
            raise UsageError("--q expects an integer or 'all'")
        if not (0 <= qs[0] <= d + 1):
            raise UsageError(
                "q=%d exceeds dim Y = %d for this base" % (qs[0], d + 1)
            )
    series = chi_series(target, d, d + 2)
    values = []
    for q in qs:
        cls = series.coeff(d, q)
        if args.show_class:
            print("class for q=%d (weight %d): %s" % (q, d, cls.to_text()))
        value = integrate(cls, base)
        values.append(value)
        print("chi_%d = %s" % (q, value))
    if args.q == "all":
        alternating = sum(v * Fraction((-1) ** i) for i, v in enumerate(values))
        print("alternating sum = %s" % alternating)
    return 0


def cmd_verify(args):
    ok, results = run_suites(args.family, args.wmax, args.qmax)
    failed = 0
    for name, fails in results:
        if fails:
            failed += 1
            print("%s: FAIL" % name)
            for line in fails[:5]:
                print("  %s" % line)
            if len(fails) > 5:
                print("  ... and %d more" % (len(fails) - 5))
        else:
            print("%s: PASS" % name)
    if ok:
        print("PASS (%d suites)" % len(results))
        return 0
    print("FAIL (%d of %d suites)" % (failed, len(results)))
    return 1


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ellgenus",
        description="Exact chi_y-genus computations for elliptic fibrations "
        "(D5/E6/E7/E8 and custom complete-intersection families).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_q = sub.add_parser("q", help="emit the genus factor Q of a family")
    p_q.add_argument("family", help="catalog family (D5/E6/E7/E8) or spec file")
    p_q.add_argument("--wmax", type=int, default=DEFAULT_WMAX)
    p_q.add_argument("--qmax", type=int, default=DEFAULT_QMAX)
    p_q.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_q.add_argument(
        "--closed", action="store_true", help="print the unexpanded closed form"
    )
    p_q.set_defaults(func=cmd_q)

    p_pt = sub.add_parser("ptable", help="print the P_n polynomials in U")
    p_pt.add_argument("family")
    p_pt.add_argument("--nmax", type=int, default=6)
    p_pt.add_argument(
        "--check", action="store_true", help="compare against the tabulated forms"
    )
    p_pt.set_defaults(func=cmd_ptable)

    p_chi = sub.add_parser("chi", help="evaluate chi_q over a concrete base")
    p_chi.add_argument("family", help="catalog family or spec file")
    p_chi.add_argument("--base", help="pd:<d>:<n> for P^d with L = O(n)")
    p_chi.add_argument("--base-file", help="JSON intersection table")
    p_chi.add_argument("--q", default="all", help="a single q, or 'all'")
    p_chi.add_argument(
        "--class",
        dest="show_class",
        action="store_true",
        help="also print the symbolic integrand class",
    )
    p_chi.set_defaults(func=cmd_chi)

    p_v = sub.add_parser("verify", help="run the self-verification suites")
    p_v.add_argument("--family", default="all", choices=("all",) + FAMILIES)
    p_v.add_argument("--wmax", type=int, default=DEFAULT_WMAX)
    p_v.add_argument("--qmax", type=int, default=DEFAULT_QMAX)
    p_v.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other exits
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (KeyError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
