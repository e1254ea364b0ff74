"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Sequence

from . import identities
from .exact import format_rational, parse_rational_list
from .oracle import verification_report
from .quadric import (
    Spectrum,
    coefficient_violations,
    expand_D,
    expand_S,
    format_pi_multiple,
    ratio_float,
    volume,
)
from .spectral import DEFAULT_ZERO_TOL, HermitianMatrix, classify, eigenvalues_hermitian

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
EXPAND_CAP = 3


class UsageError(Exception):
    pass


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


def _spectrum_from_args(args) -> Spectrum:
    try:
        if args.spectrum:
            with open(args.spectrum) as fh:
                return Spectrum.from_json(json.load(fh))
        return Spectrum(parse_rational_list(args.pos), parse_rational_list(args.neg), args.zeros)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_spectrum(args) -> int:
    spec = _spectrum_from_args(args)
    vol = volume(spec)
    if args.format == "json":
        _emit_json({"spectrum": spec.to_json(), **vol.to_json()})
    else:
        print(f"spectrum: p={spec.p} q={spec.q} r={spec.r} n={spec.n}")
        print(f"ratio: {format_rational(vol.ratio)}")
        print(f"volume: {vol.volume_text()}")
        print(f"decimal: {vol.decimal:.12g}")
    return EXIT_OK


def cmd_matrix(args) -> int:
    try:
        mat = HermitianMatrix.load(args.path)
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read matrix {args.path}: {exc}") from exc
    fs = classify(eigenvalues_hermitian(mat), args.zero_tol)
    ratio = ratio_float(fs.positives, fs.negatives) if fs.p else 0.0
    vol = ratio * math.pi ** fs.n / math.factorial(fs.n)
    if args.format == "json":
        _emit_json({**fs.to_json(), "n": fs.n, "ratio": ratio, "volume": vol})
    else:
        print("eigenvalues: " + ", ".join(f"{v:.12g}" for v in fs.eigenvalues))
        print(f"classification: p={fs.p} q={fs.q} r={fs.r} (zero tol {fs.zero_tolerance:g})")
        print(f"n: {fs.n}")
        print(f"ratio: {ratio:.15g}")
        print(f"volume: {vol:.15g}")
    return EXIT_OK


def cmd_verify(args) -> int:
    s_func = identities.faulty_S if args.inject_fault else identities.numer_S
    result = identities.run_suite(args.pmax, args.qmax, args.trials, args.seed, s_func=s_func)
    fams = result.families.values()
    if args.format == "json":
        _emit_json({"passed": result.passed,
                    "families": {f.name: {"checked": f.checked, "passed": f.passed,
                                          "counterexamples": f.failures} for f in fams},
                    "rows": result.rows})
    elif args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=["p", "q", "checked", "failed"])
        writer.writeheader()
        writer.writerows(result.rows)
    else:
        for f in fams:
            status = "PASS" if f.passed else "FAIL"
            print(f"{status} {f.name}: {f.checked} checks")
            for ce in f.failures:
                print(f"    counterexample p={ce['p']} q={ce['q']} x={ce['x']} y={ce['y']}: "
                      f"{ce['lhs']} != {ce['rhs']}")
        print("all identities hold" if result.passed else "identity failures found")
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_mc(args) -> int:
    spec = _spectrum_from_args(args)
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    report = verification_report(spec, args.samples, args.seed, args.threads,
                                 quad=not args.no_quad)
    if args.format == "json":
        _emit_json(report)
    else:
        mc = report["mc"]
        print(f"ratio (exact): {report['ratio_exact']}")
        print(f"mc fraction: {mc['fraction']:.6f} ± {mc['stderr']:.2g} "
              f"({mc['samples']} samples, seed {mc['seed']}, {mc['sigmas']:.2f} sigma)")
        if report["quad"] is not None:
            quad = report["quad"]
            print(f"quadrature volume: {quad['volume']:.12g} "
                  f"(exact {quad['volume_exact']:.12g}, rel err {quad['rel_err']:.2g})")
        print("agree" if report["agree"] else "DISAGREE")
    return EXIT_OK if report["agree"] else EXIT_FAIL


def cmd_expand(args) -> int:
    p, q = args.p, args.q
    if not (0 <= p <= EXPAND_CAP and 0 <= q <= EXPAND_CAP):
        raise UsageError(f"expand is limited to 0 <= p, q <= {EXPAND_CAP}")
    S, D = expand_S(p, q), expand_D(p, q)
    bad = coefficient_violations(S, D)
    if args.format == "json":
        def mono(poly):
            return [{"exponents": list(m.exponents), "coefficient": format_rational(m.coefficient)}
                    for m in poly.monomials()]
        _emit_json({"p": p, "q": q, "variables": list(S.variables),
                    "S": mono(S), "D": mono(D), "dominated": not bad})
    else:
        print(f"S = {S.format()}")
        print(f"D = {D.format()}")
        print(f"dominated: {'yes' if not bad else 'no'}")
    return EXIT_OK if not bad else EXIT_FAIL


def _add_spectrum_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--pos", default="", help="positive eigenvalues, e.g. 1,2/3")
    sp.add_argument("--neg", default="", help="magnitudes of negative eigenvalues")
    sp.add_argument("--zeros", type=int, default=0, help="number of zero eigenvalues")
    sp.add_argument("--spectrum", metavar="FILE", help="spectrum JSON instead of flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fsquadric",
        description="Exact Fubini-Study volumes of quadric domains in CP^n.")
    sub = parser.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("spectrum", help="exact volume from eigenvalues")
    _add_spectrum_flags(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("matrix", help="volume from a Hermitian matrix JSON file")
    sp.add_argument("path")
    sp.add_argument("--zero-tol", type=float, default=DEFAULT_ZERO_TOL)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("verify", help="run the exact identity suite")
    sp.add_argument("--pmax", type=int, default=3)
    sp.add_argument("--qmax", type=int, default=3)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mc", help="Monte Carlo (and quadrature) check of the exact ratio")
    _add_spectrum_flags(sp)
    sp.add_argument("--samples", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=None,
                    help="sampling threads (default: all cores); does not change results")
    sp.add_argument("--no-quad", action="store_true", help="skip the quadrature oracle")
    sp.add_argument("--format", choices=["text", "json"], default="json")
    sp.set_defaults(func=cmd_mc)

    sp = sub.add_parser("expand", help="symbolic S and D for small p, q")
    sp.add_argument("-p", "--p", type=int, required=True)
    sp.add_argument("-q", "--q", type=int, required=True)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_expand)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("pmax", "qmax", "trials"):
        if getattr(args, name, 0) < 0:
            parser.error(f"--{name} must be nonnegative")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
