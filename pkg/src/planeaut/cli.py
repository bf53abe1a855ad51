"""Command-line front end.

Every command is deterministic: identical input text yields identical
report text.  Exit codes: 0 for success / true verdicts, 1 for false or
obstruction verdicts (still a valid run), 2 for input errors.

Sequence-taking commands accept their data either as flags (--p, --prefix,
--tail, given twice for the two-sequence commands) or, when --p is omitted,
as a JSON manifest on stdin:

    {"prime": 2,
     "a": {"prefix": ["1", "1"], "tail": "zero"},
     "b": {"prefix": [], "tail": ["1", "0"]},
     "alpha": "1/2", "max_degree": 2, "levels": 3, "k0": 0,
     "theta": "(x1, 2*x2)"}
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cyclotomic import DomainMismatchError, RootOfUnity
from .endo import endo_order
from .prufer import CoeffSequence, verify_formula
from .linearize import (LinearizationProblem, minimal_linearizer_degree,
                        solve_linearization)
from .conjugacy import (differ_infinitely, necessary_condition, omega0_family,
                        verify_subgroup_conjugator)
from .parsing import (ParseError, parse_endo, parse_scalar, parse_triangular)
from . import conjugate as conjugate_endo, compose


def _parse_scalar_list(text: str):
    text = text.strip()
    if not text:
        return []
    return [parse_scalar(item) for item in text.split(",")]


def _sequence(prime: int, prefix: str, tail: str) -> CoeffSequence:
    tail = (tail or "zero").strip()
    block = None if tail == "zero" else _parse_scalar_list(tail)
    return CoeffSequence(prime, _parse_scalar_list(prefix or ""), block)


def _alpha(prime: int, text: str) -> RootOfUnity:
    return RootOfUnity.from_exponent(prime, Fraction(text))


def _load_manifest() -> dict:
    data = json.load(sys.stdin)
    if not isinstance(data, dict):
        raise ValueError("manifest must be a JSON object")
    return data


def _manifest_sequence(manifest: dict, key: str) -> CoeffSequence:
    record = dict(manifest[key])
    record.setdefault("prime", manifest["prime"])
    return CoeffSequence.from_manifest(record)


def _two_sequences(args) -> tuple[CoeffSequence, CoeffSequence, dict]:
    if args.p is None:
        manifest = _load_manifest()
        return (_manifest_sequence(manifest, "a"),
                _manifest_sequence(manifest, "b"), manifest)
    prefixes = args.prefix or ["", ""]
    tails = args.tail or ["zero", "zero"]
    if len(prefixes) != 2 or len(tails) != 2:
        raise ValueError("give --prefix and --tail twice (or not at all) "
                         "to describe the two sequences")
    return (_sequence(args.p, prefixes[0], tails[0]),
            _sequence(args.p, prefixes[1], tails[1]), {})


def _one_sequence(args) -> tuple[CoeffSequence, dict]:
    if args.p is None:
        manifest = _load_manifest()
        return _manifest_sequence(manifest, "a"), manifest
    return _sequence(args.p, args.prefix, args.tail), {}


# -- command bodies ---------------------------------------------------------

def _cmd_compose(args) -> int:
    first = parse_endo(args.first)
    second = parse_endo(args.second)
    print(compose(first, second))
    return 0


def _cmd_invert(args) -> int:
    theta = parse_triangular(args.endo)
    print(theta.inverse())
    return 0


def _cmd_order(args) -> int:
    psi = parse_endo(args.endo)
    k = endo_order(psi, args.max_order)
    if k is None:
        print(f"no order found up to {args.max_order}")
        return 1
    print(f"order = {k}")
    return 0


def _cmd_conjugate(args) -> int:
    psi = parse_endo(args.endo)
    theta = parse_triangular(args.theta)
    print(conjugate_endo(psi, theta))
    return 0


def _cmd_verify_formula(args) -> int:
    seq, manifest = _one_sequence(args)
    alpha_text = args.alpha if args.alpha is not None else manifest["alpha"]
    alpha = _alpha(seq.prime, alpha_text)
    if verify_formula(seq, alpha):
        print("OK: formula matches composition")
        return 0
    print("MISMATCH: closed form differs from composition")
    return 1


def _cmd_linearize(args) -> int:
    target = parse_endo(args.target)
    result = solve_linearization(LinearizationProblem(target, args.max_degree))
    if result.found:
        print("LINEARIZED")
        print(f"theta = {result.theta}")
        print(f"h = {result.h}")
        return 0
    print("OBSTRUCTION")
    print(f"degree = {result.obstruction_degree}")
    return 1


def _cmd_min_degree(args) -> int:
    seq, manifest = _one_sequence(args)
    alpha_text = args.alpha if args.alpha is not None else manifest["alpha"]
    bound = args.max_degree if args.max_degree is not None else manifest["max_degree"]
    alpha = _alpha(seq.prime, alpha_text)
    degree = minimal_linearizer_degree(seq, alpha, bound)
    if degree is None:
        print(f"no triangular-affine linearizer up to degree {bound}")
        return 1
    print(f"minimal degree = {degree}")
    return 0


def _cmd_nonconj_check(args) -> int:
    a, b, manifest = _two_sequences(args)
    k0 = args.k0 if args.k0 is not None else manifest.get("k0")
    report = necessary_condition(a, b, k0)
    if report.satisfiable:
        print("CONDITION SATISFIABLE")
        print(f"beta = {report.beta}")
        print(f"gamma = {report.gamma}")
        print(f"holds from k = {report.effective_from}")
        return 0
    offsets = ",".join(str(o) for o in report.offsets)
    print("NON-CONJUGATE CERTIFICATE")
    print(f"failing indices: preamble={report.preamble}, "
          f"period={report.period}, offsets=[{offsets}]")
    print(f"reason: {report.reason}")
    return 1


def _cmd_verify_conjugator(args) -> int:
    a, b, manifest = _two_sequences(args)
    theta_text = args.theta if args.theta is not None else manifest["theta"]
    levels = args.levels if args.levels is not None else manifest.get("levels", 3)
    theta = parse_triangular(theta_text)
    if verify_subgroup_conjugator(a, b, theta, levels):
        print(f"OK: conjugator intertwines levels 1..{levels}")
        return 0
    print(f"FAIL: conjugator does not intertwine levels 1..{levels}")
    return 1


def _cmd_omega_family(args) -> int:
    family = omega0_family(args.count)
    for i, seq in enumerate(family):
        bits = ",".join(str(b) for b in seq.tail)
        print(f"sequence {i}: tail=[{bits}]")
    pairs = [(i, j) for i in range(len(family)) for j in range(i + 1, len(family))]
    good = sum(1 for i, j in pairs if differ_infinitely(family[i], family[j]))
    print(f"pairwise infinite disagreement: {good}/{len(pairs)}")
    return 0 if good == len(pairs) else 1


# -- wiring -----------------------------------------------------------------

def _add_sequence_flags(sub, two: bool):
    if two:
        sub.add_argument("--prefix", action="append",
                         help="comma-separated scalars; give twice (a then b)")
        sub.add_argument("--tail", action="append",
                         help="'zero' or a comma-separated repeating block; give twice")
    else:
        sub.add_argument("--prefix", default="", help="comma-separated scalars")
        sub.add_argument("--tail", default="zero",
                         help="'zero' or a comma-separated repeating block")
    sub.add_argument("--p", type=int, default=None,
                     help="the prime (omit to read a JSON manifest from stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planeaut",
        description="Exact computations with plane polynomial automorphisms "
                    "over cyclotomic fields.")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("compose", help="product of two automorphisms "
                              "(first acts first)")
    sub.add_argument("first")
    sub.add_argument("second")
    sub.set_defaults(run=_cmd_compose)

    sub = commands.add_parser("invert", help="inverse of a triangular-affine map")
    sub.add_argument("endo")
    sub.set_defaults(run=_cmd_invert)

    sub = commands.add_parser("order", help="multiplicative order by iterated composition")
    sub.add_argument("endo")
    sub.add_argument("--max-order", type=int, default=256)
    sub.set_defaults(run=_cmd_order)

    sub = commands.add_parser("conjugate", help="theta^-1 * psi * theta")
    sub.add_argument("endo")
    sub.add_argument("--theta", required=True)
    sub.set_defaults(run=_cmd_conjugate)

    sub = commands.add_parser("verify-formula",
                              help="closed-form conjugate vs brute-force composition")
    _add_sequence_flags(sub, two=False)
    sub.add_argument("--alpha", help="root exponent j/p^n, e.g. 3/8 for z(8)^3")
    sub.set_defaults(run=_cmd_verify_formula)

    sub = commands.add_parser("linearize",
                              help="solve for a triangular-affine diagonalizer")
    sub.add_argument("--target", required=True)
    sub.add_argument("--max-degree", type=int, required=True)
    sub.set_defaults(run=_cmd_linearize)

    sub = commands.add_parser("min-degree",
                              help="smallest degree bound that linearizes")
    _add_sequence_flags(sub, two=False)
    sub.add_argument("--alpha")
    sub.add_argument("--max-degree", type=int, default=None)
    sub.set_defaults(run=_cmd_min_degree)

    sub = commands.add_parser("nonconj-check",
                              help="necessary condition for subgroup conjugacy")
    _add_sequence_flags(sub, two=True)
    sub.add_argument("--k0", type=int, default=None)
    sub.set_defaults(run=_cmd_nonconj_check)

    sub = commands.add_parser("verify-conjugator",
                              help="check a claimed conjugator level by level")
    _add_sequence_flags(sub, two=True)
    sub.add_argument("--theta")
    sub.add_argument("--levels", type=int, default=None)
    sub.set_defaults(run=_cmd_verify_conjugator)

    sub = commands.add_parser("omega-family",
                              help="pairwise infinitely-differing bit sequences")
    sub.add_argument("--count", type=int, required=True)
    sub.set_defaults(run=_cmd_omega_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (ParseError, DomainMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, ZeroDivisionError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
