"""Command-line front end.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
3 an undetermined result under ``--strict``.
"""

import argparse
import json
import sys

from . import __version__
from .cyclo import (
    AbelianField,
    CycloElement,
    GaloisAutomorphism,
    NotInField,
    cos_element,
    format_element,
    generated_subgroup,
    sin_element,
    zeta,
)
from .expr import EvaluationError, ParseError, parse_element, evaluate, to_text
from .families import NotPrime, TooSmall, gamma_p, verify_elkies, verify_gamma_p
from .galois import (
    NORMALITY_NOTE,
    AlgebraInvariantData,
    conjugate_invariants,
    same_algebra,
    verify_period_invariance,
)
from .invariants import InconsistentTrustedData, ParityViolation, fuchsian_check, period_set, ramification
from .places import splitting_type
from .quat import QuaternionAlgebra

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDETERMINED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- inputs -------------------------------------------------------------------


def parse_field(spec):
    """Field plus the names usable in element expressions."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "Qcos":
            n = int(arg)
            k = AbelianField.real_cyclotomic(n)
            names = {"c": 2 * cos_element(1, n)}
        elif kind == "Qzeta+":
            n = int(arg)
            k = AbelianField.real_cyclotomic(n)
            names = {"c": 2 * cos_element(1, n)}
        elif kind == "Qsin":
            p = int(arg)
            s = sin_element(1, p)
            k = AbelianField.generated_by(s)
            names = {"s": s, "c": 2 * cos_element(1, p), "g": 2 * cos_element(1, 4 * p)}
        elif kind == "custom":
            n_text, _, gens = arg.partition(";")
            n = int(n_text)
            hs = [int(h) for h in gens.split(",") if h.strip()]
            k = AbelianField(n, generated_subgroup(hs or [1 % n], n))
            names = {}
        else:
            raise UsageError(f"unknown field kind {kind!r} (use Qcos:n, Qsin:p, Qzeta+:n, custom:N;h1,...)")
    except ValueError as exc:
        raise UsageError(f"bad field spec {spec!r}: {exc}") from exc
    if k.n < 1:
        raise UsageError(f"bad field spec {spec!r}")
    names["zeta"] = zeta(k.n) if k.n > 1 else CycloElement.rational(1)
    return k, names


def parse_value(text, k, names):
    try:
        x = evaluate(parse_element(text), names)
        return k.element(x)
    except ParseError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from exc
    except EvaluationError as exc:
        raise UsageError(f"cannot evaluate {text!r}: {exc}") from exc
    except NotInField as exc:
        raise UsageError(f"{text!r} does not lie in the field") from exc


def parse_int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}") from exc


def parse_range(text):
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return range(int(lo), int(hi) + 1)
        return parse_int_list(text)
    except ValueError as exc:
        raise UsageError(f"expected A..B or a list, got {text!r}") from exc


def parse_trust(text, k):
    if text is None:
        return None
    if text == "empty":
        return frozenset()
    places = set()
    for p in parse_int_list(text):
        places |= set(splitting_type(k, p).places)
    return frozenset(places)


def _algebra(args):
    k, names = parse_field(args.field)
    a = parse_value(args.a, k, names)
    b = parse_value(args.b, k, names)
    try:
        A = QuaternionAlgebra(k, a, b, args.convention)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        ram = ramification(A, parse_trust(args.trust_ramf, k))
    except InconsistentTrustedData as exc:
        raise UsageError(f"--trust-ramf: {exc}") from exc
    except ParityViolation as exc:
        raise UsageError(f"--trust-ramf: {exc}") from exc
    return k, A, ram


def _algebra_echo(args, A):
    return {"a": to_text(parse_element(args.a)), "b": to_text(parse_element(args.b)),
            "a_value": format_element(A.a), "b_value": format_element(A.b)}


# -- commands -----------------------------------------------------------------
# each returns (results, status) with status in pass / fail / undetermined


def cmd_field(args):
    k, names = parse_field(args.spec)
    return {"names": {n: format_element(v) for n, v in sorted(names.items())}}, "pass", k


def cmd_split(args):
    k, _ = parse_field(args.field)
    rows = []
    for p in parse_range(args.primes):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            continue
        e, f, g, places = splitting_type(k, p)
        rows.append({"p": p, "e": e, "f": f, "g": g, "places": [v.label for v in places]})
    return {"splitting": rows}, "pass", k


def cmd_ram(args):
    k, A, ram = _algebra(args)
    out = {"algebra": _algebra_echo(args, A), "ramification": ram.as_dict(),
           "fuchsian": fuchsian_check(A, ram.ram_infinite),
           "trusted": args.trust_ramf}
    return out, "pass" if ram.complete else "undetermined", k


def cmd_periods(args):
    k, A, ram = _algebra(args)
    ps = period_set(A, ram, bound=args.max)
    out = {"algebra": _algebra_echo(args, A), "ramification": ram.as_dict(),
           "periods": ps.as_dict(), "trusted": args.trust_ramf}
    return out, "undetermined" if ps.undetermined else "pass", k


def cmd_galois(args):
    k, A, ram = _algebra(args)
    try:
        sigma = GaloisAutomorphism(k.n, args.sigma)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    inv = verify_period_invariance(A, ram, sigma)
    out = {"algebra": _algebra_echo(args, A), "ramification": ram.as_dict(),
           "invariance": inv, "trusted": args.trust_ramf}
    if ram.complete:
        D = AlgebraInvariantData.from_ramification(ram)
        Ds = conjugate_invariants(D, sigma)
        out["conjugate"] = Ds.as_dict()
        out["isomorphic_to_conjugate"] = same_algebra(D, Ds)
    status = "pass" if inv["periods_equal"] and inv["odd_equations_equal"] else "fail"
    if status == "pass" and not ram.complete:
        status = "undetermined"
    return out, status, k


def cmd_verify(args):
    try:
        if args.family == "gamma-p":
            qs = parse_int_list(args.q_list) if args.q_list else [5, 7, 11, 13]
            rep = verify_gamma_p(args.p, qs)
            k = gamma_p(args.p).field
        else:
            rep = verify_elkies(args.prime_bound)
            k = AbelianField.real_cyclotomic(7)
    except (NotPrime, TooSmall, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    out = rep.as_dict()
    return out, "pass" if rep.passed else "fail", k


# -- output -------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--quiet", action="store_true", help="print nothing, only set the exit code")
    common.add_argument("--strict", action="store_true", help="exit 3 on undetermined results")

    ap = _Parser(prog="arithfuchs", description="Invariants of quaternion algebras over abelian fields.")
    ap.add_argument("--version", action="version", version=f"arithfuchs {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("field", parents=[common], help="describe a field")
    p.add_argument("spec")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("split", parents=[common], help="splitting of rational primes")
    p.add_argument("--field", required=True)
    p.add_argument("--primes", default="2..50", help="A..B or a comma list")
    p.set_defaults(func=cmd_split)

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--field", required=True)
    algebra.add_argument("--a", required=True)
    algebra.add_argument("--b", required=True)
    algebra.add_argument("--convention", default="standard", choices=("standard", "elkies"))
    algebra.add_argument("--trust-ramf", default=None, metavar="empty|p1,p2,...")

    p = sub.add_parser("ram", parents=[common, algebra], help="ramification of (a, b)")
    p.set_defaults(func=cmd_ram)
    p = sub.add_parser("periods", parents=[common, algebra], help="period set of (a, b)")
    p.add_argument("--max", type=int, default=None)
    p.set_defaults(func=cmd_periods)
    p = sub.add_parser("galois", parents=[common, algebra], help="conjugated invariants")
    p.add_argument("--sigma", type=int, required=True)
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("verify", help="verify a worked family")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    g = fam.add_parser("gamma-p", parents=[common])
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q-list", default=None)
    g.set_defaults(func=cmd_verify)
    e = fam.add_parser("elkies", parents=[common])
    e.add_argument("--prime-bound", type=int, default=200)
    e.set_defaults(func=cmd_verify)
    return ap


def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines.extend(_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)):
                sub = _text(val, indent + 1)
                lines.append(f"{pad}-" + (" " + sub[0].strip() if sub else ""))
                lines.extend(sub[1:])
            else:
                lines.append(f"{pad}- {_scalar(val)}")
    return lines


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (dict, list)):
        return "{}" if isinstance(v, dict) else "[]"
    return str(v)


def run(argv=None):
    """Run the CLI; returns (exit code, report dict or None)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, _error_report(argv, str(exc))
    try:
        results, status, k = args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, _error_report(argv, str(exc))
    code = {"pass": EXIT_OK, "fail": EXIT_FAIL}.get(status, EXIT_OK)
    if status == "undetermined" and args.strict:
        code = EXIT_UNDETERMINED
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": argv,
        "status": status,
        "exit_code": code,
        "field": None if k is None else k.describe(),
        "results": results,
        "notes": [NORMALITY_NOTE],
    }
    return code, report


def _error_report(argv, message):
    return {"schema_version": SCHEMA_VERSION, "command": argv, "status": "error",
            "exit_code": EXIT_USAGE, "field": None, "results": {}, "notes": [], "error": message}


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    code, report = run(argv)
    quiet = "--quiet" in argv
    as_json = "--json" in argv
    if quiet:
        return code
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
    elif report.get("status") == "error":
        print(f"arithfuchs: error: {report['error']}", file=sys.stderr)
    else:
        print("\n".join(_text(report)))
    return code


if __name__ == "__main__":
    sys.exit(main())
