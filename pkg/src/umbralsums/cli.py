"""Command-line front end.  Output is JSON by default with rationals as "p/q"."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .bernoulli import apostol_bernoulli_poly
from .core import format_rational, parse_rational
from .extbern import SHIFTED_ZERO, TILDE, beta_symbolic, beta_tilde, connection_probe
from .mzv import zeta_constant_term, zeta_depth2, zeta_raabe, zeta_renorm
from .powersum import symbolic_h, symbolic_li, symbolic_s
from .sweeps import SUITES, Limits, run_suite

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _indices(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"indices must be comma-separated integers: {text!r}") from None
    if any(n < 0 for n in out):
        raise argparse.ArgumentTypeError("indices must be non-negative")
    return out


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _natural(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("expected a natural number")
    return n


def _positive(text: str) -> int:
    n = _natural(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    # --format is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="umbralsums", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bern", parents=[common], help="(Apostol-)Bernoulli polynomial")
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--x", type=_rational)
    p.add_argument("--lambda", dest="lam", type=_rational, default=parse_rational("1"))

    p = sub.add_parser("powersum", parents=[common], help="multiple power sum")
    p.add_argument("--indices", type=_indices, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--upper", type=_rational)
    g.add_argument("--poly", action="store_true")
    p.add_argument("--weak", action="store_true", help="weak inequalities N >= i_1 >= ... >= i_r >= 1")

    p = sub.add_parser("polylog", parents=[common], help="truncated polylogarithm")
    p.add_argument("--indices", type=_indices, required=True)
    p.add_argument("--z", type=_rational, required=True)
    p.add_argument("--upper", type=_natural, required=True)

    p = sub.add_parser("extbern", parents=[common], help="extended Bernoulli polynomial")
    p.add_argument("--indices", type=_indices, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--z", type=_rational)
    g.add_argument("--poly", action="store_true")
    p.add_argument("--variant", choices=("shifted", "tilde"), default="shifted")

    p = sub.add_parser("zeta", parents=[common], help="multiple zeta value at non-positive integers")
    p.add_argument("--indices", type=_indices, required=True)
    p.add_argument("--method", choices=("raabe", "renorm", "constant-term", "depth2", "all"), default="all")

    p = sub.add_parser("verify", parents=[common], help="run a property sweep")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-depth", type=_natural)
    p.add_argument("--max-weight", type=_natural)
    p.add_argument("--max-upper", type=_natural)
    p.add_argument("--bound", type=_natural)
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("probe", parents=[common], help="diagnostic probes (never fail)")
    probes = p.add_subparsers(dest="probe", required=True)
    q = probes.add_parser("beta-connection", parents=[common])
    q.add_argument("--indices", type=_indices, required=True)
    q.add_argument("--upper", type=_natural, required=True)
    q.add_argument("--convention", choices=(TILDE, SHIFTED_ZERO), default=SHIFTED_ZERO)
    return parser


def _r(x) -> str:
    return format_rational(x)


def _cmd_bern(a) -> tuple[dict, int]:
    p = apostol_bernoulli_poly(a.n, a.lam)
    if a.x is not None:
        return {"value": _r(p(a.x))}, EXIT_OK
    return {"coeffs": p.to_strings()}, EXIT_OK


def _cmd_powersum(a) -> tuple[dict, int]:
    if a.weak:
        poly = symbolic_s(a.indices)
        if a.poly:
            return {"coeffs": poly.to_strings()}, EXIT_OK
        return {"value": _r(symbolic_s(a.indices, a.upper))}, EXIT_OK
    ps = symbolic_h(a.indices)
    if a.poly:
        return {"coeffs": ps.poly.to_strings()}, EXIT_OK
    return {"value": _r(ps(a.upper))}, EXIT_OK


def _cmd_polylog(a) -> tuple[dict, int]:
    return {"value": _r(symbolic_li(a.indices, a.z, a.upper))}, EXIT_OK


def _cmd_extbern(a) -> tuple[dict, int]:
    e = beta_tilde(a.indices) if a.variant == "tilde" else beta_symbolic(a.indices)
    if a.poly:
        return {"coeffs": e.poly.to_strings()}, EXIT_OK
    return {"value": _r(e(a.z))}, EXIT_OK


def _cmd_zeta(a) -> tuple[dict, int]:
    idx = a.indices
    if a.method == "depth2":
        if len(idx) != 2:
            raise ValueError("--method depth2 needs exactly two indices")
        return {"value": _r(zeta_depth2(*idx))}, EXIT_OK
    single = {"raabe": zeta_raabe, "renorm": zeta_renorm, "constant-term": zeta_constant_term}
    if a.method in single:
        return {"value": _r(single[a.method](idx))}, EXIT_OK
    vals = zeta_raabe(idx), zeta_renorm(idx), zeta_constant_term(idx)
    out = {"raabe": _r(vals[0]), "renorm": _r(vals[1]), "constant_term": _r(vals[2])}
    out["agree"] = vals[0] == vals[1] == vals[2]
    return out, EXIT_OK


def _cmd_verify(a) -> tuple[dict, int]:
    limits = Limits(a.max_depth, a.max_weight, a.max_upper, a.bound)
    report = run_suite(a.suite, limits, jobs=a.jobs)
    return report.to_dict(), EXIT_OK if report.passed else EXIT_FAIL


def _cmd_probe(a) -> tuple[dict, int]:
    rep = connection_probe(a.indices, a.upper, a.convention)
    out = {
        "indices": list(a.indices),
        "upper": a.upper,
        "convention": a.convention,
        "lhs": _r(rep.lhs),
        "rhs": _r(rep.rhs),
        "residual": _r(rep.residual),
        "symbol_polynomial": rep.detail["symbol_polynomial"].to_strings(),
    }
    return out, EXIT_OK


COMMANDS = {
    "bern": _cmd_bern,
    "powersum": _cmd_powersum,
    "polylog": _cmd_polylog,
    "extbern": _cmd_extbern,
    "zeta": _cmd_zeta,
    "verify": _cmd_verify,
    "probe": _cmd_probe,
}


def _text(out: dict) -> str:
    lines = []
    for k, v in out.items():
        if isinstance(v, list):
            v = " ".join(json.dumps(x, separators=(",", ":")) if isinstance(x, dict) else str(x) for x in v)
        elif isinstance(v, bool):
            v = str(v).lower()
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


_NEG_FRACTION = re.compile(r"^-\d+/\d+$")


def _glue_negative_fractions(argv: Sequence[str]) -> list[str]:
    """argparse reads ``-3/4`` as an option; rewrite ``--z -3/4`` as ``--z=-3/4``."""
    out: list[str] = []
    for tok in argv:
        if _NEG_FRACTION.match(tok) and out and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_glue_negative_fractions(argv))
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    fmt = getattr(args, "format", "json")
    try:
        out, status = COMMANDS[args.command](args)
    except (ValueError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if fmt == "text":
        print(_text(out))
    else:
        print(json.dumps(out, separators=(",", ":")))
    return status


if __name__ == "__main__":
    sys.exit(main())
