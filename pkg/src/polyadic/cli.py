"""Command-line front end.

Every successful command prints one line of compact JSON to stdout.
Exit codes: 0 success, 1 domain error, 2 usage error.  Polyadic operands
are either an integer literal (embedded at ``--depth``) or a JSON object
``{"depth": K, "digits": [...]}``; ``-`` reads the operand from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import lru_cache
from typing import Sequence

from . import arith, characters as ch, jsonio, stabilizers as st
from . import topology as tp
from .arith import DEFAULT_DEPTH
from .errors import NotYetStable, PolyadicError, UnknownSuite
from .verify import run_suite


class UsageError(Exception):
    pass


_stdin_cache: list[str] = []


def _read_arg(text: str) -> str:
    if text != "-":
        return text
    if not _stdin_cache:
        _stdin_cache.append(sys.stdin.read())
    return _stdin_cache[0]


def _load_json(text: str):
    try:
        return json.loads(_read_arg(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON {text!r}: {exc}") from None


def polyadic_arg(text: str, depth: int) -> arith.PolyadicInt:
    text = _read_arg(text).strip()
    if text.startswith("{"):
        obj = _load_json(text)
        try:
            return jsonio.polyadic_from_json(obj)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad polyadic JSON: {exc}") from None
    try:
        return arith.embed(int(text), depth)
    except ValueError:
        raise UsageError(f"expected an integer or polyadic JSON, got {text!r}") \
            from None


def sequence_arg(text: str) -> st.IntSequence:
    text = _read_arg(text).strip()
    if text.startswith("["):
        values = _load_json(text)
        try:
            return st.IntSequence.from_list([jsonio.decode_int(v) for v in values])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        return st.named_sequence(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _report_json(report: st.StabilizationReport) -> dict:
    return {"target_depth": report.target_depth,
            "witness_index": report.witness_index,
            "checked_upto": report.checked_upto,
            "window": report.window,
            "status": report.status.value}


def cmd_digits(args):
    alpha = polyadic_arg(args.value, args.depth)
    return {"digits": list(alpha.digits)}


def cmd_embed(args):
    if args.from_digits is not None:
        digits = _load_json(args.from_digits)
        if not isinstance(digits, list):
            raise UsageError("--from-digits expects a JSON array")
        alpha = arith.from_digits([jsonio.decode_int(d) for d in digits])
    elif args.value is not None:
        alpha = polyadic_arg(args.value, args.depth)
    else:
        raise UsageError("embed needs a value or --from-digits")
    return jsonio.polyadic_to_json(alpha)


def cmd_binary(op):
    def run(args):
        a = polyadic_arg(args.a, args.depth)
        b = polyadic_arg(args.b, args.depth)
        return jsonio.polyadic_to_json(op(a, b))
    return run


def cmd_neg(args):
    return jsonio.polyadic_to_json(arith.neg(polyadic_arg(args.a, args.depth)))


def cmd_divrem(args):
    alpha = polyadic_arg(args.a, args.depth)
    gamma, r = arith.div_rem(alpha, args.n, args.out_depth)
    return {"quotient": jsonio.polyadic_to_json(gamma),
            "rem": jsonio.encode_int(r)}


def cmd_res(args):
    alpha = polyadic_arg(args.a, args.depth)
    return {"res": jsonio.encode_int(arith.residue_mod(alpha, args.mod))}


def cmd_padic(args):
    alpha = polyadic_arg(args.a, args.depth)
    return {"digits": arith.padic_digits(alpha, args.p, args.k)}


def cmd_limit(args):
    seq = sequence_arg(args.sequence)
    limit, report = st.limit_upto(seq, args.depth, args.horizon, args.window)
    return {"tower": jsonio.polyadic_to_json(limit),
            "residue": jsonio.encode_int(limit.value),
            "report": _report_json(report)}


def cmd_classify(args):
    seq = sequence_arg(args.sequence)
    limit, report = st.limit_upto(seq, args.depth, args.horizon, args.window)
    value = st.classify_absolute_upto(seq, args.depth, args.horizon,
                                      args.window, args.bound)
    out = {"depth": args.depth,
           "tower": jsonio.polyadic_to_json(limit),
           "zero": limit.value == 0,
           "absolute": value is not None,
           "value": None if value is None else jsonio.encode_int(value),
           "report": _report_json(report)}
    if args.prezero:
        out["prezero"] = {str(p): st.is_prezero_upto(seq, p, args.horizon,
                                                     args.window)
                          for p in args.prezero}
    return out


def cmd_char_eval(args):
    psi = ch.char_of(polyadic_arg(args.tower, args.depth))
    try:
        u = jsonio.function_from_json(_load_json(args.fn))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad function JSON: {exc}") from None
    return jsonio.encode_complex(ch.evaluate(psi, u))


def cmd_conv(args):
    phi = ch.char_of(polyadic_arg(args.a, args.depth))
    if args.op == "reflect":
        if args.b is not None:
            raise UsageError("reflect takes a single operand")
        result = ch.reflect(phi)
    else:
        if args.b is None:
            raise UsageError(f"{args.op} needs two operands")
        psi = ch.char_of(polyadic_arg(args.b, args.depth))
        result = {"plus": ch.conv_plus, "dot": ch.conv_dot,
                  "minus": ch.conv_minus}[args.op](phi, psi)
    return jsonio.character_to_json(result)


def cmd_cluster(args):
    phi = ch.char_of(polyadic_arg(args.a, args.depth))
    psi = ch.char_of(polyadic_arg(args.b, args.depth))
    return {"equal": ch.cluster_equal(phi, psi, args.n)}


def cmd_grid(args):
    g = tp.Grid(args.width, polyadic_arg(args.center, args.depth))
    chosen = [x for x in (args.contains, args.intersect, args.relation)
              if x is not None]
    if len(chosen) != 1:
        raise UsageError(
            "grid needs exactly one of --contains, --intersect, --relation")
    if args.contains is not None:
        return {"contains": tp.grid_contains(
            g, polyadic_arg(args.contains, args.depth))}
    width, center = args.intersect or args.relation
    try:
        other = tp.Grid(int(width), polyadic_arg(center, args.depth))
    except ValueError:
        raise UsageError(f"bad grid width {width!r}") from None
    if args.intersect is not None:
        result = tp.intersect(g, other)
        return {"intersection": None if result is None
                else jsonio.grid_to_json(result)}
    return {"relation": tp.grids_relation(g, other).value}


def cmd_partition(args):
    return [jsonio.grid_to_json(g) for g in tp.partition(args.n, args.out_depth)]


def cmd_refine(args):
    return [jsonio.grid_to_json(g) for g in tp.refine(args.n, args.k)]


def cmd_verify(args):
    options = {"depth": args.depth_opt, "n": args.n, "radius": args.radius,
               "samples": args.samples, "horizon": args.horizon_opt}
    return run_suite(args.suite, args.seed, **options).to_json()


def _usage_error_parser(prog: str):
    class Parser(argparse.ArgumentParser):
        def error(self, message):
            raise UsageError(f"{self.prog}: {message}")
    return Parser(prog=prog, description=__doc__.splitlines()[0])


@lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    parser = _usage_error_parser("polyadic")
    parser.add_argument("--json", action="store_true",
                        help="machine output (always on; kept for scripts)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                        help="depth K for integer operands (mod (K+1)!)")
    common.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    seqopts = argparse.ArgumentParser(add_help=False)
    seqopts.add_argument("--horizon", type=int, default=st.DEFAULT_HORIZON)
    seqopts.add_argument("--window", type=int, default=None,
                         help="agreeing tail length (default 2*(depth+1))")
    sub = parser.add_subparsers(dest="verb", parser_class=type(parser))
    sub.required = True

    def verb(name, func, parents=(common,), **kw):
        p = sub.add_parser(name, parents=list(parents), **kw)
        p.set_defaults(func=func)
        return p

    p = verb("digits", cmd_digits, help="factorial digits of a value")
    p.add_argument("value")
    p = verb("embed", cmd_embed, help="polyadic JSON of an integer or digits")
    p.add_argument("value", nargs="?")
    p.add_argument("--from-digits", dest="from_digits")
    for name, op in (("add", arith.add), ("mul", arith.mul)):
        p = verb(name, cmd_binary(op), help=f"{name} two polyadic integers")
        p.add_argument("a")
        p.add_argument("b")
    p = verb("neg", cmd_neg, help="additive inverse")
    p.add_argument("a")
    p = verb("divrem", cmd_divrem, help="division with remainder")
    p.add_argument("a")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out-depth", dest="out_depth", type=int, default=None)
    p = verb("res", cmd_res, help="residue modulo a divisor of (K+1)!")
    p.add_argument("a")
    p.add_argument("--mod", type=int, required=True)
    p = verb("padic", cmd_padic, help="leading base-p digits")
    p.add_argument("a")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = verb("limit", cmd_limit, parents=(common, seqopts),
             help="stabilized limit of a sequence")
    p.add_argument("sequence", help="JSON integer array or named generator")
    p = verb("classify", cmd_classify, parents=(common, seqopts),
             help="zero / absolute / prezero classification")
    p.add_argument("sequence")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--prezero", type=int, nargs="*", default=[])
    p = verb("char-eval", cmd_char_eval, help="evaluate a character")
    p.add_argument("--tower", required=True)
    p.add_argument("--fn", required=True)
    p = verb("conv", cmd_conv, help="plus/dot convolution or reflection")
    p.add_argument("--op", choices=["plus", "dot", "minus", "reflect"],
                   required=True)
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p = verb("cluster", cmd_cluster, help="cluster equivalence modulo n")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--n", type=int, required=True)
    p = verb("grid", cmd_grid, help="grid membership and relations")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--center", required=True)
    p.add_argument("--contains")
    p.add_argument("--intersect", nargs=2, metavar=("WIDTH", "CENTER"))
    p.add_argument("--relation", nargs=2, metavar=("WIDTH", "CENTER"))
    p = verb("partition", cmd_partition, parents=(),
             help="the n grids of width n")
    p.add_argument("n", type=int)
    p.add_argument("--depth", dest="out_depth", type=int, default=None)
    p = verb("refine", cmd_refine, parents=(),
             help="split the width-n! grid at k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p = verb("verify", cmd_verify, parents=(), help="run a property suite")
    p.add_argument("suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", dest="depth_opt", type=int, default=None)
    p.add_argument("--horizon", dest="horizon_opt", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--samples", type=int, default=None)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    _stdin_cache.clear()
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except (UsageError, UnknownSuite) as exc:
        print(exc, file=sys.stderr)
        return 2
    except NotYetStable as exc:
        print(f"not yet stable: {exc}", file=sys.stderr)
        return 1
    except PolyadicError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"invalid argument: {exc}", file=sys.stderr)
        return 2
    print(jsonio.dumps(result))
    if args.verb == "verify" and not result["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())
