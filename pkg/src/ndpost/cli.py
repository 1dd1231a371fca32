"""ndpost command line.

Exit status: 0 success, 1 check or precondition failure, 2 parse error,
3 internal invariant breach.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .glivenko import (
    GlivenkoError, glivenko, inverse_glivenko, translate,
)
from .kernel.check import CheckError, check
from .kernel.derivation import Labels
from .kernel.measure import raa_report
from .rewrite.steps import RewriteError
from .strategy import InvariantBreach, PreconditionError, explore, postpone_j, postpone_m
from .syntax.parser import ParseError, parse_derivation, parse_formula
from .syntax.render import render, render_formula

OK, FAILURE, PARSE, BREACH = 0, 1, 2, 3

_MODES = {"m": "m", "j": "j", "mstar": "mstar"}


def _read(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    return Path(name).read_text(encoding="utf-8")


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _derivation(args):
    return parse_derivation(_read(args.file))


def cmd_check(args):
    print(check(_derivation(args)))
    return OK


def cmd_size(args):
    d = _derivation(args)
    check(d)
    print(raa_report(d))
    return OK


def cmd_postpone(args):
    d = _derivation(args)
    run = postpone_j if args.mode == "j" else postpone_m
    out, trace = run(d)
    log = "".join(f"{s}\n" for s in trace.steps)
    if args.trace:
        _write(log, args.trace)
    else:
        sys.stderr.write(log)
    _write(render(out, "text"), args.output)
    return OK


def cmd_translate(args):
    f = parse_formula(_read(args.file))
    print(render_formula(translate(f, _MODES[args.mode]), "text"))
    return OK


def cmd_glivenko(args):
    d = _derivation(args)
    res = glivenko(d, args.mode)
    dn, ref = render(res.double_negation, "text"), render(res.refutation, "text")
    if args.output:
        base = Path(args.output)
        stem = base.name[:-3] if base.name.endswith(".nd") else base.name
        dn_path = base.with_name(stem + ".nn.nd")
        ref_path = base.with_name(stem + ".refutation.nd")
        dn_path.write_text(dn, encoding="utf-8")
        ref_path.write_text(ref, encoding="utf-8")
        print(f"{dn_path}\n{ref_path}")
    else:
        sys.stdout.write("; double negation\n" + dn + "; refutation\n" + ref)
    return OK


def cmd_inverse(args):
    d = _derivation(args)
    original = parse_formula(_read(args.original))
    gamma = [parse_formula(_read(g)) for g in args.gamma or []]
    out = inverse_glivenko(d, original, gamma, args.mode, Labels.above(d))
    _write(render(out, "text"), args.output)
    return OK


def cmd_prove(args):
    from .oracle import classical_valid, intuitionistic_provable, minimal_provable
    f = parse_formula(_read(args.file))
    decide = {"c": classical_valid, "i": intuitionistic_provable, "m": minimal_provable}[args.logic]
    print("provable" if decide(f) else "not provable")
    return OK


def cmd_render(args):
    d = _derivation(args)
    if args.format != "text":
        check(d)
    sys.stdout.write(render(d, args.format))
    return OK


def cmd_stress(args):
    from .stress import run_stress
    summary = run_stress(args.seed, args.count, args.profile)
    print(summary)
    return OK if summary.ok else FAILURE


def cmd_explore(args):
    d = _derivation(args)
    print(explore(d, args.strategy, args.fuel, args.seed))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ndpost", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="check a derivation and print its judgment")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("size", help="print the raa sizes of a derivation")
    s.add_argument("file")
    s.set_defaults(func=cmd_size)

    s = sub.add_parser("postpone", help="postpone raa to the last rule")
    s.add_argument("--mode", choices=("j", "m"), required=True)
    s.add_argument("--trace", metavar="LOG")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_postpone)

    s = sub.add_parser("translate", help="translate a formula")
    s.add_argument("--mode", choices=tuple(_MODES), required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_translate)

    s = sub.add_parser("glivenko", help="double-negation embedding of a classical derivation")
    s.add_argument("--mode", choices=("m", "j"), required=True)
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_glivenko)

    s = sub.add_parser("inverse", help="back from a ¬¬ derivation to a classical one")
    s.add_argument("--mode", choices=("m", "j"), required=True)
    s.add_argument("--original", required=True, metavar="FORMULA")
    s.add_argument("--gamma", action="append", metavar="FORMULA")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_inverse)

    s = sub.add_parser("prove", help="decide a propositional formula")
    s.add_argument("--logic", choices=("c", "i", "m"), required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_prove)

    s = sub.add_parser("render", help="print a derivation")
    s.add_argument("--format", choices=("text", "ascii", "latex"), default="ascii")
    s.add_argument("file")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("stress", help="run the postponement property suite on generated derivations")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--profile", default="")
    s.set_defaults(func=cmd_stress)

    s = sub.add_parser("explore", help="fire redexes with a chosen strategy")
    s.add_argument("--strategy", choices=("maximal", "random", "innermost"), default="maximal")
    s.add_argument("--fuel", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("file")
    s.set_defaults(func=cmd_explore)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE
    except (InvariantBreach, AssertionError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return BREACH
    except PreconditionError as e:
        print(str(e), file=sys.stderr)
        return FAILURE
    except CheckError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return FAILURE
    except (GlivenkoError, RewriteError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return FAILURE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
