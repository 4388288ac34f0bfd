"""Command line front end: ``mockchar {eval,verify,asym,table}``.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 evaluation error.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from dataclasses import dataclass
from typing import Callable

from .asymptotics import DEFAULT_LADDER, asymptotic_ladder, primitive_ladder
from .base import DEFAULT_PARAMS, EvalParams, MockCharError, check_tau, half
from .characters import CharacterId, Sector, WeightParams, character, n3_denominator
from .closed_forms import closed_form_character
from .corpus import builtin_corpus
from .harness import (
    DEFAULT_SEED,
    format_complex,
    format_csv,
    format_plain,
    parse_complex,
    resolve_threads,
    run_suite,
)
from .appell import phi, phi1, phi2
from .qseries import dedekind_eta, theta
from .zwegers import phi_add, phi_tilde, r_function

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_EVAL = 0, 1, 2, 3
FORMATS = ("json", "csv", "plain")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- eval registry -------------------------------------------------------------


@dataclass(frozen=True)
class _Fn:
    needs: tuple[str, ...]
    call: Callable
    doc: str


def _appell(fn):
    return _Fn(("m", "s", "z1", "z2", "t"),
               lambda a, tau, z, p: fn(a.m, a.s, tau, a.z1, a.z2, a.t, p),
               "--m --s --z1 --z2 --t")


def _level(m) -> int:
    if m.twice % 2:
        raise ValueError(f"characters need an integer level m, got {m}")
    return m.twice // 2


def _cid(a) -> CharacterId:
    return CharacterId(WeightParams(_level(a.m), a.m2), Sector.parse(a.sector), a.modified, allow_zero=True)


FUNCTIONS: dict[str, _Fn] = {
    "phi": _appell(phi),
    "phi1": _appell(phi1),
    "phi2": _appell(phi2),
    "phi_add": _appell(phi_add),
    "phi_tilde": _appell(phi_tilde),
    "r": _Fn(("m", "s", "z"), lambda a, tau, z, p: r_function(a.s, a.m, tau, z, p),
             "R_{s;m}(tau, z): --m --s --z"),
    "eta": _Fn((), lambda a, tau, z, p: dedekind_eta(tau, p), "eta(tau)"),
    **{f"theta{ab}": _Fn(("z",), (lambda ab: lambda a, tau, z, p: theta(ab, tau, z, p))(ab), f"theta_{ab}(tau, z)")
       for ab in ("00", "01", "10", "11")},
    "denominator": _Fn(("sector", "z"), lambda a, tau, z, p: n3_denominator(Sector.parse(a.sector), tau, z, p),
                       "--sector --z"),
    "character": _Fn(("m", "m2", "sector", "z"), lambda a, tau, z, p: character(_cid(a), tau, z, p),
                     "--m --m2 --sector [--modified] --z"),
    "closed_form": _Fn(("m", "m2", "sector", "z"), lambda a, tau, z, p: closed_form_character(_cid(a), tau, z, p),
                       "--m --m2 --sector [--modified] --z"),
}


# --- argument plumbing -----------------------------------------------------------


def _complex_list(text: str) -> list[complex]:
    try:
        return [parse_complex(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad complex literal list {text!r}; use a+bi, e.g. 0.1+0.9i") from None


def _complex(text: str) -> complex:
    vals = _complex_list(text)
    if len(vals) != 1:
        raise argparse.ArgumentTypeError(f"expected one complex value, got {text!r}")
    return vals[0]


def _half(text: str):
    try:
        return half(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer or half-integer") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None


def _add_params(sp):
    g = sp.add_argument_group("series controls")
    g.add_argument("--term-tol", type=float, default=DEFAULT_PARAMS.term_tol)
    g.add_argument("--max-terms", type=int, default=DEFAULT_PARAMS.max_terms)
    g.add_argument("--pole-eps", type=float, default=DEFAULT_PARAMS.pole_eps)
    g.add_argument("--format", choices=FORMATS, default="plain")


def _add_char(sp, sector_default="plus"):
    sp.add_argument("--m", type=_half, default=half(2), help="level parameter (default 2)")
    sp.add_argument("--m2", type=int, default=None, help="weight label, 0 <= m2 <= m")
    sp.add_argument("--sector", default=sector_default, help="plus, minus, twist_plus or twist_minus")
    sp.add_argument("--modified", action="store_true", help="use the completed numerator")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mockchar", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate a registered function")
    ev.add_argument("function", choices=sorted(FUNCTIONS), metavar="FUNCTION",
                    help="one of: " + ", ".join(sorted(FUNCTIONS)))
    ev.add_argument("--tau", type=_complex_list, required=True, help="comma-separated a+bi values")
    ev.add_argument("--z", type=_complex_list, default=[0j])
    ev.add_argument("--z1", type=_complex, default=0j)
    ev.add_argument("--z2", type=_complex, default=0j)
    ev.add_argument("--t", type=_complex, default=0j)
    ev.add_argument("--s", type=_half, default=half(0))
    _add_char(ev)
    _add_params(ev)

    vf = sub.add_parser("verify", help="run identity cases")
    vf.add_argument("--suite", default="all", help="'all' or comma-separated globs over case ids and tags")
    vf.add_argument("--seed", type=int, default=None, help=f"override every case seed (cases default to {DEFAULT_SEED})")
    vf.add_argument("--samples", type=int, default=None)
    vf.add_argument("--tol", type=float, default=None)
    vf.add_argument("--list", action="store_true", help="list matching case ids and exit")
    _add_params(vf)

    asy = sub.add_parser("asym", help="small-tau ratios actual/predicted along tau = iT")
    asy.add_argument("--char", default=None, help='"m=2,m2=1,plus,honest", or eta / theta00 / theta01 / theta10 / theta11')
    _add_char(asy)
    asy.add_argument("--a", type=float, default=0.0, help="z = a tau")
    asy.add_argument("--T", type=_float_list, default=list(DEFAULT_LADDER))
    _add_params(asy)

    tb = sub.add_parser("table", help="characters over a (tau, z) grid as CSV")
    _add_char(tb, sector_default=None)
    tb.add_argument("--tau", type=_complex_list, default=[0.9j])
    tb.add_argument("--z", type=_complex_list, default=[0.1 + 0.05j])
    tb.add_argument("--closed-form", action="store_true", help="use the eta/theta closed form")
    _add_params(tb)
    tb.set_defaults(format="csv")
    return ap


def _params(args) -> EvalParams:
    try:
        return EvalParams(term_tol=args.term_tol, max_terms=args.max_terms, pole_eps=args.pole_eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _taus(values) -> list[complex]:
    try:
        return [check_tau(v) for v in values]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _header(args, p: EvalParams, **extra) -> dict:
    return {"command": args.command, **extra, **p.as_dict(), "threads": resolve_threads()}


def _emit(fmt: str, header: dict, columns: list[str], rows: list[list], out) -> None:
    if fmt == "json":
        json.dump({"header": header, "rows": [dict(zip(columns, r)) for r in rows]}, out, indent=2)
        out.write("\n")
        return
    if fmt == "plain":
        out.write("# " + " ".join(f"{k}={v}" for k, v in header.items()) + "\n")
        table = [columns] + [[str(c) for c in r] for r in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(columns))]
        for r in table:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        return
    w = csv.writer(out, lineterminator="\n")
    out.write("# " + " ".join(f"{k}={v}" for k, v in header.items()) + "\n")
    w.writerow(columns)
    w.writerows(rows)


# --- subcommands -------------------------------------------------------------------


def _cmd_eval(args, out) -> int:
    fn = FUNCTIONS[args.function]
    p = _params(args)
    taus = _taus(args.tau)
    if "m2" in fn.needs:
        if args.m2 is None:
            raise UsageError(f"{args.function} needs --m2")
        try:
            _cid(args)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if "sector" in fn.needs:
        try:
            Sector.parse(args.sector)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    zs = args.z if "z" in fn.needs else [0j]
    rows = []
    for tau, z in itertools.product(taus, zs):
        value = fn.call(args, tau, z, p)
        rows.append([format_complex(tau), format_complex(z), format_complex(value)])
    given = {k: str(getattr(args, k)) if k in ("m", "s") else getattr(args, k) for k in fn.needs if k not in ("z",)}
    given = {k: format_complex(v) if isinstance(v, complex) else v for k, v in given.items()}
    _emit(args.format, _header(args, p, function=args.function, **given), ["tau", "z", "value"], rows, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    p = _params(args)
    cases = builtin_corpus()
    if args.list:
        from .harness import select_cases

        for c in sorted(select_cases(cases, args.suite), key=lambda c: c.id):
            out.write(f"{c.id}\t{','.join(c.tags)}\n")
        return EXIT_OK
    if args.samples is not None and args.samples < 1:
        raise UsageError("--samples must be positive")
    if args.tol is not None and not args.tol > 0:
        raise UsageError("--tol must be positive")
    result = run_suite(cases, args.suite, p, seed=args.seed, n_samples=args.samples, tolerance=args.tol)
    if args.format == "json":
        out.write(result.to_json() + "\n")
    elif args.format == "csv":
        out.write("# " + " ".join(f"{k}={v}" for k, v in result.params.items()) + "\n")
        out.write(format_csv(result))
    else:
        out.write(format_plain(result))
    return result.status


def _asym_target(args):
    if args.char in ("eta", "theta00", "theta01", "theta10", "theta11"):
        kind = "eta" if args.char == "eta" else args.char[-2:]
        return args.char, lambda T, p: primitive_ladder(kind, args.a, T, p)
    try:
        if args.char is not None:
            cid = CharacterId.parse(args.char)
        else:
            if args.m2 is None:
                raise ValueError("asym needs --char or --m2")
            cid = _cid(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return str(cid), lambda T, p: asymptotic_ladder(cid, args.a, T, p)


def _cmd_asym(args, out) -> int:
    p = _params(args)
    if not args.T or any(T <= 0 for T in args.T):
        raise UsageError("--T needs positive values")
    label, ladder = _asym_target(args)
    rows = [[r.T, format_complex(r.actual), format_complex(r.predicted),
             format_complex(r.actual / r.predicted), f"{r.deviation:.6e}"] for r in ladder(tuple(args.T), p)]
    _emit(args.format, _header(args, p, char=label, a=args.a), ["T", "actual", "predicted", "ratio", "deviation"], rows, out)
    return EXIT_OK


def _cmd_table(args, out) -> int:
    p = _params(args)
    taus = _taus(args.tau)
    try:
        m = _level(args.m)
        m2s = [args.m2] if args.m2 is not None else list(range(m + 1))
        sectors = [Sector.parse(args.sector)] if args.sector else list(Sector)
        cids = [CharacterId(WeightParams(m, m2), s, args.modified, allow_zero=True) for m2 in m2s for s in sectors]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fn = closed_form_character if args.closed_form else character
    rows = []
    for cid, tau, z in itertools.product(cids, taus, args.z):
        v = fn(cid, tau, z, p)
        rows.append([str(cid), format_complex(tau), format_complex(z), v.real, v.imag])
    header = _header(args, p, path="closed-form" if args.closed_form else "series")
    _emit(args.format, header, ["character", "tau", "z", "re", "im"], rows, out)
    return EXIT_OK


_COMMANDS = {"eval": _cmd_eval, "verify": _cmd_verify, "asym": _cmd_asym, "table": _cmd_table}


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        buf = io.StringIO()
        status = _COMMANDS[args.command](args, buf)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (MockCharError, ArithmeticError, ValueError) as exc:
        print(f"mockchar: evaluation failed: {exc}", file=sys.stderr)
        return EXIT_EVAL
    out.write(buf.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
