"""Command-line front end: ``qsi <subcommand> [options]``.

Exit status is 0 when every check passes, 1 when a check fails and 2 for
malformed input or an unknown subcommand.  ``--json`` prints one report
object per line; ``millis`` is only filled in with ``--timing`` so that the
JSON output stays byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import checks
from .checks import DEFAULT_SEED, Report, run_all, run_check
from .expr import ExprError, parse_element
from .hopf import torsor_rank_check
from .qscalar import QScalar
from .qsimod import (
    MAX_ISO_DIM,
    PAPER_M,
    UNIT,
    ModuleError,
    dual,
    internal_hom,
    iso_test,
    make_module,
    random_module,
    tensor,
)
from .qtorus import ExponentWindow, TorusElement
from .verify import ring_constants, simplicity_certificate, theta_constants

__all__ = ["main", "build_parser", "load_module"]


class InputError(ValueError):
    """Malformed user input (exit status 2)."""


# --- module spec files ------------------------------------------------------

BUILTIN_MODULES = {"@M": PAPER_M, "@unit": UNIT, "@dualM": dual(PAPER_M)}


def _entry(x):
    if isinstance(x, bool):
        raise InputError(f"matrix entry {x!r} is not a scalar")
    if isinstance(x, int):
        return QScalar(x)
    if isinstance(x, str):
        v = parse_element(x)
        if not isinstance(v, QScalar):
            raise InputError(f"matrix entry {x!r} is not a scalar in q")
        return v
    raise InputError(f"matrix entry {x!r} must be an integer or an expression string")


def load_module(source: str):
    """A builtin (@M, @unit, @dualM) or a JSON file {"S": [[...]], "T": [[...]]}."""
    if source in BUILTIN_MODULES:
        return BUILTIN_MODULES[source]
    try:
        data = json.loads(Path(source).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict) or "S" not in data or "T" not in data:
        raise InputError(f"{source}: expected an object with keys S and T")
    try:
        S = [[_entry(x) for x in row] for row in data["S"]]
        T = [[_entry(x) for x in row] for row in data["T"]]
    except TypeError:
        raise InputError(f"{source}: S and T must be lists of rows") from None
    return make_module(S, T, data.get("name", Path(source).stem))


def module_json(M) -> str:
    rows = lambda A: [[str(x) for x in r] for r in A]  # noqa: E731
    return json.dumps({"S": rows(M.S), "T": rows(M.T)}, ensure_ascii=False)


# --- subcommand handlers ----------------------------------------------------

def _window(values, default):
    if values is None:
        return default
    a, b, c, d = values
    try:
        return ExponentWindow(a, b, c, d)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_verify_all(args):
    return run_all(args.seed)


def _named(name):
    def handler(args):
        return [run_check(name, args.seed)]

    return handler


def cmd_simplicity(args):
    f = parse_element(args.expr, "torus")
    if isinstance(f, QScalar):
        f = TorusElement.scalar(f)
    if not f:
        raise InputError("the zero element has no certificate")
    if any(i < 0 for i, _ in f.terms):
        raise InputError("element has a negative power of t, so it is not in R")
    cert = simplicity_certificate(f)
    ok = cert.is_valid()
    details = [f"input: {f}"] + [str(s) for s in cert.steps]
    return [Report("simplicity", "pass" if ok else "fail", str(cert), None, details=details)]


def cmd_constants(args):
    win = _window(args.window, ExponentWindow.square(-5, 5))
    if args.theta:
        basis = theta_constants(win)
        want = [TorusElement.monomial(0, j) for (i, j) in win if i == 0]
        name = "theta-constants"
    else:
        basis = ring_constants(win)
        want = [TorusElement.one()] if (0, 0) in win else []
        name = "constants"
    ok = sorted(map(str, basis)) == sorted(map(str, want))
    return [Report(name, "pass" if ok else "fail", json.dumps([str(b) for b in basis]), None)]


def cmd_torsor(args):
    win = _window(args.window, ExponentWindow(0, 2, -2, 2))
    if win.i_min < 0:
        raise InputError("torsor window needs non-negative t-exponents")
    rep = torsor_rank_check(win)
    details = [f"{name}: {'ok' if ok else 'FAILED'} <- {w}" for name, (ok, w) in sorted(rep.probes.items())]
    return [Report("torsor", "pass" if rep.passed else "fail", f"rank {rep.rank}/{rep.source_dim}", None, details=details)]


def cmd_module(args):
    mods = [load_module(s) for s in args.files]
    need = {"tensor": 2, "hom": 2, "iso": 2, "dual": 1}[args.op]
    if len(mods) != need:
        raise InputError(f"module {args.op} takes {need} spec file(s), got {len(mods)}")
    if args.op == "iso":
        A, B = mods
        if max(A.dim, B.dim) > MAX_ISO_DIM and A.dim == B.dim:
            raise InputError(f"iso supports dimension <= {MAX_ISO_DIM}")
        res = iso_test(A, B)
        if res.isomorphic:
            P = [[str(x) for x in r] for r in res.witness.matrix]
            return [Report("module-iso", "pass", json.dumps(P, ensure_ascii=False), None)]
        return [Report("module-iso", "fail", "not isomorphic", None)]
    if args.op == "tensor":
        out = tensor(*mods)
    elif args.op == "hom":
        out = internal_hom(*mods)
    else:
        out = dual(mods[0])
    ok = out.satisfies_q_commutation()
    return [Report(f"module-{args.op}", "pass" if ok else "fail", module_json(out), None)]


def cmd_search(args):
    seed = args.search_seed if args.search_seed is not None else args.seed
    rng = random.Random(f"{seed}:search-noncocommutative")
    dims = [(a, b) for a in range(1, 4) for b in range(1, 4) if a * b <= MAX_ISO_DIM]
    for n in range(args.budget):
        a, b = rng.choice(dims)
        A, B = random_module(rng, a), random_module(rng, b)
        if not iso_test(tensor(A, B), tensor(B, A)).isomorphic:
            witness = json.dumps({"A": json.loads(module_json(A)), "B": json.loads(module_json(B)), "trial": n}, ensure_ascii=False)
            return [Report("search-noncocommutative", "pass", witness, seed)]
    return [Report("search-noncocommutative", "pass", "none found in budget", seed)]


# --- parser -----------------------------------------------------------------

def _common(suppress):
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="one JSON report per line")
    p.add_argument("--seed", type=int, default=d(DEFAULT_SEED), help="seed for randomized checks")
    p.add_argument("--timing", action="store_true", default=d(False), help="fill in millis in JSON reports")
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="qsi", parents=[_common(False)], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="subcommand")
    sub.required = True
    common = [_common(True)]

    def add(name, handler, help_):
        p = sub.add_parser(name, parents=common, help=help_)
        p.set_defaults(handler=handler)
        return p

    add("verify-all", cmd_verify_all, "run every acceptance check")
    for name, help_ in (
        ("lemma1", "determinant obstruction for commutative solutions"),
        ("fundamental", "fundamental matrix and its inverse"),
        ("trivialization", "constants of R⊗M"),
        ("coaction", "comodule laws for R"),
        ("hopf-axioms", "Hopf algebra axioms on h_q"),
        ("galois", "coinvariants and Hopf ideals"),
        ("category", "module category and Tannakian checks"),
        ("operators", "σ/θ operator identities"),
        ("warmup", "the classical differential example"),
    ):
        add(name, _named(name), help_)
    p = add("simplicity", cmd_simplicity, "certificate that an element generates R")
    p.add_argument("expr")
    p = add("constants", cmd_constants, "constants of R in a window")
    p.add_argument("--window", nargs=4, type=int, metavar=("IMIN", "IMAX", "JMIN", "JMAX"))
    p.add_argument("--theta", action="store_true", help="θ-constants only (drop the σ condition)")
    p = add("torsor", cmd_torsor, "rank of R⊗R -> R⊗h_q on a window")
    p.add_argument("--window", nargs=4, type=int, metavar=("IMIN", "IMAX", "JMIN", "JMAX"))
    p = add("module", cmd_module, "tensor/hom/dual/iso on module spec files")
    p.add_argument("op", choices=("tensor", "hom", "dual", "iso"))
    p.add_argument("files", nargs="+", help="JSON spec files or @M, @unit, @dualM")
    p = add("search-noncocommutative", cmd_search, "look for A, B with A⊗B not isomorphic to B⊗A")
    p.add_argument("search_seed", nargs="?", type=int)
    p.add_argument("--budget", type=int, default=200)
    return parser


def _emit(reports, args):
    for rep in reports:
        if args.json:
            print(json.dumps(rep.to_json(args.timing), ensure_ascii=False))
        else:
            print(rep.to_text())
    if not args.json and len(reports) > 1:
        ok = sum(r.passed for r in reports)
        print(f"{ok}/{len(reports)} checks passed")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        reports = args.handler(args)
    except (InputError, ExprError, ModuleError, ValueError, ZeroDivisionError) as exc:
        name = args.command
        if args.json:
            print(json.dumps(Report(name, "error", str(exc), None).to_json(), ensure_ascii=False))
        else:
            print(f"qsi {name}: error: {exc}", file=sys.stderr)
        return 2
    _emit(reports, args)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
