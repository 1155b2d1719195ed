"""Command-line front end.

Subcommands::

    wsi interp --spec FILE [--xi0 N] [--bits N] [--no-timing]
    wsi cheb --system A2 --kind T --weight 1,1
    wsi sets --which wcross --system A2 --r 2 [--format json|points]
    wsi group --system B2
    wsi selftest

Exit codes: 0 ok, 1 selftest failure, 2 usage or parse error, 3 recovery failure.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
import time
from fractions import Fraction

from .cheb import (
    character_poly,
    chebyshev_T,
    chebyshev_U,
    format_poly,
    substitute_orbits,
)
from .interp import (
    BASES,
    CHEB1,
    CHEB2,
    DEFAULT_BITS,
    MONOMIAL,
    SparseRepresentation,
    interpolate,
    orbit_value,
    recover_weight,
    xi_config,
)
from .orbitalg import (
    PLAIN,
    SKEW,
    LaurentPoly,
    hypercross,
    minkowski_sum,
    orbit_poly,
    orbit_product_expand,
    skew_orbit_poly,
    wcross,
)
from .rootsys import RootSystemError, load_root_system, make_root_system, strongly_dominant_basis
from .supportrec import RecoveryError

EXIT_OK, EXIT_SELFTEST, EXIT_USAGE, EXIT_RECOVERY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------- spec parsing

def parse_spec(data: dict) -> tuple:
    """Return ``(representation, options)`` from a problem-spec dict."""
    if not isinstance(data, dict):
        raise UsageError("spec must be a JSON object")
    basis = data.get("basis")
    if basis not in BASES:
        raise UsageError(f"basis must be one of {', '.join(BASES)}")
    rs = None
    sys_spec = data.get("root_system", data.get("system"))
    if basis != MONOMIAL:
        if sys_spec is None:
            raise UsageError("Chebyshev bases need a root_system")
        try:
            rs = make_root_system(sys_spec)
        except RootSystemError as exc:
            raise UsageError(str(exc)) from None
    raw = data.get("terms")
    if not isinstance(raw, list) or not raw:
        raise UsageError("terms must be a nonempty list")
    terms = []
    for t in raw:
        if isinstance(t, dict):
            c, w = t.get("coeff"), t.get("weight")
        elif isinstance(t, (list, tuple)) and len(t) == 2:
            c, w = t
        else:
            raise UsageError(f"cannot parse term {t!r}")
        try:
            terms.append((Fraction(str(c)), tuple(int(x) for x in w)))
        except (TypeError, ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse term {t!r}") from None
    try:
        rep = SparseRepresentation(basis, terms, rs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = data.get("r")
    if r is not None and (not isinstance(r, int) or isinstance(r, bool) or r < 1):
        raise UsageError("r must be a positive integer")
    opts = {
        "r": r,
        "xi0": data.get("xi0", data.get("xi")),
        "bits": data.get("precision_bits"),
    }
    return rep, opts


def terms_json(rep: SparseRepresentation) -> list:
    return [{"coeff": frac_str(c), "weight": list(w)} for c, w in rep.canonical()]


def system_json(rs) -> object:
    return None if rs is None else rs.name


def _default_bits() -> int:
    env = os.environ.get("WSI_BITS")
    return int(env) if env else DEFAULT_BITS


def cmd_interp(args) -> int:
    try:
        with open(args.spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read spec: {exc}") from None
    rep, opts = parse_spec(data)
    bits = args.bits or opts["bits"] or _default_bits()
    xi0 = args.xi0 if args.xi0 is not None else opts["xi0"]
    if xi0 is not None:
        try:
            xi0 = Fraction(str(xi0))
        except ValueError:
            raise UsageError("xi0 must be a rational") from None
        if rep.basis != MONOMIAL and xi0.denominator != 1:
            raise UsageError("xi0 must be an integer for Chebyshev bases")
    r = opts["r"]
    base = {
        "basis": rep.basis,
        "root_system": system_json(rep.rs),
        "input": terms_json(rep),
    }
    t0 = time.perf_counter()
    try:
        report = interpolate(rep, r=r, xi0=xi0, bits=bits)
    except (RecoveryError, ValueError) as exc:
        base.update({"match": False, "error": str(exc)})
        print(dumps(base))
        return EXIT_RECOVERY
    wall = (time.perf_counter() - t0) * 1000
    match = report.result.same_as(rep)
    base.update({
        "recovered": terms_json(report.result),
        "match": match,
        "evaluations_used": report.evaluations,
        "gamma": [list(g) for g in report.gamma],
        "xi_used": {"xi0": frac_str(report.xi.xi0), "D": report.xi.D, "xi": frac_str(report.xi.xi)},
        "precision_used": report.bits,
        "wall_time_ms": None if args.no_timing else round(wall, 3),
    })
    print(dumps(base))
    return EXIT_OK if match else EXIT_RECOVERY


# ---------------------------------------------------------------- other commands

def _system_from_args(args):
    try:
        if getattr(args, "system_json", None):
            return load_root_system(args.system_json)
        if getattr(args, "system", None):
            return make_root_system(args.system)
    except (RootSystemError, OSError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from None
    return None


def _parse_weight(text: str, rank: int) -> tuple:
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}") from None
    if len(w) != rank:
        raise UsageError(f"weight needs {rank} entries")
    if any(x < 0 for x in w):
        raise UsageError(f"{w} is not a dominant weight")
    return w


def cmd_cheb(args) -> int:
    rs = _system_from_args(args)
    if rs is None:
        raise UsageError("cheb needs --system or --system-json")
    w = _parse_weight(args.weight, rs.rank)
    p = chebyshev_T(rs, w) if args.kind == "T" else chebyshev_U(rs, w)
    print(format_poly(rs, p))
    return EXIT_OK


def index_set(which: str, r: int, rs=None, n: int | None = None) -> list:
    if r < 1:
        raise UsageError("r must be at least 1")
    if which in ("hypercross", "sum2", "sum3"):
        n = n if n is not None else (rs.rank if rs is not None else None)
        if n is None:
            raise UsageError(f"{which} needs --n or --system")
        H = hypercross(n, r)
        if which == "hypercross":
            return H
        if which == "sum2":
            return minkowski_sum(H, H)
        return minkowski_sum(H, H, hypercross(n, 2))
    if rs is None:
        raise UsageError(f"{which} needs --system")
    if which == "wcross":
        return wcross(rs, r, PLAIN)
    if which == "wcross-skew":
        return wcross(rs, r, SKEW)
    if which == "wcross-diff":
        H = hypercross(rs.rank, r)
        base = set(minkowski_sum(H, H, hypercross(rs.rank, 2)))
        return [p for p in wcross(rs, r, PLAIN) if p not in base]
    raise UsageError(f"unknown set {which!r}")


def cmd_sets(args) -> int:
    rs = _system_from_args(args)
    pts = index_set(args.which, args.r, rs, args.n)
    if args.format == "points":
        for p in pts:
            print(" ".join(str(x) for x in p))
    else:
        print(dumps([list(p) for p in pts]))
    return EXIT_OK


def cmd_group(args) -> int:
    rs = _system_from_args(args)
    if rs is None:
        raise UsageError("group needs --system or --system-json")
    out = {
        "name": rs.name,
        "order": rs.order,
        "D": rs.D,
        "S": [[frac_str(x) for x in row] for row in rs.S],
        "base_roots": [list(b) for b in rs.base],
        "generators": [[list(row) for row in g] for g in rs.generators],
    }
    print(dumps(out))
    return EXIT_OK


# ---------------------------------------------------------------- selftest

def _suite_group_orders():
    for name, order in (("A1", 2), ("A2", 6), ("B2", 8), ("A3", 24)):
        assert make_root_system(name).order == order, name
    A2 = make_root_system("A2")
    assert A2.D == 3 and A2.S == ((Fraction(2, 3), Fraction(1, 3)), (Fraction(1, 3), Fraction(2, 3)))


def _suite_products():
    for name in ("A2", "B2"):
        rs = make_root_system(name)
        ws = list(itertools.product(range(3), repeat=2))
        for a, b in itertools.product(ws, ws):
            lit = orbit_poly(rs, a) * orbit_poly(rs, b)
            assert orbit_product_expand(rs, a, b, PLAIN).to_laurent(rs) == lit, (name, a, b)
            sa = tuple(x + 1 for x in a)
            lit = skew_orbit_poly(rs, sa) * orbit_poly(rs, b)
            assert orbit_product_expand(rs, sa, b, SKEW).to_laurent(rs) == lit, (name, a, b)


def _suite_chebyshev():
    for name in ("A1", "A2", "B2"):
        rs = make_root_system(name)
        for a in itertools.product(range(4), repeat=rs.rank):
            assert substitute_orbits(rs, chebyshev_T(rs, a)) == orbit_poly(rs, a), (name, a)
            assert substitute_orbits(rs, chebyshev_U(rs, a)) == character_poly(rs, a), (name, a)


def _suite_weyl_character():
    for name in ("A2", "B2"):
        rs = make_root_system(name)
        d = skew_orbit_poly(rs, rs.delta)
        for a in itertools.product(range(5), repeat=2):
            top = skew_orbit_poly(rs, tuple(x + 1 for x in a))
            assert d * character_poly(rs, a) == top, (name, a)


def _suite_commutation():
    rng = random.Random(7)
    for name in ("A2", "B2"):
        rs = make_root_system(name)
        for _ in range(10):
            a = tuple(rng.randint(0, 6) for _ in range(2))
            b = tuple(rng.randint(0, 6) for _ in range(2))
            for skew in (False, True):
                assert orbit_value(rs, a, b, 2, skew) == orbit_value(rs, b, a, 2, skew)


def _suite_weight_recovery():
    rng = random.Random(11)
    for name in ("A2", "B2"):
        rs = make_root_system(name)
        xi0 = xi_config(rs).xi0
        basis = strongly_dominant_basis(rs)
        for _ in range(20):
            w = tuple(rng.randint(0, 10) for _ in range(2))
            vals = [orbit_value(rs, w, mu, xi0) for mu in basis]
            assert recover_weight(rs, xi0, vals, basis) == w
            ws = tuple(x + 1 for x in w)
            vals = [orbit_value(rs, ws, mu, xi0, skew=True) for mu in basis]
            assert recover_weight(rs, xi0, vals, basis, mode=SKEW) == ws


def _suite_round_trip():
    A2 = make_root_system("A2")
    cases = [
        SparseRepresentation(MONOMIAL, [(5, (2, -1)), (-3, (-1, 3))]),
        SparseRepresentation(CHEB1, [(2, (2, 1)), (5, (1, 3))], A2),
        SparseRepresentation(CHEB2, [(1, (1, 1)), (-4, (0, 2))], A2),
    ]
    for spec in cases:
        assert interpolate(spec).result.same_as(spec), spec.basis


SUITES = [
    ("group orders and Gram matrices", _suite_group_orders),
    ("orbit product expansions", _suite_products),
    ("Chebyshev defining identities", _suite_chebyshev),
    ("Weyl character formula", _suite_weyl_character),
    ("evaluation commutation", _suite_commutation),
    ("weight recovery", _suite_weight_recovery),
    ("interpolation round trips", _suite_round_trip),
]


def run_selftest(out=None) -> bool:
    ok = True
    for name, fn in SUITES:
        try:
            fn()
            print(f"PASS  {name}", file=out)
        except Exception as exc:  # report and keep going
            ok = False
            print(f"FAIL  {name}: {exc!r}", file=out)
    return ok


def cmd_selftest(args) -> int:
    return EXIT_OK if run_selftest() else EXIT_SELFTEST


# ---------------------------------------------------------------- entry point

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wsi", description="Sparse interpolation in monomial and generalized Chebyshev bases.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("interp", help="round-trip a sparse representation through its black box")
    q.add_argument("--spec", required=True)
    q.add_argument("--xi0", default=None, help="xi0 (Chebyshev) or xi (monomial)")
    q.add_argument("--bits", type=int, default=None)
    q.add_argument("--no-timing", action="store_true", help="report wall_time_ms as null")
    q.set_defaults(func=cmd_interp)

    def add_system(q):
        q.add_argument("--system", help="A1, A2, A3, ..., B2")
        q.add_argument("--system-json", help="custom root system JSON file")

    q = sub.add_parser("cheb", help="print a Chebyshev polynomial")
    add_system(q)
    q.add_argument("--kind", choices=["T", "U"], default="T")
    q.add_argument("--weight", required=True)
    q.set_defaults(func=cmd_cheb)

    q = sub.add_parser("sets", help="print an index set")
    add_system(q)
    q.add_argument("--which", required=True,
                   choices=["hypercross", "sum2", "sum3", "wcross", "wcross-skew", "wcross-diff"])
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--n", type=int, default=None)
    q.add_argument("--format", choices=["json", "points"], default="json")
    q.set_defaults(func=cmd_sets)

    q = sub.add_parser("group", help="print Weyl group data")
    add_system(q)
    q.set_defaults(func=cmd_group)

    q = sub.add_parser("selftest", help="run the identity suites")
    q.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"wsi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
