"""Command line front end.

Subcommands: spectrum, decompose, indec, pthpower, modp, census, enumerate,
check-bounds, bd-lemma.  Reports are JSON by default (--format text for an
aligned rendering); output is deterministic for a fixed argv.  Exit codes:
0 success, 1 domain error, 2 usage error.  SPEC_GUARD overrides the
enumeration guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import census as census_mod
from . import modp as modp_mod
from .arith import divisors
from .decompose import (decompose_multi, decompose_uni, is_indecomposable_multi,
                        is_indecomposable_uni, is_pth_power)
from .fields import GuardExceeded, ZZ, field_from_order, finite_field
from .mpoly import MPoly, default_var_names
from .parsing import ParseError, parse_poly
from .spectrum import SpectrumUnbounded, spectral_values

PROG = "spec"


def _parse_field(text):
    if "^" in text:
        p, _, k = text.partition("^")
        return finite_field(int(p), int(k))
    return field_from_order(int(text))


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload, indent=""):
    if isinstance(payload, dict):
        for k in sorted(payload):
            v = payload[k]
            if isinstance(v, (dict, list)):
                print(f"{indent}{k}:")
                _emit_text(v, indent + "  ")
            else:
                print(f"{indent}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            _emit_text(v, indent + "  ")
    else:
        print(f"{indent}{payload}")


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def cmd_spectrum(args):
    field = _parse_field(args.field)
    F = parse_poly(args.poly, field, nvars=2)
    rep = spectral_values(F, guard=args.guard)
    return rep.to_json_dict()


def cmd_decompose(args):
    field = _parse_field(args.field)
    F = parse_poly(args.poly, field)
    d = F.degree()
    found = []
    outers = [args.outer_degree] if args.outer_degree else [
        e for e in divisors(d) if e >= 2 and (F.n >= 2 or d // e >= 2)
    ]
    for e in outers:
        dec = (
            decompose_multi(F, e, guard=args.guard)
            if F.n >= 2
            else decompose_uni(F, e, guard=args.guard)
        )
        if dec is not None:
            found.append(
                {
                    "outer_degree": e,
                    "outer": dec.outer.format(("t",)),
                    "inner": dec.inner.format(default_var_names(F.n)),
                }
            )
    return {"poly": F.format(), "variables": F.n, "decompositions": found}


def cmd_indec(args):
    field = _parse_field(args.field)
    F = parse_poly(args.poly, field)
    fn = is_indecomposable_multi if F.n >= 2 else is_indecomposable_uni
    return {"poly": F.format(), "variables": F.n, "indecomposable": fn(F, args.guard)}


def cmd_pthpower(args):
    field = _parse_field(args.field)
    F = parse_poly(args.poly, field)
    root = is_pth_power(F)
    return {
        "poly": F.format(),
        "characteristic": field.p,
        "root": None if root is None else root.format(default_var_names(F.n)),
    }


def cmd_modp(args):
    F = parse_poly(args.poly, ZZ, nvars=2)
    chain = modp_mod.build_chain(F)
    out = chain.to_json_dict()
    out["good_primes"] = modp_mod.good_primes(chain, args.primes_to)
    return out


def _census_payload(rep):
    return json.loads(rep.to_json())


def cmd_census(args):
    method = args.method
    out = []
    if args.n == 1:
        u = census_mod.count_uni(args.q, args.d)
        payload = {
            "q": u.q,
            "d": u.d,
            "n": 1,
            "N": str(u.total),
            "method": u.method,
            "D_lower": str(u.lower),
            "D_upper": str(u.upper),
        }
        if u.exact is not None:
            payload["D"] = str(u.exact)
        if u.alpha is not None:
            payload["alpha"] = _frac(u.alpha)
        out.append(payload)
        if method in ("enumeration", "all"):
            rep = census_mod.enumerate_census(args.q, 1, args.d, guard=args.guard)
            out.append(_census_payload(rep))
            agree = u.exact is None or u.exact == rep.decomposable
            agree = agree and u.lower <= rep.decomposable <= u.upper
            out.append({"agreement": bool(agree)})
        return out
    reps = {}
    if method in ("closed", "all"):
        closed = census_mod.count_closed_small(args.q, args.n, args.d)
        if closed is not None:
            total = census_mod.count_total(args.q, args.n, args.d)
            reps["closed"] = census_mod.CensusReport(
                args.q, args.n, args.d, total, total - closed, closed, "closed"
            )
        elif method == "closed":
            raise ValueError("no closed form: degree has three or more prime factors")
    if method in ("recursion", "all"):
        reps["recursion"] = census_mod.count_recursive(args.q, args.n, args.d)
    if method in ("enumeration", "all"):
        if args.jobs > 1:
            reps["enumeration"] = census_mod.enumerate_census_parallel(
                args.q, args.n, args.d, args.jobs, guard=args.guard
            )
        else:
            reps["enumeration"] = census_mod.enumerate_census(args.q, args.n, args.d, guard=args.guard)
    for name in ("closed", "recursion", "enumeration"):
        if name in reps:
            out.append(_census_payload(reps[name]))
    if method == "all":
        vals = {(r.total, r.indecomposable, r.decomposable) for r in reps.values()}
        out.append({"agreement": len(vals) == 1})
    return out


def cmd_enumerate(args):
    if args.jobs > 1:
        rep = census_mod.enumerate_census_parallel(args.q, args.n, args.d, args.jobs, guard=args.guard)
    else:
        rep = census_mod.enumerate_census(args.q, args.n, args.d, guard=args.guard)
    return _census_payload(rep)


def cmd_check_bounds(args):
    rep = census_mod.bounds_check_n2(args.q, args.d)
    return {
        "q": rep.q,
        "d": rep.d,
        "alpha": _frac(rep.alpha),
        "beta": _frac(rep.beta),
        "ratio": _frac(rep.ratio),
        "holds": rep.holds,
    }


def cmd_bd_lemma(args):
    return {"d_max": args.dmax, "holds": census_mod.bd_lemma_check(args.dmax)}


def build_parser():
    top = argparse.ArgumentParser(
        prog=PROG,
        description="indecomposable polynomials over finite fields: spectra, "
        "decomposition, mod-p criteria, exact censuses",
    )
    top.add_argument("--format", choices=("json", "text"), default="json")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--guard", type=int, default=census_mod.guard_from_env())
        return p

    p = add("spectrum", cmd_spectrum, "spectral values of an indecomposable polynomial")
    p.add_argument("--field", required=True, help="p or p^k")
    p.add_argument("poly")

    p = add("decompose", cmd_decompose, "functional decompositions u(H)")
    p.add_argument("--field", required=True)
    p.add_argument("--outer-degree", type=int, default=None)
    p.add_argument("poly")

    p = add("indec", cmd_indec, "indecomposability test")
    p.add_argument("--field", required=True)
    p.add_argument("poly")

    p = add("pthpower", cmd_pthpower, "p-th power detection and root extraction")
    p.add_argument("--field", required=True)
    p.add_argument("poly")

    p = add("modp", cmd_modp, "discriminant chain and good primes")
    p.add_argument("--primes-to", type=int, default=50)
    p.add_argument("poly")

    p = add("census", cmd_census, "counts of (in)decomposable polynomials")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=("closed", "recursion", "enumeration", "all"),
                   default="all")
    p.add_argument("--jobs", type=int, default=1)

    p = add("enumerate", cmd_enumerate, "exhaustive census scan")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = add("check-bounds", cmd_check_bounds, "two-variable ratio bounds")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("bd-lemma", cmd_bd_lemma, "integer inequalities behind the bounds")
    p.add_argument("--dmax", type=int, default=10000)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.fn(args)
    except (ParseError, SpectrumUnbounded, GuardExceeded, ValueError,
            ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(payload, list):
        for item in payload:
            _emit(item, args.format)
    else:
        _emit(payload, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
