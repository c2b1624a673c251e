"""Command-line front end: every library operation behind one subcommand,
with text (default), JSON, and CSV output.

Mathematical inputs are exact rationals ('p/q' or integers); float literals
are rejected.  JSON payloads are schema-versioned under "v": 1 and carry
provenance (operation, parameters, bound).  Output is byte-stable for fixed
parameters: no timestamps, sorted keys.  Exit codes: 0 success, 1 domain or
parameter errors, 2 bounded-search-exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import certificates as certs
from . import core, density, digit_prefix, primes, quadratic
from .errors import BoundedSearchExhausted, FracdenseError, ParameterError
from .exact import fmt_rational, parse_rational
from .sets import (
    APIntegerSet,
    APPrimeSet,
    DigitPrefixSet,
    ExplicitSet,
)
from .primes import APFamily

# operation registry: public operation -> its unique subcommand
COMMAND_TABLE = {
    "core.quotient_set": "quotient",
    "core.coverage_check": "coverage",
    "core.brute_force_gap_check": "brute-gap",
    "sets.enumerate_upto": "enumerate",
    "digit_prefix.classify": "classify",
    "digit_prefix.approximate": "approximate",
    "digit_prefix.gap_certificate": "gap",
    "density.density_estimate": "density",
    "density.ratio_in_window": "ratio-window",
    "density.finite_denominator_gap": "finite-v-gap",
    "primes.primes_in_interval": "primes-interval",
    "primes.primes_in_geometric_intervals": "lemma1",
    "primes.prime_count_diagnostic": "dirichlet",
    "primes.prime_ratio_in_window": "theorem7",
    "quadratic.Ideal.elements_upto": "ideal-enum",
    "quadratic.classify_band": "band-classify",
    "quadratic.band_gap_certificates": "band-gaps",
    "quadratic.quad_prime_elements": "quad-primes",
    "quadratic.bertrand_probe": "bertrand-probe",
    "quadratic.banded_prime_selection": "theorem6",
    "quadratic.away_round": "away-round",
    "quadratic.ideal_rounding_witnesses": "witness",
    "quadratic.partition_coverage_check": "partition-check",
    "certificates.verify": "cert-verify",
    "certificates.serialize": "cert-cat",
}


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    if isinstance(obj, quadratic.QuadInt):
        return {"x": obj.x, "y": obj.y, "norm": obj.norm}
    if isinstance(obj, quadratic.QuadRat):
        return {"x": fmt_rational(obj.x), "y": fmt_rational(obj.y)}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    raise TypeError(f"cannot encode {type(obj)!r}")


def _parse_set(spec: str):
    """'kind:comma-args' -> integer set descriptor."""
    if ":" not in spec:
        raise ParameterError(f"set spec needs kind:args, got {spec!r}")
    kind, _, rest = spec.partition(":")
    args = [a for a in rest.split(",") if a]
    try:
        if kind == "digit-prefix":
            a, c, b = map(int, args)
            return DigitPrefixSet(a, c, b, include_powers=False)
        if kind == "digit-prefix-with-powers":
            a, c, b = map(int, args)
            return DigitPrefixSet(a, c, b, include_powers=True)
        if kind == "ap-integers":
            a, m = map(int, args)
            return APIntegerSet(a, m)
        if kind == "ap-primes":
            a, m = map(int, args)
            return APPrimeSet(APFamily(a, m))
        if kind == "explicit-list":
            return ExplicitSet(tuple(int(a) for a in args))
    except ValueError as exc:
        raise ParameterError(f"bad set spec {spec!r}: {exc}") from exc
    raise ParameterError(f"unknown set kind {kind!r}")


def _parse_class(spec: str) -> APFamily:
    if "/" not in spec:
        raise ParameterError(f"class spec needs a/m, got {spec!r}")
    a, m = spec.split("/", 1)
    return APFamily(int(a), int(m))


def _parse_pair(spec: str) -> tuple[Fraction, Fraction]:
    parts = spec.split(",")
    if len(parts) != 2:
        raise ParameterError(f"expected 'lo,hi', got {spec!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def _parse_quadrat(spec: str, d: int) -> quadratic.QuadRat:
    parts = spec.split(",")
    if len(parts) != 2:
        raise ParameterError(f"expected 'x,y' ring coordinates, got {spec!r}")
    return quadratic.QuadRat(parse_rational(parts[0]), parse_rational(parts[1]), d)


def _parse_quadint(spec: str, d: int) -> quadratic.QuadInt:
    parts = spec.split(",")
    if len(parts) != 2:
        raise ParameterError(f"expected 'x,y' integer coordinates, got {spec!r}")
    return quadratic.QuadInt(int(parts[0]), int(parts[1]), d)


def _parse_ideal(spec: str, d: int) -> quadratic.Ideal:
    gens = spec.split(";")
    if len(gens) != 2:
        raise ParameterError(f"expected 'x1,y1;x2,y2' generators, got {spec!r}")
    return quadratic.Ideal(_parse_quadint(gens[0], d), _parse_quadint(gens[1], d))


def _emit(args, op: str, params: dict, result, csv_rows=None, text_lines=None):
    payload = {"v": 1, "op": op, "params": _jsonable(params), "result": _jsonable(result)}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows or [["result"], [json.dumps(_jsonable(result), sort_keys=True)]]:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines or [json.dumps(payload["result"], sort_keys=True)]:
            print(line)


def _add_format_flags(p: argparse.ArgumentParser):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--csv", dest="format", action="store_const", const="csv")
    g.add_argument("--text", dest="format", action="store_const", const="text")
    p.set_defaults(format="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fracdense",
        description="quotient-set density experiments and gap certificates",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_format_flags(p)
        return p

    p = cmd("enumerate", help="list a set's members up to a bound")
    p.add_argument("--set", required=True)
    p.add_argument("--bound", type=int, required=True)

    p = cmd("quotient", help="the quotient set of a set pair")
    p.add_argument("--numer", required=True)
    p.add_argument("--denom", required=True)
    p.add_argument("--bound", type=int, required=True)

    p = cmd("coverage", help="epsilon-net coverage of a rational grid")
    p.add_argument("--numer")
    p.add_argument("--denom")
    p.add_argument("--grid", required=True, help="comma list; with --d use x:y pairs")
    p.add_argument("--eps", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--d", type=int, help="run over Z[sqrt(-d)] instead of N")

    p = cmd("brute-gap", help="exhaustive region hit check")
    p.add_argument("--numer")
    p.add_argument("--denom")
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--d", type=int, help="annulus check over Z[sqrt(-d)] norms")
    p.add_argument("--band", choices=["A", "B", "C"])

    p = cmd("classify", help="density dichotomy for a leading-block family")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = cmd("approximate", help="approximate a target by the family-with-powers")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--eps", required=True)

    p = cmd("gap", help="emit (and optionally verify) a family gap certificate")
    p.add_argument("--family", required=True, help="a,c,b")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--verify-bound", type=int)

    p = cmd("density", help="natural/lower/relative density estimates")
    p.add_argument("--set", required=True)
    p.add_argument("--mode", choices=["natural", "lower", "relative"], required=True)
    p.add_argument("--points", required=True, help="comma list of sample points")

    p = cmd("ratio-window", help="find u/v inside a window (lo, hi]")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--window", required=True, help="lo,hi")
    p.add_argument("--gamma-hat", default="1/10")
    p.add_argument("--bound", type=int, default=10**6)

    p = cmd("finite-v-gap", help="certified interval free of U/V for finite V")
    p.add_argument("--u", required=True)
    p.add_argument("--v-values", required=True, help="comma list")
    p.add_argument("--target", required=True)
    p.add_argument("--verify-bound", type=int)

    p = cmd("primes-interval", help="class primes in [lo, hi]")
    p.add_argument("--class", dest="klass", required=True, help="a/m")
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--ceiling", type=int, default=primes.DEFAULT_SIEVE_CEILING)

    p = cmd("lemma1", help="least class prime per geometric interval")
    p.add_argument("--class", dest="klass", required=True, help="a/m")
    p.add_argument("--alpha", required=True)
    p.add_argument("--n-lo", type=int, required=True)
    p.add_argument("--n-hi", type=int, required=True)
    p.add_argument("--ceiling", type=int, default=primes.DEFAULT_SIEVE_CEILING)

    p = cmd("dirichlet", help="counting diagnostic G(x) (and L when --alpha given)")
    p.add_argument("--class", dest="klass", required=True, help="a/m")
    p.add_argument("--x", required=True, help="comma list of integer points")
    p.add_argument("--alpha")

    p = cmd("theorem7", help="class primes p, q with p/q in a window")
    p.add_argument("--p-class", required=True, help="a/m")
    p.add_argument("--q-class", required=True, help="b/n")
    p.add_argument("--window", required=True, help="c,d")
    p.add_argument("--ceiling", type=int, default=primes.DEFAULT_SIEVE_CEILING)

    p = cmd("band-classify", help="norm band of a ring element")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)

    p = cmd("band-gaps", help="gap annuli for a norm band")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--band", choices=["A", "B", "C"], required=True)
    p.add_argument("--l-lo", type=int, default=0)
    p.add_argument("--l-hi", type=int, default=0)
    p.add_argument("--verify-bound", type=int)

    p = cmd("ideal-enum", help="ideal elements up to a norm bound")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gens", required=True, help="x1,y1;x2,y2")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--exclude-zero", action="store_true")

    p = cmd("quad-primes", help="prime elements up to a norm bound")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)

    p = cmd("bertrand-probe", help="probe a Bertrand parameter on a geometric grid")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--x-lo", required=True)
    p.add_argument("--x-hi", required=True)

    p = cmd("theorem6", help="banded prime selection plus its annulus certificate")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--verify-bound", type=int)

    p = cmd("away-round", help="away-from-zero rounding of a rational")
    p.add_argument("--x", required=True)

    p = cmd("witness", help="rounded ideal witnesses s, t, t'")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gens", required=True, help="x1,y1;x2,y2")
    p.add_argument("--gamma", required=True, help="x,y (integers)")
    p.add_argument("--alpha", required=True, help="x,y (rationals)")
    p.add_argument("--beta", required=True, help="x,y (rationals)")
    p.add_argument("--eps")

    p = cmd("partition-check", help="two-coloring coverage over an ideal")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gens", default="1,0;0,0", help="x1,y1;x2,y2")
    p.add_argument(
        "--coloring",
        required=True,
        help="finite-c:x1,y1;x2,y2 | norm-parity | random:seed",
    )
    p.add_argument("--grid-n", type=int, default=10)
    p.add_argument("--eps", default="1/10")
    p.add_argument("--bound", type=int, required=True)

    p = cmd("cert-verify", help="re-verify a serialized certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--bound", type=int, required=True)

    p = cmd("cert-cat", help="parse and canonically re-serialize a certificate")
    p.add_argument("--cert", required=True)

    return ap


def _dispatch(args) -> int:
    name = args.command
    if name == "enumerate":
        s = _parse_set(args.set)
        els = [int(v) for v in s.enumerate_upto(args.bound)]
        _emit(
            args, name, {"set": args.set, "bound": args.bound}, els,
            csv_rows=[["element"], *[[e] for e in els]],
            text_lines=[" ".join(map(str, els))],
        )
        return 0
    if name == "quotient":
        ratios = core.quotient_set(_parse_set(args.numer), _parse_set(args.denom), args.bound)
        _emit(
            args, name,
            {"numer": args.numer, "denom": args.denom, "bound": args.bound},
            ratios,
            csv_rows=[["ratio"], *[[fmt_rational(r)] for r in ratios]],
            text_lines=[" ".join(fmt_rational(r) for r in ratios)],
        )
        return 0
    if name == "coverage":
        eps = parse_rational(args.eps)
        if args.d is not None:
            sd = quadratic.QuadIdealSet(args.d)
            grid = [
                tuple(parse_rational(t) for t in g.split(":"))
                for g in args.grid.split(",")
            ]
            rep = core.coverage_check(sd, sd, grid, eps, args.bound)
        else:
            numer = _parse_set(args.numer)
            denom = _parse_set(args.denom) if args.denom else numer
            grid = [parse_rational(g) for g in args.grid.split(",")]
            rep = core.coverage_check(numer, denom, grid, eps, args.bound)
        result = {
            "mode": rep.mode,
            "coverage_fraction": rep.coverage_fraction,
            "best": list(rep.best),
            "covered": list(rep.covered),
        }
        _emit(
            args, name,
            {"grid": args.grid, "eps": args.eps, "bound": args.bound, "d": args.d},
            result,
            csv_rows=[["target", "best", "covered"],
                      *[[str(t), "" if b is None else fmt_rational(b), c]
                        for t, b, c in zip(rep.targets, rep.best, rep.covered)]],
            text_lines=[f"coverage {fmt_rational(rep.coverage_fraction)}"],
        )
        return 0
    if name == "brute-gap":
        lo, hi = parse_rational(args.lo), parse_rational(args.hi)
        if args.d is not None:
            from .regions import Annulus

            if args.band:
                s = quadratic.NormBandSet(args.d, args.band)
            else:
                s = quadratic.QuadIdealSet(args.d)
            res = core.brute_force_gap_check(s, s, Annulus(lo, hi), args.bound)
        else:
            from .regions import Interval

            numer = _parse_set(args.numer)
            denom = _parse_set(args.denom) if args.denom else numer
            res = core.brute_force_gap_check(numer, denom, Interval(lo, hi), args.bound)
        result = {"hit": res.hit, "witness": res.witness, "ratio": res.ratio, "bound": res.bound}
        _emit(args, name, {"lo": args.lo, "hi": args.hi, "bound": args.bound}, result,
              text_lines=[f"hit={res.hit}" + (f" witness={res.witness}" if res.hit else "")])
        return 0
    if name == "classify":
        fam = DigitPrefixSet(args.a, args.c, args.b, include_powers=True)
        label = digit_prefix.classify(fam).value
        _emit(args, name, {"a": args.a, "c": args.c, "b": args.b}, label,
              text_lines=[label])
        return 0
    if name == "approximate":
        fam = DigitPrefixSet(args.a, args.c, args.b, include_powers=True)
        res = digit_prefix.approximate(fam, parse_rational(args.target), parse_rational(args.eps))
        result = {
            "numerator": res.numerator,
            "denominator": res.denominator,
            "value": res.value,
            "error": res.achieved_error,
        }
        _emit(args, name,
              {"a": args.a, "c": args.c, "b": args.b, "target": args.target, "eps": args.eps},
              result,
              csv_rows=[["numerator", "denominator", "error"],
                        [res.numerator, res.denominator, fmt_rational(res.achieved_error)]],
              text_lines=[f"{res.numerator}/{res.denominator} error={fmt_rational(res.achieved_error)}"])
        return 0
    if name == "gap":
        a, c, b = (int(v) for v in args.family.split(","))
        fam = DigitPrefixSet(a, c, b, include_powers=False)
        cert = digit_prefix.gap_certificate(fam, args.j)
        if args.verify_bound:
            outcome = certs.verify(cert, fam, fam, args.verify_bound)
            if not outcome.verified:
                _emit(args, name, {"family": args.family, "j": args.j},
                      {"refuted": True, "witness": list(outcome.witness)},
                      text_lines=[f"REFUTED witness={outcome.witness}"])
                return 1
            cert = outcome.certificate
        line = certs.serialize(cert)
        _emit(args, name, {"family": args.family, "j": args.j},
              {"certificate": line}, text_lines=[line],
              csv_rows=[["certificate"], [line]])
        return 0
    if name == "density":
        s = _parse_set(args.set)
        points = [int(x) for x in args.points.split(",")]
        est = density.density_estimate(s, args.mode, points)
        result = {
            "points": list(est.points),
            "counts": list(est.counts),
            "ratios": list(est.ratios),
            "running_min": list(est.running_min) if est.running_min else None,
        }
        _emit(args, name, {"set": args.set, "mode": args.mode}, result,
              csv_rows=[["X", "count", "ratio"],
                        *[[x, cnt, fmt_rational(r)]
                          for x, cnt, r in zip(est.points, est.counts, est.ratios)]],
              text_lines=[f"X={x} count={cnt} ratio={fmt_rational(r)}"
                          for x, cnt, r in zip(est.points, est.counts, est.ratios)])
        return 0
    if name == "ratio-window":
        lo, hi = _parse_pair(args.window)
        res = density.ratio_in_window(
            _parse_set(args.u), _parse_set(args.v), lo, hi,
            parse_rational(args.gamma_hat), args.bound,
        )
        _emit(args, name, {"window": args.window, "bound": args.bound},
              {"u": res.u, "v": res.v, "ratio": res.ratio},
              text_lines=[f"{res.u}/{res.v} = {fmt_rational(res.ratio)}"])
        return 0
    if name == "finite-v-gap":
        u = _parse_set(args.u)
        v = ExplicitSet(tuple(int(x) for x in args.v_values.split(",")))
        cert = density.finite_denominator_gap(u, v, parse_rational(args.target))
        if args.verify_bound:
            outcome = certs.verify(cert, u, v, args.verify_bound)
            if not outcome.verified:
                _emit(args, name, {"target": args.target},
                      {"refuted": True, "witness": list(outcome.witness)},
                      text_lines=[f"REFUTED witness={outcome.witness}"])
                return 1
            cert = outcome.certificate
        line = certs.serialize(cert)
        _emit(args, name, {"u": args.u, "v": args.v_values, "target": args.target},
              {"certificate": line}, text_lines=[line])
        return 0
    if name == "primes-interval":
        fam = _parse_class(args.klass)
        ps = primes.primes_in_interval(fam, args.lo, args.hi, args.ceiling)
        _emit(args, name,
              {"class": args.klass, "lo": args.lo, "hi": args.hi}, ps,
              csv_rows=[["prime"], *[[p] for p in ps]],
              text_lines=[" ".join(map(str, ps))])
        return 0
    if name == "lemma1":
        fam = _parse_class(args.klass)
        rows = primes.primes_in_geometric_intervals(
            fam, parse_rational(args.alpha), range(args.n_lo, args.n_hi + 1), args.ceiling
        )
        result = [{"n": r.n, "lo": r.lo, "hi": r.hi, "prime": r.prime} for r in rows]
        _emit(args, name, {"class": args.klass, "alpha": args.alpha}, result,
              csv_rows=[["n", "least_prime"], *[[r.n, r.prime if r.prime else ""] for r in rows]],
              text_lines=[f"n={r.n} prime={r.prime}" for r in rows])
        return 0
    if name == "dirichlet":
        fam = _parse_class(args.klass)
        xs = [int(x) for x in args.x.split(",")]
        alpha = parse_rational(args.alpha) if args.alpha else None
        rows = primes.prime_count_diagnostic(fam, xs, alpha)
        result = [{"x": r.x, "count": r.class_count, "G": r.G,
                   "G_float": float(r.G), "L": r.L} for r in rows]
        _emit(args, name, {"class": args.klass, "x": args.x}, result,
              csv_rows=[["x", "count", "G"], *[[r.x, r.class_count, float(r.G)] for r in rows]],
              text_lines=[f"x={r.x} G={float(r.G):.6f}" for r in rows])
        return 0
    if name == "theorem7":
        lo, hi = _parse_pair(args.window)
        res = primes.prime_ratio_in_window(
            _parse_class(args.p_class), _parse_class(args.q_class), lo, hi, args.ceiling
        )
        _emit(args, name,
              {"p_class": args.p_class, "q_class": args.q_class, "window": args.window},
              {"p": res.p, "q": res.q, "ratio": res.ratio, "alpha": res.alpha},
              csv_rows=[["p", "q", "ratio"], [res.p, res.q, fmt_rational(res.ratio)]],
              text_lines=[f"p={res.p} q={res.q} ratio={fmt_rational(res.ratio)}"])
        return 0
    if name == "band-classify":
        z = quadratic.QuadInt(args.x, args.y, args.d)
        band = quadratic.classify_band(z)
        _emit(args, name, {"d": args.d, "x": args.x, "y": args.y},
              {"band": band, "norm": z.norm},
              text_lines=[f"band={band} norm={z.norm}"])
        return 0
    if name == "band-gaps":
        out = quadratic.band_gap_certificates(
            args.d, args.band, range(args.l_lo, args.l_hi + 1)
        )
        if args.verify_bound:
            s = quadratic.NormBandSet(args.d, args.band)
            refreshed = []
            for cert in out:
                outcome = certs.verify(cert, s, s, args.verify_bound)
                if not outcome.verified:
                    _emit(args, name, {"d": args.d, "band": args.band},
                          {"refuted": True, "witness": [str(w) for w in outcome.witness]},
                          text_lines=["REFUTED"])
                    return 1
                refreshed.append(outcome.certificate)
            out = refreshed
        lines = [certs.serialize(c) for c in out]
        _emit(args, name, {"d": args.d, "band": args.band},
              {"certificates": lines}, text_lines=lines,
              csv_rows=[["certificate"], *[[l] for l in lines]])
        return 0
    if name == "ideal-enum":
        ideal = _parse_ideal(args.gens, args.d)
        els = ideal.elements_upto(args.bound, include_zero=not args.exclude_zero)
        _emit(args, name, {"d": args.d, "gens": args.gens, "bound": args.bound},
              els,
              csv_rows=[["x", "y", "norm"], *[[z.x, z.y, z.norm] for z in els]],
              text_lines=[" ".join(f"({z.x},{z.y})" for z in els)])
        return 0
    if name == "quad-primes":
        els = list(quadratic.quad_prime_elements(args.d, args.bound))
        _emit(args, name, {"d": args.d, "bound": args.bound}, els,
              csv_rows=[["x", "y", "norm"], *[[z.x, z.y, z.norm] for z in els]],
              text_lines=[" ".join(f"({z.x},{z.y})" for z in els)])
        return 0
    if name == "bertrand-probe":
        res = quadratic.bertrand_probe(
            args.d, parse_rational(args.B), parse_rational(args.x_lo), parse_rational(args.x_hi)
        )
        _emit(args, name, {"d": args.d, "B": args.B},
              {"ok": res.ok, "counterexample": res.counterexample,
               "grid_points": res.grid_points},
              text_lines=[f"ok={res.ok}" + ("" if res.ok else f" counterexample={res.counterexample}")])
        return 0
    if name == "theorem6":
        sel = quadratic.banded_prime_selection(args.d, parse_rational(args.B), args.n_max)
        cert = sel.certificate
        if args.verify_bound:
            s = quadratic.QuadPrimeBandSet(args.d, sel.bertrand, args.n_max)
            outcome = certs.verify(cert, s, s, args.verify_bound)
            if not outcome.verified:
                _emit(args, name, {"d": args.d}, {"refuted": True},
                      text_lines=["REFUTED"])
                return 1
            cert = outcome.certificate
        line = certs.serialize(cert)
        _emit(args, name, {"d": args.d, "B": args.B, "n_max": args.n_max},
              {"elements": list(sel.elements), "pairwise_verified": sel.pairwise_verified,
               "certificate": line},
              csv_rows=[["n", "x", "y", "norm"],
                        *[[i + 1, z.x, z.y, z.norm] for i, z in enumerate(sel.elements)]],
              text_lines=[*(f"n={i+1} ({z.x},{z.y}) norm={z.norm}"
                            for i, z in enumerate(sel.elements)), line])
        return 0
    if name == "away-round":
        val = quadratic.away_round(parse_rational(args.x))
        _emit(args, name, {"x": args.x}, val, text_lines=[str(val)])
        return 0
    if name == "witness":
        ideal = _parse_ideal(args.gens, args.d)
        res = quadratic.ideal_rounding_witnesses(
            _parse_quadint(args.gamma, args.d),
            _parse_quadrat(args.alpha, args.d),
            _parse_quadrat(args.beta, args.d),
            ideal,
            parse_rational(args.eps) if args.eps else None,
        )
        _emit(args, name, {"d": args.d, "gens": args.gens},
              {"s": res.s, "t": res.t, "t_prime": res.t_prime,
               "defect_s_sq": res.defect_s_sq, "defect_t_sq": res.defect_t_sq,
               "defect_tp_sq": res.defect_tp_sq, "envelope_sq": res.envelope_sq,
               "n0": res.n0, "gamma_large_enough": res.gamma_large_enough},
              text_lines=[f"s=({res.s.x},{res.s.y}) t=({res.t.x},{res.t.y}) "
                          f"t'=({res.t_prime.x},{res.t_prime.y})"])
        return 0
    if name == "partition-check":
        ideal = _parse_ideal(args.gens, args.d)
        coloring = _build_coloring(args.coloring, args.d)
        n = args.grid_n
        grid = [
            (Fraction(i, n + 1), Fraction(j, n + 1))
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        ]
        rep = quadratic.partition_coverage_check(
            ideal, coloring, grid, parse_rational(args.eps), args.bound
        )
        _emit(args, name,
              {"d": args.d, "coloring": args.coloring, "bound": args.bound},
              {"dense_side": rep.dense_side,
               "c_coverage": rep.c_report.coverage_fraction,
               "d_coverage": rep.d_report.coverage_fraction,
               "c_size": rep.c_size, "d_size": rep.d_size},
              text_lines=[f"dense-side={rep.dense_side} "
                          f"C={fmt_rational(rep.c_report.coverage_fraction)} "
                          f"D={fmt_rational(rep.d_report.coverage_fraction)}"])
        return 0
    if name == "cert-verify":
        cert = certs.deserialize(args.cert)
        numer, denom = certs.default_sets_for(cert)
        outcome = certs.verify(cert, numer, denom, args.bound)
        if not outcome.verified:
            _emit(args, name, {"bound": args.bound},
                  {"verified": False, "witness_ratio": outcome.witness_ratio},
                  text_lines=[f"REFUTED ratio={outcome.witness_ratio}"])
            return 1
        line = certs.serialize(outcome.certificate)
        _emit(args, name, {"bound": args.bound},
              {"verified": True, "certificate": line}, text_lines=[line])
        return 0
    if name == "cert-cat":
        cert = certs.deserialize(args.cert)
        line = certs.serialize(cert)
        _emit(args, name, {}, {"certificate": line}, text_lines=[line])
        return 0
    raise ParameterError(f"unknown command {name!r}")


def _build_coloring(spec: str, d: int):
    if spec == "norm-parity":
        return lambda z: "C" if z.norm % 2 == 0 else "D"
    if spec.startswith("finite-c:"):
        pts = set()
        for part in spec.split(":", 1)[1].split(";"):
            x, y = (int(v) for v in part.split(","))
            pts.add((x, y))
        return lambda z: "C" if (z.x, z.y) in pts else "D"
    if spec.startswith("random:"):
        import random

        seed = int(spec.split(":", 1)[1])

        def color(z):
            h = random.Random((seed, z.x, z.y)).random()
            return "C" if h < 0.5 else "D"

        return color
    raise ParameterError(f"unknown coloring spec {spec!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return _dispatch(args)
    except BoundedSearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FracdenseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
