"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 computation error, 4 a requested
check failed.  ``--prec`` is always in decimal digits.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import curvezeta as cz
from . import masscalc as mc
from . import periods as pd
from . import rootsys as rsys
from . import wittenvol as wv
from . import zetassembly as za
from .exactmath import HPNumber, digits_to_bits, format_fraction, make_context
from .records import read_curve, read_table

EXIT_OK, EXIT_INPUT, EXIT_COMPUTE, EXIT_CHECK = 0, 2, 3, 4


class CheckFailed(Exception):
    def __init__(self, output: str, message: str):
        super().__init__(message)
        self.output = output


def _bits(dps: int) -> int:
    if dps < 1:
        raise ValueError("--prec must be a positive number of digits")
    return max(64, digits_to_bits(dps))


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def _dump(rec) -> str:
    return json.dumps(rec, indent=2) + "\n"


# -- curve ------------------------------------------------------------------

def cmd_curve(args) -> str:
    curve = read_curve(args.infile)
    if args.sub == "zeta":
        return f"({curve.P})/((1-t)(1-{curve.q}t))\n"
    if args.sub == "special":
        return format_fraction(cz.zeta_special_value(curve, args.k)) + "\n"
    if args.sub == "divisors":
        counts = cz.effective_divisor_counts(curve, args.dmax)
        return "d,count\n" + "".join(f"{d},{c}\n" for d, c in enumerate(counts))
    if args.sub == "rh":
        rep = cz.rh_check(curve, args.tol)
        dps = 20
        out = _dump(
            {
                "roots": [_cnum(r, dps) for r in rep.roots],
                "max_deviation": rep.max_deviation.digits(6),
                "tolerance": repr(args.tol),
                "passed": rep.passed,
            }
        )
        if not rep.passed:
            raise CheckFailed(out, "root moduli deviate beyond tolerance")
        return out
    raise ValueError(args.sub)


def _cnum(z, dps: int) -> str:
    import mpmath

    return mpmath.nstr(mpmath.mpc(z), dps)


def _real(x, dps: int) -> str:
    import mpmath

    return mpmath.nstr(mpmath.mpf(x), dps)


# -- mass -------------------------------------------------------------------

def cmd_mass(args) -> str:
    sub = args.sub
    if sub in ("siegel", "wengss"):
        fn = mc.siegel_volume_nf if sub == "siegel" else mc.weng_semistable_volume_nf
        return fn(args.n, _bits(args.prec)).digits(args.prec) + "\n"
    if sub == "ks":
        bits = _bits(args.prec)
        ss = {k: mc.weng_semistable_volume_nf(k, bits + 32) for k in range(1, args.n + 1)}
        rhs = mc.ks_total_from_semistable(args.n, ss, args.convention, bits)
        ctx = make_context(bits)
        lhs = ctx.mpf(mc.siegel_volume_nf(args.n, bits).value) / args.n
        return _dump(
            {
                "n": args.n,
                "convention": args.convention,
                "rhs": rhs.digits(args.prec),
                "m_n_over_n": HPNumber(lhs, bits).digits(args.prec),
                "difference": HPNumber(rhs.value - lhs, bits).digits(10),
            }
        )
    if sub == "invcheck":
        return _dump(mc.inversion_consistency(args.nmax))
    if sub == "table" and args.field == "number":
        return mc.nf_mass_table(args.nmax, _bits(args.prec), args.kind).to_text()

    curve = read_curve(args.infile)
    if sub == "total":
        return format_fraction(mc.total_mass_ff(curve, args.n)) + "\n"
    if sub == "zagier":
        return format_fraction(mc.zagier_semistable_mass(curve, args.n, args.d)) + "\n"
    if sub == "hnseries":
        p = mc.hn_series_partial(curve, args.n, args.d, args.cap)
        return _dump(
            {
                "n": args.n,
                "d": args.d,
                "weight_cap": args.cap,
                "partial_sum": format_fraction(p.partial_sum),
                "last_shell": format_fraction(p.last_shell),
            }
        )
    if sub == "wzavg":
        chk = mc.wz_average_identity(curve, args.n)
        out = f"{format_fraction(chk.lhs)} = {format_fraction(chk.rhs)}: {'pass' if chk.passed else 'fail'}\n"
        if not chk.passed:
            raise CheckFailed(out, "average identity fails")
        return out
    if sub == "wzind":
        r = mc.wz_individual_mass(curve, args.n, args.d, _bits(args.prec))
        return _dump(
            {
                "n": args.n,
                "d": args.d,
                "value": r.value.digits(args.prec),
                "imag_residual": r.imag_residual.digits(6),
                "reference": format_fraction(r.reference),
                "deviation": r.deviation.digits(args.prec),
            }
        )
    if sub == "table":
        return mc.ff_mass_table(curve, args.nmax, args.kind).to_text()
    raise ValueError(sub)


# -- zeta assembly ----------------------------------------------------------

def _random_table(rng: random.Random, g: int, n: int) -> za.AlphaBetaTable:
    def r(lo):
        return Fraction(rng.randint(lo, 60), rng.randint(1, 12))

    base = Fraction(rng.choice([2, 3, 4, 5, 7, 9]))
    if rng.random() < 0.3:
        base = Fraction(rng.randint(3, 19), 2)  # non-integral base
    return za.AlphaBetaTable(n, g, base, tuple(r(0) for _ in range(g)), r(1))


def cmd_zeta(args) -> str:
    if args.sub == "fe-random":
        rng = random.Random(args.seed)
        fails = 0
        lines = []
        for i in range(args.count):
            t = _random_table(rng, rng.randint(0, 4), rng.randint(1, 3))
            z = za.assemble_zeta(t)
            fe = za.functional_equation_check(z).passed
            res = za.residue_at_one(z) == t.beta
            fails += not (fe and res)
            lines.append(f"{i},{t.g},{t.n},{t.base},{'pass' if fe else 'fail'},{'pass' if res else 'fail'}\n")
        out = "case,g,n,base,fe,residue\n" + "".join(lines)
        if fails:
            raise CheckFailed(out, f"{fails} randomized tables failed")
        return out
    if args.sub == "pipeline":
        return za.rank_one_pipeline(read_curve(args.infile)).to_text()
    table = read_table(args.table)
    z = za.assemble_zeta(table, args.form)
    if args.sub == "assemble":
        num = za.extract_numerator(z)
        lines = [
            f"Z: {z.Z}\n",
            "numerator: " + ",".join(format_fraction(c) for c in (num.coeffs or (0,))) + "\n",
        ]
        if args.check_fe:
            ok = za.functional_equation_check(z).passed
            lines.append(f"FE: {'pass' if ok else 'fail'}\n")
            if not ok:
                raise CheckFailed("".join(lines), "functional equation fails")
        return "".join(lines)
    if args.sub == "residue":
        return format_fraction(za.residue_at_one(z)) + "\n"
    if args.sub == "roots":
        scan = za.numerator_root_scan(z, _bits(args.prec))
        if not scan:
            return "no roots\n"
        rows = ["root,abs_times_sqrtQ\n"]
        for root, dev in scan:
            rows.append(f"{_cnum(root, args.prec)},{_real(dev, args.prec)}\n")
        return "".join(rows)
    raise ValueError(args.sub)


# -- root systems -----------------------------------------------------------

def cmd_rootsys(args) -> str:
    if args.sub == "crosscheck":
        return _dump(rsys.sln_coefficient_crosscheck(args.n, _frac(args.q)))
    rs = rsys.build_root_system(args.type, args.rank)
    if args.sub == "info":
        W0 = rsys.enumerate_W0(rs)
        return _dump(
            {
                "type": rs.label,
                "positive_roots": [[str(x) for x in a] for a in rs.positive_roots],
                "rho": [str(x) for x in rs.rho],
                "weyl_order": len(rs.weyl),
                "exponent_counts": {str(k): v for k, v in rsys.exponent_counts(rs).items()},
                "coweight_cell_volume": rsys.coweight_cell_volume(rs, _bits(args.prec)).digits(args.prec),
                "W0": [
                    {"mask": P.mask, "J": [j + 1 for j in P.J], "word": "".join(map(str, P.word)) or "e"}
                    for P in W0
                ],
            }
        )
    if args.sub == "coeffs":
        q = _frac(args.q) if args.q is not None else None
        entries = rsys.conjecture_coeffs(rs, args.flavor, q=q, prec=_bits(args.prec), rs_combine=args.combine)
        return ", ".join(f"{e.label}: {e.text}" for e in entries) + "\n"
    if args.sub == "volume":
        bits = _bits(args.prec)
        lv = rsys.langlands_volume(rs, rsys.riemann_zeta_values(rs, bits + 32), args.convention, bits)
        rec = {
            "type": rs.label,
            "convention": lv.convention,
            "value": lv.value.digits(args.prec),
        }
        if lv.siegel is not None:
            rec["siegel_rank_" + str(rs.rank + 1)] = lv.siegel.digits(args.prec)
        return _dump(rec)
    raise ValueError(args.sub)


# -- Witten -----------------------------------------------------------------

def cmd_witten(args) -> str:
    bits = _bits(args.prec)
    if args.sub == "zeta":
        r = wv.witten_zeta_su(args.n, args.s, args.cutoff, bits)
        return f"value: {r.value.digits(args.prec)}\ntail_bound: {r.tail_bound.digits(6)}\n"
    if args.sub == "volume":
        ctx = make_context(bits)
        r = wv.witten_volume(args.n, args.g, ctx.mpf(args.vol_su), args.cutoff, bits)
        return f"value: {r.value.digits(args.prec)}\nuncertainty: {r.uncertainty.digits(6)}\n"
    raise ValueError(args.sub)


# -- periods ----------------------------------------------------------------

def cmd_period(args) -> str:
    curve = read_curve(args.infile)
    cfg = pd.PeriodConfig(args.sign, _bits(args.prec))
    if args.sub == "eval":
        rs = rsys.build_root_system(args.type, args.rank)
        lam = [_frac(x) for x in args.lam.split(",")]
        return pd.period_eval(rs, curve, lam, cfg).digits(args.prec) + "\n"
    if args.sub == "sl2":
        rs = rsys.build_root_system("A", 1)
        samples = [_frac(x) for x in args.samples.split(",") if x.strip()]
        table = read_table(args.table) if args.table else None
        rows, fit = pd.sl2_group_zeta(rs, curve, samples, cfg, table, fit=args.fit)
        out = pd.rows_to_csv(rows, table is not None, args.prec)
        if args.fit:
            if fit is None:
                out += "# fit: not enough finite rows\n"
            else:
                out += f"# exploratory fit: a={fit.a:.12g} b={fit.b:.12g} c={fit.c:.12g} residual={fit.residual:.6g}\n"
        return out
    raise ValueError(args.sub)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zetamass", description="Zeta functions and masses of bundles and lattices.")
    p.add_argument("--out", help="write output to this file instead of stdout")
    top = p.add_subparsers(dest="command", required=True)

    def common(sp, curve=False, prec=None):
        if curve:
            sp.add_argument("--in", dest="infile", required=True, help="curve file (JSON)")
        if prec is not None:
            sp.add_argument("--prec", type=int, default=prec, help="decimal digits")
        sp.add_argument("--out", default=argparse.SUPPRESS, help="output file")
        return sp

    c = top.add_parser("curve", help="Artin zeta data of a curve").add_subparsers(dest="sub", required=True)
    common(c.add_parser("zeta"), curve=True)
    common(c.add_parser("special"), curve=True).add_argument("--k", type=int, required=True)
    common(c.add_parser("divisors"), curve=True).add_argument("--dmax", type=int, required=True)
    common(c.add_parser("rh"), curve=True).add_argument("--tol", type=float, default=1e-12)

    m = top.add_parser("mass", help="masses and volumes").add_subparsers(dest="sub", required=True)
    common(m.add_parser("total"), curve=True).add_argument("--n", type=int, required=True)
    sp = common(m.add_parser("zagier"), curve=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, default=0)
    sp = common(m.add_parser("hnseries"), curve=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, default=0)
    sp.add_argument("--cap", type=int, required=True)
    common(m.add_parser("wzavg"), curve=True).add_argument("--n", type=int, required=True)
    sp = common(m.add_parser("wzind"), curve=True, prec=30)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, default=0)
    common(m.add_parser("siegel"), prec=30).add_argument("--n", type=int, required=True)
    common(m.add_parser("wengss"), prec=30).add_argument("--n", type=int, required=True)
    sp = common(m.add_parser("ks"), prec=30)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--convention", choices=mc.CONVENTIONS, default="A")
    common(m.add_parser("invcheck")).add_argument("--nmax", type=int, required=True)
    sp = m.add_parser("table")
    sp.add_argument("--field", choices=("function", "number"), default="function")
    sp.add_argument("--kind", choices=mc.tables.KINDS, default="semistable_normalized")
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--in", dest="infile", help="curve file (function field)")
    common(sp, prec=30)

    z = top.add_parser("zeta", help="rank-n zeta assembly").add_subparsers(dest="sub", required=True)
    for name in ("assemble", "residue", "roots"):
        sp = common(z.add_parser(name), prec=20)
        sp.add_argument("--table", required=True, help="alpha/beta table (JSON)")
        sp.add_argument("--form", choices=("symmetric", "as_printed"), default="symmetric")
        if name == "assemble":
            sp.add_argument("--check-fe", action="store_true")
    common(z.add_parser("pipeline"), curve=True)
    sp = common(z.add_parser("fe-random"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=200)

    r = top.add_parser("rootsys", help="root systems and parabolic coefficients").add_subparsers(dest="sub", required=True)
    for name in ("info", "coeffs", "volume"):
        sp = common(r.add_parser(name), prec=20)
        sp.add_argument("--type", required=True)
        sp.add_argument("--rank", type=int, required=True)
        if name == "coeffs":
            sp.add_argument("--flavor", choices=("NF", "FF", "RS"), default="NF")
            sp.add_argument("--q", help="field size for FF")
            sp.add_argument("--combine", choices=("product", "sum"), default="product")
        if name == "volume":
            sp.add_argument("--convention", choices=("as_printed", "reciprocal"), default="as_printed")
    sp = common(r.add_parser("crosscheck"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", default="2")

    w = top.add_parser("witten", help="Witten zeta and volumes").add_subparsers(dest="sub", required=True)
    sp = common(w.add_parser("zeta"), prec=20)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--cutoff", type=int, required=True)
    sp = common(w.add_parser("volume"), prec=20)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--vol-su", dest="vol_su", required=True, help="Vol(SU(n)) in the chosen normalization")
    sp.add_argument("--cutoff", type=int, required=True)

    pe = top.add_parser("period", help="Weyl-group periods").add_subparsers(dest="sub", required=True)
    sp = common(pe.add_parser("eval"), curve=True, prec=20)
    sp.add_argument("--type", default="A")
    sp.add_argument("--rank", type=int, default=1)
    sp.add_argument("--lambda", dest="lam", required=True, help="pairings <lam, a_i^vee>, comma separated")
    sp.add_argument("--sign", choices=pd.SIGN_CONVENTIONS, default="all_plus")
    sp = common(pe.add_parser("sl2"), curve=True, prec=20)
    sp.add_argument("--samples", required=True, help="comma separated s values")
    sp.add_argument("--table", help="alpha/beta table for comparison columns")
    sp.add_argument("--fit", action="store_true")
    sp.add_argument("--sign", choices=pd.SIGN_CONVENTIONS, default="all_plus")
    return p


HANDLERS = {
    "curve": cmd_curve,
    "mass": cmd_mass,
    "zeta": cmd_zeta,
    "rootsys": cmd_rootsys,
    "witten": cmd_witten,
    "period": cmd_period,
}


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = getattr(args, "out", None)
    if args.command == "mass" and args.sub == "table" and args.field == "function" and not args.infile:
        print("error: function-field tables need --in", file=sys.stderr)
        return EXIT_INPUT
    try:
        _emit(HANDLERS[args.command](args), out)
    except CheckFailed as exc:
        _emit(exc.output, out)
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (ValueError, OSError, KeyError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
