"""Weyl-group periods built from a curve's completed zeta and Gamma_R, with
the rank-one tabulation used to compare against assembled rank-2 zetas."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .curvezeta import CurveData, completed_zeta_value
from .exactmath import HPNumber, gamma_r as _gamma_r, make_context, to_mp
from .rootsys import RootSystemData, WeylElement
from .zetassembly import AlphaBetaTable, assemble_zeta

__all__ = [
    "FitResult",
    "PeriodConfig",
    "PeriodRow",
    "SIGN_CONVENTIONS",
    "gamma_r",
    "period_eval",
    "period_terms",
    "rows_to_csv",
    "sl2_group_zeta",
]

SIGN_CONVENTIONS = ("all_plus", "length_sign")
GUARD = 32


@dataclass(frozen=True)
class PeriodConfig:
    sign_convention: str = "all_plus"
    prec: int = 128

    def __post_init__(self):
        if self.sign_convention not in SIGN_CONVENTIONS:
            raise ValueError(f"unknown sign convention {self.sign_convention!r}")
        if self.prec < 64:
            raise ValueError("precision must be at least 64 bits")

    def sign(self, w: WeylElement) -> int:
        if self.sign_convention == "length_sign" and w.length % 2:
            return -1
        return 1


def gamma_r(z, prec: int = 128) -> HPNumber:
    ctx = make_context(prec + GUARD)
    v = _gamma_r(z, ctx)
    return HPNumber(make_context(prec).convert(v), prec)


def _exact(x) -> bool:
    return isinstance(x, (int, Rational))


def _pairing_matrix(rs: RootSystemData, w: WeylElement) -> list[list[Fraction]]:
    """M with ``<w lam, a_i^vee> = sum_j M[i][j] <lam, a_j^vee>``."""
    r = rs.rank
    cols = []
    for j in range(r):
        unit = [Fraction(int(k == j)) for k in range(r)]
        lam = rs.lambda_from_pairings(unit)
        wl = w.act(lam)
        cols.append([rs.pair(wl, rs.simple_roots[i]) for i in range(r)])
    return [[cols[j][i] for j in range(r)] for i in range(r)]


def _coroot_pairings(rs: RootSystemData, pairings) -> list[list[Fraction]]:
    """Rows giving ``<lam, alpha^vee>`` for each positive root from the simple pairings."""
    rows = []
    r = rs.rank
    basis = [rs.lambda_from_pairings([Fraction(int(k == j)) for k in range(r)]) for j in range(r)]
    for a in rs.positive_roots:
        rows.append([rs.pair(basis[j], a) for j in range(r)])
    return rows


def _lin(row, vec):
    acc = 0
    for c, x in zip(row, vec):
        acc = acc + c * x
    return acc


def period_terms(rs: RootSystemData, curve: CurveData, pairings: Sequence, config: PeriodConfig = PeriodConfig()):
    """Per-Weyl-element contributions ``[(word, value), ...]`` in W order.

    ``pairings[i] = <lam, alpha_i^vee>``; rational entries keep every
    Gamma_R argument and zeta argument exact, anything else is numeric.
    """
    r = rs.rank
    if len(pairings) != r:
        raise ValueError(f"expected {r} pairings, got {len(pairings)}")
    ctx = make_context(config.prec + GUARD)
    exact = all(_exact(c) for c in pairings)
    lam = [Fraction(c) for c in pairings] if exact else [to_mp(ctx, c) for c in pairings]
    rho_pair = [rs.pair(rs.rho, a) for a in rs.simple_roots]  # all 1
    root_rows = _coroot_pairings(rs, lam)
    out = []
    for w in rs.weyl:
        M = _pairing_matrix(rs, w)
        word = "".join(map(str, w.word)) or "e"
        term = ctx.mpf(config.sign(w))
        for i in range(r):
            arg = -(_lin(M[i], lam) - rho_pair[i])
            try:
                term *= _gamma_r(arg, ctx)
            except ZeroDivisionError:
                raise ZeroDivisionError(f"singular configuration: w={word}, Gamma_R pole at argument {arg}") from None
        for a, row in zip(rs.positive_roots, root_rows):
            if not rs.is_negative_root(w.act(a)):
                continue
            c = _lin(row, lam)
            try:
                num = completed_zeta_value(curve, c, ctx)
                den = completed_zeta_value(curve, c + 1, ctx)
            except ZeroDivisionError:
                raise ZeroDivisionError(f"singular configuration: w={word}, zeta_hat pole at {c} or {c + 1}") from None
            den = to_mp(ctx, den)
            if abs(den) < ctx.mpf(2) ** (-(config.prec // 2)):
                raise ZeroDivisionError(f"singular configuration: w={word}, zeta_hat vanishes at {c + 1}")
            term *= to_mp(ctx, num) / den
        out.append((word, term))
    return out


def period_eval(rs: RootSystemData, curve: CurveData, pairings: Sequence, config: PeriodConfig = PeriodConfig()) -> HPNumber:
    terms = period_terms(rs, curve, pairings, config)
    ctx = make_context(config.prec + GUARD)
    total = ctx.fsum(v for _, v in terms)
    return HPNumber(make_context(config.prec).mpc(total), config.prec)


# -- rank-one tabulation ----------------------------------------------------

@dataclass(frozen=True)
class PeriodRow:
    s: object
    period: object  # mpc, or None when singular
    zeta: object  # mpc, None when singular, or absent (no table)
    ratio: object


@dataclass(frozen=True)
class FitResult:
    """Least-squares ``zeta(s) ~ c * period(a s + b)``; exploratory only."""

    a: float
    b: float
    c: float
    residual: float
    success: bool


def _assembled_value(table: AlphaBetaTable, s, ctx):
    F = assemble_zeta(table).completed()
    T = ctx.power(to_mp(ctx, table.Q), -to_mp(ctx, s))
    den = F.den.eval_mp(ctx, T)
    if abs(den) < ctx.mpf(2) ** (-(ctx.prec // 2)):
        raise ZeroDivisionError(f"assembled zeta has a pole at s={s}")
    return F.num.eval_mp(ctx, T) / den


def _fit(rs, curve, rows, config):
    import numpy as np
    from scipy.optimize import least_squares

    pts = [(float(Fraction(r.s)) if _exact(r.s) else float(r.s), complex(r.zeta)) for r in rows
           if r.period is not None and r.zeta is not None]
    if len(pts) < 3:
        return None
    fast = PeriodConfig(config.sign_convention, 64)

    def resid(p):
        a, b, c = p
        out = []
        for s, z in pts:
            try:
                v = complex(period_eval(rs, curve, [a * s + b], fast).value)
            except ZeroDivisionError:
                v = complex(1e6)
            d = z - c * v
            out.extend([d.real, d.imag])
        return np.array(out)

    sol = least_squares(resid, x0=[1.0, 0.0, 1.0], method="lm", max_nfev=400)
    return FitResult(float(sol.x[0]), float(sol.x[1]), float(sol.x[2]), float(np.linalg.norm(sol.fun)), bool(sol.success))


def sl2_group_zeta(
    rs: RootSystemData,
    curve: CurveData,
    samples: Sequence,
    config: PeriodConfig = PeriodConfig(),
    table: AlphaBetaTable | None = None,
    fit: bool = False,
):
    """Tabulate the A1 period at ``<lam, alpha^vee> = s`` for each sample.

    With an alpha/beta table, the completed assembled zeta and the ratio
    period/zeta are added per row.  Returns ``(rows, fit_or_None)``.
    """
    if rs.type_label != "A" or rs.rank != 1:
        raise ValueError("rank-1 only")
    ctx = make_context(config.prec + GUARD)
    rows = []
    for s in samples:
        try:
            p = period_eval(rs, curve, [s], config).value
        except ZeroDivisionError:
            p = None
        z = ratio = None
        if table is not None:
            try:
                z = _assembled_value(table, s, ctx)
            except ZeroDivisionError:
                z = None
            if p is not None and z is not None and z != 0:
                ratio = p / z
        rows.append(PeriodRow(s, p, z, ratio))
    fitted = _fit(rs, curve, rows, config) if (fit and table is not None) else None
    return rows, fitted


def _cell(x, dps):
    if x is None:
        return "singular"
    if isinstance(x, (int, Fraction)):
        return str(x)
    import mpmath

    if mpmath.im(x) == 0:
        return mpmath.nstr(mpmath.re(x), dps)
    return mpmath.nstr(x, dps)


def rows_to_csv(rows, with_zeta: bool, dps: int = 20) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    header = ["s", "period"] + (["assembled_zeta", "ratio"] if with_zeta else [])
    wr.writerow(header)
    for r in rows:
        line = [_cell(r.s, dps), _cell(r.period, dps)]
        if with_zeta:
            line += [_cell(r.zeta, dps), _cell(r.ratio, dps)]
        wr.writerow(line)
    return buf.getvalue()
