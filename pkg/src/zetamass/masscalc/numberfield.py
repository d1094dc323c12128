"""Volumes of spaces of rank-n lattices over Q at high precision."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..exactmath import HPNumber, make_context, to_mp
from .functionfield import Composition, compositions

__all__ = [
    "CONVENTIONS",
    "completed_riemann_zeta",
    "ks_coefficient",
    "ks_total_from_semistable",
    "siegel_volume_nf",
    "weng_coefficients",
    "weng_semistable_volume_nf",
]

GUARD_BITS = 32
CONVENTIONS = ("A", "B")


def completed_riemann_zeta(k: int, ctx):
    """``pi**(-k/2) Gamma(k/2) zeta(k)``; at k = 1 the residue, which is 1."""
    if k < 1:
        raise ValueError("only k >= 1 is needed here")
    if k == 1:
        return ctx.mpf(1)
    return ctx.power(ctx.pi, -ctx.mpf(k) / 2) * ctx.gamma(ctx.mpf(k) / 2) * ctx.zeta(k)


def _siegel(n: int, ctx):
    out = ctx.mpf(1)
    for k in range(1, n + 1):
        out *= completed_riemann_zeta(k, ctx)
    return out


def siegel_volume_nf(n: int, prec: int = 256) -> HPNumber:
    """Volume of the space of unimodular rank-n lattices."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    ctx = make_context(prec + GUARD_BITS)
    val = _siegel(n, ctx)
    return HPNumber(make_context(prec).mpf(val), prec)


def weng_coefficients(n: int) -> dict[Composition, Fraction]:
    """``(-1)**(k-1) / prod_j (n_j + n_{j+1})`` for each composition."""
    out = {}
    for comp in compositions(n):
        den = 1
        for a, b in zip(comp, comp[1:]):
            den *= a + b
        sign = 1 if len(comp) % 2 else -1
        out[comp] = Fraction(sign, den)
    return out


def weng_semistable_volume_nf(n: int, prec: int = 256) -> HPNumber:
    """Volume of the semistable locus, by the finite parabolic-reduction sum."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    ctx = make_context(prec + GUARD_BITS)
    vols = {k: _siegel(k, ctx) for k in range(1, n + 1)}
    total = ctx.mpf(0)
    for comp, c in weng_coefficients(n).items():
        term = to_mp(ctx, c)
        for p in comp:
            term *= vols[p]
        total += term
    return HPNumber(make_context(prec).mpf(total), prec)


def ks_coefficient(comp: Composition, convention: str) -> Fraction:
    """Coefficient of ``prod m^ss_{n_j}`` under one reading of the printed
    denominator ``n_1 (n_1+n_2) ... (n_1+...+n_k) ... (n_{k-1}+n_k) n_k``.

    A: proper prefix sums * proper suffix sums * n (the total once).
    B: all prefix sums (total included) * n_k.
    """
    n = sum(comp)
    prefixes = [sum(comp[: i + 1]) for i in range(len(comp))]
    suffixes = [sum(comp[i:]) for i in range(len(comp))]
    den = 1
    if convention == "A":
        for x in prefixes[:-1] + suffixes[1:]:
            den *= x
        den *= n
    elif convention == "B":
        for x in prefixes:
            den *= x
        den *= comp[-1]
    else:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")
    return Fraction(1, den)


def ks_total_from_semistable(
    n: int, ss_table: Mapping[int, object], convention: str, prec: int = 256
) -> HPNumber:
    """Right-hand side ``sum_comp c_comp * prod m^ss_{n_j}``, to be compared
    with ``m_n / n``.  ``ss_table`` maps rank -> semistable volume.
    """
    ctx = make_context(prec + GUARD_BITS)
    missing = [k for k in range(1, n + 1) if k not in ss_table]
    if missing:
        raise ValueError(f"semistable table lacks ranks {missing}")
    vals = {k: to_mp(ctx, getattr(ss_table[k], "value", ss_table[k])) for k in range(1, n + 1)}
    total = ctx.mpf(0)
    for comp in compositions(n):
        term = to_mp(ctx, ks_coefficient(comp, convention))
        for p in comp:
            term *= vals[p]
        total += term
    return HPNumber(make_context(prec).mpf(total), prec)
