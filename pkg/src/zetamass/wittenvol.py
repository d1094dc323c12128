"""Witten zeta values of SU(n) with certified truncation bounds, and the
moduli-volume formula assembled from them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .exactmath import HPNumber, make_context, to_mp

__all__ = [
    "WittenVolume",
    "WittenZeta",
    "weyl_dimension",
    "witten_volume",
    "witten_zeta_su",
    "zeta_upper_bound",
]


def weyl_dimension(n: int, a: Sequence[int]) -> int:
    """Dimension of the SU(n) irreducible with Dynkin labels ``a``."""
    if n < 2:
        raise ValueError("n >= 2 required")
    if len(a) != n - 1 or any(int(x) != x or x < 0 for x in a):
        raise ValueError(f"expected {n - 1} nonnegative integer labels")
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= sum(int(a[k]) + 1 for k in range(i, j))
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"Weyl dimension {num}/{den} is not an integer")
    return q


def _dims_by_count(n: int, cutoff: int) -> dict[int, int]:
    """Histogram dim -> number of weights in the box [0, cutoff]^(n-1)."""
    hist: dict[int, int] = {}
    rng = range(cutoff + 1)
    for a in product(rng, repeat=n - 1):
        d = weyl_dimension(n, a)
        hist[d] = hist.get(d, 0) + 1
    return hist


def zeta_upper_bound(s: int, ctx, terms: int = 64):
    """A proven upper bound on ``zeta(s)``: partial sum plus the integral tail."""
    total = ctx.fsum(ctx.mpf(m) ** -s for m in range(1, terms + 1))
    return total + ctx.mpf(terms) ** (1 - s) / (s - 1)


@dataclass(frozen=True)
class WittenZeta:
    value: HPNumber
    tail_bound: HPNumber
    cutoff: int
    terms: int


def witten_zeta_su(n: int, s: int, cutoff: int, prec: int = 128) -> WittenZeta:
    """``sum 1/dim(rho)**s`` over Dynkin labels in ``[0, cutoff]^(n-1)``.

    Every omitted weight has a label above the cutoff and
    ``dim >= prod (a_k + 1)``, so the omitted mass is at most
    ``(n-1) * zeta(s)**(n-2) * sum_{a > cutoff} (a+1)**(-s)``; the last sum is
    bounded by ``(cutoff+1)**(1-s)/(s-1)``.  A rounding allowance for the
    finite sum is folded into the bound.
    """
    if int(s) != s:
        raise ValueError("s must be an integer")
    s = int(s)
    if s < 2:
        raise ValueError("divergent: s must be >= 2")
    if n < 2:
        raise ValueError("n >= 2 required")
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    ctx = make_context(prec + 32)
    hist = _dims_by_count(n, cutoff)
    value = ctx.fsum(ctx.mpf(c) / ctx.mpf(d) ** s for d, c in sorted(hist.items()))
    tail = (n - 1) * zeta_upper_bound(s, ctx) ** (n - 2) * ctx.mpf(cutoff + 1) ** (1 - s) / (s - 1)
    terms = sum(hist.values())
    rounding = value * terms * ctx.mpf(2) ** (-(prec + 32) + 4) + ctx.mpf(2) ** (-prec)
    out = make_context(prec)
    # round the bound upward so it stays a bound after the precision drop
    bound = out.mpf(tail + rounding) * (1 + out.mpf(2) ** (-prec + 2))
    return WittenZeta(HPNumber(out.mpf(value), prec), HPNumber(bound, prec), cutoff, terms)


@dataclass(frozen=True)
class WittenVolume:
    value: HPNumber
    uncertainty: HPNumber


def witten_volume(n: int, g: int, vol_su, cutoff: int, prec: int = 128) -> WittenVolume:
    """``n * (Vol(SU(n)) / (2 pi)**(n^2-1))**(2g-2) * W_n(2g-2)``.

    ``vol_su`` depends on a metric normalization the caller chooses; no curve
    data enters.  The uncertainty is the Witten-zeta tail times the prefactor.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    if g < 2:
        raise ValueError("g >= 2 required")
    ctx = make_context(prec + 32)
    V = to_mp(ctx, getattr(vol_su, "value", vol_su))
    if V <= 0:
        raise ValueError("Vol(SU(n)) must be positive")
    wz = witten_zeta_su(n, 2 * g - 2, cutoff, prec + 32)
    pref = n * (V / (2 * ctx.pi) ** (n * n - 1)) ** (2 * g - 2)
    out = make_context(prec)
    return WittenVolume(
        HPNumber(out.mpf(pref * wz.value.value), prec),
        HPNumber(out.mpf(pref * wz.tail_bound.value) * (1 + out.mpf(2) ** (-prec + 2)), prec),
    )
