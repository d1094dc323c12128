"""Artin zeta functions of curves over finite fields, from numerator
coefficients or point counts.

The zeta function is held in the variable ``t = q**-s``:

    Z(t) = P(t) / ((1 - t)(1 - q t)),     zeta_hat(s) = Z(t) * t**(1 - g).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactmath import (
    HPNumber,
    RationalFunction,
    UniPoly,
    make_context,
    poly_roots_numeric,
    to_mp,
)

__all__ = [
    "CurveData",
    "RHReport",
    "ZetaBundle",
    "artin_zeta",
    "completed_zeta_rf",
    "completed_zeta_value",
    "effective_divisor_counts",
    "numerator_from_counts",
    "point_counts_from_numerator",
    "rh_check",
    "zeta_special_value",
]


@dataclass(frozen=True)
class CurveData:
    q: int
    g: int
    numerator: tuple[int, ...]
    point_counts: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        q, g, a = self.q, self.g, tuple(int(c) for c in self.numerator)
        object.__setattr__(self, "numerator", a)
        if q < 2:
            raise ValueError(f"field size must be >= 2, got {q}")
        if g < 0:
            raise ValueError(f"genus must be >= 0, got {g}")
        if len(a) != 2 * g + 1:
            raise ValueError(f"numerator must have {2 * g + 1} coefficients, got {len(a)}")
        if a[0] != 1:
            raise ValueError("numerator constant term must be 1")
        for i in range(g + 1):
            if a[2 * g - i] != q ** (g - i) * a[i]:
                raise ValueError(
                    f"numerator violates functional-equation symmetry at index {i}"
                )
        if self.point_counts is not None:
            counts = tuple(int(c) for c in self.point_counts)
            object.__setattr__(self, "point_counts", counts)
            if numerator_from_counts(q, g, counts) != a:
                raise ValueError("point counts do not reproduce the numerator")

    @classmethod
    def from_counts(cls, q: int, g: int, counts: Sequence[int]) -> "CurveData":
        return cls(q, g, numerator_from_counts(q, g, counts), tuple(counts))

    @property
    def P(self) -> UniPoly:
        return UniPoly(self.numerator, "t")

    def class_number(self) -> int:
        return sum(self.numerator)


def numerator_from_counts(q: int, g: int, counts: Sequence[int]) -> tuple[int, ...]:
    """Recover ``P`` from ``N_1..N_g`` via Newton's identities.

    ``log P(t) = sum_m S_m t^m / m`` with ``S_m = N_m - 1 - q^m``.
    """
    if g == 0:
        if counts:
            raise ValueError("invalid point counts: genus 0 takes no counts")
        return (1,)
    if len(counts) != g:
        raise ValueError(f"invalid point counts: expected {g} values, got {len(counts)}")
    S = [None] + [int(N) - 1 - q**m for m, N in enumerate(counts, start=1)]
    a = [1]
    for k in range(1, g + 1):
        total = sum(S[j] * a[k - j] for j in range(1, k + 1))
        if total % k:
            raise ValueError("invalid point counts: non-integral numerator coefficient")
        a.append(total // k)
    full = a + [0] * g
    for i in range(g):
        full[2 * g - i] = q ** (g - i) * a[i]
    return tuple(full)


def point_counts_from_numerator(q: int, numerator: Sequence[int], mmax: int) -> list[int]:
    """``N_1..N_mmax`` implied by a numerator."""
    a = list(numerator)
    coeff = lambda i: a[i] if i < len(a) else 0
    S = [0]
    for m in range(1, mmax + 1):
        S.append(m * coeff(m) - sum(S[j] * coeff(m - j) for j in range(1, m)))
    return [S[m] + 1 + q**m for m in range(1, mmax + 1)]


@dataclass(frozen=True)
class ZetaBundle:
    zeta_t: RationalFunction
    completed_shift: int


def _denominator(q: int) -> UniPoly:
    return UniPoly([1, -1], "t") * UniPoly([1, -q], "t")


def artin_zeta(curve: CurveData) -> ZetaBundle:
    return ZetaBundle(RationalFunction(curve.P, _denominator(curve.q)), curve.g - 1)


def completed_zeta_rf(curve: CurveData) -> RationalFunction:
    """``zeta_hat`` as a rational function of t: ``Z(t) * t**(1-g)``."""
    return artin_zeta(curve).zeta_t * RationalFunction.monomial(1 - curve.g, 1, "t")


def zeta_special_value(curve: CurveData, k: int) -> Fraction:
    """``zeta_hat(k)`` exactly; for k = 1 the residue at s=1 times ``log q``."""
    if k < 1:
        raise ValueError("special values are defined for k >= 1")
    q = curve.q
    if k == 1:
        # t = q^{-s}: ds = -dt/(t log q), so Res_s * log q = -Res_t / t0.
        t0 = Fraction(1, q)
        return -completed_zeta_rf(curve).residue(t0) / t0
    return artin_zeta(curve).zeta_t(Fraction(1, q**k)) * Fraction(q) ** (k * (curve.g - 1))


def completed_zeta_value(curve: CurveData, s, ctx=None):
    """``zeta_hat(s)`` at an arbitrary point.

    Integer ``s`` (other than the poles 0 and 1) gives an exact Fraction;
    anything else is evaluated numerically in ``ctx``.
    """
    if isinstance(s, (int, Fraction)) and Fraction(s).denominator == 1:
        k = int(s)
        if k in (0, 1):
            raise ZeroDivisionError(f"zeta_hat has a pole at s={k}")
        if k < 0:
            k = 1 - k  # functional equation
        return zeta_special_value(curve, k)
    if ctx is None:
        ctx = make_context(128)
    s = to_mp(ctx, s)
    t = ctx.power(curve.q, -s)
    f = completed_zeta_rf(curve)
    den = f.den.eval_mp(ctx, t)
    if abs(den) < ctx.mpf(2) ** (-(ctx.prec // 2)):
        raise ZeroDivisionError(f"zeta_hat has a pole at s={s}")
    return f.num.eval_mp(ctx, t) / den


def effective_divisor_counts(curve: CurveData, dmax: int) -> list[int]:
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    coeffs = artin_zeta(curve).zeta_t.series(dmax)
    out = []
    for c in coeffs:
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"divisor count {c} is not a nonnegative integer")
        out.append(int(c))
    return out


@dataclass(frozen=True)
class RHReport:
    roots: list
    max_deviation: object
    passed: bool
    prec: int


def rh_check(curve: CurveData, tolerance: float = 1e-12, prec: int = 128) -> RHReport:
    """Compare every root modulus of ``P`` with ``q**(-1/2)``."""
    if curve.g == 0:
        raise ValueError("no roots to check")
    ctx = make_context(prec)
    roots = poly_roots_numeric(curve.P, prec)
    target = ctx.power(curve.q, ctx.mpf(-0.5))
    dev = max(abs(abs(r) - target) for r in roots)
    return RHReport(roots, HPNumber(dev, prec), bool(dev < tolerance), prec)
