"""Masses of rank-n bundles on a curve over F_q.

Total masses are products of completed zeta values; semistable masses come
from Zagier's closed alternating sum; the Harder-Narasimhan expansion and
the Weng-Zagier root-of-unity formulas are evaluated as checks on those.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from ..curvezeta import CurveData, zeta_special_value
from ..exactmath import HPNumber, make_context, to_mp

__all__ = [
    "Composition",
    "HNPartial",
    "IdentityCheck",
    "IndividualMass",
    "QPower",
    "compositions",
    "frac",
    "hn_series_partial",
    "semistable_mass",
    "total_mass_ff",
    "wz_average_identity",
    "wz_individual_mass",
    "zagier_semistable_mass",
]

Composition = tuple[int, ...]


def frac(x: Fraction) -> Fraction:
    """Fractional part in [0, 1)."""
    return x - math.floor(x)


@dataclass(frozen=True)
class QPower:
    """``base**exponent`` held symbolically until the exponent is integral."""

    base: Fraction
    exponent: Fraction = Fraction(0)

    def __mul__(self, other: "QPower") -> "QPower":
        if other.base != self.base:
            raise ValueError("cannot combine powers of different bases")
        return QPower(self.base, self.exponent + other.exponent)

    def materialize(self) -> Fraction:
        if self.exponent.denominator != 1:
            raise ArithmeticError(
                f"non-integral exponent {self.exponent} on base {self.base}"
            )
        return self.base ** int(self.exponent)


def compositions(n: int) -> list[Composition]:
    """All 2**(n-1) ordered compositions of n, lexicographically."""
    if n < 1:
        raise ValueError(f"compositions need n >= 1, got {n}")

    def rec(rest):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in rec(rest - first):
                yield (first,) + tail

    return list(rec(n))


def _prefix_sums(comp: Composition) -> list[int]:
    out, acc = [], 0
    for p in comp[:-1]:
        acc += p
        out.append(acc)
    return out


@lru_cache(maxsize=None)
def total_mass_ff(curve: CurveData, n: int) -> Fraction:
    """``zeta_hat(1) * zeta_hat(2) * ... * zeta_hat(n)``."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= zeta_special_value(curve, k)
    return out


@lru_cache(maxsize=None)
def _zagier(curve: CurveData, n: int, r: int) -> Fraction:
    q = Fraction(curve.q)
    d = Fraction(r, n)
    total = Fraction(0)
    for comp in compositions(n):
        power = QPower(q)
        den = Fraction(1)
        for j, N in enumerate(_prefix_sums(comp)):
            s = comp[j] + comp[j + 1]
            power = power * QPower(q, s * frac(N * d))
            den *= q**s - 1
        term = power.materialize() / den
        for p in comp:
            term *= total_mass_ff(curve, p)
        total += term if len(comp) % 2 else -term
    return total


def zagier_semistable_mass(curve: CurveData, n: int, d: int) -> Fraction:
    """Normalized semistable mass of rank n, degree d.

    Only ``d mod n`` matters.  Raises ArithmeticError if a term's
    accumulated q-exponent fails to be an integer.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    return _zagier(curve, n, d % n)


def semistable_mass(curve: CurveData, n: int, d: int) -> Fraction:
    """Unnormalized semistable mass: ``q**(n(n-1)(g-1)/2)`` times the normalized one."""
    e = n * (n - 1) * (curve.g - 1) // 2
    return Fraction(curve.q) ** e * zagier_semistable_mass(curve, n, d)


# -- Harder-Narasimhan expansion ---------------------------------------------

@dataclass(frozen=True)
class HNPartial:
    partial_sum: Fraction
    last_shell: Fraction
    weight_cap: int


def _hn_degrees(comp: Composition, d: int, cap: int):
    """Degree vectors with strictly decreasing slopes, total d, and
    instability weight W <= cap.  Yields (degrees, W).

    |n d_i - d n_i| <= W bounds every entry, so the search is finite.
    """
    n = sum(comp)
    k = len(comp)

    def rec(i, chosen, used):
        if i == k - 1:
            last = d - used
            degs = chosen + (last,)
            if k > 1 and not _slope_lt(degs[-1], comp[-1], degs[-2], comp[-2]):
                return
            w = sum(
                degs[a] * comp[b] - degs[b] * comp[a]
                for a in range(k) for b in range(a + 1, k)
            )
            if w <= cap:
                yield degs, w
            return
        ni = comp[i]
        lo = -((cap - d * ni) // n)  # ceil((d ni - cap)/n)
        hi = (d * ni + cap) // n
        for di in range(lo, hi + 1):
            if i > 0 and not _slope_lt(di, ni, chosen[-1], comp[i - 1]):
                continue
            yield from rec(i + 1, chosen + (di,), used + di)

    yield from rec(0, (), 0)


def _slope_lt(d1: int, n1: int, d0: int, n0: int) -> bool:
    return d1 * n0 < d0 * n1


def hn_series_partial(curve: CurveData, n: int, d: int, weight_cap: int) -> HNPartial:
    """Partial sum of the HN expansion of the total mass over all
    instability types with weight at most ``weight_cap``.
    """
    if weight_cap < 0:
        raise ValueError("weight_cap must be >= 0")
    q = Fraction(curve.q)
    total = Fraction(0)
    shell = Fraction(0)
    for comp in compositions(n):
        for degs, w in _hn_degrees(comp, d, weight_cap):
            term = q ** (-w)
            for nj, dj in zip(comp, degs):
                term *= zagier_semistable_mass(curve, nj, dj)
            total += term
            if w == weight_cap:
                shell += term
    return HNPartial(total, shell, weight_cap)


# -- Weng-Zagier formulas ------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def _delta_terms(comp: Composition):
    """For each residue vector delta: the list of (v_h, N_h, N_h') triples."""
    n = sum(comp)
    prefixes = _prefix_sums(comp)
    for delta in product(*(range(p) for p in comp)):
        data = []
        for h, N in enumerate(prefixes):
            v = frac(Fraction(delta[h], comp[h]) - Fraction(delta[h + 1], comp[h + 1]))
            data.append((v, N, n - N))
        yield delta, data


def _ss_product(curve: CurveData, comp: Composition, delta) -> Fraction:
    out = Fraction(1)
    for nj, dj in zip(comp, delta):
        out *= zagier_semistable_mass(curve, nj, dj)
    return out


def wz_average_identity(curve: CurveData, n: int) -> IdentityCheck:
    """Both sides of ``n * m_n = sum over (composition, delta)`` exactly."""
    q = Fraction(curve.q)
    rhs = Fraction(0)
    for comp in compositions(n):
        for delta, data in _delta_terms(comp):
            power = QPower(q)
            den = Fraction(1)
            for v, N, Np in data:
                power = power * QPower(q, v * N * Np)
                den *= q ** (N * Np) - 1
            rhs += power.materialize() / den * _ss_product(curve, comp, delta)
    return IdentityCheck(n * total_mass_ff(curve, n), rhs)


@dataclass(frozen=True)
class IndividualMass:
    value: HPNumber
    imag_residual: HPNumber
    reference: Fraction
    deviation: HPNumber


def wz_individual_mass(curve: CurveData, n: int, d: int, prec: int = 128) -> IndividualMass:
    """Evaluate the per-degree root-of-unity formula numerically.

    Powers of roots of unity with rational exponents use the principal
    branch ``exp(2 pi i j x / n)`` for the j-th root.  This is a measurement;
    no equality with the total mass is asserted here.
    """
    if not 0 <= d < n:
        raise ValueError("degree must satisfy 0 <= d <= n-1")
    ctx = make_context(prec + 20)
    q = ctx.mpf(curve.q)
    two_pi_i = 2 * ctx.pi * ctx.j

    def zeta_pow(j, x):
        return ctx.exp(two_pi_i * j * to_mp(ctx, Fraction(x)) / n)

    total = ctx.mpc(0)
    for comp in compositions(n):
        for delta, data in _delta_terms(comp):
            inner = ctx.mpc(0)
            for j in range(n):
                term = zeta_pow(j, n - d)
                for v, N, Np in data:
                    vv = to_mp(ctx, v)
                    term *= zeta_pow(j, v * N) * ctx.power(q, vv * N * Np)
                    term /= zeta_pow(j, N) * ctx.power(q, N * Np) - 1
                inner += term
            total += inner / n * to_mp(ctx, _ss_product(curve, comp, delta))
    ref = total_mass_ff(curve, n)
    re = ctx.re(total)
    return IndividualMass(
        HPNumber(re, prec),
        HPNumber(ctx.im(total), prec),
        ref,
        HPNumber(re - to_mp(ctx, ref), prec),
    )
