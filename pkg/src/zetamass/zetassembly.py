"""Rank-n zeta functions assembled from partial masses.

With ``T = t**n`` and ``Q = base**n``:

    Z(T) = sum_{m=0}^{g-2} alpha_m (T^m + Q^(g-1-m) T^(2g-2-m))
           + alpha_{g-1} T^(g-1)
           + beta (Q - 1) T^g / ((1 - T)(1 - QT))

and the completed function is ``Z(T) * T**(1-g)``.  The base may be any
positive rational, which covers the generic-base variant as well.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .curvezeta import (
    CurveData,
    artin_zeta,
    effective_divisor_counts,
    zeta_special_value,
)
from .exactmath import RationalFunction, UniPoly, as_fraction, make_context, poly_roots_numeric, to_mp

__all__ = [
    "AlphaBetaTable",
    "AssembledZeta",
    "FECheck",
    "assemble_zeta",
    "extract_numerator",
    "functional_equation_check",
    "numerator_root_scan",
    "rank_one_pipeline",
    "residue_at_one",
]


@dataclass(frozen=True)
class AlphaBetaTable:
    n: int
    g: int
    base: Fraction
    alphas: tuple[Fraction, ...]
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "base", as_fraction(self.base))
        object.__setattr__(self, "alphas", tuple(as_fraction(a) for a in self.alphas))
        object.__setattr__(self, "beta", as_fraction(self.beta))
        if self.n < 1:
            raise ValueError("rank must be >= 1")
        if self.g < 0:
            raise ValueError("genus must be >= 0")
        if self.base <= 0 or self.base == 1:
            raise ValueError("base must be positive and different from 1")
        if len(self.alphas) != max(self.g, 0):
            raise ValueError(f"expected {self.g} alpha values, got {len(self.alphas)}")
        if any(a < 0 for a in self.alphas):
            raise ValueError("alpha values must be nonnegative")
        if self.beta <= 0:
            raise ValueError("beta must be positive")

    @property
    def Q(self) -> Fraction:
        return self.base**self.n

    def to_text(self) -> str:
        rec = {
            "n": self.n,
            "g": self.g,
            "base": str(self.base),
            "alphas": [str(a) for a in self.alphas],
            "beta": str(self.beta),
        }
        return json.dumps(rec, indent=2) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "AlphaBetaTable":
        rec = json.loads(text)
        return cls(
            int(rec["n"]),
            int(rec["g"]),
            Fraction(str(rec["base"])),
            tuple(Fraction(str(a)) for a in rec["alphas"]),
            Fraction(str(rec["beta"])),
        )


@dataclass(frozen=True)
class AssembledZeta:
    Z: RationalFunction
    n: int
    g: int
    Q: Fraction
    beta: Fraction = field(compare=False)

    def completed(self) -> RationalFunction:
        return self.Z * RationalFunction.monomial(1 - self.g)


def assemble_zeta(table: AlphaBetaTable, form: str = "symmetric") -> AssembledZeta:
    """Build ``Z(T)`` from an alpha/beta table.

    ``form="as_printed"`` uses the tail-only beta term
    ``beta T^(2g-1) [(Q^g - 1) - (Q^g - Q) T] / ((1-T)(1-QT))``; it agrees
    with the default for g <= 1 but breaks the functional equation above.
    """
    g, Q, a, beta = table.g, table.Q, table.alphas, table.beta
    poly = UniPoly([], "T")
    for m in range(g - 1):
        poly = poly + UniPoly.monomial(m, a[m]) + UniPoly.monomial(2 * (g - 1) - m, a[m] * Q ** (g - 1 - m))
    if g >= 1:
        poly = poly + UniPoly.monomial(g - 1, a[g - 1])
    one_minus_T = UniPoly([1, -1])
    one_minus_QT = UniPoly([1, -Q])
    if form == "symmetric":
        tail_num = UniPoly.monomial(g, beta * (Q - 1))
    elif form == "as_printed":
        bracket = UniPoly([Q**g - 1, -(Q**g - Q)])
        if g == 0:
            # T^{-1} * bracket; the constant term of the bracket vanishes at g=0
            tail_num = UniPoly(bracket.coeffs[1:]).scale(beta)
        else:
            tail_num = (bracket * UniPoly.monomial(2 * g - 1, beta))
    else:
        raise ValueError(f"unknown form {form!r}")
    Z = RationalFunction(poly) + RationalFunction(tail_num, one_minus_T * one_minus_QT)
    return AssembledZeta(Z, table.n, g, Q, beta)


@dataclass(frozen=True)
class FECheck:
    passed: bool
    witness: RationalFunction


def functional_equation_check(z: AssembledZeta) -> FECheck:
    """``Z(1/(QT)) (QT)^(g-1) == Z(T) T^(1-g)`` as rational functions."""
    F = z.completed()
    diff = F.substitute_inv(z.Q) - F
    return FECheck(diff.is_zero(), diff)


def extract_numerator(z: AssembledZeta) -> UniPoly:
    """``P`` with ``Z = P / ((1-T)(1-QT))``."""
    den = UniPoly([1, -1]) * UniPoly([1, -z.Q])
    P = z.Z * RationalFunction(den)
    if not P.is_polynomial():
        raise ValueError("not in expected form")
    out = P.num.scale(1 / P.den.lead)
    if out.degree > 2 * z.g:
        raise ValueError("not in expected form")
    return out


def residue_at_one(z: AssembledZeta) -> Fraction:
    """``Res_{s=1} zeta_hat(s) * log Q``, from the T-residue at ``1/Q``."""
    T0 = 1 / z.Q
    try:
        res_T = z.completed().residue(T0)
    except ValueError as exc:
        raise ValueError(f"no simple pole at T = 1/Q: {exc}") from None
    # T = Q^{-s}: ds = -dT / (T log Q)
    return -res_T / T0


def numerator_root_scan(z: AssembledZeta, prec: int = 128) -> list[tuple]:
    """``(root, |root| * Q**(1/2))`` for each root of the numerator.

    A value of 1 puts the root on the critical circle.  Reported only; no
    verdict is drawn for rank above one.
    """
    num = extract_numerator(z)
    if num.degree < 1:
        return []
    ctx = make_context(prec)
    sq = ctx.sqrt(to_mp(ctx, z.Q))
    return [(r, abs(ctx.mpc(r)) * sq) for r in poly_roots_numeric(num, prec)]


def rank_one_pipeline(curve: CurveData) -> AlphaBetaTable:
    alphas = effective_divisor_counts(curve, curve.g - 1) if curve.g >= 1 else []
    return AlphaBetaTable(1, curve.g, Fraction(curve.q), tuple(alphas), zeta_special_value(curve, 1))


def artin_in_T(curve: CurveData) -> RationalFunction:
    """The Artin zeta renamed to the variable T, for comparisons."""
    z = artin_zeta(curve).zeta_t
    return RationalFunction(UniPoly(z.num.coeffs, "T"), UniPoly(z.den.coeffs, "T"))
