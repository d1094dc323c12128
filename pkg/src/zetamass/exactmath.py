"""Exact univariate polynomials and rational functions over Q, plus a few
high-precision helpers built on mpmath.

Scalars are :class:`fractions.Fraction` throughout.  Every object here is
immutable; rational functions are kept in canonical form (coprime, monic
denominator) so that equality is a structural comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import mpmath

__all__ = [
    "HPNumber",
    "RationalFunction",
    "UniPoly",
    "as_fraction",
    "bits_to_digits",
    "digits_to_bits",
    "format_fraction",
    "gamma_r",
    "make_context",
    "poly_roots_numeric",
    "rf_normalize",
    "rf_residue_simple",
    "rf_substitute_inv",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def format_fraction(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(as_fraction(x))


# -- high precision ---------------------------------------------------------

def digits_to_bits(dps: int) -> int:
    return int(dps * 3.3219280948873626) + 8


def bits_to_digits(prec: int) -> int:
    return max(1, int((prec - 8) / 3.3219280948873626))


def make_context(prec: int) -> mpmath.ctx_mp.MPContext:
    """A private mpmath context, so concurrent callers never share state."""
    if prec < 64:
        raise ValueError("working precision must be at least 64 bits")
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def to_mp(ctx, x):
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return ctx.mpf(x)
    return ctx.convert(x)


def gamma_r(z, ctx):
    """``pi**(-z/2) * Gamma(z/2)``; raises ZeroDivisionError at 0, -2, -4, ..."""
    z = to_mp(ctx, z)
    if ctx.im(z) == 0:
        h = ctx.re(z) / 2
        if h <= 0 and h == ctx.floor(h):
            raise ZeroDivisionError(f"Gamma_R pole at {ctx.nstr(z, 10)}")
    return ctx.power(ctx.pi, -z / 2) * ctx.gamma(z / 2)


@dataclass(frozen=True)
class HPNumber:
    """A real or complex value together with the precision (bits) used."""

    value: object
    prec: int

    def __float__(self) -> float:
        return float(mpmath.re(self.value))

    def __complex__(self) -> complex:
        return complex(self.value)

    def digits(self, dps: int | None = None) -> str:
        """Decimal rendering with ``dps`` significant digits."""
        n = dps if dps is not None else bits_to_digits(self.prec)
        return mpmath.nstr(self.value, n, strip_zeros=False)


# -- polynomials ------------------------------------------------------------

def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    cs = [as_fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class UniPoly:
    """Polynomial in one named variable; ``coeffs[i]`` multiplies ``var**i``."""

    coeffs: tuple[Fraction, ...]
    var: str = "T"

    def __init__(self, coeffs: Iterable = (), var: str = "T"):
        object.__setattr__(self, "coeffs", _trim(coeffs))
        object.__setattr__(self, "var", var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "T") -> "UniPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def const(cls, c, var: str = "T") -> "UniPoly":
        return cls([c], var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _check(self, other: "UniPoly") -> None:
        if self.var != other.var and not (self.degree <= 0 or other.degree <= 0):
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            self._check(other)
            return other
        return UniPoly.const(other, self.var)

    def __add__(self, other) -> "UniPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        var = self.var if self.degree > 0 else other.var
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)], var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = self._lift(other)
        var = self.var if self.degree > 0 else other.var
        if self.is_zero() or other.is_zero():
            return UniPoly((), var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        out = UniPoly.const(1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        inv = 1 / other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return UniPoly(quot, self.var), UniPoly(rem[:dq] if dq > 0 else [], self.var)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def scale(self, c) -> "UniPoly":
        c = as_fraction(c)
        return UniPoly([c * a for a in self.coeffs], self.var)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``var**k`` (k >= 0)."""
        if self.is_zero():
            return self
        return UniPoly([0] * k + list(self.coeffs), self.var)

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mp(self, ctx, x):
        acc = ctx.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + to_mp(ctx, c)
        return acc

    def scaled_reverse(self, Q: Fraction, deg: int | None = None) -> "UniPoly":
        """Coefficients of ``(Q T)**deg * p(1/(Q T))``."""
        d = self.degree if deg is None else deg
        return UniPoly([self.coeff(d - i) * Q**i for i in range(d + 1)], self.var)

    def __str__(self) -> str:
        return format_poly(self.coeffs, self.var)


def format_poly(coeffs: Sequence[Fraction], var: str = "T") -> str:
    """Ascending-order rendering, e.g. ``1+2t^2`` or ``1/2-3/2t+t^2``."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


# -- rational functions -----------------------------------------------------

@dataclass(frozen=True)
class RationalFunction:
    """Canonical ``num/den``: coprime, monic denominator."""

    num: UniPoly
    den: UniPoly

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, UniPoly):
            num = UniPoly.const(num, var or "T")
        if den is None:
            den = UniPoly.const(1, num.var)
        elif not isinstance(den, UniPoly):
            den = UniPoly.const(den, num.var)
        n, d = _canonical(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @property
    def var(self) -> str:
        return self.num.var if self.num.degree > 0 else self.den.var

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "T") -> "RationalFunction":
        """``c * var**k`` for any integer k."""
        if k >= 0:
            return cls(UniPoly.monomial(k, c, var), UniPoly.const(1, var))
        return cls(UniPoly.const(c, var), UniPoly.monomial(-k, 1, var))

    def _lift(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, UniPoly):
            return RationalFunction(other)
        return RationalFunction(UniPoly.const(other, self.var))

    def __add__(self, other) -> "RationalFunction":
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._lift(other) - self

    def __mul__(self, other) -> "RationalFunction":
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._lift(other) / self

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def eval_mp(self, ctx, x):
        return self.num.eval_mp(ctx, x) / self.den.eval_mp(ctx, x)

    def series(self, order: int) -> list[Fraction]:
        """Power-series coefficients at 0 up to and including ``order``."""
        d0 = self.den.coeff(0)
        if d0 == 0:
            raise ValueError("rational function has a pole at 0")
        out: list[Fraction] = []
        for k in range(order + 1):
            acc = self.num.coeff(k)
            for j in range(1, min(k, self.den.degree) + 1):
                acc -= self.den.coeff(j) * out[k - j]
            out.append(acc / d0)
        return out

    def substitute_inv(self, Q) -> "RationalFunction":
        return rf_substitute_inv(self, Q)

    def residue(self, pole) -> Fraction:
        return rf_residue_simple(self, pole)

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _canonical(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    var = num.var if num.degree > 0 else den.var
    if num.is_zero():
        return UniPoly((), var), UniPoly.const(1, var)
    g = num.gcd(den)
    if g.degree > 0:
        num, den = num // g, den // g
    lead = den.lead
    return UniPoly(num.scale(1 / lead).coeffs, var), UniPoly(den.scale(1 / lead).coeffs, var)


def rf_normalize(num: UniPoly, den: UniPoly) -> RationalFunction:
    return RationalFunction(num, den)


def rf_substitute_inv(f: RationalFunction, Q) -> RationalFunction:
    """``f(1/(Q T))`` in canonical form."""
    Q = as_fraction(Q)
    if Q == 0:
        raise ZeroDivisionError("involution T -> 1/(QT) needs Q != 0")
    a, b = max(f.num.degree, 0), f.den.degree
    num = f.num.scaled_reverse(Q, a)
    den = f.den.scaled_reverse(Q, b)
    # f(1/(QT)) = num/(QT)^a / (den/(QT)^b)
    if b >= a:
        num = num * UniPoly.monomial(b - a, Q ** (b - a), f.var)
    else:
        den = den * UniPoly.monomial(a - b, Q ** (a - b), f.var)
    return RationalFunction(num, den)


def rf_residue_simple(f: RationalFunction, pole) -> Fraction:
    """``lim (T - pole) f(T)`` at a simple root of the denominator."""
    p = as_fraction(pole)
    if f.den(p) != 0:
        raise ValueError("not a pole")
    dd = f.den.derivative()(p)
    if dd == 0:
        raise ValueError("pole not simple")
    return f.num(p) / dd


class RootFindingError(ArithmeticError):
    pass


def poly_roots_numeric(p: UniPoly, prec: int = 128) -> list:
    """All complex roots of ``p`` (with multiplicity) at ``prec`` bits.

    Each returned root satisfies ``|p(r)| < 2**(-prec/2) * max|coeff|``;
    a result that misses this bound raises :class:`RootFindingError`.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined roots")
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots")
    ctx = make_context(prec)
    coeffs = [to_mp(ctx, c) for c in reversed(p.coeffs)]
    scale = max(abs(c) for c in coeffs)
    bound = scale * ctx.mpf(2) ** (-(prec // 2))
    steps = 100
    worst = None
    for _ in range(4):
        roots = ctx.polyroots(coeffs, maxsteps=steps, extraprec=prec, error=False)
        if not isinstance(roots, list):
            roots = [roots]
        roots = [ctx.mpc(r) for r in roots]
        worst = max(abs(ctx.polyval(coeffs, r)) for r in roots)
        if worst < bound:
            return roots
        steps *= 4
    raise RootFindingError(
        f"root residual {ctx.nstr(worst, 5)} exceeds bound {ctx.nstr(bound, 5)} "
        f"after {steps // 4} iterations (degree {p.degree})"
    )
