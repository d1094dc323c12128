"""Symbolic round trip between the two lattice parabolic-reduction relations.

Polynomials in the commuting symbols m_1, m_2, ... are dicts mapping a
monomial (sorted tuple of indices, with repetition) to its coefficient.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .functionfield import compositions
from .numberfield import CONVENTIONS, ks_coefficient, weng_coefficients

__all__ = ["inversion_consistency", "format_polynomial"]

Poly = dict[tuple[int, ...], Fraction]


def _mul(a: Poly, b: Poly) -> Poly:
    out: dict = defaultdict(Fraction)
    for ma, ca in a.items():
        for mb, cb in b.items():
            out[tuple(sorted(ma + mb))] += ca * cb
    return {m: c for m, c in out.items() if c}


def _add(a: Poly, b: Poly, scale: Fraction = Fraction(1)) -> Poly:
    out = defaultdict(Fraction, a)
    for m, c in b.items():
        out[m] += scale * c
    return {m: c for m, c in out.items() if c}


def _weng_poly(n: int) -> Poly:
    out: Poly = {}
    for comp, c in weng_coefficients(n).items():
        out = _add(out, {tuple(sorted(comp)): c})
    return out


def format_polynomial(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for mono in sorted(p, key=lambda m: (len(m), m)):
        c = p[mono]
        body = "*".join(f"m{i}" for i in mono)
        terms.append(f"{c}*{body}")
    return " + ".join(terms)


def inversion_consistency(nmax: int) -> dict:
    """Substitute the semistable expansion into the total-from-semistable
    relation and report the residual ``RHS - m_n/n`` per rank and convention.

    The report is plain data (strings and bools) in a deterministic order.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    ss = {k: _weng_poly(k) for k in range(1, nmax + 1)}
    report: dict = {"nmax": nmax, "ranks": []}
    for n in range(1, nmax + 1):
        row = {"n": n, "conventions": {}}
        for conv in CONVENTIONS:
            rhs: Poly = {}
            for comp in compositions(n):
                term: Poly = {(): ks_coefficient(comp, conv)}
                for p in comp:
                    term = _mul(term, ss[p])
                rhs = _add(rhs, term)
            residual = _add(rhs, {(n,): Fraction(1, n)}, Fraction(-1))
            row["conventions"][conv] = {
                "closes": not residual,
                "residual": {
                    "*".join(f"m{i}" for i in m): str(c)
                    for m, c in sorted(residual.items(), key=lambda kv: (len(kv[0]), kv[0]))
                },
                "residual_text": format_polynomial(residual),
            }
        report["ranks"].append(row)
    return report
