"""Root systems of small rank, Weyl groups by brute force, and the
parabolic-reduction coefficient generators built on them.

Vectors are tuples of Fractions in the simple-root basis; the bilinear form
is the Gram matrix of the simple roots with long roots of norm 2.  Weyl
elements are integer matrices acting on those coordinates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exactmath import HPNumber, format_fraction, gamma_r, make_context, to_mp
from .masscalc import compositions, siegel_volume_nf, weng_coefficients
from .masscalc.numberfield import GUARD_BITS, completed_riemann_zeta

__all__ = [
    "CoeffEntry",
    "LanglandsVolume",
    "ParabolicIndex",
    "RootSystemData",
    "SUPPORTED",
    "WeylElement",
    "build_root_system",
    "conjecture_coeffs",
    "coweight_cell_volume",
    "enumerate_W0",
    "exponent_counts",
    "langlands_volume",
    "riemann_zeta_values",
    "sln_coefficient_crosscheck",
]

Vec = tuple[Fraction, ...]
Mat = tuple[tuple[int, ...], ...]

SUPPORTED = {"A": (1, 2, 3, 4), "B": (2, 3, 4), "C": (2, 3, 4), "D": (3, 4), "G": (2,)}


def _gram(type_label: str, r: int) -> list[list[Fraction]]:
    B = [[Fraction(0)] * r for _ in range(r)]
    F = Fraction
    if type_label == "A":
        for i in range(r):
            B[i][i] = F(2)
            if i + 1 < r:
                B[i][i + 1] = B[i + 1][i] = F(-1)
    elif type_label == "B":
        for i in range(r):
            B[i][i] = F(2) if i < r - 1 else F(1)
            if i + 1 < r:
                B[i][i + 1] = B[i + 1][i] = F(-1)
    elif type_label == "C":
        for i in range(r):
            B[i][i] = F(1) if i < r - 1 else F(2)
            if i + 1 < r:
                B[i][i + 1] = B[i + 1][i] = F(-1, 2) if i + 1 < r - 1 else F(-1)
    elif type_label == "D":
        for i in range(r):
            B[i][i] = F(2)
        for i in range(r - 2):
            B[i][i + 1] = B[i + 1][i] = F(-1)
        B[r - 3][r - 1] = B[r - 1][r - 3] = F(-1)
    elif type_label == "G":
        B = [[F(2, 3), F(-1)], [F(-1), F(2)]]
    return B


@dataclass(frozen=True)
class WeylElement:
    matrix: Mat
    word: tuple[int, ...]  # reduced word in simple reflections, 1-based

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, v: Sequence) -> Vec:
        return tuple(sum((Fraction(m) * x for m, x in zip(row, v)), Fraction(0)) for row in self.matrix)


@dataclass(frozen=True)
class RootSystemData:
    type_label: str
    rank: int
    gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Vec, ...]
    rho: Vec
    weyl: tuple[WeylElement, ...] = field(repr=False)

    @property
    def simple_roots(self) -> tuple[Vec, ...]:
        return tuple(_unit(self.rank, i) for i in range(self.rank))

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        r = self.rank
        return sum((Fraction(x[i]) * self.gram[i][j] * Fraction(y[j]) for i in range(r) for j in range(r)), Fraction(0))

    def pair(self, lam: Sequence, alpha: Sequence) -> Fraction:
        """``<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)``."""
        return 2 * self.form(lam, alpha) / self.form(alpha, alpha)

    def is_root(self, v: Sequence) -> bool:
        v = tuple(Fraction(x) for x in v)
        neg = tuple(-x for x in v)
        return v in self._root_set or neg in self._root_set

    @property
    def _root_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    def is_positive_root(self, v: Sequence) -> bool:
        return tuple(Fraction(x) for x in v) in self._root_set

    def is_negative_root(self, v: Sequence) -> bool:
        return tuple(-Fraction(x) for x in v) in self._root_set

    def simple_index(self, v: Sequence) -> int | None:
        v = tuple(Fraction(x) for x in v)
        for i in range(self.rank):
            if v == _unit(self.rank, i):
                return i
        return None

    def heights(self) -> list[Fraction]:
        """``<rho, alpha^vee>`` for every positive root, in root order."""
        return [self.pair(self.rho, a) for a in self.positive_roots]

    def lambda_from_pairings(self, pairings: Sequence) -> Vec:
        """Solve ``<lam, alpha_i^vee> = c_i`` for lam in root coordinates."""
        r = self.rank
        if len(pairings) != r:
            raise ValueError(f"expected {r} pairings, got {len(pairings)}")
        # row i: sum_j lam_j * 2 B[j][i] / B[i][i] = c_i
        A = [[2 * self.gram[j][i] / self.gram[i][i] for j in range(r)] + [Fraction(pairings[i])] for i in range(r)]
        for col in range(r):
            piv = next(k for k in range(col, r) if A[k][col] != 0)
            A[col], A[piv] = A[piv], A[col]
            for k in range(r):
                if k != col and A[k][col] != 0:
                    f = A[k][col] / A[col][col]
                    A[k] = [a - f * b for a, b in zip(A[k], A[col])]
        return tuple(A[i][r] / A[i][i] for i in range(r))


def _unit(r: int, i: int) -> Vec:
    return tuple(Fraction(1 if k == i else 0) for k in range(r))


def _reflection(B, i: int) -> Mat:
    """Matrix of s_i on simple-root coordinates: x -> x - <x, a_i^vee> a_i."""
    r = len(B)
    rows = []
    for row in range(r):
        entries = []
        for col in range(r):
            v = Fraction(1 if row == col else 0)
            if row == i:
                v -= 2 * B[col][i] / B[i][i]
            if v.denominator != 1:
                raise ArithmeticError("non-integral Cartan entry")
            entries.append(int(v))
        rows.append(tuple(entries))
    return tuple(rows)


def _matmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _weyl_group(B) -> tuple[WeylElement, ...]:
    r = len(B)
    gens = [_reflection(B, i) for i in range(r)]
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    seen = {ident: ()}
    order = [ident]
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for i, s in enumerate(gens):
            nm = _matmul(m, s)
            if nm not in seen:
                seen[nm] = seen[m] + (i + 1,)
                order.append(nm)
                queue.append(nm)
        if len(seen) > 2000:
            raise ArithmeticError("Weyl group enumeration did not close")
    return tuple(WeylElement(m, seen[m]) for m in order)


def build_root_system(type_label: str, rank: int) -> RootSystemData:
    type_label = type_label.upper()
    if type_label not in SUPPORTED or rank not in SUPPORTED[type_label]:
        raise ValueError(f"unsupported root system {type_label}{rank}")
    B = _gram(type_label, rank)
    weyl = _weyl_group(B)
    roots = set()
    for w in weyl:
        for i in range(rank):
            roots.add(w.act(_unit(rank, i)))
    pos = sorted((v for v in roots if all(x >= 0 for x in v)), key=lambda v: (sum(v), tuple(-x for x in v)))
    rho = tuple(sum((v[k] for v in pos), Fraction(0)) / 2 for k in range(rank))
    rs = RootSystemData(type_label, rank, tuple(tuple(row) for row in B), tuple(pos), rho, weyl)
    for a in rs.simple_roots:
        if rs.pair(rho, a) != 1:
            raise ArithmeticError("rho fails to pair to 1 with a simple coroot")
    return rs


def exponent_counts(rs: RootSystemData) -> dict[int, int]:
    hs = rs.heights()
    for h in hs:
        if h.denominator != 1:
            raise ArithmeticError(f"non-integral coroot height {h}")
    hist: dict[int, int] = {}
    for h in hs:
        hist[int(h)] = hist.get(int(h), 0) + 1
    out = {}
    for i in range(1, max(hist) + 1):
        n_i = hist.get(i, 0) - hist.get(i + 1, 0)
        if n_i:
            out[i] = n_i
    # exponents: there are `rank` of them and they sum to |Phi+|
    if sum(out.values()) != rs.rank or sum(i * c for i, c in out.items()) != len(rs.positive_roots):
        raise ArithmeticError("exponent counts inconsistent with the root system")
    return out


def _det(M: list[list[Fraction]]) -> Fraction:
    M = [row[:] for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((k for k in range(c, n) if M[k][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for k in range(c + 1, n):
            f = M[k][c] / M[c][c]
            M[k] = [a - f * b for a, b in zip(M[k], M[c])]
    return det


def coroot_gram_det(rs: RootSystemData) -> Fraction:
    B = rs.gram
    r = rs.rank
    return _det([[4 * B[i][j] / (B[i][i] * B[j][j]) for j in range(r)] for i in range(r)])


def coweight_cell_volume(rs: RootSystemData, prec: int = 128) -> HPNumber:
    """Volume of the half-open parallelotope spanned by the simple coroots."""
    ctx = make_context(prec + GUARD_BITS)
    v = ctx.sqrt(to_mp(ctx, coroot_gram_det(rs)))
    return HPNumber(make_context(prec).mpf(v), prec)


@dataclass(frozen=True)
class LanglandsVolume:
    value: HPNumber
    convention: str
    exponents: dict
    siegel: HPNumber | None  # rank-n unimodular lattice volume for type A


def riemann_zeta_values(rs: RootSystemData, prec: int = 128) -> dict[int, object]:
    ctx = make_context(prec + GUARD_BITS)
    return {i: completed_riemann_zeta(i, ctx) for i in exponent_counts(rs)}


def langlands_volume(
    rs: RootSystemData,
    zeta_values: Mapping[int, object],
    convention: str = "as_printed",
    prec: int = 128,
) -> LanglandsVolume:
    """``v_G * prod zeta_hat(i)**(-n_i)`` (as_printed) or with ``+n_i``
    (reciprocal).  For type A the Siegel volume of the matching rank is
    attached for comparison; neither convention is asserted to match it.
    """
    if convention not in ("as_printed", "reciprocal"):
        raise ValueError(f"unknown convention {convention!r}")
    ex = exponent_counts(rs)
    missing = sorted(i for i in ex if i not in zeta_values)
    if missing:
        raise ValueError(f"missing zeta values for i = {missing}")
    ctx = make_context(prec + GUARD_BITS)
    sign = -1 if convention == "as_printed" else 1
    val = to_mp(ctx, coweight_cell_volume(rs, prec + GUARD_BITS).value)
    for i, n_i in ex.items():
        val *= ctx.power(to_mp(ctx, getattr(zeta_values[i], "value", zeta_values[i])), sign * n_i)
    siegel = siegel_volume_nf(rs.rank + 1, prec) if rs.type_label == "A" else None
    return LanglandsVolume(HPNumber(make_context(prec).mpf(val), prec), convention, ex, siegel)


# -- standard parabolics ------------------------------------------------------

@dataclass(frozen=True)
class ParabolicIndex:
    J: tuple[int, ...]  # 0-based indices of simple roots in the Levi
    w: WeylElement
    rank_P: int

    @property
    def word(self) -> tuple[int, ...]:
        return self.w.word

    @property
    def mask(self) -> int:
        return sum(1 << j for j in self.J)


def enumerate_W0(rs: RootSystemData) -> list[ParabolicIndex]:
    """Weyl elements sending each simple root to a simple or negative root,
    indexed by ``J_w = {alpha : w alpha simple}``; largest J first."""
    r = rs.rank
    out = {}
    for w in rs.weyl:
        J = []
        ok = True
        for i in range(r):
            img = w.act(_unit(r, i))
            if rs.simple_index(img) is not None:
                J.append(i)
            elif not rs.is_negative_root(img):
                ok = False
                break
        if ok:
            key = tuple(J)
            if key in out:
                raise ArithmeticError("W0 correspondence violated")
            out[key] = ParabolicIndex(key, w, r - len(key))
    if len(out) != 2**r:
        raise ArithmeticError("W0 correspondence violated")
    return [out[k] for k in sorted(out, key=lambda J: (-len(J), J))]


def parabolic_label(rs: RootSystemData, J: Sequence[int]) -> str:
    if len(J) == rs.rank:
        return "G"
    if not J:
        return "B"
    return "P" + "".join(str(j + 1) for j in J)


@dataclass(frozen=True)
class CoeffEntry:
    label: str
    J: tuple[int, ...]
    word: tuple[int, ...]
    rank_P: int
    value: object  # Fraction (NF, FF) or mpf (RS); None if singular
    text: str

    @property
    def singular(self) -> bool:
        return self.value is None


def _levi_rho(rs: RootSystemData, J: Sequence[int]) -> Vec:
    Js = set(J)
    roots = [a for a in rs.positive_roots if all(a[k] == 0 for k in range(rs.rank) if k not in Js)]
    return tuple(sum((a[k] for a in roots), Fraction(0)) / 2 for k in range(rs.rank))


def _ff_text(sign: int, exps: list[int]) -> str:
    s = "-" if sign < 0 else ""
    if not exps:
        return f"{s}1"
    if len(exps) == 1:
        return f"{s}1/(q^{exps[0]}-1)"
    return f"{s}1/(" + "*".join(f"(q^{e}-1)" for e in exps) + ")"


def conjecture_coeffs(
    rs: RootSystemData,
    flavor: str,
    q=None,
    prec: int = 128,
    rs_combine: str = "product",
) -> list[CoeffEntry]:
    """Conjectural parabolic-reduction coefficients, one per standard parabolic.

    NF:  (-1)^rank(P) / prod_{a in D minus w J} (1 - <w rho, a^vee>)
    FF:  (-1)^rank(P) / prod_{a in D minus w J} (q^(1 - <w rho, a^vee>) - 1)
    RS:  (-1)^rank(P) * combine_{a in D minus J} Gamma_R(<rho_P, a^vee> - 1),
         rho_P = rho minus the Levi's half-sum; combine is product or sum.

    A vanishing factor (or a Gamma_R pole) marks that entry singular.
    """
    flavor = flavor.upper()
    if flavor not in ("NF", "FF", "RS"):
        raise ValueError(f"unknown flavor {flavor!r}")
    if flavor == "FF":
        if q is None:
            raise ValueError("FF flavor needs q")
        q = Fraction(q)
        if q <= 1:
            raise ValueError("q must exceed 1")
    if rs_combine not in ("product", "sum"):
        raise ValueError(f"unknown combine rule {rs_combine!r}")
    r = rs.rank
    out = []
    for P in enumerate_W0(rs):
        sign = -1 if P.rank_P % 2 else 1
        label = parabolic_label(rs, P.J)
        if flavor in ("NF", "FF"):
            wJ = {rs.simple_index(P.w.act(_unit(r, j))) for j in P.J}
            wrho = P.w.act(rs.rho)
            xs = [rs.pair(wrho, _unit(r, i)) for i in range(r) if i not in wJ]
            if flavor == "NF":
                den = Fraction(1)
                for x in xs:
                    den *= 1 - x
                if den == 0:
                    out.append(CoeffEntry(label, P.J, P.word, P.rank_P, None, "singular"))
                else:
                    v = Fraction(sign) / den
                    out.append(CoeffEntry(label, P.J, P.word, P.rank_P, v, format_fraction(v)))
            else:
                exps = [1 - x for x in xs]
                if any(e.denominator != 1 for e in exps):
                    raise ArithmeticError("non-integral q-exponent")
                exps = [int(e) for e in exps]
                text = _ff_text(sign, exps)
                if any(e == 0 for e in exps):
                    out.append(CoeffEntry(label, P.J, P.word, P.rank_P, None, "singular"))
                    continue
                den = Fraction(1)
                for e in exps:
                    den *= q**e - 1
                out.append(CoeffEntry(label, P.J, P.word, P.rank_P, Fraction(sign) / den, text))
        else:
            ctx = make_context(prec + GUARD_BITS)
            rho_P = tuple(a - b for a, b in zip(rs.rho, _levi_rho(rs, P.J)))
            args = [rs.pair(rho_P, _unit(r, i)) - 1 for i in range(r) if i not in P.J]
            try:
                vals = [gamma_r(a, ctx) for a in args]
            except ZeroDivisionError:
                out.append(CoeffEntry(label, P.J, P.word, P.rank_P, None, "singular"))
                continue
            if rs_combine == "product":
                acc = ctx.mpf(1)
                for v in vals:
                    acc *= v
            else:
                acc = ctx.fsum(vals)
            v = make_context(prec).mpf(sign * acc)
            out.append(CoeffEntry(label, P.J, P.word, P.rank_P, v, ctx.nstr(v, 20)))
    return out


def composition_from_J(n: int, J: Sequence[int]) -> tuple[int, ...]:
    """Block sizes of the Levi of SL_n whose simple roots are ``J``.

    Simple root i (0-based) sits between coordinates i and i+1; a root
    outside J is a break between consecutive blocks.
    """
    comp = []
    size = 1
    for i in range(n - 1):
        if i in J:
            size += 1
        else:
            comp.append(size)
            size = 1
    comp.append(size)
    return tuple(comp)


def _ff_composition_coefficient(comp: Sequence[int], q: Fraction) -> Fraction:
    den = Fraction(1)
    for a, b in zip(comp, comp[1:]):
        den *= q ** (a + b) - 1
    return Fraction(1 if len(comp) % 2 else -1) / den


def sln_coefficient_crosscheck(n: int, q=2) -> dict:
    """Compare the type A_{n-1} generators with the SL_n composition
    coefficients (number field and degree-0 function field).  Mismatches are
    reported, not raised."""
    if not 2 <= n <= 4:
        raise ValueError("n must be between 2 and 4")
    q = Fraction(q)
    rs = build_root_system("A", n - 1)
    nf = {e.J: e for e in conjecture_coeffs(rs, "NF")}
    ff = {e.J: e for e in conjecture_coeffs(rs, "FF", q=q)}
    weng = weng_coefficients(n)
    rows = []
    for P in enumerate_W0(rs):
        comp = composition_from_J(n, P.J)
        ref_nf = weng[comp]
        ref_ff = _ff_composition_coefficient(comp, q)
        e_nf, e_ff = nf[P.J], ff[P.J]
        rows.append(
            {
                "label": e_nf.label,
                "mask": P.mask,
                "word": "".join(str(i) for i in P.word) or "e",
                "composition": list(comp),
                "nf": e_nf.text,
                "nf_expected": format_fraction(ref_nf),
                "nf_match": e_nf.value == ref_nf,
                "ff": e_ff.text,
                "ff_value": "singular" if e_ff.singular else format_fraction(e_ff.value),
                "ff_expected": format_fraction(ref_ff),
                "ff_match": e_ff.value == ref_ff,
            }
        )
    assert len(rows) == len(list(compositions(n)))
    return {"n": n, "q": format_fraction(q), "parabolics": rows}
