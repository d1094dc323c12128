import random
from fractions import Fraction

import mpmath
import pytest

from zetamass.exactmath import make_context
from zetamass.periods import (
    PeriodConfig,
    gamma_r,
    period_eval,
    period_terms,
    rows_to_csv,
    sl2_group_zeta,
)
from zetamass.rootsys import build_root_system
from zetamass.zetassembly import rank_one_pipeline


@pytest.fixture(scope="module")
def A1():
    return build_root_system("A", 1)


def test_gamma_r_examples():
    assert abs(gamma_r(1).value - 1) < 1e-30
    assert abs(gamma_r(2).value - 1 / mpmath.pi) < 1e-15
    with pytest.raises(ZeroDivisionError, match="Gamma_R pole"):
        gamma_r(0)


def test_gamma_r_against_direct_definition():
    rng = random.Random(7)
    prec = 128
    ctx = make_context(prec + 40)
    for _ in range(10):
        z = ctx.mpc(rng.uniform(-6, 6), rng.uniform(-3, 3))
        direct = ctx.exp(-z / 2 * ctx.log(ctx.pi)) * ctx.gamma(z / 2)
        got = gamma_r(z, prec).value
        assert abs(got - direct) <= abs(direct) * ctx.mpf(2) ** (-prec // 2)


def test_a1_ratio_factor(A1, E2):
    terms = dict(period_terms(A1, E2, [2]))
    ctx = make_context(160)
    # reflection term: Gamma_R(3) * zeta_hat(2)/zeta_hat(3) = Gamma_R(3) * 21/11
    expect = ctx.power(ctx.pi, -1.5) * ctx.gamma(1.5) * ctx.mpf(21) / 11
    assert abs(terms["1"] - expect) < 1e-30
    assert abs(terms["e"] + 2 * ctx.pi) < 1e-30  # Gamma_R(-1)


def test_sign_conventions_differ_only_on_reflection(A1, E2):
    plus = dict(period_terms(A1, E2, [2], PeriodConfig("all_plus")))
    alt = dict(period_terms(A1, E2, [2], PeriodConfig("length_sign")))
    assert plus["e"] == alt["e"] and plus["1"] == -alt["1"]


def test_singular_configuration(A1, E2):
    with pytest.raises(ZeroDivisionError, match="singular configuration"):
        period_eval(A1, E2, [1])
    with pytest.raises(ValueError):
        PeriodConfig("other")


def test_order_independence(A1, E2):
    rs = build_root_system("A", 2)
    lam = [Fraction(5, 2), Fraction(7, 2)]
    terms = [v for _, v in period_terms(rs, E2, lam)]
    ctx = make_context(160)
    forward = ctx.fsum(terms)
    shuffled = terms[:]
    random.Random(3).shuffle(shuffled)
    assert abs(forward - ctx.fsum(shuffled)) < 1e-30
    assert abs(period_eval(rs, E2, lam).value - forward) < 1e-30


def test_complex_argument(A1, E2):
    v = period_eval(A1, E2, [2 + 1j]).value
    assert mpmath.isfinite(v.real) and v.imag != 0


def test_sl2_table(A1, E2):
    rows, fit = sl2_group_zeta(A1, E2, [2, Fraction(5, 2), 3])
    assert rows[0].period is not None and rows[1].period is not None
    assert rows[2].period is None  # Gamma_R(-2) sits on a pole
    assert fit is None and all(r.zeta is None for r in rows)
    assert sl2_group_zeta(A1, E2, [])[0] == []
    with pytest.raises(ValueError, match="rank-1 only"):
        sl2_group_zeta(build_root_system("A", 2), E2, [2])


def test_sl2_comparison_columns(A1, E2):
    rows, _ = sl2_group_zeta(A1, E2, [2, Fraction(5, 2)], table=rank_one_pipeline(E2))
    assert abs(rows[0].zeta - 3) < 1e-30
    text = rows_to_csv(rows, True)
    assert text.splitlines()[0] == "s,period,assembled_zeta,ratio"
    plain = rows_to_csv(rows, False)
    assert plain.splitlines()[0] == "s,period"


def test_exploratory_fit_runs(A1, E2):
    samples = [Fraction(k, 4) for k in range(9, 14)]
    rows, fit = sl2_group_zeta(A1, E2, samples, table=rank_one_pipeline(E2), fit=True)
    assert fit is not None and fit.residual >= 0
