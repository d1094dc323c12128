import mpmath
import pytest

from zetamass.exactmath import make_context
from zetamass.wittenvol import weyl_dimension, witten_volume, witten_zeta_su, zeta_upper_bound


def test_weyl_dimension_examples():
    assert [weyl_dimension(2, (m,)) for m in range(5)] == [1, 2, 3, 4, 5]
    assert weyl_dimension(3, (1, 1)) == 8
    assert weyl_dimension(3, (0, 0)) == 1
    assert weyl_dimension(4, (1, 0, 0)) == 4
    assert weyl_dimension(4, (0, 1, 0)) == 6
    assert weyl_dimension(5, (1, 0, 0, 1)) == 24  # adjoint of SU(5)
    with pytest.raises(ValueError):
        weyl_dimension(3, (1,))


def test_dimensions_are_integers_on_a_grid():
    for n in (3, 4, 5):
        for a in [(i, j, k, l)[: n - 1] for i in range(3) for j in range(3) for k in range(2) for l in range(2)]:
            d = weyl_dimension(n, a)
            assert isinstance(d, int) and d >= 1


def test_zeta_upper_bound_is_an_upper_bound():
    ctx = make_context(128)
    for s in (2, 3, 4, 6):
        assert zeta_upper_bound(s, ctx) >= ctx.zeta(s)


@pytest.mark.parametrize("s", [2, 4, 6])
def test_su2_is_riemann_zeta(s):
    ctx = make_context(128)
    r = witten_zeta_su(2, s, 2000)
    err = abs(r.value.value - ctx.zeta(s))
    assert err <= r.tail_bound.value
    assert r.value.value <= ctx.zeta(s)


def test_su2_large_cutoff():
    r = witten_zeta_su(2, 2, 10**4)
    ctx = make_context(128)
    assert abs(r.value.value - ctx.pi**2 / 6) <= r.tail_bound.value <= 1e-3
    assert r.tail_bound.value <= ctx.mpf(1) / 10**4


def test_monotone_in_cutoff():
    prev = None
    for c in (5, 10, 20, 40):
        r = witten_zeta_su(3, 2, c)
        if prev is not None:
            assert r.value.value >= prev.value.value
            assert r.tail_bound.value <= prev.tail_bound.value
        prev = r


def test_su3_self_consistency():
    a = witten_zeta_su(3, 2, 60)
    b = witten_zeta_su(3, 2, 120)
    assert abs(a.value.value - b.value.value) <= max(a.tail_bound.value, b.tail_bound.value)


def test_divergent_and_degenerate():
    with pytest.raises(ValueError, match="divergent"):
        witten_zeta_su(2, 1, 10)
    with pytest.raises(ValueError, match="n >= 2 required"):
        witten_volume(1, 2, 1, 10)


def test_volume_assembly():
    V = mpmath.mpf(7)
    r = witten_volume(2, 2, V, 1000)
    ctx = make_context(128)
    pref = 2 * (ctx.mpf(7) / (2 * ctx.pi) ** 3) ** 2
    assert abs(r.value.value - pref * ctx.pi**2 / 6) <= r.uncertainty.value
