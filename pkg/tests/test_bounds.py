import importlib
import math

import pytest

from src.bounds import barvinok
from src.common.errors import ArgumentError
from src.setsys.set_system import SetSystem, full_cube

# `src.bounds` re-exports the function `entropy`, shadowing the submodule attribute.
ent = importlib.import_module("src.bounds.entropy")


def test_entropy_values():
    assert ent.entropy(0) == 0
    assert ent.entropy(0.5) == pytest.approx(1.0)
    assert ent.entropy(1 / 3) == pytest.approx(0.9183, abs=5e-5)
    with pytest.raises(ArgumentError):
        ent.entropy(0.7)


def test_entropy_inverse():
    assert ent.entropy_inv(0) == 0
    assert ent.entropy_inv(1) == 0.5
    x = ent.entropy_inv(0.5)
    assert ent.entropy(x) == pytest.approx(0.5, abs=1e-9)
    assert 0 < x < 0.5
    with pytest.raises(ArgumentError):
        ent.entropy_inv(1.5)


def test_rates_at_three():
    r = ent.rates(3)
    assert r.g == pytest.approx(0.0817, abs=1e-4)
    assert r.g >= 0.0817
    assert r.f >= 0.01013
    assert r.h == pytest.approx(1 / 3)
    assert r.f <= r.g <= r.h


def test_rates_need_lambda_three():
    with pytest.raises(ArgumentError):
        ent.rates(2)


def test_rates_table():
    table = ent.rates_table(3, 20)
    assert [t.lam for t in table] == list(range(3, 21))
    assert all(a.g < b.g for a, b in zip(table, table[1:]))
    with pytest.raises(ArgumentError):
        ent.rates_table(5, 4)


@pytest.mark.parametrize('n', [0, 1, 6, 30, 200])
@pytest.mark.parametrize('lam', [2, 3, 7])
def test_subset_count_check(n, lam):
    assert ent.subset_count_check(n, lam)


def test_sauer_shelah_on_full_cube():
    check = ent.sauer_shelah_check(full_cube(5))
    assert check.holds
    assert check.vc == 5
    assert check.subset_bound == 32


def test_sauer_shelah_on_chain(chain3):
    check = ent.sauer_shelah_check(chain3)
    assert check.holds
    assert check.subset_bound == 4
    assert [row.lam for row in check.corollary] == [2, 3]


def test_sauer_shelah_needs_points():
    with pytest.raises(ArgumentError):
        ent.sauer_shelah_check(SetSystem(2))


@pytest.mark.parametrize('lam, expected', [
    (3, 0.0566330), (10 ** 2, 0.6371456), (10 ** 6, 0.6931323), (10 ** 12, 0.6931472),
])
def test_gamma_hat(lam, expected):
    assert barvinok.gamma_hat(lam) == pytest.approx(expected, abs=5e-7)


def test_gamma_at_reference_points():
    low = barvinok.barvinok_gamma(1.0, barvinok.beta_for(3), 0.1, 3.462)
    assert low.gamma == pytest.approx(0.0012451, abs=1e-6)
    high = barvinok.barvinok_gamma(1.0, barvinok.beta_for(100), 0.1, 3.462)
    assert high.gamma == pytest.approx(0.0298718, abs=1e-6)


def test_gamma_validity():
    # epsilon too small for the log term
    assert not barvinok.barvinok_gamma(1.0, 1.0, 0.01, 2.0).valid
    with pytest.raises(ArgumentError):
        barvinok.barvinok_gamma(0.5, 1.0, 0.1, 3.0)
    with pytest.raises(ArgumentError):
        barvinok.barvinok_gamma(1.0, 1.0, 1.5, 3.0)
    with pytest.raises(ArgumentError):
        barvinok.barvinok_gamma(1.0, 1.0, 0.1, 0.0)


def test_optimized_gamma():
    best = barvinok.optimize_gamma(1.0, 1.0)
    assert best.valid
    assert best.gamma == pytest.approx(0.0312814, abs=1e-4)
    assert best.rho == pytest.approx(3.5245, abs=0.01)
    assert best.epsilon == pytest.approx(0.08965, abs=1e-3)
    assert best.epsilon >= barvinok.boundary_epsilon(1.0, best.rho)


def test_gamma_hat_dominates_for_large_lambda():
    lam = 10 ** 6
    best = barvinok.optimize_gamma(1.0, barvinok.beta_for(lam))
    assert barvinok.gamma_hat(lam) > 20 * best.gamma


def test_beta_for():
    assert barvinok.beta_for(3) == 3
    with pytest.raises(ArgumentError):
        barvinok.beta_for(2)


def test_theta_faces():
    theta = barvinok.theta_faces(3, 1.0)
    assert 0 < theta < 1e-3
    assert math.isfinite(theta)
    with pytest.raises(ArgumentError):
        barvinok.theta_faces(2, 1.0)
    with pytest.raises(ArgumentError):
        barvinok.theta_faces(3, 0.0)
