import math

import numpy as np
import pytest

from utils.autodiff import (
    Dual,
    MixedBlock,
    exp,
    fd_gradient,
    fd_jacobian,
    game_hessian,
    grad,
    jacobian,
    joint_gradient,
    log,
    logistic,
    lu_solve,
    mixed_second,
    primal_value,
    second_derivatives,
    tangent_of,
)
from utils.errors import NumericalError
from utils.games import available_games, build_game, small_ipd
from utils.optimizers import sim_sgd


def test_dual_polynomial_derivative():
    x = Dual(2.0, 1.0)
    y = x * x * x + 2 * x - 1
    assert y.primal == pytest.approx(11.0)
    assert y.tangent == pytest.approx(14.0)


def test_dual_quotient_and_power():
    x = Dual(3.0, 1.0)
    q = 1.0 / x
    assert q.tangent == pytest.approx(-1.0 / 9.0)
    assert (x ** 3).tangent == pytest.approx(27.0)
    assert (5.0 - x).tangent == -1.0


def test_dual_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Dual(1.0, 1.0) / Dual(0.0, 1.0)


def test_elementary_functions():
    x = Dual(0.5, 1.0)
    assert exp(x).tangent == pytest.approx(math.exp(0.5))
    assert log(x).tangent == pytest.approx(2.0)
    s = logistic(0.5)
    assert logistic(x).tangent == pytest.approx(s * (1 - s))
    with pytest.raises(ValueError):
        log(0.0)


def test_logistic_is_stable_for_large_inputs():
    assert logistic(800.0) == 1.0
    assert logistic(-800.0) == 0.0


def test_nested_dual_gives_second_derivative():
    # x = 1.5 seeded on both levels: f = x^3, f'' = 6x
    x = Dual(Dual(1.5, 1.0), Dual(1.0, 0.0))
    y = x * x * x
    assert primal_value(tangent_of(tangent_of(y))) == pytest.approx(9.0)
    assert float(y) == pytest.approx(3.375)


def test_comparisons_use_innermost_primal():
    assert Dual(Dual(1.0, 5.0), 2.0) < 2.0
    assert Dual(3.0, -1.0) >= Dual(3.0, 7.0)


def test_grad_matches_closed_form():
    f = lambda w: w[0] * w[1] + exp(w[0])
    np.testing.assert_allclose(grad(f, [0.0, 3.0]), [4.0, 0.0])


def test_jacobian_columns():
    F = lambda w: [w[0] * w[1], w[0] + 2 * w[1]]
    np.testing.assert_allclose(jacobian(F, [2.0, 3.0]), [[3.0, 2.0], [1.0, 2.0]])


def test_second_derivative_block():
    f = lambda w: w[0] * w[0] * w[1]
    block = second_derivatives(f, [1.5, 2.0], [0, 1], [0, 1])
    np.testing.assert_allclose(block, [[4.0, 3.0], [3.0, 0.0]])


def test_non_finite_gradient_raises():
    with pytest.raises(NumericalError):
        grad(lambda w: w[0] * math.inf, [1.0])


def test_lu_solve_floats_and_pivoting():
    np.testing.assert_allclose(lu_solve([[2.0, 1.0], [1.0, 3.0]], [3.0, 5.0]), [0.8, 1.4])
    np.testing.assert_allclose(lu_solve([[0.0, 1.0], [1.0, 0.0]], [7.0, 9.0]), [9.0, 7.0])


def test_lu_solve_singular():
    with pytest.raises(ZeroDivisionError):
        lu_solve([[0.0, 1.0], [0.0, 2.0]], [1.0, 1.0])


def test_lu_solve_differentiates_through_duals():
    a = Dual(2.0, 1.0)
    x = lu_solve([[a, 0.0], [0.0, 1.0]], [1.0, 1.0])
    assert primal_value(x[0]) == pytest.approx(0.5)
    assert tangent_of(x[0]) == pytest.approx(-0.25)


def test_matching_pennies_hessian_at_center(mp):
    np.testing.assert_allclose(game_hessian(mp, [0.0, 0.0]), [[0.0, -0.25], [0.25, 0.0]], atol=1e-15)
    np.testing.assert_allclose(joint_gradient(mp, [0.0, 0.0]), [0.0, 0.0], atol=1e-15)


def test_mixed_blocks(mp):
    a_of_b = mixed_second(mp, [0.0, 0.0], MixedBlock.A_OF_B)
    b_of_a = mixed_second(mp, [0.0, 0.0], MixedBlock.B_OF_A)
    assert a_of_b.shape == (1, 1)
    assert a_of_b[0, 0] == pytest.approx(0.25)
    assert b_of_a[0, 0] == pytest.approx(-0.25)


def test_exact_gradient_agrees_with_finite_differences():
    game = small_ipd()
    w = np.array([0.3, -0.7])
    exact = joint_gradient(game, w)
    oracle = np.array([
        fd_gradient(lambda x: game.losses(x)[0], w)[0],
        fd_gradient(lambda x: game.losses(x)[1], w)[1],
    ])
    np.testing.assert_allclose(exact, oracle, atol=1e-7)


def test_game_hessian_agrees_with_finite_differences():
    game = small_ipd()
    w = np.array([0.3, -0.7])
    np.testing.assert_allclose(game_hessian(game, w), fd_jacobian(lambda x: joint_gradient(game, x), w, 1e-5), atol=1e-6)


def test_finite_difference_step_must_be_positive():
    with pytest.raises(ValueError):
        fd_gradient(lambda x: 0.0, [1.0], h=0.0)


def _relative_error(exact, oracle):
    return np.linalg.norm(exact - oracle) / max(np.linalg.norm(oracle), 1e-3)


def _own_loss_fd_gradient(game, w):
    return np.concatenate([
        fd_gradient(lambda x: game.losses(x)[0], w)[:game.dim_a],
        fd_gradient(lambda x: game.losses(x)[1], w)[game.dim_a:],
    ])


@pytest.mark.parametrize("name", available_games())
def test_joint_gradient_matches_finite_differences_everywhere(name):
    game = build_game(name)
    rng = np.random.default_rng(11)
    for _ in range(100):
        w = game.sample(rng)
        assert _relative_error(joint_gradient(game, w), _own_loss_fd_gradient(game, w)) < 1e-4


@pytest.mark.slow
@pytest.mark.parametrize("name", available_games())
def test_hessian_and_operator_jacobian_match_finite_differences(name):
    game = build_game(name)
    op = sim_sgd(game, 0.1)
    rng = np.random.default_rng(12)
    for _ in range(50):
        w = game.sample(rng)
        oracle = fd_jacobian(lambda x: joint_gradient(game, x), w, 1e-5)
        assert _relative_error(game_hessian(game, w), oracle) < 1e-4
        assert _relative_error(op.jac(w), fd_jacobian(op.step, w, 1e-5)) < 1e-4
