import numpy as np
import pytest

from utils.bifurcation import (
    KIND_PRECEDENCE,
    BifurcationKind,
    Criticality,
    ParamField1D,
    classify_1d,
    classify_game_point,
    classify_hopf_2d,
    equilibrium_branches,
    newton_root,
    observed_side,
    planar_eigen,
    simulate_cycle,
)
from utils.errors import ConfigError
from utils.games import mixed_game, small_ipd
from utils.grr import GrrConfig, find_starting_point
from utils.optimizers import sim_sgd


def _hopf_normal_form(sign):
    # sign = -1 gives the supercritical normal form, +1 the subcritical one
    def F(z, mu):
        x, y = z
        r2 = x * x + y * y
        return np.array([mu * x - y + sign * x * r2, x + mu * y + sign * y * r2])
    return F


@pytest.mark.parametrize("f, a, b, side", [
    (lambda u, mu: mu + u * u, 1.0, 1.0, -1),
    (lambda u, mu: mu - u * u, 1.0, -1.0, 1),
    (lambda u, mu: -mu - u * u, -1.0, -1.0, -1),
])
def test_saddle_node_coefficients_and_side(f, a, b, side):
    verdict = classify_1d(ParamField1D(f))
    assert verdict.kind is BifurcationKind.SADDLE_NODE
    assert verdict.a == pytest.approx(a, rel=1e-6)
    assert verdict.b == pytest.approx(b, rel=1e-6)
    assert verdict.side == side
    assert verdict.criticality is Criticality.NA


def test_saddle_node_branches_and_stability():
    field = ParamField1D(lambda u, mu: mu - u * u)
    branches = equilibrium_branches(field, 0.01)
    np.testing.assert_allclose(branches.roots, [-0.1, 0.1], atol=1e-10)
    assert [e.stable for e in branches.equilibria] == [False, True]
    assert equilibrium_branches(field, -0.01).roots == []
    assert observed_side(field, classify_1d(field)) == 1


@pytest.mark.parametrize("sign, criticality, side", [(-1.0, Criticality.SUPER, 1), (1.0, Criticality.SUB, -1)])
def test_pitchfork(sign, criticality, side):
    field = ParamField1D(lambda u, mu: mu * u + sign * u ** 3)
    verdict = classify_1d(field)
    assert verdict.kind is BifurcationKind.PITCHFORK
    assert verdict.a == pytest.approx(1.0, rel=1e-6)
    assert verdict.b == pytest.approx(sign, rel=1e-4)
    assert verdict.criticality is criticality
    assert verdict.side == side
    assert observed_side(field, verdict) == side


def test_supercritical_pitchfork_branch_stability():
    field = ParamField1D(lambda u, mu: mu * u - u ** 3)
    branches = equilibrium_branches(field, 0.01)
    np.testing.assert_allclose(branches.roots, [-0.1, 0.0, 0.1], atol=1e-10)
    assert [e.stable for e in branches.equilibria] == [True, False, True]


def test_verdict_is_invariant_to_rescaling():
    field = ParamField1D(lambda u, mu: mu - u * u)
    scaled = classify_1d(field.scaled(-3.0))
    assert scaled.kind is BifurcationKind.SADDLE_NODE
    assert scaled.side == classify_1d(field).side


def test_hyperbolic_and_degenerate():
    assert classify_1d(ParamField1D(lambda u, mu: mu - u)).kind is BifurcationKind.HYPERBOLIC
    assert classify_1d(ParamField1D(lambda u, mu: 0.5 + u * u)).kind is BifurcationKind.HYPERBOLIC
    flat = classify_1d(ParamField1D(lambda u, mu: u * u))
    assert flat.kind is BifurcationKind.DEGENERATE
    assert flat.diagnostics["candidate"] == "saddle_node"
    tiny = classify_1d(ParamField1D(lambda u, mu: mu + 5e-6 * u * u))
    assert tiny.kind is BifurcationKind.DEGENERATE


def test_branches_need_a_classified_bifurcation():
    with pytest.raises(ConfigError):
        equilibrium_branches(ParamField1D(lambda u, mu: mu - u), 0.01)
    with pytest.raises(ConfigError):
        ParamField1D(lambda u, mu: u, smoothness=1)


def test_newton_root():
    field = ParamField1D(lambda u, mu: u * u - 2.0)
    assert newton_root(field, 1.0, 0.0) == pytest.approx(np.sqrt(2.0))
    assert newton_root(ParamField1D(lambda u, mu: u * u + 1.0), 0.0, 0.0) is None


def test_supercritical_hopf():
    verdict = classify_hopf_2d(_hopf_normal_form(-1.0))
    assert verdict.kind is BifurcationKind.HOPF
    assert verdict.criticality is Criticality.SUPER
    assert verdict.a == pytest.approx(1.0, rel=1e-6)
    assert verdict.b == -1.0
    assert verdict.side == 1
    assert verdict.diagnostics["cycle_radius"] == pytest.approx(0.2, rel=0.05)


def test_subcritical_hopf():
    verdict = classify_hopf_2d(_hopf_normal_form(1.0))
    assert verdict.kind is BifurcationKind.HOPF
    assert verdict.criticality is Criticality.SUB
    assert verdict.b == 1.0
    assert verdict.side == -1


def test_hopf_rejections():
    saddle = lambda z, mu: np.array([(1.0 + mu) * z[0], -z[1]])
    assert classify_hopf_2d(saddle).kind is BifurcationKind.NOT_HOPF
    focus = lambda z, mu: np.array([-z[0] - z[1], z[0] - z[1]])
    assert classify_hopf_2d(focus).kind is BifurcationKind.HYPERBOLIC
    frozen = lambda z, mu: _hopf_normal_form(-1.0)(z, 0.0)
    verdict = classify_hopf_2d(frozen)
    assert verdict.kind is BifurcationKind.NOT_HOPF
    assert verdict.diagnostics["reason"] == "transversality fails"
    shifted = lambda z, mu: np.array([1.0 + z[0], z[1]])
    assert classify_hopf_2d(shifted).kind is BifurcationKind.NOT_HOPF


def test_planar_eigen_and_simulated_cycle():
    alpha, beta, disc = planar_eigen(np.array([[0.1, -2.0], [2.0, 0.1]]))
    assert (alpha, beta) == (pytest.approx(0.1), pytest.approx(2.0))
    assert disc < 0
    escaped = simulate_cycle(_hopf_normal_form(1.0), 0.04)
    assert escaped["escaped"] and not escaped["cycle"]


def test_verdict_serialization():
    data = classify_1d(ParamField1D(lambda u, mu: mu - u * u)).to_dict()
    assert data["kind"] == "saddle_node"
    assert data["symmetry_convention"] == "odd"
    assert isinstance(data["diagnostics"]["derivatives"]["f_uu"], float)
    assert max(KIND_PRECEDENCE, key=KIND_PRECEDENCE.get) is BifurcationKind.HOPF


def test_game_minimum_is_hyperbolic(wells, wells_op):
    verdict = classify_game_point(wells, wells_op, [1.0, 0.0])
    assert verdict.kind is BifurcationKind.HYPERBOLIC
    reductions = verdict.diagnostics["reductions"]
    assert reductions["one_dim"]["kind"] == "hyperbolic"
    assert reductions["two_dim"]["kind"] == "not_hopf"
    np.testing.assert_allclose(np.abs(verdict.diagnostics["axis"]), [0.0, 1.0], atol=1e-12)


@pytest.mark.slow
def test_small_ipd_tuned_start_is_a_saddle_node():
    game = small_ipd()
    op = sim_sgd(game, 1.0)
    start = find_starting_point(game, op, GrrConfig(k=0, tune_steps=100, tune_lr=0.5))
    verdict = classify_game_point(game, op, start)
    assert verdict.kind is BifurcationKind.SADDLE_NODE
    assert verdict.diagnostics["reductions"]["one_dim"]["kind"] == "saddle_node"


@pytest.mark.slow
def test_mixed_game_tuned_start_is_a_hopf_point():
    game = mixed_game()
    op = sim_sgd(game, 0.5)
    start = find_starting_point(game, op, GrrConfig(k=10, tune_steps=50, tune_lr=0.1))
    verdict = classify_game_point(game, op, start)
    assert verdict.kind is BifurcationKind.HOPF
    center = verdict.diagnostics["reductions"]["two_dim"]["center"]
    np.testing.assert_allclose(game.strategies(center), [0.5, 0.5], atol=0.05)
