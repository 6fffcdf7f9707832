import logging

from utils.commands.context import CommandResult, game_from, operator_from, output_dir, starting_point
from utils.config.run_config import RunConfig
from utils.emitters import write_csv, write_json
from utils.lyapunov import max_k_step_exponent, tune_starting_point
from utils.spectral import eig_general

TUNING_HEADER = ("iter", "objective")


def cmd_tune_start(cfg: RunConfig) -> CommandResult:
    """Maximize the exponent objective from the configured or seeded start."""
    game = game_from(cfg)
    op = operator_from(cfg, game)
    objective = cfg.lyapunov.exponent_objective()
    w_init = starting_point(cfg, game)
    w_star, history = tune_starting_point(op, w_init, cfg.lyapunov.k, objective, cfg.lyapunov.tune_steps, cfg.lyapunov.lr)

    report = max_k_step_exponent(op, w_star, cfg.lyapunov.k)
    spectrum = eig_general(op.jac(w_star))
    out = output_dir(cfg)
    history_path = write_csv(out / "tune_history.csv", TUNING_HEADER, list(enumerate(history)))
    result_path = write_json(out / "tune_start.json", {
        "game": game.name,
        "optimizer": op.describe(),
        "objective": objective.label,
        "k": cfg.lyapunov.k,
        "w_init": w_init,
        "w_star": w_star,
        "strategies": dict(zip(game.strategy_labels, game.strategies(w_star))),
        "max_exponent": report.exponent,
        "proxy": report.proxy,
        "jacobian_moduli": spectrum.moduli,
    })
    logging.info(f"✅ Tuned start written to {result_path}")
    return CommandResult([history_path, result_path], {"initial": history[0], "final": history[-1]})
