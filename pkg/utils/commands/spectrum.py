import logging

from utils.autodiff import game_hessian
from utils.commands.context import CommandResult, game_from, operator_from, output_dir, require_point
from utils.config.run_config import RunConfig
from utils.emitters import write_csv
from utils.spectral import eig_general

SPECTRUM_HEADER = ("matrix", "re", "im")


def cmd_spectrum(cfg: RunConfig) -> CommandResult:
    """Eigenvalues of the game Hessian and of the optimizer Jacobian at the configured point."""
    game = game_from(cfg)
    op = operator_from(cfg, game)
    w = require_point(cfg, game)
    hessian = eig_general(game_hessian(game, w))
    jacobian = eig_general(op.jac(w))
    rows = hessian.csv_rows("hessian") + jacobian.csv_rows("jacobian")
    path = write_csv(output_dir(cfg) / "spectrum.csv", SPECTRUM_HEADER, rows)
    logging.info(f"✅ Spectra written to {path}")
    return CommandResult([path], {"jacobian_spectral_radius": float(jacobian.moduli.max())})
