"""Subcommand bodies: each takes a RunConfig, writes its artifacts and returns a CommandResult."""

from .context import CommandResult
from .phase_portrait import PHASE_PORTRAIT_HEADER, cmd_phase_portrait
from .heatmap import cmd_heatmap
from .tune_start import TUNING_HEADER, cmd_tune_start
from .grr import cmd_grr
from .spectrum import SPECTRUM_HEADER, cmd_spectrum
from .classify import cmd_classify
from .ipd_table import IPD_TABLE_HEADER, cmd_ipd_table

COMMANDS = {
    "phase-portrait": cmd_phase_portrait,
    "heatmap": cmd_heatmap,
    "tune-start": cmd_tune_start,
    "grr": cmd_grr,
    "spectrum": cmd_spectrum,
    "classify": cmd_classify,
    "ipd-table": cmd_ipd_table,
}

__all__ = [
    'CommandResult', 'COMMANDS',
    'PHASE_PORTRAIT_HEADER', 'TUNING_HEADER', 'SPECTRUM_HEADER', 'IPD_TABLE_HEADER',
    'cmd_phase_portrait', 'cmd_heatmap', 'cmd_tune_start', 'cmd_grr', 'cmd_spectrum', 'cmd_classify', 'cmd_ipd_table',
]
