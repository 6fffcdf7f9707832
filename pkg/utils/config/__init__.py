from .config_loader import MAX_CONFIG_BYTES, debug_config_loading, find_config_candidates, load_config_file
from .run_config import (
    ClassifySection,
    GameSection,
    GridSection,
    GrrSection,
    IpdTableSection,
    LyapunovSection,
    OptimizerSection,
    RunConfig,
)

__all__ = [
    'MAX_CONFIG_BYTES',
    'debug_config_loading',
    'find_config_candidates',
    'load_config_file',
    'ClassifySection',
    'GameSection',
    'GridSection',
    'GrrSection',
    'IpdTableSection',
    'LyapunovSection',
    'OptimizerSection',
    'RunConfig',
]
