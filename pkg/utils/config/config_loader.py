from pathlib import Path
import json
import logging
from typing import Dict, List, Optional, Union

from utils.constants import CONFIG_FILE_NAME
from utils.errors import ConfigError

MAX_CONFIG_BYTES = 1024 * 1024  # 1MB limit


def find_config_candidates(explicit_path: Optional[str] = None) -> List[Path]:
    """
    Where to look for ridgewalk.config.json, most specific first.

    Order: --config, working directory, repository root, ~/.config, dotfile in home.
    """
    repo_root = Path(__file__).resolve().parents[2]
    search = [
        Path.cwd() / CONFIG_FILE_NAME,
        repo_root / CONFIG_FILE_NAME,
        Path.home() / ".config" / CONFIG_FILE_NAME,
        Path.home() / f".{CONFIG_FILE_NAME}",
    ]
    return ([Path(explicit_path)] if explicit_path else []) + search


def _read_config(config_path: Path) -> Dict:
    if not config_path.is_file():
        raise ConfigError(f"Config path is not a file: {config_path}")
    file_size = config_path.stat().st_size
    if file_size > MAX_CONFIG_BYTES:
        raise ConfigError(f"Config file too large: {config_path} ({file_size} bytes)")
    try:
        config_data = json.loads(config_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigError(f"Invalid JSON in config file {config_path}: {e}")
    except UnicodeDecodeError:
        raise ConfigError(f"Invalid encoding in config file {config_path}")
    if not isinstance(config_data, dict):
        raise ConfigError(f"Config file must contain JSON object: {config_path}")
    return config_data


def load_config_file(explicit_path: Optional[str] = None) -> Dict:
    """
    Load the run configuration JSON.

    An explicit path must load or a ConfigError is raised. Discovered candidates that
    fail are skipped with a warning.

    Args:
        explicit_path: Explicit path to config file

    Returns:
        Configuration dictionary, empty if none found
    """
    if explicit_path:
        path = Path(explicit_path)
        if not path.exists():
            raise ConfigError(f"Config file not found: {path}")
        config_data = _read_config(path)
        logging.info(f"✅ Loaded configuration from: {path}")
        return config_data

    for config_path in find_config_candidates():
        if not config_path.exists():
            continue
        try:
            config_data = _read_config(config_path)
        except (ConfigError, PermissionError) as e:
            logging.warning(f"⚠️ Skipping config file {config_path}: {e}")
            continue
        logging.info(f"✅ Loaded configuration from: {config_path}")
        return config_data

    logging.debug("ℹ️ No configuration file found, using defaults")
    return {}


def debug_config_loading(explicit_path: Optional[str] = None) -> Dict:
    """
    Report which candidates were searched and which one loaded.

    Args:
        explicit_path: Explicit config path to test

    Returns:
        Dictionary with debug information
    """
    debug_info: Dict[str, Union[List[str], str, None]] = {
        "candidates": [],
        "loaded_from": None,
        "config_keys": [],
    }
    candidates = find_config_candidates(explicit_path)
    debug_info["candidates"] = [str(candidate) for candidate in candidates]
    config_data = load_config_file(explicit_path)
    if config_data:
        debug_info["loaded_from"] = next((str(candidate) for candidate in candidates if candidate.exists()), None)
        debug_info["config_keys"] = sorted(config_data.keys())
    return debug_info
