from pathlib import Path
from typing import List
import logging
import os

from utils.errors import ArtifactWriteError


def _temp_path_for(path: Path) -> Path:
    # hidden sibling so a partial artifact never shows up under its real name
    return path.with_name(f".{path.name}.{os.getpid()}.tmp")


def safe_write_text(
    path: Path,
    content: str,
    warnings: List[str],
    max_file_size: int = 100 * 1024 * 1024  # 100MB default limit
) -> bool:
    """
    Write an artifact atomically: temp file in the same directory, then rename.

    Args:
        path: Target file path
        content: Content to write
        warnings: List to append warning messages to
        max_file_size: Maximum allowed file size in bytes

    Returns:
        True if file was written successfully, False otherwise
    """
    if not isinstance(path, Path):
        warnings.append(f"❌ Invalid path type: {type(path)}")
        return False

    if not isinstance(content, str):
        warnings.append(f"❌ Content must be string, got {type(content)}")
        return False

    content_size = len(content.encode('utf-8'))
    if content_size > max_file_size:
        warnings.append(f"❌ Content too large: {content_size} bytes > {max_file_size} bytes limit")
        return False

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
    except PermissionError:
        warnings.append(f"❌ Permission denied creating directories for {path}")
        return False
    except OSError as e:
        warnings.append(f"❌ Failed to create parent directories for {path}: {e}")
        return False

    if path.exists() and path.is_dir():
        warnings.append(f"❌ Path exists as directory: {path}")
        return False

    if not os.access(path.parent, os.W_OK):
        warnings.append(f"❌ No write permission for directory: {path.parent}")
        return False

    temp_path = _temp_path_for(path)
    try:
        # newline="" keeps "\n" line endings on every platform
        with open(temp_path, 'w', encoding='utf-8', errors='strict', newline='') as f:
            f.write(content)
            f.flush()
            os.fsync(f.fileno())
        temp_path.replace(path)
        logging.debug(f"✅ Successfully wrote: {path} ({content_size} bytes)")
        return True
    except UnicodeEncodeError as e:
        warnings.append(f"❌ Encoding error writing {path}: {e}")
    except OSError as e:
        warnings.append(f"❌ Error during file write operation for {path}: {e}")
    temp_path.unlink(missing_ok=True)
    return False


def write_artifact(path: Path, content: str) -> Path:
    """
    Atomic write that raises instead of collecting warnings.

    Raises:
        ArtifactWriteError: When the file could not be written
    """
    warnings: List[str] = []
    path = Path(path)
    if not safe_write_text(path, content, warnings):
        raise ArtifactWriteError("; ".join(warnings) or f"failed to write {path}")
    return path
