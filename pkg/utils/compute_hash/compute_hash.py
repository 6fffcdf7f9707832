import hashlib
from pathlib import Path
from typing import Dict, Iterable


def compute_hash(text: str | bytes) -> str:
    """Hex sha256 of text (UTF-8 encoded) or raw bytes."""
    if isinstance(text, str):
        text = text.encode("utf-8")
    return hashlib.sha256(text).hexdigest()


def compute_file_hash(path: Path, chunk_size: int = 1 << 16) -> str:
    """
    Hex sha256 of a file's bytes, read in chunks.

    Equals compute_hash of the file contents.
    """
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(chunk_size), b""):
            digest.update(chunk)
    return digest.hexdigest()


def artifact_digests(paths: Iterable[Path]) -> Dict[str, str]:
    """sha256 of each artifact keyed by file name, in sorted order."""
    return {Path(p).name: compute_file_hash(Path(p)) for p in sorted(paths, key=lambda p: Path(p).name)}
