from .compute_hash import artifact_digests, compute_file_hash, compute_hash

__all__ = ['artifact_digests', 'compute_file_hash', 'compute_hash']
