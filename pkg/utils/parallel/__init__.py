"""Order-preserving concurrent map."""

from .parallel_map import parallel_map, resolve_threads

__all__ = ['parallel_map', 'resolve_threads']
