from .safe_write_text import safe_write_text, write_artifact

__all__ = ['safe_write_text', 'write_artifact']
