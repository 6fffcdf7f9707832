"""Dense eigensolvers for small matrices."""

from .spectrum import Spectrum, SpectrumKind, sort_general
from .jacobi import eig_symmetric
from .francis_qr import eig_general, hessenberg
from .power_iteration import power_iteration
from .queries import spectral_radius, top_eigpairs_symmetric

__all__ = [
    'Spectrum', 'SpectrumKind', 'sort_general',
    'eig_symmetric', 'eig_general', 'hessenberg',
    'power_iteration', 'spectral_radius', 'top_eigpairs_symmetric',
]
