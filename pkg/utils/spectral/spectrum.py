from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np


class SpectrumKind(str, Enum):
    SYMMETRIC = "symmetric"
    GENERAL = "general"


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    Eigenvalues (and optionally eigenvectors as columns) of a small dense matrix.

    Symmetric spectra carry real eigenvalues sorted descending; general spectra carry
    complex eigenvalues sorted by descending modulus, then real part, then imaginary part.
    """
    eigenvalues: np.ndarray
    kind: SpectrumKind
    eigenvectors: Optional[np.ndarray] = None

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.eigenvalues)

    def csv_rows(self, label: Optional[str] = None) -> List[list]:
        """Rows "re,im" (prefixed by label when given)."""
        rows = []
        for lam in np.asarray(self.eigenvalues, dtype=complex):
            row = [float(lam.real), float(lam.imag)]
            rows.append([label] + row if label is not None else row)
        return rows


def sort_general(eigenvalues) -> np.ndarray:
    """Descending modulus; ties broken by descending real part, then imaginary part."""
    values = [complex(v) for v in eigenvalues]
    # conjugate pairs share modulus and real part, so +im precedes -im
    values.sort(key=lambda z: (-round(abs(z), 12), -round(z.real, 12), -z.imag))
    return np.array(values, dtype=complex)
