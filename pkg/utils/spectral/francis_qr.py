"""
Eigenvalues of a general real matrix: Householder reduction to upper Hessenberg form
followed by the implicitly shifted Francis double-step QR iteration with deflation.
"""
import logging
import math

import numpy as np

from utils.constants import QR_ITERATIONS_PER_DIM2
from utils.errors import ConfigError, NumericalError
from utils.spectral.spectrum import Spectrum, SpectrumKind, sort_general

EPS = np.finfo(float).eps


def hessenberg(A) -> np.ndarray:
    """Orthogonally similar upper Hessenberg form via Householder reflections."""
    a = np.array(A, dtype=float)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k]
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        alpha = -math.copysign(norm_x, x[0])
        v = x.copy()
        v[0] -= alpha
        norm_v = np.linalg.norm(v)
        if norm_v == 0.0:
            continue
        v /= norm_v
        a[k + 1:, k:] -= 2.0 * np.outer(v, v @ a[k + 1:, k:])
        a[:, k + 1:] -= 2.0 * np.outer(a[:, k + 1:] @ v, v)
        a[k + 2:, k] = 0.0
    return a


def _sign(a: float, b: float) -> float:
    return abs(a) if b >= 0.0 else -abs(a)


def eig_general(A) -> Spectrum:
    """
    Eigenvalues of a square real matrix.

    Args:
        A: Square finite matrix

    Returns:
        Spectrum of kind General, conjugate pairs adjacent, sorted by descending modulus

    Raises:
        NumericalError: After 100 * n^2 QR sweeps without convergence; `partial` holds
            the eigenvalues found so far
    """
    A = np.array(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ConfigError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ConfigError("eig_general requires finite entries")
    n = A.shape[0]
    if n == 0:
        return Spectrum(np.zeros(0, dtype=complex), SpectrumKind.GENERAL)
    a = hessenberg(A)
    roots = [0j] * n
    found = [False] * n
    anorm = sum(abs(a[i, j]) for i in range(n) for j in range(max(i - 1, 0), n))
    budget = QR_ITERATIONS_PER_DIM2 * n * n
    total = 0
    nn = n - 1
    t = 0.0
    while nn >= 0:
        its = 0
        while True:
            # look for a single small subdiagonal element
            l = nn
            while l > 0:
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                if abs(a[l, l - 1]) <= EPS * s:
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:
                roots[nn] = complex(x + t)
                found[nn] = True
                nn -= 1
            else:
                y = a[nn - 1, nn - 1]
                w = a[nn, nn - 1] * a[nn - 1, nn]
                if l == nn - 1:
                    p = 0.5 * (y - x)
                    q = p * p + w
                    z = math.sqrt(abs(q))
                    x += t
                    if q >= 0.0:
                        z = p + _sign(z, p)
                        roots[nn - 1] = roots[nn] = complex(x + z)
                        if z != 0.0:
                            roots[nn] = complex(x - w / z)
                    else:
                        roots[nn] = complex(x + p, -z)
                        roots[nn - 1] = complex(x + p, z)
                    found[nn] = found[nn - 1] = True
                    nn -= 2
                else:
                    total += 1
                    if total > budget:
                        partial = sort_general([roots[i] for i in range(n) if found[i]])
                        raise NumericalError(f"QR iteration did not converge after {budget} sweeps", partial=partial)
                    if its and its % 10 == 0:
                        # exceptional shift
                        t += x
                        for i in range(nn + 1):
                            a[i, i] -= x
                        s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                        y = x = 0.75 * s
                        w = -0.4375 * s * s
                    its += 1
                    m = nn - 2
                    while m >= l:
                        z = a[m, m]
                        r = x - z
                        s = y - z
                        p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                        q = a[m + 1, m + 1] - z - r - s
                        r = a[m + 2, m + 1]
                        s = abs(p) + abs(q) + abs(r)
                        if s != 0.0:
                            p /= s
                            q /= s
                            r /= s
                        if m == l:
                            break
                        u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                        v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                        if u <= EPS * v:
                            break
                        m -= 1
                    for i in range(m, nn - 1):
                        a[i + 2, i] = 0.0
                        if i != m:
                            a[i + 2, i - 1] = 0.0
                    for k in range(m, nn):
                        if k != m:
                            p = a[k, k - 1]
                            q = a[k + 1, k - 1]
                            r = a[k + 2, k - 1] if k + 1 != nn else 0.0
                            x = abs(p) + abs(q) + abs(r)
                            if x != 0.0:
                                p /= x
                                q /= x
                                r /= x
                        s = _sign(math.sqrt(p * p + q * q + r * r), p)
                        if s == 0.0:
                            continue
                        if k == m:
                            if l != m:
                                a[k, k - 1] = -a[k, k - 1]
                        else:
                            a[k, k - 1] = -s * x
                        p += s
                        x = p / s
                        y = q / s
                        z = r / s
                        q /= p
                        r /= p
                        for j in range(k, nn + 1):
                            p = a[k, j] + q * a[k + 1, j]
                            if k + 1 != nn:
                                p += r * a[k + 2, j]
                                a[k + 2, j] -= p * z
                            a[k + 1, j] -= p * y
                            a[k, j] -= p * x
                        mmin = nn if nn < k + 3 else k + 3
                        for i in range(l, mmin + 1):
                            p = x * a[i, k] + y * a[i, k + 1]
                            if k + 1 != nn:
                                p += z * a[i, k + 2]
                                a[i, k + 2] -= p * r
                            a[i, k + 1] -= p * q
                            a[i, k] -= p
            if not l + 1 < nn:
                break
    logging.debug(f"🔍 Francis QR converged after {total} sweeps (n={n})")
    return Spectrum(sort_general(roots), SpectrumKind.GENERAL)
