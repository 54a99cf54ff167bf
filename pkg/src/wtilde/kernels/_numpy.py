"""Vectorised numpy implementations of the hot kernels.

Each function here has a loop-based twin in ``_numba``; the two must agree to
rounding. Reductions are accumulated in a fixed chunk order so repeated calls
are bitwise reproducible.
"""
from __future__ import annotations

import itertools

import numpy as np

_PERM_CHUNK = 2048
_SUBSET_CHUNK = 1 << 14


def _bit_table(n: int) -> np.ndarray:
    # bits[v, i] = bit i of v (position i <-> qubit i + 1, LSB first)
    v = np.arange(1 << n)[:, None]
    return ((v >> np.arange(n)[None, :]) & 1).astype(np.intp)


def permutation_sum(phi: np.ndarray) -> np.ndarray:
    """Sum of tensor products of the rows of ``phi`` over all n! orderings.

    ``phi`` has shape (n, 2); row j holds the amplitudes of qubit j.
    """
    n = phi.shape[0]
    bits = _bit_table(n)
    out = np.zeros(1 << n, dtype=np.complex128)
    perms = itertools.permutations(range(n))
    while True:
        chunk = np.array(list(itertools.islice(perms, _PERM_CHUNK)), dtype=np.intp)
        if chunk.size == 0:
            break
        # terms[c, v, i] = <bit_i(v)| phi_{perm_c(i)}>
        terms = phi[chunk[:, None, :], bits[None, :, :]]
        out += terms.prod(axis=2).sum(axis=0)
    return out


def permanent(a: np.ndarray) -> complex:
    """Permanent of a square complex matrix by Ryser's inclusion-exclusion."""
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0.0j
    total = 0.0 + 0.0j
    cols = np.arange(n)
    for start in range(1, 1 << n, _SUBSET_CHUNK):
        subsets = np.arange(start, min(start + _SUBSET_CHUNK, 1 << n))
        mask = ((subsets[:, None] >> cols[None, :]) & 1).astype(np.float64)
        row_sums = mask @ a.T
        sizes = mask.sum(axis=1).astype(np.int64)
        signs = np.where((n - sizes) % 2 == 0, 1.0, -1.0)
        total += np.sum(signs * row_sums.prod(axis=1))
    return complex(total)


def apply_local_power(m: np.ndarray, psi: np.ndarray, n: int) -> np.ndarray:
    """Apply ``m`` to every qubit of the n-qubit vector ``psi``."""
    t = psi.reshape((2,) * n)
    for axis in range(n):
        t = np.moveaxis(np.tensordot(m, t, axes=([1], [axis])), 0, axis)
    return np.ascontiguousarray(t).reshape(-1)


def election_tally(bits: np.ndarray) -> np.ndarray:
    """Leader flags for a batch of measured registers, shape (trials, n)."""
    n = bits.shape[1]
    ones = bits.sum(axis=1, keepdims=True)
    zeros = n - ones
    return ((bits == 0) & (ones > zeros)) | ((bits == 1) & (zeros > ones))
