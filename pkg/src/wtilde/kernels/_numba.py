"""Loop kernels compiled with numba; see ``_numpy`` for the reference twins."""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def permutation_sum(phi):
    n = phi.shape[0]
    dim = 1 << n
    out = np.zeros(dim, dtype=np.complex128)
    vec = np.empty(dim, dtype=np.complex128)
    perm = np.arange(n)
    c = np.zeros(n, dtype=np.int64)

    # Heap's algorithm; the first permutation is the identity.
    i = 0
    while True:
        vec[0] = 1.0
        size = 1
        for pos in range(n):
            a0 = phi[perm[pos], 0]
            a1 = phi[perm[pos], 1]
            for v in range(size):
                x = vec[v]
                vec[v] = x * a0
                vec[v + size] = x * a1
            size <<= 1
        for v in range(dim):
            out[v] += vec[v]

        while i < n:
            if c[i] < i:
                if i % 2 == 0:
                    perm[0], perm[i] = perm[i], perm[0]
                else:
                    perm[c[i]], perm[i] = perm[i], perm[c[i]]
                c[i] += 1
                i = 0
                break
            c[i] = 0
            i += 1
        if i >= n:
            break
    return out


@njit(cache=True)
def permanent(a):
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0.0j
    row_sums = np.zeros(n, dtype=np.complex128)
    total = 0.0 + 0.0j
    size = 0
    gray = 0
    # Gray-code walk: exactly one column toggles per step.
    for k in range(1, 1 << n):
        j = 0
        while not (k >> j) & 1:
            j += 1
        if (gray >> j) & 1:
            for r in range(n):
                row_sums[r] -= a[r, j]
            size -= 1
        else:
            for r in range(n):
                row_sums[r] += a[r, j]
            size += 1
        gray ^= 1 << j
        prod = 1.0 + 0.0j
        for r in range(n):
            prod *= row_sums[r]
        if (n - size) % 2 == 0:
            total += prod
        else:
            total -= prod
    return total


@njit(cache=True)
def apply_local_power(m, psi, n):
    out = psi.copy()
    m00 = m[0, 0]
    m01 = m[0, 1]
    m10 = m[1, 0]
    m11 = m[1, 1]
    dim = 1 << n
    for q in range(n):
        stride = 1 << q
        for base in range(0, dim, stride << 1):
            for v in range(base, base + stride):
                x0 = out[v]
                x1 = out[v + stride]
                out[v] = m00 * x0 + m01 * x1
                out[v + stride] = m10 * x0 + m11 * x1
    return out


@njit(cache=True)
def election_tally(bits):
    trials, n = bits.shape
    flags = np.zeros((trials, n), dtype=np.bool_)
    for t in range(trials):
        ones = 0
        for p in range(n):
            ones += bits[t, p]
        zeros = n - ones
        for p in range(n):
            c = bits[t, p]
            if c == 0 and ones > zeros:
                flags[t, p] = True
            elif c == 1 and zeros > ones:
                flags[t, p] = True
    return flags
