"""Majorana (stellar) representations of symmetric states.

Covers the explicit point set of the equal W/Wbar superposition, the
permutation-sum state built from a list of single-qubit points, a numerical
check of the closed-form overlaps of that sum, extraction of Majorana points
from an arbitrary symmetric state, and degeneracy configurations.

A symmetric state with points ``(a_j, b_j)`` has, on every basis string of
Hamming weight ``k``, amplitude ``k! (n-k)!`` times the ``z**k`` coefficient of
``prod_j (a_j + b_j z)``. Both the fast permutation-sum path and extraction use
this polynomial picture; the brute-force path enumerates all ``n!`` orderings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .statekit import (
    PureState,
    dicke_decompose,
    fidelity,
    hamming_weights,
    normalize,
    wtilde_state,
)

DEFAULT_TOL = 1e-8
MAX_PERMUTATION_N = 12
MAX_LEMMA_N = 12
FULL_SCAN_N = 8
MAX_EXTRACT_N = 16


class ExtractionError(RuntimeError):
    """Extracted points fail to reproduce the input state."""


@dataclass(frozen=True)
class ProjectiveQubit:
    """Single-qubit state ``a0|0> + a1|1>``; compared up to global phase."""

    a0: complex
    a1: complex

    def __post_init__(self):
        norm2 = abs(self.a0) ** 2 + abs(self.a1) ** 2
        if abs(norm2 - 1.0) > 1e-12:
            raise ValueError(f"qubit not normalized (|a0|^2 + |a1|^2 = {norm2!r})")

    @classmethod
    def from_amplitudes(cls, a0: complex, a1: complex) -> "ProjectiveQubit":
        norm = math.hypot(abs(a0), abs(a1))
        if norm == 0.0:
            raise ValueError("zero vector is not a qubit state")
        return cls(complex(a0) / norm, complex(a1) / norm)

    @classmethod
    def from_root(cls, z: complex) -> "ProjectiveQubit":
        """The point whose factor ``a0 + a1 z`` vanishes at ``z``."""
        if abs(z) <= 1.0:
            return cls.from_amplitudes(-z, 1.0)
        return cls.from_amplitudes(1.0, -1.0 / z)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.a0, self.a1], dtype=np.complex128)

    def overlap(self, other: "ProjectiveQubit") -> float:
        return abs(self.a0.conjugate() * other.a0 + self.a1.conjugate() * other.a1)

    def same_point(self, other: "ProjectiveQubit", tol: float = DEFAULT_TOL) -> bool:
        return self.overlap(other) > 1.0 - tol


KET0 = ProjectiveQubit(1.0 + 0j, 0j)
KET1 = ProjectiveQubit(0j, 1.0 + 0j)


@dataclass(frozen=True)
class RootSet:
    n: int
    roots: np.ndarray = field(repr=False)


def roots_Rn(n: int) -> RootSet:
    """The ``n - 2`` roots of ``x**(n-2) + 1`` (n even) or ``x**(n-2) - 1`` (n odd)."""
    if n < 3:
        raise ValueError(f"roots_Rn requires n >= 3, got {n}")
    j = n - 2
    k = np.arange(1, j + 1)
    if n % 2 == 0:
        roots = np.exp((2 * k - 1) * np.pi * 1j / j)
    else:
        roots = np.exp(2 * k * np.pi * 1j / j)
    return RootSet(n, roots)


def phi_set(n: int) -> list[ProjectiveQubit]:
    """``(|0> + r|1>)/sqrt(2)`` for each ``r`` in ``roots_Rn(n)``, then ``|0>`` and ``|1>``."""
    s = 1 / math.sqrt(2)
    points = [ProjectiveQubit(complex(s), complex(s * r)) for r in roots_Rn(n).roots]
    return points + [KET0, KET1]


def elementary_symmetric(roots, k: int) -> complex:
    """Sum of all distinct products of ``k`` of the given roots."""
    values = roots.roots if isinstance(roots, RootSet) else np.asarray(roots, dtype=np.complex128)
    if not 0 <= k <= len(values):
        raise ValueError(f"k must be in [0, {len(values)}], got {k}")
    # coefficients of prod (1 + r z), ascending
    coeffs = np.array([1.0 + 0j])
    for r in values:
        coeffs = np.append(coeffs, 0) + np.append(0, r * coeffs)
    return complex(coeffs[k])


def _point_matrix(qubits) -> np.ndarray:
    return np.array([[q.a0, q.a1] for q in qubits], dtype=np.complex128)


def _weight_amplitudes(phi: np.ndarray) -> np.ndarray:
    """Per-weight amplitude of the permutation sum (index k = Hamming weight)."""
    n = phi.shape[0]
    coeffs = np.array([1.0 + 0j])
    for a, b in phi:
        coeffs = np.append(a * coeffs, 0) + np.append(0, b * coeffs)
    fact = np.array([math.factorial(k) * math.factorial(n - k) for k in range(n + 1)], dtype=np.float64)
    return fact * coeffs


def majorana_sum(qubits, method: str = "auto") -> PureState:
    """Un-normalized sum over all orderings of the tensor product of ``qubits``.

    ``method="permutations"`` enumerates the ``n!`` orderings (n <= 12);
    ``"polynomial"`` uses the weight-class expansion; ``"auto"`` picks the
    enumeration up to n = 8.
    """
    phi = _point_matrix(qubits)
    n = phi.shape[0]
    if method == "auto":
        method = "permutations" if n <= FULL_SCAN_N else "polynomial"
    if method == "permutations":
        if not 1 <= n <= MAX_PERMUTATION_N:
            raise ValueError(f"permutation enumeration supports 1 <= n <= {MAX_PERMUTATION_N}, got {n}")
        amps = kernels.permutation_sum(phi)
    elif method == "polynomial":
        if n < 1:
            raise ValueError("need at least one qubit")
        amps = _weight_amplitudes(phi)[hamming_weights(n)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return PureState(n, amps, normalized=False)


def majorana_state(qubits, method: str = "auto") -> PureState:
    """Normalized symmetric state whose Majorana points are ``qubits``."""
    return normalize(majorana_sum(qubits, method))


def overlap_closed_form(n: int, h: int) -> float:
    """Five-case closed form for ``<v|M_n>`` at Hamming weight ``h``."""
    if h == 1 or h == n - 1:
        return math.factorial(n - 1) * (1 / math.sqrt(2)) ** (n - 2)
    return 0.0


def overlap_general_form(n: int, h: int) -> complex:
    """``h! (n-h)! 2**(-(n-2)/2) G_{h-1}`` for ``1 <= h <= n-1``; zero at the edges."""
    if h == 0 or h == n:
        return 0j
    g = elementary_symmetric(roots_Rn(n), h - 1)
    return math.factorial(h) * math.factorial(n - h) * (1 / math.sqrt(2)) ** (n - 2) * g


def lemma_normalization(n: int) -> float:
    return 1.0 / (math.sqrt(2 * n) * math.factorial(n - 1) * (1 / math.sqrt(2)) ** (n - 2))


@dataclass
class WeightRow:
    h: int
    direct: complex
    closed_form: float

    @property
    def abs_err(self) -> float:
        return abs(self.direct - self.closed_form)


@dataclass
class Lemma1Report:
    n: int
    per_weight: list[WeightRow]
    normalization: float
    fidelity_to_wtilde: float
    same_weight_spread: float
    full_scan_max_err: float | None
    direct_method: str

    @property
    def max_abs_err(self) -> float:
        return max(row.abs_err for row in self.per_weight)

    def passed(self, overlap_tol: float = 1e-9, fidelity_tol: float = 1e-10) -> bool:
        """Overlap errors are absolute on the full-scan range, relative to the
        nonzero overlap magnitude beyond it (Ryser rounding grows with n)."""
        errs = [self.max_abs_err, self.same_weight_spread]
        if self.full_scan_max_err is not None:
            errs.append(self.full_scan_max_err)
            bound = overlap_tol
        else:
            bound = overlap_tol * overlap_closed_form(self.n, 1)
        return max(errs) <= bound and self.fidelity_to_wtilde >= 1 - fidelity_tol

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "per_weight": [
                {
                    "h": row.h,
                    "direct": [row.direct.real, row.direct.imag],
                    "closed_form": [float(row.closed_form), 0.0],
                    "abs_err": row.abs_err,
                }
                for row in self.per_weight
            ],
            "normalization": self.normalization,
            "fidelity_to_wtilde": self.fidelity_to_wtilde,
            "same_weight_spread": self.same_weight_spread,
            "full_scan_max_err": self.full_scan_max_err,
            "direct_method": self.direct_method,
        }


def _overlap_matrix(phi: np.ndarray, v: int) -> np.ndarray:
    # row i pairs <a_i| with every point; a_i is bit i of v
    n = phi.shape[0]
    bits = [(v >> i) & 1 for i in range(n)]
    return phi[:, bits].T.copy()


def verify_lemma1(n: int) -> Lemma1Report:
    """Check every basis overlap of the permutation sum of ``phi_set(n)``.

    For ``n <= 8`` the overlaps come from the full ``n!`` enumeration and all
    ``2**n`` of them are compared with the closed form. Beyond that each weight
    is evaluated directly as a matrix permanent on its lowest and highest
    arrangements.
    """
    if not 3 <= n <= MAX_LEMMA_N:
        raise ValueError(f"verify_lemma1 supports 3 <= n <= {MAX_LEMMA_N}, got {n}")
    phi = _point_matrix(phi_set(n))
    weights = hamming_weights(n)
    closed = np.array([overlap_closed_form(n, h) for h in range(n + 1)])

    if n <= FULL_SCAN_N:
        direct_method = "permutations"
        full = kernels.permutation_sum(phi)
        full_scan_max_err = float(np.max(np.abs(full - closed[weights])))
        rows, spread = [], 0.0
        for h in range(n + 1):
            block = full[weights == h]
            spread = max(spread, float(np.max(np.abs(block - block[0]))))
            rows.append(WeightRow(h, complex(block[0]), float(closed[h])))
        reconstructed = full
    else:
        direct_method = "permanent"
        full_scan_max_err = None
        rows, spread = [], 0.0
        per_weight = np.zeros(n + 1, dtype=np.complex128)
        for h in range(n + 1):
            low = (1 << h) - 1
            high = low << (n - h)
            a = complex(kernels.permanent(_overlap_matrix(phi, low)))
            b = complex(kernels.permanent(_overlap_matrix(phi, high)))
            spread = max(spread, abs(a - b))
            rows.append(WeightRow(h, a, float(closed[h])))
            per_weight[h] = a
        reconstructed = per_weight[weights]

    norm_const = lemma_normalization(n)
    target = wtilde_state(n)
    overlap = np.vdot(target.amps, norm_const * reconstructed)
    return Lemma1Report(
        n=n,
        per_weight=rows,
        normalization=norm_const,
        fidelity_to_wtilde=float(abs(overlap) ** 2),
        same_weight_spread=spread,
        full_scan_max_err=full_scan_max_err,
        direct_method=direct_method,
    )


def majorana_polynomial(state: PureState) -> np.ndarray:
    """Ascending coefficients ``sqrt(C(n,k)) c_k`` of the state's Majorana polynomial."""
    dec = dicke_decompose(state)
    n = dec.n
    binom = np.sqrt([math.comb(n, k) for k in range(n + 1)])
    return binom * dec.coeffs


def majorana_extract(state: PureState, tol: float = DEFAULT_TOL) -> list[ProjectiveQubit]:
    """Majorana points of a symmetric state.

    Roots ``z`` of the Majorana polynomial map to the point ``-z|0> + |1>``;
    each unit of degree deficiency contributes a point at ``|0>``. The result
    is checked by rebuilding the state from the points.
    """
    n = state.n_qubits
    if not 3 <= n <= MAX_EXTRACT_N:
        raise ValueError(f"majorana_extract supports 3 <= n <= {MAX_EXTRACT_N}, got {n}")
    try:
        poly = majorana_polynomial(state)
    except ValueError as exc:
        raise ExtractionError(str(exc)) from exc

    scale = np.max(np.abs(poly))
    poly = np.where(np.abs(poly) <= 1e-15 * scale, 0.0, poly)
    degree = int(np.max(np.nonzero(poly)[0]))
    roots = np.roots(poly[: degree + 1][::-1]) if degree > 0 else np.array([], dtype=np.complex128)

    points = [ProjectiveQubit.from_root(complex(z)) for z in roots]
    points += [KET0] * (n - degree)

    rebuilt = majorana_state(points, method="polynomial")
    fid = fidelity(rebuilt, normalize(state))
    if fid <= 1.0 - 10 * tol:
        raise ExtractionError(f"reconstruction fidelity {fid!r} below 1 - {10 * tol:g}")
    return points


def degeneracy_config(qubits, tol: float = DEFAULT_TOL) -> tuple[int, ...]:
    """Sizes of the groups of projectively equal points, largest first."""
    reps: list[ProjectiveQubit] = []
    sizes: list[int] = []
    for q in qubits:
        for g, rep in enumerate(reps):
            if rep.same_point(q, tol):
                sizes[g] += 1
                break
        else:
            reps.append(q)
            sizes.append(1)
    return tuple(sorted(sizes, reverse=True))


def same_multiset(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Whether two point lists agree as multisets under projective equality."""
    if len(a) != len(b):
        return False
    unmatched = list(b)
    for q in a:
        for i, r in enumerate(unmatched):
            if q.same_point(r, tol):
                del unmatched[i]
                break
        else:
            return False
    return True

