"""Dense n-qubit pure states: the named symmetric states, Dicke machinery and
computational-basis sampling.

Basis convention: index ``v`` encodes the string ``a_n ... a_1`` with qubit 1 as
the least significant bit. Bit vectors passed in or returned (``basis_state``,
``symmetrize``, ``measure_computational``) are written in that string order, so
``bits[0]`` is qubit n and ``bits[-1]`` is qubit 1.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np

MAX_QUBITS = 20
NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PureState:
    """A dense amplitude vector over the n-qubit computational basis.

    States are normalized on construction unless ``normalized=False`` marks an
    intermediate (for instance an un-normalized permutation sum).
    """

    n_qubits: int
    amps: np.ndarray = field(repr=False)
    normalized: bool = True

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=np.complex128).reshape(-1)
        if self.n_qubits < 1 or self.n_qubits > MAX_QUBITS:
            raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {self.n_qubits}")
        if amps.shape[0] != 1 << self.n_qubits:
            raise ValueError(f"expected {1 << self.n_qubits} amplitudes, got {amps.shape[0]}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        if self.normalized:
            norm2 = float(np.vdot(amps, amps).real)
            if abs(norm2 - 1.0) > NORM_TOL:
                raise ValueError(f"state is not normalized (squared norm {norm2!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def to_json(self) -> dict:
        return {"n": self.n_qubits, "amps": [[float(a.real), float(a.imag)] for a in self.amps]}

    @classmethod
    def from_json(cls, doc: dict) -> "PureState":
        amps = np.array([complex(re, im) for re, im in doc["amps"]], dtype=np.complex128)
        return cls(int(doc["n"]), amps)


@dataclass(frozen=True)
class DickeDecomposition:
    """Weights of a symmetric state on the normalized Dicke basis, k = 0..n."""

    n: int
    coeffs: np.ndarray = field(repr=False)

    def reconstruct(self) -> PureState:
        amps = np.zeros(1 << self.n, dtype=np.complex128)
        w = hamming_weights(self.n)
        for k, c in enumerate(self.coeffs):
            amps[w == k] = c / math.sqrt(math.comb(self.n, k))
        return PureState(self.n, amps, normalized=False)


def hamming_weights(n: int) -> np.ndarray:
    """Hamming weight of every basis index of an n-qubit register."""
    v = np.arange(1 << n, dtype=np.int64)
    w = np.zeros_like(v)
    for i in range(n):
        w += (v >> i) & 1
    return w


def bits_to_index(bits) -> int:
    idx = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bits must be 0/1, got {b!r}")
        idx = (idx << 1) | int(b)
    return idx


def index_to_bits(index: int, n: int) -> list[int]:
    return [(index >> (n - 1 - i)) & 1 for i in range(n)]


def _check_n(n: int, lo: int, what: str) -> None:
    if not isinstance(n, (int, np.integer)) or n < lo or n > MAX_QUBITS:
        raise ValueError(f"{what} requires {lo} <= n <= {MAX_QUBITS}, got {n!r}")


def basis_state(bits) -> PureState:
    bits = list(bits)
    _check_n(len(bits), 1, "basis_state")
    amps = np.zeros(1 << len(bits), dtype=np.complex128)
    amps[bits_to_index(bits)] = 1.0
    return PureState(len(bits), amps)


def dicke_state(n: int, k: int) -> PureState:
    """Equal superposition of all basis strings of Hamming weight ``k``."""
    _check_n(n, 1, "dicke_state")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[hamming_weights(n) == k] = 1.0 / math.sqrt(math.comb(n, k))
    return PureState(n, amps)


def w_state(n: int) -> PureState:
    _check_n(n, 3, "w_state")
    return dicke_state(n, 1)


def wbar_state(n: int) -> PureState:
    _check_n(n, 3, "wbar_state")
    return dicke_state(n, n - 1)


def wtilde_state(n: int, alpha: complex = 1 / math.sqrt(2), beta: complex = 1 / math.sqrt(2)) -> PureState:
    """``alpha * W_n + beta * Wbar_n``; the defaults give the equal superposition."""
    _check_n(n, 3, "wtilde_state")
    alpha, beta = complex(alpha), complex(beta)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > NORM_TOL:
        raise ValueError(f"|alpha|^2 + |beta|^2 must be 1, got {abs(alpha) ** 2 + abs(beta) ** 2!r}")
    w = hamming_weights(n)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[w == 1] = alpha / math.sqrt(n)
    amps[w == n - 1] = beta / math.sqrt(n)
    return PureState(n, amps)


def ghz_state(n: int) -> PureState:
    _check_n(n, 2, "ghz_state")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    return PureState(n, amps)


def symmetrize(bits) -> PureState:
    """Normalized equal superposition of the distinct rearrangements of ``bits``.

    Each distinct string appears once, so this is the Dicke state of the
    multiset's weight.
    """
    bits = list(bits)
    n = len(bits)
    _check_n(n, 1, "symmetrize")
    ones = sum(1 for b in bits if b)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be 0/1")
    indices = [sum(1 << (n - 1 - p) for p in pos) for pos in combinations(range(n), ones)]
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[indices] = 1.0 / math.sqrt(len(indices))
    return PureState(n, amps)


def is_symmetric(state: PureState, tol: float = 1e-10) -> bool:
    """Invariance under every adjacent transposition of qubits."""
    n = state.n_qubits
    t = state.amps.reshape((2,) * n)
    for axis in range(n - 1):
        if np.max(np.abs(t - np.swapaxes(t, axis, axis + 1))) > tol:
            return False
    return True


def dicke_decompose(state: PureState, tol: float = 1e-10) -> DickeDecomposition:
    if not is_symmetric(state, tol):
        raise ValueError("dicke_decompose requires a permutation-symmetric state")
    n = state.n_qubits
    w = hamming_weights(n)
    coeffs = np.array(
        [state.amps[w == k].sum() / math.sqrt(math.comb(n, k)) for k in range(n + 1)],
        dtype=np.complex128,
    )
    return DickeDecomposition(n, coeffs)


def from_dicke(coeffs) -> PureState:
    """Symmetric state with the given normalized-Dicke coefficients (renormalized)."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    n = coeffs.shape[0] - 1
    _check_n(n, 1, "from_dicke")
    return normalize(DickeDecomposition(n, coeffs).reconstruct())


def inner_product(a: PureState, b: PureState) -> complex:
    """``<a|b>``, conjugate-linear in the first argument."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"qubit count mismatch: {a.n_qubits} vs {b.n_qubits}")
    return complex(np.vdot(a.amps, b.amps))


def fidelity(a: PureState, b: PureState) -> float:
    return abs(inner_product(a, b)) ** 2


def tensor(a: PureState, b: PureState) -> PureState:
    """``a (x) b``: the qubits of ``a`` become the high-order ones."""
    return PureState(
        a.n_qubits + b.n_qubits,
        np.kron(a.amps, b.amps),
        normalized=a.normalized and b.normalized,
    )


def normalize(a: PureState) -> PureState:
    norm = a.norm()
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return PureState(a.n_qubits, a.amps / norm)


def measure_computational(state: PureState, rng: np.random.Generator) -> list[int]:
    """Sample a basis string with probability ``|<v|psi>|^2`` (inverse CDF)."""
    return index_to_bits(sample_index(state, rng.random()), state.n_qubits)


def sample_index(state: PureState, u) -> np.ndarray | int:
    """Inverse-CDF lookup of uniform variate(s) ``u`` in [0, 1)."""
    norm2 = float(np.vdot(state.amps, state.amps).real)
    if abs(norm2 - 1.0) > NORM_TOL:
        raise ValueError("measurement requires a normalized state")
    cdf = np.cumsum(state.probabilities())
    idx = np.searchsorted(cdf, np.asarray(u) * cdf[-1], side="right")
    idx = np.minimum(idx, state.dim - 1)
    return int(idx) if np.ndim(idx) == 0 else idx


def save_state(state: PureState, path) -> None:
    Path(path).write_text(json.dumps(state.to_json()))


def load_state(path) -> PureState:
    return PureState.from_json(json.loads(Path(path).read_text()))
