"""SLOCC comparisons of symmetric states.

Degeneracy-configuration verdicts (one-sided: a mismatch proves the states
inequivalent, a match proves nothing), the two explicit local operators that
carry GHZ_3 / GHZ_4 onto the equal W/Wbar superposition, and a seeded
restart search for such an operator at other n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from . import kernels
from .majorana import DEFAULT_TOL, degeneracy_config, majorana_extract
from .statekit import PureState, is_symmetric

SUCCESS_THRESHOLD = 1e-8
DET_FLOOR = 1e-6
INVERTIBLE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """A 2x2 complex matrix applied identically to every qubit."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.array(self.entries, dtype=np.complex128)
        if m.shape != (2, 2):
            raise ValueError(f"local operator must be 2x2, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def det(self) -> complex:
        m = self.entries
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    def is_invertible(self, tol: float = INVERTIBLE_TOL) -> bool:
        return abs(self.det) > tol

    def inverse(self) -> "LocalOperator":
        if not self.is_invertible():
            raise ValueError("operator is singular")
        return LocalOperator(np.linalg.inv(self.entries))

    def to_json(self) -> list:
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.entries]

    @classmethod
    def from_params(cls, x) -> "LocalOperator":
        """From 8 reals: the real parts then the imaginary parts, row-major."""
        x = np.asarray(x, dtype=np.float64)
        return cls((x[:4] + 1j * x[4:]).reshape(2, 2))


@dataclass(frozen=True)
class SloccVerdict:
    config_a: tuple[int, ...]
    config_b: tuple[int, ...]

    @property
    def inequivalent_proven(self) -> bool:
        return self.config_a != self.config_b

    def to_json(self) -> dict:
        return {
            "config_a": list(self.config_a),
            "config_b": list(self.config_b),
            "inequivalent_proven": self.inequivalent_proven,
        }


def degeneracy_verdict(a: PureState, b: PureState, tol: float = DEFAULT_TOL) -> SloccVerdict:
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"qubit count mismatch: {a.n_qubits} vs {b.n_qubits}")
    if not (is_symmetric(a) and is_symmetric(b)):
        raise ValueError("degeneracy_verdict requires symmetric states")
    return SloccVerdict(
        degeneracy_config(majorana_extract(a, tol), tol),
        degeneracy_config(majorana_extract(b, tol), tol),
    )


def apply_symmetric_ilo(m: LocalOperator, state: PureState) -> PureState:
    """``m`` applied by every party, renormalized."""
    if not m.is_invertible():
        raise ValueError(f"operator is singular (|det| = {abs(m.det):.3g})")
    out = kernels.apply_local_power(m.entries, np.ascontiguousarray(state.amps), state.n_qubits)
    return PureState(state.n_qubits, out / np.linalg.norm(out))


def builtin_m3() -> LocalOperator:
    c = 3 ** (1 / 3)
    d = np.exp(1j * math.pi / 6) / c
    off = -np.exp(5j * math.pi / 6) / c
    return LocalOperator(np.array([[d, off], [off, d]]))


def builtin_m4() -> LocalOperator:
    s = math.sqrt(2) / 2
    return LocalOperator(np.array([[s, (-1 + 1j) / 2], [s, (1 - 1j) / 2]]))


def infidelity(m: LocalOperator | np.ndarray, source: PureState, target: PureState) -> float:
    """``1 - |<target|m^n source>|^2`` with the image renormalized; scale-free in ``m``."""
    entries = m.entries if isinstance(m, LocalOperator) else m
    out = kernels.apply_local_power(entries, np.ascontiguousarray(source.amps), source.n_qubits)
    norm2 = np.vdot(out, out).real
    if norm2 == 0.0:
        return 1.0
    return float(max(0.0, 1.0 - abs(np.vdot(target.amps, out)) ** 2 / norm2))


def _objective(x, n, source_amps, target_amps):
    m = (x[:4] + 1j * x[4:]).reshape(2, 2)
    if abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]) < DET_FLOOR:
        return 1.0
    out = kernels.apply_local_power(m, source_amps, n)
    norm2 = np.vdot(out, out).real
    return 1.0 - abs(np.vdot(target_amps, out)) ** 2 / norm2


def _apply_per_party(ms, psi, n):
    t = psi.reshape((2,) * n)
    # party i holds qubit i + 1, which is tensor axis n - 1 - i
    for i, m in enumerate(ms):
        axis = n - 1 - i
        t = np.moveaxis(np.tensordot(m, t, axes=([1], [axis])), 0, axis)
    return t.reshape(-1)


def _objective_per_party(x, n, source_amps, target_amps):
    ms = (x[: 4 * n] + 1j * x[4 * n :]).reshape(n, 2, 2)
    dets = ms[:, 0, 0] * ms[:, 1, 1] - ms[:, 0, 1] * ms[:, 1, 0]
    if np.min(np.abs(dets)) < DET_FLOOR:
        return 1.0
    out = _apply_per_party(ms, source_amps, n)
    norm2 = np.vdot(out, out).real
    return 1.0 - abs(np.vdot(target_amps, out)) ** 2 / norm2


@dataclass
class IloSearchResult:
    n: int
    best_operator: LocalOperator
    best_infidelity: float
    restarts_used: int
    seed: int
    threshold: float = SUCCESS_THRESHOLD
    history: list[float] = field(default_factory=list, repr=False)
    party_operators: list[LocalOperator] | None = None

    @property
    def found(self) -> bool:
        return self.best_infidelity < self.threshold

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "found": self.found,
            "best_infidelity": self.best_infidelity,
            "operator": self.best_operator.to_json(),
            "restarts_used": self.restarts_used,
            "seed": self.seed,
        }


def _restart_start(seed: int, index: int, operators: int = 1) -> np.ndarray:
    rng = np.random.default_rng([seed, index])
    while True:
        x = rng.standard_normal(8 * operators)
        ms = (x[: 4 * operators] + 1j * x[4 * operators :]).reshape(operators, 2, 2)
        dets = ms[:, 0, 0] * ms[:, 1, 1] - ms[:, 0, 1] * ms[:, 1, 0]
        if np.min(np.abs(dets)) >= DET_FLOOR:
            return x


def search_symmetric_ilo(
    n: int,
    source: PureState,
    target: PureState,
    restarts: int = 200,
    iters: int = 4000,
    seed: int = 0,
    threshold: float = SUCCESS_THRESHOLD,
    stop_early: bool = True,
    per_party: bool = False,
) -> IloSearchResult:
    """Nelder-Mead over the 8 real entries of ``m`` from seeded random starts.

    Restart ``i`` draws its start from a stream keyed on ``(seed, i)``, so the
    result does not depend on evaluation order. With ``stop_early`` the search
    ends at the first restart that beats ``threshold``. A not-found result
    means only that no operator was found within the budget.

    ``per_party=True`` lets every party hold its own operator (8n parameters);
    ``best_operator`` is then party 1's and all are in ``party_operators``.
    """
    if source.n_qubits != n or target.n_qubits != n:
        raise ValueError("source and target must both have n qubits")
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    args = (n, np.ascontiguousarray(source.amps), np.ascontiguousarray(target.amps))
    operators = n if per_party else 1
    objective = _objective_per_party if per_party else _objective
    options = {"maxiter": iters, "maxfev": 2 * iters, "xatol": 1e-10, "fatol": 1e-15, "adaptive": True}

    best_x, best_f, used = None, math.inf, 0
    history = []
    for i in range(restarts):
        res = minimize(objective, _restart_start(seed, i, operators), args=args, method="Nelder-Mead", options=options)
        used += 1
        f = max(0.0, float(res.fun))
        history.append(f)
        if f < best_f:
            best_x, best_f = res.x, f
        if stop_early and best_f < threshold:
            break

    x = np.asarray(best_x)
    party = [
        LocalOperator((x[4 * j : 4 * j + 4] + 1j * x[4 * operators + 4 * j : 4 * operators + 4 * j + 4]).reshape(2, 2))
        for j in range(operators)
    ]
    return IloSearchResult(
        n=n,
        best_operator=party[0],
        best_infidelity=best_f,
        restarts_used=used,
        seed=seed,
        threshold=threshold,
        history=history,
        party_operators=party if per_party else None,
    )
