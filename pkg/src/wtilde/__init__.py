"""Symmetric multi-qubit states, Majorana/SLOCC checks and anonymous leader election."""
from .kernels import BACKEND
from .statekit import (
    DickeDecomposition,
    PureState,
    basis_state,
    dicke_decompose,
    dicke_state,
    fidelity,
    ghz_state,
    inner_product,
    is_symmetric,
    measure_computational,
    normalize,
    symmetrize,
    tensor,
    w_state,
    wbar_state,
    wtilde_state,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DickeDecomposition",
    "PureState",
    "basis_state",
    "dicke_decompose",
    "dicke_state",
    "fidelity",
    "ghz_state",
    "inner_product",
    "is_symmetric",
    "measure_computational",
    "normalize",
    "symmetrize",
    "tensor",
    "w_state",
    "wbar_state",
    "wtilde_state",
]
