"""Shared containers and spectral helpers for the supersymmetry-variant models.

Each variant module builds a SusyModel holding charge matrices and a
Hamiltonian over one truncated representation.  Hamiltonians are assembled
from exact closed-form diagonals, so only charge words suffer truncation
distortion; verifiers restrict to interior columns accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fock import FockRep


class WrongLambda(ValueError):
    """Model requested on a representation of the wrong algebra order."""


@dataclass
class SusyModel:
    variant: str
    charges: list[np.ndarray]
    hamiltonian: np.ndarray
    rep: FockRep
    meta: dict = field(default_factory=dict)


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def anticommutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y + y @ x


def hamiltonian_from_coeffs(rep: FockRep, scalar: float, proj_coeffs) -> np.ndarray:
    """Diagonal matrix N + scalar + sum_mu proj_coeffs[mu] P_mu (exact, no truncation error)."""
    n = np.arange(rep.dim)
    coeffs = np.asarray(proj_coeffs, dtype=float)
    return np.diag(n + scalar + coeffs[n % rep.params.lam]).astype(complex)


def ladder_offsets(q: np.ndarray, tol: float = 0.0) -> set[int]:
    """Matrix-diagonal offsets carrying any weight; charges must live on {-1, +1}."""
    dim = q.shape[0]
    out = set()
    for d in range(-dim + 1, dim):
        if np.abs(np.diag(q, d)).max(initial=0.0) > tol:
            out.add(d)
    return out


@dataclass(frozen=True)
class GroundState:
    degeneracy: int
    energy: float
    sign: str                     # "neg" | "zero" | "pos"


def interior_eigenvalues(m: SusyModel, drop_blocks: int = 1) -> np.ndarray:
    """Ascending eigenvalues of H restricted away from the top residue blocks.

    The restriction is spectrally exact here because every model Hamiltonian
    is diagonal in the Fock basis.
    """
    cut = m.rep.dim - drop_blocks * m.rep.params.lam
    if cut <= 0:
        raise ValueError("representation too small for the requested interior")
    return np.linalg.eigvalsh(m.hamiltonian[:cut, :cut])


def ground_state_analysis(m: SusyModel, tol: float = 1e-9) -> GroundState:
    """Lowest interior eigenvalue, its multiplicity, and its sign at the zero band |E| < tol."""
    evals = interior_eigenvalues(m)
    ground = float(evals[0])
    degeneracy = int(np.count_nonzero(evals - ground <= tol))
    if abs(ground) < tol:
        sign = "zero"
    else:
        sign = "pos" if ground > 0 else "neg"
    return GroundState(degeneracy, ground, sign)


def level_classes(m: SusyModel, tol: float = 1e-9, drop_top_class: bool = True) -> list[tuple[float, int]]:
    """Clustered (energy, multiplicity) pairs of the interior spectrum.

    The topmost cluster is dropped by default: the interior cut can split a
    degenerate class, so its multiplicity is unreliable.
    """
    from .spectra import group_classes

    classes = group_classes(interior_eigenvalues(m), tol)
    if drop_top_class and len(classes) > 1:
        classes = classes[:-1]
    return classes


def distinct_interior_energies(m: SusyModel, tol: float = 1e-9) -> np.ndarray:
    return np.array([e for e, _ in level_classes(m, tol)])
