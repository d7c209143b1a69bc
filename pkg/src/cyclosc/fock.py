"""Truncated matrix representations on K complete residue blocks.

The Fock space is cut at dimension D = K * lam, an integer number of residue
blocks so every projector P_mu has equal rank.  Truncation distorts any
operator word that climbs past the cut, so identities are only asserted on
interior columns: a word whose intermediate states raise the level by at most
w is exact on columns 0..D-1-w.  Every residual reported here and in the
supersymmetry modules is a Frobenius norm over such an interior column range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraParams, level_energies, structure_function


class DegreeTooLarge(ValueError):
    """Requested interior degree leaves no columns."""


@dataclass(frozen=True)
class FockRep:
    """Dense matrices for one truncated representation.

    ``a`` carries sqrt(F(n)) at entry (n-1, n); ``adag`` is its conjugate
    transpose.  ``tmat`` is the diagonal cyclic generator and ``proj`` the
    tuple of residue-class projectors.  ``fvals`` caches F(0..D) so relation
    checks can build F(N) and F(N+1) without recomputation.
    """

    params: AlgebraParams
    dim: int
    a: np.ndarray
    adag: np.ndarray
    nmat: np.ndarray
    tmat: np.ndarray
    proj: tuple[np.ndarray, ...]
    fvals: np.ndarray


@dataclass(frozen=True)
class RelationEntry:
    name: str
    residual: float
    interior_dim: int


@dataclass(frozen=True)
class WitnessEntry:
    """A norm that must stay above ``floor`` (nontriviality evidence, not a residual)."""

    name: str
    value: float
    floor: float


@dataclass(frozen=True)
class RelationReport:
    entries: tuple[RelationEntry, ...]
    witnesses: tuple[WitnessEntry, ...] = ()

    def residual(self, name: str) -> float:
        for e in self.entries:
            if e.name == name:
                return e.residual
        raise KeyError(name)

    def max_residual(self) -> float:
        return max(e.residual for e in self.entries)

    def all_below(self, tol: float) -> bool:
        return all(e.residual < tol for e in self.entries)

    def witnesses_ok(self) -> bool:
        return all(w.value > w.floor for w in self.witnesses)


def build(params: AlgebraParams, blocks: int) -> FockRep:
    """Assemble the truncated representation on ``blocks`` residue blocks (K >= 2)."""
    if int(blocks) != blocks or blocks < 2:
        raise ValueError(f"need at least 2 residue blocks, got {blocks}")
    blocks = int(blocks)
    lam = params.lam
    dim = blocks * lam
    fvals = np.array([structure_function(params, n) for n in range(dim + 1)])
    a = np.diag(np.sqrt(fvals[1:dim]), 1).astype(complex)
    adag = a.conj().T.copy()
    nmat = np.diag(np.arange(dim)).astype(complex)
    residues = np.arange(dim) % lam
    # arguments reduced mod lam so tmat restricted to a residue class is an exact scalar
    tmat = np.diag(np.exp(2j * np.pi * residues / lam))
    proj = tuple(np.diag((residues == mu).astype(float)).astype(complex) for mu in range(lam))
    for arr in (a, adag, nmat, tmat, fvals, *proj):
        arr.setflags(write=False)
    return FockRep(params, dim, a, adag, nmat, tmat, proj, fvals)


def interior(rep: FockRep, degree: int) -> range:
    """Columns on which words raising the level by at most ``degree`` are exact."""
    if int(degree) != degree or degree < 0:
        raise ValueError(f"interior degree must be a nonnegative integer, got {degree}")
    if degree >= rep.dim:
        raise DegreeTooLarge(f"degree {degree} leaves no interior columns at dimension {rep.dim}")
    return range(rep.dim - int(degree))


def restricted_norm(m: np.ndarray, cols: range) -> float:
    """Frobenius norm of the interior-column block."""
    return float(np.linalg.norm(m[:, cols.start : cols.stop]))


def check_defining_relations(rep: FockRep) -> RelationReport:
    """Evaluate every defining relation on its interior and report per-identity residuals.

    Word degrees: identities containing a+ as the outermost raise (a a+, the
    grading shift, [N, a+]) touch one level above the column index and use
    degree 1; purely diagonal identities and a+a use degree 0.
    """
    lam = rep.params.lam
    dim = rep.dim
    a, ad, nm, pr = rep.a, rep.adag, rep.nmat, rep.proj
    eye = np.eye(dim)
    fn = np.diag(rep.fvals[:dim]).astype(complex)
    fn1 = np.diag(rep.fvals[1 : dim + 1]).astype(complex)
    gain = eye + sum(rep.params.alpha[mu] * pr[mu] for mu in range(lam))

    c0 = interior(rep, 0)
    c1 = interior(rep, 1)
    entries = [
        RelationEntry("comm_N_adag", restricted_norm(nm @ ad - ad @ nm - ad, c1), len(c1)),
        RelationEntry(
            "comm_N_proj",
            max(restricted_norm(nm @ pr[mu] - pr[mu] @ nm, c0) for mu in range(lam)),
            len(c0),
        ),
        RelationEntry("projector_resolution", restricted_norm(sum(pr) - eye, c0), len(c0)),
        RelationEntry("comm_a_adag", restricted_norm(a @ ad - ad @ a - gain, c1), len(c1)),
        RelationEntry(
            "grading_shift",
            max(
                restricted_norm(ad @ pr[mu] - pr[(mu + 1) % lam] @ ad, c1)
                for mu in range(lam)
            ),
            len(c1),
        ),
        RelationEntry(
            "projector_orthogonality",
            max(
                restricted_norm(pr[mu] @ pr[nu] - (pr[mu] if mu == nu else 0.0), c0)
                for mu in range(lam)
                for nu in range(lam)
            ),
            len(c0),
        ),
        RelationEntry("adag_a_structure", restricted_norm(ad @ a - fn, c0), len(c0)),
        RelationEntry("a_adag_structure", restricted_norm(a @ ad - fn1, c1), len(c1)),
    ]
    return RelationReport(tuple(entries))


def h0(rep: FockRep) -> np.ndarray:
    """Oscillator Hamiltonian (a a+ + a+ a)/2 as a matrix product.

    The top diagonal entry is distorted by truncation; compare against
    h0_closed only on levels n <= D - 1 - lam.
    """
    return 0.5 * (rep.a @ rep.adag + rep.adag @ rep.a)


def h0_closed(rep: FockRep) -> np.ndarray:
    """Exact closed-form diagonal N + 1/2 + sum_mu gamma_mu P_mu."""
    return np.diag(level_energies(rep.params, rep.dim))
