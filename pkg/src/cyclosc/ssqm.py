"""Standard supersymmetric quantum mechanics from the two-cyclic oscillator.

The order-2 algebra carries a single real deformation parameter kappa = alpha_0.
Dressing the charge with either residue projector gives the unbroken phase
(nondegenerate zero ground state) or the broken phase (paired strictly positive
spectrum); both close on {Q, Qdag} = H with Q^2 = 0.  The order-1
parasupersymmetric model is the same physics with charges scaled by sqrt(2),
closing on 2H instead.
"""

from __future__ import annotations

from .fock import FockRep, RelationEntry, RelationReport, interior, restricted_norm
from .susy import SusyModel, WrongLambda, commutator, hamiltonian_from_coeffs

SQM_DEGREE = 2


def build_ssqm(rep: FockRep, broken: bool = False) -> SusyModel:
    p = rep.params
    if p.lam != 2:
        raise WrongLambda(f"ssqm needs a lambda=2 representation, got lambda={p.lam}")
    kappa = float(p.alpha[0])
    if broken:
        q = rep.adag @ rep.proj[0]
        # N + kappa + P_0, ground level 1 + kappa doubly degenerate
        h = hamiltonian_from_coeffs(rep, kappa, [1.0, 0.0])
    else:
        q = rep.adag @ rep.proj[1]
        # N + P_1, zero ground state plus doubled excited levels
        h = hamiltonian_from_coeffs(rep, 0.0, [0.0, 1.0])
    return SusyModel(
        variant="ssqm",
        charges=[q],
        hamiltonian=h,
        rep=rep,
        meta={"broken": broken, "kappa": kappa},
    )


def verify_sqm2(m: SusyModel) -> RelationReport:
    """Residuals of Q^2 = 0, [H, Q] = 0 and QQdag + QdagQ = H on interior columns."""
    q = m.charges[0]
    qd = q.conj().T
    h = m.hamiltonian
    cols = interior(m.rep, SQM_DEGREE)
    entries = [
        RelationEntry("charge_squared", restricted_norm(q @ q, cols), len(cols)),
        RelationEntry("h_commutes", restricted_norm(commutator(h, q), cols), len(cols)),
        RelationEntry("closure", restricted_norm(q @ qd + qd @ q - h, cols), len(cols)),
    ]
    return RelationReport(entries)
