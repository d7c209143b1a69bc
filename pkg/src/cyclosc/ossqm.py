"""Orthosupersymmetric quantum mechanics of order 2 on the three-cyclic oscillator.

Two charges mix lowering through P_{mu+2} with raising through P_mu and close on

    Q_r Q_s = 0,   [H, Q_r] = 0,   Q_r Q_s^dag + delta_rs sum_t Q_t^dag Q_t = 2 delta_rs H.

The off-diagonal closure produces the obstruction Q_1 Q_2^dag =
-xi z e^{i phi} (1 + alpha_{mu+1}) P_{mu+1}, so the construction exists only on
the constraint surface alpha_{mu+1} = -1.  For mu = 2 that surface collides
with the positivity condition on the structure function, so only mu in {0, 1}
admit a representation: mu = 0 is the broken phase (threefold ground state at
1 + alpha_0 > 0), mu = 1 the unbroken one (single zero mode, threefold excited).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import FockRep, RelationEntry, RelationReport, WitnessEntry, interior, restricted_norm
from .pseudossqm import InadmissibleParams
from .susy import (
    GroundState,
    SusyModel,
    WrongLambda,
    commutator,
    ground_state_analysis,
    hamiltonian_from_coeffs,
    level_classes,
)

OSSQM_DEGREE = 2
CONSTRAINT_TOL = 1e-12


class ConstraintViolated(ValueError):
    """alpha_{mu+1} != -1, the closure cannot hold."""


class Mu2Infeasible(ValueError):
    """mu = 2 forces alpha_0 = -1, which breaks positivity of the structure function."""


class NotSupported(ValueError):
    """Requested orthosupersymmetry order is not implemented."""


@dataclass(frozen=True)
class OssqmParams:
    mu: int
    xi: float
    phi: float = 0.0


def build_ossqm(
    rep: FockRep,
    op: OssqmParams,
    order: int = 2,
    check_constraint: bool = True,
) -> SusyModel:
    if order != 2:
        raise NotSupported(f"only order 2 is implemented, got order {order}")
    params = rep.params
    if params.lam != 3:
        raise WrongLambda(f"order-2 orthosupersymmetry needs lambda=3, got lambda={params.lam}")
    mu = op.mu % 3
    if mu == 2:
        raise Mu2Infeasible(
            "mu=2 needs alpha_0 = -1, incompatible with the strict positivity condition"
        )
    xi = float(op.xi)
    if not 0.0 < xi <= np.sqrt(2.0):
        raise InadmissibleParams(f"need 0 < xi <= sqrt(2), got xi={xi}")
    gap = float(params.alpha[(mu + 1) % 3]) + 1.0
    if check_constraint and abs(gap) > CONSTRAINT_TOL:
        raise ConstraintViolated(
            f"need alpha_{(mu + 1) % 3} = -1, got {params.alpha[(mu + 1) % 3]}"
        )
    # xi = sqrt(2) makes the radicand a tiny negative under roundoff
    z = np.sqrt(max(0.0, 2.0 - xi * xi))
    ph = np.exp(1j * op.phi)
    low = rep.a @ rep.proj[(mu + 2) % 3]
    high = rep.adag @ rep.proj[mu]
    q1 = xi * low + ph * z * high
    q2 = -np.conj(ph) * z * low + xi * high
    coeffs = np.zeros(3)
    coeffs[mu] = 2.0
    coeffs[(mu + 1) % 3] = 1.0
    scalar = float(params.gamma[(mu + 1) % 3]) - 0.5
    h = hamiltonian_from_coeffs(rep, scalar, coeffs)
    return SusyModel(
        variant="ossqm",
        charges=[q1, q2],
        hamiltonian=h,
        rep=rep,
        meta={"mu": mu, "xi": xi, "phi": op.phi, "order": order, "constraint_gap": gap},
    )


def verify_ossqm(m: SusyModel) -> RelationReport:
    """Residuals of the order-2 orthosupersymmetry relations on interior columns."""
    qs = m.charges
    qds = [q.conj().T for q in qs]
    h = m.hamiltonian
    cols = interior(m.rep, OSSQM_DEGREE)
    qdq_sum = sum(qd @ q for qd, q in zip(qds, qs))

    nilpotent = max(
        restricted_norm(qr @ qsx, cols) for qr in qs for qsx in qs
    )
    commutes = max(restricted_norm(commutator(h, q), cols) for q in qs)
    diag = max(
        restricted_norm(q @ qd + qdq_sum - 2.0 * h, cols) for q, qd in zip(qs, qds)
    )
    offdiag = max(
        restricted_norm(qs[r] @ qds[s], cols)
        for r in range(2)
        for s in range(2)
        if r != s
    )
    entries = [
        RelationEntry("charges_nilpotent", nilpotent, len(cols)),
        RelationEntry("h_commutes", commutes, len(cols)),
        RelationEntry("closure_diagonal", diag, len(cols)),
        RelationEntry("closure_offdiagonal", offdiag, len(cols)),
    ]
    witnesses = [
        WitnessEntry("charges_nonzero", min(restricted_norm(q, cols) for q in qs), 0.1),
    ]
    return RelationReport(entries, witnesses)


@dataclass(frozen=True)
class OssqmSpectrum:
    ground: GroundState
    excited_multiplicities: tuple[int, ...]


def ossqm_spectral_check(m: SusyModel, tol: float = 1e-9) -> OssqmSpectrum:
    """Ground state data plus the multiplicities of the retained excited classes."""
    ground = ground_state_analysis(m, tol)
    classes = level_classes(m, tol)
    return OssqmSpectrum(ground, tuple(mult for _, mult in classes[1:]))
