"""Pseudosupersymmetric quantum mechanics on the three-cyclic oscillator.

Two inequivalent charge families close on Q^2 = 0, [H, Q] = 0 and
Q Qdag Q = 4 c^2 Q H.  Type 1 mixes raising and lowering through one residue
projector and fixes the Hamiltonian shift r from (eta, c); at eta = sqrt(2)|c|
its Hamiltonian coincides entrywise with the order-2 parasupersymmetric one.
Type 2 is a pure lowering charge and leaves r free, which tunes the bottom of
the spectrum through equally spaced and doubly spaced regimes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraParams
from .fock import FockRep, RelationEntry, RelationReport, WitnessEntry, interior, restricted_norm
from .susy import SusyModel, WrongLambda, commutator, hamiltonian_from_coeffs

PSEUDO_DEGREE = 3


class InadmissibleParams(ValueError):
    """Charge parameters outside the admissible region."""


@dataclass(frozen=True)
class PseudoParams:
    mu: int
    c: float = 1.0
    eta: float | None = None      # type 1 only; default sqrt(2)|c|
    phi: float = 0.0
    r: float | None = None        # type 2 only; default picks equal spacing


def _require_lam3(rep: FockRep) -> AlgebraParams:
    if rep.params.lam != 3:
        raise WrongLambda(f"pseudosupersymmetry needs lambda=3, got lambda={rep.params.lam}")
    return rep.params


def build_pseudo_type1(rep: FockRep, pp: PseudoParams) -> SusyModel:
    params = _require_lam3(rep)
    mu = pp.mu % 3
    c = float(pp.c)
    if c == 0.0:
        raise InadmissibleParams("c must be nonzero")
    if pp.r is not None:
        raise ValueError("type 1 derives r from eta and c; leave r unset")
    eta = np.sqrt(2.0) * abs(c) if pp.eta is None else float(pp.eta)
    if not 0.0 < eta < 2.0 * abs(c):
        raise InadmissibleParams(f"need 0 < eta < 2|c|, got eta={eta}, c={c}")
    # clamp guards the eta -> 2|c| limit against roundoff under the sqrt
    zeta = np.sqrt(max(0.0, 4.0 * c * c - eta * eta))
    q = (eta * rep.adag + np.exp(1j * pp.phi) * zeta * rep.a) @ rep.proj[(mu + 2) % 3]
    r = float((1.0 + params.alpha[(mu + 2) % 3]) * (eta * eta - 2.0 * c * c) / (2.0 * c * c))
    coeffs = np.zeros(3)
    coeffs[(mu + 1) % 3] = 2.0
    coeffs[(mu + 2) % 3] = 1.0
    scalar = float(params.gamma[(mu + 2) % 3]) + 0.5 * (r - 1.0)
    h = hamiltonian_from_coeffs(rep, scalar, coeffs)
    return SusyModel(
        variant="pseudo1",
        charges=[q],
        hamiltonian=h,
        rep=rep,
        meta={"mu": mu, "c": c, "eta": eta, "phi": pp.phi, "r": r},
    )


def build_pseudo_type2(rep: FockRep, pp: PseudoParams) -> SusyModel:
    params = _require_lam3(rep)
    mu = pp.mu % 3
    c = float(pp.c)
    if c == 0.0:
        raise InadmissibleParams("c must be nonzero")
    if pp.eta is not None:
        raise ValueError("type 2 has no eta parameter")
    r = equal_spacing_condition(params, mu) if pp.r is None else float(pp.r)
    q = 2.0 * abs(c) * rep.a @ rep.proj[(mu + 2) % 3]
    coeffs = np.zeros(3)
    coeffs[mu] = 0.5 * (1.0 - params.alpha[(mu + 1) % 3] + params.alpha[(mu + 2) % 3] + r)
    coeffs[(mu + 1) % 3] = 1.0
    scalar = float(params.gamma[(mu + 2) % 3]) - 0.5 * float(params.alpha[(mu + 2) % 3])
    h = hamiltonian_from_coeffs(rep, scalar, coeffs)
    return SusyModel(
        variant="pseudo2",
        charges=[q],
        hamiltonian=h,
        rep=rep,
        meta={"mu": mu, "c": c, "r": r},
    )


def verify_pseudo(m: SusyModel, c: float | None = None) -> RelationReport:
    """Residuals of Q^2 = 0, [H, Q] = 0 and Q Qdag Q = 4 c^2 Q H on interior columns."""
    if c is None:
        c = m.meta["c"]
    q = m.charges[0]
    qd = q.conj().T
    h = m.hamiltonian
    cols = interior(m.rep, PSEUDO_DEGREE)
    entries = [
        RelationEntry("charge_squared", restricted_norm(q @ q, cols), len(cols)),
        RelationEntry("h_commutes", restricted_norm(commutator(h, q), cols), len(cols)),
        RelationEntry(
            "pseudo_closure",
            restricted_norm(q @ qd @ q - 4.0 * c * c * q @ h, cols),
            len(cols),
        ),
    ]
    witnesses = [WitnessEntry("charge_nonzero", restricted_norm(q, cols), 0.1)]
    return RelationReport(entries, witnesses)


def equal_spacing_condition(params: AlgebraParams, mu: int) -> float:
    """Canonical r in [0, 6) making the type 2 spectrum equally spaced with gap 3.

    Adding 3 to the result (mod 6) instead interleaves the floating level
    midway and halves the gap to 3/2.
    """
    mu = mu % 3
    return float((params.alpha[(mu + 1) % 3] - params.alpha[(mu + 2) % 3] + 3.0) % 6.0)


def spectrum_gaps(m: SusyModel, tol: float = 1e-9) -> np.ndarray:
    """Sorted unique gaps between distinct interior energy levels."""
    from .susy import distinct_interior_energies

    energies = distinct_interior_energies(m, tol)
    gaps = np.diff(energies)
    out: list[float] = []
    for g in gaps:
        if not any(abs(g - o) <= tol for o in out):
            out.append(float(g))
    return np.array(sorted(out))


def coincidence_with_pssqm(rep: FockRep, mu: int, c: float = 1.0) -> float:
    """Entrywise gap between the type 1 Hamiltonian at eta = sqrt(2)|c| and the
    order-2 parasupersymmetric Hamiltonian of the same family."""
    from .pssqm import build_pssqm

    pseudo = build_pseudo_type1(rep, PseudoParams(mu=mu, c=c, eta=np.sqrt(2.0) * abs(c)))
    para = build_pssqm(rep, mu)
    return float(np.abs(pseudo.hamiltonian - para.hamiltonian).max())


def find_ground_transition(
    rep: FockRep,
    mu: int,
    c: float = 1.0,
    r_lo: float = -10.0,
    r_hi: float = 10.0,
    tol: float = 1e-10,
) -> float:
    """Bisect the r value where the type 2 ground state changes residue character.

    The floating level (residue mu) rises monotonically with r; the crossing
    against the lowest fixed level lands exactly on an equal spacing point.
    """
    mu = mu % 3
    lam = 3

    def gap(r: float) -> float:
        m = build_pseudo_type2(rep, PseudoParams(mu=mu, c=c, r=r))
        diag = np.diag(m.hamiltonian).real
        cut = rep.dim - lam
        idx = np.arange(cut)
        on_mu = idx % lam == mu
        return float(diag[:cut][on_mu].min() - diag[:cut][~on_mu].min())

    lo, hi = float(r_lo), float(r_hi)
    glo, ghi = gap(lo), gap(hi)
    if not (glo < 0.0 < ghi):
        raise ValueError(
            f"bracket does not straddle the transition: gap({lo})={glo}, gap({hi})={ghi}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
