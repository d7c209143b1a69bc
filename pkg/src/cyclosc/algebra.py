"""Parameter records and closed forms for cyclic-group-extended oscillator algebras.

An algebra of order ``lam`` is generated by the identity, ladder operators a
and a+, the number operator N, and a cyclic generator T with T^lam = 1.  The
deformation enters through the commutator

    [a, a+] = 1 + sum_mu alpha_mu P_mu,

where P_mu projects onto Fock states with n = mu (mod lam) and the real
deformation vector alpha sums to zero.  Everything downstream (matrix
representations, spectra, supersymmetry-variant models) consumes the
AlgebraParams record built here.

Derived quantities:
    beta_0 = 0,  beta_mu = alpha_0 + ... + alpha_{mu-1}
    gamma_mu = beta_mu + alpha_mu / 2
    F(n) = n + beta_{n mod lam}        (structure function)
    E_{k,mu} = k*lam + mu + gamma_mu + 1/2   (oscillator levels)

A bosonic Fock representation with positive norms exists iff beta_mu > -mu
for mu = 1..lam-1 (strict).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

LINEAR_TOL = 1e-12   # tolerance for linear parameter identities
IMAG_TOL = 1e-10     # max imaginary leakage tolerated in the kappa -> alpha transform


class FockConditionViolated(ValueError):
    """No bosonic Fock representation: beta_mu <= -mu for some mu >= 1."""

    def __init__(self, mu: int, beta_mu: float):
        self.mu = mu
        self.beta_mu = beta_mu
        super().__init__(
            f"beta_{mu} = {beta_mu:g} violates beta_{mu} > -{mu}; "
            "state norms would vanish or turn negative"
        )


class NotRealResult(ValueError):
    """kappa -> alpha produced a non-real vector (broken conjugation symmetry)."""


@dataclass(frozen=True)
class AlgebraParams:
    """Immutable parameter record for one algebra of order ``lam``.

    ``alpha``, ``beta`` and ``gamma`` are read-only arrays of length ``lam``.
    Instances are only created through :func:`new_params` or
    :func:`kappa_to_alpha`, which enforce the zero-sum and Fock conditions.
    """

    lam: int
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray

    def fock_margins(self) -> np.ndarray:
        """Distances beta_mu + mu to the representation-existence boundary."""
        return self.beta + np.arange(self.lam)


@dataclass(frozen=True)
class KappaParams:
    """Alternative parameterization: lam-1 complex kappa_mu with kappa_mu* = kappa_{lam-mu}."""

    lam: int
    kappa: np.ndarray


def _finalize(lam: int, alpha: np.ndarray) -> AlgebraParams:
    if abs(alpha.sum()) > LINEAR_TOL * max(1.0, np.abs(alpha).max()):
        raise ValueError(f"alpha must sum to zero, got {alpha.sum():g}")
    beta = np.concatenate(([0.0], np.cumsum(alpha[:-1])))
    gamma = beta + 0.5 * alpha
    for mu in range(1, lam):
        # strict inequality: the boundary already kills state norms
        if not beta[mu] > -mu:
            raise FockConditionViolated(mu, beta[mu])
    for arr in (alpha, beta, gamma):
        arr.setflags(write=False)
    return AlgebraParams(lam, alpha, beta, gamma)


def new_params(lam: int, alpha_head) -> AlgebraParams:
    """Build AlgebraParams from the lam-1 free components of alpha.

    The last component is fixed by the zero-sum constraint.  Raises
    FockConditionViolated if the resulting parameters admit no Fock
    representation.
    """
    if int(lam) != lam or lam < 2:
        raise ValueError(f"order must be an integer >= 2, got {lam}")
    lam = int(lam)
    head = np.asarray(alpha_head, dtype=float)
    if head.shape != (lam - 1,):
        raise ValueError(f"expected {lam - 1} free alpha components, got shape {head.shape}")
    alpha = np.append(head, -head.sum())
    return _finalize(lam, alpha)


def kappa_params(lam: int, kappa) -> KappaParams:
    """Validate and wrap a kappa vector (kappa_mu* = kappa_{lam-mu} within 1e-12)."""
    if int(lam) != lam or lam < 2:
        raise ValueError(f"order must be an integer >= 2, got {lam}")
    lam = int(lam)
    kap = np.asarray(kappa, dtype=complex)
    if kap.shape != (lam - 1,):
        raise ValueError(f"expected {lam - 1} kappa components, got shape {kap.shape}")
    scale = max(1.0, np.abs(kap).max())
    for mu in range(1, lam):
        if abs(np.conj(kap[mu - 1]) - kap[lam - mu - 1]) > LINEAR_TOL * scale:
            raise ValueError(f"kappa_{mu}* != kappa_{lam - mu}: conjugation symmetry broken")
    kap.setflags(write=False)
    return KappaParams(lam, kap)


def kappa_to_alpha(kp: KappaParams) -> AlgebraParams:
    """alpha_mu = sum_nu exp(i 2 pi mu nu / lam) kappa_nu, realized as an inverse DFT.

    Raises NotRealResult if the imaginary part exceeds 1e-10, which signals
    broken conjugation symmetry in the input.
    """
    padded = np.concatenate(([0.0 + 0.0j], kp.kappa))
    alpha_c = kp.lam * np.fft.ifft(padded)
    if np.abs(alpha_c.imag).max() > IMAG_TOL:
        raise NotRealResult(
            f"alpha has imaginary leakage {np.abs(alpha_c.imag).max():g}; "
            "kappa lacks the required conjugation symmetry"
        )
    return _finalize(kp.lam, np.ascontiguousarray(alpha_c.real))


def alpha_to_kappa(p: AlgebraParams) -> KappaParams:
    """Inverse transform; the nu = 0 DFT bin vanishes because alpha sums to zero."""
    kap = np.fft.fft(p.alpha) / p.lam
    return KappaParams(p.lam, np.ascontiguousarray(kap[1:]))


def structure_function(p: AlgebraParams, n: int) -> float:
    """F(n) = n + beta_{n mod lam}; a+a acts as F(N) on Fock states."""
    if int(n) != n or n < 0:
        raise ValueError(f"level must be a nonnegative integer, got {n}")
    n = int(n)
    return float(n + p.beta[n % p.lam])


def solve_structure_function(q: float, g) -> np.ndarray:
    """Iterate the generalized difference equation F(n+1) = q F(n) + g(n), F(0) = 0.

    ``g`` is the sequence g(0), ..., g(D-1); the returned array has the same
    length, holding F(0), ..., F(D-1).
    """
    g = np.asarray(g, dtype=float)
    f = np.zeros(g.shape[0])
    for n in range(g.shape[0] - 1):
        f[n + 1] = q * f[n] + g[n]
    return f


def energy(p: AlgebraParams, k: int, mu: int) -> float:
    """Oscillator level E_{k,mu} = k lam + mu + gamma_mu + 1/2 (mu reduced mod lam)."""
    if int(k) != k or k < 0:
        raise ValueError(f"radial quantum number must be a nonnegative integer, got {k}")
    mu = int(mu) % p.lam
    return float(int(k) * p.lam + mu + p.gamma[mu] + 0.5)


def level_energies(p: AlgebraParams, count: int) -> np.ndarray:
    """Energies of the first ``count`` Fock levels, indexed by n = k lam + mu."""
    n = np.arange(count)
    return n + 0.5 + p.gamma[n % p.lam]
