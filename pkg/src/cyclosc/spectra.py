"""Oscillator spectra, degeneracy classes, and parameter-grid scans.

Levels come from the closed form E_{k,mu} = k lam + mu + gamma_mu + 1/2.
Degenerate classes are detected empirically by clustering energies at a
tolerance; the qualitative pattern of a spectrum is then one of

    Nondegenerate        every class has multiplicity 1
    FoldAbove(m, t)      every class above threshold t has multiplicity m >= 2
    Mixed(description)   anything else (e.g. alternating multiplicities)

The topmost retained class is exempt from pattern conformance when its
multiplicity falls short, because the retention cutoff can clip it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .algebra import AlgebraParams, FockConditionViolated, energy, new_params


@dataclass(frozen=True)
class Level:
    energy: float
    k: int
    mu: int


@dataclass(frozen=True)
class DegeneracyClass:
    energy: float
    multiplicity: int


@dataclass(frozen=True)
class Nondegenerate:
    kind: str = "nondegenerate"


@dataclass(frozen=True)
class FoldAbove:
    multiplicity: int
    threshold: float
    kind: str = "fold-above"


@dataclass(frozen=True)
class Mixed:
    description: str
    kind: str = "mixed"


Pattern = Union[Nondegenerate, FoldAbove, Mixed]


@dataclass(frozen=True)
class SpectrumReport:
    levels: tuple[Level, ...]
    classes: tuple[DegeneracyClass, ...]
    pattern: Pattern


def group_classes(energies: np.ndarray, tol: float) -> list[tuple[float, int]]:
    """Cluster an ascending energy array into (class energy, multiplicity) pairs.

    A level joins the current class while it sits within ``tol`` of the class
    anchor (its lowest member), which avoids chaining drift across classes.
    """
    out: list[tuple[float, int]] = []
    anchor = None
    count = 0
    for e in energies:
        if anchor is None or e - anchor > tol:
            if anchor is not None:
                out.append((anchor, count))
            anchor, count = float(e), 1
        else:
            count += 1
    if anchor is not None:
        out.append((anchor, count))
    return out


def detect_pattern(classes: list[tuple[float, int]]) -> Pattern:
    """Classify the qualitative degeneracy structure of clustered classes.

    The decision uses multiplicity differences only, so it is invariant under
    a global energy shift.  The last class is dropped first since the
    retention cutoff may have clipped it; a FoldAbove verdict then requires a
    constant multiplicity >= 2 over at least the upper half of the remaining
    classes, with the threshold reported as the energy of the highest class
    that breaks the pattern.
    """
    trimmed = classes[:-1]
    if len(trimmed) < 2:
        return Mixed("too few classes retained to classify")
    mults = [m for _, m in trimmed]
    if all(m == 1 for m in mults):
        return Nondegenerate()
    m_tail = mults[-1]
    i = len(mults)
    while i > 0 and mults[i - 1] == m_tail:
        i -= 1
    half = math.ceil(len(mults) / 2)
    if m_tail >= 2 and len(mults) - i >= half:
        threshold = trimmed[i - 1][0] if i > 0 else trimmed[0][0] - 1.0
        return FoldAbove(m_tail, float(threshold))
    upper = sorted(set(mults[-half:]))
    return Mixed(f"multiplicities {upper} recur above E={trimmed[-half][0]:.6g}")


def spectrum(p: AlgebraParams, n_levels: int, tol: float = 1e-9) -> SpectrumReport:
    """The ``n_levels`` lowest oscillator levels with their degeneracy classes.

    Ties in energy are ordered by (mu, k) so the report is deterministic.
    """
    if int(n_levels) != n_levels or n_levels < p.lam:
        raise ValueError(f"need at least lam={p.lam} levels, got {n_levels}")
    n_levels = int(n_levels)
    candidates = [
        (energy(p, k, mu), mu, k)
        for k in range(n_levels + 1)
        for mu in range(p.lam)
    ]
    candidates.sort()
    levels = tuple(Level(e, k, mu) for e, mu, k in candidates[:n_levels])
    energies = np.array([lv.energy for lv in levels])
    classes = tuple(DegeneracyClass(e, m) for e, m in group_classes(energies, tol))
    return SpectrumReport(levels, classes, detect_pattern([(c.energy, c.multiplicity) for c in classes]))


def level_class_multiplicities(report: SpectrumReport) -> list[int]:
    """Per-level class multiplicity, aligned with ``report.levels`` (tabular output)."""
    out: list[int] = []
    ci = 0
    consumed = 0
    for _ in report.levels:
        if consumed >= report.classes[ci].multiplicity:
            ci += 1
            consumed = 0
        out.append(report.classes[ci].multiplicity)
        consumed += 1
    return out


def classify_degeneracy(p: AlgebraParams, n_levels: int, tol: float = 1e-9) -> Pattern:
    """Empirical degeneracy pattern from the lowest ``n_levels`` levels (>= 3 lam)."""
    if n_levels < 3 * p.lam:
        raise ValueError(f"classification needs at least {3 * p.lam} levels, got {n_levels}")
    return spectrum(p, n_levels, tol).pattern


@dataclass(frozen=True)
class ScanPoint:
    alpha_head: tuple[float, ...]
    status: str                      # "ok" | "fock-violated"
    pattern: Pattern | None
    detail: str = ""


def _scan_one(lam: int, head: tuple[float, ...], n_levels: int, tol: float) -> ScanPoint:
    try:
        p = new_params(lam, head)
    except FockConditionViolated as exc:
        return ScanPoint(head, "fock-violated", None, f"mu={exc.mu}")
    return ScanPoint(head, "ok", classify_degeneracy(p, n_levels, tol))


def scan_grid(
    lam: int,
    axes,
    n_levels: int = 12,
    tol: float = 1e-9,
    workers: int = 1,
) -> list[ScanPoint]:
    """Classify every point of a cartesian alpha-head grid in lexicographic order.

    ``axes`` holds one value sequence per free alpha component (lam - 1 of
    them).  Infeasible points are recorded as "fock-violated", not raised.
    An empty axis yields an empty scan.  With ``workers`` > 1 the points are
    evaluated in a process pool; assembly order stays lexicographic either way.
    """
    if len(axes) != lam - 1:
        raise ValueError(f"expected {lam - 1} grid axes, got {len(axes)}")
    axes = [[float(v) for v in ax] for ax in axes]
    heads = list(itertools.product(*axes))
    jobs = [(lam, head, n_levels, tol) for head in heads]
    if workers > 1 and len(heads) > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            return pool.starmap(_scan_one, jobs)
    return [_scan_one(*job) for job in jobs]
