import numpy as np
import pytest

from cyclosc import (
    DegreeTooLarge,
    build,
    check_defining_relations,
    h0,
    h0_closed,
    interior,
    level_energies,
    restricted_norm,
)
from conftest import random_points


def test_defining_relations_reference(ref3):
    rep = build(ref3, 5)
    report = check_defining_relations(rep)
    assert len(report.entries) == 8
    assert report.max_residual() < 1e-12
    # the purely diagonal identities hold to the last bit
    assert report.residual("projector_resolution") == 0.0
    assert report.residual("projector_orthogonality") == 0.0
    assert report.residual("comm_N_proj") == 0.0


def test_defining_relations_random_points():
    for p in random_points(seed=107, lams=(2, 3, 4), count=12):
        rep = build(p, 4)
        assert check_defining_relations(rep).max_residual() < 1e-10


def test_interior_column_ranges(ref3):
    rep = build(ref3, 4)
    assert interior(rep, 0) == range(12)
    assert interior(rep, 2) == range(10)
    with pytest.raises(DegreeTooLarge):
        interior(rep, 12)
    with pytest.raises(ValueError):
        interior(rep, -1)


def test_truncation_edge_is_outside_interior(ref3):
    """The commutator identity breaks at the top of the box but not inside it."""
    rep = build(ref3, 4)
    alpha_diag = rep.params.alpha[np.arange(rep.dim) % 3]
    resid = rep.a @ rep.adag - rep.adag @ rep.a - np.eye(rep.dim) - np.diag(alpha_diag)
    assert restricted_norm(resid, interior(rep, 1)) < 1e-12
    assert np.linalg.norm(resid) > 1.0  # last column carries the cutoff error


def test_ladder_entries_are_sqrt_structure_function(ref3):
    rep = build(ref3, 4)
    np.testing.assert_allclose(np.diag(rep.a, 1) ** 2, rep.fvals[1:rep.dim], atol=1e-13)


def test_grading_operator_cyclic(ref3):
    rep = build(ref3, 4)
    tpow = np.linalg.matrix_power(rep.tmat, 3)
    np.testing.assert_allclose(tpow, np.eye(rep.dim), atol=1e-13)
    # projectors resolve the grading into residue classes
    for mu, pr in enumerate(rep.proj):
        want = np.diag((np.arange(rep.dim) % 3 == mu).astype(float))
        np.testing.assert_allclose(pr, want, atol=0)


def test_h0_diagonal_matches_closed_form():
    for p in random_points(seed=21, lams=(2, 3, 4), count=9):
        rep = build(p, 4)
        keep = rep.dim - p.lam  # levels below the truncation shadow
        got = np.diag(h0(rep)).real[:keep]
        want = level_energies(p, keep)
        assert np.max(np.abs(got - want)) < 1e-12
        np.testing.assert_allclose(np.diag(h0_closed(rep)).real[:keep], want, atol=1e-13)


def test_build_rejects_thin_truncation(ref3):
    with pytest.raises(ValueError):
        build(ref3, 1)


def test_matrices_read_only(ref3):
    rep = build(ref3, 3)
    for m in (rep.a, rep.adag, rep.nmat, rep.tmat, rep.proj[0]):
        assert not m.flags.writeable
