"""Pseudosupersymmetric (lambda = 3) models, both charge types."""

import numpy as np
import pytest

from cyclosc import (
    InadmissibleParams,
    PseudoParams,
    build,
    build_pseudo_type1,
    build_pseudo_type2,
    coincidence_with_pssqm,
    equal_spacing_condition,
    find_ground_transition,
    spectrum_gaps,
    verify_pseudo,
)
from conftest import random_points


def test_type1_reference(ref3):
    rep = build(ref3, 5)
    model = build_pseudo_type1(rep, PseudoParams(mu=0, c=1.0, eta=0.5))
    assert model.meta["r"] == -0.4375  # (1 + alpha_2)(eta^2 - 2c^2) / (2c^2)
    report = verify_pseudo(model)
    assert report.max_residual() < 1e-9
    assert report.residual("charge_squared") < 1e-12
    assert report.witnesses_ok()


def test_type1_admissibility(ref3):
    rep = build(ref3, 5)
    for eta in (0.0, 2.0, 2.5, -0.1):
        with pytest.raises(InadmissibleParams):
            build_pseudo_type1(rep, PseudoParams(mu=0, c=1.0, eta=eta))
    with pytest.raises(InadmissibleParams):
        build_pseudo_type1(rep, PseudoParams(mu=0, c=0.0))
    with pytest.raises(ValueError):
        build_pseudo_type1(rep, PseudoParams(mu=0, r=1.0))  # r is derived here


def test_type1_random_admissible_points(ref3):
    rep = build(ref3, 5)
    rng = np.random.default_rng(61)
    for _ in range(5):
        c = rng.uniform(0.4, 1.6)
        eta = rng.uniform(0.05, 0.95) * 2.0 * c
        phi = rng.uniform(0.0, 2.0 * np.pi)
        for mu in range(3):
            pp = PseudoParams(mu=mu, c=c, eta=eta, phi=phi)
            assert verify_pseudo(build_pseudo_type1(rep, pp)).max_residual() < 1e-9


def test_type1_default_eta_matches_order2_model():
    for p in random_points(seed=62, lams=(3,), count=4):
        rep = build(p, 5)
        for mu in range(3):
            assert coincidence_with_pssqm(rep, mu) < 1e-12


def test_type2_residuals_random_r(ref3):
    rep = build(ref3, 5)
    rng = np.random.default_rng(63)
    for r in rng.uniform(-6.0, 6.0, size=5):
        model = build_pseudo_type2(rep, PseudoParams(mu=0, c=1.0, r=float(r)))
        assert verify_pseudo(model).max_residual() < 1e-9
    with pytest.raises(ValueError):
        build_pseudo_type2(rep, PseudoParams(mu=0, eta=0.5))


def test_type2_equal_spacing_branches(ref3):
    rep = build(ref3, 5)
    cond = equal_spacing_condition(ref3, 0)
    assert cond == pytest.approx(3.0)

    gaps = spectrum_gaps(build_pseudo_type2(rep, PseudoParams(mu=0, r=3.0)))
    np.testing.assert_allclose(gaps, [3.0], atol=1e-12)

    # shifting r by half a period halves the spacing
    gaps = spectrum_gaps(build_pseudo_type2(rep, PseudoParams(mu=0, r=6.0)))
    np.testing.assert_allclose(gaps, [1.5], atol=1e-12)

    gaps = spectrum_gaps(build_pseudo_type2(rep, PseudoParams(mu=0, r=3.1)))
    np.testing.assert_allclose(gaps, [0.05, 2.95], atol=1e-9)


def test_type2_default_r_lands_on_equal_spacing(ref3):
    rep = build(ref3, 5)
    model = build_pseudo_type2(rep, PseudoParams(mu=0))
    assert model.meta["r"] == pytest.approx(equal_spacing_condition(ref3, 0))
    assert spectrum_gaps(model).shape == (1,)


def test_equal_spacing_iff_pair():
    for p in random_points(seed=64, lams=(3,), count=3):
        rep = build(p, 5)
        cond = equal_spacing_condition(p, 0)
        on = spectrum_gaps(build_pseudo_type2(rep, PseudoParams(mu=0, r=cond)))
        off = spectrum_gaps(build_pseudo_type2(rep, PseudoParams(mu=0, r=cond + 0.1)))
        assert on.shape == (1,)
        assert off.shape[0] > 1


def test_ground_transition_matches_condition(ref3):
    rep = build(ref3, 6)
    r_star = find_ground_transition(rep, 0)
    cond = equal_spacing_condition(ref3, 0)
    assert (r_star - cond) % 6.0 == pytest.approx(0.0, abs=1e-6) or (
        r_star - cond
    ) % 6.0 == pytest.approx(6.0, abs=1e-6)


def test_verify_reads_scale_from_meta(ref3):
    rep = build(ref3, 5)
    model = build_pseudo_type1(rep, PseudoParams(mu=1, c=1.3, eta=1.0))
    implicit = verify_pseudo(model).residual("pseudo_closure")
    explicit = verify_pseudo(model, c=1.3).residual("pseudo_closure")
    assert implicit == explicit
