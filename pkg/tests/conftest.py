"""Shared helpers: seeded samplers over the valid parameter box.

Every component of an alpha head drawn from VALID_BOX = (-0.9, 2.0) keeps all
partial sums beta_mu above -mu automatically (beta_mu >= -0.9 * mu > -mu), so
sampling needs no rejection step and point counts stay deterministic.
"""

import numpy as np
import pytest

from cyclosc import AlgebraParams, new_params

VALID_BOX = (-0.9, 2.0)


def sample_params(rng: np.random.Generator, lam: int) -> AlgebraParams:
    head = rng.uniform(VALID_BOX[0], VALID_BOX[1], size=lam - 1)
    return new_params(lam, head)


def random_points(seed: int, lams, count: int) -> list[AlgebraParams]:
    """Deterministic list of valid parameter points cycling through lams."""
    rng = np.random.default_rng(seed)
    return [sample_params(rng, lams[i % len(lams)]) for i in range(count)]


@pytest.fixture
def ref3() -> AlgebraParams:
    # workhorse point: distinct gamma residues, one negative component
    return new_params(3, [1.0, -0.5])


@pytest.fixture
def ref2() -> AlgebraParams:
    return new_params(2, [0.5])


@pytest.fixture
def ref4() -> AlgebraParams:
    return new_params(4, [0.3, 0.5, -0.2])
