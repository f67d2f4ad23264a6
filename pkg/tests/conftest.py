import numpy as np
import pytest

from graphsep import DimensionProfile, MultipartiteGraph


@pytest.fixture
def profile222():
    return DimensionProfile((2, 2, 2))


@pytest.fixture
def m222(profile222):
    """Perfect matching between the two top layers of (2, 2, 2)."""
    pairs = [((1, j, k), (2, j, k)) for j in (1, 2) for k in (1, 2)]
    return MultipartiteGraph.from_label_pairs(profile222, pairs)


@pytest.fixture
def rho_q_m222_expected():
    """Hand-expanded signless density matrix of the matching graph."""
    eye4 = np.eye(4)
    return np.block([[eye4, eye4], [eye4, eye4]]) / 8.0
