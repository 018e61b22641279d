import numpy as np
import pytest

from trilink.link import Link3, circle, preset


def hopf_pair():
    """Unit circle in the xy-plane and unit circle in the xz-plane through
    its center: a Hopf link."""
    A = circle((0, 0, 0), (1, 0, 0), (0, 1, 0))
    B = circle((1, 0, 0), (1, 0, 0), (0, 0, 1))
    return A, B


def far_circle(center=(30.0, 30.0, 30.0)):
    return circle(center, (1, 0, 0), (0, 1, 0))


def hopf_plus_split(slot="x"):
    """Three-component link whose ``slot`` component is far from a Hopf pair."""
    A, B = hopf_pair()
    far = far_circle()
    return {
        "x": Link3(far, A, B),
        "y": Link3(B, far, A),
        "z": Link3(A, B, far),
    }[slot]


@pytest.fixture(scope="session")
def borromean():
    return preset("borromean")


@pytest.fixture(scope="session")
def split_unlink():
    return preset("split-unlink")


@pytest.fixture(scope="session")
def borromean_reversed():
    return preset("borromean-reversed")


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)
