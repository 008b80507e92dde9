import numpy as np
import pytest

from planarcontact import Polygon, random_convex_polygon, random_ellipse


@pytest.fixture(scope="session")
def square():
    return Polygon([[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]])


@pytest.fixture(scope="session")
def lshape():
    # notch at (1, 1): hull contains points the region does not
    return Polygon([[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]])


@pytest.fixture(scope="session")
def patch_population():
    """Shared random patch set: 20 convex polygons and 5 ellipses."""
    rng = np.random.default_rng(20260814)
    patches = [random_convex_polygon(rng) for _ in range(20)]
    patches += [random_ellipse(rng) for _ in range(5)]
    return patches
