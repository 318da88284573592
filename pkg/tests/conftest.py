import math

import pytest

QUARTER_PI = math.pi / 4


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20260101)
