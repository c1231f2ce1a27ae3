import math

import pytest

from xpzeros.params import ModelParams


@pytest.fixture
def riemann_params():
    return ModelParams()


@pytest.fixture
def zero_mode_params():
    return ModelParams(theta=math.pi)
