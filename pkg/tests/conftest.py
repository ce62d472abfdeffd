import pytest

from edwards_law.curve import CurveParams


@pytest.fixture(scope="session")
def e13():
    return CurveParams.rescaled(13, 2)


@pytest.fixture(scope="session")
def c13():
    return CurveParams.general(13, 1, 2)
