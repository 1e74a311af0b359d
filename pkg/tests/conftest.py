import pytest

from cyclicpg.gf2e import get_context


@pytest.fixture(scope="session")
def ctx8():
    return get_context(3)


@pytest.fixture(scope="session")
def ctx32():
    return get_context(5)


@pytest.fixture(scope="session", params=[1, 2, 3, 4, 5])
def ctx_any(request):
    return get_context(request.param)
