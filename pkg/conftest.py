import pytest
from vertexwork.global_vars import env
from vertexwork.utils import set_seed

SEED = 1024


@pytest.fixture(autouse=True)
def reset_numerics():
    set_seed(SEED)
    env.load()
    yield
    env.load()
