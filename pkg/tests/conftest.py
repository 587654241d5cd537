import pytest


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # compile the jit kernels once so timed tests measure the algorithms
    from mingreedy._kernels import warmup

    warmup()
