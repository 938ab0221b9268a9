import pytest

from ducci import backend


@pytest.fixture(params=backend.available())
def kernel_backend(request):
    previous = backend.name()
    backend.set_active(request.param)
    yield request.param
    backend.set_active(previous)
