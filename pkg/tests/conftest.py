import pytest

from stablepairs.documents import builtin_surface


@pytest.fixture(scope="session")
def ex33():
    return builtin_surface("example33")


@pytest.fixture(scope="session")
def dolgachev():
    return builtin_surface("dolgachev")


@pytest.fixture(scope="session")
def rational():
    return builtin_surface("rational_elliptic")


@pytest.fixture(scope="session")
def hyperelliptic():
    return builtin_surface("hyperelliptic")


@pytest.fixture(scope="session")
def negative():
    return builtin_surface("negative_case")
