import pytest

from redeimaps.ffield import enumerate_alphas, make_extension, make_field


def ext_for(p, k, alpha):
    return make_extension(make_field(p, k), alpha)


def all_extensions(p, k=1):
    F = make_field(p, k)
    return [make_extension(F, a) for a in enumerate_alphas(F)]


@pytest.fixture
def e5():
    """F_5 with alpha = 2."""
    return ext_for(5, 1, 2)


@pytest.fixture
def e2():
    """F_2 with alpha = 1."""
    return ext_for(2, 1, 1)


@pytest.fixture
def e7():
    """F_7 with alpha = 3."""
    return ext_for(7, 1, 3)


SMALL_FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (2, 1), (2, 2), (2, 3)]
