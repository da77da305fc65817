import pytest

from cellpack import Instance, Layout


@pytest.fixture
def ex1() -> Instance:
    """The worked 8-square instance used throughout the docs."""
    return Instance.from_lengths((20, 15, 13, 13, 11, 8, 5, 3), 60)


@pytest.fixture
def layout_a() -> Layout:
    """A feasible but unsorted 3x3 placement of ex1 (label 9 is a filler)."""
    return Layout.from_rows([[3, 7, 2], [5, 6, 9], [4, 1, 8]])


@pytest.fixture
def layout_b() -> Layout:
    """The sorted form of layout_a."""
    return Layout.from_rows([[1, 2, 3], [4, 6, 8], [5, 7, 9]])


@pytest.fixture(scope="session")
def api():
    from fastapi.testclient import TestClient

    from cellpack.service.app import create_app

    with TestClient(create_app()) as client:
        yield client


@pytest.fixture
def ex1_payload() -> dict:
    return {"lengths": [20, 15, 13, 13, 11, 8, 5, 3], "strip_width": 60}
