import pytest

from deltamat import AdmissibleSet, DeltaMatroid


@pytest.fixture(scope="session")
def tripod() -> DeltaMatroid:
    """Three feasible sets on ground 3, each with one unbarred index."""
    return DeltaMatroid.from_signed_lists(3, [[1, -2, -3], [-1, 2, -3], [-1, -2, 3]])


@pytest.fixture(scope="session")
def coloop1() -> DeltaMatroid:
    return DeltaMatroid.from_signed_lists(1, [[1]])


@pytest.fixture(scope="session")
def loop1() -> DeltaMatroid:
    return DeltaMatroid.from_signed_lists(1, [[-1]])


@pytest.fixture(scope="session")
def free1() -> DeltaMatroid:
    return DeltaMatroid.from_signed_lists(1, [[1], [-1]])


def sset(n: int, *elements: int) -> AdmissibleSet:
    return AdmissibleSet.from_elements(n, elements)
