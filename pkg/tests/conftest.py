import pytest

from tropibound.rational import RationalMatrix
from tropibound.systems import CRNModel, VerticalSystem


@pytest.fixture(scope="session")
def running_N() -> RationalMatrix:
    return RationalMatrix.from_rows([[-3, 1, -1, -2, 2], [-1, 1, -1, -1, 1]])


@pytest.fixture(scope="session")
def running_A() -> RationalMatrix:
    return RationalMatrix.from_rows([[0, 2, 0, 2, 1], [0, 0, 2, 2, 1]])


@pytest.fixture(scope="session")
def running_h() -> list[int]:
    return [0, 0, 0, 0, -1]


@pytest.fixture(scope="session")
def running_system(running_N, running_A, running_h) -> VerticalSystem:
    return VerticalSystem(running_N, running_A, tuple(running_h))


@pytest.fixture(scope="session")
def hhk_model() -> CRNModel:
    return CRNModel(
        N_stoich=RationalMatrix.from_rows(
            [
                [-1, 0, 0, 1, 0, 0],
                [1, -1, 0, 0, 1, 0],
                [0, 1, -1, -1, 0, 0],
                [0, 0, 1, 0, -1, 0],
                [0, 0, 0, -1, -1, 1],
                [0, 0, 0, 1, 1, -1],
            ]
        ),
        B=RationalMatrix.from_rows(
            [
                [1, 0, 0, 0, 0, 0],
                [0, 1, 0, 0, 0, 0],
                [0, 0, 1, 1, 0, 0],
                [0, 0, 0, 0, 1, 0],
                [0, 0, 0, 1, 1, 0],
                [0, 0, 0, 0, 0, 1],
            ]
        ),
        W=RationalMatrix.from_rows([[1, 1, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1]]),
        T=(10, 20),
        h=(7, -6, -2, -3, -3, 3),
    )
