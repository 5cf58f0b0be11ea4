import pytest

from repositories.complex import ComplexRepository
from repositories.table import TableRepository
from services.constructions.circular import CircularSplittingService

from start_utils import PROJECT_ROOT

FIXTURES = PROJECT_ROOT / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def complexes():
    return ComplexRepository(FIXTURES)


@pytest.fixture
def table():
    return TableRepository(FIXTURES / "tables").get("default")


@pytest.fixture
def circular():
    return CircularSplittingService().run


@pytest.fixture
def trefoil(circular):
    return circular(1, 1)
